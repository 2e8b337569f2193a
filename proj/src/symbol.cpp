#include "g2calib/symbol.hpp"

#include "g2calib/errors.hpp"

#include <cmath>

namespace g2calib {

namespace {

using Cx = std::complex<double>;

using CVec7 = std::array<Cx, 7>;

CVec7 complexify(const Vec7& re, const Vec7& im, double im_sign) {
    CVec7 v;
    for (int i = 0; i < 7; ++i) v[static_cast<std::size_t>(i)] = Cx(re[i], im_sign * im[i]);
    return v;
}

Cx herm(const CVec7& x, const CVec7& y) {
    Cx s = 0;
    for (int i = 0; i < 7; ++i)
        s += x[static_cast<std::size_t>(i)] * std::conj(y[static_cast<std::size_t>(i)]);
    return s;
}

CVec7 cross_c(const Vec7& x, const CVec7& y) {
    const auto& t = cross_table();
    CVec7 r{};
    for (int i = 0; i < 7; ++i) {
        if (x[i] == 0.0) continue;
        for (int j = 0; j < 7; ++j) {
            const CrossEntry& e = t[i][j];
            if (e.index < 0) continue;
            r[static_cast<std::size_t>(e.index)] +=
                static_cast<double>(e.sign) * x[i] * y[static_cast<std::size_t>(j)];
        }
    }
    return r;
}

void require_unit(std::complex<double> eta) {
    if (std::abs(std::abs(eta) - 1.0) > 1e-9)
        throw PreconditionError("covector must be unit (symbols live off the zero section)");
}

Eigen::Matrix4cd sigma_R_matrix(Cx eta) {
    Eigen::Matrix4cd s = Eigen::Matrix4cd::Zero();
    s(0, 3) = std::conj(eta);
    s(1, 2) = -std::conj(eta);
    s(2, 1) = -eta;
    s(3, 0) = eta;
    return s;
}

Eigen::MatrixXcd sigma_B_matrix() {
    Eigen::MatrixXcd b = Eigen::MatrixXcd::Zero(2, 4);
    b(0, 1) = 1;
    b(1, 3) = 1;
    return b;
}

Eigen::MatrixXcd p_plus_matrix() {
    Eigen::MatrixXcd p = Eigen::MatrixXcd::Zero(4, 2);
    p(0, 0) = 1;
    p(1, 1) = 1;
    return p;
}

} // namespace

SymbolMatrix cross_matrix(const Vec7& x, const NormalSplit& split) {
    if (norm(x - split.cfg.v) > 1e-9 && norm(x - split.cfg.w) > 1e-9)
        throw PreconditionError("cross_matrix expects the split's v or w");
    const Vec7& a = split.section_a;
    Vec7 Ja = split.J(a);
    CVec7 alpha = complexify(a, Ja, -1.0);
    CVec7 alphabar = complexify(a, Ja, +1.0);
    CVec7 beta = cross_c(-1.0 * split.cfg.v, alphabar);
    CVec7 betabar = cross_c(-1.0 * split.cfg.v, alpha);
    const CVec7 basis[4] = {alpha, beta, alphabar, betabar};

    SymbolMatrix out;
    out.m = Eigen::Matrix4cd::Zero();
    out.domain = nu_basis_labels();
    out.codomain = nu_basis_labels();
    for (int col = 0; col < 4; ++col) {
        CVec7 img = cross_c(x, basis[col]);
        for (int row = 0; row < 4; ++row) {
            Cx num = herm(img, basis[row]);
            Cx den = herm(basis[row], basis[row]);
            out.m(row, col) = num / den;
        }
        // the expansion must be exact: residual means the basis failed
        CVec7 recon{};
        for (int row = 0; row < 4; ++row)
            for (int i = 0; i < 7; ++i)
                recon[static_cast<std::size_t>(i)] += out.m(row, col) * basis[row][static_cast<std::size_t>(i)];
        double res = 0;
        for (int i = 0; i < 7; ++i)
            res += std::norm(recon[static_cast<std::size_t>(i)] - img[static_cast<std::size_t>(i)]);
        if (std::sqrt(res) > 1e-8)
            throw InvariantViolation("cross action does not preserve the complexified normal plane");
    }
    return out;
}

SymbolMatrix symbol_R(std::complex<double> eta) {
    require_unit(eta);
    SymbolMatrix out;
    out.m = sigma_R_matrix(eta);
    out.domain = nu_basis_labels();
    out.codomain = nu_basis_labels();
    return out;
}

SymbolMatrix calderon_symbol(std::complex<double> eta) {
    require_unit(eta);
    SymbolMatrix out;
    out.m = 0.5 * (Eigen::Matrix4cd::Identity() + sigma_R_matrix(eta));
    out.domain = nu_basis_labels();
    out.codomain = nu_basis_labels();
    return out;
}

SymbolMatrix boundary_projector_symbol() {
    SymbolMatrix out;
    out.m = sigma_B_matrix();
    out.domain = nu_basis_labels();
    out.codomain = mu_basis_labels();
    return out;
}

SymbolMatrix positive_spinor_inclusion() {
    SymbolMatrix out;
    out.m = p_plus_matrix();
    out.domain = nu_plus_basis_labels();
    out.codomain = nu_basis_labels();
    return out;
}

SymbolMatrix bqp_symbol(std::complex<double> eta) {
    require_unit(eta);
    SymbolMatrix out;
    out.m = sigma_B_matrix() * calderon_symbol(eta).m * p_plus_matrix();
    out.domain = nu_plus_basis_labels();
    out.codomain = mu_basis_labels();
    return out;
}

EbcReport ebc_check(const Eigen::MatrixXcd& boundary_symbol, int grid_resolution) {
    if (grid_resolution < 90) throw PreconditionError("covector grid must have at least 90 angles");
    if (boundary_symbol.rows() != 2 || boundary_symbol.cols() != 4)
        throw PreconditionError("boundary symbol must be 2x4");
    EbcReport rep;
    rep.grid = grid_resolution;
    rep.min_singular_value = std::numeric_limits<double>::infinity();
    for (int k = 0; k < grid_resolution; ++k) {
        double t = 2.0 * M_PI * k / grid_resolution;
        Cx eta(std::cos(t), std::sin(t));
        Eigen::MatrixXcd composite = boundary_symbol * calderon_symbol(eta).m;
        Eigen::JacobiSVD<Eigen::MatrixXcd> svd(composite);
        rep.min_singular_value = std::min(rep.min_singular_value, svd.singularValues().minCoeff());
    }
    // full fibre range of the boundary symbol itself
    Eigen::JacobiSVD<Eigen::MatrixXcd> bs(boundary_symbol);
    rep.pass = bs.singularValues().minCoeff() > 1e-9 && rep.min_singular_value > 1e-9;
    return rep;
}

EbcReport ebc_check_coassociative(int grid_resolution) {
    return ebc_check(sigma_B_matrix(), grid_resolution);
}

EllipticityReport psi_positive_ellipticity(std::complex<double> z, int grid_resolution) {
    if (grid_resolution < 90) throw PreconditionError("covector grid must have at least 90 angles");
    Eigen::MatrixXcd bc = Eigen::MatrixXcd::Zero(2, 4);
    bc(0, 1) = 1;
    bc(0, 3) = 1;
    bc(1, 0) = z;
    bc(1, 1) = Cx(0, -1);
    bc(1, 2) = std::conj(z);
    bc(1, 3) = Cx(0, 1);

    EllipticityReport rep;
    rep.grid = grid_resolution;
    rep.min_abs_det = std::numeric_limits<double>::infinity();
    for (int k = 0; k < grid_resolution; ++k) {
        double t = 2.0 * M_PI * k / grid_resolution;
        Cx eta(std::cos(t), std::sin(t));
        Eigen::MatrixXcd composite = bc * calderon_symbol(eta).m * p_plus_matrix();
        Cx det = composite(0, 0) * composite(1, 1) - composite(0, 1) * composite(1, 0);
        Cx closed = (Cx(0, -2) * eta - z - std::conj(z) * eta * eta) / 4.0;
        rep.max_formula_error = std::max(rep.max_formula_error, std::abs(det - closed));
        rep.min_abs_det = std::min(rep.min_abs_det, std::abs(det));
    }
    rep.pass = rep.min_abs_det > 0 && rep.max_formula_error < 1e-12;
    return rep;
}

long index_formula(std::span<const BoundaryComponent> components) {
    long idx = 0;
    for (const auto& c : components) idx += c.c1 + 1 - c.genus;
    return idx;
}

int maslov_from_index(std::span<const BoundaryComponent> components) {
    if (components.size() != 1 || components[0].genus != 0)
        throw PreconditionError("the Z2 class is defined for a single genus-0 boundary");
    long idx = index_formula(components);
    return static_cast<int>(((idx + 1) % 2 + 2) % 2);
}

} // namespace g2calib
