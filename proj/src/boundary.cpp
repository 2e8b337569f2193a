#include "g2calib/boundary.hpp"

#include "g2calib/errors.hpp"

#include <Eigen/Dense>

#include <cmath>

namespace g2calib {

namespace {

Vec7 project_off(Vec7 x, std::initializer_list<Vec7> frame) {
    for (const Vec7& f : frame) x = x - dot(x, f) * f;
    return x;
}

// Orthonormal frame of nu = span(u,v,w)-perp, deterministic.
std::array<Vec7, 4> nu_basis(const BoundaryConfig& cfg) {
    std::array<Vec7, 4> out{};
    int found = 0;
    for (int i = 0; i < 7 && found < 4; ++i) {
        Vec7 cand = project_off(Vec7::basis(i), {cfg.u, cfg.v, cfg.w});
        for (int j = 0; j < found; ++j)
            cand = cand - dot(cand, out[static_cast<std::size_t>(j)]) * out[static_cast<std::size_t>(j)];
        if (norm(cand) > 1e-6) out[static_cast<std::size_t>(found++)] = normalized(cand);
    }
    if (found != 4) throw InvariantViolation("failed to frame the normal 4-plane");
    return out;
}

} // namespace

void validate_config(const BoundaryConfig& cfg, double tol) {
    for (double n : {norm(cfg.u), norm(cfg.v), norm(cfg.w)})
        if (std::abs(n - 1.0) > tol)
            throw PreconditionError("boundary frame vectors must be unit length");
    for (double d : {dot(cfg.u, cfg.v), dot(cfg.u, cfg.w), dot(cfg.v, cfg.w)})
        if (std::abs(d) > tol) throw PreconditionError("boundary frame must be orthonormal");
    Vec7 diff = cross(cfg.u, cfg.v) - cfg.w;
    if (norm(diff) > 10 * tol) throw PreconditionError("w must equal u x v");
    if (cfg.F.dim != 4) throw PreconditionError("the constraining plane must be 4-dimensional");
    for (const Vec7* t : {&cfg.v, &cfg.w}) {
        Vec7 res = *t;
        for (const Vec7& f : cfg.F.frame) res = res - dot(res, f) * f;
        if (norm(res) > 10 * tol) throw PreconditionError("v and w must lie inside F");
    }
}

NormalSplit split_coassociative(const BoundaryConfig& cfg, double tol) {
    validate_config(cfg, tol);
    if (!is_coassociative(cfg.F, 1e-6))
        throw PreconditionError("F is not coassociative");

    // a = first Gram-Schmidt vector of F minus span(v, w)
    Vec7 a{};
    bool got = false;
    for (const Vec7& f : cfg.F.frame) {
        Vec7 cand = project_off(f, {cfg.v, cfg.w});
        if (norm(cand) > 1e-6) {
            a = normalized(cand);
            got = true;
            break;
        }
    }
    if (!got) throw InvariantViolation("F minus span(v,w) is degenerate");
    if (std::abs(dot(a, cfg.u)) > 10 * tol)
        throw InvariantViolation("section a is not orthogonal to u");

    NormalSplit s;
    s.cfg = cfg;
    s.section_a = a;
    Vec7 Ja = cross(cfg.u, a);
    Vec7 b1 = cross(a, cfg.v);
    Vec7 b2 = cross(a, cfg.w);
    s.nuX_frame = {a, Ja};
    s.muX_frame = {b1, b2};
    s.nu_frame = {a, Ja, b1, b2};

    // the frames must be orthonormal, orthogonal to span(u,v,w), and
    // J-stable; surfaced rather than repaired
    for (const Vec7& x : s.nu_frame) {
        if (std::abs(norm(x) - 1.0) > 100 * tol)
            throw InvariantViolation("normal frame vector is not unit");
        for (const Vec7* t : {&cfg.u, &cfg.v, &cfg.w})
            if (std::abs(dot(x, *t)) > 100 * tol)
                throw InvariantViolation("normal frame vector is not normal");
    }
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (std::abs(dot(s.nu_frame[static_cast<std::size_t>(i)],
                             s.nu_frame[static_cast<std::size_t>(j)])) > 100 * tol)
                throw InvariantViolation("normal frame is not orthogonal");
    // J stability of both halves
    for (const Vec7& x : s.nuX_frame) {
        Vec7 jx = s.J(x);
        Vec7 res = project_off(jx, {s.nuX_frame[0], s.nuX_frame[1]});
        if (norm(res) > 100 * tol) throw InvariantViolation("nu_X is not J-stable");
    }
    for (const Vec7& x : s.muX_frame) {
        Vec7 jx = s.J(x);
        Vec7 res = project_off(jx, {s.muX_frame[0], s.muX_frame[1]});
        if (norm(res) > 100 * tol) throw InvariantViolation("mu_X is not J-stable");
    }
    return s;
}

std::pair<NormalSplit, ProjectionReport>
split_psi_positive(const BoundaryConfig& cfg, const std::array<Vec7, 2>& NX_frame, double tol) {
    validate_config(cfg, tol);
    if (!is_psi_positive(cfg.F, tol))
        throw PreconditionError("F is not psi-positive");
    // NX must span F minus span(v,w)
    for (const Vec7& n : NX_frame) {
        Vec7 res = n;
        for (const Vec7& f : cfg.F.frame) res = res - dot(res, f) * f;
        if (norm(res) > 1e-6) throw PreconditionError("NX frame does not lie inside F");
        if (std::abs(dot(n, cfg.v)) > 1e-6 || std::abs(dot(n, cfg.w)) > 1e-6)
            throw PreconditionError("NX frame must be orthogonal to v and w");
    }

    NormalSplit s;
    s.cfg = cfg;
    auto nu = nu_basis(cfg);

    // projection of span(NX) onto nu, in nu coordinates
    Eigen::Matrix<double, 4, 2> M;
    for (int c = 0; c < 2; ++c) {
        Vec7 p = project_off(NX_frame[static_cast<std::size_t>(c)], {cfg.u, cfg.v, cfg.w});
        for (int r = 0; r < 4; ++r) M(r, c) = dot(p, nu[static_cast<std::size_t>(r)]);
    }
    Eigen::JacobiSVD<Eigen::Matrix<double, 4, 2>> svd(M, Eigen::ComputeFullU);
    ProjectionReport rep{};
    rep.singular_values = {svd.singularValues()(0), svd.singularValues()(1)};
    if (rep.singular_values[1] < tol)
        throw InvariantViolation("projection of N_X to nu lost rank");

    // nu_X = image of the projection, orthonormalized; mu_X = complement in nu
    std::array<Vec7, 2> nuX{};
    for (int c = 0; c < 2; ++c) {
        Vec7 x{};
        for (int r = 0; r < 4; ++r) x = x + svd.matrixU()(r, c) * nu[static_cast<std::size_t>(r)];
        nuX[static_cast<std::size_t>(c)] = x;
    }
    std::array<Vec7, 2> muX{};
    int found = 0;
    for (int r = 0; r < 4 && found < 2; ++r) {
        Vec7 cand = project_off(nu[static_cast<std::size_t>(r)], {nuX[0], nuX[1]});
        if (found == 1) cand = cand - dot(cand, muX[0]) * muX[0];
        if (norm(cand) > 1e-6) muX[static_cast<std::size_t>(found++)] = normalized(cand);
    }
    if (found != 2) throw InvariantViolation("failed to frame mu_X");

    s.section_a = nuX[0];
    s.nuX_frame = nuX;
    s.muX_frame = muX;
    s.nu_frame = {nuX[0], nuX[1], muX[0], muX[1]};

    // Jb must stick out of nu_X (equivalently its mu_X part is nonzero)
    Vec7 b = muX[0];
    Vec7 Jb = s.J(b);
    Vec7 pmu = dot(Jb, muX[0]) * muX[0] + dot(Jb, muX[1]) * muX[1];
    rep.mu_component_of_Jb = norm(pmu);
    if (rep.mu_component_of_Jb < tol)
        throw InvariantViolation("J maps mu_X into nu_X, contradicting psi-positivity");

    // coordinates (0, 1, s, t) of the normalized projection of Jb in the
    // basis (b, Jb, v x b, w x b); z = s + i t feeds the symbol check
    Vec7 e2 = Jb, e3 = cross(cfg.v, b), e4 = cross(cfg.w, b);
    double c1 = dot(pmu, e2);
    if (std::abs(c1) < tol * tol)
        throw InvariantViolation("projected Jb has no J b component");
    Vec7 tilde = (1.0 / c1) * pmu;
    rep.z = {dot(tilde, e3), dot(tilde, e4)};
    return {s, rep};
}

bool check_antilinear(const NormalSplit& split, const Vec7& y, double tol) {
    Vec7 res = project_off(y, {split.cfg.v, split.cfg.w});
    if (norm(res) > tol * std::max(1.0, norm(y)))
        throw PreconditionError("y must lie in span(v, w)");
    const Vec7& a = split.section_a;
    Vec7 lhs = cross(split.J(a), y);
    Vec7 mid = cross(a, split.J(y));
    Vec7 rhs = -split.J(cross(a, y));
    return norm(lhs - mid) <= tol && norm(mid - rhs) <= tol && norm(lhs - rhs) <= tol;
}

} // namespace g2calib
