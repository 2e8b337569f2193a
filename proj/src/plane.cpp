#include "g2calib/plane.hpp"

#include "g2calib/errors.hpp"
#include "g2calib/parallel.hpp"

#include <Eigen/Dense>

#include <atomic>
#include <cmath>

namespace g2calib {

OrientedPlane make_plane(std::span<const Vec7> vectors, double tol) {
    const auto k = static_cast<int>(vectors.size());
    if (k != 3 && k != 4) throw PreconditionError("plane dimension must be 3 or 4");
    Eigen::MatrixXd m(7, k);
    for (int c = 0; c < k; ++c)
        for (int r = 0; r < 7; ++r) m(r, c) = vectors[static_cast<std::size_t>(c)][r];
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
    if (svd.singularValues()(k - 1) < tol)
        throw PreconditionError("degenerate input: spanning vectors are numerically dependent");

    OrientedPlane p;
    p.dim = k;
    for (int c = 0; c < k; ++c) {
        Vec7 v = vectors[static_cast<std::size_t>(c)];
        for (const Vec7& prev : p.frame) v = v - dot(v, prev) * prev;
        // second pass for numerical orthogonality
        for (const Vec7& prev : p.frame) v = v - dot(v, prev) * prev;
        p.frame.push_back(normalized(v));
    }
    return p;
}

double calibration_value(const KForm<double>& form, const OrientedPlane& p) {
    if (form.degree != p.dim)
        throw PreconditionError("form degree does not match plane dimension");
    return eval(form, p.frame);
}

namespace {

// phi0 on the four oriented 3-subframes, signed so that for a unit normal
// n = sum n_i f_i inside F, phi0(n . vol_F) = sum n_i c_i.
std::array<double, 4> subframe_values(const OrientedPlane& F) {
    std::array<double, 4> c{};
    for (int omit = 0; omit < 4; ++omit) {
        std::array<Vec7, 3> tri;
        int t = 0;
        for (int i = 0; i < 4; ++i)
            if (i != omit) tri[static_cast<std::size_t>(t++)] = F.frame[static_cast<std::size_t>(i)];
        double sgn = (omit % 2 == 0) ? 1.0 : -1.0; // f_omit . (f1^f2^f3^f4)
        c[static_cast<std::size_t>(omit)] = sgn * phi0_eval(tri[0], tri[1], tri[2]);
    }
    return c;
}

} // namespace

bool is_associative(const OrientedPlane& E, double tol) {
    if (E.dim != 3) throw PreconditionError("associativity is a property of 3-planes");
    double phi = phi0_eval(E.frame[0], E.frame[1], E.frame[2]);
    bool by_phi = std::abs(phi) >= 1.0 - tol;
    Vec7 chi = chi_eval(E.frame[0], E.frame[1], E.frame[2]);
    double chi2 = dot(chi, chi);
    // matched threshold: phi^2 + |chi|^2 = 1 on orthonormal triples
    bool by_chi = chi2 <= 2.0 * tol - tol * tol + 1e-12;
    if (std::abs(phi * phi + chi2 - 1.0) > 1e-7)
        throw InvariantViolation("phi0^2 + |chi0|^2 = 1 failed on an orthonormal frame");
    if (by_phi != by_chi)
        throw InvariantViolation("associativity characterizations disagree");
    return by_phi;
}

bool is_coassociative(const OrientedPlane& F, double tol) {
    if (F.dim != 4) throw PreconditionError("coassociativity is a property of 4-planes");
    double psi = eval(psi0_form<double>(), F.frame);
    bool by_psi = std::abs(psi) >= 1.0 - tol;
    auto c = subframe_values(F);
    double c2 = 0;
    for (double x : c) c2 += x * x;
    bool by_phi = c2 <= 2.0 * tol - tol * tol + 1e-12;
    if (std::abs(psi * psi + c2 - 1.0) > 1e-7)
        throw InvariantViolation("psi0^2 + |phi0-content|^2 = 1 failed on an orthonormal frame");
    if (by_psi != by_phi)
        throw InvariantViolation("coassociativity characterizations disagree");
    return by_psi;
}

bool is_psi_positive(const OrientedPlane& F, double tol) {
    if (F.dim != 4) throw PreconditionError("psi-positivity is a property of 4-planes");
    return std::abs(eval(psi0_form<double>(), F.frame)) > tol;
}

namespace {

// Orthonormal basis of the orthogonal complement of the unit vector n in
// R^4: the last three columns of the Householder reflection taking e1 to
// -sign(n1) n, with one column flipped to keep det = +1 relative to (n, basis).
std::array<std::array<double, 4>, 3> complement_basis(const std::array<double, 4>& n) {
    std::array<double, 4> v = n;
    double s = v[0] >= 0 ? 1.0 : -1.0;
    v[0] += s;
    double vv = 0;
    for (double x : v) vv += x * x;
    std::array<std::array<double, 4>, 3> cols{};
    for (int c = 1; c < 4; ++c)
        for (int r = 0; r < 4; ++r) {
            double h = (r == c ? 1.0 : 0.0) - 2.0 * v[static_cast<std::size_t>(r)] *
                                                  v[static_cast<std::size_t>(c)] / vv;
            cols[static_cast<std::size_t>(c - 1)][static_cast<std::size_t>(r)] = h;
        }
    // H maps e1 to -s n with det H = -1, so det[n | cols] = s; flip one
    // column when that is negative to keep n ^ cols positively oriented.
    if (s < 0)
        for (int r = 0; r < 4; ++r) cols[0][static_cast<std::size_t>(r)] = -cols[0][static_cast<std::size_t>(r)];
    return cols;
}

double content_at(const OrientedPlane& F, const std::array<double, 4>& n, std::array<Vec7, 3>* out) {
    auto cols = complement_basis(n);
    std::array<Vec7, 3> tri{};
    for (int t = 0; t < 3; ++t) {
        Vec7 v;
        for (int i = 0; i < 4; ++i)
            v = v + cols[static_cast<std::size_t>(t)][static_cast<std::size_t>(i)] *
                        F.frame[static_cast<std::size_t>(i)];
        tri[static_cast<std::size_t>(t)] = v;
    }
    if (out) *out = tri;
    return std::abs(phi0_eval(tri[0], tri[1], tri[2]));
}

} // namespace

AssociativeContent max_associative_content(const OrientedPlane& F, int grid_resolution) {
    if (F.dim != 4) throw PreconditionError("associative content is defined for 4-planes");
    if (grid_resolution < 2) throw PreconditionError("grid resolution too small");
    const int res = grid_resolution;
    const auto total = static_cast<std::size_t>(res) * static_cast<std::size_t>(res) *
                       static_cast<std::size_t>(res) * static_cast<std::size_t>(res);

    struct Best {
        double value = -1;
        std::array<double, 4> n{1, 0, 0, 0};
    };
    std::size_t chunk_count = std::max<std::size_t>(1, static_cast<std::size_t>(res));
    std::vector<Best> best_per_chunk(chunk_count);

    auto coord = [&](std::size_t idx) { return (static_cast<double>(idx) + 0.5) * 2.0 / res - 1.0; };

    parallel_chunks(total, chunk_count, [&](std::size_t chunk, std::size_t b, std::size_t e) {
        Best& best = best_per_chunk[chunk];
        for (std::size_t t = b; t < e; ++t) {
            std::size_t rem = t;
            std::array<double, 4> n{};
            for (int d = 3; d >= 0; --d) {
                n[static_cast<std::size_t>(d)] = coord(rem % static_cast<std::size_t>(res));
                rem /= static_cast<std::size_t>(res);
            }
            // antipodal identification: first nonzero coordinate positive
            double lead = 0;
            for (double x : n)
                if (x != 0) {
                    lead = x;
                    break;
                }
            if (lead <= 0) continue;
            double nn = 0;
            for (double x : n) nn += x * x;
            if (nn < 1e-12) continue;
            double inv = 1.0 / std::sqrt(nn);
            for (double& x : n) x *= inv;
            double val = content_at(F, n, nullptr);
            if (val > best.value) {
                best.value = val;
                best.n = n;
            }
        }
    });

    Best best;
    for (const Best& b : best_per_chunk)
        if (b.value > best.value) best = b;

    // local refinement: coordinate hill climb with shrinking step
    double step = 2.0 / res;
    while (step > 1e-12) {
        bool improved = false;
        for (int d = 0; d < 4; ++d)
            for (double sgn : {1.0, -1.0}) {
                std::array<double, 4> n = best.n;
                n[static_cast<std::size_t>(d)] += sgn * step;
                double nn = 0;
                for (double x : n) nn += x * x;
                double inv = 1.0 / std::sqrt(nn);
                for (double& x : n) x *= inv;
                double val = content_at(F, n, nullptr);
                if (val > best.value) {
                    best.value = val;
                    best.n = n;
                    improved = true;
                }
            }
        if (!improved) step *= 0.5;
    }

    std::array<Vec7, 3> tri{};
    best.value = content_at(F, best.n, &tri);
    AssociativeContent out;
    out.value = best.value;
    out.maximizer.dim = 3;
    out.maximizer.frame.assign(tri.begin(), tri.end());
    out.direction = best.n;
    out.grid_resolution = res;
    return out;
}

} // namespace g2calib
