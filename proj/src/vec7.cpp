#include "g2calib/vec7.hpp"

#include "g2calib/errors.hpp"

#include <cstdlib>

namespace g2calib {

Vec7 operator+(const Vec7& a, const Vec7& b) {
    Vec7 r;
    for (int i = 0; i < 7; ++i) r[i] = a[i] + b[i];
    return r;
}

Vec7 operator-(const Vec7& a, const Vec7& b) {
    Vec7 r;
    for (int i = 0; i < 7; ++i) r[i] = a[i] - b[i];
    return r;
}

Vec7 operator-(const Vec7& a) {
    Vec7 r;
    for (int i = 0; i < 7; ++i) r[i] = -a[i];
    return r;
}

Vec7 operator*(double s, const Vec7& a) {
    Vec7 r;
    for (int i = 0; i < 7; ++i) r[i] = s * a[i];
    return r;
}

double dot(const Vec7& a, const Vec7& b) {
    double s = 0;
    for (int i = 0; i < 7; ++i) s += a[i] * b[i];
    return s;
}

double norm(const Vec7& a) { return std::sqrt(dot(a, a)); }

Vec7 normalized(const Vec7& a) {
    double n = norm(a);
    if (n == 0.0) throw PreconditionError("cannot normalize the zero vector");
    return (1.0 / n) * a;
}

namespace {
// e1..e7 -> octonion slot and sign (slots over (1,i,j,k,e,ei,ej,ek)).
constexpr int kSlot[7] = {1, 2, 3, 4, 5, 6, 7};
constexpr double kSign[7] = {1, 1, 1, 1, -1, -1, 1};
} // namespace

Octonion embed(const Vec7& v) {
    Octonion o;
    for (int i = 0; i < 7; ++i) o[kSlot[i]] = kSign[i] * v[i];
    return o;
}

Vec7 imaginary_part(const Octonion& o, double tol) {
    if (std::abs(o[0]) > tol)
        throw InvariantViolation("octonion has a non-vanishing real part");
    Vec7 v;
    for (int i = 0; i < 7; ++i) v[i] = kSign[i] * o[kSlot[i]];
    return v;
}

namespace {

Vec7 cross_via_octonion(const Vec7& u, const Vec7& v) {
    Octonion p = oct_mul(oct_conj(embed(v)), embed(u));
    p[0] = 0.0; // Im(.)
    return imaginary_part(p);
}

// Standard coordinate expression of phi0, used only to pin the sign
// convention of the multiplication at startup.
struct Phi0Term {
    int i, j, k;
    int sign;
};
constexpr Phi0Term kPhi0Terms[7] = {{0, 1, 2, 1},  {0, 3, 4, 1},  {0, 5, 6, 1},  {1, 3, 5, 1},
                                    {1, 4, 6, -1}, {2, 3, 6, -1}, {2, 4, 5, -1}};

std::array<std::array<CrossEntry, 7>, 7> build_cross_table() {
    std::array<std::array<CrossEntry, 7>, 7> t{};
    for (int i = 0; i < 7; ++i)
        for (int j = 0; j < 7; ++j) {
            Vec7 c = cross_via_octonion(Vec7::basis(i), Vec7::basis(j));
            t[i][j] = {-1, 0};
            for (int k = 0; k < 7; ++k) {
                if (std::abs(c[k]) > 0.5) {
                    t[i][j] = {static_cast<std::int8_t>(k),
                               static_cast<std::int8_t>(c[k] > 0 ? 1 : -1)};
                    break;
                }
            }
        }
    // The doubling convention must reproduce the standard form on every
    // basis triple; a mismatch is a build defect, not a runtime condition.
    for (int i = 0; i < 7; ++i)
        for (int j = 0; j < 7; ++j)
            for (int k = 0; k < 7; ++k) {
                double got = 0;
                if (t[i][j].index == k) got = t[i][j].sign;
                double want = 0;
                for (const auto& term : kPhi0Terms) {
                    int abc[3] = {term.i, term.j, term.k};
                    int perm[3] = {i, j, k};
                    // antisymmetrized lookup
                    int sgn = 1;
                    int p[3] = {perm[0], perm[1], perm[2]};
                    if (p[0] > p[1]) {
                        std::swap(p[0], p[1]);
                        sgn = -sgn;
                    }
                    if (p[1] > p[2]) {
                        std::swap(p[1], p[2]);
                        sgn = -sgn;
                    }
                    if (p[0] > p[1]) {
                        std::swap(p[0], p[1]);
                        sgn = -sgn;
                    }
                    if (p[0] == abc[0] && p[1] == abc[1] && p[2] == abc[2]) want = sgn * term.sign;
                }
                if (got != want) {
                    std::abort(); // sign convention broken; nothing sensible to do
                }
            }
    return t;
}

} // namespace

const std::array<std::array<CrossEntry, 7>, 7>& cross_table() {
    static const auto table = build_cross_table();
    return table;
}

Vec7 cross(const Vec7& u, const Vec7& v) {
    const auto& t = cross_table();
    Vec7 r;
    for (int i = 0; i < 7; ++i) {
        const double ui = u[i];
        if (ui == 0.0) continue;
        for (int j = 0; j < 7; ++j) {
            const CrossEntry& e = t[i][j];
            if (e.index < 0) continue;
            r[e.index] += e.sign * ui * v[j];
        }
    }
    return r;
}

double phi0_eval(const Vec7& u, const Vec7& v, const Vec7& w) { return dot(cross(u, v), w); }

Vec7 associator(const Vec7& u, const Vec7& v, const Vec7& w) {
    Octonion ou = embed(u), ov = embed(v), ow = embed(w);
    Octonion d = 0.5 * (oct_mul(oct_mul(ou, ov), ow) - oct_mul(ou, oct_mul(ov, ow)));
    return imaginary_part(d, 1e-9);
}

Vec7 chi_eval(const Vec7& u, const Vec7& v, const Vec7& w) {
    return -cross(u, cross(v, w)) - dot(u, v) * w + dot(u, w) * v;
}

double psi0_eval(const Vec7& u, const Vec7& v, const Vec7& w, const Vec7& x) {
    return dot(chi_eval(u, v, w), x);
}

std::array<Vec7, 7> g2_frame_from_triple(const Vec7& u, const Vec7& v, const Vec7& a) {
    const double tol = 1e-9;
    Vec7 w = cross(u, v);
    for (double d : {dot(u, v), dot(u, a), dot(v, a), dot(w, a)})
        if (std::abs(d) > tol) throw PreconditionError("g2 frame triple must be orthonormal");
    for (double n : {norm(u), norm(v), norm(a)})
        if (std::abs(n - 1.0) > tol) throw PreconditionError("g2 frame triple must be orthonormal");
    // images of (e1,e2,e3,e4,e5,e6,e7) = (u, v, u x v, a, u x a, v x a, -(u x v) x a)
    return {u, v, w, a, cross(u, a), cross(v, a), -cross(w, a)};
}

} // namespace g2calib
