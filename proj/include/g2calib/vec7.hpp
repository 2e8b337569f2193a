#pragma once

#include "g2calib/octonion.hpp"

#include <array>
#include <cmath>
#include <cstdint>

namespace g2calib {

/// A vector in R^7 identified with the imaginary octonions through the
/// frame e1..e7 = (i, j, k, e, -e*i, -e*j, e*k).  That signed assignment is
/// the unique one (given e1 = i, e7 = e*k) for which the induced 3-form
/// phi0(u,v,w) = <u x v, w> takes the standard coordinate expression; it is
/// validated at startup against all 35 basis triples.
struct Vec7 {
    std::array<double, 7> c{};

    double& operator[](int i) { return c[static_cast<std::size_t>(i)]; }
    double operator[](int i) const { return c[static_cast<std::size_t>(i)]; }

    static Vec7 basis(int i) {
        Vec7 v;
        v[i] = 1.0;
        return v;
    }
};

Vec7 operator+(const Vec7& a, const Vec7& b);
Vec7 operator-(const Vec7& a, const Vec7& b);
Vec7 operator-(const Vec7& a);
Vec7 operator*(double s, const Vec7& a);

double dot(const Vec7& a, const Vec7& b);
double norm(const Vec7& a);
Vec7 normalized(const Vec7& a);

/// Embeds v as an imaginary octonion (1-coordinate zero).
Octonion embed(const Vec7& v);

/// Inverse of embed; requires the 1-coordinate to vanish within tol.
Vec7 imaginary_part(const Octonion& o, double tol = 1e-9);

/// Seven-dimensional cross product u x v = Im(conj(v) * u).
Vec7 cross(const Vec7& u, const Vec7& v);

/// phi0(u,v,w) = <u x v, w>, the standard G2 calibration 3-form.
double phi0_eval(const Vec7& u, const Vec7& v, const Vec7& w);

/// Associator [u,v,w] = ((uv)w - u(vw))/2 via octonion multiplication.
Vec7 associator(const Vec7& u, const Vec7& v, const Vec7& w);

/// chi0(u,v,w) = -u x (v x w) - <u,v>w + <u,w>v; equals associator(u,v,w).
Vec7 chi_eval(const Vec7& u, const Vec7& v, const Vec7& w);

/// psi0 = *phi0 evaluated as a 4-form; equals <associator(u,v,w), x>.
double psi0_eval(const Vec7& u, const Vec7& v, const Vec7& w, const Vec7& x);

/// Structure constants of the cross product on basis vectors:
/// e_i x e_j = sign * e_index (index == -1 when the product vanishes).
struct CrossEntry {
    std::int8_t index;
    std::int8_t sign;
};

/// The 7x7 table, derived once from oct_mul and checked against the
/// standard 3-form; any mismatch aborts at startup.
const std::array<std::array<CrossEntry, 7>, 7>& cross_table();

/// Frame extension: given orthonormal u, v and a unit a orthogonal to
/// u, v, u x v, returns the images of e1..e7 under the unique
/// phi0-preserving map sending (e1,e2,e4) to (u,v,a).
std::array<Vec7, 7> g2_frame_from_triple(const Vec7& u, const Vec7& v, const Vec7& a);

} // namespace g2calib
