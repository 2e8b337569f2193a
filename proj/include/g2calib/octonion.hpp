#pragma once

#include <array>
#include <cmath>

namespace g2calib {

/// Octonion over the ordered basis (1, i, j, k, e, e*i, e*j, e*k).
///
/// Multiplication is the Cayley-Dickson double of the quaternions,
/// (a,b)(c,d) = (ac - conj(d) b, da + b conj(c)); the pairing of the
/// e-half with that formula is fixed once and validated against the
/// standard 3-form (see cross_table() in vec7.hpp).
struct Octonion {
    std::array<double, 8> c{};

    double& operator[](int i) { return c[static_cast<std::size_t>(i)]; }
    double operator[](int i) const { return c[static_cast<std::size_t>(i)]; }

    static Octonion unit() { return Octonion{{1, 0, 0, 0, 0, 0, 0, 0}}; }
    static Octonion basis(int slot) {
        Octonion o;
        o[slot] = 1.0;
        return o;
    }
};

Octonion operator+(const Octonion& a, const Octonion& b);
Octonion operator-(const Octonion& a, const Octonion& b);
Octonion operator*(double s, const Octonion& a);

Octonion oct_mul(const Octonion& p, const Octonion& q);

/// Conjugation: fixes the 1-coordinate, negates the 7 imaginary ones.
Octonion oct_conj(const Octonion& p);

double oct_norm(const Octonion& p);

} // namespace g2calib
