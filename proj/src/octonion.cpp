#include "g2calib/octonion.hpp"

namespace g2calib {

namespace {

using Quat = std::array<double, 4>;

Quat qmul(const Quat& a, const Quat& b) {
    return {a[0] * b[0] - a[1] * b[1] - a[2] * b[2] - a[3] * b[3],
            a[0] * b[1] + a[1] * b[0] + a[2] * b[3] - a[3] * b[2],
            a[0] * b[2] - a[1] * b[3] + a[2] * b[0] + a[3] * b[1],
            a[0] * b[3] + a[1] * b[2] - a[2] * b[1] + a[3] * b[0]};
}

Quat qconj(const Quat& a) { return {a[0], -a[1], -a[2], -a[3]}; }

Quat qsub(const Quat& a, const Quat& b) {
    return {a[0] - b[0], a[1] - b[1], a[2] - b[2], a[3] - b[3]};
}

Quat qadd(const Quat& a, const Quat& b) {
    return {a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3]};
}

} // namespace

Octonion operator+(const Octonion& a, const Octonion& b) {
    Octonion r;
    for (int i = 0; i < 8; ++i) r[i] = a[i] + b[i];
    return r;
}

Octonion operator-(const Octonion& a, const Octonion& b) {
    Octonion r;
    for (int i = 0; i < 8; ++i) r[i] = a[i] - b[i];
    return r;
}

Octonion operator*(double s, const Octonion& a) {
    Octonion r;
    for (int i = 0; i < 8; ++i) r[i] = s * a[i];
    return r;
}

Octonion oct_mul(const Octonion& p, const Octonion& q) {
    // Pair decomposition x = a + b*l with l*q anticommuting:
    // the basis slots (e, e*i, e*j, e*k) carry b = (c4, -c5, -c6, -c7).
    Quat a{p[0], p[1], p[2], p[3]}, b{p[4], -p[5], -p[6], -p[7]};
    Quat c{q[0], q[1], q[2], q[3]}, d{q[4], -q[5], -q[6], -q[7]};
    Quat r1 = qsub(qmul(a, c), qmul(qconj(d), b));
    Quat r2 = qadd(qmul(d, a), qmul(b, qconj(c)));
    return Octonion{{r1[0], r1[1], r1[2], r1[3], r2[0], -r2[1], -r2[2], -r2[3]}};
}

Octonion oct_conj(const Octonion& p) {
    Octonion r;
    r[0] = p[0];
    for (int i = 1; i < 8; ++i) r[i] = -p[i];
    return r;
}

double oct_norm(const Octonion& p) {
    double s = 0;
    for (double x : p.c) s += x * x;
    return std::sqrt(s);
}

} // namespace g2calib
