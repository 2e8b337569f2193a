#pragma once

#include "g2calib/errors.hpp"
#include "g2calib/rational.hpp"
#include "g2calib/vec7.hpp"

#include <array>
#include <bit>
#include <cmath>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <type_traits>
#include <vector>

namespace g2calib {

namespace detail {

/// Combination bookkeeping for index sets out of {0..6}, keyed by bitmask.
struct CombTables {
    std::array<std::vector<std::uint8_t>, 8> masks; // masks[k]: ascending, |mask| = k
    std::array<int, 128> rank{};                    // mask -> position within its class
    CombTables();
};
const CombTables& comb();

/// Sign of merging two disjoint ascending index sets, i.e. the parity of
/// the shuffle (A, B) -> sorted(A u B).
inline int merge_sign(unsigned a, unsigned b) {
    int inversions = 0;
    for (unsigned m = a; m; m &= m - 1) {
        const int i = std::countr_zero(m);
        inversions += std::popcount(b & ((1u << i) - 1u));
    }
    return (inversions & 1) ? -1 : 1;
}

template <typename T>
bool pivot_better(const T& candidate, const T& incumbent) {
    if constexpr (std::is_floating_point_v<T>)
        return std::abs(candidate) > std::abs(incumbent);
    else
        return incumbent == T(0) && candidate != T(0);
}

/// Determinant of a small dense matrix by Gaussian elimination, valid over
/// any field type (exact for Rational).
template <typename T>
T small_det(std::vector<std::vector<T>> m) {
    const std::size_t n = m.size();
    T det(1);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        for (std::size_t r = col; r < n; ++r)
            if (pivot_better(m[r][col], m[piv][col])) piv = r;
        if (m[piv][col] == T(0)) return T(0);
        if (piv != col) {
            std::swap(m[piv], m[col]);
            det = -det;
        }
        det *= m[col][col];
        for (std::size_t r = col + 1; r < n; ++r) {
            if (m[r][col] == T(0)) continue;
            T f = m[r][col] / m[col][col];
            for (std::size_t c = col; c < n; ++c) m[r][c] -= f * m[col][c];
        }
    }
    return det;
}

} // namespace detail

template <typename T>
using Mat7 = std::array<std::array<T, 7>, 7>;

template <typename T>
Mat7<T> mat7_identity() {
    Mat7<T> m{};
    for (int i = 0; i < 7; ++i)
        for (int j = 0; j < 7; ++j) m[i][j] = T(i == j ? 1 : 0);
    return m;
}

template <typename T>
T mat7_det(const Mat7<T>& m) {
    std::vector<std::vector<T>> v(7, std::vector<T>(7));
    for (int i = 0; i < 7; ++i)
        for (int j = 0; j < 7; ++j) v[i][j] = m[i][j];
    return detail::small_det(std::move(v));
}

template <typename T>
Mat7<T> mat7_inverse(const Mat7<T>& m) {
    // Gauss-Jordan on [m | I]
    std::array<std::array<T, 14>, 7> a{};
    for (int i = 0; i < 7; ++i) {
        for (int j = 0; j < 7; ++j) a[i][j] = m[i][j];
        a[i][7 + i] = T(1);
    }
    for (int col = 0; col < 7; ++col) {
        int piv = col;
        for (int r = col; r < 7; ++r)
            if (detail::pivot_better(a[r][col], a[piv][col])) piv = r;
        if (a[piv][col] == T(0)) throw PreconditionError("singular gram matrix");
        std::swap(a[piv], a[col]);
        T d = a[col][col];
        for (int c = 0; c < 14; ++c) a[col][c] /= d;
        for (int r = 0; r < 7; ++r) {
            if (r == col || a[r][col] == T(0)) continue;
            T f = a[r][col];
            for (int c = 0; c < 14; ++c) a[r][c] -= f * a[col][c];
        }
    }
    Mat7<T> inv{};
    for (int i = 0; i < 7; ++i)
        for (int j = 0; j < 7; ++j) inv[i][j] = a[i][7 + j];
    return inv;
}

/// Alternating k-form on R^7, stored densely over the C(7,k) increasing
/// index tuples (indexed internally by bitmask rank).
template <typename T>
struct KForm {
    int degree = 0;
    std::vector<T> coeff;

    KForm() : coeff(1, T(0)) {}
    explicit KForm(int k) : degree(k) {
        if (k < 0 || k > 7) throw PreconditionError("form degree must lie in 0..7");
        coeff.assign(detail::comb().masks[static_cast<std::size_t>(k)].size(), T(0));
    }

    T& at_mask(unsigned mask) { return coeff[static_cast<std::size_t>(detail::comb().rank[mask])]; }
    const T& at_mask(unsigned mask) const {
        return coeff[static_cast<std::size_t>(detail::comb().rank[mask])];
    }

    /// Adds value on the (possibly unordered) index tuple, with the
    /// antisymmetrization sign; 1-based indices as in e^{ij...}.
    KForm& add_term(std::initializer_list<int> indices, T value) {
        unsigned mask = 0;
        int sign = 1;
        std::vector<int> idx(indices);
        for (auto& i : idx) --i;
        for (std::size_t a = 0; a < idx.size(); ++a)
            for (std::size_t b = a + 1; b < idx.size(); ++b) {
                if (idx[a] == idx[b]) throw PreconditionError("repeated index in form term");
                if (idx[a] > idx[b]) sign = -sign;
            }
        for (int i : idx) {
            if (i < 0 || i > 6) throw PreconditionError("form index out of range");
            mask |= 1u << i;
        }
        if (static_cast<int>(idx.size()) != degree)
            throw PreconditionError("term arity does not match form degree");
        at_mask(mask) += T(sign) * value;
        return *this;
    }

    /// Coefficient on a (possibly unordered) 1-based index tuple, signed.
    T coefficient(std::initializer_list<int> indices) const {
        unsigned mask = 0;
        int sign = 1;
        std::vector<int> idx(indices);
        for (auto& i : idx) --i;
        for (std::size_t a = 0; a < idx.size(); ++a)
            for (std::size_t b = a + 1; b < idx.size(); ++b) {
                if (idx[a] == idx[b]) return T(0);
                if (idx[a] > idx[b]) sign = -sign;
            }
        for (int i : idx) mask |= 1u << i;
        return T(sign) * at_mask(mask);
    }

    bool operator==(const KForm& o) const { return degree == o.degree && coeff == o.coeff; }
};

template <typename T>
KForm<T> operator+(const KForm<T>& a, const KForm<T>& b) {
    if (a.degree != b.degree) throw PreconditionError("degree mismatch in form sum");
    KForm<T> r(a.degree);
    for (std::size_t i = 0; i < r.coeff.size(); ++i) r.coeff[i] = a.coeff[i] + b.coeff[i];
    return r;
}

template <typename T>
KForm<T> operator-(const KForm<T>& a, const KForm<T>& b) {
    if (a.degree != b.degree) throw PreconditionError("degree mismatch in form difference");
    KForm<T> r(a.degree);
    for (std::size_t i = 0; i < r.coeff.size(); ++i) r.coeff[i] = a.coeff[i] - b.coeff[i];
    return r;
}

template <typename T>
KForm<T> operator*(const T& s, const KForm<T>& a) {
    KForm<T> r = a;
    for (auto& c : r.coeff) c *= s;
    return r;
}

template <typename T>
KForm<T> wedge(const KForm<T>& a, const KForm<T>& b) {
    if (a.degree + b.degree > 7)
        throw PreconditionError("wedge degree exceeds the ambient dimension");
    const auto& ct = detail::comb();
    KForm<T> r(a.degree + b.degree);
    const auto& am = ct.masks[static_cast<std::size_t>(a.degree)];
    const auto& bm = ct.masks[static_cast<std::size_t>(b.degree)];
    for (std::size_t ia = 0; ia < am.size(); ++ia) {
        if (a.coeff[ia] == T(0)) continue;
        for (std::size_t ib = 0; ib < bm.size(); ++ib) {
            if (b.coeff[ib] == T(0)) continue;
            unsigned ma = am[ia], mb = bm[ib];
            if (ma & mb) continue;
            int s = detail::merge_sign(ma, mb);
            r.at_mask(ma | mb) += T(s) * a.coeff[ia] * b.coeff[ib];
        }
    }
    return r;
}

/// Interior product (contraction in the first slot) by a coordinate vector.
template <typename T>
KForm<T> interior(const std::array<T, 7>& u, const KForm<T>& a) {
    if (a.degree < 1) throw PreconditionError("cannot contract a 0-form");
    const auto& ct = detail::comb();
    KForm<T> r(a.degree - 1);
    const auto& am = ct.masks[static_cast<std::size_t>(a.degree)];
    for (std::size_t ia = 0; ia < am.size(); ++ia) {
        if (a.coeff[ia] == T(0)) continue;
        unsigned mask = am[ia];
        for (unsigned m = mask; m; m &= m - 1) {
            int i = std::countr_zero(m);
            if (u[static_cast<std::size_t>(i)] == T(0)) continue;
            int below = std::popcount(mask & ((1u << i) - 1u));
            T s = T((below & 1) ? -1 : 1);
            r.at_mask(mask & ~(1u << i)) += s * u[static_cast<std::size_t>(i)] * a.coeff[ia];
        }
    }
    return r;
}

inline KForm<double> interior(const Vec7& u, const KForm<double>& a) {
    return interior<double>(u.c, a);
}

/// Multilinear antisymmetric evaluation on degree-many vectors.
double eval(const KForm<double>& a, std::span<const Vec7> vectors);

/// Hodge star with respect to an inner product (gram) and volume scale.
/// Satisfies **a = (-1)^{k(7-k)} a when vol = sqrt(det gram).
template <typename T>
KForm<T> hodge_star(const KForm<T>& a, const Mat7<T>& gram, const T& vol) {
    const auto& ct = detail::comb();
    const int k = a.degree;
    Mat7<T> ginv = mat7_inverse(gram);
    const auto& km = ct.masks[static_cast<std::size_t>(k)];
    // raise all indices with the k-th compound of ginv
    std::vector<T> raised(km.size(), T(0));
    for (std::size_t ii = 0; ii < km.size(); ++ii) {
        for (std::size_t ll = 0; ll < km.size(); ++ll) {
            if (a.coeff[ll] == T(0)) continue;
            // det of ginv[rows = I, cols = L]
            std::vector<int> ri, cl;
            for (unsigned m = km[ii]; m; m &= m - 1) ri.push_back(std::countr_zero(m));
            for (unsigned m = km[ll]; m; m &= m - 1) cl.push_back(std::countr_zero(m));
            std::vector<std::vector<T>> sub(ri.size(), std::vector<T>(cl.size()));
            for (std::size_t r = 0; r < ri.size(); ++r)
                for (std::size_t c = 0; c < cl.size(); ++c)
                    sub[r][c] = ginv[static_cast<std::size_t>(ri[r])][static_cast<std::size_t>(cl[c])];
            T d = k == 0 ? T(1) : detail::small_det(std::move(sub));
            raised[ii] += d * a.coeff[ll];
        }
    }
    KForm<T> r(7 - k);
    for (std::size_t ii = 0; ii < km.size(); ++ii) {
        if (raised[ii] == T(0)) continue;
        unsigned mi = km[ii];
        unsigned mj = 0x7Fu & ~mi;
        int s = detail::merge_sign(mi, mj);
        r.at_mask(mj) += T(s) * vol * raised[ii];
    }
    return r;
}

/// The standard G2 3-form in coordinates.
template <typename T>
KForm<T> phi0_form() {
    KForm<T> f(3);
    f.add_term({1, 2, 3}, T(1));
    f.add_term({1, 4, 5}, T(1));
    f.add_term({1, 6, 7}, T(1));
    f.add_term({2, 4, 6}, T(1));
    f.add_term({2, 5, 7}, T(-1));
    f.add_term({3, 4, 7}, T(-1));
    f.add_term({3, 5, 6}, T(-1));
    return f;
}

/// Its Hodge dual 4-form.
template <typename T>
KForm<T> psi0_form() {
    KForm<T> f(4);
    f.add_term({1, 2, 4, 7}, T(-1));
    f.add_term({1, 2, 5, 6}, T(-1));
    f.add_term({1, 3, 4, 6}, T(-1));
    f.add_term({1, 3, 5, 7}, T(1));
    f.add_term({2, 3, 4, 5}, T(1));
    f.add_term({2, 3, 6, 7}, T(1));
    f.add_term({4, 5, 6, 7}, T(1));
    return f;
}

template <typename T>
KForm<T> volume_form() {
    KForm<T> f(7);
    f.add_term({1, 2, 3, 4, 5, 6, 7}, T(1));
    return f;
}

template <typename T>
struct MetricFromForm {
    Mat7<T> gram;
    T vol;           // positive volume scale
    int orientation; // +1 if the coordinate frame is positively oriented for the form
};

/// Inner product and volume induced by a positive 3-form, via the matrix
/// B_ij = [(e_i . phi) ^ (e_j . phi) ^ phi : e^{1..7}] and its ninth root.
/// Frames of either orientation are accepted; genuinely non-positive forms
/// (degenerate or indefinite) are rejected.
MetricFromForm<double> metric_from_three_form(const KForm<double>& phi);

/// Exact-rational variant; requires the volume to be rational.
MetricFromForm<Rational> metric_from_three_form_exact(const KForm<Rational>& phi);

} // namespace g2calib
