#include "g2calib/kform.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cstdlib>

namespace g2calib {

namespace detail {

CombTables::CombTables() {
    for (unsigned mask = 0; mask < 128; ++mask) {
        auto k = static_cast<std::size_t>(std::popcount(mask));
        rank[mask] = static_cast<int>(masks[k].size());
        masks[k].push_back(static_cast<std::uint8_t>(mask));
    }
}

const CombTables& comb() {
    static const CombTables tables;
    return tables;
}

} // namespace detail

double eval(const KForm<double>& a, std::span<const Vec7> vectors) {
    if (static_cast<int>(vectors.size()) != a.degree)
        throw PreconditionError("form evaluation arity does not match degree");
    if (a.degree == 0) return a.coeff[0];
    const auto& ct = detail::comb();
    const auto& km = ct.masks[static_cast<std::size_t>(a.degree)];
    double total = 0;
    std::vector<std::vector<double>> sub(static_cast<std::size_t>(a.degree),
                                         std::vector<double>(static_cast<std::size_t>(a.degree)));
    for (std::size_t ii = 0; ii < km.size(); ++ii) {
        if (a.coeff[ii] == 0.0) continue;
        int r = 0;
        for (unsigned m = km[ii]; m; m &= m - 1, ++r) {
            int idx = std::countr_zero(m);
            for (int c = 0; c < a.degree; ++c)
                sub[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] =
                    vectors[static_cast<std::size_t>(c)][idx];
        }
        total += a.coeff[ii] * detail::small_det(sub);
    }
    return total;
}

namespace {

template <typename T>
Mat7<T> b_matrix(const KForm<T>& phi) {
    Mat7<T> B{};
    std::array<KForm<T>, 7> contracted;
    for (int i = 0; i < 7; ++i) {
        std::array<T, 7> ei{};
        ei[static_cast<std::size_t>(i)] = T(1);
        contracted[static_cast<std::size_t>(i)] = interior<T>(ei, phi);
    }
    for (int i = 0; i < 7; ++i)
        for (int j = i; j < 7; ++j) {
            KForm<T> top = wedge(wedge(contracted[static_cast<std::size_t>(i)],
                                       contracted[static_cast<std::size_t>(j)]),
                                 phi);
            B[i][j] = B[j][i] = top.at_mask(0x7F);
        }
    return B;
}

template <typename T>
void require_positive_definite(const Mat7<T>& g) {
    // Sylvester criterion on leading principal minors.
    for (int k = 1; k <= 7; ++k) {
        std::vector<std::vector<T>> sub(static_cast<std::size_t>(k),
                                        std::vector<T>(static_cast<std::size_t>(k)));
        for (int r = 0; r < k; ++r)
            for (int c = 0; c < k; ++c) sub[r][c] = g[r][c];
        if (!(detail::small_det(std::move(sub)) > T(0)))
            throw PreconditionError("not a positive G2 form");
    }
}

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::rational<BigInt>;

BigInt integer_ninth_root(const BigInt& v) {
    if (v <= 0) return -1;
    auto guess =
        static_cast<long long>(std::llround(std::pow(v.convert_to<double>(), 1.0 / 9.0)));
    for (long long a = std::max(1LL, guess - 2); a <= guess + 2; ++a) {
        BigInt p = boost::multiprecision::pow(BigInt(a), 9);
        if (p == v) return BigInt(a);
    }
    return -1;
}

Rational narrow(const BigRat& r) {
    const BigInt bound = std::numeric_limits<long long>::max();
    if (boost::multiprecision::abs(r.numerator()) > bound || r.denominator() > bound)
        throw PreconditionError("exact result exceeds 64-bit rationals");
    return {r.numerator().convert_to<long long>(), r.denominator().convert_to<long long>()};
}

} // namespace

MetricFromForm<double> metric_from_three_form(const KForm<double>& phi) {
    if (phi.degree != 3) throw PreconditionError("metric construction needs a 3-form");
    Mat7<double> B = b_matrix(phi);
    double d = mat7_det(B);
    if (d == 0.0) throw PreconditionError("not a positive G2 form");
    int orient = d > 0 ? 1 : -1;
    const double six7 = 279936.0; // 6^7
    double vol = std::pow(std::abs(d) / six7, 1.0 / 9.0);
    Mat7<double> gram{};
    for (int i = 0; i < 7; ++i)
        for (int j = 0; j < 7; ++j) gram[i][j] = orient * B[i][j] / (6.0 * vol);
    require_positive_definite(gram);
    return {gram, vol, orient};
}

MetricFromForm<Rational> metric_from_three_form_exact(const KForm<Rational>& phi) {
    if (phi.degree != 3) throw PreconditionError("metric construction needs a 3-form");
    // widen to arbitrary precision: determinants of the B matrix overflow
    // 64-bit rationals already for moderately scaled forms
    KForm<BigRat> wide(3);
    for (std::size_t t = 0; t < phi.coeff.size(); ++t)
        wide.coeff[t] = BigRat(BigInt(phi.coeff[t].numerator()), BigInt(phi.coeff[t].denominator()));
    Mat7<BigRat> B = b_matrix(wide);
    BigRat d = mat7_det(B);
    if (d == BigRat(0)) throw PreconditionError("not a positive G2 form");
    int orient = d > BigRat(0) ? 1 : -1;
    BigRat ratio = (orient > 0 ? d : -d) / BigRat(279936);
    BigInt rn = integer_ninth_root(ratio.numerator());
    BigInt rd = integer_ninth_root(ratio.denominator());
    if (rn < 0 || rd < 0)
        throw PreconditionError("rational mode: volume is not an exact rational ninth root");
    BigRat vol(rn, rd);
    Mat7<BigRat> wide_gram{};
    for (int i = 0; i < 7; ++i)
        for (int j = 0; j < 7; ++j) wide_gram[i][j] = BigRat(orient) * B[i][j] / (BigRat(6) * vol);
    require_positive_definite(wide_gram);
    MetricFromForm<Rational> out;
    out.vol = narrow(vol);
    out.orientation = orient;
    for (int i = 0; i < 7; ++i)
        for (int j = 0; j < 7; ++j) out.gram[i][j] = narrow(wide_gram[i][j]);
    return out;
}

} // namespace g2calib
