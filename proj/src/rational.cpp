#include "g2calib/rational.hpp"

#include "g2calib/errors.hpp"

#include <charconv>

namespace g2calib {

Rational parse_rational(std::string_view text) {
    auto parse_int = [](std::string_view s) -> long long {
        long long v = 0;
        auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (ec != std::errc{} || ptr != s.data() + s.size())
            throw ParseError("bad rational literal: '" + std::string(s) + "'");
        return v;
    };
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_int(text));
    long long num = parse_int(text.substr(0, slash));
    long long den = parse_int(text.substr(slash + 1));
    if (den == 0) throw ParseError("zero denominator in rational literal");
    return {num, den};
}

std::string to_string(const Rational& r) {
    if (r.denominator() == 1) return std::to_string(r.numerator());
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

Rational mod1(Rational r) {
    long long q = r.numerator() / r.denominator();
    r -= q;
    if (r < 0) r += 1;
    return r;
}

} // namespace g2calib
