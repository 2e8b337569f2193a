#pragma once

#include <boost/rational.hpp>

#include <string>
#include <string_view>

namespace g2calib {

/// Exact scalar for the rational code paths (constant forms, torus shifts).
using Rational = boost::rational<long long>;

/// Parses "3", "-1/2", "0.75"-free strings of the form [-]p[/q].
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& r);

/// Canonical representative of r mod 1 in [0, 1).
Rational mod1(Rational r);

} // namespace g2calib
