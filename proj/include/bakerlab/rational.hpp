#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <string_view>

#include <boost/rational.hpp>

namespace bakerlab {

// All lattice geometry (spacings, offsets, step phases, theta) is exact.
// Compare Rationals only against Rationals: with C++20 rewritten comparison
// candidates, boost 1.74 recurses forever on rational == int.
using Rational = boost::rational<std::int64_t>;
using Complex = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846264338327950288;

/// Largest integer not exceeding r.
std::int64_t floor_of(const Rational& r);

/// r reduced into [0, m). m must be positive.
Rational mod(const Rational& r, const Rational& m);

/// r reduced into [0, 1).
inline Rational frac(const Rational& r) { return mod(r, Rational(1)); }

/// Least common multiple of two positive rationals: the smallest positive
/// rational that is an integer multiple of both.
Rational lcm(const Rational& a, const Rational& b);

/// e^{2 pi i r}. Quarter turns are returned exactly.
Complex turns(const Rational& r);

double to_double(const Rational& r);

/// Parses "p/q", "p" or "-p/q". Throws std::invalid_argument on anything else,
/// including decimal notation.
Rational parse_rational(std::string_view text);

/// "p/q", or "p" when the denominator is 1.
std::string format_rational(const Rational& r);

}  // namespace bakerlab
