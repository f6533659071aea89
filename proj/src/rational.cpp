#include "bakerlab/rational.hpp"

#include <charconv>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace bakerlab {

std::int64_t floor_of(const Rational& r) {
  const auto n = r.numerator();
  const auto d = r.denominator();  // always positive for boost::rational
  auto q = n / d;
  if (n % d != 0 && n < 0) --q;
  return q;
}

Rational mod(const Rational& r, const Rational& m) {
  if (m <= Rational(0)) throw std::invalid_argument("mod: modulus must be positive");
  const Rational q = r / m;
  return r - m * Rational(floor_of(q));
}

Rational lcm(const Rational& a, const Rational& b) {
  if (a <= Rational(0) || b <= Rational(0)) throw std::invalid_argument("lcm: arguments must be positive");
  return Rational(std::lcm(a.numerator(), b.numerator()),
                  std::gcd(a.denominator(), b.denominator()));
}

Complex turns(const Rational& r) {
  const Rational f = frac(r);
  if (f == Rational(0)) return {1.0, 0.0};
  if (f == Rational(1, 2)) return {-1.0, 0.0};
  if (f == Rational(1, 4)) return {0.0, 1.0};
  if (f == Rational(3, 4)) return {0.0, -1.0};
  // Fold into (-1/2, 1/2] so the argument handed to sin/cos stays small.
  const double t = f > Rational(1, 2) ? to_double(f - 1) : to_double(f);
  return std::polar(1.0, 2.0 * kPi * t);
}

double to_double(const Rational& r) {
  return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

namespace {

std::int64_t parse_int(std::string_view s, std::string_view whole) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  std::int64_t v = 0;
  const auto* first = s.data();
  const auto* last = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (s.empty() || ec != std::errc{} || ptr != last) {
    throw std::invalid_argument("not a rational of the form p/q: '" + std::string(whole) + "'");
  }
  return v;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto s = trim(text);
  const auto slash = s.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(s, text));
  const auto num = parse_int(s.substr(0, slash), text);
  const auto den = parse_int(s.substr(slash + 1), text);
  if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  return Rational(num, den);
}

std::string format_rational(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

}  // namespace bakerlab
