#include "bakerlab/kernel.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace bakerlab {

namespace {

Complex gaussian_and_phase(double d, int N) {
  const double a = kPi * N / 2.0;
  return std::exp(-a * d * d) * std::polar(1.0, -a * d);
}

struct Point {
  Rational x;
  Complex amp;
};

// Points of s with coordinate in [lo, hi), or [lo, hi] when closed is set.
std::vector<Point> points_in(const CombState& s, const Rational& lo, const Rational& hi,
                             bool closed = false) {
  std::vector<Point> pts;
  for (const auto& c : s.terms()) {
    // First index k with offset + P k >= lo.
    Rational k0r = (lo - c.offset) / c.spacing;
    std::int64_t k = floor_of(k0r);
    if (Rational(k) < k0r) ++k;
    for (;; ++k) {
      const Rational x = c.offset + c.spacing * Rational(k);
      if (x > hi || (x == hi && !closed)) break;
      pts.push_back({x, c.amplitude * turns(c.step_phase * Rational(k))});
    }
  }
  return pts;
}

}  // namespace

Complex eval_kernel(double x, double y, int N) {
  if (N < 1) throw std::invalid_argument("eval_kernel: N must be positive");
  const double d = x - y;
  if (d == 0.0) return {static_cast<double>(N), 0.0};
  return std::sin(kPi * N * d) / (kPi * d) * gaussian_and_phase(d, N);
}

Complex eval_kernel_exact(const Rational& d, int N) {
  if (N < 1) throw std::invalid_argument("eval_kernel: N must be positive");
  if (d == Rational(0)) return {static_cast<double>(N), 0.0};
  // sin(pi t) with t = N d reduced mod 2.
  const Rational t = mod(Rational(N) * d, Rational(2));
  const double sine = t.denominator() == 1 ? 0.0 : std::sin(kPi * to_double(t));
  const double dd = to_double(d);
  return sine / (kPi * dd) * gaussian_and_phase(dd, N);
}

std::int64_t kernel_truncation_radius(const ModelParams& params) {
  const double r = std::sqrt(2.0 * std::log(1.0 / params.kernel_tol) / (kPi * params.N));
  return static_cast<std::int64_t>(std::ceil(r));
}

Complex kernel_form(const CombState& s1, const CombState& s2) {
  if (s1.rep() != Rep::position || s2.rep() != Rep::position)
    throw std::invalid_argument("kernel_form: position-rep states required");
  if (s1.N() != s2.N()) throw std::invalid_argument("kernel_form: mismatched N");
  const int N = s1.N();
  const auto radius = Rational(kernel_truncation_radius(s1.params()));
  const auto xs = points_in(s1, Rational(0), Rational(1));
  const auto ys = points_in(s2, -radius, Rational(1) + radius, /*closed=*/true);
  Complex total{0.0, 0.0};
  for (const auto& xi : xs) {
    Complex inner{0.0, 0.0};
    for (const auto& yj : ys) inner += eval_kernel_exact(xi.x - yj.x, N) * yj.amp;
    total += std::conj(xi.amp) * inner;
  }
  return total;
}

}  // namespace bakerlab
