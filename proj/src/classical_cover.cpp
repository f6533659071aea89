#include "bakerlab/classical_cover.hpp"

#include <stdexcept>

namespace bakerlab {

std::string region_name(const Region& region) {
  std::string s = region.x == XSide::l ? "l" : "r";
  s += region.p == PSide::e_p ? ":e_p" : ":o_p";
  return s;
}

template <class T>
BasicPhasePoint<T> torus_baker(const BasicPhasePoint<T>& pt) {
  if (pt.x < T(0) || pt.x >= T(1) || pt.p < T(0) || pt.p >= T(1))
    throw std::invalid_argument("torus_baker: point must lie in [0,1)^2");
  const auto img = cover_map(pt);
  return {img.x - detail::floor_value(img.x), img.p - detail::floor_value(img.p)};
}

template PhasePoint torus_baker(const PhasePoint&);
template PhasePointF torus_baker(const PhasePointF&);

std::vector<OrbitRow> torus_orbit(const PhasePoint& start, int steps) {
  if (steps < 0) throw std::invalid_argument("orbit length must be non-negative");
  std::vector<OrbitRow> rows;
  rows.reserve(static_cast<std::size_t>(steps));
  PhasePoint pt = start;
  for (int i = 1; i <= steps; ++i) {
    // The momentum denominator doubles each step.
    if (pt.p.denominator() > (std::int64_t{1} << 60))
      throw std::overflow_error("exact orbit exceeds 64-bit rational range");
    pt = torus_baker(pt);
    rows.push_back({i, pt, region_of(pt)});
  }
  return rows;
}

Rational momentum_center_image(int N, const Rational& theta2, int n, std::int64_t k) {
  if (N < 1) throw std::invalid_argument("N must be a positive integer");
  if (n < 0 || n >= N) throw std::out_of_range("momentum family index must lie in [0, N)");
  const Rational p = (theta2 + Rational(n)) / Rational(N) + Rational(k);
  return p / 2;
}

Rational branch_momentum_image(const Rational& p, XSide side) {
  const PhasePoint pt{side == XSide::l ? Rational(0) : Rational(1, 2), p};
  return cover_map(pt).p;
}

bool on_momentum_lattice(int N, const Rational& theta2, const Rational& p) {
  return (Rational(N) * p - theta2).denominator() == 1;
}

EscapeReport escape_check(int N, const Rational& theta2, std::int64_t k_min, std::int64_t k_max) {
  if (N < 1) throw std::invalid_argument("N must be a positive integer");
  if (k_min > k_max) throw std::invalid_argument("empty k range");
  EscapeReport report{N, frac(theta2), k_min, k_max, 0.0, {}};
  for (int n = 0; n < N; ++n) {
    EscapeFamily fam{n, 0, 0};
    for (std::int64_t k = k_min; k <= k_max; ++k) {
      const Rational p = (report.theta2 + Rational(n)) / Rational(N) + Rational(k);
      const Rational image = branch_momentum_image(p, XSide::l);
      ++fam.tested;
      if (!on_momentum_lattice(N, report.theta2, image)) ++fam.escaped;
    }
    report.families.push_back(fam);
  }
  report.fraction = report.families.front().fraction();
  return report;
}

}  // namespace bakerlab
