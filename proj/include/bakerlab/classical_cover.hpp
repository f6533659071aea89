#pragma once

// Classical covering dynamics of the baker's map on the plane:
//
//   (2x,     p/2)        on l & e_p
//   (2x - 1, p/2 + 1/2)  on r & e_p
//   (2x + 1, p/2 + 1/2)  on l & o_p
//   (2x,     p/2)        on r & o_p
//
// with l = [0,1/2)+Z, r = [1/2,1)+Z in x and e_p = [0,1)+2Z, o_p = [1,2)+2Z in p.

#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "bakerlab/rational.hpp"

namespace bakerlab {

template <class T>
struct BasicPhasePoint {
  T x{};
  T p{};
  friend bool operator==(const BasicPhasePoint&, const BasicPhasePoint&) = default;
};

using PhasePoint = BasicPhasePoint<Rational>;
using PhasePointF = BasicPhasePoint<double>;

enum class XSide { l, r };
enum class PSide { e_p, o_p };

struct Region {
  XSide x;
  PSide p;
  friend bool operator==(const Region&, const Region&) = default;
};

std::string region_name(const Region& region);  // e.g. "l:e_p"

namespace detail {
inline Rational floor_value(const Rational& v) { return Rational(floor_of(v)); }
inline double floor_value(double v) { return std::floor(v); }
}  // namespace detail

template <class T>
Region region_of(const BasicPhasePoint<T>& pt) {
  const T half = T(1) / T(2);
  const T xr = pt.x - detail::floor_value(pt.x);
  const T pr = pt.p - T(2) * detail::floor_value(pt.p / T(2));
  return {xr < half ? XSide::l : XSide::r, pr < T(1) ? PSide::e_p : PSide::o_p};
}

template <class T>
BasicPhasePoint<T> cover_map(const BasicPhasePoint<T>& pt) {
  const T one(1);
  const T half = one / T(2);
  const Region reg = region_of(pt);
  if (reg.x == XSide::l && reg.p == PSide::e_p) return {T(2) * pt.x, pt.p / T(2)};
  if (reg.x == XSide::r && reg.p == PSide::e_p) return {T(2) * pt.x - one, pt.p / T(2) + half};
  if (reg.x == XSide::l && reg.p == PSide::o_p) return {T(2) * pt.x + one, pt.p / T(2) + half};
  return {T(2) * pt.x, pt.p / T(2)};
}

/// cover_map followed by reduction of both coordinates mod 1. Requires
/// x, p in [0, 1); throws std::invalid_argument otherwise.
template <class T>
BasicPhasePoint<T> torus_baker(const BasicPhasePoint<T>& pt);

extern template PhasePoint torus_baker(const PhasePoint&);
extern template PhasePointF torus_baker(const PhasePointF&);

struct OrbitRow {
  int step = 0;
  PhasePoint point;
  Region region;
};

/// Rows for steps 1..steps of the exact torus orbit of `start`.
std::vector<OrbitRow> torus_orbit(const PhasePoint& start, int steps);

/// The momentum center p = (theta2 + n)/N + k carried by the (2x, p/2) branch:
/// returns p/2, i.e. theta2/(2N) + k/2 for n = 0.
Rational momentum_center_image(int N, const Rational& theta2, int n, std::int64_t k);

/// Momentum coordinate of the covering-map image of a point with momentum p
/// lying on the given x half.
Rational branch_momentum_image(const Rational& p, XSide side);

/// True if p belongs to {(theta2 + n')/N + k'}.
bool on_momentum_lattice(int N, const Rational& theta2, const Rational& p);

struct EscapeFamily {
  int n = 0;
  int tested = 0;
  int escaped = 0;
  double fraction() const { return tested == 0 ? 0.0 : static_cast<double>(escaped) / tested; }
};

struct EscapeReport {
  int N = 1;
  Rational theta2;
  std::int64_t k_min = 0;
  std::int64_t k_max = 0;
  double fraction = 0.0;  // n = 0 family
  std::vector<EscapeFamily> families;  // n = 0..N-1
};

/// For every center p = (theta2 + n)/N + k with k in [k_min, k_max], maps it
/// through the covering map (left x half) and tests whether the image is back
/// on the lattice. `fraction` is the escaped share of the n = 0 family;
/// per-n shares are reported in `families`.
EscapeReport escape_check(int N, const Rational& theta2, std::int64_t k_min, std::int64_t k_max);

}  // namespace bakerlab
