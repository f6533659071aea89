#include "bakerlab/comb.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>
#include <utility>

namespace bakerlab {

ModelParams ModelParams::make(int N, double amp_epsilon, double kernel_tol) {
  if (N < 1) throw std::invalid_argument("N must be a positive integer");
  if (!(amp_epsilon > 0.0 && amp_epsilon < 1.0))
    throw std::invalid_argument("amp_epsilon must lie in (0, 1)");
  if (!(kernel_tol > 0.0 && kernel_tol < 1.0))
    throw std::invalid_argument("kernel_tol must lie in (0, 1)");
  return ModelParams{N, amp_epsilon, kernel_tol};
}

const char* rep_name(Rep rep) { return rep == Rep::position ? "x" : "p"; }

Comb make_comb(Rational spacing, Rational anchor, Rational step_phase, Complex amplitude) {
  if (spacing <= Rational(0)) throw std::invalid_argument("comb spacing must be positive");
  if (!std::isfinite(amplitude.real()) || !std::isfinite(amplitude.imag()))
    throw std::invalid_argument("comb amplitude must be finite");
  // anchor = offset + spacing*t; the point at anchor carries lattice index t.
  const std::int64_t t = floor_of(anchor / spacing);
  Comb c;
  c.spacing = spacing;
  c.offset = anchor - spacing * Rational(t);
  c.step_phase = frac(step_phase);
  c.amplitude = amplitude * turns(-step_phase * Rational(t));
  return c;
}

std::vector<Comb> refine(const Comb& c, std::int64_t factor) {
  if (factor < 1) throw std::invalid_argument("refine factor must be >= 1");
  std::vector<Comb> out;
  out.reserve(static_cast<std::size_t>(factor));
  const Rational big = c.spacing * Rational(factor);
  for (std::int64_t j = 0; j < factor; ++j) {
    Comb sub;
    sub.spacing = big;
    sub.offset = c.offset + c.spacing * Rational(j);
    sub.step_phase = frac(c.step_phase * Rational(factor));
    sub.amplitude = c.amplitude * turns(c.step_phase * Rational(j));
    out.push_back(sub);
  }
  return out;
}

CombState::CombState(const ModelParams& params, Rep rep) : params_(params), rep_(rep) {}

CombState::CombState(const ModelParams& params, Rep rep, std::vector<Comb> terms)
    : params_(params), rep_(rep) {
  terms_.reserve(terms.size());
  for (const auto& c : terms) {
    terms_.push_back(make_comb(c.spacing, c.offset, c.step_phase, c.amplitude));
  }
}

Rational CombState::common_period() const {
  if (terms_.empty()) return Rational(1);
  Rational period = terms_.front().spacing;
  for (const auto& c : terms_) period = lcm(period, c.spacing);
  return period;
}

namespace {

void require_compatible(const CombState& a, const CombState& b) {
  if (a.rep() != b.rep()) throw std::invalid_argument("cannot combine position and momentum combs");
  if (a.N() != b.N()) throw std::invalid_argument("cannot combine states with different N");
}

void require_position(const CombState& s, const char* op) {
  if (s.rep() != Rep::position)
    throw std::invalid_argument(std::string(op) + ": position-rep state required");
}

using GeometryKey = std::pair<Rational, Rational>;  // (offset, step_phase)

// All terms of s refined to `period`, summed per geometry.
std::map<GeometryKey, Complex> accumulate(const std::vector<Comb>& terms, const Rational& period) {
  std::map<GeometryKey, Complex> acc;
  for (const auto& c : terms) {
    const Rational factor = period / c.spacing;
    if (factor.denominator() != 1) throw std::logic_error("period is not a multiple of spacing");
    for (const auto& sub : refine(c, factor.numerator())) {
      acc[{sub.offset, sub.step_phase}] += sub.amplitude;
    }
  }
  return acc;
}

}  // namespace

CombState& CombState::operator+=(const CombState& other) {
  require_compatible(*this, other);
  terms_.insert(terms_.end(), other.terms_.begin(), other.terms_.end());
  *this = canonicalize(*this);
  return *this;
}

CombState& CombState::operator-=(const CombState& other) {
  require_compatible(*this, other);
  for (auto c : other.terms_) {
    c.amplitude = -c.amplitude;
    terms_.push_back(c);
  }
  *this = canonicalize(*this);
  return *this;
}

CombState& CombState::operator*=(Complex c) {
  for (auto& t : terms_) t.amplitude *= c;
  *this = canonicalize(*this);
  return *this;
}

CombState operator+(CombState a, const CombState& b) { return a += b; }
CombState operator-(CombState a, const CombState& b) { return a -= b; }
CombState operator*(Complex c, CombState s) { return s *= c; }

CombState canonicalize(const CombState& s) {
  if (s.empty()) return CombState(s.params(), s.rep());
  const Rational period = s.common_period();
  std::vector<Comb> merged;
  for (const auto& [key, amp] : accumulate(s.terms(), period)) {
    if (std::abs(amp) < s.params().amp_epsilon) continue;
    merged.push_back(Comb{period, key.first, key.second, amp});
  }
  return CombState(s.params(), s.rep(), std::move(merged));
}

CombState phase_mult(const CombState& s, const Rational& a) {
  require_position(s, "phase_mult");
  std::vector<Comb> out;
  out.reserve(s.size());
  for (const auto& c : s.terms()) {
    out.push_back(Comb{c.spacing, c.offset, frac(c.step_phase + a * c.spacing),
                       c.amplitude * turns(a * c.offset)});
  }
  return canonicalize(CombState(s.params(), s.rep(), std::move(out)));
}

CombState translate(const CombState& s, const Rational& a) {
  require_position(s, "translate");
  std::vector<Comb> out;
  out.reserve(s.size());
  for (const auto& c : s.terms()) {
    out.push_back(make_comb(c.spacing, c.offset + a, c.step_phase, c.amplitude));
  }
  return canonicalize(CombState(s.params(), s.rep(), std::move(out)));
}

CombState squeeze(const CombState& s) {
  require_position(s, "squeeze");
  std::vector<Comb> out;
  out.reserve(s.size());
  for (const auto& c : s.terms()) {
    out.push_back(Comb{c.spacing * 2, c.offset * 2, c.step_phase, c.amplitude * std::sqrt(2.0)});
  }
  return canonicalize(CombState(s.params(), s.rep(), std::move(out)));
}

CombState unsqueeze(const CombState& s) {
  require_position(s, "unsqueeze");
  std::vector<Comb> out;
  out.reserve(s.size());
  for (const auto& c : s.terms()) {
    out.push_back(Comb{c.spacing / 2, c.offset / 2, c.step_phase, c.amplitude / std::sqrt(2.0)});
  }
  return canonicalize(CombState(s.params(), s.rep(), std::move(out)));
}

CombState select_residues(const CombState& s, const Window& window, const Rational& modulus) {
  if (modulus <= Rational(0)) throw std::invalid_argument("residue modulus must be positive");
  if (window.lo < Rational(0) || window.hi > modulus || !(window.lo < window.hi))
    throw std::invalid_argument("window must be a non-empty subset of [0, modulus)");
  std::vector<Comb> out;
  for (const auto& c : s.terms()) {
    // Residues of offset + P*j mod `modulus` repeat with this period in j.
    const Rational steps = lcm(c.spacing, modulus) / c.spacing;
    for (const auto& sub : refine(c, steps.numerator())) {
      if (window.contains(mod(sub.offset, modulus))) out.push_back(sub);
    }
  }
  return canonicalize(CombState(s.params(), s.rep(), std::move(out)));
}

CombState indicator_x(const CombState& s, const Window& window, const Rational& modulus) {
  require_position(s, "indicator_x");
  return select_residues(s, window, modulus);
}

namespace {

// Poisson summation of one comb against sqrt(N) e^{sign 2 pi i N u v}.
Comb transform_comb(const Comb& c, int N, int sign) {
  const Rational dual = Rational(1) / (Rational(N) * c.spacing);
  const Rational anchor = Rational(-sign) * c.step_phase * dual;
  const Rational dual_phase = Rational(sign) * c.offset / c.spacing;
  const Complex amp = c.amplitude / (std::sqrt(static_cast<double>(N)) * to_double(c.spacing)) *
                      turns(-c.step_phase * c.offset / c.spacing);
  return make_comb(dual, anchor, dual_phase, amp);
}

CombState transform(const CombState& s, int sign) {
  const Rep target = s.rep() == Rep::position ? Rep::momentum : Rep::position;
  std::vector<Comb> out;
  out.reserve(s.size());
  for (const auto& c : s.terms()) out.push_back(transform_comb(c, s.N(), sign));
  return canonicalize(CombState(s.params(), target, std::move(out)));
}

}  // namespace

CombState fourier_comb(const CombState& s) { return transform(s, -1); }

CombState inverse_fourier_comb(const CombState& s) { return transform(s, +1); }

CombState indicator_p(const CombState& s, const Window& window) {
  require_position(s, "indicator_p");
  return inverse_fourier_comb(select_residues(fourier_comb(s), window, Rational(2)));
}

double max_term_difference(const CombState& a, const CombState& b) {
  require_compatible(a, b);
  const Rational period = lcm(a.common_period(), b.common_period());
  auto lhs = accumulate(a.terms(), period);
  const auto rhs = accumulate(b.terms(), period);
  for (const auto& [key, amp] : rhs) lhs[key] -= amp;
  double worst = 0.0;
  for (const auto& [key, amp] : lhs) worst = std::max(worst, std::abs(amp));
  return worst;
}

Complex amplitude_at(const CombState& s, const Rational& u) {
  Complex total{0.0, 0.0};
  for (const auto& c : s.terms()) {
    const Rational k = (u - c.offset) / c.spacing;
    if (k.denominator() != 1) continue;
    total += c.amplitude * turns(c.step_phase * k);
  }
  return total;
}

bool term_equal(const CombState& a, const CombState& b, double tol) {
  return max_term_difference(a, b) <= tol;
}

}  // namespace bakerlab
