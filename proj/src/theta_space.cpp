#include "bakerlab/theta_space.hpp"

#include <cmath>
#include <map>
#include <stdexcept>

#include "bakerlab/kernel.hpp"

namespace bakerlab {

Theta Theta::make(const Rational& t1, const Rational& t2) { return Theta{frac(t1), frac(t2)}; }

Theta Theta::parse(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos || text.find(',', comma + 1) != std::string::npos)
    throw std::invalid_argument("theta must be written 'p/q,p/q': '" + text + "'");
  const Rational t1 = parse_rational(std::string_view(text).substr(0, comma));
  const Rational t2 = parse_rational(std::string_view(text).substr(comma + 1));
  if (t1 < Rational(0) || t1 >= Rational(1) || t2 < Rational(0) || t2 >= Rational(1))
    throw std::invalid_argument("theta components must lie in [0, 1): '" + text + "'");
  return Theta{t1, t2};
}

std::string Theta::to_string() const {
  return format_rational(theta1) + "," + format_rational(theta2);
}

namespace {

void check_index(const ModelParams& params, int m, const char* what) {
  if (m < 0 || m >= params.N)
    throw std::out_of_range(std::string(what) + " index must lie in [0, N)");
}

}  // namespace

CombState position_basis(const ModelParams& params, const Theta& theta, int m) {
  check_index(params, m, "position_basis");
  const Rational N(params.N);
  const Complex amp = turns(theta.theta2 * Rational(m) / N) / std::sqrt(static_cast<double>(params.N));
  return CombState(params, Rep::position,
                   {Comb{Rational(1), (theta.theta1 + Rational(m)) / N, theta.theta2, amp}});
}

CombState momentum_basis(const ModelParams& params, const Theta& theta, int n) {
  check_index(params, n, "momentum_basis");
  const Rational N(params.N);
  const Complex amp = turns(-Rational(n) * theta.theta1 / N) / std::sqrt(static_cast<double>(params.N));
  return CombState(params, Rep::momentum,
                   {Comb{Rational(1), (theta.theta2 + Rational(n)) / N, -theta.theta1, amp}});
}

FiberBasis build_fiber(const ModelParams& params, const Theta& theta, bool with_momentum) {
  FiberBasis fb{params, theta, {}, {}};
  fb.basis.reserve(static_cast<std::size_t>(params.N));
  for (int m = 0; m < params.N; ++m) fb.basis.push_back(position_basis(params, theta, m));
  if (with_momentum) {
    for (int n = 0; n < params.N; ++n) fb.momentum.push_back(momentum_basis(params, theta, n));
  }
  return fb;
}

Eigen::MatrixXcd gram_matrix(const FiberBasis& fb) {
  const int n = fb.dim();
  Eigen::MatrixXcd g(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) g(i, j) = kernel_form(fb.basis[i], fb.basis[j]);
  return g;
}

std::vector<FiberComponent> fiber_decompose(const CombState& input) {
  const CombState s = input.rep() == Rep::position ? input : inverse_fourier_comb(input);
  const ModelParams& params = s.params();
  const Rational N(params.N);

  std::map<Theta, std::vector<Comb>> pieces;
  for (const auto& c : s.terms()) {
    // Refine to an integer period M, then split the spacing-M comb over the
    // M characters of Y: phases (phi + j)/M, each with weight 1/M.
    const Rational period = lcm(c.spacing, Rational(1));
    const std::int64_t M = period.numerator();
    for (const auto& sub : refine(c, (period / c.spacing).numerator())) {
      for (std::int64_t j = 0; j < M; ++j) {
        const Rational phase = (sub.step_phase + Rational(j)) / Rational(M);
        const Comb unit = make_comb(Rational(1), sub.offset, phase, sub.amplitude / static_cast<double>(M));
        pieces[Theta::make(N * unit.offset, unit.step_phase)].push_back(unit);
      }
    }
  }

  std::vector<FiberComponent> out;
  for (auto& [theta, combs] : pieces) {
    CombState part = canonicalize(CombState(params, Rep::position, std::move(combs)));
    if (part.empty()) continue;
    Eigen::VectorXcd coords = Eigen::VectorXcd::Zero(params.N);
    for (const auto& c : part.terms()) {
      const Rational index = N * c.offset - theta.theta1;
      const auto m = index.numerator();
      const Complex basis_amp =
          turns(theta.theta2 * Rational(m) / N) / std::sqrt(static_cast<double>(params.N));
      coords(static_cast<Eigen::Index>(m)) = c.amplitude / basis_amp;
    }
    out.push_back(FiberComponent{theta, std::move(part), std::move(coords)});
  }
  return out;
}

CombState fiber_component(const CombState& s, const Theta& theta) {
  for (auto& fc : fiber_decompose(s)) {
    if (fc.theta == theta) return fc.state;
  }
  return CombState(s.params(), Rep::position);
}

double fiber_norm(const CombState& s) {
  double sq = 0.0;
  for (const auto& fc : fiber_decompose(s)) sq += kernel_form(fc.state, fc.state).real();
  return std::sqrt(std::max(sq, 0.0));
}

Projection fiber_project(const CombState& s, const FiberBasis& fb) {
  if (s.rep() != Rep::position) throw std::invalid_argument("fiber_project: position-rep state required");
  const CombState inside = fiber_component(s, fb.theta);
  Projection p;
  p.coeffs = Eigen::VectorXcd::Zero(fb.dim());
  for (int m = 0; m < fb.dim(); ++m) p.coeffs(m) = kernel_form(fb.basis[m], inside);
  CombState rest = s;
  for (int m = 0; m < fb.dim(); ++m) rest -= p.coeffs(m) * fb.basis[m];
  p.residual = fiber_norm(rest);
  return p;
}

XYResidual xy_residual(const CombState& s, const Theta& theta) {
  if (s.rep() != Rep::position) throw std::invalid_argument("xy_residual: position-rep state required");
  const double norm = fiber_norm(s);
  if (!(norm > 0.0)) throw std::invalid_argument("xy_residual: zero-norm state");
  const CombState dx = ops::X(s) - turns(theta.theta1) * s;
  const CombState dy = ops::Y(s) - turns(theta.theta2) * s;
  return {fiber_norm(dx) / norm, fiber_norm(dy) / norm};
}

}  // namespace bakerlab
