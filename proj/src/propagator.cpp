#include "bakerlab/propagator.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <Eigen/Eigenvalues>

#include "bakerlab/kernel.hpp"
#include "bakerlab/theta_space.hpp"

namespace bakerlab {

double UnitaryMatrix::unitarity_deviation() const {
  const auto n = entries.rows();
  const Eigen::MatrixXcd d = entries.adjoint() * entries - Eigen::MatrixXcd::Identity(n, n);
  return d.cwiseAbs().maxCoeff();
}

std::vector<Complex> UnitaryMatrix::eigenvalues() const {
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(entries, /*computeEigenvectors=*/false);
  if (solver.info() != Eigen::Success) throw std::runtime_error("eigenvalue solver failed");
  const auto& ev = solver.eigenvalues();
  return {ev.data(), ev.data() + ev.size()};
}

std::vector<double> UnitaryMatrix::eigenphases() const {
  std::vector<double> phases;
  for (const auto& z : eigenvalues()) phases.push_back(std::arg(z));
  std::sort(phases.begin(), phases.end());
  return phases;
}

CombState momentum_stage(const CombState& s) {
  return ops::E_p(s) + ops::Y_neg_half(ops::O_p(s));
}

CombState apply_F(const CombState& s) {
  if (s.rep() != Rep::position) throw std::invalid_argument("apply_F: position-rep state required");
  if (s.empty()) return s;
  const CombState t = momentum_stage(s);
  const CombState u = ops::L(t) + ops::X_inv(ops::R(t));
  return ops::S(u);
}

UnitaryMatrix dft(int N) {
  if (N < 1) throw std::invalid_argument("dft: N must be positive");
  Eigen::MatrixXcd f(N, N);
  const double scale = 1.0 / std::sqrt(static_cast<double>(N));
  for (int n = 0; n < N; ++n)
    for (int m = 0; m < N; ++m) f(n, m) = scale * turns(Rational(n * m, N));
  return {f};
}

Complex z_phase_at(std::int64_t n, int N) {
  if (N < 1) throw std::invalid_argument("z_phase: N must be positive");
  const Rational r(n, N);
  // Half a turn times the fractional part of n/N.
  return turns((r - Rational(floor_of(r))) / 2);
}

UnitaryMatrix z_phase(int N) {
  Eigen::MatrixXcd z = Eigen::MatrixXcd::Zero(N, N);
  for (int n = 0; n < N; ++n) z(n, n) = z_phase_at(n, N);
  return {z};
}

UnitaryMatrix matrix_F(int N) {
  if (N < 2 || N % 2 != 0) throw std::invalid_argument("matrix form defined for N even only");
  const int half = N / 2;
  // Both DFTs are taken with the e^{-2 pi i n m / N} kernel, the sign used by
  // fourier_comb; with the opposite sign the product disagrees with the comb
  // propagator from N = 4 on (N = 2 cannot tell the two apart).
  const Eigen::MatrixXcd f_half = dft(half).entries.conjugate();
  Eigen::MatrixXcd block = Eigen::MatrixXcd::Zero(N, N);
  block.topLeftCorner(half, half) = f_half;
  block.bottomRightCorner(half, half) = -f_half;
  const Eigen::MatrixXcd z = z_phase(N).entries;
  const Eigen::MatrixXcd z_inv2 = z.adjoint() * z.adjoint();
  // Inverse of the conjugated DFT is the DFT itself.
  return {z * dft(N).entries * block * z_inv2};
}

MatrixCombCheck matrix_vs_comb_check(const ModelParams& params) {
  const int N = params.N;
  const Eigen::MatrixXcd m = matrix_F(N).entries;
  const FiberBasis fb = build_fiber(params, Theta{});

  MatrixCombCheck check;
  check.comb_matrix.resize(N, N);
  for (int col = 0; col < N; ++col) {
    const CombState image = apply_F(fb.basis[col]);
    for (int row = 0; row < N; ++row) check.comb_matrix(row, col) = kernel_form(fb.basis[row], image);
  }
  // Least-squares global phase: C ~ e^{i alpha} M.
  const Complex overlap = (m.conjugate().cwiseProduct(check.comb_matrix)).sum();
  check.global_phase = std::abs(overlap) > 0.0 ? std::arg(overlap) : 0.0;
  const Complex phase = std::polar(1.0, check.global_phase);
  check.deviation = (check.comb_matrix - phase * m).cwiseAbs().maxCoeff();
  return check;
}

CombState odd_residual_state(const ModelParams& params, int m) {
  if (params.N % 2 == 0) throw std::invalid_argument("odd_residual_state: N must be odd");
  const CombState phi = position_basis(params, Theta{Rational(0), Rational(1, 2)}, m);
  return Complex(2.0, 0.0) * ops::S(ops::X_inv(ops::R(momentum_stage(phi))));
}

}  // namespace bakerlab
