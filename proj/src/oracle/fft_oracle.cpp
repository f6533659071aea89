#include "bakerlab/oracle/fft_oracle.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include <fftw3.h>

namespace bakerlab::oracle {

namespace {

using cd = std::complex<double>;

std::size_t next_pow2(std::size_t n) {
  std::size_t p = 1;
  while (p < n) p <<= 1;
  return p;
}

// Fourier-series coefficients c_j (|j| <= max_index) of the periodized,
// Gaussian-smeared comb on [0, L).
std::map<int, cd> smeared_coefficients(const SampledComb& comb, double L, double sigma,
                                       std::size_t M, int max_index) {
  const double pi = std::numbers::pi;
  const double h = L / static_cast<double>(M);
  const double norm = 1.0 / (sigma * std::sqrt(2.0 * pi));
  const double reach = 12.0 * sigma;

  std::vector<cd> samples(M, cd{0.0, 0.0});
  const int points_per_box = comb.phase_den;
  const double phase = static_cast<double>(comb.phase_num) / comb.phase_den;
  for (int k = 0; k < points_per_box; ++k) {
    const double xk = comb.offset + comb.spacing * k;
    const cd a = comb.amp * std::polar(1.0, 2.0 * pi * phase * k);
    for (int image = -1; image <= 1; ++image) {
      const double centre = xk + image * L;
      const auto lo = static_cast<long long>(std::ceil((centre - reach) / h));
      const auto hi = static_cast<long long>(std::floor((centre + reach) / h));
      for (long long i = lo; i <= hi; ++i) {
        if (i < 0 || i >= static_cast<long long>(M)) continue;
        const double d = i * h - centre;
        samples[static_cast<std::size_t>(i)] += a * norm * std::exp(-0.5 * d * d / (sigma * sigma));
      }
    }
  }

  std::vector<cd> spectrum(M);
  fftw_plan plan = fftw_plan_dft_1d(static_cast<int>(M), reinterpret_cast<fftw_complex*>(samples.data()),
                                    reinterpret_cast<fftw_complex*>(spectrum.data()), FFTW_FORWARD,
                                    FFTW_ESTIMATE);
  fftw_execute(plan);
  fftw_destroy_plan(plan);

  std::map<int, cd> coeffs;
  for (int j = -max_index; j <= max_index; ++j) {
    const std::size_t idx = j >= 0 ? static_cast<std::size_t>(j) : M - static_cast<std::size_t>(-j);
    coeffs[j] = spectrum[idx] / static_cast<double>(M);
  }
  return coeffs;
}

}  // namespace

MomentumWeights fft_momentum_weights(const SampledComb& comb, int N, const FftOracleOptions& opt) {
  if (N < 1 || comb.phase_den < 1 || comb.spacing <= 0.0) throw std::invalid_argument("bad oracle input");
  MomentumWeights out;
  out.box_length = comb.spacing * comb.phase_den;
  const double L = out.box_length;
  const std::size_t M = next_pow2(static_cast<std::size_t>(std::ceil(L * opt.grid_per_unit)));

  const auto c1 = smeared_coefficients(comb, L, opt.sigma, M, opt.max_index);
  const auto c2 = smeared_coefficients(comb, L, opt.sigma / 2, M, opt.max_index);
  const auto c4 = smeared_coefficients(comb, L, opt.sigma / 4, M, opt.max_index);
  const double rootN = std::sqrt(static_cast<double>(N));
  for (int j = -opt.max_index; j <= opt.max_index; ++j) {
    // Richardson extrapolation in sigma^2, two levels.
    const cd r1 = (4.0 * c2.at(j) - c1.at(j)) / 3.0;
    const cd r2 = (4.0 * c4.at(j) - c2.at(j)) / 3.0;
    out.w[j] = (16.0 * r2 - r1) / 15.0 / rootN;
  }
  return out;
}

}  // namespace bakerlab::oracle
