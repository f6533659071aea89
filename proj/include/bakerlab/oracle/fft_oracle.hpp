#pragma once

// Numerical reference for the comb Fourier transform, independent of the
// exact comb engine: the comb is smeared into narrow normalized Gaussians,
// sampled on a dense periodic grid, transformed with FFTW, and the smearing
// width is extrapolated to zero.

#include <complex>
#include <map>

namespace bakerlab::oracle {

/// amp * sum_k e^{2 pi i (phase_num/phase_den) k} delta(x - offset - spacing k)
struct SampledComb {
  double spacing = 1.0;
  double offset = 0.0;
  int phase_num = 0;
  int phase_den = 1;
  std::complex<double> amp{1.0, 0.0};
};

struct FftOracleOptions {
  double sigma = 0.004;        // widest smearing; two halvings follow
  int grid_per_unit = 8192;    // samples per x-unit (rounded up to a power of two overall)
  int max_index = 8;           // |j| range of momenta reported
};

/// Weights w_j of the momentum-space delta comb sum_j w_j delta(p - j/(N L)),
/// where L = phase_den * spacing is the period of the quasi-periodic comb.
/// The Fourier pairing is <p|x> = sqrt(N) e^{-2 pi i N p x}.
struct MomentumWeights {
  double box_length = 0.0;               // L
  std::map<int, std::complex<double>> w;  // j -> weight
  double momentum(int j, int N) const { return j / (N * box_length); }
};

MomentumWeights fft_momentum_weights(const SampledComb& comb, int N, const FftOracleOptions& opt = {});

}  // namespace bakerlab::oracle
