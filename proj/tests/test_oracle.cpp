#include <doctest.h>

#include <cmath>

#include "bakerlab/oracle/fft_oracle.hpp"
#include "bakerlab/oracle/kernel_oracle.hpp"

using namespace bakerlab::oracle;

TEST_SUITE("oracle") {

// Poisson summation by hand: sum_k delta(x - k) has unit Fourier weights on
// the integers, so with the sqrt(N) kernel every weight is 1/sqrt(N).
TEST_CASE("uniform comb") {
  for (int N : {1, 2, 5}) {
    const auto w = fft_momentum_weights({1.0, 0.0, 0, 1, {1.0, 0.0}}, N);
    CHECK(w.box_length == 1.0);
    for (const auto& [j, v] : w.w) CHECK(std::abs(v - std::complex<double>(1.0 / std::sqrt(N), 0.0)) < 1e-7);
  }
}

// A shifted comb picks up e^{-2 pi i j x0}; an alternating one lives on half-integers.
TEST_CASE("shift and alternation") {
  const auto shifted = fft_momentum_weights({1.0, 0.25, 0, 1, {1.0, 0.0}}, 1);
  for (const auto& [j, v] : shifted.w)
    CHECK(std::abs(v - std::polar(1.0, -2.0 * M_PI * j * 0.25)) < 1e-7);
  const auto alt = fft_momentum_weights({1.0, 0.0, 1, 2, {1.0, 0.0}}, 1);
  for (const auto& [j, v] : alt.w) CHECK(std::abs(v) == doctest::Approx(j % 2 ? 1.0 : 0.0).epsilon(1e-7));
  CHECK_THROWS(fft_momentum_weights({0.0, 0.0, 0, 1, {1.0, 0.0}}, 1));
}

TEST_CASE("high-precision kernel") {
  CHECK(kernel_high_precision(0, 1, 3) == std::complex<double>(3.0, 0.0));
  CHECK(std::abs(kernel_high_precision(1, 1, 4)) < 1e-40);
}

}
