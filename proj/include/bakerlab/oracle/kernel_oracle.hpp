#pragma once

#include <complex>

namespace bakerlab::oracle {

/// K(x, y) = sin(pi N (x-y)) / (pi (x-y)) exp(-(pi N/2)((x-y)^2 + i (x-y)))
/// evaluated in 50-digit binary floating point from the exact difference
/// num/den, then rounded to double.
std::complex<double> kernel_high_precision(long long num, long long den, int N);

}  // namespace bakerlab::oracle
