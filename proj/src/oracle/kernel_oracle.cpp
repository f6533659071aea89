#include "bakerlab/oracle/kernel_oracle.hpp"

#include <stdexcept>

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

namespace bakerlab::oracle {

std::complex<double> kernel_high_precision(long long num, long long den, int N) {
  using boost::multiprecision::cpp_bin_float_50;
  if (den == 0 || N < 1) throw std::invalid_argument("bad kernel oracle input");
  if (num == 0) return {static_cast<double>(N), 0.0};
  const cpp_bin_float_50 pi = boost::math::constants::pi<cpp_bin_float_50>();
  const cpp_bin_float_50 d = cpp_bin_float_50(num) / cpp_bin_float_50(den);
  const cpp_bin_float_50 sinc = sin(pi * N * d) / (pi * d);
  const cpp_bin_float_50 a = pi * N / 2;
  const cpp_bin_float_50 mag = sinc * exp(-a * d * d);
  const cpp_bin_float_50 re = mag * cos(a * d);
  const cpp_bin_float_50 im = -mag * sin(a * d);
  return {static_cast<double>(re), static_cast<double>(im)};
}

}  // namespace bakerlab::oracle
