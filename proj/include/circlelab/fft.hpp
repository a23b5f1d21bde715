#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "circlelab/util.hpp"

namespace circlelab {

// Smallest power of two >= m. Powers of two serve as the "product of small
// primes" grid sizes; the radix-2 transform below is all we need.
inline std::size_t next_pow2(std::size_t m) {
  std::size_t n = 1;
  while (n < m) n <<= 1;
  return n;
}

// In-place iterative radix-2 FFT. sign = -1: forward (e^{-2pi i jk/N});
// sign = +1: inverse kernel without the 1/N factor.
inline void fft_radix2(std::vector<cplx>& a, int sign) {
  const std::size_t n = a.size();
  if (n == 0 || (n & (n - 1)) != 0) throw std::invalid_argument("fft_radix2: size must be a power of two");
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
  for (std::size_t len = 2; len <= n; len <<= 1) {
    const double ang = sign * kTwoPi / static_cast<double>(len);
    const cplx wlen(std::cos(ang), std::sin(ang));
    for (std::size_t i = 0; i < n; i += len) {
      cplx w(1.0, 0.0);
      for (std::size_t k = 0; k < len / 2; ++k) {
        // refresh the twiddle periodically so recurrence error stays ~64*eps
        if ((k & 63) == 0) w = cplx(std::cos(ang * static_cast<double>(k)), std::sin(ang * static_cast<double>(k)));
        cplx u = a[i + k];
        cplx v = a[i + k + len / 2] * w;
        a[i + k] = u + v;
        a[i + k + len / 2] = u - v;
        w *= wlen;
      }
    }
  }
}

}  // namespace circlelab
