#pragma once

#include <vector>

#include "fourier_cs/common.hpp"

namespace fcs {

/// In-place radix-2 transform; size must be a power of two.
/// sign = +1 applies the kernel e^{+2*pi*i*jk/n}, sign = -1 its conjugate.
/// No normalization is applied in either direction.
void fft_pow2(std::vector<cplx>& data, int sign);

/// Discrete Fourier transform of arbitrary length with kernel
/// e^{sign * 2*pi*i*jk/N}; non-power-of-two lengths (including primes) go
/// through Bluestein's chirp-z reduction to a power-of-two convolution.
std::vector<cplx> dft(const std::vector<cplx>& input, int sign);

}  // namespace fcs
