#include "fourier_cs/dft.hpp"

#include <cmath>

namespace fcs {

namespace {

bool is_pow2(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

std::size_t next_pow2(std::size_t n) {
  std::size_t m = 1;
  while (m < n) m <<= 1;
  return m;
}

}  // namespace

void fft_pow2(std::vector<cplx>& data, int sign) {
  const std::size_t n = data.size();
  if (!is_pow2(n)) throw std::invalid_argument("fft_pow2: size not a power of two");
  // Bit-reversal permutation.
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(data[i], data[j]);
  }
  for (std::size_t len = 2; len <= n; len <<= 1) {
    const double ang = sign * kTwoPi / static_cast<double>(len);
    const cplx wstep(std::cos(ang), std::sin(ang));
    for (std::size_t i = 0; i < n; i += len) {
      cplx w(1.0, 0.0);
      for (std::size_t k = 0; k < len / 2; ++k) {
        cplx u = data[i + k];
        cplx v = data[i + k + len / 2] * w;
        data[i + k] = u + v;
        data[i + k + len / 2] = u - v;
        w *= wstep;
      }
    }
  }
}

std::vector<cplx> dft(const std::vector<cplx>& input, int sign) {
  const std::size_t n = input.size();
  if (n == 0) return {};
  if (n == 1) return input;
  if (sign != 1 && sign != -1) throw std::invalid_argument("dft: sign must be +-1");

  if (is_pow2(n)) {
    std::vector<cplx> data = input;
    fft_pow2(data, sign);
    return data;
  }

  // Bluestein: X_k = b*_k sum_j (a_j b_j) b*_{k-j}, a chirp convolution.
  // Chirp phases use j^2 mod 2n computed in integers to keep the argument
  // of sin/cos small and exact.
  const std::size_t m = next_pow2(2 * n - 1);
  std::vector<cplx> chirp(n);
  for (std::size_t j = 0; j < n; ++j) {
    u64 sq = mulmod(j, j, 2 * static_cast<u64>(n));
    double ang = sign * (kTwoPi / 2.0) * static_cast<double>(sq) / static_cast<double>(n);
    chirp[j] = cplx(std::cos(ang), std::sin(ang));
  }

  std::vector<cplx> a(m, cplx(0.0, 0.0));
  std::vector<cplx> b(m, cplx(0.0, 0.0));
  for (std::size_t j = 0; j < n; ++j) a[j] = input[j] * chirp[j];
  b[0] = std::conj(chirp[0]);
  for (std::size_t j = 1; j < n; ++j) b[j] = b[m - j] = std::conj(chirp[j]);

  fft_pow2(a, -1);
  fft_pow2(b, -1);
  for (std::size_t j = 0; j < m; ++j) a[j] *= b[j];
  fft_pow2(a, +1);

  const double inv_m = 1.0 / static_cast<double>(m);
  std::vector<cplx> out(n);
  for (std::size_t k = 0; k < n; ++k)
    out[k] = a[k] * inv_m * chirp[k];
  return out;
}

}  // namespace fcs
