#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "fourier_cs/dft.hpp"
#include "fourier_cs/rng.hpp"

using namespace fcs;

namespace {

// O(N^2) reference transform, the oracle for every fast path.
std::vector<cplx> dft_naive(const std::vector<cplx>& x, int sign) {
  const std::size_t n = x.size();
  std::vector<cplx> out(n, cplx(0.0, 0.0));
  for (std::size_t k = 0; k < n; ++k) {
    CompensatedSum sum;
    for (std::size_t j = 0; j < n; ++j) {
      double ang = sign * kTwoPi * static_cast<double>(j) *
                   static_cast<double>(k) / static_cast<double>(n);
      sum.add(x[j] * cplx(std::cos(ang), std::sin(ang)));
    }
    out[k] = sum.value();
  }
  return out;
}

std::vector<cplx> random_vector(std::size_t n, Rng& rng) {
  std::vector<cplx> x(n);
  for (auto& v : x) v = rng.complex_gaussian();
  return x;
}

double max_abs_diff(const std::vector<cplx>& a, const std::vector<cplx>& b) {
  double worst = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    worst = std::max(worst, std::abs(a[i] - b[i]));
  return worst;
}

}  // namespace

TEST_CASE("fast transform equals the naive oracle on assorted lengths") {
  Rng rng(0xdf7);
  // Powers of two, primes, prime powers, and the fixture lengths.
  for (std::size_t n : {1u, 2u, 3u, 4u, 5u, 7u, 8u, 12u, 16u, 27u, 31u, 64u,
                        97u, 128u, 240u, 381u, 443u, 840u}) {
    std::vector<cplx> x = random_vector(n, rng);
    for (int sign : {+1, -1}) {
      std::vector<cplx> fast = dft(x, sign);
      std::vector<cplx> slow = dft_naive(x, sign);
      CHECK(max_abs_diff(fast, slow) < 1e-9 * std::sqrt(static_cast<double>(n)));
    }
  }
}

TEST_CASE("delta input transforms to all-ones") {
  std::vector<cplx> delta(381, cplx(0.0, 0.0));
  delta[0] = cplx(1.0, 0.0);
  for (cplx v : dft(delta, +1)) CHECK(std::abs(v - cplx(1.0, 0.0)) < 1e-12);
}

TEST_CASE("forward then conjugate transform scales by n") {
  Rng rng(99);
  for (std::size_t n : {11u, 24u, 840u}) {
    std::vector<cplx> x = random_vector(n, rng);
    std::vector<cplx> back = dft(dft(x, +1), -1);
    for (std::size_t i = 0; i < n; ++i)
      CHECK(std::abs(back[i] / static_cast<double>(n) - x[i]) < 1e-11);
  }
}

TEST_CASE("parseval on a large prime length") {
  Rng rng(5);
  const std::size_t n = 99991;  // prime, exercises the chirp path at size
  std::vector<cplx> x = random_vector(n, rng);
  std::vector<cplx> X = dft(x, +1);
  double ex = 0, eX = 0;
  for (const cplx& v : x) ex += std::norm(v);
  for (const cplx& v : X) eX += std::norm(v);
  CHECK(std::abs(eX / static_cast<double>(n) - ex) < 1e-6 * ex);
}

TEST_CASE("fft_pow2 rejects non-powers of two") {
  std::vector<cplx> x(12);
  CHECK_THROWS_AS(fft_pow2(x, +1), std::invalid_argument);
}
