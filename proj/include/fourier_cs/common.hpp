#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

namespace fcs {

using u64 = std::uint64_t;
using i64 = std::int64_t;
using cplx = std::complex<double>;

inline constexpr const char* kVersion = "0.1.0";
inline constexpr double kTwoPi = 6.283185307179586476925286766559;

/// (a * b) mod n without overflow, for n < 2^63.
inline u64 mulmod(u64 a, u64 b, u64 n) {
  return static_cast<u64>((static_cast<unsigned __int128>(a) * b) % n);
}

/// Kahan-compensated complex accumulator in extended precision.
class CompensatedSum {
 public:
  void add(cplx v) {
    add_part(re_, cre_, static_cast<long double>(v.real()));
    add_part(im_, cim_, static_cast<long double>(v.imag()));
  }
  cplx value() const {
    return {static_cast<double>(re_), static_cast<double>(im_)};
  }

 private:
  static void add_part(long double& s, long double& c, long double v) {
    long double y = v - c;
    long double t = s + y;
    c = (t - s) - y;
    s = t;
  }
  long double re_ = 0, im_ = 0, cre_ = 0, cim_ = 0;
};

/// Runs fn(i) for i in [0, count) across `threads` workers (0 = hardware
/// default). Work items must be independent; any exception is rethrown on
/// the calling thread after all workers join.
void parallel_for(std::size_t count, unsigned threads,
                  const std::function<void(std::size_t)>& fn);

}  // namespace fcs
