#include "fourier_cs/dlog.hpp"

#include <cmath>

namespace fcs {

namespace {

u64 ceil_sqrt(u64 n) {
  u64 r = static_cast<u64>(std::sqrt(static_cast<long double>(n)));
  while (r * r >= n && r > 0) --r;
  while (r * r < n) ++r;
  return r;
}

}  // namespace

DlogTable::DlogTable(Field field, FieldElement g)
    : field_(std::move(field)), g_(std::move(g)) {
  if (!field_.is_primitive(g_, field_.factor_group_order()))
    throw std::invalid_argument("DlogTable: base is not a primitive root");
  u64 N = field_.group_order();
  K_ = ceil_sqrt(N);
  baby_.reserve(K_);
  FieldElement cur = field_.one();
  for (u64 j = 0; j < K_; ++j) {
    baby_.emplace(field_.encode(cur), j);
    cur = field_.mul(cur, g_);
  }
  giant_ = field_.inv(field_.pow(g_, static_cast<i64>(K_)));
}

u64 DlogTable::log(const FieldElement& u) const {
  if (field_.is_zero(u))
    throw std::invalid_argument("log: zero has no discrete logarithm");
  u64 N = field_.group_order();
  FieldElement cur = u;
  for (u64 i = 0; i < K_; ++i) {
    auto it = baby_.find(field_.encode(cur));
    if (it != baby_.end()) return (i * K_ + it->second) % N;
    cur = field_.mul(cur, giant_);
  }
  throw std::logic_error("log: element not reached; table inconsistent");
}

}  // namespace fcs
