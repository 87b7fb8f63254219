#pragma once

#include <unordered_map>

#include "fourier_cs/field.hpp"

namespace fcs {

/// Shanks baby-step/giant-step discrete logarithms in GF(q^n)*.
/// Construction stores K = ceil(sqrt(q^n - 1)) baby steps (g^j -> j);
/// each query walks at most K giant steps g^(-K). Immutable after build.
class DlogTable {
 public:
  /// Requires g primitive (checked).
  DlogTable(Field field, FieldElement g);

  u64 K() const { return K_; }
  const FieldElement& base() const { return g_; }
  const Field& field() const { return field_; }
  const std::unordered_map<u64, u64>& baby_steps() const { return baby_; }

  /// log_g(u) in [0, q^n - 1); error on u = 0.
  u64 log(const FieldElement& u) const;

 private:
  Field field_;
  FieldElement g_;
  FieldElement giant_;  // g^(-K)
  u64 K_;
  std::unordered_map<u64, u64> baby_;
};

}  // namespace fcs
