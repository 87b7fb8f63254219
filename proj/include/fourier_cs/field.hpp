#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fourier_cs/common.hpp"

namespace fcs {

using Coeffs = std::vector<std::int32_t>;

/// Element of GF(p^(a*n)): coefficient vector over GF(p), constant term
/// first, always reduced to canonical form (length a*n, entries in [0,p)).
struct FieldElement {
  Coeffs c;
  bool operator==(const FieldElement&) const = default;
};

struct Factorization {
  std::vector<std::pair<u64, int>> factors;  // (prime, exponent), ascending
  u64 value() const;
};

/// Complete prime factorization by trial division; rejects inputs whose
/// unfactored cofactor cannot be certified prime at desk scale.
Factorization factor_u64(u64 n);

/// GF(q^n) with q = p^a, represented as GF(p)[x]/(modulus) with a monic
/// irreducible modulus of degree a*n. Immutable after construction; all
/// operations are pure.
class Field {
 public:
  /// Empty sentinel; real fields come from make().
  Field() = default;

  /// Validates p prime and the modulus monic irreducible of degree a*n;
  /// when no modulus is supplied, picks the first irreducible monic
  /// polynomial in ascending coefficient-tuple order (constant term
  /// varying fastest).
  static Field make(i64 p, int a, int n,
                    const std::optional<Coeffs>& modulus = std::nullopt);

  i64 p() const { return p_; }
  int a() const { return a_; }
  int n() const { return n_; }
  int degree() const { return a_ * n_; }
  u64 q() const { return q_; }                      // p^a
  u64 order() const { return order_; }              // p^(a*n)
  u64 group_order() const { return order_ - 1; }    // q^n - 1
  const Coeffs& modulus() const { return modulus_; }

  FieldElement zero() const;
  FieldElement one() const;
  FieldElement gen() const;                 // residue class of x
  FieldElement from_int(i64 t) const;       // constant polynomial t mod p
  FieldElement element(const Coeffs& raw) const;  // reduce into canon. form

  bool is_zero(const FieldElement& e) const;
  FieldElement add(const FieldElement& x, const FieldElement& y) const;
  FieldElement sub(const FieldElement& x, const FieldElement& y) const;
  FieldElement neg(const FieldElement& x) const;
  FieldElement mul(const FieldElement& x, const FieldElement& y) const;
  /// Exponent is reduced mod group_order for nonzero base; 0^k = 0 for
  /// k > 0, 0^0 = 1, and 0^k with k < 0 is an error.
  FieldElement pow(const FieldElement& x, i64 k) const;
  FieldElement inv(const FieldElement& x) const;

  /// Coefficient vector packed base p; bijective on elements, < order().
  u64 encode(const FieldElement& e) const;
  FieldElement decode(u64 code) const;

  Factorization factor_group_order() const;
  /// g^(group_order/l) != 1 for every prime factor l.
  bool is_primitive(const FieldElement& g, const Factorization& fact) const;
  /// First element in ascending coefficient-tuple order that is primitive.
  /// Capped at order() <= 2^24.
  FieldElement find_primitive_root() const;

  /// Size of the orbit of e under x -> x^q; equals n exactly when e
  /// generates GF(q^n) over GF(q).
  int frobenius_orbit_size(const FieldElement& e) const;
  /// The q elements of the subfield GF(q), enumerated through a primitive
  /// root g of the full field as {0} and the powers g^(k*(q^n-1)/(q-1)).
  std::vector<FieldElement> subfield(const FieldElement& g) const;

  bool operator==(const Field& other) const {
    return p_ == other.p_ && a_ == other.a_ && n_ == other.n_ &&
           modulus_ == other.modulus_;
  }

 private:
  FieldElement pow_u64(const FieldElement& x, u64 k) const;

  i64 p_ = 0;
  int a_ = 0, n_ = 0;
  Coeffs modulus_;
  u64 q_ = 0, order_ = 0;
};

}  // namespace fcs
