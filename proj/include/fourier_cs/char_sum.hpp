#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "fourier_cs/index_set.hpp"

namespace fcs {

/// Numeric tolerance on the exact character-sum identities: q terms of
/// unit modulus accumulated with compensation stay far below this.
inline double char_sum_tolerance(const Field& field) {
  return 1e-9 * static_cast<double>(field.q());
}

enum class QuadraticCase { none, exact_sqrt_q, exact_minus_one };

struct KatzSumReport {
  u64 a = 0;
  cplx value;
  double modulus = 0;
  double bound = 0;  // (n-1)*sqrt(q)
  QuadraticCase quadratic_case = QuadraticCase::none;
  bool pass = false;  // modulus <= bound + tolerance
};

/// S(a) = sum over t in GF(q) of e^{2*pi*i*a*log_g(t-alpha)/(q^n-1)},
/// evaluated from the full-variant log set of the given provenance.
/// Requires 1 <= a <= q^n-2.
KatzSumReport katz_sum(const IndexSet& set, u64 a);

/// The q logarithms {log_g(t-alpha)} recovered from any variant's
/// provenance (quotient indices are recomputed via the dlog table).
std::vector<u64> full_log_set(const IndexSet& set);

struct QuadraticCertificate {
  bool pass = false;
  double max_deviation = 0;
  u64 worst_a = 0;
};

/// For n = 2, sweeps every nontrivial character: S(a) = -1 exactly when
/// (q-1) | a and |S(a)| = sqrt(q) exactly otherwise, within tolerance.
QuadraticCertificate certify_quadratic(const IndexSet& set);

struct BoundCertificate {
  bool pass = false;
  double max_modulus = 0;
  u64 worst_a = 0;
  double bound = 0;
  bool exhaustive = false;
  u64 tested = 0;
  std::vector<u64> histogram;  // counts of |S(a)| over [0, bound], equal bins
  double bin_width = 0;
};

/// Verifies |S(a)| <= (n-1)*sqrt(q) + tolerance: exhaustively over all
/// nontrivial a when q^n-1 <= 10^6, else on 10^4 seeded uniform samples.
/// When sink is non-null it receives every per-character report.
BoundCertificate certify_bound(
    const IndexSet& set, u64 sample_seed = 0x5eedu,
    const std::function<void(const KatzSumReport&)>* sink = nullptr);

/// CSV columns: a, re, im, modulus, bound, pass.
std::string katz_csv_header();
std::string katz_csv_row(const KatzSumReport& rep);

}  // namespace fcs
