#pragma once

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fourier_cs/index_set.hpp"

namespace fcs {

/// Shared unit-circle table e^{2*pi*i*k/N}, k in [0,N).
using Twiddles = std::shared_ptr<const std::vector<cplx>>;
Twiddles make_twiddles(u64 N);

/// Column-normalized partial Fourier matrix scale * F_M^(N) with entry
/// (r, j) = scale * e^{2*pi*i*j*m_r/N}. Never stored dense: columns, inner
/// products, and operator applications are generated from (N, M, scale).
class SensingMatrix {
 public:
  /// Deterministic construction; scale = 1/sqrt(q) for full/quotient,
  /// 1/sqrt(q+1) for the amub variant.
  explicit SensingMatrix(IndexSet set, Twiddles shared = nullptr);
  /// Baseline: arbitrary distinct rows of F^(N), scale = 1/sqrt(m).
  static SensingMatrix from_rows(u64 N, std::vector<u64> rows,
                                 Twiddles shared = nullptr);

  u64 cols() const { return N_; }
  std::size_t row_count() const { return rows_.size(); }
  double scale() const { return scale_; }
  const std::vector<u64>& row_indices() const { return rows_; }
  const IndexSet* index_set() const { return set_ ? &*set_ : nullptr; }
  /// (n-1)/sqrt(q) for full/quotient provenance, NaN otherwise.
  double mu_bound() const;

  cplx entry(std::size_t r, u64 j) const;
  std::vector<cplx> column(u64 j) const;
  /// <Phi_j, Phi_k> = scale^2 * sum_m e^{2*pi*i*(j-k)*m/N}; depends on
  /// (j - k) mod N only.
  cplx column_inner(u64 j, u64 k) const;
  cplx inner_by_shift(u64 d) const;
  /// All N shift inner products in one O(N*m) pass.
  std::vector<cplx> inner_profile() const;

  /// y = Phi x for dense x (length N).
  std::vector<cplx> apply(std::span<const cplx> x) const;
  /// y = Phi beta without densifying beta.
  std::vector<cplx> apply_sparse(std::span<const u64> support,
                                 std::span<const cplx> values) const;
  /// z = Phi^* y (length N).
  std::vector<cplx> adjoint(std::span<const cplx> y) const;

  /// max |(Phi Phi^*)_{rs} - N*scale^2*delta_{rs}| over all row pairs.
  double row_gram_deviation() const;

 private:
  SensingMatrix() = default;
  u64 N_ = 0;
  std::vector<u64> rows_;
  double scale_ = 0;
  std::optional<IndexSet> set_;
  Twiddles tw_;
};

struct CoherenceReport {
  double mu = 0;
  u64 arg_j = 0, arg_k = 0;  // a pair attaining mu
  double welch = 0;          // sqrt((N-m)/((N-1)m))
  double bound = 0;          // (n-1)/sqrt(q); NaN when not applicable
  int k_max = 0;             // largest k with mu < 1/(2k-1)
};

/// Exact mu through the shift structure, O(N*m); desk cap N <= 10^4.
CoherenceReport coherence_bruteforce(const SensingMatrix& mat);
/// mu via a length-N transform of the row indicator; supports N <= 10^6
/// and matches coherence_bruteforce within 1e-9.
CoherenceReport coherence_fft(const SensingMatrix& mat);

struct AmubReport {
  bool pass = false;
  double max_unitary_dev = 0;   // worst |Gram - I| entry within any block
  double lo = 0, hi = 0;        // (sqrt(q)-+1)/(q+1) cross-block envelope
  double min_cross = 0, max_cross = 0;
  u64 bad_j = 0, bad_k = 0;     // an offending pair when pass = false
};

/// Certifies that every block's columns are orthonormal (within 1e-9) and
/// every cross-block inner-product modulus lies in [lo, hi] (within 1e-9).
AmubReport certify_amub(const SensingMatrix& mat, const AmubPartition& part);

/// CSV with a header row; entries formatted re+imi at 17 significant digits.
std::string dense_csv(const SensingMatrix& mat);

}  // namespace fcs
