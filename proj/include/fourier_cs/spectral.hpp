#pragma once

#include <span>
#include <string>
#include <vector>

#include "fourier_cs/sensing_matrix.hpp"

namespace fcs {

using HermitianMatrix = std::vector<std::vector<cplx>>;

/// G = Phi_T^* Phi_T for the distinct column indices T; unit diagonal.
HermitianMatrix gram(const SensingMatrix& mat, std::span<const u64> T);

/// Eigenvalues (ascending) by cyclic complex Jacobi rotations, iterated
/// until the off-diagonal Frobenius norm falls below 1e-12 * ||G||.
/// Input must be Hermitian within 1e-10.
std::vector<double> hermitian_eigs(HermitianMatrix G);

struct EigStatsRow {
  std::size_t k = 0;
  std::size_t samples = 0;
  double min_min = 0, min_mean = 0, max_mean = 0, max_max = 0;
  std::string arm;
  std::size_t envelope_violations = 0;  // vs 1 +- (k-1)*mu, when mu given
};

struct EigSweepConfig {
  std::size_t k_min = 1, k_max = 20;
  std::size_t samples = 5'000;
  u64 seed = 0;
  unsigned threads = 0;
  /// Coherence of the matrix; enables the Gershgorin envelope check
  /// lambda in [1 - (k-1)mu - 1e-6, 1 + (k-1)mu + 1e-6] per sample.
  double mu = -1;
};

/// For each k draws `samples` uniform k-subsets of columns and records the
/// extreme eigenvalues of their Gram matrices. Per-sample seeds derive
/// from the master seed; aggregation is order-independent.
std::vector<EigStatsRow> run_eig_sweep(const SensingMatrix& mat,
                                       const EigSweepConfig& cfg,
                                       const std::string& arm_label);

std::string eig_csv(const std::vector<EigStatsRow>& rows);

struct EigConfig {
  std::string matrix_path;
  bool arm_deterministic = true;
  bool arm_random = true;
  std::size_t k_min = 1, k_max = 20;
  std::size_t samples = 5'000;
  u64 seed = 0;
  unsigned threads = 0;
};

EigConfig parse_eig_config(const std::string& text);

}  // namespace fcs
