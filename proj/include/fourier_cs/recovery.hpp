#pragma once

#include <span>
#include <string>
#include <vector>

#include "fourier_cs/sensing_matrix.hpp"

namespace fcs {

struct SparseSignal {
  u64 N = 0;
  std::vector<u64> support;  // sorted, distinct
  std::vector<cplx> values;  // nonzero, aligned with support
};

enum class SignalModel { complex_gaussian, unit_modulus };
std::string signal_model_name(SignalModel m);
SignalModel signal_model_from_name(const std::string& name);

/// Support uniform over k-subsets of [0,N); coefficients per model.
/// Identical seed yields an identical signal.
SparseSignal gen_signal(u64 N, std::size_t k, SignalModel model, u64 seed);

/// y = Phi * beta, computed on the support only.
std::vector<cplx> measure(const SensingMatrix& mat, const SparseSignal& signal);

enum class SolveStatus { ok, non_converged, singular_gram };

struct RecoveryOutcome {
  std::vector<cplx> estimate;
  double residual_norm = 0;
  bool success = false;  // set by the harness against the ground truth
  std::size_t iterations = 0;
  std::string method;
  SolveStatus status = SolveStatus::ok;
};

/// ||est - beta||_2 / ||beta||_2.
double relative_error(std::span<const cplx> estimate, const SparseSignal& truth);

/// Orthogonal matching pursuit: greedy max-correlation selection with a
/// least-squares refit on the growing support via an incrementally updated
/// Gram-Schmidt QR. Stops after k_max picks or when the residual drops
/// below residual_tol_rel * ||y||. A selected submatrix with condition
/// estimate above 10^12 is reported as singular_gram, not continued.
RecoveryOutcome omp(const SensingMatrix& mat, std::span<const cplx> y,
                    std::size_t k_max, double residual_tol_rel = 1e-12);

struct BpParams {
  double rho = 1.0;          // ADMM penalty / step parameter
  double gap_tol = 1e-7;     // relative duality-gap tolerance
  std::size_t max_iters = 50'000;
  std::size_t check_every = 25;
};

/// Complex basis pursuit min ||gamma||_1 s.t. Phi gamma = y by operator
/// splitting: exact projection onto the affine constraint through the row
/// Gram identity Phi Phi^* = (N scale^2) I, alternated with complex
/// soft-thresholding. The returned iterate is the projected (feasible) one.
RecoveryOutcome basis_pursuit(const SensingMatrix& mat, std::span<const cplx> y,
                              const BpParams& params = {});

struct ExperimentConfig {
  std::string matrix_path;
  bool arm_deterministic = true;
  bool arm_random = true;
  std::size_t k_min = 1, k_max = 20;
  std::size_t trials = 100;
  SignalModel model = SignalModel::complex_gaussian;
  double success_tol = 1e-4;
  u64 seed = 0;
  bool method_omp = true;
  bool method_bp = true;
  double omp_residual_tol = 1e-12;
  BpParams bp;
  unsigned threads = 0;
};

/// Parses the key=value experiment file (keys named after the fields:
/// matrix, arms, k_min, k_max, trials, model, success_tol, seed, plus
/// optional methods, omp_residual_tol, bp_gap_tol, bp_max_iters, threads).
ExperimentConfig parse_experiment_config(const std::string& text);

struct SweepRow {
  std::size_t k = 0;
  std::string method;
  std::string arm;
  std::size_t trials = 0;
  std::size_t successes = 0;
  double rate = 0;
};

struct SweepResult {
  std::vector<SweepRow> rows;
  std::size_t flagged = 0;  // trials with non-converged/singular outcomes
};

/// Per (k, arm, trial): one signal, measured and recovered by each enabled
/// method; the random arm redraws m distinct rows of F^(N) per trial.
/// Per-trial seeds derive from the master seed, so results are independent
/// of scheduling and identical configs give identical tables.
SweepResult run_success_sweep(const SensingMatrix& det, const ExperimentConfig& cfg);

std::string sweep_csv(const std::vector<SweepRow>& rows);

}  // namespace fcs
