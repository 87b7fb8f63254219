#include "fourier_cs/recovery.hpp"

#include <algorithm>
#include <cmath>

#include "fourier_cs/io.hpp"
#include "fourier_cs/rng.hpp"

namespace fcs {

namespace {

double norm2(std::span<const cplx> v) {
  double s = 0;
  for (const cplx& x : v) s += std::norm(x);
  return std::sqrt(s);
}

cplx dot_conj(std::span<const cplx> a, std::span<const cplx> b) {
  cplx s(0.0, 0.0);
  for (std::size_t i = 0; i < a.size(); ++i) s += std::conj(a[i]) * b[i];
  return s;
}

cplx soft_threshold(cplx v, double tau) {
  double mag = std::abs(v);
  if (mag <= tau) return {0.0, 0.0};
  return v * ((mag - tau) / mag);
}

}  // namespace

std::string signal_model_name(SignalModel m) {
  return m == SignalModel::complex_gaussian ? "complex_gaussian" : "unit_modulus";
}

SignalModel signal_model_from_name(const std::string& name) {
  if (name == "complex_gaussian") return SignalModel::complex_gaussian;
  if (name == "unit_modulus") return SignalModel::unit_modulus;
  throw std::invalid_argument("unknown signal model '" + name + "'");
}

SparseSignal gen_signal(u64 N, std::size_t k, SignalModel model, u64 seed) {
  if (k < 1 || k > N)
    throw std::invalid_argument("gen_signal: k must be in [1, N]");
  Rng rng(seed);
  SparseSignal sig;
  sig.N = N;
  sig.support = rng.sample_distinct(N, k);
  sig.values.reserve(k);
  for (std::size_t i = 0; i < k; ++i) {
    cplx v(0.0, 0.0);
    while (v == cplx(0.0, 0.0))
      v = model == SignalModel::complex_gaussian ? rng.complex_gaussian()
                                                 : rng.unit_modulus();
    sig.values.push_back(v);
  }
  return sig;
}

std::vector<cplx> measure(const SensingMatrix& mat, const SparseSignal& signal) {
  if (signal.N != mat.cols())
    throw std::invalid_argument("measure: dimension mismatch");
  return mat.apply_sparse(signal.support, signal.values);
}

double relative_error(std::span<const cplx> estimate, const SparseSignal& truth) {
  double err = 0, ref = 0;
  std::size_t s = 0;
  for (u64 j = 0; j < truth.N; ++j) {
    cplx b(0.0, 0.0);
    if (s < truth.support.size() && truth.support[s] == j) b = truth.values[s++];
    err += std::norm(estimate[j] - b);
    ref += std::norm(b);
  }
  return std::sqrt(err) / std::sqrt(ref);
}

RecoveryOutcome omp(const SensingMatrix& mat, std::span<const cplx> y,
                    std::size_t k_max, double residual_tol_rel) {
  if (y.size() != mat.row_count())
    throw std::invalid_argument("omp: measurement dimension mismatch");
  if (k_max > mat.row_count())
    throw std::invalid_argument("omp: k_max exceeds row count");

  RecoveryOutcome out;
  out.method = "omp";
  out.estimate.assign(mat.cols(), cplx(0.0, 0.0));

  const double norm_y = norm2(y);
  if (norm_y == 0.0) return out;

  const std::size_t m = mat.row_count();
  std::vector<std::vector<cplx>> q_cols;          // orthonormal columns
  std::vector<std::vector<cplx>> r_cols;          // R, column-major upper
  std::vector<u64> support;
  std::vector<char> selected(mat.cols(), 0);
  std::vector<cplx> residual(y.begin(), y.end());
  double diag_max = 0, diag_min = 0;

  while (support.size() < k_max) {
    std::vector<cplx> corr = mat.adjoint(residual);
    u64 best = mat.cols();
    double best_mag = 0;
    for (u64 j = 0; j < mat.cols(); ++j) {
      if (selected[j]) continue;
      double mag = std::abs(corr[j]);
      if (mag > best_mag) {
        best_mag = mag;
        best = j;
      }
    }
    if (best == mat.cols() || best_mag <= 1e-14 * norm_y) break;

    // Gram-Schmidt with one reorthogonalization pass.
    std::vector<cplx> v = mat.column(best);
    std::vector<cplx> h(q_cols.size(), cplx(0.0, 0.0));
    for (int pass = 0; pass < 2; ++pass) {
      for (std::size_t l = 0; l < q_cols.size(); ++l) {
        cplx c = dot_conj(q_cols[l], v);
        h[l] += c;
        for (std::size_t r = 0; r < m; ++r) v[r] -= c * q_cols[l][r];
      }
    }
    double rkk = norm2(v);
    double new_max = std::max(diag_max, rkk);
    double new_min = q_cols.empty() ? rkk : std::min(diag_min, rkk);
    if (rkk == 0.0 || new_max / new_min > 1e12) {
      out.status = SolveStatus::singular_gram;
      break;
    }
    diag_max = new_max;
    diag_min = new_min;
    for (auto& x : v) x /= rkk;
    q_cols.push_back(std::move(v));
    h.push_back(rkk);
    r_cols.push_back(std::move(h));
    support.push_back(best);
    selected[best] = 1;

    std::vector<cplx> qty(q_cols.size());
    for (std::size_t l = 0; l < q_cols.size(); ++l)
      qty[l] = dot_conj(q_cols[l], y);
    for (std::size_t r = 0; r < m; ++r) {
      cplx proj(0.0, 0.0);
      for (std::size_t l = 0; l < q_cols.size(); ++l)
        proj += qty[l] * q_cols[l][r];
      residual[r] = y[r] - proj;
    }
    if (norm2(residual) <= residual_tol_rel * norm_y) break;
  }

  // Back-substitute R z = Q^* y on whatever support was accepted.
  const std::size_t s = support.size();
  if (s > 0) {
    std::vector<cplx> qty(s);
    for (std::size_t l = 0; l < s; ++l) qty[l] = dot_conj(q_cols[l], y);
    std::vector<cplx> z(s);
    for (std::size_t i = s; i-- > 0;) {
      cplx acc = qty[i];
      for (std::size_t jj = i + 1; jj < s; ++jj) acc -= r_cols[jj][i] * z[jj];
      z[i] = acc / r_cols[i][i];
    }
    for (std::size_t i = 0; i < s; ++i) out.estimate[support[i]] = z[i];
  }
  out.iterations = s;
  out.residual_norm = norm2(residual);
  return out;
}

RecoveryOutcome basis_pursuit(const SensingMatrix& mat, std::span<const cplx> y,
                              const BpParams& params) {
  if (y.size() != mat.row_count())
    throw std::invalid_argument("basis_pursuit: measurement dimension mismatch");
  if (params.rho <= 0 || params.gap_tol <= 0 || params.check_every < 1)
    throw std::invalid_argument("basis_pursuit: parameters must be positive");

  RecoveryOutcome out;
  out.method = "bp";
  out.estimate.assign(mat.cols(), cplx(0.0, 0.0));

  const double norm_y = norm2(y);
  if (norm_y == 0.0) return out;

  const u64 N = mat.cols();
  const double c = static_cast<double>(N) * mat.scale() * mat.scale();
  const double tau = 1.0 / params.rho;

  std::vector<cplx> z(N, cplx(0.0, 0.0)), u(N, cplx(0.0, 0.0));
  std::vector<cplx> gamma(N), v(N), lambda(mat.row_count());
  out.status = SolveStatus::non_converged;

  for (std::size_t it = 1; it <= params.max_iters; ++it) {
    for (u64 j = 0; j < N; ++j) v[j] = z[j] - u[j];
    std::vector<cplx> Av = mat.apply(v);
    for (std::size_t r = 0; r < lambda.size(); ++r)
      lambda[r] = (Av[r] - y[r]) / c;
    std::vector<cplx> corr = mat.adjoint(lambda);
    for (u64 j = 0; j < N; ++j) gamma[j] = v[j] - corr[j];

    for (u64 j = 0; j < N; ++j) {
      cplx w = gamma[j] + u[j];
      z[j] = soft_threshold(w, tau);
      u[j] = w - z[j];
    }

    if (it % params.check_every == 0 || it == params.max_iters) {
      // Dual candidate from the projection multiplier, rescaled into the
      // feasible set ||Phi^* eta||_inf <= 1.
      std::vector<cplx> eta(lambda.size());
      for (std::size_t r = 0; r < eta.size(); ++r)
        eta[r] = -params.rho * lambda[r];
      std::vector<cplx> d = mat.adjoint(eta);
      double dinf = 0;
      for (const cplx& x : d) dinf = std::max(dinf, std::abs(x));
      double feas_scale = std::max(1.0, dinf);
      double dual_obj = 0;
      for (std::size_t r = 0; r < eta.size(); ++r)
        dual_obj += std::real(std::conj(y[r]) * eta[r]);
      dual_obj /= feas_scale;
      double obj = 0;
      for (const cplx& x : gamma) obj += std::abs(x);
      double gap = obj - dual_obj;
      if (gap <= params.gap_tol * std::max(1.0, obj)) {
        out.status = SolveStatus::ok;
        out.iterations = it;
        break;
      }
      out.iterations = it;
    }
  }

  out.estimate = gamma;
  std::vector<cplx> Ag = mat.apply(gamma);
  double res = 0;
  for (std::size_t r = 0; r < Ag.size(); ++r) res += std::norm(Ag[r] - y[r]);
  out.residual_norm = std::sqrt(res);
  return out;
}

ExperimentConfig parse_experiment_config(const std::string& text) {
  io::KvRecord kv = io::parse_kv(text);
  ExperimentConfig cfg;
  for (std::size_t i = 0; i < kv.entries.size(); ++i) {
    const auto& [key, value] = kv.entries[i];
    auto fail = [&](const std::string& msg) {
      throw std::invalid_argument("config line " + std::to_string(kv.lines[i]) +
                                  ": " + msg);
    };
    if (key == "matrix") {
      cfg.matrix_path = value;
    } else if (key == "arms") {
      cfg.arm_deterministic = cfg.arm_random = false;
      std::size_t start = 0;
      while (start <= value.size()) {
        std::size_t pos = value.find(',', start);
        std::string tok = value.substr(
            start, pos == std::string::npos ? std::string::npos : pos - start);
        if (tok == "deterministic")
          cfg.arm_deterministic = true;
        else if (tok == "random")
          cfg.arm_random = true;
        else
          fail("unknown arm '" + tok + "'");
        if (pos == std::string::npos) break;
        start = pos + 1;
      }
      if (!cfg.arm_deterministic && !cfg.arm_random) fail("empty arms");
    } else if (key == "k_min") {
      cfg.k_min = kv.get_u64(key);
    } else if (key == "k_max") {
      cfg.k_max = kv.get_u64(key);
    } else if (key == "trials") {
      cfg.trials = kv.get_u64(key);
    } else if (key == "model") {
      cfg.model = signal_model_from_name(value);
    } else if (key == "success_tol") {
      cfg.success_tol = kv.get_double(key);
    } else if (key == "seed") {
      cfg.seed = kv.get_u64(key);
    } else if (key == "methods") {
      cfg.method_omp = value.find("omp") != std::string::npos;
      cfg.method_bp = value.find("bp") != std::string::npos;
      if (!cfg.method_omp && !cfg.method_bp) fail("empty methods");
    } else if (key == "omp_residual_tol") {
      cfg.omp_residual_tol = kv.get_double(key);
    } else if (key == "bp_gap_tol") {
      cfg.bp.gap_tol = kv.get_double(key);
    } else if (key == "bp_max_iters") {
      cfg.bp.max_iters = kv.get_u64(key);
    } else if (key == "bp_rho") {
      cfg.bp.rho = kv.get_double(key);
    } else if (key == "threads") {
      cfg.threads = static_cast<unsigned>(kv.get_u64(key));
    } else {
      fail("unknown key '" + key + "'");
    }
  }
  if (cfg.matrix_path.empty())
    throw std::invalid_argument("config: 'matrix' is required");
  if (cfg.trials < 1) throw std::invalid_argument("config: trials must be >= 1");
  if (cfg.k_min < 1 || cfg.k_min > cfg.k_max)
    throw std::invalid_argument("config: need 1 <= k_min <= k_max");
  if (cfg.success_tol <= 0)
    throw std::invalid_argument("config: success_tol must be positive");
  return cfg;
}

SweepResult run_success_sweep(const SensingMatrix& det, const ExperimentConfig& cfg) {
  if (cfg.k_max > det.row_count())
    throw std::invalid_argument("sweep: k_max exceeds the number of rows");

  struct Cell {
    bool omp_ok = false, bp_ok = false;
    bool flagged = false;
  };
  std::vector<std::string> arms;
  if (cfg.arm_deterministic) arms.push_back("deterministic");
  if (cfg.arm_random) arms.push_back("random");
  const std::size_t n_k = cfg.k_max - cfg.k_min + 1;
  const std::size_t n_cells = n_k * arms.size() * cfg.trials;
  std::vector<Cell> cells(n_cells);
  Twiddles shared = make_twiddles(det.cols());

  parallel_for(n_cells, cfg.threads, [&](std::size_t idx) {
    const std::size_t trial = idx % cfg.trials;
    const std::size_t arm_pos = (idx / cfg.trials) % arms.size();
    const std::size_t k = cfg.k_min + idx / (cfg.trials * arms.size());
    const bool random_arm = arms[arm_pos] == "random";
    const u64 arm_id = random_arm ? 1 : 0;

    const SensingMatrix* mat = &det;
    std::optional<SensingMatrix> local;
    if (random_arm) {
      Rng rows_rng(derive_seed(cfg.seed, {k, arm_id, trial, 2}));
      local.emplace(SensingMatrix::from_rows(
          det.cols(), rows_rng.sample_distinct(det.cols(), det.row_count()),
          shared));
      mat = &*local;
    }
    SparseSignal sig = gen_signal(det.cols(), k, cfg.model,
                                  derive_seed(cfg.seed, {k, arm_id, trial, 1}));
    std::vector<cplx> y = measure(*mat, sig);

    Cell& cell = cells[idx];
    if (cfg.method_omp) {
      RecoveryOutcome r = omp(*mat, y, k, cfg.omp_residual_tol);
      r.success = relative_error(r.estimate, sig) < cfg.success_tol;
      cell.omp_ok = r.success;
      if (r.status != SolveStatus::ok) cell.flagged = true;
    }
    if (cfg.method_bp) {
      RecoveryOutcome r = basis_pursuit(*mat, y, cfg.bp);
      r.success = relative_error(r.estimate, sig) < cfg.success_tol;
      cell.bp_ok = r.success;
      if (r.status != SolveStatus::ok) cell.flagged = true;
    }
  });

  SweepResult result;
  for (std::size_t ki = 0; ki < n_k; ++ki) {
    for (const char* method : {"omp", "bp"}) {
      if (std::string(method) == "omp" && !cfg.method_omp) continue;
      if (std::string(method) == "bp" && !cfg.method_bp) continue;
      for (std::size_t arm_pos = 0; arm_pos < arms.size(); ++arm_pos) {
        SweepRow row;
        row.k = cfg.k_min + ki;
        row.method = method;
        row.arm = arms[arm_pos];
        row.trials = cfg.trials;
        for (std::size_t t = 0; t < cfg.trials; ++t) {
          const Cell& cell =
              cells[(ki * arms.size() + arm_pos) * cfg.trials + t];
          row.successes += std::string(method) == "omp" ? cell.omp_ok : cell.bp_ok;
        }
        row.rate = static_cast<double>(row.successes) /
                   static_cast<double>(row.trials);
        result.rows.push_back(std::move(row));
      }
    }
  }
  for (const Cell& cell : cells) result.flagged += cell.flagged;
  return result;
}

std::string sweep_csv(const std::vector<SweepRow>& rows) {
  std::string out = "k,method,arm,trials,successes,rate\n";
  for (const SweepRow& row : rows) {
    out += std::to_string(row.k);
    out += ',';
    out += row.method;
    out += ',';
    out += row.arm;
    out += ',';
    out += std::to_string(row.trials);
    out += ',';
    out += std::to_string(row.successes);
    out += ',';
    out += io::format_double(row.rate);
    out += '\n';
  }
  return out;
}

}  // namespace fcs
