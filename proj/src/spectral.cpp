#include "fourier_cs/spectral.hpp"

#include <algorithm>
#include <cmath>

#include "fourier_cs/io.hpp"
#include "fourier_cs/rng.hpp"

namespace fcs {

HermitianMatrix gram(const SensingMatrix& mat, std::span<const u64> T) {
  std::vector<u64> sorted(T.begin(), T.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw std::invalid_argument("gram: duplicate column indices");
  if (!sorted.empty() && sorted.back() >= mat.cols())
    throw std::invalid_argument("gram: column index out of range");

  const std::size_t k = T.size();
  HermitianMatrix G(k, std::vector<cplx>(k));
  for (std::size_t u = 0; u < k; ++u) {
    G[u][u] = cplx(1.0, 0.0);  // unit columns by construction
    for (std::size_t v = u + 1; v < k; ++v) {
      // (Phi^* Phi)[u][v] = <Phi_{T_v}, Phi_{T_u}> = profile at T_v - T_u.
      G[u][v] = mat.column_inner(T[v], T[u]);
      G[v][u] = std::conj(G[u][v]);
    }
  }
  return G;
}

std::vector<double> hermitian_eigs(HermitianMatrix G) {
  const std::size_t n = G.size();
  for (const auto& row : G)
    if (row.size() != n) throw std::invalid_argument("hermitian_eigs: not square");

  double scale = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) scale += std::norm(G[i][j]);
  scale = std::sqrt(scale);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j)
      if (std::abs(G[i][j] - std::conj(G[j][i])) > 1e-10 * std::max(1.0, scale))
        throw std::invalid_argument("hermitian_eigs: input is not Hermitian");
  // Symmetrize to remove representation drift before rotating.
  for (std::size_t i = 0; i < n; ++i) {
    G[i][i] = cplx(G[i][i].real(), 0.0);
    for (std::size_t j = i + 1; j < n; ++j) {
      cplx avg = 0.5 * (G[i][j] + std::conj(G[j][i]));
      G[i][j] = avg;
      G[j][i] = std::conj(avg);
    }
  }

  auto off_norm = [&] {
    double s = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (i != j) s += std::norm(G[i][j]);
    return std::sqrt(s);
  };

  constexpr int kMaxSweeps = 80;
  for (int sweep = 0; sweep < kMaxSweeps && off_norm() > 1e-12 * scale; ++sweep) {
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        cplx b = G[p][q];
        double mag = std::abs(b);
        if (mag == 0.0) continue;
        double app = G[p][p].real();
        double aqq = G[q][q].real();
        cplx phase = b / mag;
        double t;
        if (app == aqq) {
          t = 1.0;
        } else {
          double tau = (aqq - app) / (2.0 * mag);
          t = (tau >= 0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        }
        double c = 1.0 / std::sqrt(1.0 + t * t);
        double s = t * c;
        const cplx jpq = s * phase;           // J[p][q]
        const cplx jqp = -s * std::conj(phase);  // J[q][p]
        // G <- J^H G J applied as column then row combinations.
        for (std::size_t i = 0; i < n; ++i) {
          cplx x = G[i][p], y = G[i][q];
          G[i][p] = x * c + y * jqp;
          G[i][q] = x * jpq + y * c;
        }
        for (std::size_t j = 0; j < n; ++j) {
          cplx x = G[p][j], y = G[q][j];
          G[p][j] = c * x + std::conj(jqp) * y;
          G[q][j] = std::conj(jpq) * x + c * y;
        }
        G[p][q] = cplx(0.0, 0.0);
        G[q][p] = cplx(0.0, 0.0);
        G[p][p] = cplx(G[p][p].real(), 0.0);
        G[q][q] = cplx(G[q][q].real(), 0.0);
      }
    }
  }
  if (n > 0 && off_norm() > 1e-12 * scale)
    throw std::runtime_error("hermitian_eigs: Jacobi sweep cap reached");

  std::vector<double> eigs(n);
  for (std::size_t i = 0; i < n; ++i) eigs[i] = G[i][i].real();
  std::sort(eigs.begin(), eigs.end());
  return eigs;
}

std::vector<EigStatsRow> run_eig_sweep(const SensingMatrix& mat,
                                       const EigSweepConfig& cfg,
                                       const std::string& arm_label) {
  if (cfg.samples < 1) throw std::invalid_argument("eig sweep: samples >= 1");
  if (cfg.k_min < 1 || cfg.k_min > cfg.k_max)
    throw std::invalid_argument("eig sweep: need 1 <= k_min <= k_max");

  std::vector<EigStatsRow> rows;
  for (std::size_t k = cfg.k_min; k <= cfg.k_max; ++k) {
    std::vector<double> mins(cfg.samples), maxs(cfg.samples);
    std::vector<char> violation(cfg.samples, 0);
    parallel_for(cfg.samples, cfg.threads, [&](std::size_t i) {
      Rng rng(derive_seed(cfg.seed, {k, i}));
      std::vector<u64> T = rng.sample_distinct(mat.cols(), k);
      std::vector<double> eigs = hermitian_eigs(gram(mat, T));
      mins[i] = eigs.front();
      maxs[i] = eigs.back();
      if (cfg.mu >= 0) {
        double radius = static_cast<double>(k - 1) * cfg.mu;
        if (maxs[i] > 1.0 + radius + 1e-6 || mins[i] < 1.0 - radius - 1e-6)
          violation[i] = 1;
      }
    });

    EigStatsRow row;
    row.k = k;
    row.samples = cfg.samples;
    row.arm = arm_label;
    row.min_min = mins[0];
    row.max_max = maxs[0];
    double sum_min = 0, sum_max = 0;
    for (std::size_t i = 0; i < cfg.samples; ++i) {
      row.min_min = std::min(row.min_min, mins[i]);
      row.max_max = std::max(row.max_max, maxs[i]);
      sum_min += mins[i];
      sum_max += maxs[i];
      row.envelope_violations += violation[i];
    }
    row.min_mean = sum_min / static_cast<double>(cfg.samples);
    row.max_mean = sum_max / static_cast<double>(cfg.samples);
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string eig_csv(const std::vector<EigStatsRow>& rows) {
  std::string out = "k,samples,min_min,min_mean,max_mean,max_max,arm\n";
  for (const EigStatsRow& row : rows) {
    out += std::to_string(row.k);
    out += ',';
    out += std::to_string(row.samples);
    out += ',';
    out += io::format_double(row.min_min);
    out += ',';
    out += io::format_double(row.min_mean);
    out += ',';
    out += io::format_double(row.max_mean);
    out += ',';
    out += io::format_double(row.max_max);
    out += ',';
    out += row.arm;
    out += '\n';
  }
  return out;
}

EigConfig parse_eig_config(const std::string& text) {
  io::KvRecord kv = io::parse_kv(text);
  EigConfig cfg;
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
    } else if (key == "samples") {
      cfg.samples = kv.get_u64(key);
    } else if (key == "seed") {
      cfg.seed = kv.get_u64(key);
    } else if (key == "threads") {
      cfg.threads = static_cast<unsigned>(kv.get_u64(key));
    } else {
      fail("unknown key '" + key + "'");
    }
  }
  if (cfg.matrix_path.empty())
    throw std::invalid_argument("config: 'matrix' is required");
  if (cfg.samples < 1) throw std::invalid_argument("config: samples must be >= 1");
  if (cfg.k_min < 1 || cfg.k_min > cfg.k_max)
    throw std::invalid_argument("config: need 1 <= k_min <= k_max");
  return cfg;
}

}  // namespace fcs
