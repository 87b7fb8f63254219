// Acceptance suite: end-to-end checks of the construction, certification,
// recovery, and spectral pipelines at their contract tolerances. Prints one
// pass/fail line per criterion and exits nonzero if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <set>
#include <vector>

#include "fourier_cs/char_sum.hpp"
#include "fourier_cs/dlog.hpp"
#include "fourier_cs/recovery.hpp"
#include "fourier_cs/rng.hpp"
#include "fourier_cs/sensing_matrix.hpp"
#include "fourier_cs/spectral.hpp"

using namespace fcs;

namespace {

int g_failures = 0;

struct Criterion {
  const char* label;
  bool (*fn)(std::string& detail);
};

// ---- fixtures -------------------------------------------------------------

const std::set<u64> kM1 = {465, 1,   494, 649, 47,  507, 758, 610, 835, 244,
                           67,  204, 588, 519, 332, 808, 351, 672, 456, 683,
                           776, 275, 470, 562, 3,   103, 761, 466, 449};

const std::set<u64> kM2 = {192, 208, 162, 165, 160, 39,  154, 141, 245, 356,
                           304, 311, 223, 40,  321, 68,  118, 174, 249};

Field field_m1() { return Field::make(29, 1, 2, Coeffs{2, 0, 1}); }
Field field_m2() { return Field::make(19, 1, 3, Coeffs{1, 1, 0, 1}); }

// Pinned convention for the 29x840 fixture: the golden set is the log table
// of the coset {t + x} base x+1 (x+2 is not primitive in this
// representation; x+1 is, and reproduces the golden set exactly).
IndexSet build_m1() {
  Field F = field_m1();
  return build_full(F, F.element(Coeffs{1, 1}), F.neg(F.gen()));
}

IndexSet build_m2() {
  Field F = field_m2();
  return build_quotient(F, F.element(Coeffs{0, 2, 1}), F.gen(), 1);
}

double l1(const std::vector<cplx>& v) {
  double s = 0;
  for (const cplx& x : v) s += std::abs(x);
  return s;
}

double l2(const std::vector<cplx>& v) {
  double s = 0;
  for (const cplx& x : v) s += std::norm(x);
  return std::sqrt(s);
}

// ---- criteria -------------------------------------------------------------

bool c1_m1_fixture(std::string& detail) {
  IndexSet set = build_m1();
  bool ok = set.N == 840 && set.indices.size() == 29 &&
            std::set<u64>(set.indices.begin(), set.indices.end()) == kM1;
  detail = "set equality on 29 indices, N=840 (pinned g=x+1, alpha=-x)";
  return ok;
}

bool c2_m2_fixture(std::string& detail) {
  IndexSet set = build_m2();
  bool ok = set.N == 381 && set.indices.size() == 19 &&
            std::set<u64>(set.indices.begin(), set.indices.end()) == kM2;
  detail = "set equality on 19 indices, N=381";
  return ok;
}

bool c3_quadratic_identities(std::string& detail) {
  char buf[160];
  double worst = 0;
  for (auto [p, a] : {std::pair<i64, int>{5, 1},
                      {7, 1},
                      {3, 2},   // q = 9
                      {11, 1},
                      {13, 1},
                      {29, 1}}) {
    Field F = Field::make(p, a, 2);
    IndexSet set = build_full(F, F.find_primitive_root(), F.gen());
    QuadraticCertificate cert = certify_quadratic(set);
    worst = std::max(worst, cert.max_deviation / char_sum_tolerance(F));
    if (!cert.pass) {
      std::snprintf(buf, sizeof(buf), "q=%lld failed at a=%llu dev=%.3g",
                    static_cast<long long>(F.q()),
                    static_cast<unsigned long long>(cert.worst_a),
                    cert.max_deviation);
      detail = buf;
      return false;
    }
  }
  std::snprintf(buf, sizeof(buf),
                "q in {5,7,9,11,13,29}, worst deviation %.2e of tolerance", worst);
  detail = buf;
  return true;
}

bool c4_katz_bound(std::string& detail) {
  char buf[160];
  for (auto [p, n] : {std::pair<i64, int>{7, 3}, {19, 3}, {5, 4}}) {
    Field F = Field::make(p, 1, n);
    IndexSet set = build_full(F, F.find_primitive_root(), F.gen());
    BoundCertificate cert = certify_bound(set);
    if (!cert.pass || !cert.exhaustive) {
      std::snprintf(buf, sizeof(buf), "(q=%lld,n=%d) max |S|=%.6f bound=%.6f",
                    static_cast<long long>(p), n, cert.max_modulus, cert.bound);
      detail = buf;
      return false;
    }
  }
  detail = "(7,3), (19,3), (5,4) exhaustive, |S(a)| <= (n-1)sqrt(q)";
  return true;
}

bool c5_coherence(std::string& detail) {
  char buf[200];
  SensingMatrix m1{build_m1()};
  CoherenceReport b1 = coherence_bruteforce(m1);
  CoherenceReport f1 = coherence_fft(m1);
  const double mu_exact = 1.0 / std::sqrt(29.0);
  const double welch_exact = std::sqrt(811.0 / 24331.0);
  bool ok = std::abs(b1.mu - mu_exact) < 1e-9 &&
            std::abs(b1.welch - welch_exact) < 1e-12 && b1.welch <= b1.mu &&
            std::abs(b1.mu - f1.mu) < 1e-9;

  SensingMatrix m2{build_m2()};
  CoherenceReport b2 = coherence_bruteforce(m2);
  CoherenceReport f2 = coherence_fft(m2);
  ok = ok && b2.mu <= 2.0 / std::sqrt(19.0) + 1e-9 && std::abs(b2.mu - f2.mu) < 1e-9;

  std::snprintf(buf, sizeof(buf),
                "mu1=%.9f (=1/sqrt(29)), welch=%.5f, mu2=%.9f <= %.9f, fft==brute",
                b1.mu, b1.welch, b2.mu, 2.0 / std::sqrt(19.0));
  detail = buf;
  return ok;
}

bool c6_mip_end_to_end(std::string& detail) {
  SensingMatrix mat{build_m1()};
  const u64 master = 20260809;
  std::size_t done = 0;
  bool ok = true;
  for (SignalModel model : {SignalModel::complex_gaussian, SignalModel::unit_modulus}) {
    for (std::size_t k : {1u, 2u, 3u}) {
      std::vector<char> good(100, 0);
      parallel_for(100, 0, [&](std::size_t t) {
        SparseSignal sig = gen_signal(
            mat.cols(), k, model,
            derive_seed(master, {static_cast<u64>(model), k, t}));
        std::vector<cplx> y = measure(mat, sig);
        RecoveryOutcome o = omp(mat, y, k);
        RecoveryOutcome b = basis_pursuit(mat, y);
        good[t] = o.status == SolveStatus::ok && b.status == SolveStatus::ok &&
                  relative_error(o.estimate, sig) < 1e-6 &&
                  relative_error(b.estimate, sig) < 1e-4;
      });
      for (char g : good) {
        ok = ok && g;
        ++done;
      }
    }
  }
  char buf[120];
  std::snprintf(buf, sizeof(buf),
                "%zu/600 trials exact (OMP<1e-6, BP<1e-4), k in {1,2,3}, both models",
                done);
  detail = buf;
  return ok;
}

bool c7_amub(std::string& detail) {
  char buf[240];
  detail.clear();
  for (i64 p : {5, 29}) {
    Field F = p == 29 ? field_m1() : Field::make(p, 1, 2);
    FieldElement g = p == 29 ? F.element(Coeffs{1, 1}) : F.find_primitive_root();
    FieldElement alpha = p == 29 ? F.neg(F.gen()) : F.gen();
    auto [set, part] = build_amub(F, g, alpha);
    SensingMatrix mat{std::move(set)};
    AmubReport rep = certify_amub(mat, part);
    if (!rep.pass) {
      std::snprintf(buf, sizeof(buf), "q=%lld failed at shift %llu",
                    static_cast<long long>(p),
                    static_cast<unsigned long long>(rep.bad_j));
      detail = buf;
      return false;
    }

    // Literal exhaustive pair loop as the second route: every cross-block
    // pair via explicit column inner products.
    const u64 q = static_cast<u64>(p);
    double lo = rep.hi, hi = rep.lo;
    for (u64 j = 0; j + 1 < mat.cols(); ++j) {
      for (u64 k = j + 1; k < mat.cols(); ++k) {
        double v = std::abs(mat.column_inner(j, k));
        if ((k - j) % (q - 1) == 0) {
          if (v > 1e-9) {
            std::snprintf(buf, sizeof(buf), "q=%lld block pair (%llu,%llu) |ip|=%.2e",
                          static_cast<long long>(p),
                          static_cast<unsigned long long>(j),
                          static_cast<unsigned long long>(k), v);
            detail = buf;
            return false;
          }
        } else {
          lo = std::min(lo, v);
          hi = std::max(hi, v);
          if (v < rep.lo - 1e-9 || v > rep.hi + 1e-9) {
            std::snprintf(buf, sizeof(buf), "q=%lld cross pair (%llu,%llu) |ip|=%.6f",
                          static_cast<long long>(p),
                          static_cast<unsigned long long>(j),
                          static_cast<unsigned long long>(k), v);
            detail = buf;
            return false;
          }
        }
      }
    }
    char part_buf[120];
    std::snprintf(part_buf, sizeof(part_buf), "q=%lld cross range [%.4f,%.4f] in [%.4f,%.4f]; ",
                  static_cast<long long>(p), lo, hi, rep.lo, rep.hi);
    detail += part_buf;
  }
  return true;
}

bool c8_bsgs(std::string& detail) {
  // Exhaustive round-trip on every field of order <= 2^16 the tests use,
  // including both golden fixture fields.
  std::vector<Field> fields = {Field::make(7, 1, 1),  Field::make(2, 1, 2),
                               Field::make(5, 1, 2),  Field::make(7, 1, 2),
                               Field::make(3, 2, 2),  Field::make(11, 1, 2),
                               Field::make(13, 1, 2), Field::make(7, 1, 3),
                               Field::make(5, 1, 4),  field_m1(), field_m2()};
  u64 checked = 0;
  for (const Field& F : fields) {
    FieldElement g = F == field_m1() ? F.element(Coeffs{1, 1})
                     : F == field_m2() ? F.element(Coeffs{0, 2, 1})
                                       : F.find_primitive_root();
    DlogTable table(F, g);
    FieldElement cur = F.one();
    for (u64 m = 0; m < F.group_order(); ++m) {
      if (table.log(cur) != m) {
        detail = "round-trip failed";
        return false;
      }
      cur = F.mul(cur, g);
      ++checked;
    }
  }
  // 10^4 random checks per golden fixture field.
  for (const Field& F : {field_m1(), field_m2()}) {
    FieldElement g = F == field_m1() ? F.element(Coeffs{1, 1})
                                     : F.element(Coeffs{0, 2, 1});
    DlogTable table(F, g);
    Rng rng(0xb565);
    for (int i = 0; i < 10'000; ++i) {
      u64 m = rng.bounded(F.group_order());
      if (table.log(F.pow(g, static_cast<i64>(m))) != m) {
        detail = "random round-trip failed";
        return false;
      }
      ++checked;
    }
  }
  char buf[96];
  std::snprintf(buf, sizeof(buf), "%llu logarithms verified across 11 fields",
                static_cast<unsigned long long>(checked));
  detail = buf;
  return true;
}

bool c9_eig_sweep_and_figures(std::string& detail) {
  SensingMatrix mat{build_m1()};
  const double mu = coherence_fft(mat).mu;

  EigSweepConfig cfg;
  cfg.k_min = 1;
  cfg.k_max = 20;
  cfg.samples = 5'000;
  cfg.seed = 0xe1965;
  cfg.mu = mu;
  std::vector<EigStatsRow> rows = run_eig_sweep(mat, cfg, "deterministic");
  for (const EigStatsRow& row : rows) {
    if (row.envelope_violations != 0) {
      detail = "Gershgorin envelope violated at k=" + std::to_string(row.k);
      return false;
    }
  }
  if (rows[0].min_min != 1.0 || rows[0].max_max != 1.0) {
    detail = "k=1 eigenvalues are not exactly [1,1]";
    return false;
  }

  // Success-rate shape (figure reproduction, qualitative): rates
  // non-increasing in k within 0.05 slack; deterministic >= random inside
  // the guaranteed region k <= 3.
  ExperimentConfig rc;
  rc.matrix_path = "(in-memory)";
  rc.k_min = 1;
  rc.k_max = 8;
  rc.trials = 60;
  rc.seed = 0xf165;
  rc.method_bp = false;
  SweepResult omp_sweep = run_success_sweep(mat, rc);

  rc.k_max = 5;
  rc.trials = 40;
  rc.method_bp = true;
  rc.method_omp = false;
  // Enough budget to converge inside the guarantee (worst seen ~5k iters at
  // k=3) while failing fast beyond it; criterion 6 runs the full defaults.
  rc.bp.max_iters = 12'000;
  SweepResult bp_sweep = run_success_sweep(mat, rc);

  auto shape_ok = [&](const SweepResult& res, std::string& why) {
    for (const std::string& arm : {std::string("deterministic"), std::string("random")}) {
      for (const char* method : {"omp", "bp"}) {
        std::vector<double> rates;
        for (const SweepRow& row : res.rows)
          if (row.arm == arm && row.method == method) rates.push_back(row.rate);
        for (std::size_t i = 1; i < rates.size(); ++i) {
          if (rates[i] > rates[i - 1] + 0.05) {
            why = std::string("rate increased in k (") + method + "," + arm + ")";
            return false;
          }
        }
      }
    }
    // guaranteed region k <= 3: deterministic at least matches random, and
    // the OMP arm is exact (BP exactness at full defaults is criterion 6).
    std::vector<double> det, rnd;
    for (const SweepRow& row : res.rows) {
      if (row.k > 3) continue;
      if (row.arm == "deterministic" && row.method == "omp" && row.rate != 1.0) {
        why = "deterministic OMP arm not exact inside the guarantee";
        return false;
      }
      (row.arm == "deterministic" ? det : rnd).push_back(row.rate);
    }
    for (std::size_t i = 0; i < det.size() && i < rnd.size(); ++i)
      if (det[i] < rnd[i]) {
        why = "deterministic below random inside the guarantee";
        return false;
      }
    return true;
  };

  std::string why;
  if (!shape_ok(omp_sweep, why) || !shape_ok(bp_sweep, why)) {
    detail = why;
    return false;
  }
  detail = "20x5000 samples inside 1 +- (k-1)mu; rates monotone, det >= random for k<=3";
  return true;
}

bool c10_bp_oracle(std::string& detail) {
  // 50 random small instances; support-enumeration oracle over |S| <= 2.
  Rng inst_rng(0x0b9);
  double worst_excess = -1;
  for (int inst = 0; inst < 50; ++inst) {
    u64 N = 16 + inst_rng.bounded(25);        // N <= 40
    std::size_t m = 5 + inst_rng.bounded(6);  // m <= 10
    SensingMatrix mat =
        SensingMatrix::from_rows(N, inst_rng.sample_distinct(N, m));
    std::size_t k = 1 + inst_rng.bounded(2);
    SparseSignal sig =
        gen_signal(N, k, SignalModel::complex_gaussian,
                   derive_seed(0xacce97, {static_cast<u64>(inst)}));
    std::vector<cplx> y = measure(mat, sig);

    RecoveryOutcome bp = basis_pursuit(mat, y);
    double bp_obj = l1(bp.estimate);

    // Oracle: least-squares fit on every support of size 1 or 2, keeping
    // feasible fits only.
    double oracle = std::numeric_limits<double>::infinity();
    std::vector<std::vector<cplx>> cols(N);
    for (u64 j = 0; j < N; ++j) cols[j] = mat.column(j);
    auto consider = [&](const std::vector<u64>& S) {
      const std::size_t kk = S.size();
      std::vector<cplx> rhs(kk);
      std::vector<std::vector<cplx>> G(kk, std::vector<cplx>(kk));
      for (std::size_t u = 0; u < kk; ++u) {
        for (std::size_t v = 0; v < kk; ++v) {
          cplx acc(0, 0);
          for (std::size_t r = 0; r < m; ++r)
            acc += std::conj(cols[S[u]][r]) * cols[S[v]][r];
          G[u][v] = acc;
        }
        cplx acc(0, 0);
        for (std::size_t r = 0; r < m; ++r) acc += std::conj(cols[S[u]][r]) * y[r];
        rhs[u] = acc;
      }
      std::vector<cplx> coef(kk);
      if (kk == 1) {
        coef[0] = rhs[0] / G[0][0];
      } else {
        cplx den = G[0][0] * G[1][1] - G[0][1] * G[1][0];
        if (std::abs(den) < 1e-12) return;
        coef[0] = (rhs[0] * G[1][1] - G[0][1] * rhs[1]) / den;
        coef[1] = (G[0][0] * rhs[1] - rhs[0] * G[1][0]) / den;
      }
      double resid = 0;
      for (std::size_t r = 0; r < m; ++r) {
        cplx fit(0, 0);
        for (std::size_t u = 0; u < kk; ++u) fit += cols[S[u]][r] * coef[u];
        resid += std::norm(y[r] - fit);
      }
      if (std::sqrt(resid) > 1e-8 * l2(y)) return;
      double obj = 0;
      for (const cplx& c : coef) obj += std::abs(c);
      oracle = std::min(oracle, obj);
    };
    for (u64 j = 0; j < N; ++j) consider({j});
    for (u64 j = 0; j < N; ++j)
      for (u64 j2 = j + 1; j2 < N; ++j2) consider({j, j2});

    worst_excess = std::max(worst_excess, bp_obj - oracle);
    if (bp_obj > oracle + 1e-6) {
      char buf[120];
      std::snprintf(buf, sizeof(buf), "instance %d: bp=%.9f oracle=%.9f", inst,
                    bp_obj, oracle);
      detail = buf;
      return false;
    }
  }
  char buf[96];
  std::snprintf(buf, sizeof(buf), "50 instances, worst bp-oracle excess %.2e",
                worst_excess);
  detail = buf;
  return true;
}

void run_criterion(int number, const char* label, double budget_secs,
                   bool (*fn)(std::string&)) {
  auto start = std::chrono::steady_clock::now();
  std::string detail;
  bool ok = false;
  try {
    ok = fn(detail);
  } catch (const std::exception& e) {
    detail = std::string("exception: ") + e.what();
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                              start)
                    .count();
  if (ok && secs > budget_secs) {
    ok = false;
    detail += " [exceeded runtime budget]";
  }
  std::printf("[%s] criterion %2d: %s (%.2f s, budget %.0f s) -- %s\n",
              ok ? "PASS" : "FAIL", number, label, secs, budget_secs,
              detail.c_str());
  std::fflush(stdout);
  if (!ok) ++g_failures;
}

}  // namespace

int main() {
  run_criterion(1, "M1 golden fixture", 1, c1_m1_fixture);
  run_criterion(2, "M2 golden fixture", 1, c2_m2_fixture);
  run_criterion(3, "quadratic character-sum identities", 30, c3_quadratic_identities);
  run_criterion(4, "Katz bound sweeps", 120, c4_katz_bound);
  run_criterion(5, "coherence values and FFT agreement", 30, c5_coherence);
  run_criterion(6, "MIP end-to-end recovery", 300, c6_mip_end_to_end);
  run_criterion(7, "AMUB block certification", 120, c7_amub);
  run_criterion(8, "BSGS exhaustive round-trip", 60, c8_bsgs);
  run_criterion(9, "eigenvalue sweep and figure shapes", 600, c9_eig_sweep_and_figures);
  run_criterion(10, "BP support-enumeration oracle", 120, c10_bp_oracle);

  if (g_failures == 0) {
    std::printf("all acceptance criteria passed\n");
    return 0;
  }
  std::printf("%d criteria FAILED\n", g_failures);
  return 1;
}
