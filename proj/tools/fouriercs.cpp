// Command-line front end: deterministic partial-Fourier sensing matrix
// construction, certification, and recovery/eigenvalue experiments with
// reproducible file outputs.

#include <CLI11.hpp>
#include <cmath>
#include <filesystem>
#include <iostream>
#include <optional>

#include "fourier_cs/char_sum.hpp"
#include "fourier_cs/index_set.hpp"
#include "fourier_cs/io.hpp"
#include "fourier_cs/recovery.hpp"
#include "fourier_cs/rng.hpp"
#include "fourier_cs/sensing_matrix.hpp"
#include "fourier_cs/spectral.hpp"

namespace {

using namespace fcs;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitCertFail = 2;
constexpr int kExitNonConverged = 3;

struct BuildArgs {
  i64 p = 0;
  int a = 1, n = 0, b = 0;
  std::string modulus, g, alpha, variant, out;
};

struct CertifyArgs {
  std::string matrix, what, out;
  u64 seed = 0x5eed;
};

struct RunArgs {
  std::string config, out;
};

struct ExportArgs {
  std::string matrix, out;
};

double compact_scale(const IndexSet& set) {
  return 1.0 / std::sqrt(static_cast<double>(set.indices.size()));
}

ParsedRecord load_matrix_record(const std::string& path) {
  ParsedRecord rec = read_record(io::read_file(path));
  if (!rec.scale)
    throw std::invalid_argument(path + ": not a matrix record (missing scale)");
  return rec;
}

std::string resolve_against(const std::string& base_file, const std::string& path) {
  std::filesystem::path p(path);
  if (p.is_absolute()) return path;
  return (std::filesystem::path(base_file).parent_path() / p).string();
}

void write_manifest(const std::string& command, const std::string& out_path,
                    const std::string& out_content, u64 seed,
                    const std::string& config_text) {
  std::string man;
  man += "command=" + command + "\n";
  man += "version=" + std::string(kVersion) + "\n";
  man += "seed=" + std::to_string(seed) + "\n";
  man += "config_digest=" + io::digest_hex(config_text) + "\n";
  man += "output=" + out_path + " " + io::digest_hex(out_content) + "\n";
  io::atomic_write_file(out_path + ".manifest", man);
}

int cmd_build(const BuildArgs& args) {
  std::optional<Coeffs> modulus;
  if (!args.modulus.empty()) modulus = io::parse_coeffs(args.modulus);
  Field field = Field::make(args.p, args.a, args.n, modulus);

  FieldElement g = args.g.empty() ? field.find_primitive_root()
                                  : field.element(io::parse_coeffs(args.g));
  FieldElement alpha = args.alpha.empty()
                           ? field.gen()
                           : field.element(io::parse_coeffs(args.alpha));

  Variant variant = variant_from_name(args.variant);
  if (variant == Variant::quotient && args.b == 0)
    throw std::invalid_argument("variant quotient requires --b");
  if (variant != Variant::quotient && args.b != 0)
    throw std::invalid_argument("--b is only valid with variant quotient");

  IndexSet set;
  switch (variant) {
    case Variant::full: set = build_full(field, g, alpha); break;
    case Variant::quotient: set = build_quotient(field, g, alpha, args.b); break;
    case Variant::amub: set = build_amub(field, g, alpha).first; break;
  }

  const std::string index_path = args.out + ".indexset.txt";
  const std::string matrix_path = args.out + ".matrix.txt";
  io::atomic_write_file(index_path, write_record(set));
  io::atomic_write_file(matrix_path, write_record(set, compact_scale(set)));

  double bound = static_cast<double>(field.n() - 1) /
                 std::sqrt(static_cast<double>(field.q()));
  std::cout << "variant=" << variant_name(set.variant) << " p=" << field.p()
            << " a=" << field.a() << " n=" << field.n() << " q=" << field.q()
            << "\n";
  std::cout << "modulus=" << io::format_coeffs(field.modulus()) << "\n";
  std::cout << "g=" << io::format_coeffs(set.g.c) << "\n";
  std::cout << "alpha=" << io::format_coeffs(set.alpha.c) << "\n";
  std::cout << "N=" << set.N << " m=" << set.indices.size() << "\n";
  std::cout << "mu_bound=" << io::format_double(bound) << "\n";
  std::cout << "wrote " << index_path << "\n";
  std::cout << "wrote " << matrix_path << "\n";
  return kExitOk;
}

int cmd_certify(const CertifyArgs& args) {
  ParsedRecord rec = load_matrix_record(args.matrix);
  const IndexSet& set = rec.set;

  if (args.what == "quadratic") {
    QuadraticCertificate cert = certify_quadratic(set);
    std::string report;
    report += "what=quadratic\n";
    report += std::string("pass=") + (cert.pass ? "1" : "0") + "\n";
    report += "max_deviation=" + io::format_double(cert.max_deviation) + "\n";
    report += "worst_a=" + std::to_string(cert.worst_a) + "\n";
    report += "tolerance=" + io::format_double(char_sum_tolerance(set.field)) + "\n";
    if (!args.out.empty()) io::atomic_write_file(args.out, report);
    std::cout << report;
    return cert.pass ? kExitOk : kExitCertFail;
  }

  if (args.what == "katz") {
    std::string csv = katz_csv_header();
    std::function<void(const KatzSumReport&)> sink =
        [&csv](const KatzSumReport& rep) { csv += katz_csv_row(rep); };
    BoundCertificate cert = certify_bound(set, args.seed, &sink);
    if (!args.out.empty()) io::atomic_write_file(args.out, csv);
    std::cout << "what=katz\npass=" << (cert.pass ? 1 : 0)
              << "\ntested=" << cert.tested
              << "\nexhaustive=" << (cert.exhaustive ? 1 : 0)
              << "\nmax_modulus=" << io::format_double(cert.max_modulus)
              << "\nbound=" << io::format_double(cert.bound)
              << "\nworst_a=" << cert.worst_a << "\n";
    return cert.pass ? kExitOk : kExitCertFail;
  }

  if (args.what == "coherence") {
    SensingMatrix mat(set);
    CoherenceReport fft = coherence_fft(mat);
    bool match = true;
    double mu_ref = fft.mu;
    if (mat.cols() <= 10'000) {
      CoherenceReport brute = coherence_bruteforce(mat);
      match = std::abs(brute.mu - fft.mu) <= 1e-9;
      mu_ref = brute.mu;
    }
    bool welch_ok = fft.welch <= mu_ref + 1e-9;
    bool bound_ok = std::isnan(fft.bound) || mu_ref <= fft.bound + 1e-9;
    bool pass = match && welch_ok && bound_ok;
    std::string report;
    report += "what=coherence\n";
    report += std::string("pass=") + (pass ? "1" : "0") + "\n";
    report += "mu=" + io::format_double(mu_ref) + "\n";
    report += "welch=" + io::format_double(fft.welch) + "\n";
    report += "bound=" + io::format_double(fft.bound) + "\n";
    report += "k_max=" + std::to_string(fft.k_max) + "\n";
    report += "argmax_shift=" + std::to_string(fft.arg_j) + "\n";
    if (!args.out.empty()) io::atomic_write_file(args.out, report);
    std::cout << report;
    return pass ? kExitOk : kExitCertFail;
  }

  if (args.what == "amub") {
    if (set.variant != Variant::amub)
      throw std::invalid_argument("amub certification requires an amub matrix");
    SensingMatrix mat(set);
    AmubReport rep = certify_amub(mat, amub_partition(set.field.q()));
    std::string report;
    report += "what=amub\n";
    report += std::string("pass=") + (rep.pass ? "1" : "0") + "\n";
    report += "max_unitary_dev=" + io::format_double(rep.max_unitary_dev) + "\n";
    report += "cross_lo=" + io::format_double(rep.lo) + "\n";
    report += "cross_hi=" + io::format_double(rep.hi) + "\n";
    report += "min_cross=" + io::format_double(rep.min_cross) + "\n";
    report += "max_cross=" + io::format_double(rep.max_cross) + "\n";
    if (!rep.pass) {
      report += "bad_j=" + std::to_string(rep.bad_j) + "\n";
      report += "bad_k=" + std::to_string(rep.bad_k) + "\n";
    }
    if (!args.out.empty()) io::atomic_write_file(args.out, report);
    std::cout << report;
    return rep.pass ? kExitOk : kExitCertFail;
  }

  throw std::invalid_argument("unknown certification '" + args.what + "'");
}

int cmd_recover(const RunArgs& args) {
  std::string config_text = io::read_file(args.config);
  ExperimentConfig cfg = parse_experiment_config(config_text);
  ParsedRecord rec =
      load_matrix_record(resolve_against(args.config, cfg.matrix_path));
  SensingMatrix mat(rec.set);

  SweepResult result = run_success_sweep(mat, cfg);
  std::string csv = sweep_csv(result.rows);
  io::atomic_write_file(args.out, csv);
  write_manifest("recover", args.out, csv, cfg.seed, config_text);
  std::cout << "wrote " << args.out << " (" << result.rows.size() << " rows)\n";
  if (result.flagged > 0) {
    std::cout << "non-converged or flagged trials: " << result.flagged << "\n";
    return kExitNonConverged;
  }
  return kExitOk;
}

int cmd_eigs(const RunArgs& args) {
  std::string config_text = io::read_file(args.config);
  EigConfig cfg = parse_eig_config(config_text);
  ParsedRecord rec =
      load_matrix_record(resolve_against(args.config, cfg.matrix_path));
  SensingMatrix det(rec.set);

  EigSweepConfig sweep;
  sweep.k_min = cfg.k_min;
  sweep.k_max = cfg.k_max;
  sweep.samples = cfg.samples;
  sweep.threads = cfg.threads;

  std::vector<EigStatsRow> rows;
  if (cfg.arm_deterministic) {
    sweep.seed = derive_seed(cfg.seed, {0});
    sweep.mu = coherence_fft(det).mu;
    auto part = run_eig_sweep(det, sweep, "deterministic");
    rows.insert(rows.end(), part.begin(), part.end());
  }
  if (cfg.arm_random) {
    Rng rng(derive_seed(cfg.seed, {1, 0}));
    SensingMatrix rnd = SensingMatrix::from_rows(
        det.cols(), rng.sample_distinct(det.cols(), det.row_count()));
    sweep.seed = derive_seed(cfg.seed, {1});
    sweep.mu = coherence_fft(rnd).mu;
    auto part = run_eig_sweep(rnd, sweep, "random");
    rows.insert(rows.end(), part.begin(), part.end());
  }

  std::string csv = eig_csv(rows);
  io::atomic_write_file(args.out, csv);
  write_manifest("eigs", args.out, csv, cfg.seed, config_text);
  std::cout << "wrote " << args.out << " (" << rows.size() << " rows)\n";
  return kExitOk;
}

int cmd_export(const ExportArgs& args) {
  ParsedRecord rec = load_matrix_record(args.matrix);
  SensingMatrix mat(rec.set);
  io::atomic_write_file(args.out, dense_csv(mat));
  std::cout << "wrote " << args.out << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Deterministic partial-Fourier compressed-sensing toolkit"};
  app.require_subcommand(1);

  BuildArgs build_args;
  CLI::App* build = app.add_subcommand(
      "build", "Construct a row-index set and compact matrix spec");
  build->add_option("--p", build_args.p, "prime characteristic")->required();
  build->add_option("--a", build_args.a, "base extension degree (q = p^a)");
  build->add_option("--n", build_args.n, "top extension degree")->required();
  build->add_option("--b", build_args.b, "quotient divisor (quotient variant)");
  build->add_option("--modulus", build_args.modulus,
                    "monic modulus, coeffs constant-first (default: first irreducible)");
  build->add_option("--g", build_args.g,
                    "primitive root coeffs (default: first primitive)");
  build->add_option("--alpha", build_args.alpha,
                    "generator coeffs (default: residue class of x)");
  build->add_option("--variant", build_args.variant, "full | quotient | amub")
      ->required();
  build->add_option("--out", build_args.out, "output path prefix")->required();

  CertifyArgs certify_args;
  CLI::App* certify = app.add_subcommand(
      "certify", "Certify character-sum / coherence / basis properties");
  certify->add_option("--matrix", certify_args.matrix, "compact matrix file")
      ->required();
  certify->add_option("--what", certify_args.what,
                      "katz | quadratic | coherence | amub")
      ->required();
  certify->add_option("--out", certify_args.out, "report output file");
  certify->add_option("--seed", certify_args.seed,
                      "sampling seed (katz, beyond exhaustive range)");

  RunArgs recover_args;
  CLI::App* recover =
      app.add_subcommand("recover", "Sparse-recovery success-rate sweep");
  recover->add_option("--config", recover_args.config, "experiment config file")
      ->required();
  recover->add_option("--out", recover_args.out, "output CSV")->required();

  RunArgs eigs_args;
  CLI::App* eigs =
      app.add_subcommand("eigs", "Gram-matrix eigenvalue statistics sweep");
  eigs->add_option("--config", eigs_args.config, "experiment config file")
      ->required();
  eigs->add_option("--out", eigs_args.out, "output CSV")->required();

  ExportArgs export_args;
  CLI::App* exportc =
      app.add_subcommand("export", "Dense CSV export of a matrix spec");
  exportc->add_option("--matrix", export_args.matrix, "compact matrix file")
      ->required();
  exportc->add_option("--out", export_args.out, "output CSV")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (build->parsed()) return cmd_build(build_args);
    if (certify->parsed()) return cmd_certify(certify_args);
    if (recover->parsed()) return cmd_recover(recover_args);
    if (eigs->parsed()) return cmd_eigs(eigs_args);
    if (exportc->parsed()) return cmd_export(export_args);
    std::cerr << "error: no subcommand\n";
    return kExitUsage;
  } catch (const std::runtime_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNonConverged;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
