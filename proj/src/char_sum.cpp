#include "fourier_cs/char_sum.hpp"

#include <algorithm>
#include <cmath>

#include "fourier_cs/dlog.hpp"
#include "fourier_cs/io.hpp"
#include "fourier_cs/rng.hpp"

namespace fcs {

namespace {

cplx sum_over_logs(const std::vector<u64>& logs, u64 a, u64 N) {
  CompensatedSum sum;
  for (u64 m : logs) {
    long double ang = static_cast<long double>(kTwoPi) *
                      static_cast<long double>(mulmod(a, m, N)) /
                      static_cast<long double>(N);
    sum.add({static_cast<double>(std::cos(ang)), static_cast<double>(std::sin(ang))});
  }
  return sum.value();
}

KatzSumReport make_report(const IndexSet& set, const std::vector<u64>& logs, u64 a) {
  const Field& F = set.field;
  const u64 N = F.group_order();
  KatzSumReport rep;
  rep.a = a;
  rep.value = sum_over_logs(logs, a, N);
  rep.modulus = std::abs(rep.value);
  rep.bound = static_cast<double>(F.n() - 1) * std::sqrt(static_cast<double>(F.q()));
  if (F.n() == 2)
    rep.quadratic_case = (a % (F.q() - 1) == 0) ? QuadraticCase::exact_minus_one
                                                : QuadraticCase::exact_sqrt_q;
  rep.pass = rep.modulus <= rep.bound + char_sum_tolerance(F);
  return rep;
}

}  // namespace

std::vector<u64> full_log_set(const IndexSet& set) {
  switch (set.variant) {
    case Variant::full:
      return set.indices;
    case Variant::amub: {
      std::vector<u64> logs;
      logs.reserve(set.indices.size() - 1);
      for (u64 m : set.indices)
        if (m != 0) logs.push_back(m);
      return logs;
    }
    case Variant::quotient: {
      DlogTable table(set.field, set.g);
      std::vector<u64> logs;
      logs.reserve(set.field.q());
      for (const auto& t : set.field.subfield(set.g))
        logs.push_back(table.log(set.field.sub(t, set.alpha)));
      std::sort(logs.begin(), logs.end());
      return logs;
    }
  }
  throw std::logic_error("unknown variant");
}

KatzSumReport katz_sum(const IndexSet& set, u64 a) {
  const u64 N = set.field.group_order();
  if (a < 1 || a >= N)
    throw std::invalid_argument("katz_sum: character index out of [1, q^n-2]");
  return make_report(set, full_log_set(set), a);
}

QuadraticCertificate certify_quadratic(const IndexSet& set) {
  const Field& F = set.field;
  if (F.n() != 2)
    throw std::invalid_argument("certify_quadratic requires n = 2");
  const u64 N = F.group_order();
  const double sq = std::sqrt(static_cast<double>(F.q()));
  const std::vector<u64> logs = full_log_set(set);

  QuadraticCertificate cert;
  cert.pass = true;
  for (u64 a = 1; a < N; ++a) {
    cplx s = sum_over_logs(logs, a, N);
    double dev = (a % (F.q() - 1) == 0) ? std::abs(s - cplx(-1.0, 0.0))
                                        : std::abs(std::abs(s) - sq);
    if (dev > cert.max_deviation) {
      cert.max_deviation = dev;
      cert.worst_a = a;
    }
  }
  cert.pass = cert.max_deviation <= char_sum_tolerance(F);
  return cert;
}

BoundCertificate certify_bound(
    const IndexSet& set, u64 sample_seed,
    const std::function<void(const KatzSumReport&)>* sink) {
  const Field& F = set.field;
  const u64 N = F.group_order();
  const std::vector<u64> logs = full_log_set(set);

  BoundCertificate cert;
  cert.bound = static_cast<double>(F.n() - 1) * std::sqrt(static_cast<double>(F.q()));
  cert.exhaustive = N - 1 <= 1'000'000;
  constexpr std::size_t kBins = 40;
  cert.histogram.assign(kBins + 1, 0);  // last bin: above the bound
  cert.bin_width = cert.bound / kBins;
  cert.pass = true;

  auto visit = [&](u64 a) {
    KatzSumReport rep = make_report(set, logs, a);
    std::size_t bin = rep.modulus >= cert.bound
                          ? kBins
                          : static_cast<std::size_t>(rep.modulus / cert.bin_width);
    if (rep.modulus <= cert.bound) bin = std::min(bin, kBins - 1);
    ++cert.histogram[bin];
    if (rep.modulus > cert.max_modulus) {
      cert.max_modulus = rep.modulus;
      cert.worst_a = a;
    }
    if (!rep.pass) cert.pass = false;
    if (sink) (*sink)(rep);
    ++cert.tested;
  };

  if (cert.exhaustive) {
    for (u64 a = 1; a < N; ++a) visit(a);
  } else {
    Rng rng(sample_seed);
    for (int i = 0; i < 10'000; ++i) visit(1 + rng.bounded(N - 1));
  }
  return cert;
}

std::string katz_csv_header() { return "a,re,im,modulus,bound,pass\n"; }

std::string katz_csv_row(const KatzSumReport& rep) {
  std::string out = std::to_string(rep.a);
  out += ',';
  out += io::format_double(rep.value.real());
  out += ',';
  out += io::format_double(rep.value.imag());
  out += ',';
  out += io::format_double(rep.modulus);
  out += ',';
  out += io::format_double(rep.bound);
  out += ',';
  out += rep.pass ? '1' : '0';
  out += '\n';
  return out;
}

}  // namespace fcs
