#include "fourier_cs/sensing_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "fourier_cs/dft.hpp"
#include "fourier_cs/io.hpp"

namespace fcs {

Twiddles make_twiddles(u64 N) {
  auto table = std::make_shared<std::vector<cplx>>();
  table->reserve(N);
  for (u64 k = 0; k < N; ++k) {
    double ang = kTwoPi * static_cast<double>(k) / static_cast<double>(N);
    table->push_back({std::cos(ang), std::sin(ang)});
  }
  return table;
}

SensingMatrix::SensingMatrix(IndexSet set, Twiddles shared) {
  N_ = set.N;
  rows_ = set.indices;
  scale_ = 1.0 / std::sqrt(static_cast<double>(rows_.size()));
  set_ = std::move(set);
  tw_ = shared && (*shared).size() == N_ ? std::move(shared) : make_twiddles(N_);
}

SensingMatrix SensingMatrix::from_rows(u64 N, std::vector<u64> rows,
                                       Twiddles shared) {
  if (rows.empty()) throw std::invalid_argument("matrix needs at least one row");
  std::sort(rows.begin(), rows.end());
  if (std::adjacent_find(rows.begin(), rows.end()) != rows.end())
    throw std::invalid_argument("row indices must be distinct");
  if (rows.back() >= N) throw std::invalid_argument("row index out of range");
  SensingMatrix mat;
  mat.N_ = N;
  mat.rows_ = std::move(rows);
  mat.scale_ = 1.0 / std::sqrt(static_cast<double>(mat.rows_.size()));
  mat.tw_ = shared && (*shared).size() == N ? std::move(shared) : make_twiddles(N);
  return mat;
}

double SensingMatrix::mu_bound() const {
  if (set_ && (set_->variant == Variant::full || set_->variant == Variant::quotient))
    return static_cast<double>(set_->field.n() - 1) /
           std::sqrt(static_cast<double>(set_->field.q()));
  return std::numeric_limits<double>::quiet_NaN();
}

cplx SensingMatrix::entry(std::size_t r, u64 j) const {
  if (r >= rows_.size() || j >= N_)
    throw std::invalid_argument("entry index out of range");
  return scale_ * (*tw_)[mulmod(rows_[r], j, N_)];
}

std::vector<cplx> SensingMatrix::column(u64 j) const {
  if (j >= N_) throw std::invalid_argument("column index out of range");
  std::vector<cplx> col(rows_.size());
  for (std::size_t r = 0; r < rows_.size(); ++r)
    col[r] = scale_ * (*tw_)[mulmod(rows_[r], j, N_)];
  return col;
}

cplx SensingMatrix::inner_by_shift(u64 d) const {
  if (d >= N_) throw std::invalid_argument("shift out of range");
  CompensatedSum sum;
  for (u64 m : rows_) sum.add((*tw_)[mulmod(d, m, N_)]);
  return sum.value() * (scale_ * scale_);
}

cplx SensingMatrix::column_inner(u64 j, u64 k) const {
  if (j >= N_ || k >= N_) throw std::invalid_argument("column index out of range");
  u64 d = j >= k ? j - k : N_ - (k - j);
  return inner_by_shift(d);
}

std::vector<cplx> SensingMatrix::inner_profile() const {
  const auto& tw = *tw_;
  const double s2 = scale_ * scale_;
  std::vector<cplx> prof(N_);
  std::vector<u64> phase(rows_.size(), 0);
  for (u64 d = 0; d < N_; ++d) {
    cplx acc(0.0, 0.0);
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      acc += tw[phase[i]];
      phase[i] += rows_[i];
      if (phase[i] >= N_) phase[i] -= N_;
    }
    prof[d] = acc * s2;
  }
  return prof;
}

std::vector<cplx> SensingMatrix::apply(std::span<const cplx> x) const {
  if (x.size() != N_) throw std::invalid_argument("apply: dimension mismatch");
  const auto& tw = *tw_;
  std::vector<cplx> y(rows_.size());
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const u64 step = rows_[r];
    u64 s = 0;
    cplx acc(0.0, 0.0);
    for (u64 j = 0; j < N_; ++j) {
      acc += x[j] * tw[s];
      s += step;
      if (s >= N_) s -= N_;
    }
    y[r] = acc * scale_;
  }
  return y;
}

std::vector<cplx> SensingMatrix::apply_sparse(std::span<const u64> support,
                                              std::span<const cplx> values) const {
  if (support.size() != values.size())
    throw std::invalid_argument("apply_sparse: support/value size mismatch");
  const auto& tw = *tw_;
  std::vector<cplx> y(rows_.size(), cplx(0.0, 0.0));
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    cplx acc(0.0, 0.0);
    for (std::size_t i = 0; i < support.size(); ++i)
      acc += values[i] * tw[mulmod(rows_[r], support[i], N_)];
    y[r] = acc * scale_;
  }
  return y;
}

std::vector<cplx> SensingMatrix::adjoint(std::span<const cplx> y) const {
  if (y.size() != rows_.size())
    throw std::invalid_argument("adjoint: dimension mismatch");
  const auto& tw = *tw_;
  std::vector<cplx> z(N_, cplx(0.0, 0.0));
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const u64 step = rows_[r];
    const cplx yr = y[r];
    u64 s = 0;
    for (u64 j = 0; j < N_; ++j) {
      z[j] += yr * std::conj(tw[s]);
      s += step;
      if (s >= N_) s -= N_;
    }
  }
  for (auto& v : z) v *= scale_;
  return z;
}

double SensingMatrix::row_gram_deviation() const {
  const auto& tw = *tw_;
  const double c = static_cast<double>(N_) * scale_ * scale_;
  double worst = 0;
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    for (std::size_t s = r; s < rows_.size(); ++s) {
      u64 d = rows_[s] - rows_[r];
      CompensatedSum sum;
      u64 phase = 0;
      for (u64 j = 0; j < N_; ++j) {
        sum.add(tw[phase]);
        phase += d;
        if (phase >= N_) phase -= N_;
      }
      cplx v = sum.value() * (scale_ * scale_);
      double dev = r == s ? std::abs(v - c) : std::abs(v);
      worst = std::max(worst, dev);
    }
  }
  return worst;
}

namespace {

int k_max_from_mu(double mu) {
  return static_cast<int>(std::ceil((1.0 / mu + 1.0) / 2.0)) - 1;
}

CoherenceReport finish_report(const SensingMatrix& mat, double mu, u64 arg_d) {
  CoherenceReport rep;
  rep.mu = mu;
  rep.arg_j = arg_d;
  rep.arg_k = 0;
  double N = static_cast<double>(mat.cols());
  double m = static_cast<double>(mat.row_count());
  rep.welch = std::sqrt((N - m) / ((N - 1.0) * m));
  rep.bound = mat.mu_bound();
  rep.k_max = k_max_from_mu(mu);
  return rep;
}

}  // namespace

CoherenceReport coherence_bruteforce(const SensingMatrix& mat) {
  if (mat.cols() > 10'000)
    throw std::invalid_argument("coherence_bruteforce: N exceeds desk cap 10^4");
  std::vector<cplx> prof = mat.inner_profile();
  double mu = 0;
  u64 arg = 1;
  for (u64 d = 1; d < mat.cols(); ++d) {
    double v = std::abs(prof[d]);
    if (v > mu) {
      mu = v;
      arg = d;
    }
  }
  return finish_report(mat, mu, arg);
}

CoherenceReport coherence_fft(const SensingMatrix& mat) {
  if (mat.cols() > 1'000'000)
    throw std::invalid_argument("coherence_fft: N exceeds 10^6");
  std::vector<cplx> indicator(mat.cols(), cplx(0.0, 0.0));
  for (u64 m : mat.row_indices()) indicator[m] = cplx(1.0, 0.0);
  std::vector<cplx> spectrum = dft(indicator, +1);
  const double s2 = mat.scale() * mat.scale();
  double mu = 0;
  u64 arg = 1;
  for (u64 d = 1; d < mat.cols(); ++d) {
    double v = std::abs(spectrum[d]) * s2;
    if (v > mu) {
      mu = v;
      arg = d;
    }
  }
  return finish_report(mat, mu, arg);
}

AmubReport certify_amub(const SensingMatrix& mat, const AmubPartition& part) {
  const IndexSet* set = mat.index_set();
  if (!set || set->variant != Variant::amub)
    throw std::invalid_argument("certify_amub: matrix was not built by build_amub");
  const u64 q = set->field.q();
  if (part.q != q || part.blocks.size() != q - 1)
    throw std::invalid_argument("certify_amub: partition inconsistent with matrix");
  for (u64 j = 0; j + 1 < q; ++j) {
    if (part.blocks[j].size() != q + 1)
      throw std::invalid_argument("certify_amub: block has wrong size");
    for (u64 k = 0; k <= q; ++k)
      if (part.blocks[j][k] != j + k * (q - 1))
        throw std::invalid_argument("certify_amub: block is not the canonical progression");
  }

  constexpr double kTol = 1e-9;
  const double sq = std::sqrt(static_cast<double>(q));
  AmubReport rep;
  rep.lo = (sq - 1.0) / (q + 1.0);
  rep.hi = (sq + 1.0) / (q + 1.0);
  rep.min_cross = std::numeric_limits<double>::infinity();
  rep.max_cross = 0;
  rep.pass = true;

  // Inner products depend on the column difference only, so certifying all
  // shift classes certifies every pair: d = 0 mod (q-1) <=> same block.
  std::vector<cplx> prof = mat.inner_profile();
  rep.max_unitary_dev = std::abs(prof[0] - cplx(1.0, 0.0));
  for (u64 d = 1; d < mat.cols(); ++d) {
    double v = std::abs(prof[d]);
    if (d % (q - 1) == 0) {
      rep.max_unitary_dev = std::max(rep.max_unitary_dev, v);
      if (v > kTol && rep.pass) {
        rep.pass = false;
        rep.bad_j = d;
        rep.bad_k = 0;
      }
    } else {
      rep.min_cross = std::min(rep.min_cross, v);
      rep.max_cross = std::max(rep.max_cross, v);
      if ((v < rep.lo - kTol || v > rep.hi + kTol) && rep.pass) {
        rep.pass = false;
        rep.bad_j = d;
        rep.bad_k = 0;
      }
    }
  }
  return rep;
}

std::string dense_csv(const SensingMatrix& mat) {
  std::string out;
  for (u64 j = 0; j < mat.cols(); ++j) {
    if (j) out += ',';
    out += 'c';
    out += std::to_string(j);
  }
  out += '\n';
  for (std::size_t r = 0; r < mat.row_count(); ++r) {
    for (u64 j = 0; j < mat.cols(); ++j) {
      if (j) out += ',';
      out += io::format_entry(mat.entry(r, j));
    }
    out += '\n';
  }
  return out;
}

}  // namespace fcs
