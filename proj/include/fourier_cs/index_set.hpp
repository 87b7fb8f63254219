#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "fourier_cs/field.hpp"

namespace fcs {

enum class Variant { full, quotient, amub };

std::string variant_name(Variant v);
Variant variant_from_name(const std::string& name);

/// Row-selection set M for the partial Fourier matrix, together with the
/// construction it came from. Indices are sorted ascending; the contract
/// is set equality, not the enumeration order of t.
struct IndexSet {
  Variant variant = Variant::full;
  Field field;
  FieldElement g;
  FieldElement alpha;
  int b = 0;  // quotient divisor, meaningful only for Variant::quotient
  u64 N = 0;
  std::vector<u64> indices;

  u64 N_full() const { return field.group_order(); }
};

/// Column-index partition of the union-of-orthonormal-bases construction:
/// q-1 blocks T_j = {j + k(q-1) : 0 <= k <= q} covering {0,...,q^2-2}.
struct AmubPartition {
  u64 q = 0;
  std::vector<std::vector<u64>> blocks;
};

AmubPartition amub_partition(u64 q);

/// M = {log_g(t - alpha) : t in GF(q)} with N = q^n - 1.
/// Requires n > 1, g primitive, and GF(q)(alpha) = GF(q^n).
IndexSet build_full(const Field& field, const FieldElement& g,
                    const FieldElement& alpha);

/// M = {log_g(t - alpha) mod N : t in GF(q)} with N = (q^n - 1)/(p^b - 1),
/// b | a. Distinctness of the q residues is asserted at runtime.
IndexSet build_quotient(const Field& field, const FieldElement& g,
                        const FieldElement& alpha, int b);

/// Index set M united with {0} (q+1 rows) plus the column partition; the
/// resulting matrix's columns form q-1 orthonormal bases. Requires n = 2.
std::pair<IndexSet, AmubPartition> build_amub(const Field& field,
                                              const FieldElement& g,
                                              const FieldElement& alpha);

/// Structured text record {p,a,n,variant,b?,modulus,g,alpha,N,indices};
/// an optional scale line turns it into the compact matrix record.
/// Round-trip is bit-exact.
std::string write_record(const IndexSet& set,
                         std::optional<double> scale = std::nullopt);
struct ParsedRecord {
  IndexSet set;
  std::optional<double> scale;
};
ParsedRecord read_record(const std::string& text);

}  // namespace fcs
