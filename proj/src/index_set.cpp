#include "fourier_cs/index_set.hpp"

#include <algorithm>
#include <cmath>

#include "fourier_cs/dlog.hpp"
#include "fourier_cs/io.hpp"

namespace fcs {

namespace {

void check_construction_inputs(const Field& field, const FieldElement& g,
                               const FieldElement& alpha) {
  if (field.n() <= 1)
    throw std::invalid_argument("construction requires extension degree n > 1");
  if (!field.is_primitive(g, field.factor_group_order()))
    throw std::invalid_argument("g is not a primitive root");
  if (field.frobenius_orbit_size(alpha) != field.n())
    throw std::invalid_argument(
        "alpha does not generate GF(q^n) over GF(q)");
}

std::vector<u64> log_coset(const Field& field, const FieldElement& g,
                           const FieldElement& alpha) {
  DlogTable table(field, g);
  std::vector<u64> logs;
  logs.reserve(field.q());
  for (const auto& t : field.subfield(g))
    logs.push_back(table.log(field.sub(t, alpha)));
  return logs;
}

}  // namespace

std::string variant_name(Variant v) {
  switch (v) {
    case Variant::full: return "full";
    case Variant::quotient: return "quotient";
    case Variant::amub: return "amub";
  }
  throw std::logic_error("unknown variant");
}

Variant variant_from_name(const std::string& name) {
  if (name == "full") return Variant::full;
  if (name == "quotient") return Variant::quotient;
  if (name == "amub") return Variant::amub;
  throw std::invalid_argument("unknown variant '" + name + "'");
}

AmubPartition amub_partition(u64 q) {
  AmubPartition part;
  part.q = q;
  part.blocks.resize(q - 1);
  for (u64 j = 0; j + 1 < q; ++j) {
    part.blocks[j].reserve(q + 1);
    for (u64 k = 0; k <= q; ++k) part.blocks[j].push_back(j + k * (q - 1));
  }
  return part;
}

IndexSet build_full(const Field& field, const FieldElement& g,
                    const FieldElement& alpha) {
  check_construction_inputs(field, g, alpha);
  IndexSet set;
  set.variant = Variant::full;
  set.field = field;
  set.g = g;
  set.alpha = alpha;
  set.N = field.group_order();
  set.indices = log_coset(field, g, alpha);
  std::sort(set.indices.begin(), set.indices.end());
  if (std::adjacent_find(set.indices.begin(), set.indices.end()) !=
      set.indices.end())
    throw std::logic_error("full construction produced duplicate indices");
  return set;
}

IndexSet build_quotient(const Field& field, const FieldElement& g,
                        const FieldElement& alpha, int b) {
  if (b < 1 || field.a() % b != 0)
    throw std::invalid_argument("quotient divisor b must divide a");
  check_construction_inputs(field, g, alpha);

  u64 pb = 1;
  for (int i = 0; i < b; ++i) pb *= static_cast<u64>(field.p());
  IndexSet set;
  set.variant = Variant::quotient;
  set.field = field;
  set.g = g;
  set.alpha = alpha;
  set.b = b;
  set.N = field.group_order() / (pb - 1);
  set.indices = log_coset(field, g, alpha);
  for (auto& m : set.indices) m %= set.N;
  std::sort(set.indices.begin(), set.indices.end());
  if (std::adjacent_find(set.indices.begin(), set.indices.end()) !=
      set.indices.end())
    throw std::logic_error(
        "quotient residues collided; construction invariant violated");
  return set;
}

std::pair<IndexSet, AmubPartition> build_amub(const Field& field,
                                              const FieldElement& g,
                                              const FieldElement& alpha) {
  if (field.n() != 2)
    throw std::invalid_argument("amub construction requires n = 2");
  IndexSet set = build_full(field, g, alpha);
  set.variant = Variant::amub;
  set.indices.insert(set.indices.begin(), 0);  // 0 is never in M when n = 2
  if (set.indices.size() > 1 && set.indices[1] == 0)
    throw std::logic_error("amub construction: 0 unexpectedly in M");
  return {std::move(set), amub_partition(field.q())};
}

std::string write_record(const IndexSet& set, std::optional<double> scale) {
  std::string out;
  out += "p=" + std::to_string(set.field.p()) + "\n";
  out += "a=" + std::to_string(set.field.a()) + "\n";
  out += "n=" + std::to_string(set.field.n()) + "\n";
  out += "variant=" + variant_name(set.variant) + "\n";
  if (set.variant == Variant::quotient)
    out += "b=" + std::to_string(set.b) + "\n";
  out += "modulus=" + io::format_coeffs(set.field.modulus()) + "\n";
  out += "g=" + io::format_coeffs(set.g.c) + "\n";
  out += "alpha=" + io::format_coeffs(set.alpha.c) + "\n";
  out += "N=" + std::to_string(set.N) + "\n";
  out += "indices=" + io::format_u64_list(set.indices) + "\n";
  if (scale) out += "scale=" + io::format_double(*scale) + "\n";
  return out;
}

ParsedRecord read_record(const std::string& text) {
  io::KvRecord kv = io::parse_kv(text);
  for (const auto& [key, value] : kv.entries) {
    (void)value;
    static const char* known[] = {"p", "a", "n", "variant", "b", "modulus",
                                  "g", "alpha", "N", "indices", "scale"};
    if (std::find_if(std::begin(known), std::end(known), [&](const char* k) {
          return key == k;
        }) == std::end(known))
      throw std::invalid_argument("unknown key '" + key + "' in record");
  }

  i64 p = static_cast<i64>(kv.get_u64("p"));
  int a = static_cast<int>(kv.get_u64("a"));
  int n = static_cast<int>(kv.get_u64("n"));
  Coeffs modulus = io::parse_coeffs(kv.get("modulus"));
  Field field = Field::make(p, a, n, modulus);

  ParsedRecord rec;
  rec.set.variant = variant_from_name(kv.get("variant"));
  rec.set.field = field;
  rec.set.g = field.element(io::parse_coeffs(kv.get("g")));
  rec.set.alpha = field.element(io::parse_coeffs(kv.get("alpha")));
  rec.set.N = kv.get_u64("N");
  rec.set.indices = io::parse_u64_list(kv.get("indices"));
  if (rec.set.variant == Variant::quotient) {
    rec.set.b = static_cast<int>(kv.get_u64("b"));
    if (rec.set.b < 1 || a % rec.set.b != 0)
      throw std::invalid_argument("record: b must divide a");
  } else if (kv.has("b")) {
    throw std::invalid_argument("record: b only valid for quotient variant");
  }

  // Structural validation.
  u64 expect_N;
  std::size_t expect_m;
  switch (rec.set.variant) {
    case Variant::full:
      expect_N = field.group_order();
      expect_m = static_cast<std::size_t>(field.q());
      break;
    case Variant::quotient: {
      u64 pb = 1;
      for (int i = 0; i < rec.set.b; ++i) pb *= static_cast<u64>(field.p());
      expect_N = field.group_order() / (pb - 1);
      expect_m = static_cast<std::size_t>(field.q());
      break;
    }
    case Variant::amub:
      if (n != 2) throw std::invalid_argument("record: amub requires n = 2");
      expect_N = field.group_order();
      expect_m = static_cast<std::size_t>(field.q()) + 1;
      break;
    default:
      throw std::logic_error("unknown variant");
  }
  if (rec.set.N != expect_N)
    throw std::invalid_argument("record: N inconsistent with field parameters");
  if (rec.set.indices.size() != expect_m)
    throw std::invalid_argument("record: wrong number of indices");
  if (!std::is_sorted(rec.set.indices.begin(), rec.set.indices.end()) ||
      std::adjacent_find(rec.set.indices.begin(), rec.set.indices.end()) !=
          rec.set.indices.end())
    throw std::invalid_argument("record: indices must be sorted and distinct");
  if (!rec.set.indices.empty() && rec.set.indices.back() >= rec.set.N)
    throw std::invalid_argument("record: index out of range");

  if (kv.has("scale")) {
    double s = kv.get_double("scale");
    double expect = 1.0 / std::sqrt(static_cast<double>(expect_m));
    if (std::abs(s - expect) > 1e-12)
      throw std::invalid_argument("record: scale inconsistent with row count");
    rec.scale = s;
  }
  return rec;
}

}  // namespace fcs
