#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "fourier_cs/common.hpp"
#include "fourier_cs/field.hpp"

namespace fcs::io {

/// Polynomial text format: comma-separated coefficients, constant term
/// first ("2,0,1" is x^2 + 2). parse(format(c)) == c exactly.
std::string format_coeffs(const Coeffs& c);
Coeffs parse_coeffs(std::string_view text);

std::string format_u64_list(const std::vector<u64>& v);
std::vector<u64> parse_u64_list(std::string_view text);

/// %.17g -- shortest form that round-trips a double through text.
std::string format_double(double v);
/// Fixed 17-significant-digit complex entry, "re+imi".
std::string format_entry(cplx v);

u64 fnv1a64(std::string_view bytes);
std::string digest_hex(std::string_view bytes);

/// key=value lines in file order; '#' starts a comment; blank lines
/// skipped. Errors carry 1-based line numbers.
struct KvRecord {
  std::vector<std::pair<std::string, std::string>> entries;
  std::vector<std::size_t> lines;

  bool has(const std::string& key) const;
  const std::string& get(const std::string& key) const;
  u64 get_u64(const std::string& key) const;
  double get_double(const std::string& key) const;
};
KvRecord parse_kv(std::string_view text);

std::string read_file(const std::string& path);
/// Writes via a temp file in the same directory, then renames into place.
void atomic_write_file(const std::string& path, std::string_view content);

}  // namespace fcs::io
