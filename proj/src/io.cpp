#include "fourier_cs/io.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace fcs::io {

namespace {

std::string trim(std::string_view s) {
  std::size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = s.find(sep, start);
    if (pos == std::string_view::npos) {
      out.emplace_back(s.substr(start));
      return out;
    }
    out.emplace_back(s.substr(start, pos - start));
    start = pos + 1;
  }
}

i64 parse_i64(const std::string& tok, const char* what) {
  std::size_t used = 0;
  i64 v;
  try {
    v = std::stoll(tok, &used);
  } catch (const std::exception&) {
    throw std::invalid_argument(std::string("cannot parse ") + what + ": '" + tok + "'");
  }
  if (used != tok.size())
    throw std::invalid_argument(std::string("trailing junk in ") + what + ": '" + tok + "'");
  return v;
}

}  // namespace

std::string format_coeffs(const Coeffs& c) {
  std::string out;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(c[i]);
  }
  return out;
}

Coeffs parse_coeffs(std::string_view text) {
  Coeffs out;
  for (const auto& tok : split(text, ',')) {
    std::string t = trim(tok);
    if (t.empty()) throw std::invalid_argument("empty coefficient in polynomial");
    i64 v = parse_i64(t, "coefficient");
    if (v < INT32_MIN || v > INT32_MAX)
      throw std::invalid_argument("coefficient out of 32-bit range");
    out.push_back(static_cast<std::int32_t>(v));
  }
  if (out.empty()) throw std::invalid_argument("empty polynomial");
  return out;
}

std::string format_u64_list(const std::vector<u64>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(v[i]);
  }
  return out;
}

std::vector<u64> parse_u64_list(std::string_view text) {
  std::vector<u64> out;
  for (const auto& tok : split(text, ',')) {
    std::string t = trim(tok);
    i64 v = parse_i64(t, "index");
    if (v < 0) throw std::invalid_argument("index must be non-negative");
    out.push_back(static_cast<u64>(v));
  }
  return out;
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string format_entry(cplx v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.16e%+.16ei", v.real(), v.imag());
  return buf;
}

u64 fnv1a64(std::string_view bytes) {
  u64 h = 0xcbf29ce484222325ull;
  for (unsigned char b : bytes) {
    h ^= b;
    h *= 0x100000001b3ull;
  }
  return h;
}

std::string digest_hex(std::string_view bytes) {
  char buf[24];
  std::snprintf(buf, sizeof(buf), "fnv1a:%016llx",
                static_cast<unsigned long long>(fnv1a64(bytes)));
  return buf;
}

bool KvRecord::has(const std::string& key) const {
  for (const auto& [k, v] : entries)
    if (k == key) return true;
  return false;
}

const std::string& KvRecord::get(const std::string& key) const {
  for (const auto& [k, v] : entries)
    if (k == key) return v;
  throw std::invalid_argument("missing key '" + key + "'");
}

u64 KvRecord::get_u64(const std::string& key) const {
  i64 v = parse_i64(get(key), key.c_str());
  if (v < 0) throw std::invalid_argument("key '" + key + "' must be non-negative");
  return static_cast<u64>(v);
}

double KvRecord::get_double(const std::string& key) const {
  const std::string& tok = get(key);
  std::size_t used = 0;
  double v;
  try {
    v = std::stod(tok, &used);
  } catch (const std::exception&) {
    throw std::invalid_argument("cannot parse '" + key + "': '" + tok + "'");
  }
  if (used != tok.size())
    throw std::invalid_argument("trailing junk in '" + key + "': '" + tok + "'");
  return v;
}

KvRecord parse_kv(std::string_view text) {
  KvRecord rec;
  std::size_t lineno = 0;
  for (const auto& raw : split(text, '\n')) {
    ++lineno;
    std::string line = trim(raw);
    if (line.empty() || line[0] == '#') continue;
    std::size_t eq = line.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("line " + std::to_string(lineno) +
                                  ": expected key=value, got '" + line + "'");
    std::string key = trim(line.substr(0, eq));
    std::string val = trim(line.substr(eq + 1));
    if (key.empty())
      throw std::invalid_argument("line " + std::to_string(lineno) + ": empty key");
    for (const auto& [k, v] : rec.entries)
      if (k == key)
        throw std::invalid_argument("line " + std::to_string(lineno) +
                                    ": duplicate key '" + key + "'");
    rec.entries.emplace_back(std::move(key), std::move(val));
    rec.lines.push_back(lineno);
  }
  return rec;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void atomic_write_file(const std::string& path, std::string_view content) {
  namespace fs = std::filesystem;
  fs::path target(path);
  if (target.has_parent_path()) fs::create_directories(target.parent_path());
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write file: " + tmp.string());
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out) throw std::runtime_error("short write: " + tmp.string());
  }
  fs::rename(tmp, target);
}

}  // namespace fcs::io
