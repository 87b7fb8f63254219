#include "fourier_cs/field.hpp"

#include <algorithm>

#include "fourier_cs/common.hpp"

namespace fcs {

namespace {

bool is_prime_i64(i64 p) {
  if (p < 2) return false;
  for (i64 d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

// -- dense polynomial helpers over GF(p), used for modulus validation --
// Polynomials are coefficient vectors (constant first) with no canonical
// length; deg(0) is represented by the empty vector.

using Poly = std::vector<i64>;

Poly trim(Poly f, i64 p) {
  for (auto& c : f) c = ((c % p) + p) % p;
  while (!f.empty() && f.back() == 0) f.pop_back();
  return f;
}

Poly poly_mul(const Poly& f, const Poly& g, i64 p) {
  if (f.empty() || g.empty()) return {};
  Poly out(f.size() + g.size() - 1, 0);
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (f[i] == 0) continue;
    for (std::size_t j = 0; j < g.size(); ++j)
      out[i + j] = (out[i + j] + f[i] * g[j]) % p;
  }
  return trim(std::move(out), p);
}

i64 inv_mod_p(i64 x, i64 p) {
  i64 r = 1, b = x % p, e = p - 2;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

Poly poly_mod(Poly f, const Poly& m, i64 p) {
  f = trim(std::move(f), p);
  i64 lead_inv = inv_mod_p(m.back(), p);
  while (f.size() >= m.size()) {
    i64 factor = f.back() * lead_inv % p;
    std::size_t shift = f.size() - m.size();
    for (std::size_t i = 0; i < m.size(); ++i)
      f[shift + i] = ((f[shift + i] - factor * m[i]) % p + p) % p;
    f = trim(std::move(f), p);
    if (f.empty()) break;
  }
  return f;
}

Poly poly_powmod(Poly base, u64 e, const Poly& m, i64 p) {
  Poly r{1};
  base = poly_mod(std::move(base), m, p);
  while (e) {
    if (e & 1) r = poly_mod(poly_mul(r, base, p), m, p);
    base = poly_mod(poly_mul(base, base, p), m, p);
    e >>= 1;
  }
  return r;
}

Poly poly_gcd(Poly f, Poly g, i64 p) {
  f = trim(std::move(f), p);
  g = trim(std::move(g), p);
  while (!g.empty()) {
    Poly r = poly_mod(f, g, p);
    f = std::move(g);
    g = std::move(r);
  }
  return f;
}

// Rabin's irreducibility test: f of degree d is irreducible over GF(p) iff
// x^(p^d) == x (mod f) and gcd(x^(p^(d/r)) - x, f) = 1 for each prime r | d.
bool poly_irreducible(const Poly& f, i64 p) {
  int d = static_cast<int>(f.size()) - 1;
  if (d < 1) return false;
  Poly x{0, 1};
  std::vector<int> prime_divs;
  int rem = d;
  for (int r = 2; r * r <= rem; ++r)
    if (rem % r == 0) {
      prime_divs.push_back(r);
      while (rem % r == 0) rem /= r;
    }
  if (rem > 1) prime_divs.push_back(rem);

  // x^(p^j) mod f by iterated p-th powers.
  auto frob_iterate = [&](int steps) {
    Poly h = x;
    for (int j = 0; j < steps; ++j)
      h = poly_powmod(h, static_cast<u64>(p), f, p);
    return h;
  };
  for (int r : prime_divs) {
    Poly h = frob_iterate(d / r);
    Poly diff = h;
    diff.resize(std::max<std::size_t>(diff.size(), 2), 0);
    diff[1] = ((diff[1] - 1) % p + p) % p;  // h - x
    Poly g = poly_gcd(f, trim(std::move(diff), p), p);
    if (g.size() != 1) return false;
  }
  Poly h = frob_iterate(d);
  // Compare against x reduced mod f (x is a constant when deg f = 1).
  return trim(std::move(h), p) == poly_mod(x, f, p);
}

u64 checked_pow_order(i64 p, int e) {
  unsigned __int128 v = 1;
  for (int i = 0; i < e; ++i) {
    v *= static_cast<unsigned __int128>(p);
    if (v >= (static_cast<unsigned __int128>(1) << 63))
      throw std::invalid_argument("field order must be below 2^63");
  }
  return static_cast<u64>(v);
}

}  // namespace

u64 Factorization::value() const {
  u64 v = 1;
  for (auto [prime, exp] : factors)
    for (int i = 0; i < exp; ++i) v *= prime;
  return v;
}

Factorization factor_u64(u64 n) {
  if (n < 2) throw std::invalid_argument("factor_u64: n must be >= 2");
  constexpr u64 kTrialCap = 1u << 24;
  Factorization out;
  u64 rem = n;
  for (u64 d = 2; d <= kTrialCap && d * d <= rem; d += (d == 2 ? 1 : 2)) {
    if (rem % d) continue;
    int e = 0;
    while (rem % d == 0) {
      rem /= d;
      ++e;
    }
    out.factors.emplace_back(d, e);
  }
  if (rem > 1) {
    if (rem > kTrialCap * kTrialCap)
      throw std::invalid_argument(
          "factor_u64: cofactor too large for trial division at desk scale");
    out.factors.emplace_back(rem, 1);  // no divisor <= sqrt(rem): prime
  }
  return out;
}

Field Field::make(i64 p, int a, int n, const std::optional<Coeffs>& modulus) {
  if (!is_prime_i64(p)) throw std::invalid_argument("p is not prime");
  if (p >= (i64{1} << 31)) throw std::invalid_argument("p must be < 2^31");
  if (a < 1 || n < 1) throw std::invalid_argument("degrees must be >= 1");

  Field F;
  F.p_ = p;
  F.a_ = a;
  F.n_ = n;
  F.order_ = checked_pow_order(p, a * n);
  F.q_ = checked_pow_order(p, a);

  int d = a * n;
  if (modulus) {
    Coeffs m = *modulus;
    if (static_cast<int>(m.size()) != d + 1)
      throw std::invalid_argument("modulus degree must equal a*n");
    Poly mm(m.begin(), m.end());
    mm = trim(std::move(mm), p);
    if (static_cast<int>(mm.size()) != d + 1 || mm.back() != 1)
      throw std::invalid_argument("modulus must be monic of degree a*n");
    if (!poly_irreducible(mm, p))
      throw std::invalid_argument("modulus is reducible over GF(p)");
    F.modulus_.assign(mm.begin(), mm.end());
  } else {
    // First irreducible monic polynomial, constant term varying fastest.
    u64 span = checked_pow_order(p, d);
    for (u64 c = 0;; ++c) {
      if (c >= span)
        throw std::logic_error("no irreducible polynomial found");  // unreachable
      Poly cand(d + 1, 0);
      u64 rest = c;
      for (int i = 0; i < d; ++i) {
        cand[i] = static_cast<i64>(rest % p);
        rest /= p;
      }
      cand[d] = 1;
      if (poly_irreducible(cand, p)) {
        F.modulus_.assign(cand.begin(), cand.end());
        break;
      }
    }
  }
  return F;
}

FieldElement Field::zero() const { return {Coeffs(degree(), 0)}; }

FieldElement Field::one() const {
  Coeffs c(degree(), 0);
  c[0] = 1;
  return {c};
}

FieldElement Field::gen() const {
  if (degree() < 2)
    return from_int(((-modulus_[0]) % p_ + p_) % p_);  // x = -c0 mod (x + c0)
  Coeffs c(degree(), 0);
  c[1] = 1;
  return {c};
}

FieldElement Field::from_int(i64 t) const {
  Coeffs c(degree(), 0);
  c[0] = static_cast<std::int32_t>(((t % p_) + p_) % p_);
  return {c};
}

FieldElement Field::element(const Coeffs& raw) const {
  Poly f(raw.begin(), raw.end());
  f = poly_mod(std::move(f), Poly(modulus_.begin(), modulus_.end()), p_);
  Coeffs c(degree(), 0);
  for (std::size_t i = 0; i < f.size(); ++i)
    c[i] = static_cast<std::int32_t>(f[i]);
  return {c};
}

bool Field::is_zero(const FieldElement& e) const {
  return std::all_of(e.c.begin(), e.c.end(), [](auto v) { return v == 0; });
}

FieldElement Field::add(const FieldElement& x, const FieldElement& y) const {
  FieldElement r = x;
  for (int i = 0; i < degree(); ++i) {
    r.c[i] += y.c[i];
    if (r.c[i] >= p_) r.c[i] -= static_cast<std::int32_t>(p_);
  }
  return r;
}

FieldElement Field::sub(const FieldElement& x, const FieldElement& y) const {
  FieldElement r = x;
  for (int i = 0; i < degree(); ++i) {
    r.c[i] -= y.c[i];
    if (r.c[i] < 0) r.c[i] += static_cast<std::int32_t>(p_);
  }
  return r;
}

FieldElement Field::neg(const FieldElement& x) const {
  FieldElement r = x;
  for (int i = 0; i < degree(); ++i)
    if (r.c[i] != 0) r.c[i] = static_cast<std::int32_t>(p_) - r.c[i];
  return r;
}

FieldElement Field::mul(const FieldElement& x, const FieldElement& y) const {
  int d = degree();
  std::vector<i64> prod(2 * d - 1, 0);
  for (int i = 0; i < d; ++i) {
    if (x.c[i] == 0) continue;
    i64 xi = x.c[i];
    for (int j = 0; j < d; ++j)
      prod[i + j] = (prod[i + j] + xi * y.c[j]) % p_;
  }
  // Reduce by the monic modulus.
  for (int i = 2 * d - 2; i >= d; --i) {
    i64 lead = prod[i];
    if (lead == 0) continue;
    int shift = i - d;
    for (int j = 0; j < d; ++j)
      prod[shift + j] = ((prod[shift + j] - lead * modulus_[j]) % p_ + p_) % p_;
    prod[i] = 0;
  }
  FieldElement r;
  r.c.resize(d);
  for (int i = 0; i < d; ++i) r.c[i] = static_cast<std::int32_t>(prod[i]);
  return r;
}

FieldElement Field::pow_u64(const FieldElement& x, u64 k) const {
  FieldElement r = one();
  FieldElement b = x;
  while (k) {
    if (k & 1) r = mul(r, b);
    b = mul(b, b);
    k >>= 1;
  }
  return r;
}

FieldElement Field::pow(const FieldElement& x, i64 k) const {
  if (is_zero(x)) {
    if (k < 0) throw std::invalid_argument("pow: negative exponent of zero");
    return k == 0 ? one() : zero();
  }
  u64 go = group_order();
  i64 red = k % static_cast<i64>(go);
  if (red < 0) red += static_cast<i64>(go);
  return pow_u64(x, static_cast<u64>(red));
}

FieldElement Field::inv(const FieldElement& x) const {
  if (is_zero(x)) throw std::invalid_argument("inv(0) is undefined");
  return pow_u64(x, group_order() - 1);
}

u64 Field::encode(const FieldElement& e) const {
  u64 code = 0;
  for (int i = degree() - 1; i >= 0; --i)
    code = code * static_cast<u64>(p_) + static_cast<u64>(e.c[i]);
  return code;
}

FieldElement Field::decode(u64 code) const {
  FieldElement e;
  e.c.resize(degree());
  for (int i = 0; i < degree(); ++i) {
    e.c[i] = static_cast<std::int32_t>(code % static_cast<u64>(p_));
    code /= static_cast<u64>(p_);
  }
  if (code != 0) throw std::invalid_argument("decode: code out of range");
  return e;
}

Factorization Field::factor_group_order() const {
  return factor_u64(group_order());
}

bool Field::is_primitive(const FieldElement& g, const Factorization& fact) const {
  if (is_zero(g)) throw std::invalid_argument("is_primitive: zero element");
  for (auto [prime, exp] : fact.factors) {
    (void)exp;
    if (pow_u64(g, group_order() / prime) == one()) return false;
  }
  return true;
}

FieldElement Field::find_primitive_root() const {
  if (order() > (u64{1} << 24))
    throw std::invalid_argument("find_primitive_root: field too large to enumerate");
  Factorization fact = factor_group_order();
  for (u64 code = 1; code < order(); ++code) {
    FieldElement e = decode(code);
    if (is_primitive(e, fact)) return e;
  }
  throw std::logic_error("no primitive root found");  // unreachable
}

int Field::frobenius_orbit_size(const FieldElement& e) const {
  FieldElement cur = e;
  for (int j = 1; j <= n_; ++j) {
    cur = pow_u64(cur, q_);
    if (cur == e) return j;
  }
  throw std::logic_error("frobenius orbit exceeds extension degree");
}

std::vector<FieldElement> Field::subfield(const FieldElement& g) const {
  u64 step = group_order() / (q_ - 1);
  std::vector<FieldElement> elems;
  elems.reserve(q_);
  elems.push_back(zero());
  FieldElement h = pow_u64(g, step);
  FieldElement cur = one();
  for (u64 k = 0; k + 1 < q_; ++k) {
    elems.push_back(cur);
    cur = mul(cur, h);
  }
  if (!(cur == one()))
    throw std::invalid_argument("subfield: g is not a primitive root");
  return elems;
}

}  // namespace fcs
