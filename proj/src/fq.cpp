// fq.cpp -- finite field construction and arithmetic.

#include "relh/fq.hpp"

#include <cassert>
#include <map>
#include <memory>
#include <stdexcept>

namespace relh {

namespace {

u64 ipow_u64(u64 b, int e) {
  u64 t = 1;
  while (e-- > 0) t *= b;
  return t;
}

// --- tiny F_p[x] helpers used only for modulus selection -------------------

using PVec = std::vector<int>;  // dense coefficients, low to high, values in [0,p)

PVec pv_trim(PVec a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

PVec pv_mulmod(const PVec& a, const PVec& b, const PVec& f, int p) {
  // (a*b) mod f, f monic.
  std::vector<int> t(a.size() + b.size(), 0);
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i])
      for (size_t j = 0; j < b.size(); ++j)
        t[i + j] = (int)((t[i + j] + (i64)a[i] * b[j]) % p);
  int df = (int)f.size() - 1;
  for (int i = (int)t.size() - 1; i >= df; --i) {
    int c = t[i];
    if (!c) continue;
    t[i] = 0;
    for (int j = 0; j < df; ++j)
      t[i - df + j] = (int)(((i64)t[i - df + j] - (i64)c * f[j]) % p + p) % p;
  }
  t.resize(df);
  return t;
}

PVec pv_powmod_x(const PVec& f, int p, u64 e) {
  // x^e mod f
  PVec base{0, 1}, acc{1};
  while (e) {
    if (e & 1) acc = pv_mulmod(acc, base, f, p);
    base = pv_mulmod(base, base, f, p);
    e >>= 1;
  }
  return acc;
}

PVec pv_gcd(PVec a, PVec b, int p) {
  a = pv_trim(a);
  b = pv_trim(b);
  // inverse table mod p
  std::vector<int> inv(p, 0);
  for (int i = 1; i < p; ++i)
    for (int j = 1; j < p; ++j)
      if (i * j % p == 1) inv[i] = j;
  while (!b.empty()) {
    // a mod b
    while (a.size() >= b.size() && !a.empty()) {
      int c = (int)((i64)a.back() * inv[b.back()] % p);
      size_t off = a.size() - b.size();
      for (size_t j = 0; j < b.size(); ++j)
        a[off + j] = (int)(((i64)a[off + j] - (i64)c * b[j]) % p + p) % p;
      a = pv_trim(a);
    }
    std::swap(a, b);
  }
  return a;
}

bool pv_is_irreducible(const PVec& f, int p) {
  int r = (int)f.size() - 1;
  if (r < 1) return false;
  if (r == 1) return true;
  // x^(p^r) == x mod f, and gcd(x^(p^(r/l)) - x, f) = 1 for primes l | r.
  PVec xq = pv_powmod_x(f, p, ipow_u64(p, r));
  PVec x{0, 1};
  if (pv_trim(xq) != pv_trim(x)) {
    // compare x^(p^r) with x directly
    return false;
  }
  for (int l = 2; l <= r; ++l) {
    if (r % l) continue;
    bool prime = true;
    for (int d = 2; d * d <= l; ++d)
      if (l % d == 0) prime = false;
    if (!prime) continue;
    PVec t = pv_powmod_x(f, p, ipow_u64(p, r / l));
    // t - x
    if (t.size() < 2) t.resize(2, 0);
    t[1] = (t[1] - 1 % p + p) % p;
    if (pv_gcd(t, f, p).size() != 1) return false;
  }
  return true;
}

}  // namespace

std::vector<int> smallest_irreducible(int p, int r) {
  if (r == 1) return {0};  // modulus x; unused for prime fields
  u64 n = ipow_u64(p, r);
  for (u64 t = 0; t < n; ++t) {
    PVec f(r + 1, 0);
    u64 w = t;
    for (int i = 0; i < r; ++i) {
      f[i] = (int)(w % p);
      w /= p;
    }
    f[r] = 1;
    if (pv_is_irreducible(f, p)) {
      f.pop_back();
      return f;
    }
  }
  throw std::runtime_error("no irreducible polynomial found");
}

const Field* Field::get(int p, int r) {
  static std::map<std::pair<int, int>, std::unique_ptr<Field>> cache;
  auto key = std::make_pair(p, r);
  auto it = cache.find(key);
  if (it == cache.end())
    it = cache.emplace(key, std::unique_ptr<Field>(new Field(p, r))).first;
  return it->second.get();
}

Field::Field(int p_, int r_) : p(p_), r(r_) {
  assert(p >= 2 && r >= 1);
  q = ipow_u64(p, r);
  modulus_c = smallest_irreducible(p, r);
  modulus_c.push_back(1);
  if (r == 1) modulus_c = {0, 1};
  if (q <= TABLE_MAX) build_tables();
  else {
    // find a generator without tables (rarely needed; only correctness path)
    std::vector<u64> pf;
    u64 m = q - 1;
    for (u64 d = 2; d * d <= m; ++d)
      while (m % d == 0) {
        pf.push_back(d);
        while (m % d == 0) m /= d;
        break;
      }
    if (m > 1) pf.push_back(m);
    for (u64 v = 1; v < q; ++v) {
      Fq c{v};
      bool ok = true;
      for (u64 l : pf)
        if (pow_generic(c, (q - 1) / l).v == 1) { ok = false; break; }
      if (ok) { generator_ = c; break; }
    }
  }
}

std::vector<int> Field::digits(Fq a) const {
  std::vector<int> d(r);
  u64 w = a.v;
  for (int i = 0; i < r; ++i) {
    d[i] = (int)(w % p);
    w /= p;
  }
  return d;
}

Fq Field::from_digits(const std::vector<int>& d) const {
  u64 v = 0;
  for (int i = r - 1; i >= 0; --i) {
    int c = i < (int)d.size() ? ((d[i] % p) + p) % p : 0;
    v = v * p + c;
  }
  return Fq{v};
}

Fq Field::add(Fq a, Fq b) const {
  if (p == 2) return Fq{a.v ^ b.v};
  u64 v = 0, pa = a.v, pb = b.v, mul = 1;
  for (int i = 0; i < r; ++i) {
    u64 s = pa % p + pb % p;
    if (s >= (u64)p) s -= p;
    v += s * mul;
    mul *= p;
    pa /= p;
    pb /= p;
  }
  return Fq{v};
}

Fq Field::neg(Fq a) const {
  if (p == 2) return a;
  u64 v = 0, pa = a.v, mul = 1;
  for (int i = 0; i < r; ++i) {
    u64 c = pa % p;
    v += (c ? p - c : 0) * mul;
    mul *= p;
    pa /= p;
  }
  return Fq{v};
}

Fq Field::sub(Fq a, Fq b) const { return add(a, neg(b)); }

Fq Field::mul(Fq a, Fq b) const {
  if (!a.v || !b.v) return Fq{0};
  if (tabled()) return Fq{exp_[log_[a.v] + log_[b.v]]};
  return mul_generic(a, b);
}

Fq Field::mul_generic(Fq a, Fq b) const {
  std::vector<int> da = digits(a), db = digits(b);
  std::vector<i64> t(2 * r, 0);
  for (int i = 0; i < r; ++i)
    if (da[i])
      for (int j = 0; j < r; ++j) t[i + j] += (i64)da[i] * db[j];
  for (int i = 2 * r - 1; i >= r; --i) {
    i64 c = t[i] % p;
    if (c) {
      for (int j = 0; j < r; ++j) t[i - r + j] -= c * modulus_c[j];
    }
    t[i] = 0;
  }
  u64 v = 0;
  for (int i = r - 1; i >= 0; --i) {
    i64 c = t[i] % p;
    if (c < 0) c += p;
    v = v * p + (u64)c;
  }
  return Fq{v};
}

Fq Field::inv(Fq a) const {
  assert(a.v != 0);
  if (tabled()) {
    u64 l = log_[a.v];
    return Fq{exp_[l ? q - 1 - l : 0]};
  }
  return pow_generic(a, q - 2);
}

Fq Field::pow(Fq a, u64 e) const {
  if (e == 0) return one();
  if (a.v == 0) return zero();
  if (tabled()) {
    u64 l = (log_[a.v] * (e % (q - 1))) % (q - 1);
    return Fq{exp_[l]};
  }
  return pow_generic(a, e);
}

Fq Field::pow_generic(Fq a, u64 e) const {
  Fq acc = one(), base = a;
  while (e) {
    if (e & 1) acc = mul_generic(acc, base);
    base = mul_generic(base, base);
    e >>= 1;
  }
  return acc;
}

Fq Field::frobenius(Fq a, int k) const {
  Fq t = a;
  for (int i = 0; i < k; ++i) t = pow(t, (u64)p);
  return t;
}

int Field::quadratic_character(Fq a) const {
  assert(p != 2);
  if (a.v == 0) return 0;
  if (tabled()) return (log_[a.v] & 1) ? -1 : 1;
  return pow_generic(a, (q - 1) / 2).v == 1 ? 1 : -1;
}

int Field::absolute_trace(Fq a) const {
  Fq t = a, s = a;
  for (int i = 1; i < r; ++i) {
    s = pow(s, (u64)p);
    t = add(t, s);
  }
  assert(t.v < (u64)p);
  return (int)t.v;
}

std::optional<Fq> Field::sqrt(Fq a) const {
  if (a.v == 0) return zero();
  if (p == 2) {
    Fq s = a;
    for (int i = 0; i < r - 1; ++i) s = mul(s, s);
    return s;
  }
  if (quadratic_character(a) != 1) return std::nullopt;
  if (tabled()) return Fq{exp_[log_[a.v] / 2]};
  // Tonelli-Shanks with a deterministic non-residue scan.
  u64 s = q - 1;
  int e = 0;
  while (!(s & 1)) { s >>= 1; ++e; }
  Fq n = zero();
  for (u64 v = 1; v < q; ++v)
    if (quadratic_character(Fq{v}) == -1) { n = Fq{v}; break; }
  Fq x = pow_generic(a, (s + 1) / 2);
  Fq b = pow_generic(a, s);
  Fq g = pow_generic(n, s);
  int rr = e;
  while (b.v != 1) {
    int m = 0;
    Fq t = b;
    while (t.v != 1) { t = mul(t, t); ++m; }
    Fq gs = g;
    for (int i = 0; i < rr - m - 1; ++i) gs = mul(gs, gs);
    x = mul(x, gs);
    g = mul(gs, gs);
    b = mul(b, g);
    rr = m;
  }
  return x;
}

void Field::build_tables() {
  // locate a generator by brute force using generic arithmetic
  std::vector<u64> pf;
  u64 m = q - 1;
  for (u64 d = 2; d * d <= m; ++d)
    if (m % d == 0) {
      pf.push_back(d);
      while (m % d == 0) m /= d;
    }
  if (m > 1) pf.push_back(m);
  for (u64 v = 1; v < q; ++v) {
    Fq c{v};
    bool ok = v != 1 || q == 2;
    for (u64 l : pf)
      if (ok && pow_generic(c, (q - 1) / l).v == 1) ok = false;
    if (ok) { generator_ = c; break; }
  }
  exp_.assign(2 * (q - 1), 0);
  log_.assign(q, 0xFFFFFFFFu);
  Fq t = one();
  for (u64 i = 0; i < q - 1; ++i) {
    exp_[i] = t.v;
    exp_[i + (q - 1)] = t.v;
    log_[t.v] = (u32)i;
    t = mul_generic(t, generator_);
  }
  assert(t.v == 1);
}

Fq Field::eval_poly(const std::vector<Fq>& c, Fq x) const {
  Fq acc = zero();
  for (size_t i = c.size(); i-- > 0;) acc = add(mul(acc, x), c[i]);
  return acc;
}

std::vector<Fq> Field::poly_roots(const std::vector<Fq>& c) const {
  assert(q <= (1u << 20));
  std::vector<Fq> roots;
  for (u64 v = 0; v < q; ++v)
    if (eval_poly(c, Fq{v}).v == 0) roots.push_back(Fq{v});
  return roots;
}

Fq Field::embed(const Field* sub, Fq a) const {
  if (sub == this) return a;
  assert(sub->p == p && r % sub->r == 0);
  if (sub->r == 1) return from_int((i64)a.v);
  for (auto& [key, tab] : embed_cache_)
    if (key == sub) return Fq{tab[a.v]};
  // build: root of sub's modulus here, then evaluate digit vectors.
  // All roots lie in the unique subfield of order sub->q, generated by
  // generator()^((q-1)/(sub->q-1)); scan that subgroup instead of the whole
  // field so large ambient fields stay cheap.  Canonical choice: the root
  // with the smallest packed value.
  std::vector<Fq> mc;
  for (int c : sub->modulus_c) mc.push_back(from_int(c));
  Fq gamma = pow(generator_, (q - 1) / (sub->q - 1));
  Fq theta = zero();
  bool found = false;
  Fq xi = one();
  for (u64 k = 0; k + 1 < sub->q; ++k) {
    if (eval_poly(mc, xi).v == 0 && (!found || xi.v < theta.v)) {
      theta = xi;
      found = true;
    }
    xi = mul(xi, gamma);
  }
  assert(found);
  std::vector<Fq> tp(sub->r, one());
  for (int i = 1; i < sub->r; ++i) tp[i] = mul(tp[i - 1], theta);
  std::vector<u64> tab(sub->q);
  for (u64 v = 0; v < sub->q; ++v) {
    Fq img = zero();
    u64 w = v;
    for (int i = 0; i < sub->r; ++i) {
      int d = (int)(w % sub->p);
      w /= sub->p;
      if (d) img = add(img, mul(from_int(d), tp[i]));
    }
    tab[v] = img.v;
  }
  embed_cache_.emplace_back(sub, std::move(tab));
  return Fq{embed_cache_.back().second[a.v]};
}

std::string Field::to_string(Fq a) const {
  if (r == 1) return std::to_string(a.v);
  auto d = digits(a);
  std::string s;
  for (int i = r - 1; i >= 0; --i) {
    if (!d[i]) continue;
    if (!s.empty()) s += "+";
    if (i == 0) s += std::to_string(d[i]);
    else {
      if (d[i] != 1) s += std::to_string(d[i]);
      s += "a";
      if (i > 1) s += "^" + std::to_string(i);
    }
  }
  return s.empty() ? "0" : s;
}

}  // namespace relh
