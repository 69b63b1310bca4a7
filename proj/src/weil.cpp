// weil.cpp -- Weil polynomial arithmetic over the integers.

#include "relh/weil.hpp"

#include <cassert>
#include <numeric>
#include <stdexcept>

namespace relh {

int zpoly_deg(const ZPoly& f) {
  int d = (int)f.size() - 1;
  while (d >= 0 && f[d] == 0) --d;
  return d;
}

ZPoly zpoly_mul(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly c(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  return c;
}

ZPoly zpoly_add(const ZPoly& a, const ZPoly& b) {
  ZPoly c(std::max(a.size(), b.size()), 0);
  for (size_t i = 0; i < c.size(); ++i) {
    if (i < a.size()) c[i] += a[i];
    if (i < b.size()) c[i] += b[i];
  }
  return c;
}

ZPoly zpoly_neg(const ZPoly& a) {
  ZPoly c = a;
  for (auto& x : c) x = -x;
  return c;
}

bool zpoly_divides(const ZPoly& b, const ZPoly& a, ZPoly* quot) {
  int db = zpoly_deg(b), da = zpoly_deg(a);
  if (db < 0) return da < 0;
  ZPoly rem(a.begin(), a.begin() + (da + 1));
  if (da < 0) rem.clear();
  ZPoly q(da >= db ? da - db + 1 : 0, 0);
  for (int i = da; i >= db; --i) {
    if (rem[i] == 0) continue;
    if (rem[i] % b[db] != 0) return false;
    i128 t = rem[i] / b[db];
    q[i - db] = t;
    for (int j = 0; j <= db; ++j) rem[i - db + j] -= t * b[j];
  }
  if (zpoly_deg(rem) >= 0) return false;
  if (quot) *quot = q;
  return true;
}

ZPoly zpoly_divexact(const ZPoly& a, const ZPoly& b) {
  ZPoly q;
  if (!zpoly_divides(b, a, &q)) throw std::runtime_error("zpoly_divexact: not divisible");
  return q;
}

i128 zpoly_eval(const ZPoly& f, i128 x) {
  i128 acc = 0;
  for (size_t i = f.size(); i-- > 0;) acc = acc * x + f[i];
  return acc;
}

bool zpoly_eq(const ZPoly& a, const ZPoly& b) {
  int da = zpoly_deg(a), db = zpoly_deg(b);
  if (da != db) return false;
  for (int i = 0; i <= da; ++i) if (a[i] != b[i]) return false;
  return true;
}

i128 zpoly_resultant(const ZPoly& a0, const ZPoly& b0) {
  int m = zpoly_deg(a0), n = zpoly_deg(b0);
  if (m < 0 || n < 0) return 0;
  if (m == 0) return ipow128(a0[0], n);
  if (n == 0) return ipow128(b0[0], m);
  int N = m + n;
  std::vector<std::vector<i128>> s(N, std::vector<i128>(N, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j <= m; ++j) s[i][i + j] = a0[m - j];
  for (int i = 0; i < m; ++i)
    for (int j = 0; j <= n; ++j) s[n + i][i + j] = b0[n - j];
  // Bareiss fraction-free elimination
  i128 prev = 1, sign = 1;
  for (int k = 0; k < N - 1; ++k) {
    if (s[k][k] == 0) {
      int piv = -1;
      for (int i = k + 1; i < N; ++i)
        if (s[i][k] != 0) { piv = i; break; }
      if (piv < 0) return 0;
      std::swap(s[k], s[piv]);
      sign = -sign;
    }
    for (int i = k + 1; i < N; ++i)
      for (int j = k + 1; j < N; ++j)
        s[i][j] = (s[i][j] * s[k][k] - s[i][k] * s[k][j]) / prev;
    prev = s[k][k];
  }
  return sign * s[N - 1][N - 1];
}

std::string i128_str(i128 x) {
  if (x == 0) return "0";
  bool neg = x < 0;
  u128_t u = neg ? (u128_t)(-x) : (u128_t)x;
  std::string s;
  while (u) {
    s += char('0' + (int)(u % 10));
    u /= 10;
  }
  if (neg) s += '-';
  return {s.rbegin(), s.rend()};
}

i128 ipow128(i128 b, int e) {
  i128 t = 1;
  while (e-- > 0) t *= b;
  return t;
}

// --- isogeny classes ---------------------------------------------------------

ZPoly weil_poly(const IsogClass& c) {
  ZPoly P(2 * c.g + 1, 0);
  P[0] = 1;
  for (int i = 1; i <= c.g; ++i) P[i] = c.a[i - 1];
  for (int i = 0; i < c.g; ++i) P[2 * c.g - i] = ipow128(c.q, c.g - i) * P[i];
  return P;
}

IsogClass weil_from_counts(int q, int g, const std::vector<i64>& counts) {
  assert((int)counts.size() >= g);
  std::vector<i128> p(g + 1, 0), cc(g + 1, 0);
  for (int r = 1; r <= g; ++r) p[r] = ipow128(q, r) + 1 - counts[r - 1];
  cc[0] = 1;
  for (int n = 1; n <= g; ++n) {
    i128 s = 0;
    for (int k = 1; k <= n; ++k) s += p[k] * cc[n - k];
    assert(s % n == 0);
    cc[n] = -s / n;
  }
  IsogClass out{q, g, {}};
  for (int i = 1; i <= g; ++i) {
    assert(cc[i] <= INT64_MAX && cc[i] >= INT64_MIN);
    out.a.push_back((i64)cc[i]);
  }
  return out;
}

std::vector<i128> trace_sums(const IsogClass& c, int rmax) {
  ZPoly P = weil_poly(c);
  std::vector<i128> p(rmax + 1, 0);
  for (int n = 1; n <= rmax; ++n) {
    i128 s = n <= 2 * c.g ? (i128)n * P[n] : 0;
    for (int k = 1; k < n; ++k)
      if (n - k <= 2 * c.g) s += p[k] * P[n - k];
    p[n] = -s;
  }
  return {p.begin() + 1, p.end()};
}

std::vector<i64> counts_from_weil(const IsogClass& c, int rmax) {
  auto p = trace_sums(c, rmax);
  std::vector<i64> n(rmax);
  for (int r = 1; r <= rmax; ++r) {
    i128 v = ipow128(c.q, r) + 1 - p[r - 1];
    n[r - 1] = (i64)v;
  }
  return n;
}

i128 class_number(const IsogClass& c) {
  i128 s = 0;
  for (i128 x : weil_poly(c)) s += x;
  return s;
}

i128 weil_eval_minus1(const IsogClass& c) { return zpoly_eval(weil_poly(c), -1); }

std::vector<i64> place_counts(const std::vector<i64>& point_counts) {
  int n = (int)point_counts.size();
  std::vector<i64> b(n);
  for (int d = 1; d <= n; ++d) {
    i64 s = point_counts[d - 1];
    for (int e = 1; e < d; ++e)
      if (d % e == 0) s -= e * b[e - 1];
    assert(s % d == 0);
    b[d - 1] = s / d;
  }
  return b;
}

bool counts_plausible(const IsogClass& c, int rmax) {
  auto n = counts_from_weil(c, rmax);
  for (i64 x : n)
    if (x < 0) return false;
  auto b = place_counts(n);
  for (i64 x : b)
    if (x < 0) return false;
  return true;
}

IsogClass product_class(const std::vector<IsogClass>& parts) {
  assert(!parts.empty());
  ZPoly P{1};
  int g = 0;
  for (auto& c : parts) {
    assert(c.q == parts[0].q);
    P = zpoly_mul(P, weil_poly(c));
    g += c.g;
  }
  IsogClass out{parts[0].q, g, {}};
  for (int i = 1; i <= g; ++i) out.a.push_back((i64)P[i]);
  return out;
}

// --- constant-field extensions -----------------------------------------------

namespace {

// Cyclotomic polynomial by exact division of x^e - 1.
ZPoly cyclotomic(int e) {
  ZPoly num(e + 1, 0);
  num[0] = -1;
  num[e] = 1;
  for (int f = 1; f < e; ++f) {
    if (e % f) continue;
    num = zpoly_divexact(num, cyclotomic(f));
  }
  return num;
}

// P mod Phi_e (monic), exact.
ZPoly zpoly_mod_monic(ZPoly a, const ZPoly& b) {
  int db = zpoly_deg(b);
  for (int i = zpoly_deg(a); i >= db; --i) {
    i128 t = a[i];
    if (t == 0) continue;
    for (int j = 0; j <= db; ++j) a[i - db + j] -= t * b[j];
  }
  a.resize(db);
  return a;
}

i128 checked_mul(i128 a, i128 b) {
  i128 r;
  if (__builtin_mul_overflow(a, b, &r))
    throw std::runtime_error("constant extension: norm overflow");
  return r;
}

ZPoly modmul(const ZPoly& a, const ZPoly& b, const ZPoly& f) {
  ZPoly c(zpoly_deg(a) + zpoly_deg(b) + 2, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) {
      i128 t = checked_mul(a[i], b[j]);
      c[i + j] += t;
    }
  return zpoly_mod_monic(c, f);
}

// Norm of A(zeta_e): product of Galois conjugates A(zeta^k), k coprime to e.
i128 cyclotomic_norm(const ZPoly& A, int e, const ZPoly& phi) {
  ZPoly acc = A;
  for (int k = 2; k < e; ++k) {
    if (std::gcd(k, e) != 1) continue;
    // A(x^k) mod phi
    ZPoly ak(1, 0);
    ZPoly xk(zpoly_deg(phi), 0);
    {
      ZPoly t((size_t)k + 1, 0);
      t[k] = 1;
      xk = zpoly_mod_monic(t, phi);
    }
    ZPoly pw{1};
    for (size_t i = 0; i < A.size(); ++i) {
      if (A[i] != 0) {
        ZPoly term = pw;
        for (auto& x : term) x = checked_mul(x, A[i]);
        ak = zpoly_add(ak, term);
      }
      if (i + 1 < A.size()) pw = modmul(pw, xk, phi);
    }
    ak = zpoly_mod_monic(ak, phi);
    acc = modmul(acc, ak, phi);
  }
  if (zpoly_deg(acc) > 0) throw std::runtime_error("cyclotomic norm: not rational");
  return acc.empty() ? 0 : acc[0];
}

}  // namespace

i128 constant_ext_relative_h(const IsogClass& c, int d) {
  assert(d >= 2);
  ZPoly P = weil_poly(c);
  i128 h = 1;
  for (int e = 2; e <= d; ++e) {
    if (d % e) continue;
    ZPoly phi = cyclotomic(e);
    ZPoly rem = zpoly_mod_monic(P, phi);
    i128 nm = cyclotomic_norm(rem, e, phi);
    h = checked_mul(h, nm);
  }
  return h < 0 ? -h : h;
}

}  // namespace relh
