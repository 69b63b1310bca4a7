// poly.cpp -- univariate/bivariate polynomial arithmetic, factorization,
// and the polynomial text format.

#include "relh/poly.hpp"

#include <algorithm>
#include <cassert>
#include <cctype>
#include <map>
#include <stdexcept>

namespace relh {

Poly poly_zero(const Field* F) { return Poly{F, {}}; }

Poly poly_const(const Field* F, Fq a) {
  Poly f{F, {a}};
  f.normalize();
  return f;
}

Poly poly_x(const Field* F) { return Poly{F, {F->zero(), F->one()}}; }

Poly poly_make(const Field* F, std::vector<Fq> c) {
  Poly f{F, std::move(c)};
  f.normalize();
  return f;
}

Poly poly_int(const Field* F, const std::vector<i64>& c) {
  std::vector<Fq> v;
  v.reserve(c.size());
  for (i64 x : c) v.push_back(F->from_int(x));
  return poly_make(F, std::move(v));
}

Poly operator+(const Poly& a, const Poly& b) {
  assert(a.F == b.F);
  std::vector<Fq> c(std::max(a.c.size(), b.c.size()), Fq{0});
  for (size_t i = 0; i < c.size(); ++i) c[i] = a.F->add(a.coeff((int)i), b.coeff((int)i));
  return poly_make(a.F, std::move(c));
}

Poly operator-(const Poly& a) {
  std::vector<Fq> c(a.c.size());
  for (size_t i = 0; i < c.size(); ++i) c[i] = a.F->neg(a.c[i]);
  return Poly{a.F, std::move(c)};
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator*(const Poly& a, const Poly& b) {
  assert(a.F == b.F);
  if (a.is_zero() || b.is_zero()) return poly_zero(a.F);
  std::vector<Fq> c(a.c.size() + b.c.size() - 1, Fq{0});
  for (size_t i = 0; i < a.c.size(); ++i) {
    if (a.c[i].v == 0) continue;
    for (size_t j = 0; j < b.c.size(); ++j)
      c[i + j] = a.F->add(c[i + j], a.F->mul(a.c[i], b.c[j]));
  }
  return poly_make(a.F, std::move(c));
}

Poly operator*(Fq s, const Poly& a) {
  std::vector<Fq> c(a.c.size());
  for (size_t i = 0; i < c.size(); ++i) c[i] = a.F->mul(s, a.c[i]);
  return poly_make(a.F, std::move(c));
}

std::pair<Poly, Poly> poly_divrem(const Poly& a, const Poly& b) {
  assert(!b.is_zero());
  const Field* F = a.F;
  if (a.deg() < b.deg()) return {poly_zero(F), a};
  Fq binv = F->inv(b.lc());
  std::vector<Fq> rem = a.c;
  std::vector<Fq> quo(a.deg() - b.deg() + 1, Fq{0});
  for (int i = a.deg(); i >= b.deg(); --i) {
    Fq t = F->mul(rem[i], binv);
    if (t.v == 0) continue;
    quo[i - b.deg()] = t;
    for (int j = 0; j <= b.deg(); ++j)
      rem[i - b.deg() + j] = F->sub(rem[i - b.deg() + j], F->mul(t, b.c[j]));
  }
  return {poly_make(F, std::move(quo)), poly_make(F, std::move(rem))};
}

Poly operator/(const Poly& a, const Poly& b) { return poly_divrem(a, b).first; }
Poly operator%(const Poly& a, const Poly& b) { return poly_divrem(a, b).second; }

bool poly_divides(const Poly& b, const Poly& a) {
  if (b.is_zero()) return a.is_zero();
  return (a % b).is_zero();
}

Poly poly_monic(const Poly& a) {
  if (a.is_zero()) return a;
  return a.F->inv(a.lc()) * a;
}

Poly poly_gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return poly_monic(a);
}

Poly poly_inverse_mod(const Poly& a, const Poly& f) {
  // extended Euclid: r0 = f, r1 = a mod f; track s with s*a = r mod f
  const Field* F = a.F;
  Poly r0 = f, r1 = a % f;
  Poly s0 = poly_zero(F), s1 = poly_const(F, F->one());
  while (!r1.is_zero()) {
    auto [q, r2] = poly_divrem(r0, r1);
    Poly s2 = s0 - q * s1;
    r0 = std::move(r1);
    r1 = std::move(r2);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (r0.deg() != 0) throw std::runtime_error("poly_inverse_mod: not invertible");
  return (F->inv(r0.coeff(0)) * s0) % f;
}

Poly poly_derivative(const Poly& a) {
  if (a.deg() < 1) return poly_zero(a.F);
  std::vector<Fq> c(a.deg());
  for (int i = 1; i <= a.deg(); ++i)
    c[i - 1] = a.F->mul(a.F->from_int(i), a.c[i]);
  return poly_make(a.F, std::move(c));
}

Fq poly_eval(const Poly& a, Fq x) { return a.F->eval_poly(a.c, x); }

Poly poly_pow(const Poly& a, u64 e) {
  Poly acc = poly_const(a.F, a.F->one()), base = a;
  while (e) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

Poly poly_powmod(const Poly& a, u128_t e, const Poly& f) {
  Poly acc = poly_const(a.F, a.F->one()), base = a % f;
  while (e) {
    if (e & 1) acc = (acc * base) % f;
    base = (base * base) % f;
    e >>= 1;
  }
  return acc;
}

Poly poly_compose(const Poly& a, const Poly& b) {
  Poly acc = poly_zero(a.F);
  for (size_t i = a.c.size(); i-- > 0;)
    acc = acc * b + poly_const(a.F, a.c[i]);
  return acc;
}

Poly poly_reverse(const Poly& a, int n) {
  if (n < 0) n = a.deg();
  assert(n >= a.deg());
  std::vector<Fq> c(n + 1, Fq{0});
  for (int i = 0; i <= a.deg(); ++i) c[n - i] = a.c[i];
  return poly_make(a.F, std::move(c));
}

namespace {

// p-th root of a polynomial whose derivative vanishes (all exponents
// divisible by p): coefficientwise p-th root, exponents divided by p.
Poly pth_root(const Poly& f) {
  const Field* F = f.F;
  std::vector<Fq> c;
  for (int i = 0; i <= f.deg(); i += F->p) {
    Fq a = f.coeff(i);
    // p-th root in F_{p^r} is frobenius applied r-1 times
    for (int k = 0; k < F->r - 1; ++k) a = F->pow(a, (u64)F->p);
    c.push_back(a);
  }
  return poly_make(F, std::move(c));
}

u64 xorshift(u64& s) {
  s ^= s << 13;
  s ^= s >> 7;
  s ^= s << 17;
  return s;
}

Poly random_poly(const Field* F, int deg, u64& seed) {
  std::vector<Fq> c(deg + 1);
  for (auto& a : c) a = Fq{xorshift(seed) % F->q};
  return poly_make(F, std::move(c));
}

// Equal-degree splitting of a monic squarefree product of irreducibles of
// degree d (Cantor-Zassenhaus; trace construction in characteristic 2).
void edf(const Poly& f, int d, std::vector<Poly>& out, u64& seed) {
  const Field* F = f.F;
  if (f.deg() == d) {
    out.push_back(f);
    return;
  }
  Poly one = poly_const(F, F->one());
  while (true) {
    Poly t = random_poly(F, f.deg() - 1, seed);
    if (t.deg() < 1) continue;
    Poly g;
    if (F->p != 2) {
      u128_t e = 1;
      for (int i = 0; i < d; ++i) e *= F->q;
      g = poly_powmod(t, (e - 1) / 2, f) - one;
    } else {
      // trace map sum t^(2^i), i < r*d
      Poly s = t % f, acc = s;
      for (int i = 1; i < F->r * d; ++i) {
        s = (s * s) % f;
        acc = acc + s;
      }
      g = acc;
    }
    Poly h = poly_gcd(g, f);
    if (h.deg() > 0 && h.deg() < f.deg()) {
      edf(h, d, out, seed);
      edf(f / h, d, out, seed);
      return;
    }
  }
}

}  // namespace

std::vector<std::pair<Poly, int>> poly_squarefree(const Poly& f0) {
  std::vector<std::pair<Poly, int>> out;
  Poly f = poly_monic(f0);
  if (f.deg() < 1) return out;
  Poly df = poly_derivative(f);
  if (df.is_zero()) {
    for (auto& [g, m] : poly_squarefree(pth_root(f))) out.emplace_back(g, m * f.F->p);
    return out;
  }
  Poly g = poly_gcd(f, df);
  Poly w = f / g;
  int i = 1;
  while (w.deg() > 0) {
    Poly y = poly_gcd(w, g);
    Poly z = w / y;
    if (z.deg() > 0) out.emplace_back(z, i);
    ++i;
    w = y;
    g = g / y;
  }
  if (g.deg() > 0) {
    for (auto& [h, m] : poly_squarefree(pth_root(g))) out.emplace_back(h, m * f.F->p);
  }
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.second < b.second; });
  return out;
}

std::vector<std::pair<Poly, int>> poly_factor(const Poly& f0) {
  std::vector<std::pair<Poly, int>> out;
  const Field* F = f0.F;
  for (auto& [sf, mult] : poly_squarefree(f0)) {
    // distinct-degree on the squarefree part
    u64 seed = 0x9e3779b97f4a7c15ull ^ (u64)sf.deg() ^ (F->q << 20);
    Poly f = sf;
    Poly h = poly_x(F);
    int d = 0;
    while (f.deg() > 0 && f.deg() > 2 * (d + 1) - 1) {
      ++d;
      h = poly_powmod(h, F->q, f);
      Poly g = poly_gcd(h - poly_x(F), f);
      if (g.deg() > 0) {
        std::vector<Poly> pieces;
        edf(g, d, pieces, seed);
        for (auto& p : pieces) out.emplace_back(poly_monic(p), mult);
        f = f / g;
        h = h % f;
      }
    }
    if (f.deg() > 0) out.emplace_back(poly_monic(f), mult);
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.first.deg() != b.first.deg()) return a.first.deg() < b.first.deg();
    for (int i = a.first.deg(); i >= 0; --i)
      if (a.first.coeff(i) != b.first.coeff(i)) return a.first.coeff(i) < b.first.coeff(i);
    return a.second < b.second;
  });
  return out;
}

bool poly_irreducible(const Poly& f0) {
  const Field* F = f0.F;
  int n = f0.deg();
  if (n < 1) return false;
  if (n == 1) return true;
  Poly f = poly_monic(f0);
  Poly x = poly_x(F);
  u128_t qn = 1;
  for (int i = 0; i < n; ++i) qn *= F->q;
  if (!(poly_powmod(x, qn, f) - (x % f)).is_zero()) return false;
  for (int l = 2; l <= n; ++l) {
    if (n % l) continue;
    bool prime = true;
    for (int d2 = 2; d2 * d2 <= l; ++d2)
      if (l % d2 == 0) prime = false;
    if (!prime) continue;
    u128_t e = 1;
    for (int i = 0; i < n / l; ++i) e *= F->q;
    Poly t = poly_powmod(x, e, f) - (x % f);
    if (poly_gcd(t, f).deg() != 0) return false;
  }
  return true;
}

std::vector<Fq> poly_roots(const Poly& f) {
  std::vector<Fq> out;
  if (f.is_zero()) return out;
  for (auto& [g, m] : poly_factor(f)) {
    (void)m;
    if (g.deg() == 1) out.push_back(f.F->neg(g.coeff(0)));
  }
  std::sort(out.begin(), out.end());
  return out;
}

Poly poly_mobius(const Poly& f, int n, Fq a, Fq b, Fq c, Fq d) {
  const Field* F = f.F;
  assert(n >= f.deg());
  Poly num = poly_make(F, {b, a});   // a x + b
  Poly den = poly_make(F, {d, c});   // c x + d
  // Horner in the numerator with denominator powers filling the degree.
  Poly acc = poly_zero(F);
  for (int i = n; i >= 0; --i) {
    acc = acc * num;
    if (f.coeff(i).v != 0) {
      Poly t = poly_const(F, f.coeff(i));
      for (int k = 0; k < n - i; ++k) t = t * den;
      acc = acc + t;
    }
  }
  return acc;
}

Poly poly_embed(const Field* big, const Poly& f) {
  std::vector<Fq> c(f.c.size());
  for (size_t i = 0; i < c.size(); ++i) c[i] = big->embed(f.F, f.c[i]);
  return poly_make(big, std::move(c));
}

const std::vector<Poly>& monic_irreducibles(const Field* F, int deg) {
  static std::map<std::pair<const Field*, int>, std::vector<Poly>> cache;
  auto key = std::make_pair(F, deg);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  std::vector<Poly> out;
  u64 count = 1;
  for (int i = 0; i < deg; ++i) count *= F->q;
  for (u64 t = 0; t < count; ++t) {
    std::vector<Fq> c(deg + 1);
    u64 w = t;
    for (int i = 0; i < deg; ++i) {
      c[i] = Fq{w % F->q};
      w /= F->q;
    }
    c[deg] = F->one();
    Poly f = poly_make(F, std::move(c));
    if (poly_irreducible(f)) out.push_back(f);
  }
  return cache.emplace(key, std::move(out)).first->second;
}

// --- bivariate ---------------------------------------------------------------

BiPoly bipoly_make(const Field* F, std::vector<Poly> cy) {
  BiPoly f{F, std::move(cy)};
  f.normalize();
  return f;
}

BiPoly operator+(const BiPoly& a, const BiPoly& b) {
  assert(a.F == b.F);
  std::vector<Poly> c(std::max(a.cy.size(), b.cy.size()), poly_zero(a.F));
  for (size_t j = 0; j < c.size(); ++j) c[j] = a.ycoeff((int)j) + b.ycoeff((int)j);
  return bipoly_make(a.F, std::move(c));
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
  assert(a.F == b.F);
  if (a.is_zero() || b.is_zero()) return BiPoly{a.F, {}};
  std::vector<Poly> c(a.cy.size() + b.cy.size() - 1, poly_zero(a.F));
  for (size_t i = 0; i < a.cy.size(); ++i)
    for (size_t j = 0; j < b.cy.size(); ++j)
      c[i + j] = c[i + j] + a.cy[i] * b.cy[j];
  return bipoly_make(a.F, std::move(c));
}

Fq bipoly_eval(const BiPoly& a, Fq x, Fq y) {
  Fq acc = a.F->zero();
  for (size_t j = a.cy.size(); j-- > 0;)
    acc = a.F->add(a.F->mul(acc, y), poly_eval(a.cy[j], x));
  return acc;
}

Poly bipoly_eval_y(const BiPoly& a, const Poly& ypoly) {
  Poly acc = poly_zero(a.F);
  for (size_t j = a.cy.size(); j-- > 0;) acc = acc * ypoly + a.cy[j];
  return acc;
}

int bipoly_total_deg(const BiPoly& a) {
  int d = -1;
  for (size_t j = 0; j < a.cy.size(); ++j)
    if (!a.cy[j].is_zero()) d = std::max(d, a.cy[j].deg() + (int)j);
  return d;
}

BiPoly bipoly_dx(const BiPoly& a) {
  std::vector<Poly> c;
  for (auto& f : a.cy) c.push_back(poly_derivative(f));
  return bipoly_make(a.F, std::move(c));
}

BiPoly bipoly_dy(const BiPoly& a) {
  std::vector<Poly> c;
  for (int j = 1; j <= a.ydeg(); ++j)
    c.push_back(a.F->from_int(j) * a.cy[j]);
  return bipoly_make(a.F, std::move(c));
}

// --- text format -------------------------------------------------------------

namespace {

struct Parser {
  const Field* F;
  const std::string& s;
  size_t i = 0;

  void skip() {
    while (i < s.size() && std::isspace((unsigned char)s[i])) ++i;
  }
  bool eat(char c) {
    skip();
    if (i < s.size() && s[i] == c) {
      ++i;
      return true;
    }
    return false;
  }
  char peek() {
    skip();
    return i < s.size() ? s[i] : '\0';
  }

  // expr := term (('+'|'-') term)*
  BiPoly expr() {
    BiPoly acc = term(peek() == '-' && (eat('-'), true));
    while (true) {
      char c = peek();
      if (c == '+') {
        eat('+');
        acc = acc + term(false);
      } else if (c == '-') {
        eat('-');
        acc = acc + term(true);
      } else {
        return acc;
      }
    }
  }

  // term := primary (['*'] primary)*
  BiPoly term(bool negate) {
    BiPoly acc = primary();
    while (true) {
      char c = peek();
      if (c == '*') {
        eat('*');
        acc = acc * primary();
      } else if (std::isdigit((unsigned char)c) || c == 'x' || c == 'y' ||
                 c == 'a' || c == '(') {
        acc = acc * primary();
      } else {
        break;
      }
    }
    if (negate) {
      BiPoly m{F, {poly_const(F, F->neg(F->one()))}};
      acc = acc * m;
    }
    return acc;
  }

  BiPoly primary() {
    skip();
    if (i >= s.size()) throw std::runtime_error("polynomial parse: unexpected end");
    char c = s[i];
    BiPoly base{F, {}};
    if (c == '(') {
      ++i;
      base = expr();
      if (!eat(')')) throw std::runtime_error("polynomial parse: missing ')'");
    } else if (std::isdigit((unsigned char)c)) {
      i64 n = 0;
      while (i < s.size() && std::isdigit((unsigned char)s[i])) n = n * 10 + (s[i++] - '0');
      base = BiPoly{F, {poly_const(F, F->from_int(n))}};
    } else if (c == 'x') {
      ++i;
      base = BiPoly{F, {poly_x(F)}};
    } else if (c == 'y') {
      ++i;
      base = BiPoly{F, {poly_zero(F), poly_const(F, F->one())}};
    } else if (c == 'a') {
      ++i;
      if (F->r < 2) throw std::runtime_error("polynomial parse: 'a' needs a non-prime field");
      base = BiPoly{F, {poly_const(F, F->gen())}};
    } else {
      throw std::runtime_error(std::string("polynomial parse: unexpected '") + c + "'");
    }
    if (eat('^')) {
      skip();
      i64 e = 0;
      if (i >= s.size() || !std::isdigit((unsigned char)s[i]))
        throw std::runtime_error("polynomial parse: bad exponent");
      while (i < s.size() && std::isdigit((unsigned char)s[i])) e = e * 10 + (s[i++] - '0');
      BiPoly acc{F, {poly_const(F, F->one())}};
      for (i64 k = 0; k < e; ++k) acc = acc * base;
      base = acc;
    }
    base.normalize();
    return base;
  }
};

}  // namespace

BiPoly bipoly_parse(const Field* F, const std::string& s) {
  Parser p{F, s};
  BiPoly f = p.expr();
  p.skip();
  if (p.i != s.size()) throw std::runtime_error("polynomial parse: trailing input");
  return f;
}

Poly poly_parse(const Field* F, const std::string& s) {
  BiPoly f = bipoly_parse(F, s);
  if (f.ydeg() > 0) throw std::runtime_error("polynomial parse: unexpected 'y'");
  return f.is_zero() ? poly_zero(F) : f.cy[0];
}

namespace {

std::string coeff_str(const Field* F, Fq a, bool lead_unit_ok) {
  std::string cs = F->to_string(a);
  if (cs == "1" && lead_unit_ok) return "";
  if (cs.find('+') != std::string::npos) return "(" + cs + ")";
  return cs;
}

}  // namespace

std::string poly_str(const Poly& f, const std::string& var) {
  if (f.is_zero()) return "0";
  std::string out;
  for (int i = f.deg(); i >= 0; --i) {
    Fq a = f.coeff(i);
    if (a.v == 0) continue;
    if (!out.empty()) out += "+";
    std::string cs = coeff_str(f.F, a, i > 0);
    out += cs;
    if (i > 0) {
      out += var;
      if (i > 1) out += "^" + std::to_string(i);
    } else if (cs.empty()) {
      out += "1";
    }
  }
  return out;
}

std::string bipoly_str(const BiPoly& f) {
  if (f.is_zero()) return "0";
  std::string out;
  for (int j = f.ydeg(); j >= 0; --j) {
    const Poly& g = f.ycoeff(j);
    if (g.is_zero()) continue;
    std::string gs = poly_str(g);
    if (!out.empty()) out += "+";
    if (j == 0) {
      out += gs;
      continue;
    }
    bool simple = g.deg() == 0 || (g.c.size() == (size_t)g.deg() + 1 &&
                                   std::count_if(g.c.begin(), g.c.end(),
                                                 [](Fq a) { return a.v != 0; }) == 1);
    if (gs == "1") gs = "";
    else if (!simple) gs = "(" + gs + ")";
    out += gs + "y";
    if (j > 1) out += "^" + std::to_string(j);
  }
  return out;
}

}  // namespace relh
