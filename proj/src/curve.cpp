// curve.cpp -- curve model validation, genus, and point counting.

#include "relh/curve.hpp"

#include <cassert>
#include <sstream>
#include <stdexcept>

namespace relh {

// --- rational functions -------------------------------------------------------

Rat rat_make(Poly num, Poly den) {
  assert(!den.is_zero());
  Poly g = poly_gcd(num, den);
  if (g.deg() > 0) {
    num = num / g;
    den = den / g;
  }
  Fq s = den.F->inv(den.lc());
  return Rat{s * num, s * den};
}

Rat rat_add(const Rat& a, const Rat& b) {
  return rat_make(a.num * b.den + b.num * a.den, a.den * b.den);
}

Rat rat_sub(const Rat& a, const Rat& b) {
  return rat_make(a.num * b.den - b.num * a.den, a.den * b.den);
}

Rat rat_mul(const Rat& a, const Rat& b) {
  return rat_make(a.num * b.num, a.den * b.den);
}

static int val_in(const Poly& f, const Poly& p) {
  if (f.is_zero()) return 1 << 20;  // infinity stand-in
  int v = 0;
  Poly t = f;
  while (true) {
    auto [q, r] = poly_divrem(t, p);
    if (!r.is_zero()) return v;
    ++v;
    t = q;
  }
}

int rat_val(const Rat& a, const Poly& p) {
  return val_in(a.num, p) - val_in(a.den, p);
}

int rat_val_inf(const Rat& a) {
  if (a.num.is_zero()) return 1 << 20;
  return a.den.deg() - a.num.deg();
}

// --- Artin-Schreier reduction (characteristic 2) -------------------------------

namespace {

// sqrt in the residue field F_q[x]/(p): Frobenius iterate a -> a^2 applied
// r*deg(p) - 1 times, i.e. a -> a^(|K|/2).
Poly residue_sqrt(const Field* F, const Poly& a, const Poly& p) {
  int bits = F->r * p.deg() - 1;
  u128_t e = (u128_t)1 << bits;
  return poly_powmod(a, e, p);
}

}  // namespace

ASReduced as_reduce(const Field* F, const Rat& u0) {
  assert(F->p == 2);
  Rat u = u0;
  Rat tau{poly_zero(F), poly_const(F, F->one())};
  // finite places: peel even-order poles
  bool changed = true;
  while (changed) {
    changed = false;
    for (auto& [p, mult] : poly_factor(u.den)) {
      if (mult % 2 != 0) continue;
      int k = mult / 2;
      // leading part: u * p^(2k) mod p
      Poly pk = poly_pow(p, k);
      Poly denq = u.den / (pk * pk);
      Poly A = (u.num * poly_inverse_mod(denq % p, p)) % p;
      if (A.is_zero()) continue;  // cannot happen in lowest terms
      Poly c = residue_sqrt(F, A, p);
      // t = c / p^k;  u -= t^2 + t
      Rat t = rat_make(c, pk);
      u = rat_sub(u, rat_add(rat_mul(t, t), t));
      tau = rat_add(tau, t);
      changed = true;
      break;  // denominator changed; refactor
    }
  }
  // infinite place: peel even-order poles (deg num - deg den = 2k > 0)
  while (true) {
    int v = rat_val_inf(u);
    if (v >= 0 || (-v) % 2 != 0) break;
    int k = -v / 2;
    Fq a = u.num.F->div(u.num.lc(), u.den.lc());
    Fq c = *F->sqrt(a);
    std::vector<Fq> tc(k + 1, Fq{0});
    tc[k] = c;
    Poly t = poly_make(F, std::move(tc));
    Rat tr{t, poly_const(F, F->one())};
    u = rat_sub(u, rat_add(rat_mul(tr, tr), tr));
    tau = rat_add(tau, tr);
  }
  ASReduced out;
  out.u = u;
  out.tau = tau;
  for (auto& [p, mult] : poly_factor(u.den)) {
    assert(mult % 2 == 1);
    out.ram.push_back(ASRamPlace{p, p.deg(), mult});
    out.conductor_deg += (mult + 1) * p.deg();
  }
  int vinf = rat_val_inf(u);
  if (vinf < 0) {
    assert((-vinf) % 2 == 1);
    out.ram.push_back(ASRamPlace{poly_zero(F), 1, -vinf});
    out.conductor_deg += -vinf + 1;
  }
  return out;
}

// --- constructors --------------------------------------------------------------

Curve curve_double_odd(const Field* F, const Poly& f) {
  if (F->p == 2) throw std::runtime_error("curve: y^2 = f needs odd characteristic");
  if (f.deg() < 1) throw std::runtime_error("curve: constant f");
  if (poly_gcd(f, poly_derivative(f)).deg() != 0)
    throw std::runtime_error("curve: f not squarefree");
  Curve C;
  C.F = F;
  C.kind = CurveKind::DOUBLE_ODD;
  C.f = f;
  C.genus = (f.deg() - 1) / 2;
  return C;
}

Curve curve_double_even(const Field* F, const Poly& h, const Poly& f) {
  if (F->p != 2) throw std::runtime_error("curve: y^2 + hy = f needs characteristic 2");
  if (h.is_zero()) throw std::runtime_error("curve: h = 0 is inseparable");
  Curve C;
  C.F = F;
  C.kind = CurveKind::DOUBLE_EVEN;
  C.h = h;
  C.f = f;
  C.as = as_reduce(F, rat_make(f, h * h));
  if (C.as.ram.empty())
    throw std::runtime_error("curve: unramified double cover of P^1 is not a curve model");
  C.genus = C.as.conductor_deg / 2 - 1;
  if (C.genus < 0) throw std::runtime_error("curve: negative genus");
  return C;
}

Curve curve_plane(const Field* F, const BiPoly& P) {
  int d = bipoly_total_deg(P);
  if (d < 3) throw std::runtime_error("curve: plane degree < 3");
  if (P.ydeg() < 1) throw std::runtime_error("curve: plane equation has no y");
  if (!plane_smooth(F, P)) throw std::runtime_error("curve: plane curve is singular");
  Curve C;
  C.F = F;
  C.kind = CurveKind::PLANE;
  C.P = P;
  C.pdeg = d;
  C.genus = (d - 1) * (d - 2) / 2;
  return C;
}

Curve curve_from_equation(const Field* F, const BiPoly& E) {
  if (E.ydeg() == 2 && E.cy[2].deg() == 0) {
    Fq c2 = E.cy[2].coeff(0);
    Poly c1 = E.ycoeff(1), c0 = E.ycoeff(0);
    if (F->p == 2) {
      Fq inv = F->inv(c2);
      return curve_double_even(F, inv * c1, inv * c0);  // -c0 = c0
    }
    // complete the square: (y + c1/2c2)^2 = (c1^2 - 4 c0 c2) / (4 c2^2)
    Fq inv = F->inv(F->mul(F->from_int(4), F->mul(c2, c2)));
    Poly f = inv * (c1 * c1 - F->mul(F->from_int(4), c2) * c0);
    return curve_double_odd(F, f);
  }
  if (E.ydeg() >= 2) return curve_plane(F, E);
  throw std::runtime_error("curve: equation must have y-degree >= 2");
}

Curve curve_from_equation(const Field* F, const std::string& eq) {
  return curve_from_equation(F, bipoly_parse(F, eq));
}

// --- serialization ---------------------------------------------------------------

static std::pair<int, int> factor_prime_power(int q) {
  for (int p : {2, 3, 5, 7, 11, 13}) {
    if (q % p == 0) {
      int r = 0, t = q;
      while (t % p == 0) { t /= p; ++r; }
      if (t != 1) break;
      return {p, r};
    }
  }
  throw std::runtime_error("curve: q is not a small prime power");
}

std::string curve_to_line(const Curve& C) {
  std::ostringstream os;
  os << C.F->q << ";";
  switch (C.kind) {
    case CurveKind::DOUBLE_ODD:
      os << "hyp;" << C.genus << ";" << poly_str(C.f);
      break;
    case CurveKind::DOUBLE_EVEN:
      os << "as;" << C.genus << ";" << poly_str(C.h) << ";" << poly_str(C.f);
      break;
    case CurveKind::PLANE:
      os << "plane;" << C.genus << ";" << bipoly_str(C.P);
      break;
  }
  return os.str();
}

Curve curve_from_line(const std::string& line) {
  std::vector<std::string> parts;
  std::string cur;
  for (char ch : line) {
    if (ch == ';') {
      parts.push_back(cur);
      cur.clear();
    } else cur += ch;
  }
  parts.push_back(cur);
  if (parts.size() < 4) throw std::runtime_error("curve line: expected q;kind;genus;poly");
  auto [p, r] = factor_prime_power(std::stoi(parts[0]));
  const Field* F = Field::get(p, r);
  int genus = std::stoi(parts[2]);
  Curve C;
  if (parts[1] == "hyp") {
    C = curve_double_odd(F, poly_parse(F, parts[3]));
  } else if (parts[1] == "as") {
    if (parts.size() < 5) throw std::runtime_error("curve line: as needs h;f");
    C = curve_double_even(F, poly_parse(F, parts[3]), poly_parse(F, parts[4]));
  } else if (parts[1] == "plane") {
    C = curve_plane(F, bipoly_parse(F, parts[3]));
  } else {
    throw std::runtime_error("curve line: unknown kind " + parts[1]);
  }
  if (C.genus != genus) throw std::runtime_error("curve line: genus mismatch");
  return C;
}

// --- point counting ---------------------------------------------------------------

i64 points_at_infinity(const Curve& C, int r) {
  const Field* E = Field::get(C.F->p, C.F->r * r);
  switch (C.kind) {
    case CurveKind::DOUBLE_ODD: {
      if (C.f.deg() % 2 == 1) return 1;  // ramified
      return 1 + E->quadratic_character(E->embed(C.F, C.f.lc()));
    }
    case CurveKind::DOUBLE_EVEN: {
      int v = rat_val_inf(C.as.u);
      if (v < 0) return 1;  // ramified (odd order after reduction)
      Fq val = C.F->zero();
      if (v == 0) val = C.F->div(C.as.u.num.lc(), C.as.u.den.lc());
      return E->absolute_trace(E->embed(C.F, val)) == 0 ? 2 : 0;
    }
    case CurveKind::PLANE: {
      // roots of the leading form over E
      int d = C.pdeg;
      std::vector<Fq> lead(d + 1, E->zero());  // coeff of X^i Y^(d-i)
      for (int j = 0; j <= C.P.ydeg(); ++j) {
        const Poly& g = C.P.ycoeff(j);
        int i = d - j;
        if (i >= 0 && i <= g.deg()) lead[i] = E->embed(C.F, g.coeff(i));
      }
      // points [t : 1 : 0] for roots t of sum lead[i] t^i, plus [1 : 0 : 0]
      Poly lf = poly_make(E, lead);
      i64 n = (i64)poly_roots(lf).size();
      if (lf.deg() < d) ++n;  // X^d coefficient vanishes: [1:0:0] on the curve
      return n;
    }
  }
  return 0;
}

i64 count_points(const Curve& C, int r) {
  const Field* E = Field::get(C.F->p, C.F->r * r);
  i64 n = points_at_infinity(C, r);
  switch (C.kind) {
    case CurveKind::DOUBLE_ODD: {
      Poly f = poly_embed(E, C.f);
      for (u64 v = 0; v < E->q; ++v)
        n += 1 + E->quadratic_character(poly_eval(f, Fq{v}));
      break;
    }
    case CurveKind::DOUBLE_EVEN: {
      Poly num = poly_embed(E, C.as.u.num), den = poly_embed(E, C.as.u.den);
      for (u64 v = 0; v < E->q; ++v) {
        Fq d = poly_eval(den, Fq{v});
        if (E->is_zero(d)) {
          n += 1;  // ramified fiber
        } else {
          Fq uval = E->div(poly_eval(num, Fq{v}), d);
          n += E->absolute_trace(uval) == 0 ? 2 : 0;
        }
      }
      break;
    }
    case CurveKind::PLANE: {
      std::vector<Poly> cy;
      for (auto& g : C.P.cy) cy.push_back(poly_embed(E, g));
      for (u64 v = 0; v < E->q; ++v) {
        std::vector<Fq> c(cy.size());
        for (size_t j = 0; j < cy.size(); ++j) c[j] = poly_eval(cy[j], Fq{v});
        Poly fy = poly_make(E, std::move(c));
        assert(!fy.is_zero());
        if (fy.deg() == 0) continue;
        // number of distinct roots: deg gcd(y^|E| - y, fy)
        Poly yq = poly_powmod(poly_x(E), E->q, fy);
        n += poly_gcd(yq - (poly_x(E) % fy), fy).deg();
      }
      break;
    }
  }
  return n;
}

std::vector<i64> count_points_upto(const Curve& C, int rmax) {
  std::vector<i64> out;
  for (int r = 1; r <= rmax; ++r) out.push_back(count_points(C, r));
  return out;
}

IsogClass curve_class(const Curve& C) {
  return weil_from_counts((int)C.F->q, C.genus, count_points_upto(C, C.genus));
}

}  // namespace relh
