// plane.cpp -- exact smoothness test for projective plane curves over F_q.
//
// Affine singular points are located by a pseudo-remainder sequence in y
// (collecting candidate x-loci: every common zero of the curve and its
// partials either specializes the PRS or kills a leading coefficient or a
// stripped content), then verified exactly in the residue field F_q[x]/(p)
// by a gcd computation.  Points at infinity are checked directly via the
// homogeneous partial derivatives.

#include "relh/curve.hpp"

#include <cassert>
#include <set>

namespace relh {

namespace {

// y-polynomials with coefficients in F_q[x]
using YPoly = std::vector<Poly>;

int ydeg(const YPoly& a) {
  int d = (int)a.size() - 1;
  while (d >= 0 && a[d].is_zero()) --d;
  return d;
}

YPoly ytrim(YPoly a) {
  while (!a.empty() && a.back().is_zero()) a.pop_back();
  return a;
}

Poly ycontent(const YPoly& a) {
  Poly g = poly_zero(a.empty() ? nullptr : a[0].F);
  for (auto& c : a) g = poly_gcd(g, c);
  return g;
}

// pseudo-remainder: lc(b)^(deg a - deg b + 1) * a reduced modulo b
YPoly yprem(YPoly a, const YPoly& b) {
  int db = ydeg(b);
  Poly lb = b[db];
  while (ydeg(a) >= db && ydeg(a) >= 0) {
    int da = ydeg(a);
    Poly t = a[da];
    // a = lb * a - t * y^(da-db) * b
    YPoly next(std::max(a.size(), (size_t)da + 1), poly_zero(lb.F));
    for (int i = 0; i <= da; ++i) next[i] = lb * a[i];
    for (int i = 0; i <= db; ++i) next[i + da - db] = next[i + da - db] - t * b[i];
    a = ytrim(next);
  }
  return a;
}

// Quotient field F_q[x]/(p) and gcd of y-polynomials over it.
struct QF {
  const Field* F;
  Poly p;
  Poly red(const Poly& a) const { return a % p; }
  Poly mul(const Poly& a, const Poly& b) const { return (a * b) % p; }
  Poly inv(const Poly& a) const { return poly_inverse_mod(a, p); }
};

using KPoly = std::vector<Poly>;  // y-poly with residue-field coefficients

int kdeg(const KPoly& a) {
  int d = (int)a.size() - 1;
  while (d >= 0 && a[d].is_zero()) --d;
  return d;
}

KPoly kreduce(const QF& K, const YPoly& a) {
  KPoly out;
  for (auto& c : a) out.push_back(K.red(c));
  while (!out.empty() && out.back().is_zero()) out.pop_back();
  return out;
}

KPoly kmod(const QF& K, KPoly a, const KPoly& b) {
  int db = kdeg(b);
  Poly ib = K.inv(b[db]);
  while (kdeg(a) >= db) {
    int da = kdeg(a);
    Poly t = K.mul(a[da], ib);
    for (int i = 0; i <= db; ++i)
      a[i + da - db] = K.red(a[i + da - db] - t * b[i]);
    while (!a.empty() && a.back().is_zero()) a.pop_back();
  }
  return a;
}

KPoly kgcd(const QF& K, KPoly a, KPoly b) {
  while (kdeg(b) >= 0) {
    KPoly r = kmod(K, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

YPoly to_ypoly(const BiPoly& P) {
  return P.cy;
}

}  // namespace

bool plane_smooth(const Field* F, const BiPoly& P0) {
  int d = bipoly_total_deg(P0);
  if (d < 1) return false;
  BiPoly Px = bipoly_dx(P0), Py = bipoly_dy(P0);
  if (Px.is_zero() && Py.is_zero()) return false;  // p-th power

  // Work with whichever partial is nonzero in the y-direction; if Py = 0,
  // swap the roles of x and y (transpose the coefficient matrix).
  BiPoly P = P0;
  if (Py.is_zero()) {
    int dx = 0, dy = 0;
    for (int j = 0; j <= P0.ydeg(); ++j) dx = std::max(dx, P0.cy[j].deg());
    dy = P0.ydeg();
    std::vector<Poly> t((size_t)dx + 1, poly_zero(F));
    for (int j = 0; j <= dy; ++j)
      for (int i = 0; i <= P0.cy[j].deg(); ++i)
        if (P0.cy[j].coeff(i).v) {
          std::vector<Fq> c((size_t)j + 1, F->zero());
          c[j] = P0.cy[j].coeff(i);
          t[i] = t[i] + poly_make(F, c);
        }
    P = bipoly_make(F, t);
    Px = bipoly_dx(P);
    Py = bipoly_dy(P);
    if (Py.is_zero()) return false;
  }

  // candidate x-loci from the PRS of (P, Py)
  std::vector<Poly> cand_polys;
  {
    YPoly a = to_ypoly(P), b = to_ypoly(Py);
    while (true) {
      int db = ydeg(b);
      if (db < 0) {
        // common y-factor of P and Py over F_q(x): a multiple component
        if (ydeg(a) >= 1) return false;
        if (ydeg(a) == 0) cand_polys.push_back(a[0]);
        break;
      }
      cand_polys.push_back(b[db]);  // leading coefficient may vanish
      if (db == 0) {
        cand_polys.push_back(b[0]);
        break;
      }
      YPoly r = yprem(a, b);
      Poly ct = ycontent(r);
      if (ct.deg() > 0) {
        cand_polys.push_back(ct);
        for (auto& c : r) c = c / ct;
      }
      a = std::move(b);
      b = std::move(r);
    }
  }

  std::set<std::vector<u64>> seen;
  for (const Poly& cp : cand_polys) {
    if (cp.is_zero()) continue;
    for (auto& [p, m] : poly_factor(cp)) {
      (void)m;
      std::vector<u64> key;
      for (auto& c : p.c) key.push_back(c.v);
      if (!seen.insert(key).second) continue;
      QF K{F, p};
      KPoly rP = kreduce(K, to_ypoly(P));
      if (rP.empty()) return false;  // whole vertical locus on the curve
      KPoly g = kgcd(K, rP, kreduce(K, to_ypoly(Py)));
      if (kdeg(g) >= 1) g = kgcd(K, g, kreduce(K, to_ypoly(Px)));
      if (kdeg(g) >= 1) return false;  // common zero of P, Px, Py
    }
  }

  // points at infinity of the ORIGINAL equation (P may be transposed, but
  // transposition permutes the projective coordinates, so check P as used)
  int dd = bipoly_total_deg(P);
  auto partial_at = [&](const Field* E, Fq X, Fq Y, int which) {
    // which: 0 -> d/dX, 1 -> d/dY, 2 -> d/dZ of the homogenization, at Z=0
    Fq s = E->zero();
    for (int j = 0; j <= P.ydeg(); ++j)
      for (int i = 0; i <= P.cy[j].deg(); ++i) {
        Fq c = P.cy[j].coeff(i);
        if (!c.v) continue;
        int k = dd - i - j;  // Z-exponent
        Fq ec = E->embed(F, c);
        if (which == 0 && k == 0 && i >= 1)
          s = E->add(s, E->mul(E->mul(ec, E->from_int(i)),
                               E->mul(E->pow(X, i - 1), E->pow(Y, j))));
        if (which == 1 && k == 0 && j >= 1)
          s = E->add(s, E->mul(E->mul(ec, E->from_int(j)),
                               E->mul(E->pow(X, i), E->pow(Y, j - 1))));
        if (which == 2 && k == 1)
          s = E->add(s, E->mul(ec, E->mul(E->pow(X, i), E->pow(Y, j))));
      }
    return s;
  };
  auto singular_at_inf = [&](const Field* E, Fq X, Fq Y) {
    return E->is_zero(partial_at(E, X, Y, 0)) && E->is_zero(partial_at(E, X, Y, 1)) &&
           E->is_zero(partial_at(E, X, Y, 2));
  };
  // leading form roots [t : 1 : 0]
  std::vector<Fq> lead((size_t)dd + 1, F->zero());
  for (int j = 0; j <= P.ydeg(); ++j) {
    int i = dd - j;
    if (i >= 0 && i <= P.cy[j].deg()) lead[i] = P.cy[j].coeff(i);
  }
  Poly lf = poly_make(F, lead);
  if (lf.is_zero()) return false;  // Z divides the leading form: degenerate
  for (auto& [p, m] : poly_factor(lf)) {
    (void)m;
    const Field* E = Field::get(F->p, F->r * p.deg());
    auto roots = poly_roots(poly_embed(E, p));
    assert(!roots.empty());
    if (singular_at_inf(E, roots[0], E->one())) return false;
  }
  if (lf.deg() < dd) {
    // [1 : 0 : 0] lies on the curve
    if (singular_at_inf(F, F->one(), F->zero())) return false;
  }
  return true;
}

}  // namespace relh
