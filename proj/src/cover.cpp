// cover.cpp -- construction of degree-2 and degree-p covers from their
// defining function, point counting via splitting rules, and relative class
// numbers through exact Weil-polynomial division.

#include <algorithm>
#include <cassert>
#include <random>
#include <stdexcept>

#include "relh/cover.hpp"

namespace relh {

namespace {

// Reduce u at P by subtracting p-th powers p(w) = w^p - w until the pole is
// gone or its order is coprime to p.  Returns the residual pole order (0 for
// a regular point) and, through c_out, the value of the reduced function
// when the pole disappears entirely.
int local_as_reduce(const Curve& C, const Place& P, DCFun u, ResElt* c_out, ResAlg* K_out) {
  int p = C.F->p;
  for (;;) {
    if (dc_is_zero(u)) {
      LocalLead L0 = dc_local_lead(C, P, dc_pole_block(C, P, 1));  // algebra handle only
      if (K_out) *K_out = L0.K;
      if (c_out) *c_out = res_zero(L0.K);
      return 0;
    }
    LocalLead L = dc_local_lead(C, P, u);
    if (L.v >= 0) {
      if (K_out) *K_out = L.K;
      if (c_out) *c_out = L.v > 0 ? res_zero(L.K) : L.c;
      return 0;
    }
    i64 n = -L.v;
    if (n % p != 0) {
      if (K_out) *K_out = L.K;
      if (c_out) *c_out = res_zero(L.K);
      return (int)n;
    }
    // kill the order -n head with (s * block)^p, block of order -n/p
    DCFun blk = dc_pole_block(C, P, n / p);
    LocalLead Lb = dc_local_lead(C, P, blk);
    assert(Lb.v == -(n / p));
    ResElt s = res_mul(L.K, res_char_root(L.K, L.c), res_inv(L.K, Lb.c));
    DCFun w = dc_mul(C, res_lift(C, P, L.K, s), blk);
    u = dc_sub(C, u, dc_artin_schreier_op(C, w));
    assert(dc_is_zero(u) || dc_valuation(C, P, u) > -n);
  }
}

// A constant function's value, or nothing if u is not constant.
// u = A/C is constant iff A and C are proportional as polynomials.
std::optional<Fq> constant_value(const Curve& C, const DCFun& u) {
  if (dc_is_zero(u)) return C.F->zero();
  if (!u.B.is_zero()) return std::nullopt;
  if (u.A.deg() != u.C.deg()) return std::nullopt;
  Fq c = C.F->div(u.A.lc(), u.C.lc());
  if (c * u.C == u.A) return c;
  return std::nullopt;
}

}  // namespace

CoverSpec make_cover(const Curve& base, CoverKind kind, const DCFun& u) {
  const Field* F = base.F;
  if (base.kind == CurveKind::PLANE)
    throw std::invalid_argument("make_cover: plane bases not supported; change the model");
  if (dc_is_zero(u)) throw std::invalid_argument("make_cover: zero datum");
  CoverSpec cov;
  cov.base = base;
  cov.kind = kind;
  cov.u = u;

  if (kind == CoverKind::KUMMER) {
    if (F->p == 2) throw std::invalid_argument("make_cover: square-root data need odd characteristic");
    cov.d = 2;
    if (auto c = constant_value(base, u)) {
      int chi = F->quadratic_character(*c);
      if (chi != -1) throw std::invalid_argument("make_cover: datum is a square constant");
      cov.constant_ext = true;
      cov.g_prime = base.genus;
      return cov;
    }
    Divisor dv = divisor_of(base, u);
    Divisor odd;  // places with odd multiplicity
    for (auto& [P, n] : dv.t)
      if (n % 2 != 0) odd = div_add(odd, div_make({{P, 1}}));
    if (odd.t.empty()) {
      // all multiplicities even: either a nontrivial 2-torsion class (etale
      // cover) or u = c v^2 (constant-field or degenerate)
      std::vector<std::pair<Place, int>> ht;
      for (auto& [P, n] : dv.t) ht.push_back({P, n / 2});
      Divisor D = div_make(ht);
      assert(div_deg(D) == 0);
      if (auto v = principal_test(base, D)) {
        DCFun v2 = dc_mul(base, *v, *v);
        // u / v^2 is constant; read it off at some place
        auto pls = places_up_to(base, 2);
        assert(!pls.empty());
        LocalLead Lu = dc_local_lead(base, pls[0], u);
        LocalLead Lv = dc_local_lead(base, pls[0], v2);
        assert(Lu.v == Lv.v);
        ResElt ratio = res_mul(Lu.K, Lu.c, res_inv(Lu.K, Lv.c));
        assert(ratio.b.is_zero() && ratio.a.deg() <= 0);
        Fq c = ratio.a.coeff(0);
        int chi = F->quadratic_character(c);
        if (chi != -1) throw std::invalid_argument("make_cover: datum is a square");
        cov.constant_ext = true;
        cov.g_prime = base.genus;
        return cov;
      }
      cov.g_prime = 2 * base.genus - 1;
      return cov;
    }
    if (div_deg(odd) % 2 != 0)
      throw std::logic_error("make_cover: odd part of a function divisor has odd degree");
    for (auto& [P, n] : odd.t) {
      assert(n == 1);
      cov.ram.push_back(CoverRam{P, 1, 1});
      cov.t_geo += P.deg;
      cov.disc_deg += P.deg;
    }
    cov.g_prime = 2 * base.genus - 1 + cov.disc_deg / 2;
    return cov;
  }

  // Artin-Schreier: z^p - z = u, p the characteristic
  int p = F->p;
  cov.d = p;
  if (auto c = constant_value(base, u)) {
    int tr = F->absolute_trace(*c);
    if (tr == 0) throw std::invalid_argument("make_cover: constant datum in the image of x^p - x");
    cov.constant_ext = true;
    cov.g_prime = base.genus;
    return cov;
  }
  // poles of u: candidate ramified places
  Divisor dv = divisor_of(base, u);
  for (auto& [P, n] : dv.t) {
    if (n >= 0) continue;
    int m = local_as_reduce(base, P, u, nullptr, nullptr);
    if (m == 0) continue;  // a removable pole: etale at P
    assert(m % p != 0);
    int dP = (p - 1) * (m + 1);
    cov.ram.push_back(CoverRam{P, m, dP});
    cov.t_geo += P.deg;
    cov.disc_deg += dP * P.deg;
  }
  int rhs = p * (2 * base.genus - 2) + cov.disc_deg;
  assert(rhs % 2 == 0);
  cov.g_prime = rhs / 2 + 1;
  if (cov.g_prime < 0 || cov.g_prime < base.genus)
    throw std::logic_error("make_cover: genus from ramification is inconsistent");
  return cov;
}

std::vector<i64> cover_counts(const CoverSpec& cov, int rmax) {
  const Curve& C = cov.base;
  std::vector<i64> N((size_t)rmax + 1, 0);
  if (cov.constant_ext) {
    auto base = count_points_upto(C, rmax);
    for (int r = cov.d; r <= rmax; r += cov.d) N[(size_t)r] = cov.d * base[(size_t)r - 1];
    std::vector<i64> out(N.begin() + 1, N.end());
    return out;
  }
  auto ramkey = [&](const Place& P) {
    for (auto& rp : cov.ram)
      if (place_eq(rp.P, P)) return true;
    return false;
  };
  for (auto& P : places_up_to(C, rmax)) {
    int e = P.deg;
    if (ramkey(P)) {
      // one totally ramified place of degree e above P
      for (int r = e; r <= rmax; r += e) N[(size_t)r] += e;
      continue;
    }
    int split;  // how P decomposes: d places of degree e, or one of degree de
    if (cov.kind == CoverKind::KUMMER) {
      LocalLead L = dc_local_lead(C, P, cov.u);
      if (L.v % 2 != 0) throw std::logic_error("cover_counts: undeclared odd pole or zero");
      int chi = res_chi(L.K, L.c);
      assert(chi != 0);
      split = chi == 1 ? cov.d : 1;
    } else {
      ResElt c0;
      ResAlg K;
      int m = local_as_reduce(C, P, cov.u, &c0, &K);
      if (m != 0) throw std::logic_error("cover_counts: undeclared wild pole");
      split = res_abs_trace(K, c0) == 0 ? cov.d : 1;
    }
    if (split == cov.d) {
      for (int r = e; r <= rmax; r += e) N[(size_t)r] += (i64)cov.d * e;
    } else {
      int de = cov.d * e;
      for (int r = de; r <= rmax; r += de) N[(size_t)r] += de;
    }
  }
  return std::vector<i64>(N.begin() + 1, N.end());
}

IsogClass cover_class(const CoverSpec& cov) {
  // Constant-field covers are not geometrically irreducible, so they have no
  // curve class in this normalization; their Prym data comes from
  // constant_cover instead.
  assert(!cov.constant_ext);
  return weil_from_counts((int)cov.base.F->q, cov.g_prime, cover_counts(cov, cov.g_prime));
}

PrymData constant_cover(const IsogClass& PC, int d) {
  assert(d >= 2);
  PrymData out;
  int g = PC.g, q = PC.q;
  // Weil polynomial after constant extension of degree d, from the counts
  // N_d, N_2d, ..., N_gd of the base
  i64 qd = 1;
  for (int i = 0; i < d; ++i) qd *= q;
  auto counts = counts_from_weil(PC, g * d);
  std::vector<i64> ext;
  for (int r = 1; r <= g; ++r) ext.push_back(counts[(size_t)(r * d) - 1]);
  IsogClass R = weil_from_counts((int)qd, g, ext);
  ZPoly RT = weil_poly(R);
  // spread: R(T^d)
  ZPoly RTd((size_t)(2 * g * d) + 1, 0);
  for (int i = 0; i <= 2 * g; ++i) RTd[(size_t)(i * d)] = RT[(size_t)i];
  ZPoly PA = zpoly_divexact(RTd, weil_poly(PC));
  int gA = g * (d - 1);
  assert(zpoly_deg(PA) == 2 * gA && PA[0] == 1);
  IsogClass cl;
  cl.q = q;
  cl.g = gA;
  for (int i = 1; i <= gA; ++i) cl.a.push_back((i64)PA[(size_t)i]);
  assert(zpoly_eq(weil_poly(cl), PA));
  out.PA = cl;
  out.h_rel = class_number(cl);
  assert(out.h_rel == constant_ext_relative_h(PC, d));
  out.traces = trace_sums(cl, 2 * gA);
  // trace pattern: -T_{C,q^i} off multiples of d, (d-1) T_{C,q^i} on them
  auto tc = trace_sums(PC, 2 * gA);
  for (int i = 1; i <= 2 * gA; ++i) {
    i128 expect = (i % d == 0) ? (i128)(d - 1) * tc[(size_t)i - 1] : -tc[(size_t)i - 1];
    assert(out.traces[(size_t)i - 1] == expect);
  }
  out.geometric = false;
  return out;
}

PrymData relative_class_number(const CoverSpec& cov) {
  IsogClass PC = curve_class(cov.base);
  if (cov.constant_ext) return constant_cover(PC, cov.d);
  IsogClass PCp = cover_class(cov);
  ZPoly num = weil_poly(PCp), den = weil_poly(PC);
  ZPoly PA;
  if (!zpoly_divides(den, num, &PA))
    throw std::logic_error("relative_class_number: base Weil polynomial does not divide the cover's");
  int gA = cov.g_prime - cov.base.genus;
  assert(zpoly_deg(PA) == 2 * gA);
  PrymData out;
  IsogClass cl;
  cl.q = PC.q;
  cl.g = gA;
  for (int i = 1; i <= gA; ++i) cl.a.push_back((i64)PA[(size_t)i]);
  if (!zpoly_eq(weil_poly(cl), PA))
    throw std::logic_error("relative_class_number: quotient fails the functional equation");
  out.PA = cl;
  out.h_rel = class_number(cl);
  out.traces = trace_sums(cl, 2 * gA);
  out.geometric = true;
  if (gA == cov.base.genus * (cov.d - 1)) {
    PrymData cst = constant_cover(PC, cov.d);
    if (cst.PA == cl) out.geometric = false;
  }
  return out;
}

// --- explicit maps -----------------------------------------------------------------

bool verify_explicit_map(const Curve& Cbase, const Curve& Cp, const Poly& xn, const Poly& xd,
                         const Poly& yn, const Poly& yd) {
  if (Cbase.kind != CurveKind::DOUBLE_ODD || Cp.kind != CurveKind::DOUBLE_ODD)
    throw std::invalid_argument("verify_explicit_map: both curves must be odd-characteristic double covers");
  if (xd.is_zero() || yd.is_zero())
    throw std::invalid_argument("verify_explicit_map: zero denominator");
  const Field* F = Cbase.F;
  assert(Cp.F == F);
  const Poly &f = Cbase.f, &fp = Cp.f;
  // (yn/yd)^2 fp = f(xn/xd): cross-multiplied polynomial identity
  int df = f.deg();
  Poly lhs = yn * yn * fp * poly_pow(xd, (u64)df);
  Poly rhs = poly_zero(F);
  for (int i = 0; i <= df; ++i)
    rhs = rhs + f.coeff(i) * (poly_pow(xn, (u64)i) * poly_pow(xd, (u64)(df - i)));
  rhs = yd * yd * rhs;
  if (!(lhs == rhs)) return false;

  // randomized point check over an extension large enough for many samples
  int k = 1;
  u64 qk = F->q;
  while (qk < 600) qk *= F->q, ++k;
  const Field* K = Field::get(F->p, F->r * k);
  Poly fK = poly_embed(K, f), fpK = poly_embed(K, fp);
  Poly xnK = poly_embed(K, xn), xdK = poly_embed(K, xd);
  Poly ynK = poly_embed(K, yn), ydK = poly_embed(K, yd);
  std::mt19937_64 rng(20240817);
  int done = 0, guard = 0;
  while (done < 100 && guard < 100000) {
    ++guard;
    Fq x0{rng() % K->q};
    Fq fv = poly_eval(fpK, x0);
    auto y0 = K->sqrt(fv);
    if (!y0) continue;
    Fq dx = poly_eval(xdK, x0), dy = poly_eval(ydK, x0);
    if (K->is_zero(dx) || K->is_zero(dy)) continue;
    Fq X = K->div(poly_eval(xnK, x0), dx);
    Fq Y = K->mul(K->div(poly_eval(ynK, x0), dy), *y0);
    if (K->mul(Y, Y) != poly_eval(fK, X)) return false;
    ++done;
  }
  return done > 0;
}

// --- hyperelliptic model of a quadratic-datum double cover ---------------------------

std::optional<Curve> cover_to_hyperelliptic(const CoverSpec& cov) {
  const Curve& C = cov.base;
  const Field* F = C.F;
  if (cov.kind != CoverKind::KUMMER || C.kind != CurveKind::DOUBLE_ODD) return std::nullopt;
  if (!cov.u.B.is_zero()) return std::nullopt;
  // square class of the x-rational datum: odd-multiplicity part k, scalar c
  Poly num = cov.u.A, den = cov.u.C;
  Poly k = poly_const(F, F->one());
  for (auto& [pf, e] : poly_factor(num * den))
    if (e % 2 != 0) k = k * pf;
  Fq c = F->div(num.lc(), den.lc());
  if (k.deg() > 2 || k.deg() == 0) return std::nullopt;
  if (!poly_divides(k, C.f)) return std::nullopt;
  Poly khat = C.f / k;
  int dh = khat.deg();

  // rational points of the conic w^2 = c k(x); an affine one always exists
  for (u64 xv = 0; xv < F->q; ++xv) {
    Fq x0{xv};
    auto w0 = F->sqrt(F->mul(c, poly_eval(k, x0)));
    if (!w0) continue;
    // chord-slope parametrization through (x0, w0):
    //   mu = (c k'(x0) - 2 t w0) / (t^2 - c k2),  x(t) = x0 + mu
    Fq k2 = k.coeff(2);
    Fq kp = poly_eval(poly_derivative(k), x0);
    Poly t = poly_x(F);
    Poly S = t * t - poly_const(F, F->mul(c, k2));
    Poly N = poly_const(F, x0) * S + poly_const(F, F->mul(c, kp)) -
             poly_const(F, F->mul(F->from_int(2), *w0)) * t;
    // model: Y^2 = c * S^dh * khat(N/S) * S^(dh mod 2)
    Poly G = poly_zero(F);
    for (int i = 0; i <= dh; ++i)
      G = G + khat.coeff(i) * (poly_pow(N, (u64)i) * poly_pow(S, (u64)(dh - i)));
    G = c * G;
    if (dh % 2 != 0) G = G * S;
    try {
      Curve Cp = curve_double_odd(F, G);
      if (Cp.genus != cov.g_prime) continue;
      if (!(curve_class(Cp) == cover_class(cov))) continue;
      return Cp;
    } catch (const std::exception&) {
      continue;  // degenerate parametrization point; try the next one
    }
  }
  return std::nullopt;
}

}  // namespace relh
