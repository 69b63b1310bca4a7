// residue.cpp -- arithmetic of functions (A + B*w)/C on double covers,
// residue algebras kappa(P), and the local leading coefficient of a function
// at a place with respect to a fixed per-place uniformizer convention.
//
// Leading coefficients are multiplicative: lead(uv) = lead(u) lead(v) at
// every place.  At finite places they come from exact polynomial formulas
// (p-adic digits on split places, min-valuation parts on inert ones,
// norm/parity splitting at ramified ones); at infinite places from truncated
// Laurent expansions along an explicitly constructed local parameter.

#include <cassert>
#include <climits>
#include <sstream>
#include <stdexcept>

#include "relh/cover.hpp"

namespace relh {

namespace {

Poly reverse_to(const Poly& A, int D) {
  assert(D >= A.deg());
  std::vector<Fq> c((size_t)D + 1, Fq{0});
  for (int i = 0; i <= A.deg(); ++i) c[(size_t)(D - i)] = A.coeff(i);
  return poly_make(A.F, std::move(c));
}

PSeries sfrom_poly(const Field* K, const Poly& f, int prec) {
  PSeries s = ser_make(K, prec);
  for (int i = 0; i < prec && i <= f.deg(); ++i) s.c[(size_t)i] = K->embed(f.F, f.coeff(i));
  return s;
}

PSeries sshift(const PSeries& a, int k) {
  PSeries s = ser_make(a.K, a.prec());
  for (int i = 0; i + k < a.prec(); ++i)
    if (i + k >= 0) s.c[(size_t)(i + k)] = a.c[(size_t)i];
  return s;
}

PSeries spow(const PSeries& a, int e) {
  PSeries r = ser_make(a.K, a.prec());
  r.c[0] = a.K->one();
  for (int i = 0; i < e; ++i) r = ser_mul(r, a);
  return r;
}

// a(b(t)) for ord(b) >= 1 (Horner over the truncated coefficients of a).
PSeries scomp(const PSeries& a, const PSeries& b) {
  assert(ser_ord(b) >= 1 || a.prec() <= 1);
  PSeries r = ser_make(a.K, a.prec());
  for (int i = a.prec() - 1; i >= 0; --i) {
    r = ser_mul(r, b);
    r.c[0] = a.K->add(r.c[0], a.c[(size_t)i]);
  }
  return r;
}

int val_p(const Poly& a, const Poly& p) {
  assert(!a.is_zero());
  int v = 0;
  Poly r = a;
  for (;;) {
    auto [q, rem] = poly_divrem(r, p);
    if (!rem.is_zero()) return v;
    r = q;
    ++v;
  }
}

Poly strip_p(const Poly& a, const Poly& p, int v) {
  Poly r = a;
  while (v-- > 0) r = poly_divrem(r, p).first;
  return r;
}

}  // namespace

// --- function arithmetic ----------------------------------------------------

DCFun dc_make(const Curve& C, Poly A, Poly B, Poly den) {
  (void)C;
  assert(!den.is_zero());
  if (A.is_zero() && B.is_zero()) return DCFun{A, B, poly_const(den.F, den.F->one())};
  Poly g = poly_gcd(poly_gcd(A, B), den);
  if (g.deg() > 0) {
    if (!A.is_zero()) A = A / g;
    if (!B.is_zero()) B = B / g;
    den = den / g;
  }
  Fq ilc = den.F->inv(den.lc());
  return DCFun{ilc * A, ilc * B, ilc * den};
}

bool dc_is_zero(const DCFun& a) { return a.A.is_zero() && a.B.is_zero(); }

DCFun dc_add(const Curve& C, const DCFun& a, const DCFun& b) {
  return dc_make(C, a.A * b.C + b.A * a.C, a.B * b.C + b.B * a.C, a.C * b.C);
}

DCFun dc_sub(const Curve& C, const DCFun& a, const DCFun& b) {
  return dc_make(C, a.A * b.C - b.A * a.C, a.B * b.C - b.B * a.C, a.C * b.C);
}

DCFun dc_mul(const Curve& C, const DCFun& a, const DCFun& b) {
  Poly AA = a.A * b.A, BB = a.B * b.B, AB = a.A * b.B + a.B * b.A;
  if (C.kind == CurveKind::DOUBLE_ODD)
    return dc_make(C, AA + BB * C.f, AB, a.C * b.C);
  // w^2 = w + u with u = num/den
  const Rat& u = C.as.u;
  return dc_make(C, AA * u.den + BB * u.num, (AB + BB) * u.den, a.C * b.C * u.den);
}

DCFun dc_scale(const Curve& C, Fq s, const DCFun& a) {
  (void)C;
  if (a.A.F->is_zero(s)) return DCFun{poly_zero(a.A.F), poly_zero(a.A.F), poly_const(a.A.F, a.A.F->one())};
  return DCFun{s * a.A, s * a.B, a.C};
}

DCFun dc_artin_schreier_op(const Curve& C, const DCFun& a) {
  int p = C.F->p;
  DCFun r = dc_mul(C, a, a);
  if (p == 3) r = dc_mul(C, r, a);
  return dc_sub(C, r, a);
}

std::string dc_str(const DCFun& a) {
  std::ostringstream os;
  os << "(" << poly_str(a.A) << " + (" << poly_str(a.B) << ")w)/(" << poly_str(a.C) << ")";
  return os.str();
}

// --- residue algebras ---------------------------------------------------------

u128_t ResAlg::size() const {
  u128_t s = 1;
  int d = p.deg() * (quad ? 2 : 1);
  for (int i = 0; i < d; ++i) s *= F->q;
  return s;
}

ResElt res_zero(const ResAlg& K) { return ResElt{poly_zero(K.F), poly_zero(K.F)}; }

ResElt res_one(const ResAlg& K) { return ResElt{poly_const(K.F, K.F->one()), poly_zero(K.F)}; }

bool res_is_zero(const ResElt& x) { return x.a.is_zero() && x.b.is_zero(); }

bool res_eq(const ResElt& x, const ResElt& y) { return x.a == y.a && x.b == y.b; }

ResElt res_add(const ResAlg& K, const ResElt& x, const ResElt& y) {
  return ResElt{(x.a + y.a) % K.p, (x.b + y.b) % K.p};
}

ResElt res_mul(const ResAlg& K, const ResElt& x, const ResElt& y) {
  if (!K.quad) {
    assert(x.b.is_zero() && y.b.is_zero());
    return ResElt{x.a * y.a % K.p, poly_zero(K.F)};
  }
  Poly bb = x.b * y.b % K.p;
  Poly a = (x.a * y.a + bb * K.s0) % K.p;
  Poly b = (x.a * y.b + x.b * y.a + bb * K.s1) % K.p;
  return ResElt{a, b};
}

ResElt res_inv(const ResAlg& K, const ResElt& x) {
  assert(!res_is_zero(x));
  if (!K.quad) return ResElt{poly_inverse_mod(x.a, K.p), poly_zero(K.F)};
  // conjugate: (a + bW)(a + b s1 - bW) = a^2 + a b s1 - b^2 s0, a scalar
  Poly n = (x.a * x.a + x.a * x.b * K.s1 - x.b * x.b * K.s0) % K.p;
  assert(!n.is_zero());
  Poly ninv = poly_inverse_mod(n, K.p);
  return ResElt{(x.a + x.b * K.s1) * ninv % K.p, -x.b * ninv % K.p};
}

ResElt res_pow(const ResAlg& K, ResElt x, u128_t e) {
  ResElt r = res_one(K);
  while (e) {
    if (e & 1) r = res_mul(K, r, x);
    x = res_mul(K, x, x);
    e >>= 1;
  }
  return r;
}

int res_chi(const ResAlg& K, const ResElt& x) {
  assert(K.F->p != 2);
  if (res_is_zero(x)) return 0;
  ResElt r = res_pow(K, x, (K.size() - 1) / 2);
  if (res_eq(r, res_one(K))) return 1;
  ResElt mone = ResElt{poly_const(K.F, K.F->from_int(-1)), poly_zero(K.F)};
  assert(res_eq(r, mone));
  return -1;
}

int res_abs_trace(const ResAlg& K, const ResElt& x) {
  int ch = K.F->p;
  int k = K.F->r * K.p.deg() * (K.quad ? 2 : 1);
  ResElt acc = res_zero(K), cur = x;
  for (int i = 0; i < k; ++i) {
    acc = res_add(K, acc, cur);
    cur = res_pow(K, cur, (u128_t)ch);
  }
  assert(acc.b.is_zero() && acc.a.deg() <= 0);
  auto dig = K.F->digits(acc.a.coeff(0));
  for (size_t i = 1; i < dig.size(); ++i) assert(dig[i] == 0);
  return dig.empty() ? 0 : dig[0];
}

ResElt res_char_root(const ResAlg& K, const ResElt& x) {
  return res_pow(K, x, K.size() / (u128_t)K.F->p);
}

// --- Laurent expansions at infinity ------------------------------------------

namespace {

struct Laur {
  bool zero = true;
  i64 v = 0;
  PSeries s;  // s.c[0] != 0 when !zero
};

Laur l_norm(i64 v, const PSeries& s) {
  int o = ser_ord(s);
  if (o == s.prec()) return Laur{};
  PSeries t = ser_make(s.K, s.prec() - o);
  for (int i = 0; i < t.prec(); ++i) t.c[(size_t)i] = s.c[(size_t)(i + o)];
  return Laur{false, v + o, t};
}

Laur l_const(const Field* K, Fq a, int prec) {
  if (K->is_zero(a)) return Laur{};
  PSeries s = ser_make(K, prec);
  s.c[0] = a;
  return Laur{false, 0, s};
}

Laur l_mul(const Laur& a, const Laur& b) {
  if (a.zero || b.zero) return Laur{};
  return Laur{false, a.v + b.v, ser_mul(a.s, b.s)};
}

Laur l_inv(const Laur& a) {
  assert(!a.zero);
  return Laur{false, -a.v, ser_inv(a.s)};
}

Laur l_add(const Laur& a, const Laur& b) {
  if (a.zero) return b;
  if (b.zero) return a;
  i64 v = std::min(a.v, b.v);
  int pa = a.s.prec() - (int)(a.v - v), pb = b.s.prec() - (int)(b.v - v);
  int prec = std::min(pa, pb);
  if (prec <= 0) return Laur{};  // precision exhausted; caller retries bigger
  PSeries s = ser_make(a.s.K, prec);
  for (int i = 0; i < prec; ++i) {
    Fq x = Fq{0}, y = Fq{0};
    int ia = i - (int)(a.v - v), ib = i - (int)(b.v - v);
    if (ia >= 0 && ia < a.s.prec()) x = a.s.c[(size_t)ia];
    if (ib >= 0 && ib < b.s.prec()) y = b.s.c[(size_t)ib];
    s.c[(size_t)i] = a.s.K->add(x, y);
  }
  return l_norm(v, s);
}

Laur l_pow(const Laur& a, int e) {
  assert(e >= 0 && !a.zero);
  if (e == 0) return l_const(a.s.K, a.s.K->one(), a.s.prec());
  Laur r = a;
  for (int i = 1; i < e; ++i) r = l_mul(r, a);
  return r;
}

// The local parameter t itself as a Laurent element.
Laur l_param(const Field* K, int prec) {
  PSeries o = ser_make(K, prec);
  o.c[0] = K->one();
  return Laur{false, 1, o};
}

// A(x) along the expansion lx of the coordinate x, coefficients embedded
// into the series field.
Laur l_poly_at(const Poly& A, const Laur& lx, const Field* K, int prec) {
  Laur r{};
  for (int i = A.deg(); i >= 0; --i) {
    r = l_mul(r, lx);
    r = l_add(r, l_const(K, K->embed(A.F, A.coeff(i)), prec));
  }
  return r;
}

// Expansion data of the coordinates at an infinite place: the series field
// (F_q, or its quadratic extension for inert places) and Laurent expansions
// of x and w along the local parameter.
struct InfExp {
  const Field* K = nullptr;
  Laur x, w;
};

InfExp inf_expand(const Curve& C, const Place& P, int prec) {
  const Field* F = C.F;
  InfExp E;
  if (C.kind == CurveKind::DOUBLE_ODD) {
    int D = C.f.deg();
    if (P.type == PlaceType::RAM) {
      // deg f odd; local parameter t = x^g / y, x = 1/sigma(t) with
      // sigma = t^2 ftil(sigma), ftil the degree-D reversal of f
      assert(D % 2 == 1);
      E.K = F;
      Poly frev = reverse_to(C.f, D);
      PSeries sig = ser_make(F, prec);
      for (int it = 0; it < prec + 2; ++it) sig = sshift(ser_eval_poly(frev, sig), 2);
      E.x = l_inv(l_norm(0, sig));
      assert(!E.x.zero && E.x.v == -2);
      E.w = l_mul(l_pow(E.x, C.genus), l_inv(l_param(F, prec)));
      assert(E.w.v == -D);
    } else if (P.type == PlaceType::SPLIT) {
      // parameter 1/x; y = x^(g+1) wt(1/x)
      E.K = F;
      PSeries wt = dc_inf_branch(C, P, prec);
      E.x = l_inv(l_param(F, prec));
      E.w = l_norm(-(i64)(C.genus + 1), wt);
      assert(!E.w.zero);
    } else {
      // inert: series over the quadratic extension, y = x^(g+1) W(1/x),
      // W^2 = ftil with ftil(0) = lc f a nonsquare
      assert(D % 2 == 0);
      const Field* K2 = Field::get(F->p, 2 * F->r);
      E.K = K2;
      PSeries ftil = sfrom_poly(K2, reverse_to(C.f, D), prec);
      auto w0 = K2->sqrt(K2->embed(F, C.f.lc()));
      assert(w0.has_value());
      PSeries W = ser_make(K2, prec);
      W.c[0] = *w0;
      Fq half = K2->inv(K2->from_int(2));
      for (int reached = 1; reached < prec; reached *= 2)
        W = ser_scale(half, ser_add(W, ser_mul(ftil, ser_inv(W))));
      E.x = l_inv(l_param(K2, prec));
      E.w = l_norm(-(i64)(C.genus + 1), W);
    }
    return E;
  }

  // characteristic 2: w^2 = w + u, u = num/den
  const Rat& u = C.as.u;
  if (P.type == PlaceType::RAM) {
    E.K = F;
    int m = P.mP;
    assert(m % 2 == 1 && m == -rat_val_inf(u));
    // util(s) = s^m u(1/s); w = t x^((m+1)/2) and the curve relation force
    // s util(s) = t^2 + t s^((m+1)/2), solved for s(t) by iteration
    PSeries nrev = sfrom_poly(F, reverse_to(u.num, u.num.deg()), prec);
    PSeries drev = sfrom_poly(F, reverse_to(u.den, u.den.deg()), prec);
    PSeries util = ser_mul(nrev, ser_inv(drev));
    PSeries t2 = ser_make(F, prec), t1 = ser_make(F, prec);
    if (prec > 2) t2.c[2] = F->one();
    if (prec > 1) t1.c[1] = F->one();
    PSeries s = ser_make(F, prec);
    for (int it = 0; it < prec + 4; ++it) {
      PSeries rhs = ser_add(t2, ser_mul(t1, spow(s, (m + 1) / 2)));
      s = ser_mul(rhs, ser_inv(scomp(util, s)));
    }
    E.x = l_inv(l_norm(0, s));
    assert(!E.x.zero && E.x.v == -2);
    E.w = l_mul(l_param(F, prec), l_pow(E.x, (m + 1) / 2));
    assert(E.w.v == -m);
  } else if (P.type == PlaceType::SPLIT) {
    E.K = F;
    PSeries w = dc_inf_branch(C, P, prec);
    E.x = l_inv(l_param(F, prec));
    E.w = l_norm(0, w);  // may be zero to this precision; caller retries
  } else {
    // inert at infinity: the value of u is a constant of absolute trace 1
    const Field* K2 = Field::get(F->p, 2 * F->r);
    E.K = K2;
    assert(rat_val_inf(u) == 0);
    PSeries nrev = sfrom_poly(K2, reverse_to(u.num, u.num.deg()), prec);
    PSeries drev = sfrom_poly(K2, reverse_to(u.den, u.den.deg()), prec);
    PSeries uhat = ser_mul(nrev, ser_inv(drev));
    Fq th = artin_schreier_root(K2, uhat.c[0]);
    PSeries W = ser_make(K2, prec);
    W.c[0] = th;
    for (int reached = 1; reached < prec; reached *= 2) W = ser_add(ser_mul(W, W), uhat);
    E.x = l_inv(l_param(K2, prec));
    E.w = l_norm(0, W);
  }
  return E;
}

// The lexicographically least monic irreducible quadratic: the fixed
// presentation of the degree-2 residue fields at infinity.
const Poly& inf_quad_modulus(const Field* F) { return monic_irreducibles(F, 2)[0]; }

LocalLead infinity_lead(const Curve& C, const Place& P, const DCFun& u) {
  const Field* F = C.F;
  int prec = 2 * (std::max(u.A.deg(), 0) + std::max(u.B.deg(), 0) + u.C.deg()) + 4 * C.genus + 24;
  for (int attempt = 0; attempt < 8; ++attempt, prec *= 2) {
    InfExp E = inf_expand(C, P, prec);
    if (E.w.zero && !u.B.is_zero()) continue;  // w-branch vanishes deeper than prec
    Laur num = l_poly_at(u.A, E.x, E.K, prec);
    if (!u.B.is_zero()) num = l_add(num, l_mul(l_poly_at(u.B, E.x, E.K, prec), E.w));
    Laur lu = l_mul(num, l_inv(l_poly_at(u.C, E.x, E.K, prec)));
    if (lu.zero) continue;  // cancellation beyond precision; retry larger
    LocalLead L;
    L.v = lu.v;
    Fq lead = lu.s.c[0];
    if (P.type == PlaceType::INERT) {
      L.K = ResAlg{F, inf_quad_modulus(F), false, poly_zero(F), poly_zero(F)};
      QuotMap qm = quot_map(F, L.K.p);
      assert(qm.K == E.K);
      L.c = ResElt{qm.from_K(lead), poly_zero(F)};
    } else {
      L.K = ResAlg{F, poly_x(F), false, poly_zero(F), poly_zero(F)};
      L.c = ResElt{poly_const(F, lead), poly_zero(F)};
    }
    return L;
  }
  throw std::logic_error("infinity_lead: expansion precision exhausted");
}

LocalLead finite_lead(const Curve& C, const Place& P, const DCFun& u) {
  const Field* F = C.F;
  const Poly& p = P.p;
  int gamma = val_p(u.C, p);
  Poly C0 = strip_p(u.C, p, gamma) % p;

  if (P.type == PlaceType::SPLIT) {
    ResAlg K{F, p, false, poly_zero(F), poly_zero(F)};
    i64 bound;
    if (u.B.is_zero()) {
      bound = val_p(u.A, p);
    } else {
      Rat nrm = dc_norm(C, u.A, u.B);
      assert(val_p(nrm.den.is_zero() ? poly_const(F, F->one()) : nrm.den, p) == 0);
      bound = val_p(nrm.num, p);
    }
    int kk = (int)bound + 1;
    Poly pK = poly_pow(p, (u64)kk);
    Poly N = u.A % pK;
    if (!u.B.is_zero()) N = (u.A + u.B * dc_branch_lift(C, P, kk)) % pK;
    assert(!N.is_zero());
    int vn = val_p(N, p);
    assert(vn <= bound);
    Poly n0 = strip_p(N, p, vn) % p;
    return LocalLead{vn - gamma, K, ResElt{n0 * poly_inverse_mod(C0, p) % p, poly_zero(F)}};
  }

  if (P.type == PlaceType::INERT) {
    ResAlg K{F, p, true, poly_zero(F), poly_zero(F)};
    if (C.kind == CurveKind::DOUBLE_ODD) {
      K.s0 = C.f % p;
    } else {
      const Rat& ur = C.as.u;
      K.s0 = ur.num * poly_inverse_mod(ur.den % p, p) % p;
      K.s1 = poly_const(F, F->one());
    }
    int alpha = u.A.is_zero() ? INT_MAX : val_p(u.A, p);
    int beta = u.B.is_zero() ? INT_MAX : val_p(u.B, p);
    int m = std::min(alpha, beta);
    Poly a0 = alpha == m ? strip_p(u.A, p, m) % p : poly_zero(F);
    Poly b0 = beta == m ? strip_p(u.B, p, m) % p : poly_zero(F);
    ResElt r = res_mul(K, ResElt{a0, b0}, res_inv(K, ResElt{C0, poly_zero(F)}));
    return LocalLead{(i64)m - gamma, K, r};
  }

  // ramified finite place
  ResAlg K{F, p, false, poly_zero(F), poly_zero(F)};
  if (C.kind == CurveKind::DOUBLE_ODD) {
    // uniformizer w; lead(p) = f0(P)^-1 with f = p f0
    Poly f0 = C.f / p;
    Poly f0bar = f0 % p;
    assert(!f0bar.is_zero());
    i64 vA = u.A.is_zero() ? INT64_MAX : 2 * val_p(u.A, p);
    i64 vB = u.B.is_zero() ? INT64_MAX : 2 * val_p(u.B, p) + 1;
    i64 v = std::min(vA, vB) - 2 * gamma;
    Poly lead;
    if (vA < vB) {
      int a = (int)(vA / 2);
      lead = strip_p(u.A, p, a) % p;
      int e = gamma - a;
      Poly fpw = e >= 0 ? poly_powmod(f0bar, (u128_t)e, p)
                        : poly_powmod(poly_inverse_mod(f0bar, p), (u128_t)(-e), p);
      lead = lead * fpw % p;
    } else {
      int b = (int)((vB - 1) / 2);
      lead = strip_p(u.B, p, b) % p;
      int e = gamma - b;
      Poly fpw = e >= 0 ? poly_powmod(f0bar, (u128_t)e, p)
                        : poly_powmod(poly_inverse_mod(f0bar, p), (u128_t)(-e), p);
      lead = lead * fpw % p;
    }
    return LocalLead{v, K, ResElt{lead * poly_inverse_mod(C0, p) % p, poly_zero(F)}};
  }

  // characteristic 2, ramified: v(x-part) even, v(w-part) odd
  int m = P.mP;
  assert(m % 2 == 1);
  i64 vA = u.A.is_zero() ? INT64_MAX : 2 * val_p(u.A, p);
  i64 vB = u.B.is_zero() ? INT64_MAX : 2 * val_p(u.B, p) - m;
  i64 v = std::min(vA, vB) - 2 * gamma;
  if (v % 2 == 0) {
    // the x-part leads: value of (A/C) p^(-v/2)
    assert(vA < vB);
    int a = (int)(vA / 2);
    Poly lead = strip_p(u.A, p, a) % p;
    return LocalLead{v, K, ResElt{lead * poly_inverse_mod(C0, p) % p, poly_zero(F)}};
  }
  // odd order: lead(u) = sqrt(lead(u^2)), the square having even order
  LocalLead L2 = finite_lead(C, P, dc_mul(C, u, u));
  assert(L2.v == 2 * v);
  return LocalLead{v, K, res_char_root(L2.K, L2.c)};
}

}  // namespace

LocalLead dc_local_lead(const Curve& C, const Place& P, const DCFun& u) {
  assert(!dc_is_zero(u));
  if (P.infinity) return infinity_lead(C, P, u);
  return finite_lead(C, P, u);
}

// --- lifts and pole blocks ------------------------------------------------------

namespace {

// Generator data of the quadratic residue field at an inert infinite place:
// a function L with residue rho generating kappa over F_q.
std::pair<DCFun, Fq> inert_inf_gen(const Curve& C) {
  const Field* F = C.F;
  const Field* K2 = Field::get(F->p, 2 * F->r);
  if (C.kind == CurveKind::DOUBLE_ODD) {
    auto w0 = K2->sqrt(K2->embed(F, C.f.lc()));
    assert(w0.has_value());
    Poly xg1 = poly_pow(poly_x(F), (u64)(C.genus + 1));
    return {DCFun{poly_zero(F), poly_const(F, F->one()), xg1}, *w0};
  }
  const Rat& u = C.as.u;
  assert(rat_val_inf(u) == 0);  // an inert infinite place has a nonzero u-value
  Fq c0 = K2->div(K2->embed(F, u.num.lc()), K2->embed(F, u.den.lc()));
  Fq th = artin_schreier_root(K2, c0);
  return {DCFun{poly_zero(F), poly_const(F, F->one()), poly_const(F, F->one())}, th};
}

}  // namespace

DCFun res_lift(const Curve& C, const Place& P, const ResAlg& K, const ResElt& c) {
  const Field* F = C.F;
  if (!P.infinity) return DCFun{c.a, c.b, poly_const(F, F->one())};
  if (P.type != PlaceType::INERT) {
    assert(c.a.deg() <= 0 && c.b.is_zero());
    return DCFun{c.a, poly_zero(F), poly_const(F, F->one())};
  }
  // express the target in the basis (1, rho) of the quadratic residue field
  QuotMap qm = quot_map(F, K.p);
  const Field* K2 = qm.K;
  Fq target = qm.to_K(c.a);
  assert(c.b.is_zero());
  auto [L, rho] = inert_inf_gen(C);
  for (u64 i = 0; i < F->q; ++i)
    for (u64 j = 0; j < F->q; ++j) {
      Fq u0 = Fq{i}, u1 = Fq{j};
      Fq val = K2->add(K2->embed(F, u0), K2->mul(K2->embed(F, u1), rho));
      if (val == target) {
        DCFun r = dc_scale(C, u1, L);
        return dc_add(C, DCFun{poly_const(F, u0), poly_zero(F), poly_const(F, F->one())}, r);
      }
    }
  throw std::logic_error("res_lift: quadratic residue field basis failure");
}

DCFun dc_pole_block(const Curve& C, const Place& P, i64 j) {
  assert(j >= 1);
  const Field* F = C.F;
  Poly one = poly_const(F, F->one());
  auto xpow = [&](i64 e) { return poly_pow(poly_x(F), (u64)e); };
  if (!P.infinity) {
    const Poly& p = P.p;
    auto ppow = [&](i64 e) { return poly_pow(p, (u64)e); };
    if (P.type != PlaceType::RAM) return DCFun{one, poly_zero(F), ppow(j)};
    if (C.kind == CurveKind::DOUBLE_ODD) {
      // v(p) = 2, v(w) = 1
      if (j % 2 == 0) return DCFun{one, poly_zero(F), ppow(j / 2)};
      return DCFun{poly_zero(F), one, ppow((j + 1) / 2)};
    }
    // characteristic 2: v(p) = 2, v(w) = -mP
    if (j % 2 == 0) return DCFun{one, poly_zero(F), ppow(j / 2)};
    i64 s = (P.mP - j) / 2;  // w * p^s has valuation -j
    if (s >= 0) return DCFun{poly_zero(F), ppow(s), one};
    return DCFun{poly_zero(F), one, ppow(-s)};
  }
  if (P.type != PlaceType::RAM) return DCFun{xpow(j), poly_zero(F), one};
  if (C.kind == CurveKind::DOUBLE_ODD) {
    // v(x) = -2, v(w) = -deg f
    i64 D = C.f.deg();
    assert(D % 2 == 1);
    if (j % 2 == 0) return DCFun{xpow(j / 2), poly_zero(F), one};
    i64 s = (j - D) / 2;  // w * x^s has valuation -j
    if (s >= 0) return DCFun{poly_zero(F), xpow(s), one};
    return DCFun{poly_zero(F), one, xpow(-s)};
  }
  // characteristic 2 at infinity: v(x) = -2, v(w) = -mP
  if (j % 2 == 0) return DCFun{xpow(j / 2), poly_zero(F), one};
  i64 s = (j - P.mP) / 2;
  if (s >= 0) return DCFun{poly_zero(F), xpow(s), one};
  return DCFun{poly_zero(F), one, xpow(-s)};
}

}  // namespace relh
