// place.cpp -- place enumeration, residue fields, valuations, local series.

#include "relh/place.hpp"

#include <algorithm>
#include <cassert>
#include <climits>
#include <stdexcept>

namespace relh {

namespace {

constexpr i64 VAL_INF = (i64)1 << 40;

i64 poly_val_at(const Poly& f, const Poly& p) {
  if (f.is_zero()) return VAL_INF;
  i64 v = 0;
  Poly t = f;
  while (true) {
    auto [q, r] = poly_divrem(t, p);
    if (!r.is_zero()) return v;
    ++v;
    t = q;
  }
}

// s^D * A(1/s) as a polynomial in s (requires D >= deg A)
Poly poly_reverse_to(const Poly& A, int D) {
  assert(D >= A.deg());
  std::vector<Fq> c((size_t)D + 1, Fq{0});
  for (int i = 0; i <= A.deg(); ++i) c[D - i] = A.coeff(i);
  return poly_make(A.F, std::move(c));
}

PSeries ser_from_poly(const Field* K, const Poly& f, int prec) {
  PSeries s = ser_make(K, prec);
  for (int i = 0; i < prec && i <= f.deg(); ++i) s.c[i] = K->embed(f.F, f.coeff(i));
  return s;
}

PSeries ser_shift(const PSeries& a, int k) {  // multiply by t^k
  PSeries s = ser_make(a.K, a.prec());
  for (int i = 0; i + k < a.prec(); ++i)
    if (i + k >= 0) s.c[i + k] = a.c[i];
  return s;
}

bool poly_less(const Poly& a, const Poly& b) {
  if (a.deg() != b.deg()) return a.deg() < b.deg();
  for (int i = a.deg(); i >= 0; --i)
    if (a.coeff(i).v != b.coeff(i).v) return a.coeff(i).v < b.coeff(i).v;
  return false;
}

}  // namespace

// --- truncated power series ---------------------------------------------------

PSeries ser_make(const Field* K, int prec) {
  PSeries s;
  s.K = K;
  s.c.assign(prec, Fq{0});
  return s;
}

PSeries ser_add(const PSeries& a, const PSeries& b) {
  int n = std::min(a.prec(), b.prec());
  PSeries s = ser_make(a.K, n);
  for (int i = 0; i < n; ++i) s.c[i] = a.K->add(a.c[i], b.c[i]);
  return s;
}

PSeries ser_sub(const PSeries& a, const PSeries& b) {
  int n = std::min(a.prec(), b.prec());
  PSeries s = ser_make(a.K, n);
  for (int i = 0; i < n; ++i) s.c[i] = a.K->sub(a.c[i], b.c[i]);
  return s;
}

PSeries ser_mul(const PSeries& a, const PSeries& b) {
  int n = std::min(a.prec(), b.prec());
  PSeries s = ser_make(a.K, n);
  for (int i = 0; i < n; ++i) {
    if (!a.c[i].v) continue;
    for (int j = 0; i + j < n; ++j)
      if (b.c[j].v) s.c[i + j] = a.K->add(s.c[i + j], a.K->mul(a.c[i], b.c[j]));
  }
  return s;
}

PSeries ser_scale(Fq x, const PSeries& a) {
  PSeries s = ser_make(a.K, a.prec());
  for (int i = 0; i < a.prec(); ++i) s.c[i] = a.K->mul(x, a.c[i]);
  return s;
}

PSeries ser_inv(const PSeries& a) {
  assert(a.c[0].v != 0);
  int n = a.prec();
  PSeries b = ser_make(a.K, n);
  Fq i0 = a.K->inv(a.c[0]);
  b.c[0] = i0;
  for (int k = 1; k < n; ++k) {
    Fq acc{0};
    for (int j = 1; j <= k; ++j)
      if (j < a.prec() && a.c[j].v)
        acc = a.K->add(acc, a.K->mul(a.c[j], b.c[k - j]));
    b.c[k] = a.K->neg(a.K->mul(i0, acc));
  }
  return b;
}

int ser_ord(const PSeries& a) {
  for (int i = 0; i < a.prec(); ++i)
    if (a.c[i].v) return i;
  return a.prec();
}

PSeries ser_eval_poly(const Poly& f, const PSeries& a) {
  PSeries s = ser_make(a.K, a.prec());
  for (int i = f.deg(); i >= 0; --i) {
    s = ser_mul(s, a);
    s.c[0] = a.K->add(s.c[0], a.K->embed(f.F, f.coeff(i)));
  }
  return s;
}

// --- residue field isomorphism -------------------------------------------------

Fq QuotMap::to_K(const Poly& a) const {
  Fq s{0};
  for (int i = a.deg(); i >= 0; --i)
    s = K->add(K->mul(s, rho), K->embed(F, a.coeff(i)));
  return s;
}

Poly QuotMap::from_K(Fq alpha) const {
  int n = K->r;
  std::vector<int> ad = K->digits(alpha);
  // c = inv_ * ad over F_p
  int d = p.deg(), rr = F->r;
  std::vector<Fq> coeffs((size_t)d, Fq{0});
  for (int row = 0; row < n; ++row) {
    u64 acc = 0;
    for (int col = 0; col < n; ++col) acc += (u64)inv_[row][col] * (u64)ad[col];
    int val = (int)(acc % F->p);
    // row indexes (i, j): coefficient i, digit j
    int i = row / rr, j = row % rr;
    if (val) {
      std::vector<int> dig(rr, 0);
      dig[j] = val;
      coeffs[i] = F->add(coeffs[i], F->from_digits(dig));
    }
  }
  return poly_make(F, std::move(coeffs));
}

QuotMap quot_map(const Field* F, const Poly& p) {
  QuotMap qm;
  qm.F = F;
  qm.p = p;
  int d = p.deg();
  qm.K = Field::get(F->p, F->r * d);
  auto roots = poly_roots(poly_embed(qm.K, p));
  assert(!roots.empty());
  std::sort(roots.begin(), roots.end(), [](Fq a, Fq b) { return a.v < b.v; });
  qm.rho = roots[0];

  // build the F_p-matrix with columns digits(e_j * rho^i)
  int n = qm.K->r, rr = F->r;
  u64 prime = F->p;
  std::vector<std::vector<u32>> M((size_t)n, std::vector<u32>((size_t)2 * n, 0));
  Fq rhopow = qm.K->one();
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < rr; ++j) {
      std::vector<int> dig(rr, 0);
      dig[j] = 1;
      Fq ej = qm.K->embed(F, F->from_digits(dig));
      auto col = qm.K->digits(qm.K->mul(ej, rhopow));
      for (int row = 0; row < n; ++row) M[row][i * rr + j] = (u32)col[row];
    }
    rhopow = qm.K->mul(rhopow, qm.rho);
  }
  for (int i = 0; i < n; ++i) M[i][n + i] = 1;
  // Gauss-Jordan over F_p
  auto inv_mod = [&](u64 a) {
    u64 r = 1, b = a % prime, e = prime - 2;
    while (e) {
      if (e & 1) r = r * b % prime;
      b = b * b % prime;
      e >>= 1;
    }
    return r;
  };
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int row = col; row < n; ++row)
      if (M[row][col] % prime) {
        piv = row;
        break;
      }
    assert(piv >= 0);
    std::swap(M[col], M[piv]);
    u64 s = inv_mod(M[col][col]);
    for (int k = 0; k < 2 * n; ++k) M[col][k] = (u32)((u64)M[col][k] * s % prime);
    for (int row = 0; row < n; ++row) {
      if (row == col) continue;
      u64 f = M[row][col] % prime;
      if (!f) continue;
      for (int k = 0; k < 2 * n; ++k)
        M[row][k] = (u32)((M[row][k] + (prime - f) * M[col][k]) % prime);
    }
  }
  qm.inv_.assign((size_t)n, std::vector<u32>((size_t)n, 0));
  for (int r2 = 0; r2 < n; ++r2)
    for (int c2 = 0; c2 < n; ++c2) qm.inv_[r2][c2] = M[r2][n + c2];
  return qm;
}

Fq artin_schreier_root(const Field* K, Fq a) {
  assert(K->p == 2);
  int n = K->r;
  // solve w^2 + w = a as an F_2-linear system on digit vectors
  std::vector<u64> cols((size_t)n, 0);
  for (int j = 0; j < n; ++j) {
    std::vector<int> dig(n, 0);
    dig[j] = 1;
    Fq e = K->from_digits(dig);
    Fq im = K->add(K->mul(e, e), e);
    auto d2 = K->digits(im);
    u64 bits = 0;
    for (int i = 0; i < n; ++i)
      if (d2[i]) bits |= (u64)1 << i;
    cols[j] = bits;
  }
  auto ad = K->digits(a);
  u64 target = 0;
  for (int i = 0; i < n; ++i)
    if (ad[i]) target |= (u64)1 << i;
  // Gaussian elimination on columns
  std::vector<u64> basis = cols;
  std::vector<u64> combo((size_t)n, 0);
  for (int j = 0; j < n; ++j) combo[j] = (u64)1 << j;
  u64 sol = 0, acc = target;
  int rank = 0;  // positions [0, rank) hold pivot columns for earlier bits
  for (int bit = 0; bit < n; ++bit) {
    int piv = -1;
    for (int j = rank; j < n; ++j)
      if (basis[j] >> bit & 1) {
        piv = j;
        break;
      }
    if (piv < 0) continue;
    std::swap(basis[rank], basis[piv]);
    std::swap(combo[rank], combo[piv]);
    for (int j = 0; j < n; ++j)
      if (j != rank && (basis[j] >> bit & 1)) {
        basis[j] ^= basis[rank];
        combo[j] ^= combo[rank];
      }
    if (acc >> bit & 1) {
      acc ^= basis[rank];
      sol ^= combo[rank];
    }
    ++rank;
  }
  if (acc) throw std::runtime_error("artin_schreier_root: no solution (trace 1)");
  std::vector<int> sd(n, 0);
  for (int i = 0; i < n; ++i) sd[i] = (int)(sol >> i & 1);
  Fq w = K->from_digits(sd);
  assert(K->add(K->mul(w, w), w).v == a.v);
  return w;
}

// --- place keys ---------------------------------------------------------------

std::vector<u64> place_key(const Place& P) {
  std::vector<u64> k;
  k.push_back((u64)P.deg);
  k.push_back(P.infinity ? 1 : 0);
  k.push_back((u64)P.type);
  k.push_back((u64)P.chart);
  k.push_back((u64)P.branch);
  k.push_back((u64)P.mP);
  k.push_back((u64)(P.p.deg() + 1));
  for (auto& c : P.p.c) k.push_back(c.v);
  k.push_back((u64)(P.ybr.deg() + 1));
  for (auto& c : P.ybr.c) k.push_back(c.v);
  k.push_back(P.wbr_inf.v);
  k.push_back((u64)(P.yfac.deg() + 1));
  for (auto& c : P.yfac.c) k.push_back(c.v);
  k.push_back(P.x0.v);
  k.push_back(P.y0.v);
  return k;
}

bool place_eq(const Place& a, const Place& b) { return place_key(a) == place_key(b); }

// --- double-cover classification ------------------------------------------------

namespace {

std::vector<Place> dc_places_over(const Curve& C, const Poly& p) {
  const Field* F = C.F;
  int d = p.deg();
  std::vector<Place> out;
  if (C.kind == CurveKind::DOUBLE_ODD) {
    Poly fbar = C.f % p;
    if (fbar.is_zero()) {
      Place P;
      P.deg = d;
      P.p = p;
      P.type = PlaceType::RAM;
      P.mP = 1;
      out.push_back(P);
      return out;
    }
    u128_t e = 1;
    for (int i = 0; i < d; ++i) e *= F->q;
    Poly s = poly_powmod(fbar, (e - 1) / 2, p);
    if (s.deg() == 0 && s.coeff(0).v == F->one().v) {
      QuotMap qm = quot_map(F, p);
      Fq alpha = qm.to_K(fbar);
      auto sq = qm.K->sqrt(alpha);
      assert(sq.has_value());
      Poly y0 = qm.from_K(*sq);
      Poly y1 = poly_zero(F) - y0;
      if (!poly_less(y0, y1)) std::swap(y0, y1);
      for (int br = 0; br < 2; ++br) {
        Place P;
        P.deg = d;
        P.p = p;
        P.type = PlaceType::SPLIT;
        P.branch = br;
        P.ybr = br == 0 ? y0 : y1;
        out.push_back(P);
      }
    } else {
      Place P;
      P.deg = 2 * d;
      P.p = p;
      P.type = PlaceType::INERT;
      out.push_back(P);
    }
    return out;
  }
  // characteristic 2: reduced model z^2 + z = u
  const Rat& u = C.as.u;
  for (auto& rp : C.as.ram) {
    if (!rp.p.is_zero() && rp.p == p) {
      Place P;
      P.deg = d;
      P.p = p;
      P.type = PlaceType::RAM;
      P.mP = rp.m;
      out.push_back(P);
      return out;
    }
  }
  QuotMap qm = quot_map(F, p);
  Fq dv = qm.to_K(u.den % p);
  assert(dv.v != 0);  // non-ramified: p does not divide den(u)
  Fq alpha = qm.K->mul(qm.to_K(u.num % p), qm.K->inv(dv));
  if (qm.K->absolute_trace(alpha) == 0) {
    Fq z0 = artin_schreier_root(qm.K, alpha);
    Poly zp0 = qm.from_K(z0);
    Poly zp1 = zp0 + poly_const(F, F->one());
    if (!poly_less(zp0, zp1)) std::swap(zp0, zp1);
    for (int br = 0; br < 2; ++br) {
      Place P;
      P.deg = d;
      P.p = p;
      P.type = PlaceType::SPLIT;
      P.branch = br;
      P.ybr = br == 0 ? zp0 : zp1;
      out.push_back(P);
    }
  } else {
    Place P;
    P.deg = 2 * d;
    P.p = p;
    P.type = PlaceType::INERT;
    out.push_back(P);
  }
  return out;
}

std::vector<Place> dc_places_inf(const Curve& C) {
  const Field* F = C.F;
  std::vector<Place> out;
  if (C.kind == CurveKind::DOUBLE_ODD) {
    if (C.f.deg() % 2 == 1) {
      Place P;
      P.deg = 1;
      P.infinity = true;
      P.type = PlaceType::RAM;
      P.mP = C.f.deg();
      out.push_back(P);
    } else {
      Fq lc = C.f.lc();
      if (F->quadratic_character(lc) == 1) {
        Fq s = *F->sqrt(lc);
        Fq s2 = F->neg(s);
        if (s2.v < s.v) std::swap(s, s2);
        for (int br = 0; br < 2; ++br) {
          Place P;
          P.deg = 1;
          P.infinity = true;
          P.type = PlaceType::SPLIT;
          P.branch = br;
          P.wbr_inf = br == 0 ? s : s2;
          out.push_back(P);
        }
      } else {
        Place P;
        P.deg = 2;
        P.infinity = true;
        P.type = PlaceType::INERT;
        out.push_back(P);
      }
    }
    return out;
  }
  for (auto& rp : C.as.ram) {
    if (rp.p.is_zero()) {
      Place P;
      P.deg = 1;
      P.infinity = true;
      P.type = PlaceType::RAM;
      P.mP = rp.m;
      out.push_back(P);
      return out;
    }
  }
  int v = rat_val_inf(C.as.u);
  assert(v >= 0);
  Fq alpha = v > 0 ? F->zero() : F->div(C.as.u.num.lc(), C.as.u.den.lc());
  if (F->absolute_trace(alpha) == 0) {
    Fq z0 = artin_schreier_root(F, alpha);
    Fq z1 = F->add(z0, F->one());
    if (z1.v < z0.v) std::swap(z0, z1);
    for (int br = 0; br < 2; ++br) {
      Place P;
      P.deg = 1;
      P.infinity = true;
      P.type = PlaceType::SPLIT;
      P.branch = br;
      P.wbr_inf = br == 0 ? z0 : z1;
      out.push_back(P);
    }
  } else {
    Place P;
    P.deg = 2;
    P.infinity = true;
    P.type = PlaceType::INERT;
    out.push_back(P);
  }
  return out;
}

// --- plane place enumeration -----------------------------------------------

std::vector<Place> plane_places_over(const Curve& C, const Poly& p,
                                     int maxdeg = INT_MAX) {
  const Field* F = C.F;
  int a = p.deg();
  QuotMap qm = quot_map(F, p);
  const Field* Ka = qm.K;
  // fiber polynomial F(rho, y) over K_a
  std::vector<Fq> fib((size_t)C.P.ydeg() + 1, Fq{0});
  for (int j = 0; j <= C.P.ydeg(); ++j) fib[j] = qm.to_K(C.P.cy[j] % p);
  Poly fy = poly_make(Ka, std::move(fib));
  std::vector<Place> out;
  if (fy.deg() < 1) return out;
  for (auto& [fac, mult] : poly_factor(fy)) {
    (void)mult;
    int b = fac.deg();
    if ((i64)a * b > maxdeg) continue;  // caller only wants small places
    const Field* K = Field::get(F->p, F->r * a * b);
    Fq x0 = K->embed(Ka, qm.rho);
    auto roots = poly_roots(poly_embed(K, fac));
    assert(!roots.empty());
    std::sort(roots.begin(), roots.end(), [](Fq u, Fq v) { return u.v < v.v; });
    Place P;
    P.deg = a * b;
    P.p = p;
    P.yfac = fac;
    P.K = K;
    P.x0 = x0;
    P.y0 = roots[0];
    P.chart = 0;
    out.push_back(P);
  }
  return out;
}

std::vector<Place> plane_places_inf(const Curve& C) {
  const Field* F = C.F;
  int d = C.pdeg;
  std::vector<Fq> lead((size_t)d + 1, Fq{0});
  for (int j = 0; j <= C.P.ydeg(); ++j) {
    int i = d - j;
    if (i >= 0 && i <= C.P.cy[j].deg()) lead[i] = C.P.cy[j].coeff(i);
  }
  Poly lf = poly_make(F, std::move(lead));
  std::vector<Place> out;
  assert(!lf.is_zero());
  for (auto& [fac, mult] : poly_factor(lf)) {
    (void)mult;
    int b = fac.deg();
    const Field* K = Field::get(F->p, F->r * b);
    auto roots = poly_roots(poly_embed(K, fac));
    assert(!roots.empty());
    std::sort(roots.begin(), roots.end(), [](Fq u, Fq v) { return u.v < v.v; });
    Place P;
    P.deg = b;
    P.infinity = true;
    P.p = fac;
    P.K = K;
    P.x0 = roots[0];
    P.y0 = K->zero();
    P.chart = 1;
    out.push_back(P);
  }
  if (lf.deg() < d) {
    Place P;
    P.deg = 1;
    P.infinity = true;
    P.K = F;
    P.x0 = F->zero();
    P.y0 = F->zero();
    P.chart = 2;
    out.push_back(P);
  }
  return out;
}

}  // namespace

std::vector<Place> places_over(const Curve& C, const Poly& p) {
  if (C.kind == CurveKind::PLANE) return plane_places_over(C, p);
  return dc_places_over(C, p);
}

std::vector<Place> places_at_infinity_list(const Curve& C) {
  if (C.kind == CurveKind::PLANE) return plane_places_inf(C);
  return dc_places_inf(C);
}

std::vector<Place> places_of_degree(const Curve& C, int n) {
  std::vector<Place> out;
  auto take = [&](std::vector<Place>&& v) {
    for (auto& P : v)
      if (P.deg == n) out.push_back(std::move(P));
  };
  if (C.kind == CurveKind::PLANE) {
    for (int a = 1; a <= n; ++a) {
      if (n % a) continue;
      for (auto& p : monic_irreducibles(C.F, a)) take(plane_places_over(C, p, n));
    }
  } else {
    for (auto& p : monic_irreducibles(C.F, n)) take(dc_places_over(C, p));
    if (n % 2 == 0)
      for (auto& p : monic_irreducibles(C.F, n / 2)) take(dc_places_over(C, p));
  }
  take(places_at_infinity_list(C));
  std::sort(out.begin(), out.end(),
            [](const Place& a, const Place& b) { return place_key(a) < place_key(b); });
  return out;
}

std::vector<Place> places_up_to(const Curve& C, int maxdeg) {
  std::vector<Place> out;
  for (int d = 1; d <= maxdeg; ++d) {
    auto v = places_of_degree(C, d);
    out.insert(out.end(), v.begin(), v.end());
  }
  return out;
}

// --- double-cover functions -----------------------------------------------------

DCFun dc_convert(const Curve& C, const Poly& A, const Poly& B, const Poly& Cden) {
  if (C.kind == CurveKind::DOUBLE_ODD) return DCFun{A, B, Cden};
  assert(C.kind == CurveKind::DOUBLE_EVEN);
  // y = h * (z_red + tau):  A + B y = (A + B h tau) + (B h) z_red
  const Rat& tau = C.as.tau;
  Poly A2 = A * tau.den + B * C.h * tau.num;
  Poly B2 = B * C.h * tau.den;
  Poly C2 = Cden * tau.den;
  Poly g = poly_gcd(poly_gcd(A2, B2), C2);
  if (g.deg() > 0) {
    A2 = A2 / g;
    B2 = B2 / g;
    C2 = C2 / g;
  }
  return DCFun{A2, B2, C2};
}

Rat dc_norm(const Curve& C, const Poly& A, const Poly& B) {
  const Field* F = C.F;
  if (C.kind == CurveKind::DOUBLE_ODD)
    return Rat{A * A - C.f * B * B, poly_const(F, F->one())};
  const Rat& u = C.as.u;
  return rat_make((A * A + A * B) * u.den + B * B * u.num, u.den);
}

Poly dc_branch_lift(const Curve& C, const Place& P, int k) {
  assert(P.type == PlaceType::SPLIT && !P.infinity);
  const Field* F = C.F;
  Poly pk = poly_pow(P.p, k);
  Poly w = P.ybr % pk;
  if (C.kind == CurveKind::DOUBLE_ODD) {
    Fq half = F->inv(F->from_int(2));
    Poly fbar = C.f % pk;
    for (int reached = 1; reached < k; reached *= 2)
      w = (half * (w + fbar * poly_inverse_mod(w, pk))) % pk;
    return w;
  }
  Poly ubar = (C.as.u.num * poly_inverse_mod(C.as.u.den % pk, pk)) % pk;
  for (int reached = 1; reached < k; reached *= 2) w = (w * w + ubar) % pk;
  return w;
}

i64 dc_valuation(const Curve& C, const Place& P, const DCFun& fn) {
  const Poly &A = fn.A, &B = fn.B, &Cd = fn.C;
  assert(!Cd.is_zero());
  if (A.is_zero() && B.is_zero()) return VAL_INF;
  int g = C.genus;
  if (!P.infinity) {
    i64 vC = poly_val_at(Cd, P.p);
    switch (P.type) {
      case PlaceType::RAM: {
        i64 vw = C.kind == CurveKind::DOUBLE_ODD ? 1 : -(i64)P.mP;
        i64 va = A.is_zero() ? VAL_INF : 2 * poly_val_at(A, P.p);
        i64 vb = B.is_zero() ? VAL_INF : 2 * poly_val_at(B, P.p) + vw;
        return std::min(va, vb) - 2 * vC;
      }
      case PlaceType::INERT: {
        i64 va = A.is_zero() ? VAL_INF : poly_val_at(A, P.p);
        i64 vb = B.is_zero() ? VAL_INF : poly_val_at(B, P.p);
        return std::min(va, vb) - vC;
      }
      case PlaceType::SPLIT: {
        Rat N = dc_norm(C, A, B);
        i64 vN = rat_val(N, P.p);
        int k = (int)vN + 1;
        Poly w = dc_branch_lift(C, P, k);
        Poly E = (A + B * w) % poly_pow(P.p, k);
        i64 v = E.is_zero() ? (i64)k : poly_val_at(E, P.p);
        assert(v <= vN);
        return v - vC;
      }
    }
  }
  // infinity
  i64 vC = -(i64)Cd.deg();
  i64 vA = A.is_zero() ? VAL_INF : -(i64)A.deg();
  i64 vB = B.is_zero() ? VAL_INF : -(i64)B.deg();
  bool odd = C.kind == CurveKind::DOUBLE_ODD;
  switch (P.type) {
    case PlaceType::RAM: {
      i64 m = odd ? (i64)C.f.deg() : (i64)P.mP;  // pole order of w
      i64 va = A.is_zero() ? VAL_INF : 2 * vA;
      i64 vb = B.is_zero() ? VAL_INF : 2 * vB - m;
      return std::min(va, vb) - 2 * vC;
    }
    case PlaceType::INERT: {
      i64 vw = odd ? -(i64)(g + 1) : 0;
      i64 va = A.is_zero() ? VAL_INF : vA;
      i64 vb = B.is_zero() ? VAL_INF : vB + vw;
      return std::min(va, vb) - vC;
    }
    case PlaceType::SPLIT: {
      int dA = std::max(A.deg(), 0), dB = std::max(B.deg(), 0);
      int M = odd ? std::max(dA, dB + g + 1) : std::max(dA, dB);
      Rat N = dc_norm(C, A, B);
      int cap = 2 * M + std::max(rat_val_inf(N), 0) + 4;
      PSeries w = dc_inf_branch(C, P, cap);
      PSeries S = ser_make(C.F, cap);
      if (!A.is_zero())
        S = ser_add(S, ser_shift(ser_from_poly(C.F, poly_reverse_to(A, dA), cap), M - dA));
      if (!B.is_zero()) {
        int off = odd ? M - dB - (g + 1) : M - dB;
        S = ser_add(S, ser_shift(ser_mul(ser_from_poly(C.F, poly_reverse_to(B, dB), cap), w), off));
      }
      int o = ser_ord(S);
      assert(o < cap);
      return (i64)o - M - vC;
    }
  }
  return 0;  // unreachable
}

PSeries dc_inf_branch(const Curve& C, const Place& P, int prec) {
  assert(P.infinity && P.type == PlaceType::SPLIT);
  const Field* F = C.F;
  prec = std::max(prec, 1);
  if (C.kind == CurveKind::DOUBLE_ODD) {
    int D = C.f.deg();
    assert(D % 2 == 0);
    PSeries frev = ser_from_poly(F, poly_reverse_to(C.f, D), prec);
    PSeries w = ser_make(F, prec);
    w.c[0] = P.wbr_inf;
    Fq half = F->inv(F->from_int(2));
    for (int reached = 1; reached < prec; reached *= 2)
      w = ser_scale(half, ser_add(w, ser_mul(frev, ser_inv(w))));
    return w;
  }
  const Rat& u = C.as.u;
  int v = rat_val_inf(u);
  assert(v >= 0);
  PSeries numrev = ser_from_poly(F, poly_reverse_to(u.num, u.num.deg()), prec);
  PSeries denrev = ser_from_poly(F, poly_reverse_to(u.den, u.den.deg()), prec);
  PSeries uhat = ser_shift(ser_mul(numrev, ser_inv(denrev)), v);
  PSeries w = ser_make(F, prec);
  w.c[0] = P.wbr_inf;
  for (int reached = 1; reached < prec; reached *= 2)
    w = ser_add(ser_mul(w, w), uhat);
  return w;
}

// --- plane local expansions ------------------------------------------------------

namespace {

// chart polynomials: chart 1: G1(s,w) = sum c_ij s^i w^(d-i-j);
// chart 2: G2(v,w) = sum c_ij v^j w^(d-i-j); d = total degree of G
BiPoly plane_chartify(const BiPoly& G, int chart) {
  const Field* F = G.F;
  int d = bipoly_total_deg(G);
  std::vector<Poly> cw((size_t)d + 1, poly_zero(F));
  for (int j = 0; j <= G.ydeg(); ++j)
    for (int i = 0; i <= G.cy[j].deg(); ++i) {
      Fq c = G.cy[j].coeff(i);
      if (!c.v) continue;
      int k = d - i - j;
      int e = chart == 1 ? i : j;
      std::vector<Fq> mono((size_t)e + 1, F->zero());
      mono[e] = c;
      cw[k] = cw[k] + poly_make(F, std::move(mono));
    }
  return bipoly_make(F, std::move(cw));
}

PSeries ser_eval_bipoly(const BiPoly& G, const PSeries& X, const PSeries& Y) {
  PSeries s = ser_make(X.K, X.prec());
  for (int j = G.ydeg(); j >= 0; --j) {
    s = ser_mul(s, Y);
    s = ser_add(s, ser_eval_poly(G.cy[j], X));
  }
  return s;
}

Fq eval_bipoly_K(const Field* K, const BiPoly& G, Fq X, Fq Y) {
  Fq s{0};
  for (int j = G.ydeg(); j >= 0; --j) {
    Fq row{0};
    for (int i = G.cy[j].deg(); i >= 0; --i)
      row = K->add(K->mul(row, X), K->embed(G.F, G.cy[j].coeff(i)));
    s = K->add(K->mul(s, Y), row);
  }
  return s;
}

// Hensel expansion of a smooth point (a0, b0) of G(a,b) = 0 over K
std::pair<PSeries, PSeries> hensel_xy(const Field* K, const BiPoly& G, Fq a0, Fq b0,
                                      int prec) {
  BiPoly Ga = bipoly_dx(G), Gb = bipoly_dy(G);
  Fq gb = eval_bipoly_K(K, Gb, a0, b0);
  prec = std::max(prec, 2);
  if (gb.v != 0) {
    PSeries A = ser_make(K, prec);
    A.c[0] = a0;
    A.c[1] = K->one();
    PSeries B = ser_make(K, prec);
    B.c[0] = b0;
    for (int reached = 1; reached < prec; reached *= 2) {
      PSeries num = ser_eval_bipoly(G, A, B);
      PSeries den = ser_eval_bipoly(Gb, A, B);
      B = ser_sub(B, ser_mul(num, ser_inv(den)));
    }
    return {A, B};
  }
  Fq ga = eval_bipoly_K(K, Ga, a0, b0);
  assert(ga.v != 0);
  PSeries B = ser_make(K, prec);
  B.c[0] = b0;
  B.c[1] = K->one();
  PSeries A = ser_make(K, prec);
  A.c[0] = a0;
  for (int reached = 1; reached < prec; reached *= 2) {
    PSeries num = ser_eval_bipoly(G, A, B);
    PSeries den = ser_eval_bipoly(Ga, A, B);
    A = ser_sub(A, ser_mul(num, ser_inv(den)));
  }
  return {A, B};
}

}  // namespace

std::pair<PSeries, PSeries> plane_local(const Curve& C, const Place& P, int prec) {
  assert(C.kind == CurveKind::PLANE);
  const BiPoly& G = P.chart == 0 ? C.P : plane_chartify(C.P, P.chart);
  return hensel_xy(P.K, G, P.x0, P.y0, prec);
}

namespace {

// order of vanishing of G along the local expansion at P, with the chart
// weight already applied (so this is v_P of the function G(x,y))
i64 plane_ord(const Curve& C, const Place& P, const BiPoly& G) {
  if (G.is_zero()) return VAL_INF;
  int dG = bipoly_total_deg(G);
  for (int prec = 16; prec <= 1 << 14; prec *= 2) {
    auto [A, B] = plane_local(C, P, prec);
    PSeries S;
    i64 shift = 0;
    if (P.chart == 0) {
      S = ser_eval_bipoly(G, A, B);
    } else {
      S = ser_eval_bipoly(plane_chartify(G, P.chart), A, B);
      int ow = ser_ord(B);
      assert(ow < prec);
      shift = -(i64)dG * ow;
    }
    int o = ser_ord(S);
    if (o < S.prec()) return o + shift;
  }
  throw std::runtime_error("plane_ord: function vanishes to huge order (multiple of the curve?)");
}

}  // namespace

i64 plane_valuation(const Curve& C, const Place& P, const BiPoly& G, const BiPoly& H) {
  i64 a = plane_ord(C, P, G);
  if (a >= VAL_INF) return VAL_INF;
  return a - plane_ord(C, P, H);
}

}  // namespace relh
