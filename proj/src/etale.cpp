// etale.cpp -- enumeration of etale double covers (two independent
// strategies in odd characteristic, an Artin-Schreier coset search in
// characteristic 2), tame double covers with prescribed ramification, wild
// cyclic degree-p covers, and the class-field-theoretic splitting oracle
// used to cross-check all of them.

#include <algorithm>
#include <cassert>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>

#include "relh/cover.hpp"

namespace relh {

namespace {

// ---------- F_p row reduction -------------------------------------------------

// Reduced row echelon accumulator over F_p (p small).  Rows keep a leading 1
// at their pivot column and zeros at every other row's pivot column, so a
// single reduction pass is exact.
struct FpRref {
  int p;
  int pivot_limit;  // pivots are only chosen among columns < pivot_limit
  std::vector<std::vector<int>> rows;
  std::vector<int> pivots;

  FpRref(int p, int pivot_limit) : p(p), pivot_limit(pivot_limit) {}

  static int inv_mod(int a, int p) {
    int r = 1;
    for (int e = p - 2; e > 0; e >>= 1, a = a * a % p)
      if (e & 1) r = r * a % p;
    return r;
  }

  std::vector<int> reduce(std::vector<int> v) const {
    for (size_t i = 0; i < rows.size(); ++i) {
      int c = v[(size_t)pivots[i]] % p;
      if (c)
        for (size_t j = 0; j < v.size(); ++j)
          v[j] = (v[j] + (p - c) * rows[i][j]) % p;
    }
    return v;
  }

  // Add v to the span.  Returns false if v was already in it; returns false
  // and sets *stuck if v reduces to something nonzero only past pivot_limit.
  bool add(std::vector<int> v, bool* stuck = nullptr) {
    v = reduce(std::move(v));
    int piv = -1;
    for (int j = 0; j < pivot_limit; ++j)
      if (v[(size_t)j] % p) { piv = j; break; }
    if (piv < 0) {
      bool rest = false;
      for (size_t j = 0; j < v.size(); ++j) rest |= v[j] % p != 0;
      if (stuck) *stuck = rest;
      return false;
    }
    int s = inv_mod(v[(size_t)piv], p);
    for (auto& x : v) x = x * s % p;
    for (size_t i = 0; i < rows.size(); ++i) {
      int c = rows[i][(size_t)piv] % p;
      if (c)
        for (size_t j = 0; j < v.size(); ++j)
          rows[i][j] = (rows[i][j] + (p - c) * v[j]) % p;
    }
    rows.push_back(std::move(v));
    pivots.push_back(piv);
    return true;
  }

  bool contains(const std::vector<int>& v) const {
    auto w = reduce(v);
    for (int x : w)
      if (x % p) return false;
    return true;
  }

  int rank() const { return (int)rows.size(); }
};

// ---------- evaluation frames ---------------------------------------------------

// A list of finite places (avoiding a forbidden support) whose degrees sum
// past `bound`; evaluating a function at all of them is injective on any
// space of functions with pole degree <= bound and poles inside the avoided
// support.
struct EvalFrame {
  std::vector<Place> pls;
  std::vector<int> quad;  // residue algebra of pls[i] has a w-part
  int siglen = 0;
};

EvalFrame make_frame(const Curve& C, const Divisor& avoid, int bound) {
  std::set<std::vector<u64>> bad;
  for (auto& [P, n] : avoid.t) bad.insert(place_key(P));
  EvalFrame fr;
  DCFun one = dc_make(C, poly_const(C.F, C.F->one()), poly_zero(C.F),
                      poly_const(C.F, C.F->one()));
  int sum = 0;
  for (int d = 1; sum <= bound; ++d) {
    assert(d <= bound + 3);
    for (auto& P : places_of_degree(C, d)) {
      if (sum > bound) break;
      if (P.infinity || bad.count(place_key(P))) continue;
      LocalLead L = dc_local_lead(C, P, one);
      fr.pls.push_back(P);
      fr.quad.push_back(L.K.quad ? 1 : 0);
      fr.siglen += d * C.F->r * (L.K.quad ? 2 : 1);
      sum += d;
    }
  }
  return fr;
}

// F_p digit vector of the values of u at the frame places; F_p-linear in u,
// injective on functions the frame was sized for.
std::vector<int> frame_sig(const Curve& C, const EvalFrame& fr, const DCFun& u) {
  std::vector<int> sig;
  sig.reserve((size_t)fr.siglen);
  const Field* F = C.F;
  bool zero = dc_is_zero(u);
  for (size_t i = 0; i < fr.pls.size(); ++i) {
    const Place& P = fr.pls[i];
    Poly a = poly_zero(F), b = poly_zero(F);
    if (!zero) {
      LocalLead L = dc_local_lead(C, P, u);
      assert(L.v >= 0);
      if (L.v == 0) { a = L.c.a; b = L.c.b; }
    }
    int parts = fr.quad[i] ? 2 : 1;
    for (int part = 0; part < parts; ++part) {
      const Poly& c = part ? b : a;
      for (int j = 0; j < P.deg; ++j) {
        auto dig = F->digits(c.coeff(j));
        sig.insert(sig.end(), dig.begin(), dig.end());
      }
    }
  }
  assert((int)sig.size() == fr.siglen);
  return sig;
}

// ---------- coordinates in a Riemann-Roch space ---------------------------------

// F_p coordinate system for L(W) given its basis: expresses any member as an
// F_p combination of eps_j * basis_i via frame evaluation.
struct RRCoords {
  const Curve* C = nullptr;
  std::vector<DCFun> fpbasis;  // eps_j * basis_i, i outer, j inner
  EvalFrame fr;
  FpRref solver;  // rows [sig | unit], pivots restricted to sig columns
  int n = 0;

  RRCoords(const Curve& C_, const RRBasis& rb, const Divisor& supp, int degW)
      : solver(C_.F->p, 0) {
    C = &C_;
    const Field* F = C_.F;
    fr = make_frame(C_, supp, degW);
    solver = FpRref(F->p, fr.siglen);
    n = rb.dim * F->r;
    for (int i = 0; i < rb.dim; ++i)
      for (int j = 0; j < F->r; ++j) {
        std::vector<int> e((size_t)F->r, 0);
        e[(size_t)j] = 1;
        DCFun g = dc_scale(C_, F->from_digits(e), rb.basis[(size_t)i]);
        fpbasis.push_back(g);
        auto row = frame_sig(C_, fr, g);
        row.resize((size_t)fr.siglen + (size_t)n, 0);
        row[(size_t)fr.siglen + fpbasis.size() - 1] = 1;
        bool ok = solver.add(std::move(row));
        assert(ok);  // frame is injective, so basis signatures are independent
      }
  }

  // coordinates of v (which must lie in the space)
  std::vector<int> express(const DCFun& v) const {
    int p = C->F->p;
    auto row = frame_sig(*C, fr, v);
    row.resize((size_t)fr.siglen + (size_t)n, 0);
    row = solver.reduce(std::move(row));
    for (int j = 0; j < fr.siglen; ++j) assert(row[(size_t)j] % p == 0);
    std::vector<int> co((size_t)n);
    for (int i = 0; i < n; ++i) co[(size_t)i] = (p - row[(size_t)(fr.siglen + i)] % p) % p;
    return co;
  }

  DCFun build(const std::vector<int>& co) const {
    DCFun u = dc_make(*C, poly_zero(C->F), poly_zero(C->F), poly_const(C->F, C->F->one()));
    for (int i = 0; i < n; ++i)
      if (co[(size_t)i])
        u = dc_add(*C, u, dc_scale(*C, C->F->from_int(co[(size_t)i]), fpbasis[(size_t)i]));
    return u;
  }
};

// ---------- degree-1 divisor class ----------------------------------------------

Divisor degree_one_combo(const Curve& C) {
  Divisor D;  // empty
  long long g = 0;
  for (int t = 1; t <= C.genus + 5; ++t) {
    for (auto& P : places_of_degree(C, t)) {
      if (g == 1) break;
      if (g == 0) {
        D = div_make({{P, 1}});
        g = t;
        continue;
      }
      // extended gcd step: g' = u g + v t
      long long a = g, b = t, x0 = 1, x1 = 0, y0 = 0, y1 = 1;
      while (b) {
        long long qq = a / b;
        std::swap(a -= qq * b, b);
        std::swap(x0 -= qq * x1, x1);
        std::swap(y0 -= qq * y1, y1);
      }
      if (a == g) continue;  // no improvement
      D = div_add(div_scale(D, (int)x0), div_scale(div_make({{P, 1}}), (int)y0));
      g = a;
    }
    if (g == 1) break;
  }
  assert(g == 1 && div_deg(D) == 1);
  return D;
}

// ---------- group coordinates for Pic^0 / ell -----------------------------------

struct EllQuotient {
  int ell = 0;
  int s = 0;                          // F_ell dimension of Pic0 / ell Pic0
  std::vector<std::vector<int>> co;  // index -> coordinate vector (length s)
};

EllQuotient ell_quotient(const Pic0& pic, int ell) {
  int n = pic.size();
  EllQuotient Q;
  Q.ell = ell;
  std::vector<int> mul((size_t)n);
  for (int i = 0; i < n; ++i) {
    int m = pic.zero;
    for (int k = 0; k < ell; ++k) m = pic.add(m, i);
    mul[(size_t)i] = m;
  }
  std::vector<char> vis((size_t)n, 0);
  Q.co.assign((size_t)n, {});
  for (int i = 0; i < n; ++i)
    if (!vis[(size_t)mul[(size_t)i]]) vis[(size_t)mul[(size_t)i]] = 1;  // ell * Pic0
  for (;;) {
    int gen = -1;
    for (int i = 0; i < n && gen < 0; ++i)
      if (!vis[(size_t)i]) gen = i;
    if (gen < 0) break;
    std::vector<int> snapshot;
    for (int i = 0; i < n; ++i)
      if (vis[(size_t)i]) snapshot.push_back(i);
    int kg = pic.zero;
    for (int k = 1; k < ell; ++k) {
      kg = pic.add(kg, gen);
      for (int x : snapshot) {
        int y = pic.add(x, kg);
        if (!vis[(size_t)y]) {
          vis[(size_t)y] = 1;
          Q.co[(size_t)y] = Q.co[(size_t)x];
          Q.co[(size_t)y].resize((size_t)Q.s, 0);
          Q.co[(size_t)y].push_back(k);
        }
      }
    }
    ++Q.s;
  }
  for (auto& v : Q.co) v.resize((size_t)Q.s, 0);
  return Q;
}

// Do two even-divisor square-root data give the same cover (0), a
// constant-field twist pair (1), or different covers (2)?  Their product has
// an even divisor, so it is a square (same extension), a nonsquare constant
// times a square (twists), or a genuine third datum.
int kummer_relation(const Curve& C, const DCFun& a, const DCFun& b) {
  DCFun prod = dc_mul(C, a, b);
  try {
    CoverSpec cov = make_cover(C, CoverKind::KUMMER, prod);
    return cov.constant_ext ? 1 : 2;
  } catch (const std::invalid_argument&) {
    return 0;
  }
}

Fq smallest_nonsquare(const Field* F) {
  for (u64 v = 2; v < F->q; ++v)
    if (F->quadratic_character(Fq{v}) == -1) return Fq{v};
  assert(false && "odd field has a nonsquare");
  return Fq{0};
}

// Is v in the image of z -> z^p - z on L(E)?  (Poles of v must lie in p*E;
// any global solution z is then forced into L(E).)
bool in_wild_image(const Curve& C, const Divisor& E, const DCFun& v) {
  if (dc_is_zero(v)) return true;
  const Field* F = C.F;
  int degE = div_deg(E);
  RRBasis rb = rr_space(C, E);
  EvalFrame fr = make_frame(C, E, F->p * degE);
  FpRref span(F->p, 1 << 30);
  for (int i = 0; i < rb.dim; ++i)
    for (int j = 0; j < F->r; ++j) {
      std::vector<int> e((size_t)F->r, 0);
      e[(size_t)j] = 1;
      DCFun z = dc_scale(C, F->from_digits(e), rb.basis[(size_t)i]);
      span.add(frame_sig(C, fr, dc_artin_schreier_op(C, z)));
    }
  return span.contains(frame_sig(C, fr, v));
}

// same cover test for degree-p Artin-Schreier data: u2 ~ u1 iff
// u2 - lambda u1 is in the image of z -> z^p - z for some lambda in F_p^*.
bool as_same_cover(const Curve& C, const DCFun& u1, const Divisor& D1, const DCFun& u2,
                   const Divisor& D2) {
  Divisor E = div_add(D1, D2);
  for (int lam = 1; lam < C.F->p; ++lam) {
    DCFun v = dc_sub(C, u2, dc_scale(C, C.F->from_int(lam), u1));
    if (in_wild_image(C, E, v)) return true;
  }
  return false;
}

// Core search: cosets of the wild image in L(pD) over effective D of degree
// <= dbound, trivial (constant-containing) cosets excluded exactly, wild
// data scaled to a canonical form, distinct covers kept.  stop_after >= 0
// stops once that many covers are found.
std::vector<CoverSpec> as_coset_search(const Curve& C, int dbound, bool etale_only,
                                       int stop_after) {
  const Field* F = C.F;
  int p = F->p;
  std::vector<CoverSpec> out;
  std::vector<DCFun> keep_u;
  std::vector<Divisor> keep_D;
  for (int d = 1; d <= dbound; ++d) {
    for (auto& D : effective_divisors(C, d)) {
      if (stop_after >= 0 && (int)out.size() >= stop_after) return out;
      Divisor pD = div_scale(D, p);
      RRCoords big(C, rr_space(C, pD), D, p * d);
      RRBasis small = rr_space(C, D);
      int n = big.n;
      FpRref W(p, n), T(p, n);
      for (int i = 0; i < small.dim; ++i)
        for (int j = 0; j < F->r; ++j) {
          std::vector<int> e((size_t)F->r, 0);
          e[(size_t)j] = 1;
          DCFun z = dc_scale(C, F->from_digits(e), small.basis[(size_t)i]);
          auto co = big.express(dc_artin_schreier_op(C, z));
          W.add(co);
          T.add(std::move(co));
        }
      for (int j = 0; j < F->r; ++j) {
        std::vector<int> e((size_t)F->r, 0);
        e[(size_t)j] = 1;
        DCFun cst = dc_make(C, poly_const(F, F->from_digits(e)), poly_zero(F),
                            poly_const(F, F->one()));
        T.add(big.express(cst));
      }
      // free columns = complement of W's pivots
      std::vector<int> freecols;
      {
        std::vector<char> ispiv((size_t)n, 0);
        for (int pv : W.pivots) ispiv[(size_t)pv] = 1;
        for (int j = 0; j < n; ++j)
          if (!ispiv[(size_t)j]) freecols.push_back(j);
      }
      int nf = (int)freecols.size();
      if (nf == 0) continue;
      double total = 1;
      for (int i = 0; i < nf; ++i) total *= p;
      assert(total <= 2e6 && "coset space too large; shrink dbound");
      std::vector<int> ctr((size_t)nf, 0);
      for (;;) {
        // advance the base-p counter (start by skipping the zero vector)
        int pos = 0;
        while (pos < nf && ++ctr[(size_t)pos] == p) ctr[(size_t)pos++] = 0;
        if (pos == nf) break;
        std::vector<int> v((size_t)n, 0);
        for (int i = 0; i < nf; ++i) v[(size_t)freecols[(size_t)i]] = ctr[(size_t)i];
        // canonical under scaling: keep the lexicographically least of
        // {reduce(lambda v)}; all of them are supported on the free columns
        bool canon = true;
        for (int lam = 2; lam < p && canon; ++lam) {
          std::vector<int> lv((size_t)n);
          for (int i = 0; i < n; ++i) lv[(size_t)i] = v[(size_t)i] * lam % p;
          lv = W.reduce(std::move(lv));
          if (lv < v) canon = false;
        }
        if (!canon) continue;
        if (T.contains(v)) continue;  // coset of a constant: not a geometric cover
        DCFun u = big.build(v);
        CoverSpec cov = make_cover(C, CoverKind::AS, u);
        assert(!cov.constant_ext);
        if (etale_only && !cov.ram.empty()) continue;
        bool dup = false;
        for (size_t i = 0; i < keep_u.size() && !dup; ++i) {
          if (out[i].g_prime != cov.g_prime || out[i].disc_deg != cov.disc_deg) continue;
          dup = as_same_cover(C, keep_u[i], keep_D[i], u, D);
        }
        if (dup) continue;
        out.push_back(cov);
        keep_u.push_back(u);
        keep_D.push_back(D);
        if (stop_after >= 0 && (int)out.size() >= stop_after) return out;
      }
    }
  }
  return out;
}

std::pair<int, std::string> cover_key(const CoverSpec& cov) {
  return {cov.g_prime, label_encode(cover_class(cov))};
}

}  // namespace

// ---------- the class-field-theoretic oracle -------------------------------------

std::vector<std::pair<int, IsogClass>> etale_cyclic_by_characters(const Curve& base, int ell,
                                                                  int rmax) {
  int g = base.genus;
  int gp = ell * (g - 1) + 1;
  assert(rmax >= gp);
  Pic0 pic = pic0_enumerate(base);
  Divisor D1 = degree_one_combo(base);
  EllQuotient Q = ell_quotient(pic, ell);
  auto pls = places_up_to(base, rmax);
  std::vector<int> pdeg, pco;  // flattened co index
  std::vector<std::vector<int>> pcls;
  for (auto& P : pls) {
    Divisor Z = div_sub(div_make({{P, 1}}), div_scale(D1, P.deg));
    pcls.push_back(Q.co[(size_t)pic.class_of(Z)]);
    pdeg.push_back(P.deg);
  }
  std::vector<std::pair<int, IsogClass>> out;
  // phi = (c, lambda) over Z/ell, nontrivial, first nonzero entry = 1,
  // lambda != 0 (lambda = 0 is the constant-field cover)
  std::vector<int> phi((size_t)Q.s + 1, 0);
  for (;;) {
    size_t pos = 0;
    while (pos < phi.size() && ++phi[pos] == ell) phi[pos++] = 0;
    if (pos == phi.size()) break;
    int first = -1;
    for (size_t i = 0; i < phi.size() && first < 0; ++i)
      if (phi[i]) first = (int)i;
    if (phi[(size_t)first] != 1) continue;  // one representative per scalar line
    bool geo = false;
    for (int i = 0; i < Q.s; ++i) geo |= phi[(size_t)i + 1] != 0;
    if (!geo) continue;
    std::vector<i64> N((size_t)rmax + 1, 0);
    for (size_t ip = 0; ip < pls.size(); ++ip) {
      int e = pdeg[ip];
      int val = phi[0] * e % ell;
      for (int i = 0; i < Q.s; ++i) val = (val + phi[(size_t)i + 1] * pcls[ip][(size_t)i]) % ell;
      int step = val == 0 ? e : ell * e;
      for (int r = step; r <= rmax; r += step) N[(size_t)r] += (i64)ell * e;
    }
    std::vector<i64> counts(N.begin() + 1, N.begin() + 1 + gp);
    IsogClass cls = weil_from_counts((int)base.F->q, gp, counts);
    assert(counts_plausible(cls, rmax));
    // the class derived from the first g' counts must reproduce the rest
    auto chk = counts_from_weil(cls, rmax);
    for (int r = 1; r <= rmax; ++r) assert(chk[(size_t)r - 1] == N[(size_t)r]);
    out.push_back({gp, cls});
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.first != b.first ? a.first < b.first : label_encode(a.second) < label_encode(b.second);
  });
  return out;
}

// ---------- etale double covers ---------------------------------------------------

std::vector<CoverSpec> enum_etale_double(const Curve& base) {
  const Field* F = base.F;
  Pic0 pic = pic0_enumerate(base);
  auto t2 = pic.two_torsion();
  std::vector<CoverSpec> out;

  if (F->p != 2) {
    Fq ns = smallest_nonsquare(F);
    // strategy B: 2-torsion of the divisor class group
    std::vector<DCFun> b_data;
    for (int tau : t2) {
      if (tau == pic.zero) continue;
      Divisor D2 = div_scale(div_sub(pic.elems[(size_t)tau], pic.E0), 2);
      auto u = principal_test(base, D2);
      assert(u.has_value());
      b_data.push_back(*u);
    }
    for (auto& u : b_data)
      for (int tw = 0; tw < 2; ++tw) {
        DCFun ut = tw ? dc_scale(base, ns, u) : u;
        CoverSpec cov = make_cover(base, CoverKind::KUMMER, ut);
        assert(!cov.constant_ext && cov.ram.empty() && cov.g_prime == 2 * base.genus - 1);
        out.push_back(cov);
      }

    // strategy A: model factorizations (+ conjugate factorizations for
    // even-degree models), one datum per 2-torsion class
    std::vector<DCFun> a_data;
    auto fac = poly_factor(base.f);
    int k = (int)fac.size();
    int df = base.f.deg();
    for (int m = 1; m < (1 << k) - 1; ++m) {
      int dsum = 0;
      for (int i = 0; i < k; ++i)
        if (m & (1 << i)) dsum += fac[(size_t)i].first.deg();
      if (df % 2 == 0) {
        if (dsum % 2 != 0) continue;
        int comp = ((1 << k) - 1) ^ m;
        if (comp < m) continue;  // one subset per complement pair
      } else {
        if (!(m & 1)) continue;  // odd models: classes are subsets containing
                                 // the first factor (complement pairing)
      }
      Poly u = poly_const(F, F->one());
      for (int i = 0; i < k; ++i)
        if (m & (1 << i)) u = u * fac[(size_t)i].first;
      a_data.push_back(dc_make(base, u, poly_zero(F), poly_const(F, F->one())));
    }
    bool all_even = df % 2 == 0;
    for (auto& [pf, e] : fac) all_even = all_even && pf.deg() % 2 == 0;
    if (all_even) {
      // conjugate factorizations f = g * sigma(g) over F_{q^2}
      const Field* F2 = Field::get(F->p, 2 * F->r);
      auto sigma = [&](Fq c) { return F2->frobenius(c, F->r); };
      auto sigma_poly = [&](const Poly& h) {
        Poly s = h;
        for (auto& c : s.c) c = sigma(c);
        return s;
      };
      std::map<u64, Fq> down;  // image in F2 -> element of F
      for (u64 v = 0; v < F->q; ++v) down[F2->embed(F, Fq{v}).v] = Fq{v};
      auto fac2 = poly_factor(poly_embed(F2, base.f));
      // pair each factor with its conjugate
      std::vector<std::pair<Poly, Poly>> pairs;
      std::vector<char> used(fac2.size(), 0);
      for (size_t i = 0; i < fac2.size(); ++i) {
        if (used[i]) continue;
        Poly sh = sigma_poly(fac2[i].first);
        assert(!(sh == fac2[i].first));  // even-degree factors split
        size_t j = 0;
        while (j < fac2.size() && !(fac2[j].first == sh)) ++j;
        assert(j < fac2.size() && !used[j]);
        used[i] = used[j] = 1;
        pairs.push_back({fac2[i].first, sh});
      }
      // lambda with Norm(lambda) = lc(f); mu runs over the norm-1 circle
      Fq lcf = F2->embed(F, base.f.lc());
      Fq lambda{0};
      std::vector<Fq> circle;
      for (u64 v = 0; v < F2->q; ++v) {
        Fq x{v};
        Fq nrm = F2->mul(x, sigma(x));
        if (nrm == lcf && F2->is_zero(lambda) && !F2->is_zero(x)) lambda = x;
        if (nrm == F2->one()) circle.push_back(x);
      }
      assert(!F2->is_zero(lambda));
      int np = (int)pairs.size();
      for (int asg = 0; asg < (1 << (np > 0 ? np - 1 : 0)); ++asg) {
        Poly gt = poly_const(F2, lambda);
        for (int i = 0; i < np; ++i)
          gt = gt * ((i > 0 && (asg & (1 << (i - 1)))) ? pairs[(size_t)i].second
                                                       : pairs[(size_t)i].first);
        for (Fq mu : circle) {
          Poly gm = poly_const(F2, mu) * gt;
          Poly tr2 = gm + sigma_poly(gm);
          std::vector<Fq> ac;
          for (auto& c : tr2.c) {
            auto it = down.find(c.v);
            assert(it != down.end());
            ac.push_back(it->second);
          }
          Poly A = poly_make(F, ac);
          DCFun u = dc_make(base, A, poly_const(F, F->from_int(2)), poly_const(F, F->one()));
          try {
            CoverSpec cov = make_cover(base, CoverKind::KUMMER, u);
            if (cov.constant_ext || !cov.ram.empty()) continue;
          } catch (const std::exception&) {
            continue;
          }
          bool dup = false;
          for (auto& prev : a_data)
            if (kummer_relation(base, prev, u) != 2) { dup = true; break; }
          if (!dup) a_data.push_back(u);
        }
      }
    }
    // the two strategies must see the same classes
    if ((int)a_data.size() + 1 != (int)t2.size())
      throw std::logic_error("etale double covers: factorization and class group counts differ");
    std::vector<std::pair<int, std::string>> ka, kb;
    for (auto& u : a_data)
      for (int tw = 0; tw < 2; ++tw) {
        DCFun ut = tw ? dc_scale(base, ns, u) : u;
        ka.push_back(cover_key(make_cover(base, CoverKind::KUMMER, ut)));
      }
    for (auto& cov : out) kb.push_back(cover_key(cov));
    std::sort(ka.begin(), ka.end());
    std::sort(kb.begin(), kb.end());
    if (ka != kb)
      throw std::logic_error("etale double covers: factorization and class group data differ");
    return out;
  }

  // characteristic 2: Artin-Schreier coset search, completeness anchored to
  // the class-group count and cross-checked against the character oracle
  int target = 2 * ((int)t2.size() - 1);
  if (target > 0) {
    out = as_coset_search(base, base.genus + 1, true, target);
    if ((int)out.size() < target)
      throw std::logic_error("etale double covers: search bound too small");
    std::vector<std::pair<int, std::string>> ka, kb;
    for (auto& cov : out) ka.push_back(cover_key(cov));
    for (auto& [gp, cls] : etale_cyclic_by_characters(base, 2, 2 * base.genus - 1))
      kb.push_back({gp, label_encode(cls)});
    std::sort(ka.begin(), ka.end());
    std::sort(kb.begin(), kb.end());
    if (ka != kb)
      throw std::logic_error("etale double covers: search and character data differ");
  }
  return out;
}

// ---------- tame double covers ----------------------------------------------------

std::vector<CoverSpec> enum_tame_double(const Curve& base, int max_R_deg) {
  const Field* F = base.F;
  if (F->p == 2)
    throw std::invalid_argument("enum_tame_double: tame double covers need odd characteristic");
  Pic0 pic = pic0_enumerate(base);
  Divisor D1 = degree_one_combo(base);
  Fq ns = smallest_nonsquare(F);
  auto pls = places_up_to(base, max_R_deg);
  std::vector<CoverSpec> out;
  // subsets of places with even total degree in [2, max_R_deg]
  std::vector<int> pick;
  auto emit = [&](const std::vector<int>& idx) {
    std::vector<std::pair<Place, int>> terms;
    int degR = 0;
    for (int i : idx) {
      terms.push_back({pls[(size_t)i], 1});
      degR += pls[(size_t)i].deg;
    }
    Divisor R = div_make(terms);
    int zeta = pic.class_of(div_sub(R, div_scale(D1, degR)));
    auto halves = pic.halve(zeta);
    // the solutions of 2x = [R - deg R] form a torsor under the 2-torsion
    assert(halves.empty() || halves.size() == pic.two_torsion().size());
    for (int sg : halves) {
      Divisor T = div_sub(div_sub(R, div_scale(div_sub(pic.elems[(size_t)sg], pic.E0), 2)),
                          div_scale(D1, degR));
      auto u = principal_test(base, T);
      assert(u.has_value());
      for (int tw = 0; tw < 2; ++tw) {
        DCFun ut = tw ? dc_scale(base, ns, *u) : *u;
        CoverSpec cov = make_cover(base, CoverKind::KUMMER, ut);
        assert(!cov.constant_ext && (int)cov.ram.size() == (int)idx.size() &&
               cov.disc_deg == degR && cov.g_prime == 2 * base.genus - 1 + degR / 2);
        out.push_back(cov);
      }
    }
  };
  std::function<void(size_t, int)> rec = [&](size_t start, int deg) {
    if (deg > 0 && deg % 2 == 0 && !pick.empty()) emit(pick);
    for (size_t i = start; i < pls.size(); ++i) {
      if (deg + pls[i].deg > max_R_deg) continue;
      pick.push_back((int)i);
      rec(i + 1, deg + pls[i].deg);
      pick.pop_back();
    }
  };
  rec(0, 0);
  return out;
}

// ---------- wild cyclic covers ----------------------------------------------------

std::vector<CoverSpec> enum_as_cyclic_p(const Curve& base, int dbound, bool etale_only) {
  auto out = as_coset_search(base, dbound, etale_only, -1);
  // the degree-p constant-field cover (unique up to equivalence), flagged
  const Field* F = base.F;
  Fq cst{0};
  for (u64 v = 1; v < F->q && F->is_zero(cst); ++v)
    if (F->absolute_trace(Fq{v}) != 0) cst = Fq{v};
  assert(!F->is_zero(cst));
  CoverSpec cc = make_cover(base, CoverKind::AS,
                            dc_make(base, poly_const(F, cst), poly_zero(F),
                                    poly_const(F, F->one())));
  assert(cc.constant_ext);
  out.push_back(cc);
  return out;
}

}  // namespace relh
