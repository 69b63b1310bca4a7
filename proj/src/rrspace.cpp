// Riemann-Roch spaces L(D) on double covers by exact linear algebra.
//
// Ansatz: u = (A + B*w)/C* with A, B in F_q[x] and C* the least common
// denominator allowed by the positive finite part of D.  Writing any
// u in L(D) through its trace and anti-trace parts shows A and B then lie
// in F_q[x] with degrees bounded by the pole orders permitted over
// x = infinity, so the ansatz spans all of L(D).  Membership is a
// conjunction of F_q-linear conditions:
//   * inert / ramified finite places: divisibility of A and B separately
//     by powers of the place's x-polynomial (valuations there are exact
//     minima of the two parts, by residue independence resp. parity);
//   * split finite places: congruences A + B*W = 0 mod p^k against the
//     branch lift W of w;
//   * infinity: degree caps, plus branch-series coefficient conditions at
//     split infinite places.

#include <cassert>
#include <stdexcept>

#include "relh/jacobian.hpp"

namespace relh {

namespace {

int place_e(const Place& P) { return P.type == PlaceType::RAM ? 2 : 1; }

// ceil(a / b) for b > 0
i64 cdiv(i64 a, i64 b) { return a >= 0 ? (a + b - 1) / b : -((-a) / b); }
i64 fdiv(i64 a, i64 b) { return a >= 0 ? a / b : -cdiv(-a, b); }

// Nullspace basis of the row system, columns n; basis vectors are indexed by
// ascending free column, giving a reduced echelon basis.
std::vector<std::vector<Fq>> nullspace(const Field* F, std::vector<std::vector<Fq>> rows,
                                       int n) {
  std::vector<int> pivcol;
  size_t r = 0;
  for (int c = 0; c < n && r < rows.size(); ++c) {
    size_t piv = r;
    while (piv < rows.size() && rows[piv][c].v == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[r], rows[piv]);
    Fq inv = F->inv(rows[r][c]);
    for (int j = 0; j < n; ++j) rows[r][j] = F->mul(rows[r][j], inv);
    for (size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c].v == 0) continue;
      Fq s = rows[i][c];
      for (int j = 0; j < n; ++j)
        rows[i][j] = F->sub(rows[i][j], F->mul(s, rows[r][j]));
    }
    pivcol.push_back(c);
    ++r;
  }
  std::vector<char> ispiv(n, 0);
  for (int c : pivcol) ispiv[c] = 1;
  std::vector<std::vector<Fq>> basis;
  for (int fc = 0; fc < n; ++fc) {
    if (ispiv[fc]) continue;
    std::vector<Fq> v((size_t)n, F->zero());
    v[fc] = F->one();
    for (size_t i = 0; i < pivcol.size(); ++i) v[pivcol[i]] = F->neg(rows[i][fc]);
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace

RRBasis rr_space(const Curve& C, const Divisor& D) {
  if (C.kind == CurveKind::PLANE)
    throw std::invalid_argument("rr_space: plane models not supported; change the model");
  const Field* F = C.F;
  const int g = C.genus;

  // ---- finite support, grouped by x-polynomial --------------------------------
  struct FinPrime {
    Poly p;
    std::vector<std::pair<Place, int>> pls;  // all places over p with D-mult
    int cp = 0;                              // exponent of p in C*
  };
  std::vector<FinPrime> fins;
  auto register_prime = [&](const Poly& p) {
    for (auto& fp : fins)
      if (fp.p == p) return;
    fins.push_back({p, {}, 0});
  };
  for (auto& [P, n] : D.t) {
    (void)n;
    if (!P.infinity) register_prime(P.p);
  }
  // In characteristic 2 the coordinate w itself has poles at the finite
  // ramified places, so those places carry conditions on B even when they
  // do not appear in D.
  if (C.kind == CurveKind::DOUBLE_EVEN)
    for (auto& rp : C.as.ram)
      if (!rp.p.is_zero()) register_prime(rp.p);
  for (auto& fp : fins)
    for (auto& P : places_over(C, fp.p)) {
      int n = 0;
      for (auto& [Q, m] : D.t)
        if (place_eq(P, Q)) n = m;
      fp.pls.emplace_back(P, n);
    }

  Poly Cstar = poly_const(F, F->one());
  for (auto& fp : fins) {
    for (auto& [P, n] : fp.pls)
      fp.cp = std::max(fp.cp, (int)cdiv(n, place_e(P)));
    if (fp.cp > 0) Cstar = Cstar * poly_pow(fp.p, (u64)fp.cp);
  }
  const int dC = Cstar.deg();

  // ---- infinity: multiplicities, pole order of w, degree caps ------------------
  auto infs = places_at_infinity_list(C);
  auto inf_mult = [&](const Place& P) {
    for (auto& [Q, m] : D.t)
      if (Q.infinity && place_eq(P, Q)) return m;
    return 0;
  };
  auto inf_py = [&](const Place& P) -> int {
    if (C.kind == CurveKind::DOUBLE_ODD)
      return P.type == PlaceType::RAM ? C.f.deg() : C.f.deg() / 2;
    return P.type == PlaceType::RAM ? P.mP : 0;
  };
  // Conjugation orbits over infinity: the split pair is one orbit, any other
  // configuration is a singleton.  deg A is bounded by the largest pole the
  // trace part may have over an orbit, deg B likewise after discounting the
  // pole of w.
  i64 dA = -1, dB = -1;
  {
    auto fl = [](i64 a, i64 b) {  // floor(a/b), b > 0
      return a >= 0 ? a / b : -cdiv(-a, b);
    };
    bool split_seen = false;
    int split_maxn = 0, split_py = 0;
    for (auto& P : infs) {
      int n = inf_mult(P), e = place_e(P), py = inf_py(P);
      if (P.type == PlaceType::SPLIT) {
        split_seen = true;
        split_maxn = std::max(split_maxn, n);
        split_py = py;
        continue;
      }
      dA = std::max<i64>(dA, fl(n + (i64)e * dC, e));
      dB = std::max<i64>(dB, fl(n + (i64)e * dC - py, e));
    }
    if (split_seen) {
      dA = std::max<i64>(dA, split_maxn + dC);
      dB = std::max<i64>(dB, split_maxn + dC - split_py);
    }
  }
  const int nA = (int)std::max<i64>(0, dA + 1), nB = (int)std::max<i64>(0, dB + 1);
  const int ncols = nA + nB;
  RRBasis out;
  out.Cstar = Cstar;
  if (ncols == 0) {
    out.dim = 0;
    int dd = div_deg(D);
    (void)dd;
    assert(dd < 0 || dd - g + 1 <= 0);  // Riemann-Roch forces dim 0 here
    return out;
  }

  std::vector<std::vector<Fq>> rows;
  // Append the coefficient rows of "poly-combination = 0 mod p^k", where the
  // combination is sum_j col_poly[j] * unknown_j over the given column range.
  auto add_congruence = [&](const Poly& p, int k, int col0, int cnt, const Poly& mult) {
    // unknown j in [col0, col0+cnt) carries x^(j-col0) * mult
    Poly pk = poly_pow(p, (u64)k);
    int nr = pk.deg();
    std::vector<std::vector<Fq>> blk((size_t)nr, std::vector<Fq>((size_t)ncols, F->zero()));
    Poly cur = mult % pk;
    Poly x = poly_x(F);
    for (int j = 0; j < cnt; ++j) {
      for (int i = 0; i <= cur.deg(); ++i) blk[(size_t)i][(size_t)(col0 + j)] = cur.coeff(i);
      if (j + 1 < cnt) cur = (cur * x) % pk;
    }
    for (auto& r : blk) rows.push_back(std::move(r));
  };

  const Poly one = poly_const(F, F->one());
  for (auto& fp : fins)
    for (auto& [P, n] : fp.pls) {
      i64 k = (i64)place_e(P) * fp.cp - n;
      if (P.type == PlaceType::RAM) {
        // A and B*w have valuations of opposite parity here, so each part is
        // constrained separately.  In characteristic 2, w contributes an
        // extra pole of order mP, which keeps the B condition live even for
        // k <= 0.
        i64 kA = cdiv(k, 2);
        i64 kB = C.kind == CurveKind::DOUBLE_ODD ? fdiv(k, 2) : cdiv(k + P.mP, 2);
        if (kA > 0 && nA) add_congruence(fp.p, (int)kA, 0, nA, one);
        if (kB > 0 && nB) add_congruence(fp.p, (int)kB, nA, nB, one);
        continue;
      }
      if (k <= 0) continue;
      if (P.type == PlaceType::INERT) {
        if (nA) add_congruence(fp.p, (int)k, 0, nA, one);
        if (nB) add_congruence(fp.p, (int)k, nA, nB, one);
      } else {  // SPLIT: A + B*W = 0 mod p^k
        Poly pk = poly_pow(fp.p, (u64)k);
        int nr = pk.deg();
        std::vector<std::vector<Fq>> blk((size_t)nr, std::vector<Fq>((size_t)ncols, F->zero()));
        Poly x = poly_x(F);
        Poly cur = one % pk;
        for (int j = 0; j < nA; ++j) {
          for (int i = 0; i <= cur.deg(); ++i) blk[(size_t)i][(size_t)j] = cur.coeff(i);
          if (j + 1 < nA) cur = (cur * x) % pk;
        }
        if (nB) {
          Poly W = dc_branch_lift(C, P, (int)k);
          cur = W % pk;
          for (int j = 0; j < nB; ++j) {
            for (int i = 0; i <= cur.deg(); ++i) blk[(size_t)i][(size_t)(nA + j)] = cur.coeff(i);
            if (j + 1 < nB) cur = (cur * x) % pk;
          }
        }
        for (auto& r : blk) rows.push_back(std::move(r));
      }
    }

  // ---- split infinity: branch series conditions ---------------------------------
  for (auto& P : infs) {
    if (P.type != PlaceType::SPLIT) continue;
    int py = inf_py(P);
    i64 M = -1;
    if (nA) M = dA;
    if (nB) M = std::max(M, (i64)dB + py);
    if (M < 0) continue;
    i64 R = M - inf_mult(P) - dC;
    if (R <= 0) continue;
    PSeries Y = dc_inf_branch(C, P, (int)R + 2);
    std::vector<std::vector<Fq>> blk((size_t)R, std::vector<Fq>((size_t)ncols, F->zero()));
    for (int j = 0; j < nA; ++j) {
      i64 l = M - j;
      if (l >= 0 && l < R) blk[(size_t)l][(size_t)j] = F->one();
    }
    for (int j = 0; j < nB; ++j) {
      i64 sh = M - py - j;
      for (i64 l = sh; l < R; ++l) {
        i64 yi = l - sh;
        if (l >= 0 && yi >= 0 && yi < Y.prec())
          blk[(size_t)l][(size_t)(nA + j)] = Y.c[(size_t)yi];
      }
    }
    for (auto& r : blk) rows.push_back(std::move(r));
  }

  auto null = nullspace(F, std::move(rows), ncols);
  for (auto& v : null) {
    std::vector<Fq> ac(v.begin(), v.begin() + nA), bc(v.begin() + nA, v.end());
    DCFun u;
    u.A = poly_make(F, std::move(ac));
    u.B = poly_make(F, std::move(bc));
    u.C = Cstar;
    out.basis.push_back(std::move(u));
  }
  out.dim = (int)out.basis.size();

  // Exactness checks against Riemann-Roch.
  int dd = div_deg(D);
  if (dd < 0) assert(out.dim == 0);
  if (dd >= 0) {
    assert(out.dim >= std::max(0, dd - g + 1));
    assert(out.dim <= dd + 1);
  }
  if (dd >= 2 * g - 1) assert(out.dim == dd - g + 1);
  return out;
}

std::optional<DCFun> principal_test(const Curve& C, const Divisor& D) {
  if (div_deg(D) != 0) throw std::invalid_argument("principal_test: divisor degree must be 0");
  RRBasis L = rr_space(C, div_neg(D));
  if (L.dim == 0) return std::nullopt;
  assert(L.dim == 1);
  DCFun u = L.basis[0];
  if (!div_eq(divisor_of(C, u), D))
    throw std::logic_error("principal_test: witness does not match the divisor");
  return u;
}

}  // namespace relh
