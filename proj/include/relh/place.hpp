// place.hpp -- closed points (places) of a curve, local data, valuations.
//
// Places are represented by Frobenius-orbit data: for double covers, the
// monic irreducible minimal polynomial of the x-coordinate plus the
// behaviour of the cover above it (split / inert / ramified, and which
// branch); for plane curves, a point of the orbit with coordinates in the
// residue field, in one of three projective charts.
//
// Double-cover functions are written (A + B*w)/C with A, B, C in F_q[x],
// where w is the working coordinate of the cover: w = y for odd
// characteristic, and w = z_reduced (the shifted Artin-Schreier coordinate)
// in characteristic 2.  Valuations at every place reduce to polynomial
// arithmetic: p-adic branch lifts at split places, norm/min formulas at
// inert and ramified ones.

#pragma once

#include "relh/curve.hpp"

namespace relh {

enum class PlaceType { SPLIT, INERT, RAM };

struct Place {
  int deg = 0;
  bool infinity = false;

  // double covers: minimal polynomial of x (finite places)
  Poly p;
  PlaceType type = PlaceType::SPLIT;
  int branch = 0;   // split: 0 or 1
  Poly ybr;         // split finite: w mod p on this branch
  Fq wbr_inf{0};    // split infinity: residue of the normalized branch
  int mP = 0;       // ramified: pole/zero order data (odd char: 1; char 2: odd m)

  // plane curves: chart 0 affine (x,y); chart 1 [s:1:w] (x=s/w, y=1/w);
  // chart 2 [1:v:w] (x=1/w, y=v/w)
  const Field* K = nullptr;  // residue field
  Fq x0{0}, y0{0};           // chart coordinates of a representative point
  int chart = 0;
  Poly yfac;  // plane affine: minimal polynomial of y0 over F_q(x0)
};

// Canonical identity/sort key (places are equal iff keys are equal).
std::vector<u64> place_key(const Place& P);
bool place_eq(const Place& a, const Place& b);

std::vector<Place> places_of_degree(const Curve& C, int d);
std::vector<Place> places_up_to(const Curve& C, int maxdeg);
// All places above a given monic irreducible p(x) (double covers: the
// x-place; plane curves: the fiber of the x-coordinate).
std::vector<Place> places_over(const Curve& C, const Poly& p);
std::vector<Place> places_at_infinity_list(const Curve& C);

// --- residue field helpers ------------------------------------------------

// Isomorphism F_q[x]/(p) -> K = F_{q^deg p}, x -> rho.
struct QuotMap {
  const Field* F = nullptr;
  const Field* K = nullptr;
  Poly p;
  Fq rho{0};
  Fq to_K(const Poly& a) const;   // evaluate a(rho) (a reduced or not)
  Poly from_K(Fq alpha) const;    // inverse: polynomial of degree < deg p
 private:
  friend QuotMap quot_map(const Field* F, const Poly& p);
  // row-reduced solve data for from_K: columns e_j * rho^i in F_p-digits
  std::vector<std::vector<u32>> inv_;  // inverse matrix over F_p
};
QuotMap quot_map(const Field* F, const Poly& p);

// Solve w^2 + w = a over a characteristic-2 field (absolute trace 0).
Fq artin_schreier_root(const Field* K, Fq a);

// --- double-cover functions ------------------------------------------------

struct DCFun {
  Poly A, B, C;  // (A + B*w)/C
};

// Convert (A + B*y_model)/C into the working coordinate w.
DCFun dc_convert(const Curve& C, const Poly& A, const Poly& B, const Poly& Cden);
// Norm of A + B*w down to F_q(x).
Rat dc_norm(const Curve& C, const Poly& A, const Poly& B);
// Valuation of (A + B*w)/C at the place P.
i64 dc_valuation(const Curve& C, const Place& P, const DCFun& fn);
// w mod p^k on a split finite place (Hensel/Artin-Schreier lift).
Poly dc_branch_lift(const Curve& C, const Place& P, int k);

// --- truncated power series -------------------------------------------------

struct PSeries {
  const Field* K = nullptr;
  std::vector<Fq> c;  // coefficients of t^0 .. t^(prec-1)
  int prec() const { return (int)c.size(); }
};
PSeries ser_make(const Field* K, int prec);
PSeries ser_add(const PSeries& a, const PSeries& b);
PSeries ser_sub(const PSeries& a, const PSeries& b);
PSeries ser_mul(const PSeries& a, const PSeries& b);
PSeries ser_scale(Fq s, const PSeries& a);
PSeries ser_inv(const PSeries& a);  // requires c[0] != 0
int ser_ord(const PSeries& a);      // first nonzero index; prec() if none
// series of a univariate polynomial (coefficients embedded into a.K)
// evaluated at the series a
PSeries ser_eval_poly(const Poly& f, const PSeries& a);

// Split-infinity branch series in s = 1/x:
//   odd characteristic (deg f = 2g+2): returns wt with y = x^(g+1) wt(1/x)
//   characteristic 2: returns the series of w = z_reduced at infinity
PSeries dc_inf_branch(const Curve& C, const Place& P, int prec);

// --- plane curves ------------------------------------------------------------

// Local expansion at P to precision prec, in the chart of P:
//   chart 0: (x(t), y(t)); chart 1: (s(t), w(t)); chart 2: (v(t), w(t)).
std::pair<PSeries, PSeries> plane_local(const Curve& C, const Place& P, int prec);
// Valuation at P of G(x,y)/H(x,y).
i64 plane_valuation(const Curve& C, const Place& P, const BiPoly& G, const BiPoly& H);

}  // namespace relh
