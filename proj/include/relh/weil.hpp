// weil.hpp -- Weil polynomials of abelian varieties over F_q, their labels,
// and integer polynomial utilities (exact arithmetic in __int128).
//
// Conventions: for an abelian variety A/F_q of dimension g the Weil
// polynomial is P(T) = prod (1 - alpha_i T), a degree-2g integer polynomial
// with P(0) = 1 and functional equation c_{2g-i} = q^{g-i} c_i.  For the
// Jacobian of a curve C this is the zeta numerator, so #C(F_{q^r}) =
// q^r + 1 - sum alpha_i^r and #J(F_q) = P(1).  Labels follow the usual
// isogeny-class format "g.q.s1_s2_..._sg": s_i encodes c_i in base 26
// (a..z = 0..25), negatives marked by a leading 'a'.

#pragma once

#include <string>
#include <vector>

#include "relh/fq.hpp"

namespace relh {

// --- exact integer polynomials ----------------------------------------------

using ZPoly = std::vector<i128>;  // dense, low to high; may carry high zeros

int zpoly_deg(const ZPoly& f);
ZPoly zpoly_mul(const ZPoly& a, const ZPoly& b);
ZPoly zpoly_add(const ZPoly& a, const ZPoly& b);
ZPoly zpoly_neg(const ZPoly& a);
// Exact division; aborts if the remainder is nonzero.
ZPoly zpoly_divexact(const ZPoly& a, const ZPoly& b);
bool zpoly_divides(const ZPoly& b, const ZPoly& a, ZPoly* quot = nullptr);
i128 zpoly_eval(const ZPoly& f, i128 x);
bool zpoly_eq(const ZPoly& a, const ZPoly& b);
// Resultant via fraction-free Gaussian elimination of the Sylvester matrix.
i128 zpoly_resultant(const ZPoly& a, const ZPoly& b);
std::string i128_str(i128 x);
i128 ipow128(i128 b, int e);

// --- isogeny classes ---------------------------------------------------------

struct IsogClass {
  int q = 0;
  int g = 0;
  std::vector<i64> a;  // c_1..c_g of the Weil polynomial

  bool operator==(const IsogClass& o) const { return q == o.q && g == o.g && a == o.a; }
  bool operator<(const IsogClass& o) const {
    if (q != o.q) return q < o.q;
    if (g != o.g) return g < o.g;
    return a < o.a;
  }
};

// Full Weil polynomial (degree 2g) from the stored half via the functional
// equation.
ZPoly weil_poly(const IsogClass& c);

// Curve point counts N_1..N_g determine the class: Newton's identities on
// T_r = q^r + 1 - N_r.
IsogClass weil_from_counts(int q, int g, const std::vector<i64>& counts);

// N_r for r = 1..rmax from the class (inverse direction).
std::vector<i64> counts_from_weil(const IsogClass& c, int rmax);

// Frobenius trace sums T_r = sum alpha_i^r for r = 1..rmax.
std::vector<i128> trace_sums(const IsogClass& c, int rmax);

// #A(F_q) = P(1); always positive for a genuine Weil polynomial.
i128 class_number(const IsogClass& c);
i128 weil_eval_minus1(const IsogClass& c);  // P(-1)

// Counts of degree-d places from point counts over extensions
// (Moebius inversion); needs counts for all divisors of each degree.
std::vector<i64> place_counts(const std::vector<i64>& point_counts);

// Sanity: all N_r nonnegative and all derived place counts nonnegative for
// r up to the given bound.
bool counts_plausible(const IsogClass& c, int rmax);

// Splitting of a product class: concatenation sorted per-factor is not
// canonical, so this recomputes c_i of the product from factor counts.
IsogClass product_class(const std::vector<IsogClass>& parts);

// --- labels ------------------------------------------------------------------

std::string label_encode(const IsogClass& c);
IsogClass label_parse(const std::string& label);

// Relative class number of a degree-d constant-field extension of a function
// field with zeta numerator P: prod over nontrivial d-th roots of unity zeta
// of P(zeta), always a positive integer.
i128 constant_ext_relative_h(const IsogClass& c, int d);

}  // namespace relh
