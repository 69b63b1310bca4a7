// cover.hpp -- degree-2 and degree-p covers of curves: construction,
// point counting via splitting rules, relative class numbers, and the
// enumeration of etale / tame / Artin-Schreier families.
//
// A cover of a double-cover base curve is stored abstractly as the base
// plus its defining function u: Kummer covers w'^2 = u in odd
// characteristic, Artin-Schreier covers z'^p - z' = u in characteristic p.
// Points are counted through residue evaluation at the places of the base
// (quadratic character / absolute trace of u's value), never by
// constructing a plane model of the covering curve.

#pragma once

#include <optional>

#include "relh/jacobian.hpp"
#include "relh/weil.hpp"

namespace relh {

// --- arithmetic of functions (A + B*w)/C on a double cover ------------------

DCFun dc_make(const Curve& C, Poly A, Poly B, Poly den);
DCFun dc_add(const Curve& C, const DCFun& a, const DCFun& b);
DCFun dc_sub(const Curve& C, const DCFun& a, const DCFun& b);
DCFun dc_mul(const Curve& C, const DCFun& a, const DCFun& b);
DCFun dc_scale(const Curve& C, Fq s, const DCFun& a);
bool dc_is_zero(const DCFun& a);
// u^p - u for p the field characteristic (the Artin-Schreier operator).
DCFun dc_artin_schreier_op(const Curve& C, const DCFun& a);
std::string dc_str(const DCFun& a);

// --- residues ---------------------------------------------------------------

// The residue field kappa(P) presented as F_q[x]/(p) or, for places inert
// over the x-line, F_q[x,w]/(p, w^2 - s1 w - s0).
struct ResAlg {
  const Field* F = nullptr;
  Poly p;            // monic irreducible modulus
  bool quad = false; // true: elements are a + b*wbar
  Poly s0, s1;       // wbar^2 = s0 + s1*wbar (reduced mod p)
  u128_t size() const;
};

struct ResElt {
  Poly a, b;  // a + b*wbar (b empty unless the algebra is quadratic)
};

ResElt res_zero(const ResAlg& K);
ResElt res_one(const ResAlg& K);
bool res_is_zero(const ResElt& x);
bool res_eq(const ResElt& x, const ResElt& y);
ResElt res_add(const ResAlg& K, const ResElt& x, const ResElt& y);
ResElt res_mul(const ResAlg& K, const ResElt& x, const ResElt& y);
ResElt res_inv(const ResAlg& K, const ResElt& x);
ResElt res_pow(const ResAlg& K, ResElt x, u128_t e);
// Quadratic character: +1 / -1 for nonzero squares / nonsquares, 0 for 0.
int res_chi(const ResAlg& K, const ResElt& x);
// Absolute trace down to the prime field, as an integer in [0, char).
int res_abs_trace(const ResAlg& K, const ResElt& x);
// Inverse of the Frobenius x -> x^char (p-th root, always unique).
ResElt res_char_root(const ResAlg& K, const ResElt& x);

// Valuation of u at P together with the leading coefficient of its local
// expansion (with respect to a fixed per-place uniformizer convention);
// multiplicative in u.  The zero function is rejected.
struct LocalLead {
  i64 v = 0;
  ResAlg K;
  ResElt c;
};
LocalLead dc_local_lead(const Curve& C, const Place& P, const DCFun& u);

// Lift a residue element back to a function with that residue (a poly in x,
// or a + b*w for quadratic algebras; for places at infinity the lift uses
// the blocks below).
DCFun res_lift(const Curve& C, const Place& P, const ResAlg& K, const ResElt& c);

// A function with valuation exactly -j at P (j >= 1), used as the scaling
// block of local reductions.
DCFun dc_pole_block(const Curve& C, const Place& P, i64 j);

// --- covers -------------------------------------------------------------------

enum class CoverKind { KUMMER, AS };

struct CoverRam {
  Place P;
  int m = 0;  // tame: 1; wild: the minimized pole order (coprime to char)
  int d = 1;  // exponent in the different: tame 1; wild (char-1)*(m+1)
};

struct CoverSpec {
  Curve base;
  CoverKind kind{};
  int d = 2;  // cover degree (2, or char for AS)
  DCFun u;
  std::vector<CoverRam> ram;
  int disc_deg = 0;   // conductor-discriminant degree: sum d_P deg P
  int t_geo = 0;      // geometric ramification points: sum deg P
  int g_prime = 0;    // genus from Riemann-Hurwitz
  bool constant_ext = false;  // u is a constant defining a constant-field cover
};

struct PrymData {
  IsogClass PA;               // Weil polynomial class of the Prym
  i128 h_rel = 0;             // PA(1)
  std::vector<i128> traces;   // T_{A,q^r}, r = 1..2 dim(A)
  bool geometric = true;      // false when PA matches a constant-extension pattern
};

// Build a cover from (base, kind, u): validates the datum, minimizes
// Artin-Schreier conductors place by place, and computes the genus by
// Riemann-Hurwitz.  Throws on a degenerate (reducible) datum; a nontrivial
// constant-field extension is returned flagged, not thrown.
CoverSpec make_cover(const Curve& base, CoverKind kind, const DCFun& u);

// N'_1..N'_rmax of the covering curve via splitting rules: Kummer places
// split iff chi(u(P)) = +1; Artin-Schreier places split completely iff the
// absolute trace of u's (locally regularized) value vanishes; ramified
// places contribute one point each.
std::vector<i64> cover_counts(const CoverSpec& cov, int rmax);

IsogClass cover_class(const CoverSpec& cov);

// P_A = P_{C'}/P_C (exact division; non-divisibility is a hard error),
// h_rel = P_A(1), trace sequence, and the constant-pattern flag.
PrymData relative_class_number(const CoverSpec& cov);

// Prym data of the degree-d constant-field extension, straight from the
// base Weil polynomial.
PrymData constant_cover(const IsogClass& PC, int d);

// --- enumeration ----------------------------------------------------------------

// All geometric etale double covers of a hyperelliptic base (either
// characteristic).  Odd characteristic runs two
// independent strategies (model factorizations + conjugate factorizations,
// and 2-torsion classes of the divisor class group) and raises on multiset
// disagreement of (g', class of C').  Characteristic 2 searches
// Artin-Schreier data u in L(2D) mod additive equivalence for deg D <= g+1
// and keeps conductor-zero covers; completeness is cross-checked against
// the class-group count.
std::vector<CoverSpec> enum_etale_double(const Curve& base);

// Tame ramified double covers (odd characteristic) with squarefree even
// ramification divisor R of degree <= max_R_deg: solves [R] = 2[D] in the
// class group, derives u from a principality test, and emits all twists.
std::vector<CoverSpec> enum_tame_double(const Curve& base, int max_R_deg);

// Degree-p Artin-Schreier covers (p = characteristic) from cosets of
// L(pD) mod the image of the Artin-Schreier operator on L(D), for
// effective D with deg D <= dbound; per-place conductors by local
// reduction.  etale_only keeps the conductor-zero subset.  The unique
// degree-p constant-field cover is appended, flagged.
std::vector<CoverSpec> enum_as_cyclic_p(const Curve& base, int dbound, bool etale_only);

// Splitting data of etale cyclic degree-ell covers through characters of
// the divisor class group (the class-field-theoretic route): one entry per
// geometric cover (characters nontrivial on the degree-0 part), as (g',
// class of C'), sorted.  Constant-field shifts of the same subgroup are
// separate entries.  Independent of the cover search; its oracle.
std::vector<std::pair<int, IsogClass>> etale_cyclic_by_characters(const Curve& base, int ell,
                                                                  int rmax);

// A hyperelliptic model of the covering curve of an etale Kummer cover
// whose datum is (a constant times) a quadratic polynomial in x: the conic
// w^2 = u(x) is rationally parametrized and the second quadratic relation
// pulled back.  Returns nothing for data not of that shape.
std::optional<Curve> cover_to_hyperelliptic(const CoverSpec& cov);

// --- explicit maps ---------------------------------------------------------------

// Verify that x -> xn/xd, y -> (yn/yd) * y defines a morphism from the
// curve y^2 = f' (source, model Cp) to y^2 = f (target, model Cbase):
// symbolic identity (yn/yd)^2 f' = f(xn/xd), plus a randomized check on
// points over an extension field.  Throws if xd or yd is identically zero.
bool verify_explicit_map(const Curve& Cbase, const Curve& Cp, const Poly& xn, const Poly& xd,
                         const Poly& yn, const Poly& yd);

}  // namespace relh
