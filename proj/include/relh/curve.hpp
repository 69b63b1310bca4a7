// curve.hpp -- curve models over small finite fields and point counting.
//
// Three model kinds cover everything this library works with:
//   * double cover of P^1, odd characteristic:   y^2 = f(x), f squarefree
//   * double cover of P^1, characteristic 2:     y^2 + h(x) y = f(x), h != 0
//   * smooth plane curve:                        F(x,y) = 0 (projectively
//     smooth; genus (d-1)(d-2)/2)
//
// Characteristic-2 double covers are handled through the substitution
// z = y/h, which turns the model into an Artin-Schreier equation
// z^2 + z = u with u = f/h^2.  The reduced form of u (minimal pole orders,
// all odd at ramified places) drives genus, point counts, and local
// expansions.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "relh/poly.hpp"
#include "relh/weil.hpp"

namespace relh {

// Rational function in x, kept in lowest terms with monic denominator.
struct Rat {
  Poly num, den;
};

Rat rat_make(Poly num, Poly den);
Rat rat_add(const Rat& a, const Rat& b);
Rat rat_sub(const Rat& a, const Rat& b);
Rat rat_mul(const Rat& a, const Rat& b);
// Valuation at the place (p) of F_q(x), p monic irreducible.
int rat_val(const Rat& a, const Poly& p);
int rat_val_inf(const Rat& a);  // valuation at the infinite place: -deg

// One ramified place of an Artin-Schreier double cover (characteristic 2).
struct ASRamPlace {
  Poly p;       // monic irreducible, or zero polynomial for the place at infinity
  int deg = 1;  // degree of the place
  int m = 0;    // pole order of the reduced u (odd)
};

// Reduction of u modulo w^2 + w: afterwards every pole has odd order.
// Returns the reduced function, the substitution that achieved it
// (z_reduced = z + tau), and the ramification data.
struct ASReduced {
  Rat u;
  Rat tau;  // z_reduced = z_original + tau
  std::vector<ASRamPlace> ram;
  int conductor_deg = 0;  // sum (m_P + 1) deg P
};
ASReduced as_reduce(const Field* F, const Rat& u);

enum class CurveKind { DOUBLE_ODD, DOUBLE_EVEN, PLANE };

struct Curve {
  const Field* F = nullptr;
  CurveKind kind{};
  int genus = 0;

  // DOUBLE_ODD: y^2 = f.  DOUBLE_EVEN: y^2 + h y = f.
  Poly f, h;
  // DOUBLE_EVEN: reduced Artin-Schreier data for u = f/h^2.
  ASReduced as;
  // PLANE: affine equation (projective closure smooth), total degree pdeg.
  BiPoly P;
  int pdeg = 0;
};

// Constructors validate the model and compute the genus; they throw on
// invalid input (non-squarefree f, singular plane curve, ...).
Curve curve_double_odd(const Field* F, const Poly& f);
Curve curve_double_even(const Field* F, const Poly& h, const Poly& f);
Curve curve_plane(const Field* F, const BiPoly& P);

// Build a curve from an equation E(x,y) = 0 with deg_y E = 2 (double cover;
// odd characteristic completes the square if an xy-term is present) or a
// plane equation of total degree >= 3 with deg_y > 2.
Curve curve_from_equation(const Field* F, const BiPoly& E);
Curve curve_from_equation(const Field* F, const std::string& eq);

// Serialization: "q;kind;genus;poly[;poly]" with kind in {hyp, as, plane}.
std::string curve_to_line(const Curve& C);
Curve curve_from_line(const std::string& line);

// #C(F_{q^r}) of the smooth projective model.
i64 count_points(const Curve& C, int r);
std::vector<i64> count_points_upto(const Curve& C, int rmax);

// Isogeny class of the Jacobian (needs N_1..N_g).
IsogClass curve_class(const Curve& C);

// Number of points of the smooth model lying over x = infinity.
i64 points_at_infinity(const Curve& C, int r);

// Smoothness of the projective closure of an affine plane curve
// (exact check over the algebraic closure).
bool plane_smooth(const Field* F, const BiPoly& P);

}  // namespace relh
