// poly.hpp -- dense univariate polynomials over a runtime finite field,
// plus a light bivariate layer (polynomials in y with coefficients in F[x])
// and a text format used by curve files and reports.
//
// Polynomials are normalized: no trailing zero coefficients, the zero
// polynomial has an empty coefficient vector.  Factorization is
// Cantor-Zassenhaus with a fixed-seed generator, so results are
// deterministic for a given field and input.

#pragma once

#include <string>
#include <utility>
#include <vector>

#include "relh/fq.hpp"

namespace relh {

struct Poly {
  const Field* F = nullptr;
  std::vector<Fq> c;  // low to high

  int deg() const { return (int)c.size() - 1; }  // -1 for the zero polynomial
  bool is_zero() const { return c.empty(); }
  Fq lc() const { return c.back(); }
  Fq coeff(int i) const { return i >= 0 && i < (int)c.size() ? c[i] : Fq{0}; }
  void normalize() {
    while (!c.empty() && c.back().v == 0) c.pop_back();
  }
  bool operator==(const Poly& o) const { return F == o.F && c == o.c; }
};

Poly poly_zero(const Field* F);
Poly poly_const(const Field* F, Fq a);
Poly poly_x(const Field* F);
Poly poly_make(const Field* F, std::vector<Fq> c);
// Coefficients given as integers (reduced mod p).
Poly poly_int(const Field* F, const std::vector<i64>& c);

Poly operator+(const Poly& a, const Poly& b);
Poly operator-(const Poly& a, const Poly& b);
Poly operator-(const Poly& a);
Poly operator*(const Poly& a, const Poly& b);
Poly operator*(Fq s, const Poly& a);

// Quotient and remainder; b != 0.
std::pair<Poly, Poly> poly_divrem(const Poly& a, const Poly& b);
Poly operator/(const Poly& a, const Poly& b);
Poly operator%(const Poly& a, const Poly& b);
bool poly_divides(const Poly& b, const Poly& a);  // b | a

Poly poly_monic(const Poly& a);
Poly poly_gcd(Poly a, Poly b);  // monic gcd
// Inverse of a modulo f (gcd(a, f) = 1), via the extended Euclidean algorithm.
Poly poly_inverse_mod(const Poly& a, const Poly& f);
Poly poly_derivative(const Poly& a);
Fq poly_eval(const Poly& a, Fq x);
Poly poly_pow(const Poly& a, u64 e);
Poly poly_powmod(const Poly& a, u128_t e, const Poly& f);
Poly poly_compose(const Poly& a, const Poly& b);  // a(b(x))
// f(x) -> x^n f(1/x) for n = deg f (or a given n >= deg f).
Poly poly_reverse(const Poly& a, int n = -1);

// Squarefree decomposition f = prod g_i^{m_i} with g_i squarefree, pairwise
// coprime, m_i strictly increasing; correct in characteristic p.
std::vector<std::pair<Poly, int>> poly_squarefree(const Poly& f);

// Full factorization into monic irreducibles with multiplicities
// (lc is dropped; callers track it separately if needed).
std::vector<std::pair<Poly, int>> poly_factor(const Poly& f);

bool poly_irreducible(const Poly& f);
std::vector<Fq> poly_roots(const Poly& f);

// Substitute the Moebius map (a x + b)/(c x + d) into f viewed as a degree-n
// form: returns sum f_i (a x + b)^i (c x + d)^{n-i}.
Poly poly_mobius(const Poly& f, int n, Fq a, Fq b, Fq c, Fq d);

// Coefficientwise image under the fixed embedding of f's field into `big`.
Poly poly_embed(const Field* big, const Poly& f);

// All monic irreducible polynomials of the given degree (cached).
const std::vector<Poly>& monic_irreducibles(const Field* F, int deg);

// --- bivariate layer --------------------------------------------------------

// Polynomial in y with coefficients in F[x]: cy[j] is the coefficient of y^j.
struct BiPoly {
  const Field* F = nullptr;
  std::vector<Poly> cy;

  int ydeg() const { return (int)cy.size() - 1; }
  Poly ycoeff(int j) const { return j >= 0 && j < (int)cy.size() ? cy[j] : poly_zero(F); }
  void normalize() {
    while (!cy.empty() && cy.back().is_zero()) cy.pop_back();
  }
  bool is_zero() const { return cy.empty(); }
};

BiPoly bipoly_make(const Field* F, std::vector<Poly> cy);
BiPoly operator+(const BiPoly& a, const BiPoly& b);
BiPoly operator*(const BiPoly& a, const BiPoly& b);
Fq bipoly_eval(const BiPoly& a, Fq x, Fq y);
// Substitute a univariate polynomial for y.
Poly bipoly_eval_y(const BiPoly& a, const Poly& ypoly);
// Total degree.
int bipoly_total_deg(const BiPoly& a);
BiPoly bipoly_dx(const BiPoly& a);
BiPoly bipoly_dy(const BiPoly& a);

// --- text format ------------------------------------------------------------
//
// Terms joined by + / -, implicit multiplication, ^ for powers, decimal
// integer coefficients, `a` the generator of a non-prime coefficient field
// (for F_4: a^2 = a + 1).  Examples: "x^5+2x+1", "(a+1)x^3+ax", "y^2+2x^5+x".

Poly poly_parse(const Field* F, const std::string& s);     // univariate in x
BiPoly bipoly_parse(const Field* F, const std::string& s); // variables x, y

std::string poly_str(const Poly& f, const std::string& var = "x");
std::string bipoly_str(const BiPoly& f);

}  // namespace relh
