// jacobian.hpp -- divisors, Riemann-Roch spaces, and degree-0 divisor class
// groups of double covers, at desk scale (group order up to a few thousand).
//
// Functions on a double cover are written (A + B*w)/C as in place.hpp.  The
// Riemann-Roch space L(D) is computed by pure F_q-linear algebra: a common
// denominator C* clears the finite poles allowed by D, divisibility and
// branch-lift congruences pin the finite behaviour, and degree caps plus
// branch-series conditions pin the behaviour over x = infinity.  The class
// group is enumerated through canonical representatives: the class of the
// degree-0 divisor Z is represented by the lexicographically least effective
// divisor in the complete linear system |Z + E0|, where E0 is a fixed
// effective divisor of degree g.

#pragma once

#include <map>
#include <optional>
#include <string>

#include "relh/place.hpp"

namespace relh {

struct Divisor {
  // terms sorted by place_key, all multiplicities nonzero
  std::vector<std::pair<Place, int>> t;
};

Divisor div_make(std::vector<std::pair<Place, int>> terms);
Divisor div_add(const Divisor& a, const Divisor& b);
Divisor div_neg(const Divisor& a);
Divisor div_sub(const Divisor& a, const Divisor& b);
Divisor div_scale(const Divisor& a, int k);
int div_deg(const Divisor& a);
bool div_effective(const Divisor& a);
bool div_eq(const Divisor& a, const Divisor& b);
bool div_less(const Divisor& a, const Divisor& b);  // total order
std::string div_to_string(const Divisor& a);

// Exact divisor of a nonzero function (A + B*w)/C on a double cover.
Divisor divisor_of(const Curve& C, const DCFun& fn);

// L(D) = {u : div(u) + D >= 0} for double-cover models (plane models are
// rejected; change the model first).
struct RRBasis {
  std::vector<DCFun> basis;  // reduced echelon over (A, B) coefficient columns
  Poly Cstar;                // common denominator of all basis elements
  int dim = 0;
};
RRBasis rr_space(const Curve& C, const Divisor& D);

// A function u with div(u) = D exactly, or nothing when D is not principal.
// Requires deg D = 0.
std::optional<DCFun> principal_test(const Curve& C, const Divisor& D);

// Fully enumerated degree-0 divisor class group.  elems[i] is the canonical
// representative D_i of the class [D_i - E0].
struct Pic0 {
  Curve C;
  int g = 0;
  i64 h = 0;
  Divisor E0;  // fixed effective base divisor of degree g
  std::vector<Divisor> elems;
  int zero = 0;

  int size() const { return (int)elems.size(); }
  int index_of(const Divisor& rep) const;  // -1 if not an element
  int class_of(const Divisor& Z) const;    // class index of [Z], deg Z = 0
  int add(int i, int j) const;
  int neg(int i) const;
  int order(int i) const;
  std::vector<int> two_torsion() const;  // all i with i + i = zero
  std::vector<int> halve(int c) const;   // all x with x + x = c

 private:
  friend Pic0 pic0_enumerate(const Curve& C, i64 order_bound);
  Divisor canon(const Divisor& Z) const;  // deg Z = 0
  std::map<std::vector<u64>, int> index_;
  mutable std::map<std::pair<int, int>, int> add_memo_;
};

// Enumerate the group; throws if the order exceeds order_bound.
Pic0 pic0_enumerate(const Curve& C, i64 order_bound = 4000);

// All effective divisors of the given degree supported on places of the
// curve (used by searches over divisor boxes).
std::vector<Divisor> effective_divisors(const Curve& C, int deg);

}  // namespace relh
