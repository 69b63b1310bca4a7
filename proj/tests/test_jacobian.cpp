#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "relh/jacobian.hpp"

using namespace relh;

namespace {

Poly ip(const Field* F, std::vector<i64> c) { return poly_int(F, c); }

Divisor dmul(const Place& P, int n) { return div_make({{P, n}}); }

DCFun fn_poly(const Field* F, const Poly& A) {
  return DCFun{A, poly_zero(F), poly_const(F, F->one())};
}

// check every basis element of L(D) satisfies div(u) + D >= 0
void check_membership(const Curve& C, const Divisor& D, const RRBasis& L) {
  for (auto& u : L.basis) {
    Divisor E = div_add(divisor_of(C, u), D);
    CHECK(div_effective(E));
    CHECK(div_deg(E) == div_deg(D));
  }
}

}  // namespace

TEST_CASE("Riemann-Roch basis on an odd-degree genus-2 model") {
  const Field* F = Field::get(3, 1);
  Curve C = curve_double_odd(F, ip(F, {0, 2, 0, 0, 0, 1}));  // y^2 = x^5 + 2x
  auto infs = places_at_infinity_list(C);
  REQUIRE(infs.size() == 1);
  REQUIRE(infs[0].type == PlaceType::RAM);
  Place Pinf = infs[0];

  RRBasis L3 = rr_space(C, dmul(Pinf, 3));
  CHECK(L3.dim == 2);
  REQUIRE(L3.basis.size() == 2);
  CHECK(L3.basis[0].A == ip(F, {1}));
  CHECK(L3.basis[0].B.is_zero());
  CHECK(L3.basis[1].A == ip(F, {0, 1}));
  CHECK(L3.basis[1].B.is_zero());
  CHECK(L3.Cstar.deg() == 0);

  RRBasis L5 = rr_space(C, dmul(Pinf, 5));
  CHECK(L5.dim == 4);
  REQUIRE(L5.basis.size() == 4);
  CHECK(L5.basis[0].A == ip(F, {1}));
  CHECK(L5.basis[1].A == ip(F, {0, 1}));
  CHECK(L5.basis[2].A == ip(F, {0, 0, 1}));
  CHECK(L5.basis[3].A.is_zero());
  CHECK(L5.basis[3].B == ip(F, {1}));

  RRBasis L0 = rr_space(C, Divisor{});
  CHECK(L0.dim == 1);
  CHECK(L0.basis[0].A == ip(F, {1}));

  CHECK(rr_space(C, dmul(Pinf, -1)).dim == 0);
}

TEST_CASE("Riemann-Roch dimensions and membership across model shapes") {
  const Field* F3 = Field::get(3, 1);
  const Field* F2 = Field::get(2, 1);
  std::vector<Curve> curves;
  curves.push_back(curve_double_odd(F3, ip(F3, {0, 2, 0, 0, 0, 1})));   // g2, ram inf
  curves.push_back(curve_double_odd(F3, ip(F3, {2, 1, 0, 0, 0, 0, 1})));  // g2, split inf
  curves.push_back(curve_double_odd(F3, ip(F3, {2, 1, 0, 0, 0, 0, 2})));  // g2, inert inf
  curves.push_back(curve_double_even(F2, ip(F2, {1}), ip(F2, {0, 0, 0, 1})));  // g1
  curves.push_back(curve_double_even(F2, ip(F2, {0, 1}), ip(F2, {0, 1, 0, 0, 0, 1})));  // g2

  for (auto& C : curves) {
    int g = C.genus;
    auto pls = places_up_to(C, 2);
    REQUIRE(!pls.empty());
    // single-place divisors of degree >= 2g-1: exact dimension + membership
    for (auto& P : pls) {
      for (int target = 2 * g - 1; target <= 2 * g + 3; ++target) {
        if (target % P.deg) continue;
        Divisor D = dmul(P, target / P.deg);
        RRBasis L = rr_space(C, D);
        CHECK(L.dim == target - g + 1);
        check_membership(C, D, L);
      }
    }
    // a mixed divisor with a forced zero
    if (pls.size() >= 2) {
      const Place& P0 = pls[0];
      const Place& P1 = pls[1];
      Divisor D = div_sub(dmul(P0, (2 * g + 1 + P1.deg) / P0.deg), dmul(P1, 1));
      if (div_deg(D) >= 2 * g - 1) {
        RRBasis L = rr_space(C, D);
        CHECK(L.dim == div_deg(D) - g + 1);
        check_membership(C, D, L);
      }
    }
    // degree-g system is nonempty
    for (auto& P : pls)
      if (g % P.deg == 0 && g > 0) {
        CHECK(rr_space(C, dmul(P, g / P.deg)).dim >= 1);
        break;
      }
  }
}

TEST_CASE("class group orders across small curves") {
  const Field* F3 = Field::get(3, 1);
  const Field* F2 = Field::get(2, 1);

  // y^2 = x^5 + 2x over F_3: order 8, exponent 2
  Curve C8 = curve_double_odd(F3, ip(F3, {0, 2, 0, 0, 0, 1}));
  Pic0 G8 = pic0_enumerate(C8);
  CHECK(G8.h == 8);
  CHECK(G8.size() == 8);
  CHECK(G8.order(G8.zero) == 1);
  int ord2 = 0;
  for (int i = 0; i < G8.size(); ++i)
    if (G8.order(i) == 2) ++ord2;
  CHECK(ord2 == 7);

  // y^2 = x^3 + 2x + 2 over F_3: exactly one rational point, trivial group
  Curve C1 = curve_double_odd(F3, ip(F3, {2, 2, 0, 1}));
  CHECK(count_points(C1, 1) == 1);
  Pic0 G1 = pic0_enumerate(C1);
  CHECK(G1.h == 1);
  CHECK(G1.size() == 1);
  CHECK(G1.two_torsion().size() == 1);

  // y^2 + y = x^3 over F_2: order 3
  Curve C3 = curve_double_even(F2, ip(F2, {1}), ip(F2, {0, 0, 0, 1}));
  Pic0 G3 = pic0_enumerate(C3);
  CHECK(G3.h == 3);
  std::multiset<int> ords;
  for (int i = 0; i < G3.size(); ++i) ords.insert(G3.order(i));
  CHECK(ords == std::multiset<int>({1, 3, 3}));

  // genus 0: trivial group
  Curve C0 = curve_double_odd(F3, ip(F3, {1, 0, 1}));
  Pic0 G0 = pic0_enumerate(C0);
  CHECK(G0.h == 1);
  CHECK(G0.size() == 1);
}

TEST_CASE("class group order equals the value of the zeta numerator at 1") {
  struct Row {
    int p, r;
    std::vector<i64> h_, f_;  // model y^2 + h y = f (h empty: odd characteristic)
  };
  std::vector<Row> rows = {
      {3, 1, {}, {0, 1, 0, 0, 0, 1}},        // y^2 = x^5 + x over F_3
      {3, 1, {}, {1, 2, 0, 1}},              // genus 1 over F_3
      {2, 2, {1}, {0, 0, 0, 1}},             // y^2 + y = x^3 over F_4
      {5, 1, {}, {0, 2, 0, 0, 0, 1}},        // y^2 = x^5 + 2x over F_5
  };
  for (auto& row : rows) {
    const Field* F = Field::get(row.p, row.r);
    Curve C = row.h_.empty() ? curve_double_odd(F, ip(F, row.f_))
                             : curve_double_even(F, ip(F, row.h_), ip(F, row.f_));
    Pic0 G = pic0_enumerate(C);
    CHECK(G.h == (i64)class_number(curve_class(C)));
    CHECK((i64)G.size() == G.h);
  }
}

TEST_CASE("two-torsion and halving") {
  const Field* F3 = Field::get(3, 1);

  // full rational 2-torsion: f = x(x-1)(x+1)(x^2+1)
  Curve C8 = curve_double_odd(F3, ip(F3, {0, 2, 0, 0, 0, 1}));
  Pic0 G8 = pic0_enumerate(C8);
  auto tt = G8.two_torsion();
  CHECK(tt.size() == 8);
  CHECK(G8.halve(G8.zero).size() == 8);
  for (int c = 0; c < G8.size(); ++c) {
    auto hs = G8.halve(c);
    if (c == G8.zero)
      CHECK(hs.size() == 8);
    else
      CHECK(hs.empty());
  }

  // irreducible quintic: trivial rational 2-torsion, odd order
  Poly f = ip(F3, {1, 2, 0, 0, 0, 1});  // x^5 + 2x + 1
  REQUIRE(poly_irreducible(f));
  Curve Ci = curve_double_odd(F3, f);
  Pic0 Gi = pic0_enumerate(Ci);
  CHECK(Gi.h % 2 == 1);
  CHECK(Gi.two_torsion().size() == 1);
  // halving is a bijection on an odd-order group
  for (int c = 0; c < Gi.size(); ++c) CHECK(Gi.halve(c).size() == 1);

  // halve(c) nonempty exactly when c is a double
  for (Pic0* G : {&G8, &Gi}) {
    std::set<int> doubles;
    for (int i = 0; i < G->size(); ++i) doubles.insert(G->add(i, i));
    for (int c = 0; c < G->size(); ++c)
      CHECK(G->halve(c).empty() == !doubles.count(c));
  }
}

TEST_CASE("principality") {
  const Field* F = Field::get(3, 1);
  Curve C = curve_double_odd(F, ip(F, {0, 2, 0, 0, 0, 1}));

  // div(x) is recovered exactly
  Divisor Dx = divisor_of(C, fn_poly(F, ip(F, {0, 1})));
  CHECK(div_deg(Dx) == 0);
  auto u = principal_test(C, Dx);
  REQUIRE(u.has_value());
  CHECK(u->A == ip(F, {0, 1}));
  CHECK(u->B.is_zero());
  CHECK(div_eq(divisor_of(C, *u), Dx));

  // difference of two distinct rational places is not principal on genus 2
  auto Px = places_over(C, ip(F, {0, 1}));
  auto P1 = places_over(C, ip(F, {2, 1}));  // x - 1
  REQUIRE(Px.size() == 1);
  REQUIRE(P1.size() == 1);
  Divisor D = div_sub(dmul(Px[0], 1), dmul(P1[0], 1));
  CHECK(!principal_test(C, D).has_value());

  // doubling a 2-torsion class yields a principal divisor with a witness
  Pic0 G = pic0_enumerate(C);
  auto tt = G.two_torsion();
  REQUIRE(tt.size() >= 2);
  int c = tt[0] == G.zero ? tt[1] : tt[0];
  Divisor D0 = div_sub(G.elems[(size_t)c], G.E0);
  Divisor D2 = div_scale(D0, 2);
  auto ku = principal_test(C, D2);
  REQUIRE(ku.has_value());
  CHECK(div_eq(divisor_of(C, *ku), D2));
}

TEST_CASE("class groups of even-degree and characteristic-2 models") {
  const Field* F3 = Field::get(3, 1);
  const Field* F2 = Field::get(2, 1);

  std::vector<Curve> curves;
  curves.push_back(curve_double_odd(F3, ip(F3, {2, 1, 0, 0, 0, 0, 1})));  // split inf
  curves.push_back(curve_double_odd(F3, ip(F3, {2, 1, 0, 0, 0, 0, 2})));  // inert inf
  curves.push_back(curve_double_even(F2, ip(F2, {0, 1}), ip(F2, {0, 1, 0, 0, 0, 1})));

  for (auto& C : curves) {
    Pic0 G = pic0_enumerate(C);
    CHECK(G.h == (i64)class_number(curve_class(C)));
    // associativity and inverses on a few triples
    for (int a = 0; a < std::min(3, G.size()); ++a) {
      CHECK(G.add(a, G.neg(a)) == G.zero);
      for (int b = 0; b < std::min(3, G.size()); ++b) {
        CHECK(G.add(a, b) == G.add(b, a));
        for (int c = 0; c < std::min(3, G.size()); ++c)
          CHECK(G.add(G.add(a, b), c) == G.add(a, G.add(b, c)));
      }
    }
  }

  // characteristic 2, genus 2: two ramified places -> rational 2-torsion of order 2
  Pic0 G = pic0_enumerate(curves[2]);
  CHECK(G.two_torsion().size() == 2);
  CHECK(G.halve(G.zero).size() == 2);
}
