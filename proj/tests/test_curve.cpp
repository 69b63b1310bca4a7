#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <map>

#include "relh/curve.hpp"
#include "relh/place.hpp"

using namespace relh;

namespace {

// affine solutions of E(x,y) = 0 over F_{q^r}, by brute force
i64 brute_affine(const Field* F, const BiPoly& E, int r) {
  const Field* K = Field::get(F->p, F->r * r);
  i64 n = 0;
  for (u64 xv = 0; xv < K->q; ++xv)
    for (u64 yv = 0; yv < K->q; ++yv) {
      Fq s{0};
      for (int j = E.ydeg(); j >= 0; --j) {
        Fq row{0};
        for (int i = E.cy[j].deg(); i >= 0; --i)
          row = K->add(K->mul(row, Fq{xv}), K->embed(E.F, E.cy[j].coeff(i)));
        s = K->add(K->mul(s, Fq{yv}), row);
      }
      if (s.v == 0) ++n;
    }
  return n;
}

// check N_r == sum over d | r of d * #places(degree d)
void check_place_counts(const Curve& C, int rmax) {
  std::map<int, i64> a;
  for (int d = 1; d <= rmax; ++d) a[d] = (i64)places_of_degree(C, d).size();
  for (int r = 1; r <= rmax; ++r) {
    i64 n = 0;
    for (int d = 1; d <= r; ++d)
      if (r % d == 0) n += d * a[d];
    CAPTURE(r);
    CHECK(n == count_points(C, r));
  }
}

// zeta-function consistency: counts N_1..N_2g determine a Weil polynomial
// whose predictions match the computed counts beyond N_g
void check_weil_consistency(const Curve& C) {
  int g = C.genus;
  if (g == 0) return;
  auto counts = count_points_upto(C, 2 * g + 2);
  std::vector<i64> firstg(counts.begin(), counts.begin() + g);
  IsogClass cls = weil_from_counts((i64)C.F->q, g, firstg);
  auto pred = counts_from_weil(cls, 2 * g + 2);
  for (int r = 1; r <= 2 * g + 2; ++r) {
    CAPTURE(r);
    CHECK(pred[r - 1] == counts[r - 1]);
  }
  CHECK(class_number(cls) > 0);
}

// sum of deg(P) * v_P(fn) over all places must vanish for a nonzero function.
// Support places all divide the norm or the denominator, so factoring those
// gives a complete candidate list.
void check_principal_dc(const Curve& C, const Poly& A, const Poly& B, const Poly& Cd) {
  DCFun fn = dc_convert(C, A, B, Cd);
  Rat N = dc_norm(C, fn.A, fn.B);
  std::map<std::vector<u64>, Place> cand;
  auto add_p = [&](const Poly& poly) {
    if (poly.deg() < 1) return;
    for (auto& [p, m] : poly_factor(poly)) {
      (void)m;
      for (auto& P : places_over(C, p)) cand[place_key(P)] = P;
    }
  };
  add_p(N.num);
  add_p(N.den);
  add_p(fn.C);
  for (auto& P : places_at_infinity_list(C)) cand[place_key(P)] = P;
  i64 total = 0;
  for (auto& [k, P] : cand) {
    (void)k;
    total += (i64)P.deg * dc_valuation(C, P, fn);
  }
  CHECK(total == 0);
}

void check_principal_plane(const Curve& C, const BiPoly& G, const BiPoly& H, int bound) {
  i64 total = 0;
  for (auto& P : places_up_to(C, bound)) total += (i64)P.deg * plane_valuation(C, P, G, H);
  CHECK(total == 0);
}

}  // namespace

TEST_CASE("odd double cover: y^2 = x^5 + 2x over F_3") {
  const Field* F3 = Field::get(3, 1);
  Curve C = curve_from_equation(F3, "y^2+2x^5+x");
  CHECK(C.kind == CurveKind::DOUBLE_ODD);
  CHECK(C.genus == 2);
  CHECK(poly_str(C.f) == "x^5+2x");

  // f = x(x-1)(x+1)(x^2+1): three rational ramification points + ramified
  // infinity (deg f odd) give N_1 = 4
  CHECK(count_points(C, 1) == 4);
  for (int r = 1; r <= 3; ++r)
    CHECK(count_points(C, r) ==
          brute_affine(F3, bipoly_parse(F3, "y^2+2x^5+x"), r) + points_at_infinity(C, r));

  check_place_counts(C, 6);
  check_weil_consistency(C);

  SUBCASE("divisors of functions have degree zero") {
    Poly one = poly_const(F3, F3->one());
    Poly x = poly_parse(F3, "x");
    check_principal_dc(C, poly_zero(F3), one, one);      // y
    check_principal_dc(C, x, poly_zero(F3), one);        // x
    check_principal_dc(C, x, one, x);                    // (x + y)/x
    check_principal_dc(C, x * x + one, x, x * x);        // (x^2+1+xy)/x^2
  }

  SUBCASE("valuations at explicit places") {
    Poly px = poly_parse(F3, "x");
    auto pl = places_over(C, px);
    REQUIRE(pl.size() == 1);
    CHECK(pl[0].type == PlaceType::RAM);
    // v(y) = 1 and v(x) = 2 at the ramification point over x = 0
    DCFun fy{poly_zero(F3), poly_const(F3, F3->one()), poly_const(F3, F3->one())};
    DCFun fx{px, poly_zero(F3), poly_const(F3, F3->one())};
    CHECK(dc_valuation(C, pl[0], fy) == 1);
    CHECK(dc_valuation(C, pl[0], fx) == 2);
    // at infinity (ramified, deg f = 5): v(x) = -2, v(y) = -5
    auto inf = places_at_infinity_list(C);
    REQUIRE(inf.size() == 1);
    CHECK(inf[0].type == PlaceType::RAM);
    CHECK(dc_valuation(C, inf[0], fx) == -2);
    CHECK(dc_valuation(C, inf[0], fy) == -5);
  }
}

TEST_CASE("odd double cover with split infinity: y^2 = x^6 + 2x + 1 over F_3") {
  const Field* F3 = Field::get(3, 1);
  Poly f = poly_parse(F3, "x^6+2x+1");
  Curve C = curve_double_odd(F3, f);
  CHECK(C.genus == 2);
  auto inf = places_at_infinity_list(C);
  REQUIRE(inf.size() == 2);  // lc = 1 is a square
  CHECK(inf[0].type == PlaceType::SPLIT);

  for (int r = 1; r <= 3; ++r)
    CHECK(count_points(C, r) ==
          brute_affine(F3, bipoly_parse(F3, "y^2+2x^6+x+2"), r) + points_at_infinity(C, r));
  check_place_counts(C, 6);
  check_weil_consistency(C);

  Poly one = poly_const(F3, F3->one());
  Poly x = poly_parse(F3, "x");
  check_principal_dc(C, poly_zero(F3), one, one);  // y exercises dc_inf_branch
  check_principal_dc(C, x + one, one, x);          // (x+1+y)/x
}

TEST_CASE("odd double cover with inert infinity: y^2 = 2x^6 + x + 1 over F_3") {
  const Field* F3 = Field::get(3, 1);
  Poly f = poly_parse(F3, "2x^6+x+1");
  Curve C = curve_double_odd(F3, f);
  CHECK(C.genus == 2);
  auto inf = places_at_infinity_list(C);
  REQUIRE(inf.size() == 1);  // lc = 2 is not a square mod 3
  CHECK(inf[0].type == PlaceType::INERT);
  CHECK(inf[0].deg == 2);
  check_place_counts(C, 6);
  check_weil_consistency(C);
  Poly one = poly_const(F3, F3->one());
  check_principal_dc(C, poly_zero(F3), one, one);
}

TEST_CASE("Artin-Schreier reduction bookkeeping") {
  const Field* F2 = Field::get(2, 1);
  // u = 1/x^2 reduces to 1/x via t = 1/x, and tau records the shift
  Poly one = poly_const(F2, F2->one());
  Poly x2 = poly_parse(F2, "x^2");
  ASReduced red = as_reduce(F2, rat_make(one, x2));
  REQUIRE(red.ram.size() == 1);
  CHECK(red.ram[0].m == 1);
  CHECK(red.ram[0].deg == 1);
  CHECK(poly_str(red.ram[0].p) == "x");
  CHECK(red.conductor_deg == 2);
  CHECK(poly_str(red.tau.num) == "1");
  CHECK(poly_str(red.tau.den) == "x");
  // reduced u = 1/x
  CHECK(poly_str(red.u.num) == "1");
  CHECK(poly_str(red.u.den) == "x");
}

TEST_CASE("characteristic 2: y^2 + y = x^3 over F_4 is the maximal elliptic curve") {
  const Field* F4 = Field::get(2, 2);
  Curve C = curve_from_equation(F4, "y^2+y+x^3");
  CHECK(C.kind == CurveKind::DOUBLE_EVEN);
  CHECK(C.genus == 1);
  CHECK(count_points(C, 1) == 9);
  CHECK(label_encode(curve_class(C)) == "1.4.e");
  CHECK(count_points(C, 1) == brute_affine(F4, bipoly_parse(F4, "y^2+y+x^3"), 1) +
                                  points_at_infinity(C, 1));
  check_place_counts(C, 4);
  check_weil_consistency(C);
  CHECK((i64)places_of_degree(C, 1).size() == 9);

  Poly one = poly_const(F4, F4->one());
  Poly x = poly_parse(F4, "x");
  check_principal_dc(C, poly_zero(F4), one, one);  // y
  check_principal_dc(C, x, one, x);                // (x+y)/x
}

TEST_CASE("characteristic 2 genus 2: y^2 + xy = x^5 + x over F_2") {
  const Field* F2 = Field::get(2, 1);
  Poly h = poly_parse(F2, "x");
  Poly f = poly_parse(F2, "x^5+x");
  Curve C = curve_double_even(F2, h, f);
  CHECK(C.genus == 2);
  for (int r = 1; r <= 4; ++r)
    CHECK(count_points(C, r) ==
          brute_affine(F2, bipoly_parse(F2, "y^2+xy+x^5+x"), r) + points_at_infinity(C, r));
  check_place_counts(C, 7);
  check_weil_consistency(C);

  Poly one = poly_const(F2, F2->one());
  Poly x = poly_parse(F2, "x");
  check_principal_dc(C, poly_zero(F2), one, one);          // y
  check_principal_dc(C, x * x, one, x);                    // (x^2+y)/x
  check_principal_dc(C, one, x, x * x + x + one);          // (1+xy)/(x^2+x+1)
}

TEST_CASE("characteristic 2 split/inert infinity classification") {
  const Field* F2 = Field::get(2, 1);
  // y^2 + y = x/(x+1): u regular at infinity with value 1 (trace 1): inert
  Curve C;
  C.F = F2;
  C.kind = CurveKind::DOUBLE_EVEN;
  Poly x = poly_parse(F2, "x");
  Poly xp1 = poly_parse(F2, "x+1");
  C.h = xp1;
  C.f = x * xp1;  // y^2 + (x+1) y = x(x+1)  =>  z^2 + z = x/(x+1)
  Curve C2 = curve_double_even(F2, C.h, C.f);
  auto inf = places_at_infinity_list(C2);
  REQUIRE(inf.size() == 1);
  CHECK(inf[0].type == PlaceType::INERT);
  check_place_counts(C2, 6);
  check_weil_consistency(C2);
}

TEST_CASE("Fermat quartic over F_3: smooth, 4 rational points, maximal over F_9") {
  const Field* F3 = Field::get(3, 1);
  BiPoly E = bipoly_parse(F3, "x^4+y^4+1");
  CHECK(plane_smooth(F3, E));
  Curve C = curve_plane(F3, E);
  CHECK(C.genus == 3);
  CHECK(count_points(C, 1) == 4);
  CHECK(count_points(C, 2) == 28);  // Hermitian over F_9: q^3 + 1
  for (int r = 1; r <= 2; ++r)
    CHECK(count_points(C, r) == brute_affine(F3, E, r) + points_at_infinity(C, r));
  check_place_counts(C, 4);
  check_weil_consistency(C);

  SUBCASE("divisor degrees vanish") {
    BiPoly gx = bipoly_parse(F3, "x");
    BiPoly gy = bipoly_parse(F3, "y");
    BiPoly gone = bipoly_parse(F3, "1");
    BiPoly gxy = bipoly_parse(F3, "x+y");
    check_principal_plane(C, gx, gone, 6);
    check_principal_plane(C, gy, gone, 6);
    check_principal_plane(C, gxy, gx, 6);
  }

  SUBCASE("x has a degree-4 zero divisor over x = 0") {
    Poly px = poly_parse(F3, "x");
    auto pl = places_over(C, px);
    REQUIRE(pl.size() == 2);  // y^4 + 1 = (y^2+y+2)(y^2+2y+2)
    CHECK(pl[0].deg == 2);
    CHECK(pl[1].deg == 2);
    BiPoly gx = bipoly_parse(F3, "x");
    BiPoly gone = bipoly_parse(F3, "1");
    CHECK(plane_valuation(C, pl[0], gx, gone) == 1);
    CHECK(plane_valuation(C, pl[1], gx, gone) == 1);
  }
}

TEST_CASE("plane quartic over F_4 through [1:0:0]") {
  const Field* F4 = Field::get(2, 2);
  BiPoly E = bipoly_parse(F4, "y^4+x^3y+x");
  CHECK(plane_smooth(F4, E));
  Curve C = curve_plane(F4, E);
  CHECK(C.genus == 3);
  auto inf = places_at_infinity_list(C);
  bool has_chart2 = false;
  for (auto& P : inf) has_chart2 = has_chart2 || P.chart == 2;
  CHECK(has_chart2);
  for (int r = 1; r <= 2; ++r)
    CHECK(count_points(C, r) == brute_affine(F4, E, r) + points_at_infinity(C, r));
  check_place_counts(C, 3);
  check_weil_consistency(C);
  BiPoly gx = bipoly_parse(F4, "x");
  BiPoly gy = bipoly_parse(F4, "y");
  BiPoly gone = bipoly_parse(F4, "1");
  check_principal_plane(C, gx, gone, 6);
  check_principal_plane(C, gy, gone, 6);
}

TEST_CASE("smoothness rejects singular models") {
  const Field* F3 = Field::get(3, 1);
  CHECK_FALSE(plane_smooth(F3, bipoly_parse(F3, "y^2+2x^3+2x^2")));  // nodal cubic
  CHECK_FALSE(plane_smooth(F3, bipoly_parse(F3, "y^2+2x^3")));       // cuspidal cubic
  CHECK(plane_smooth(F3, bipoly_parse(F3, "y^2+2x^3+x+2")));         // elliptic
  CHECK_THROWS(curve_plane(F3, bipoly_parse(F3, "y^2+2x^3")));

  const Field* F4 = Field::get(2, 2);
  CHECK(plane_smooth(F4, bipoly_parse(F4, "y^2+y+x^3")));   // smooth Weierstrass
  CHECK_FALSE(plane_smooth(F4, bipoly_parse(F4, "y^2+x^3")));  // p-th power trick fails
  // Klein quartic x^3 y + y^3 + x is smooth away from characteristic 7
  CHECK(plane_smooth(F3, bipoly_parse(F3, "x^3y+y^3+x")));
  CHECK(plane_smooth(F4, bipoly_parse(F4, "x^3y+y^3+x")));
}

TEST_CASE("curve serialization roundtrip") {
  const Field* F3 = Field::get(3, 1);
  Curve C = curve_from_equation(F3, "y^2+2x^5+x");
  std::string line = curve_to_line(C);
  Curve D = curve_from_line(line);
  CHECK(D.kind == C.kind);
  CHECK(D.genus == C.genus);
  CHECK(count_points(D, 2) == count_points(C, 2));

  const Field* F4 = Field::get(2, 2);
  Curve C2 = curve_from_equation(F4, "y^2+y+x^3");
  Curve D2 = curve_from_line(curve_to_line(C2));
  CHECK(count_points(D2, 1) == 9);

  Curve C3 = curve_plane(F3, bipoly_parse(F3, "x^4+y^4+1"));
  Curve D3 = curve_from_line(curve_to_line(C3));
  CHECK(D3.genus == 3);
  CHECK(count_points(D3, 1) == 4);
}

TEST_CASE("residue field isomorphism and Artin-Schreier roots") {
  const Field* F3 = Field::get(3, 1);
  Poly p = poly_parse(F3, "x^2+1");
  QuotMap qm = quot_map(F3, p);
  CHECK(qm.K->q == 9);
  // roundtrip random-ish residues
  for (u64 v = 0; v < 9; ++v) {
    Poly back = qm.from_K(Fq{v});
    CHECK(back.deg() < 2);
    CHECK(qm.to_K(back).v == v);
  }
  // homomorphism: to_K(a*b mod p) = to_K(a)*to_K(b)
  Poly a = poly_parse(F3, "x+2"), b = poly_parse(F3, "2x+1");
  CHECK(qm.to_K((a * b) % p).v == qm.K->mul(qm.to_K(a), qm.to_K(b)).v);

  const Field* F8 = Field::get(2, 3);
  int solvable = 0;
  for (u64 v = 0; v < 8; ++v) {
    if (F8->absolute_trace(Fq{v}) != 0) continue;
    ++solvable;
    Fq w = artin_schreier_root(F8, Fq{v});
    CHECK(F8->add(F8->mul(w, w), w).v == v);
  }
  CHECK(solvable == 4);  // trace-zero hyperplane
}

TEST_CASE("split-place branch lifts satisfy the curve equation") {
  const Field* F3 = Field::get(3, 1);
  Curve C = curve_double_odd(F3, poly_parse(F3, "x^5+2x"));
  // x = 2 is not a root of f... f(2) = 32+4 = 36 = 0 mod 3; use x^2+x+2
  Poly p = poly_parse(F3, "x^2+x+2");
  for (auto& P : places_over(C, p)) {
    if (P.type != PlaceType::SPLIT) continue;
    Poly w = dc_branch_lift(C, P, 3);
    Poly pk = poly_pow(p, 3);
    CHECK(((w * w - C.f) % pk).is_zero());
  }

  const Field* F2 = Field::get(2, 1);
  Curve C2 = curve_double_even(F2, poly_parse(F2, "x"), poly_parse(F2, "x^5+x"));
  Poly p2 = poly_parse(F2, "x^2+x+1");
  for (auto& P : places_over(C2, p2)) {
    if (P.type != PlaceType::SPLIT) continue;
    Poly w = dc_branch_lift(C2, P, 3);
    Poly pk = poly_pow(p2, 3);
    // z^2 + z = u mod p^3  (u = num/den)
    Poly lhs = ((w * w + w) * C2.as.u.den - C2.as.u.num) % pk;
    CHECK(lhs.is_zero());
  }
}
