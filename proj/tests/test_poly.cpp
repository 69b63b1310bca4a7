// Polynomial layer: arithmetic, factorization in small characteristic,
// the text format, and Moebius substitution.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "relh/poly.hpp"

using namespace relh;

namespace {

Poly pseudo_random(const Field* F, int deg, u64 seed) {
  std::vector<Fq> c(deg + 1);
  for (auto& a : c) {
    seed ^= seed << 13;
    seed ^= seed >> 7;
    seed ^= seed << 17;
    a = Fq{seed % F->q};
  }
  c[deg] = F->one();
  return poly_make(F, std::move(c));
}

}  // namespace

TEST_CASE("divrem invariant") {
  const Field* F = Field::get(3, 2);
  for (u64 s = 1; s <= 20; ++s) {
    Poly a = pseudo_random(F, 9, s);
    Poly b = pseudo_random(F, 4, s + 100);
    auto [q, r] = poly_divrem(a, b);
    CHECK(q * b + r == a);
    CHECK(r.deg() < b.deg());
  }
}

TEST_CASE("gcd of products") {
  const Field* F = Field::get(5, 1);
  Poly h = poly_parse(F, "x^2+2");
  Poly f = poly_parse(F, "x^3+x+1") * h;
  Poly g = poly_parse(F, "x^2+x+1") * h;
  Poly d = poly_gcd(f, g);
  CHECK(poly_divides(h, d));
  CHECK(poly_divides(d, f));
  CHECK(poly_divides(d, g));
}

TEST_CASE("squarefree decomposition, including p-th powers") {
  const Field* F = Field::get(3, 1);
  Poly a = poly_parse(F, "x+1");
  Poly b = poly_parse(F, "x^2+1");
  Poly f = poly_pow(a, 2) * poly_pow(b, 3);
  auto sq = poly_squarefree(f);
  REQUIRE(sq.size() == 2);
  CHECK(sq[0].second == 2);
  CHECK(sq[0].first == a);
  CHECK(sq[1].second == 3);
  CHECK(sq[1].first == b);

  // derivative vanishes: g^3 in characteristic 3
  Poly g = poly_parse(F, "x^3+2x+1");
  Poly f3 = poly_pow(g, 3);
  CHECK(poly_derivative(f3).is_zero());
  auto sq3 = poly_squarefree(f3);
  REQUIRE(sq3.size() == 1);
  CHECK(sq3[0].second == 3);
  CHECK(sq3[0].first == g);
}

TEST_CASE("x^q - x splits into all monic linear factors") {
  const Field* F = Field::get(3, 2);
  std::vector<Fq> c(F->q + 1, Fq{0});
  c[1] = F->neg(F->one());
  c[F->q] = F->one();
  Poly f = poly_make(F, std::move(c));
  auto fac = poly_factor(f);
  CHECK(fac.size() == F->q);
  for (auto& [g, m] : fac) {
    CHECK(g.deg() == 1);
    CHECK(m == 1);
  }
}

TEST_CASE("factorization reconstructs and yields irreducibles") {
  for (auto [p, r] : {std::pair{3, 1}, {2, 2}, {5, 1}, {3, 2}}) {
    const Field* F = Field::get(p, r);
    for (u64 s = 1; s <= 8; ++s) {
      Poly f = pseudo_random(F, 8, s * 7 + p);
      if (f.deg() < 1) continue;
      auto fac = poly_factor(f);
      Poly prod = poly_const(F, F->one());
      for (auto& [g, m] : fac) {
        CHECK(poly_irreducible(g));
        for (int i = 0; i < m; ++i) prod = prod * g;
      }
      CHECK(prod == poly_monic(f));
    }
  }
}

TEST_CASE("char-2 equal-degree splitting") {
  const Field* F = Field::get(2, 2);
  // x^2+x+a is irreducible over F_4 (a has absolute trace 1)
  Poly f1 = bipoly_parse(F, "x^2+x+a").cy[0];
  Poly f2 = poly_parse(F, "x^2+x+1");  // reducible: (x+a)(x+a+1)
  CHECK(poly_irreducible(f1));
  CHECK(!poly_irreducible(f2));
  auto fac = poly_factor(f1 * f2);
  REQUIRE(fac.size() == 3);
  CHECK(fac[0].first.deg() == 1);
  CHECK(fac[1].first.deg() == 1);
  CHECK(fac[2].first.deg() == 2);
}

TEST_CASE("roots") {
  const Field* F9 = Field::get(3, 2);
  Poly f = poly_parse(F9, "x^3+2x");  // x(x^2+2) = x(x-1)(x+1) over F_3 subset
  auto rt = poly_roots(f);
  REQUIRE(rt.size() == 3);
  for (Fq x : rt) CHECK(poly_eval(f, x).v == 0);
}

TEST_CASE("text format round trips") {
  const Field* F = Field::get(3, 1);
  for (auto s : {"x^5+2x+1", "2x^4+x^2+2", "x", "1", "0", "x^2+x"}) {
    Poly f = poly_parse(F, s);
    CHECK(poly_str(f) == s);
  }
  const Field* F4 = Field::get(2, 2);
  Poly g = poly_parse(F4, "(a+1)x^3+ax+1");
  CHECK(poly_str(g) == "(a+1)x^3+ax+1");
  CHECK(poly_eval(g, F4->zero()) == F4->one());
  // minus signs and implicit multiplication are accepted on input
  Poly h = poly_parse(F, "x^2 - 2*x + 1");
  CHECK(h == poly_parse(F, "x^2+x+1"));
}

TEST_CASE("bivariate parse/eval") {
  const Field* F = Field::get(3, 1);
  BiPoly f = bipoly_parse(F, "y^2+2x^5+x");
  CHECK(f.ydeg() == 2);
  CHECK(bipoly_total_deg(f) == 5);
  for (u64 xv = 0; xv < 3; ++xv)
    for (u64 yv = 0; yv < 3; ++yv) {
      Fq x{xv}, y{yv};
      Fq want = F->add(F->mul(y, y),
                       F->add(F->mul(F->from_int(2), F->pow(x, 5)), x));
      CHECK(bipoly_eval(f, x, y) == want);
    }
  BiPoly fy = bipoly_dy(f);
  CHECK(fy.ydeg() == 1);
  CHECK(bipoly_str(f) == "y^2+2x^5+x");
}

TEST_CASE("Moebius substitution matches pointwise evaluation") {
  const Field* F = Field::get(5, 1);
  Poly f = poly_parse(F, "x^4+3x^2+x+2");
  int n = 4;
  Fq a = F->from_int(2), b = F->from_int(1), c = F->from_int(1), d = F->from_int(3);
  Poly g = poly_mobius(f, n, a, b, c, d);
  for (u64 v = 0; v < 5; ++v) {
    Fq x{v};
    Fq den = F->add(F->mul(c, x), d);
    if (den.v == 0) continue;
    Fq num = F->add(F->mul(a, x), b);
    Fq lhs = poly_eval(g, x);
    Fq rhs = F->mul(F->pow(den, n), poly_eval(f, F->div(num, den)));
    CHECK(lhs == rhs);
  }
}

TEST_CASE("powmod with huge exponents") {
  const Field* F = Field::get(3, 2);
  Poly f = poly_zero(F);
  for (u64 v = 0; v < F->q && f.is_zero(); ++v) {
    Poly cand = poly_x(F) * poly_x(F) + poly_x(F) + poly_const(F, Fq{v});
    if (poly_irreducible(cand)) f = cand;
  }
  REQUIRE(!f.is_zero());
  u128_t e = (u128_t)F->q * F->q;  // x^(q^2) = x in the residue field F_{q^2}
  Poly x = poly_x(F);
  CHECK(poly_powmod(x, e, f) == x % f);
}
