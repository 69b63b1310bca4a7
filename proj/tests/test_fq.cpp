// Finite field layer: construction, arithmetic laws, tables vs generic path,
// characters, traces, square roots, embeddings.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "relh/fq.hpp"

using namespace relh;

TEST_CASE("modulus selection is deterministic and standard for F4") {
  // only irreducible quadratic over F_2 is x^2+x+1, so a^2 = a+1
  auto m = smallest_irreducible(2, 2);
  CHECK(m == std::vector<int>{1, 1});
  auto m9 = smallest_irreducible(3, 2);
  CHECK(m9 == std::vector<int>{1, 0});  // x^2 + 1
}

TEST_CASE("prime field arithmetic") {
  const Field* F = Field::get(5, 1);
  CHECK(F->q == 5);
  CHECK(F->add(F->from_int(3), F->from_int(4)) == F->from_int(2));
  CHECK(F->mul(F->from_int(3), F->from_int(4)) == F->from_int(2));
  CHECK(F->inv(F->from_int(2)) == F->from_int(3));
  CHECK(F->neg(F->from_int(2)) == F->from_int(3));
  CHECK(F->pow(F->from_int(2), 4) == F->one());
  // quadratic residues mod 5: 1, 4
  CHECK(F->quadratic_character(F->from_int(1)) == 1);
  CHECK(F->quadratic_character(F->from_int(4)) == 1);
  CHECK(F->quadratic_character(F->from_int(2)) == -1);
  CHECK(F->quadratic_character(F->from_int(3)) == -1);
  CHECK(F->quadratic_character(F->zero()) == 0);
}

TEST_CASE("F4 structure") {
  const Field* F = Field::get(2, 2);
  Fq a = F->gen();
  CHECK(F->mul(a, a) == F->add(a, F->one()));  // a^2 = a+1
  CHECK(F->to_string(a) == "a");
  CHECK(F->to_string(F->add(a, F->one())) == "a+1");
  CHECK(F->absolute_trace(a) == 1);
  CHECK(F->absolute_trace(F->one()) == 0);  // 1 + 1^2 = 0
  // char-2 square roots exist everywhere and are unique
  for (u64 v = 0; v < 4; ++v) {
    Fq s = *F->sqrt(Fq{v});
    CHECK(F->mul(s, s) == Fq{v});
  }
  CHECK(F->frobenius(a) == F->mul(a, a));
}

static void field_laws(const Field* F, const std::vector<Fq>& sample) {
  for (Fq x : sample)
    for (Fq y : sample) {
      CHECK(F->add(x, y) == F->add(y, x));
      CHECK(F->mul(x, y) == F->mul(y, x));
      CHECK(F->sub(F->add(x, y), y) == x);
      if (y.v) CHECK(F->mul(F->div(x, y), y) == x);
      for (Fq z : sample)
        CHECK(F->mul(x, F->add(y, z)) == F->add(F->mul(x, y), F->mul(x, z)));
      // Frobenius is additive
      CHECK(F->frobenius(F->add(x, y)) == F->add(F->frobenius(x), F->frobenius(y)));
    }
  for (Fq x : sample) CHECK(F->pow(x, F->q) == x);  // x^q = x
}

TEST_CASE("field laws on tabled and generic fields") {
  {
    const Field* F = Field::get(3, 2);
    std::vector<Fq> all;
    for (u64 v = 0; v < F->q; ++v) all.push_back(Fq{v});
    field_laws(F, all);
  }
  {
    const Field* F = Field::get(3, 7);  // tabled (2187)
    REQUIRE(F->tabled());
    std::vector<Fq> sample;
    for (u64 v = 1; v < F->q; v += 387) sample.push_back(Fq{v});
    field_laws(F, sample);
  }
  {
    const Field* F = Field::get(3, 9);  // beyond table threshold
    REQUIRE(!F->tabled());
    std::vector<Fq> sample;
    for (u64 v = 1; v < F->q; v += 3251) sample.push_back(Fq{v});
    field_laws(F, sample);
  }
}

TEST_CASE("generator order") {
  for (auto [p, r] : {std::pair{3, 7}, {2, 13}, {5, 5}, {3, 9}}) {
    const Field* F = Field::get(p, r);
    u64 n = F->q - 1;
    CHECK(F->pow(F->generator(), n) == F->one());
    for (u64 d = 2; d * d <= n; ++d)
      if (n % d == 0) {
        CHECK(F->pow(F->generator(), n / d) != F->one());
        while (n % d == 0) n /= d;
      }
    if (n > 1 && n < F->q - 1) CHECK(F->pow(F->generator(), (F->q - 1) / n) != F->one());
  }
}

TEST_CASE("quadratic character: multiplicative, balanced, matches squares") {
  const Field* F = Field::get(3, 3);
  int sum = 0;
  for (u64 v = 1; v < F->q; ++v) {
    Fq x{v};
    sum += F->quadratic_character(x);
    CHECK(F->quadratic_character(F->mul(x, x)) == 1);
    auto s = F->sqrt(x);
    if (F->quadratic_character(x) == 1) {
      REQUIRE(s.has_value());
      CHECK(F->mul(*s, *s) == x);
    } else {
      CHECK(!s.has_value());
    }
  }
  CHECK(sum == 0);
}

TEST_CASE("absolute trace is F_p-linear and balanced") {
  const Field* F = Field::get(2, 4);
  int zeros = 0;
  for (u64 v = 0; v < F->q; ++v)
    if (F->absolute_trace(Fq{v}) == 0) ++zeros;
  CHECK(zeros == 8);  // kernel of trace has q/p elements
  const Field* G = Field::get(3, 4);
  int count[3] = {0, 0, 0};
  for (u64 v = 0; v < G->q; ++v) ++count[G->absolute_trace(Fq{v})];
  CHECK(count[0] == 27);
  CHECK(count[1] == 27);
  CHECK(count[2] == 27);
}

TEST_CASE("embeddings are ring homomorphisms") {
  const Field* F3 = Field::get(3, 1);
  const Field* F9 = Field::get(3, 2);
  const Field* F81 = Field::get(3, 4);
  // F9 -> F81: exhaustive homomorphism check
  for (u64 v = 0; v < 9; ++v)
    for (u64 w = 0; w < 9; ++w) {
      Fq x{v}, y{w};
      CHECK(F81->embed(F9, F9->add(x, y)) == F81->add(F81->embed(F9, x), F81->embed(F9, y)));
      CHECK(F81->embed(F9, F9->mul(x, y)) == F81->mul(F81->embed(F9, x), F81->embed(F9, y)));
    }
  CHECK(F81->embed(F9, F9->one()) == F81->one());
  // prime field goes to constants
  CHECK(F9->embed(F3, F3->from_int(2)) == F9->from_int(2));
  // the embedded image of F9's generator is a root of F9's modulus
  Fq t = F81->embed(F9, F9->gen());
  Fq val = F81->add(F81->mul(t, t), F81->one());  // modulus x^2 + 1
  CHECK(F81->is_zero(val));
}

TEST_CASE("sqrt via Tonelli-Shanks on a non-tabled field") {
  const Field* F = Field::get(3, 9);
  Fq x = F->pow(F->generator(), 1234 * 2);  // an even power: a square
  auto s = F->sqrt(x);
  REQUIRE(s.has_value());
  CHECK(F->mul(*s, *s) == x);
  Fq n = F->pow(F->generator(), 4321 * 2 + 1);
  CHECK(F->quadratic_character(n) == -1);
  CHECK(!F->sqrt(n).has_value());
}
