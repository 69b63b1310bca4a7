// fq.hpp -- runtime-described finite fields F_{p^r} of small characteristic.
//
// Elements are packed in radix p: the value sum c_i * p^i encodes the
// coefficient vector (c_0, ..., c_{r-1}) with respect to the power basis of
// the field modulus.  Every integer in [0, p^r) is a valid element, so
// enumeration is a plain counter loop.  Fields with at most TABLE_MAX
// elements get exp/log tables (all arithmetic is then table lookups); larger
// fields fall back to digit-vector polynomial arithmetic.
//
// The modulus of F_{p^r} is chosen deterministically: the monic irreducible
// polynomial of degree r over F_p whose packed non-leading coefficient value
// is smallest.  For F_4 this gives x^2 + x + 1, so the printed generator `a`
// satisfies a^2 = a + 1.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace relh {

using u32 = std::uint32_t;
using u64 = std::uint64_t;
using i64 = std::int64_t;
using i128 = __int128;
using u128_t = unsigned __int128;

// Element of a finite field, meaningful only together with its Field.
struct Fq {
  u64 v = 0;
  friend bool operator==(Fq a, Fq b) { return a.v == b.v; }
  friend bool operator!=(Fq a, Fq b) { return a.v != b.v; }
  friend bool operator<(Fq a, Fq b) { return a.v < b.v; }
};

class Field {
public:
  // Cached accessor; instances live for the whole process.
  static const Field* get(int p, int r);

  int p = 0;       // characteristic
  int r = 0;       // extension degree over F_p
  u64 q = 0;       // p^r

  // Monic modulus, coefficients modulus_c[0..r] with modulus_c[r] = 1.
  std::vector<int> modulus_c;

  Fq zero() const { return Fq{0}; }
  Fq one() const { return Fq{1}; }
  // Class of the variable used to build the extension (equals 1 when r = 1).
  Fq gen() const { return r == 1 ? one() : Fq{(u64)p}; }

  bool is_zero(Fq a) const { return a.v == 0; }

  Fq from_int(i64 n) const {
    i64 m = n % p;
    if (m < 0) m += p;
    return Fq{(u64)m};
  }

  // Digits (c_0, ..., c_{r-1}) of the packed value.
  std::vector<int> digits(Fq a) const;
  Fq from_digits(const std::vector<int>& d) const;

  Fq add(Fq a, Fq b) const;
  Fq sub(Fq a, Fq b) const;
  Fq neg(Fq a) const;
  Fq mul(Fq a, Fq b) const;
  Fq inv(Fq a) const;      // a != 0
  Fq div(Fq a, Fq b) const { return mul(a, inv(b)); }
  Fq pow(Fq a, u64 e) const;
  Fq frobenius(Fq a, int k = 1) const;  // a^(p^k)

  // Multiplicative generator (fixed per field).
  Fq generator() const { return generator_; }

  // Quadratic character for odd p: 0 on zero, +1 on nonzero squares, else -1.
  int quadratic_character(Fq a) const;

  // Trace to the prime field, returned as an integer in [0, p).
  int absolute_trace(Fq a) const;

  // Square root if one exists.  In characteristic 2 every element has one.
  std::optional<Fq> sqrt(Fq a) const;

  // Image of `a` (an element of `sub`, with sub->p == p and sub->r | r)
  // under a fixed embedding sub -> this.  Embeddings are chosen per field
  // pair; composite embeddings are not guaranteed compatible.
  Fq embed(const Field* sub, Fq a) const;

  // Roots in this field of a polynomial with coefficients here (dense,
  // low-to-high); used for embeddings and small solves.
  std::vector<Fq> poly_roots(const std::vector<Fq>& c) const;

  Fq eval_poly(const std::vector<Fq>& c, Fq x) const;

  std::string to_string(Fq a) const;   // e.g. "0", "2", "a", "a+1", "2a^2+1"

  bool tabled() const { return !log_.empty(); }

  // Discrete log base generator(); only for tabled fields, a != 0.
  u64 dlog(Fq a) const { return log_[a.v]; }

private:
  Field(int p, int r);
  static constexpr u64 TABLE_MAX = 8192;

  Fq mul_generic(Fq a, Fq b) const;
  Fq pow_generic(Fq a, u64 e) const;
  void build_tables();

  Fq generator_{0};
  std::vector<u32> log_;   // log_[v] for v != 0
  std::vector<u64> exp_;   // exp_[i] = generator^i, i in [0, 2(q-1))
  // Cached embedding tables keyed by the subfield pointer.
  mutable std::vector<std::pair<const Field*, std::vector<u64>>> embed_cache_;
};

// Deterministic modulus: digits (c_0..c_{r-1}) of the chosen irreducible.
std::vector<int> smallest_irreducible(int p, int r);

}  // namespace relh
