// Formal divisors on double covers and exact divisors of functions.

#include <cassert>
#include <set>
#include <sstream>
#include <stdexcept>

#include "relh/jacobian.hpp"

namespace relh {

namespace {

bool term_less(const std::pair<Place, int>& a, const std::pair<Place, int>& b) {
  return place_key(a.first) < place_key(b.first);
}

}  // namespace

Divisor div_make(std::vector<std::pair<Place, int>> terms) {
  std::sort(terms.begin(), terms.end(), term_less);
  Divisor d;
  for (auto& [P, n] : terms) {
    if (n == 0) continue;
    if (!d.t.empty() && place_eq(d.t.back().first, P))
      d.t.back().second += n;
    else
      d.t.emplace_back(P, n);
    if (d.t.back().second == 0) d.t.pop_back();
  }
  return d;
}

Divisor div_add(const Divisor& a, const Divisor& b) {
  std::vector<std::pair<Place, int>> terms = a.t;
  terms.insert(terms.end(), b.t.begin(), b.t.end());
  return div_make(std::move(terms));
}

Divisor div_neg(const Divisor& a) { return div_scale(a, -1); }

Divisor div_sub(const Divisor& a, const Divisor& b) { return div_add(a, div_neg(b)); }

Divisor div_scale(const Divisor& a, int k) {
  Divisor d;
  if (k == 0) return d;
  d.t = a.t;
  for (auto& [P, n] : d.t) n *= k;
  return d;
}

int div_deg(const Divisor& a) {
  int s = 0;
  for (auto& [P, n] : a.t) s += n * P.deg;
  return s;
}

bool div_effective(const Divisor& a) {
  for (auto& [P, n] : a.t)
    if (n < 0) return false;
  return true;
}

bool div_eq(const Divisor& a, const Divisor& b) {
  if (a.t.size() != b.t.size()) return false;
  for (size_t i = 0; i < a.t.size(); ++i)
    if (a.t[i].second != b.t[i].second || !place_eq(a.t[i].first, b.t[i].first)) return false;
  return true;
}

bool div_less(const Divisor& a, const Divisor& b) {
  size_t n = std::min(a.t.size(), b.t.size());
  for (size_t i = 0; i < n; ++i) {
    auto ka = place_key(a.t[i].first), kb = place_key(b.t[i].first);
    if (ka != kb) return ka < kb;
    if (a.t[i].second != b.t[i].second) return a.t[i].second < b.t[i].second;
  }
  return a.t.size() < b.t.size();
}

std::string div_to_string(const Divisor& a) {
  if (a.t.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& [P, n] : a.t) {
    if (!first) os << " + ";
    first = false;
    os << n << "*(";
    if (P.infinity)
      os << "inf";
    else
      os << poly_str(P.p);
    if (P.type == PlaceType::SPLIT) os << ",b" << P.branch;
    if (P.type == PlaceType::INERT) os << ",inert";
    if (P.type == PlaceType::RAM) os << ",ram";
    os << ")";
  }
  return os.str();
}

Divisor divisor_of(const Curve& C, const DCFun& fn) {
  if (C.kind == CurveKind::PLANE)
    throw std::invalid_argument("divisor_of: plane models not supported; change the model");
  if (fn.A.is_zero() && fn.B.is_zero())
    throw std::invalid_argument("divisor_of: zero function");
  // Places with nonzero valuation lie over irreducible factors of the norm
  // of A + B*w (numerator or denominator) or of the denominator C, plus the
  // places over x = infinity.
  Rat N = dc_norm(C, fn.A, fn.B);
  assert(!N.num.is_zero());
  std::set<std::vector<u64>> seen;
  std::vector<Poly> primes;
  auto collect = [&](const Poly& f) {
    if (f.deg() < 1) return;
    for (auto& [g, m] : poly_factor(f)) {
      (void)m;
      std::vector<u64> key;
      for (auto& c : g.c) key.push_back(c.v);
      if (seen.insert(key).second) primes.push_back(g);
    }
  };
  collect(N.num);
  collect(N.den);
  collect(fn.C);
  std::vector<std::pair<Place, int>> terms;
  for (auto& p : primes)
    for (auto& P : places_over(C, p)) {
      i64 v = dc_valuation(C, P, fn);
      if (v) terms.emplace_back(P, (int)v);
    }
  for (auto& P : places_at_infinity_list(C)) {
    i64 v = dc_valuation(C, P, fn);
    if (v) terms.emplace_back(P, (int)v);
  }
  Divisor D = div_make(std::move(terms));
  assert(div_deg(D) == 0);
  return D;
}

}  // namespace relh
