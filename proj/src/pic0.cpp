// Degree-0 divisor class groups by complete enumeration.
//
// Fix an effective divisor E0 of degree g.  Every degree-0 class contains
// D - E0 for some effective D of degree g (Riemann-Roch), so scanning all
// effective divisors of degree g hits every class.  The canonical
// representative of the class of a degree-0 divisor Z is the
// lexicographically least effective divisor in the complete linear system
// |Z + E0|, found by scanning the projectivization of L(Z + E0).  The group
// order is independently known as P(1) from point counts, which certifies
// completeness of the enumeration.

#include <cassert>
#include <stdexcept>

#include "relh/jacobian.hpp"

namespace relh {

namespace {

u64 upow(u64 b, int e) {
  u64 r = 1;
  while (e-- > 0) r *= b;
  return r;
}

// All effective divisors of the exact degree n supported on `pls`.
void effective_rec(const std::vector<Place>& pls, size_t i, int n,
                   std::vector<std::pair<Place, int>>& cur, std::vector<Divisor>& out) {
  if (n == 0) {
    out.push_back(div_make(cur));
    return;
  }
  if (i == pls.size()) return;
  int d = pls[i].deg;
  effective_rec(pls, i + 1, n, cur, out);
  for (int m = 1; m * d <= n; ++m) {
    cur.emplace_back(pls[i], m);
    effective_rec(pls, i + 1, n - m * d, cur, out);
    cur.pop_back();
  }
}

std::vector<u64> div_key(const Divisor& D) {
  std::vector<u64> k;
  for (auto& [P, n] : D.t) {
    auto pk = place_key(P);
    k.push_back(pk.size());
    k.insert(k.end(), pk.begin(), pk.end());
    k.push_back((u64)(i64)n + ((u64)1 << 32));
  }
  return k;
}

}  // namespace

Divisor Pic0::canon(const Divisor& Z) const {
  assert(div_deg(Z) == 0);
  Divisor ZE = div_add(Z, E0);
  RRBasis L = rr_space(C, ZE);
  assert(L.dim >= 1);
  const Field* F = C.F;
  Divisor best;
  bool first = true;
  for (int lead = 0; lead < L.dim; ++lead) {
    int tail = L.dim - 1 - lead;
    u64 total = upow(F->q, tail);
    for (u64 it = 0; it < total; ++it) {
      DCFun u = L.basis[(size_t)lead];
      u64 w = it;
      for (int j = 0; j < tail; ++j) {
        Fq c{w % F->q};
        w /= F->q;
        if (c.v) {
          const DCFun& b = L.basis[(size_t)(lead + 1 + j)];
          u.A = u.A + c * b.A;
          u.B = u.B + c * b.B;
        }
      }
      Divisor E = div_add(divisor_of(C, u), ZE);
      assert(div_effective(E) && div_deg(E) == g);
      if (first || div_less(E, best)) {
        best = E;
        first = false;
      }
    }
  }
  assert(!first);
  return best;
}

int Pic0::index_of(const Divisor& rep) const {
  auto it = index_.find(div_key(rep));
  return it == index_.end() ? -1 : it->second;
}

int Pic0::class_of(const Divisor& Z) const {
  assert(div_deg(Z) == 0);
  int r = index_of(canon(Z));
  assert(r >= 0);
  return r;
}

int Pic0::add(int i, int j) const {
  assert(i >= 0 && i < size() && j >= 0 && j < size());
  if (i > j) std::swap(i, j);
  auto key = std::make_pair(i, j);
  auto it = add_memo_.find(key);
  if (it != add_memo_.end()) return it->second;
  Divisor Z = div_sub(div_add(elems[(size_t)i], elems[(size_t)j]), div_scale(E0, 2));
  int r = index_of(canon(Z));
  assert(r >= 0);
  add_memo_.emplace(key, r);
  return r;
}

int Pic0::neg(int i) const {
  assert(i >= 0 && i < size());
  Divisor Z = div_sub(E0, elems[(size_t)i]);
  int r = index_of(canon(Z));
  assert(r >= 0);
  return r;
}

int Pic0::order(int i) const {
  int k = 1, cur = i;
  while (cur != zero) {
    cur = add(cur, i);
    ++k;
    assert(k <= (int)h);
  }
  return k;
}

std::vector<int> Pic0::two_torsion() const {
  std::vector<int> out;
  for (int i = 0; i < size(); ++i)
    if (add(i, i) == zero) out.push_back(i);
  return out;
}

std::vector<int> Pic0::halve(int c) const {
  std::vector<int> out;
  for (int i = 0; i < size(); ++i)
    if (add(i, i) == c) out.push_back(i);
  return out;
}

Pic0 pic0_enumerate(const Curve& C, i64 order_bound) {
  if (C.kind == CurveKind::PLANE)
    throw std::invalid_argument("pic0_enumerate: plane models not supported; change the model");
  Pic0 G;
  G.C = C;
  G.g = C.genus;
  i128 h = class_number(curve_class(C));
  if (h > (i128)order_bound)
    throw std::runtime_error("pic0_enumerate: group order exceeds the bound");
  G.h = (i64)h;
  if (G.g == 0) {
    assert(G.h == 1);
    G.elems = {Divisor{}};
    G.zero = 0;
    G.index_.emplace(div_key(Divisor{}), 0);
    return G;
  }
  // Base divisor and class representatives from effective divisors of degree g.
  auto pls = places_up_to(C, G.g);
  std::vector<Divisor> effs;
  {
    std::vector<std::pair<Place, int>> cur;
    effective_rec(pls, 0, G.g, cur, effs);
  }
  assert(!effs.empty());
  G.E0 = effs[0];
  for (auto& E : effs)
    if (div_less(E, G.E0)) G.E0 = E;

  for (auto& E : effs) {
    Divisor rep = G.canon(div_sub(E, G.E0));
    auto key = div_key(rep);
    if (!G.index_.count(key)) {
      G.index_.emplace(std::move(key), (int)G.elems.size());
      G.elems.push_back(rep);
    }
  }
  if ((i64)G.elems.size() != G.h)
    throw std::logic_error("pic0_enumerate: enumeration size disagrees with P(1)");
  // Deterministic order: sort representatives, rebuild the index.
  std::sort(G.elems.begin(), G.elems.end(), div_less);
  G.index_.clear();
  for (size_t i = 0; i < G.elems.size(); ++i) G.index_.emplace(div_key(G.elems[i]), (int)i);
  G.zero = G.index_.at(div_key(G.canon(Divisor{})));
  return G;
}

std::vector<Divisor> effective_divisors(const Curve& C, int deg) {
  assert(deg >= 0);
  auto pls = places_up_to(C, deg == 0 ? 1 : deg);
  std::vector<Divisor> out;
  std::vector<std::pair<Place, int>> cur;
  effective_rec(pls, 0, deg, cur, out);
  return out;
}

}  // namespace relh
