#pragma once

// Seeded generators of random cochains and cocycles shared by the unit and
// acceptance tests.

#include <cstdint>
#include <random>
#include <vector>

#include "orbiloop/cohomology.hpp"

namespace orbiloop::testing {

// A homomorphism G -> C_m given by its values.
struct Projection {
  std::vector<Elem> map;
  std::size_t m;
};

inline AElem random_aelem(const FiniteAbelianGroup& a, std::mt19937_64& rng) {
  return static_cast<AElem>(std::uniform_int_distribution<std::size_t>(0, a.order() - 1)(rng));
}

inline Cochain1 random_cochain1(const FiniteGroup& g, const FiniteAbelianGroup& a, std::mt19937_64& rng) {
  std::vector<AElem> v(g.order());
  for (Elem x = 0; x < g.order(); ++x) v[x] = x == g.identity() ? 0 : random_aelem(a, rng);
  return Cochain1(g, a, std::move(v));
}

// Uniform over normalized 2-cochains; most of them are not cocycles.
inline Cochain2 random_cochain2(const FiniteGroup& g, const FiniteAbelianGroup& a, std::mt19937_64& rng) {
  const std::size_t n = g.order();
  std::vector<AElem> v(n * n, 0);
  for (Elem x = 0; x < n; ++x) {
    for (Elem y = 0; y < n; ++y) {
      if (x != g.identity() && y != g.identity()) v[x * n + y] = random_aelem(a, rng);
    }
  }
  return Cochain2(g, a, std::move(v));
}

// Pullback of the carrying cocycle on C_m along a projection.
inline Cochain2 pulled_back_carrying(const FiniteGroup& g, const FiniteAbelianGroup& a, const Projection& p,
                                     AElem value) {
  const std::size_t n = g.order();
  std::vector<AElem> v(n * n, 0);
  for (Elem x = 0; x < n; ++x) {
    for (Elem y = 0; y < n; ++y) v[x * n + y] = p.map[x] + p.map[y] >= p.m ? value : 0;
  }
  return Cochain2(g, a, std::move(v));
}

// Identity projection for a cyclic group built by make_cyclic.
inline std::vector<Projection> cyclic_projections(const FiniteGroup& g) {
  std::vector<Elem> map(g.order());
  for (Elem x = 0; x < g.order(); ++x) map[x] = x;
  return {{map, g.order()}};
}

// Both coordinate projections of make_product(make_cyclic(m1), make_cyclic(m2)).
inline std::vector<Projection> product_projections(std::size_t m1, std::size_t m2) {
  std::vector<Elem> p1(m1 * m2), p2(m1 * m2);
  for (Elem x = 0; x < m1 * m2; ++x) {
    p1[x] = static_cast<Elem>(x / m2);
    p2[x] = static_cast<Elem>(x % m2);
  }
  return {{p1, m1}, {p2, m2}};
}

// Random combination of pulled-back carrying cocycles plus a random coboundary.
inline Cochain2 random_cocycle(const FiniteGroup& g, const FiniteAbelianGroup& a,
                               const std::vector<Projection>& projections, std::mt19937_64& rng) {
  Cochain2 c = d1(random_cochain1(g, a, rng));
  for (const auto& p : projections) c = c + pulled_back_carrying(g, a, p, random_aelem(a, rng));
  return c;
}

}  // namespace orbiloop::testing
