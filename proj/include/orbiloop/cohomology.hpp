#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "orbiloop/abelian.hpp"
#include "orbiloop/fingroup.hpp"

namespace orbiloop {

// Normalized 1-cochain xi : G -> A, xi(e) = 0.
class Cochain1 {
 public:
  // Throws ValidationError when values[e] != 0.
  Cochain1(FiniteGroup g, FiniteAbelianGroup a, std::vector<AElem> values);
  static Cochain1 zero(FiniteGroup g, FiniteAbelianGroup a);

  const FiniteGroup& group() const { return g_; }
  const FiniteAbelianGroup& coeff() const { return a_; }
  AElem operator()(Elem g) const { return values_[g]; }
  const std::vector<AElem>& values() const { return values_; }

  friend bool operator==(const Cochain1& x, const Cochain1& y) {
    return x.g_ == y.g_ && x.a_ == y.a_ && x.values_ == y.values_;
  }

 private:
  FiniteGroup g_;
  FiniteAbelianGroup a_;
  std::vector<AElem> values_;
};

// Normalized 2-cochain c : G x G -> A, c(e, g) = c(g, e) = 0.
class Cochain2 {
 public:
  // values is row-major |G| x |G|; throws ValidationError if not normalized.
  Cochain2(FiniteGroup g, FiniteAbelianGroup a, std::vector<AElem> values);
  static Cochain2 zero(FiniteGroup g, FiniteAbelianGroup a);
  // Subtracts the constant c(e,e) from every value first. A cocycle always
  // comes out normalized; anything else still fails the check.
  static Cochain2 normalized(FiniteGroup g, FiniteAbelianGroup a, std::vector<AElem> values);

  const FiniteGroup& group() const { return g_; }
  const FiniteAbelianGroup& coeff() const { return a_; }
  AElem operator()(Elem g, Elem h) const { return values_[g * g_.order() + h]; }
  const std::vector<AElem>& values() const { return values_; }

  Cochain2 operator+(const Cochain2& o) const;
  Cochain2 operator-(const Cochain2& o) const;
  Cochain2 times(std::int64_t k) const;

  friend bool operator==(const Cochain2& x, const Cochain2& y) {
    return x.g_ == y.g_ && x.a_ == y.a_ && x.values_ == y.values_;
  }

 private:
  void check_compatible(const Cochain2& o) const;
  FiniteGroup g_;
  FiniteAbelianGroup a_;
  std::vector<AElem> values_;
};

// (d xi)(g, h) = xi(g) + xi(h) - xi(gh).
Cochain2 d1(const Cochain1& xi);

struct CocycleCheck {
  bool ok = true;
  std::optional<std::array<Elem, 3>> witness;  // first failing (g, h, k)
  explicit operator bool() const { return ok; }
};

// c(h,k) - c(gh,k) + c(g,hk) - c(g,h) = 0 for all g, h, k.
CocycleCheck is_cocycle(const Cochain2& c);

// On a cyclic group with generator g: c(g^i, g^j) = 0 if i+j < n, a otherwise.
// Defaults to the lowest-index generator; throws InputError if G is not cyclic.
Cochain2 carrying_cocycle(const FiniteGroup& g, const FiniteAbelianGroup& a, AElem value,
                          std::optional<Elem> generator = std::nullopt);

// Some xi with c = c2 + d(xi), found by reduction mod each cyclic factor of A.
std::optional<Cochain1> solve_coboundary(const Cochain2& c, const Cochain2& c2);

inline constexpr std::uint64_t kBruteForceBound = 1'000'000;

// Exhaustive search over all normalized xi; returns the lexicographically
// least witness. Throws InputError when |A|^(|G|-1) exceeds kBruteForceBound.
std::optional<Cochain1> brute_force_cohomologous(const Cochain2& c, const Cochain2& c2);

enum class Method { linalg, brute };

// |H^2(G; A)| = |Z^2| / |B^2|.
std::uint64_t h2_order(const FiniteGroup& g, const FiniteAbelianGroup& a, Method method = Method::linalg);

// Smallest k >= 1 with k*c a coboundary.
std::size_t class_order(const Cochain2& c, Method method = Method::linalg);

// c(g,h) = c(sgs^-1, shs^-1) for all s, g, h.
bool is_conjugation_invariant(const Cochain2& c);

}  // namespace orbiloop
