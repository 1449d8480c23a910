#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "orbiloop/algebra.hpp"

namespace orbiloop {

// Dense index of an element of a FiniteAbelianGroup (mixed radix, first
// factor most significant; 0 is the zero element).
using AElem = std::uint32_t;

inline constexpr std::size_t kMaxCoefficientOrder = 1u << 16;
inline constexpr std::size_t kMaxEmbeddingDomain = 256;

// Z/m_1 x ... x Z/m_r, written additively, with trivial group action.
class FiniteAbelianGroup {
 public:
  using Tuple = std::vector<std::uint32_t>;

  FiniteAbelianGroup() : FiniteAbelianGroup(std::vector<std::uint32_t>{1}) {}
  explicit FiniteAbelianGroup(std::vector<std::uint32_t> factors);

  const std::vector<std::uint32_t>& factors() const { return factors_; }
  std::size_t rank() const { return factors_.size(); }
  std::size_t order() const { return order_; }

  AElem zero() const { return 0; }
  AElem encode(const Tuple& t) const;
  Tuple decode(AElem a) const;
  std::uint32_t component(AElem a, std::size_t i) const;
  // Element with a single nonzero component.
  AElem generator(std::size_t i) const;

  AElem add(AElem a, AElem b) const;
  AElem neg(AElem a) const;
  AElem sub(AElem a, AElem b) const { return add(a, neg(b)); }
  AElem times(std::int64_t k, AElem a) const;

  std::size_t element_order(AElem a) const;

  // "3" for rank one, "(1,2)" otherwise.
  std::string name(AElem a) const;
  // Accepts "3", "1,2" or "(1,2)".
  AElem parse(std::string_view text) const;

  friend bool operator==(const FiniteAbelianGroup& a, const FiniteAbelianGroup& b) {
    return a.factors_ == b.factors_;
  }

 private:
  std::vector<std::uint32_t> factors_;
  std::vector<std::size_t> stride_;
  std::size_t order_ = 1;
};

FiniteAbelianGroup abelian_make(std::vector<std::uint32_t> factors);
inline std::size_t element_order(const FiniteAbelianGroup& a, AElem x) { return a.element_order(x); }

// A homomorphism from (A, +) into the units of a graded algebra, determined
// by the images of the factor generators.
class UnitEmbedding {
 public:
  const FiniteAbelianGroup& domain() const { return domain_; }
  const GradedBasisAlgebra& target() const { return target_; }
  const std::vector<AlgebraElement>& generator_images() const { return generators_; }
  const AlgebraElement& operator()(AElem a) const { return images_[a]; }

  // Size of the kernel; 1 when the map is injective.
  std::size_t kernel_size() const;

 private:
  UnitEmbedding(FiniteAbelianGroup d, GradedBasisAlgebra t) : domain_(std::move(d)), target_(std::move(t)) {}

  FiniteAbelianGroup domain_;
  GradedBasisAlgebra target_;
  std::vector<AlgebraElement> generators_;
  std::vector<AlgebraElement> images_;  // indexed by AElem

  friend UnitEmbedding embedding_make(const FiniteAbelianGroup&, const GradedBasisAlgebra&,
                                      std::vector<AlgebraElement>);
};

// Validates degrees, generator orders and multiplicativity on all pairs.
UnitEmbedding embedding_make(const FiniteAbelianGroup& a, const GradedBasisAlgebra& target,
                             std::vector<AlgebraElement> generator_images);

// The map sending every element to the unit.
UnitEmbedding trivial_embedding(const FiniteAbelianGroup& a, const GradedBasisAlgebra& target);

}  // namespace orbiloop
