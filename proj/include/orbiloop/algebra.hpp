#pragma once

#include <cstdint>
#include <filesystem>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "orbiloop/error.hpp"
#include "orbiloop/fingroup.hpp"
#include "orbiloop/scalar.hpp"
#include "orbiloop/sparse.hpp"

namespace orbiloop {

using BasisIndex = std::uint32_t;
using AlgebraElement = SparseVector<BasisIndex>;
using AlgebraTensor = SparseVector<std::pair<BasisIndex, BasisIndex>>;

inline constexpr std::size_t kMaxBasisSize = 128;

struct BasisElement {
  std::string name;
  int degree = 0;  // shifted grading: H_{* + dim M}
};

// Thrown when a structure-constants table violates an algebra law.
class AlgebraLawError : public ValidationError {
 public:
  enum class Law { unit, associativity, degree, commutativity };
  AlgebraLawError(Law law, std::vector<BasisIndex> witness, const std::string& msg)
      : ValidationError(msg), law_(law), witness_(std::move(witness)) {}
  Law law() const { return law_; }
  const std::vector<BasisIndex>& witness() const { return witness_; }

 private:
  Law law_;
  std::vector<BasisIndex> witness_;
};

// Graded algebra given by structure constants on a finite basis.
//
// A product entry may be marked as lying outside the representable window
// (used by the truncated Laurent model of the circle); multiplying into such
// an entry raises WindowOverflow rather than truncating.
class GradedBasisAlgebra {
 public:
  class Builder;

  const std::string& name() const { return d_->name; }
  Field field() const { return d_->field; }
  std::size_t dim() const { return d_->basis.size(); }
  const std::vector<BasisElement>& basis() const { return d_->basis; }
  BasisIndex unit() const { return d_->unit; }
  std::optional<BasisIndex> point_class() const { return d_->point_class; }
  std::int64_t euler_char() const { return d_->euler_char; }
  bool graded_commutative() const { return d_->graded_commutative; }
  const std::string& notes() const { return d_->notes; }

  // b_i * b_j, or nullptr when that product leaves the window.
  const AlgebraElement* structure_constants(BasisIndex i, BasisIndex j) const {
    const auto& e = d_->products[i * dim() + j];
    return e ? &*e : nullptr;
  }

  Scalar scalar(std::int64_t v) const { return Scalar(field(), v); }
  AlgebraElement basis_element(BasisIndex i) const { return AlgebraElement(i, scalar(1)); }
  AlgebraElement unit_element() const { return basis_element(unit()); }
  std::optional<BasisIndex> find_basis(std::string_view name) const;

  // Expressions such as "1+eps", "2*eps", "t^-1 + at^0"; a bare scalar means scalar*unit.
  AlgebraElement parse_element(std::string_view expr) const;
  std::string format(const AlgebraElement& x) const;
  // Common degree of all terms; nullopt for zero or inhomogeneous elements.
  std::optional<int> degree_of(const AlgebraElement& x) const;

  friend bool operator==(const GradedBasisAlgebra& a, const GradedBasisAlgebra& b);

 private:
  struct Data {
    std::string name;
    Field field = Field::rationals();
    std::vector<BasisElement> basis;
    BasisIndex unit = 0;
    std::optional<BasisIndex> point_class;
    std::int64_t euler_char = 0;
    bool graded_commutative = false;
    std::string notes;
    std::vector<std::optional<AlgebraElement>> products;  // row-major dim x dim
  };
  explicit GradedBasisAlgebra(std::shared_ptr<const Data> d) : d_(std::move(d)) {}

  std::shared_ptr<const Data> d_;
};

class GradedBasisAlgebra::Builder {
 public:
  Builder(std::string name, Field field);

  BasisIndex add_basis(std::string name, int degree);
  Builder& unit(BasisIndex u);
  Builder& point_class(std::optional<BasisIndex> pc);
  Builder& euler_char(std::int64_t chi);
  Builder& graded_commutative(bool flag);
  Builder& notes(std::string text);
  // Unset entries are zero.
  Builder& product(BasisIndex i, BasisIndex j, AlgebraElement value);
  Builder& product_outside_window(BasisIndex i, BasisIndex j);

  // Checks every law on all basis elements/pairs/triples; throws AlgebraLawError.
  GradedBasisAlgebra build() const;
  // Skips the law checks. Only for fault-injection fixtures.
  GradedBasisAlgebra build_unchecked() const;

 private:
  void check_shape() const;
  Data d_;
  std::vector<std::pair<std::pair<BasisIndex, BasisIndex>, std::optional<AlgebraElement>>> entries_;
};

// Re-runs the load-time law checks.
void validate_algebra(const GradedBasisAlgebra& alg);

// Like multiply, but nullopt instead of WindowOverflow.
std::optional<AlgebraElement> try_multiply(const GradedBasisAlgebra& alg, const AlgebraElement& x,
                                           const AlgebraElement& y);

// Bilinear extension of the structure constants.
AlgebraElement multiply(const GradedBasisAlgebra& alg, const AlgebraElement& x, const AlgebraElement& y);

// Lambda(a) (x) k[t, t^-1] truncated to exponents in [-window, window].
// Basis layout: t^n at index n+window, a*t^n at index 3*window+1+n.
GradedBasisAlgebra circle_model(std::uint32_t characteristic, int window);
BasisIndex circle_index(int window, int exponent, bool exterior);
// Basis indices of t^n and a*t^n with |n| <= radius.
std::vector<BasisIndex> circle_window(int window, int radius);

// Top-degree structure of the loop homology of CP^l over F_p: the unit [CP^l]
// and eps with eps^2 = 0.  eps is present only when p divides l+1.
GradedBasisAlgebra cpl_minimal_model(int l, std::uint32_t p);

GradedBasisAlgebra parse_presentation(std::string_view json_text);
GradedBasisAlgebra load_presentation(const std::filesystem::path& path);
// Inverse of parse_presentation; throws for windowed algebras.
std::string to_presentation(const GradedBasisAlgebra& alg);

struct UnitGroup {
  FiniteGroup group;  // identity is the algebra unit
  std::vector<AlgebraElement> elements;
};

// Multiplication table of a finite set of units closed under the product.
UnitGroup unit_group(const GradedBasisAlgebra& alg, const std::vector<AlgebraElement>& candidates);

// True when chi(M) vanishes in the field or a point class is available.
bool has_coproduct(const GradedBasisAlgebra& alg);

// delta(x) = chi(M) ([c0] * x) (x) [c0]; empty when chi(M) = 0 in the field.
AlgebraTensor base_coproduct(const GradedBasisAlgebra& alg, const AlgebraElement& x);

}  // namespace orbiloop
