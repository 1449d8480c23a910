#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "orbiloop/abelian.hpp"
#include "orbiloop/algebra.hpp"
#include "orbiloop/cohomology.hpp"
#include "orbiloop/fingroup.hpp"

namespace orbiloop {

// Basis element x (x) g of H (x) k[G], encoded as x * |G| + g.
using TwistedKey = std::uint32_t;
using TwistedElement = SparseVector<TwistedKey>;
using TwistedTensor = SparseVector<std::pair<TwistedKey, TwistedKey>>;
using TwistedTriple = SparseVector<std::tuple<TwistedKey, TwistedKey, TwistedKey>>;

// The crossed product H (x)_c k[G]:
//   (x (x) g)(y (x) h) = x y phi(c(g,h)) (x) gh
//   delta_c(x (x) g) = sum_k delta(x phi(-c(gk, k^-1))) (x) (gk (x) k^-1)
// where phi embeds the coefficient group A into the units of H.
class TwistedAlgebra {
 public:
  // Requires matching (G, A, H) across the pieces, c a cocycle, and for
  // nonabelian G a conjugation-invariant c.
  static TwistedAlgebra make(GradedBasisAlgebra base, FiniteGroup group, UnitEmbedding embed, Cochain2 cocycle);
  // Skips the cocycle and invariance checks; for probing arbitrary cochains.
  static TwistedAlgebra make_unchecked(GradedBasisAlgebra base, FiniteGroup group, UnitEmbedding embed,
                                       Cochain2 cocycle);

  const GradedBasisAlgebra& base() const { return base_; }
  const FiniteGroup& group() const { return group_; }
  const FiniteAbelianGroup& coeff() const { return embed_.domain(); }
  const UnitEmbedding& embedding() const { return embed_; }
  const Cochain2& cocycle() const { return cocycle_; }

  std::size_t dim() const { return base_.dim() * group_.order(); }
  TwistedKey key(BasisIndex x, Elem g) const { return static_cast<TwistedKey>(x * group_.order() + g); }
  BasisIndex base_of(TwistedKey k) const { return static_cast<BasisIndex>(k / group_.order()); }
  Elem group_of(TwistedKey k) const { return static_cast<Elem>(k % group_.order()); }

  TwistedElement basis_element(BasisIndex x, Elem g) const {
    return TwistedElement(key(x, g), base_.scalar(1));
  }
  TwistedElement unit_element() const { return basis_element(base_.unit(), group_.identity()); }

  // nullopt when a base product leaves the circle-model window.
  std::optional<TwistedElement> try_product(const TwistedElement& u, const TwistedElement& v) const;
  TwistedElement product(const TwistedElement& u, const TwistedElement& v) const;

  bool has_coproduct() const { return orbiloop::has_coproduct(base_); }
  TwistedTensor coproduct(const TwistedElement& u) const;

  std::string format_key(TwistedKey k) const;
  std::string format(const TwistedElement& u) const;
  // Tab-separated table over all basis pairs in index order.
  std::string multiplication_table() const;

 private:
  TwistedAlgebra(GradedBasisAlgebra base, FiniteGroup group, UnitEmbedding embed, Cochain2 cocycle)
      : base_(std::move(base)), group_(std::move(group)), embed_(std::move(embed)), cocycle_(std::move(cocycle)) {}

  GradedBasisAlgebra base_;
  FiniteGroup group_;
  UnitEmbedding embed_;
  Cochain2 cocycle_;
};

TwistedElement twisted_product(const TwistedAlgebra& ta, const TwistedElement& u, const TwistedElement& v);
TwistedTensor twisted_coproduct(const TwistedAlgebra& ta, const TwistedElement& u);

// Outcome of an exhaustive sweep; pairs whose products leave the window are skipped.
struct Sweep {
  std::size_t checked = 0;
  std::size_t skipped = 0;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

// F_xi(x (x) g) = phi(xi(g)) x (x) g from the (c' + d xi)-twisted algebra to the c'-twisted one.
class XiMap {
 public:
  const TwistedAlgebra& source() const { return src_; }
  const TwistedAlgebra& target() const { return dst_; }
  const Cochain1& xi() const { return xi_; }

  TwistedElement operator()(const TwistedElement& u) const;
  TwistedTensor operator()(const TwistedTensor& t) const;  // F (x) F

  Sweep check_multiplicative() const;
  // (F (x) F) delta_c = delta_c' F on every basis element; empty sweep when
  // the coproduct is undefined.
  Sweep check_comultiplicative() const;
  bool is_bijective() const;

 private:
  XiMap(TwistedAlgebra src, TwistedAlgebra dst, Cochain1 xi)
      : src_(std::move(src)), dst_(std::move(dst)), xi_(std::move(xi)) {}
  TwistedAlgebra src_, dst_;
  Cochain1 xi_;
  friend XiMap f_xi_map(const TwistedAlgebra&, const TwistedAlgebra&, const Cochain1&);
};

// Throws ValidationError naming (g, h) when src.cocycle != dst.cocycle + d(xi).
XiMap f_xi_map(const TwistedAlgebra& src, const TwistedAlgebra& dst, const Cochain1& xi);

// The span of x (x) sigma_C, sigma_C the sum over a conjugacy class C.
struct InvariantPart {
  ConjugacyPartition classes;
  std::vector<std::pair<BasisIndex, std::size_t>> basis;  // (base index, class index)
  std::size_t checked_pairs = 0;
  std::size_t skipped_pairs = 0;
  bool whole_algebra = false;  // true when every class is a singleton
};

// Throws ValidationError if the span is not closed under the twisted product.
InvariantPart invariant_part(const TwistedAlgebra& ta);
TwistedElement class_sum_element(const TwistedAlgebra& ta, const InvariantPart& part, std::size_t i);

struct TqftFailure {
  std::string axiom;
  std::vector<TwistedKey> witness;
  std::string detail;
};

struct TqftReport {
  bool associativity = true;
  std::optional<bool> coassociativity;  // nullopt: coproduct undefined
  std::optional<bool> frobenius;
  std::optional<bool> cocommutativity;  // informational; never a failure
  std::size_t checked_triples = 0, skipped_triples = 0;
  std::size_t checked_pairs = 0, skipped_pairs = 0;
  std::vector<TqftFailure> failures;
  bool passed() const { return failures.empty(); }
};

// Associativity on all basis triples, coassociativity on all basis elements
// and the Frobenius relation on all basis pairs, restricted to basis elements
// whose base index lies in `window` (all of them when empty).
TqftReport check_tqft(const TwistedAlgebra& ta, std::span<const BasisIndex> window = {});

struct SplittingVerdict {
  bool splits = false;
  std::optional<Cochain1> witness;
  bool checked_iso = false;
  std::uint64_t h2_order = 0;
  std::optional<std::size_t> obstruction_order;  // order of [c] when it does not split
  std::vector<std::string> warnings;
  std::vector<std::string> failures;
  std::string summary() const;
};

// Decides whether c is a coboundary and, if so, verifies F_xi onto the
// untwisted algebra on every basis pair.
SplittingVerdict splitting_verdict(const TwistedAlgebra& ta);

}  // namespace orbiloop
