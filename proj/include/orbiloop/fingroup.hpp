#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "orbiloop/error.hpp"

namespace orbiloop {

// Group elements are dense indices 0..n-1.
using Elem = std::uint32_t;

inline constexpr std::size_t kMaxGroupOrder = 64;

// A finite group stored as a validated multiplication table.
//
// Instances are immutable and share their table, so copies are cheap.  The
// identity is discovered by scan and need not be index 0.
class FiniteGroup {
 public:
  std::size_t order() const { return d_->n; }
  Elem identity() const { return d_->identity; }
  Elem mul(Elem g, Elem h) const { return d_->table[g * d_->n + h]; }
  Elem inv(Elem g) const { return d_->inverse[g]; }
  Elem conj(Elem s, Elem g) const { return mul(mul(s, g), inv(s)); }

  std::size_t element_order(Elem g) const;
  bool is_abelian() const;
  // Lowest-index element generating the whole group, if the group is cyclic.
  std::optional<Elem> cyclic_generator() const;

  std::vector<std::vector<Elem>> table() const;
  const std::string& label() const { return d_->label; }

  friend bool operator==(const FiniteGroup& a, const FiniteGroup& b) {
    return a.d_ == b.d_ || (a.d_->n == b.d_->n && a.d_->table == b.d_->table);
  }

 private:
  struct Data {
    std::size_t n = 0;
    std::vector<Elem> table;  // row-major, table[g*n+h] = g*h
    Elem identity = 0;
    std::vector<Elem> inverse;
    std::string label;
  };
  explicit FiniteGroup(std::shared_ptr<const Data> d) : d_(std::move(d)) {}
  static FiniteGroup validated(std::size_t n, std::vector<Elem> table, std::string label);

  std::shared_ptr<const Data> d_;

  friend FiniteGroup make_cyclic(std::size_t n);
  friend FiniteGroup make_from_table(const std::vector<std::vector<Elem>>& table);
  friend FiniteGroup make_product(const FiniteGroup& g, const FiniteGroup& h);
};

// Z/n with table[i][j] = (i+j) mod n.
FiniteGroup make_cyclic(std::size_t n);

// Validates identity, inverses and associativity; errors name the witness.
FiniteGroup make_from_table(const std::vector<std::vector<Elem>>& table);

// Direct product; the pair (g,h) is encoded as g*|H|+h.
FiniteGroup make_product(const FiniteGroup& g, const FiniteGroup& h);

struct ConjugacyPartition {
  std::vector<std::vector<Elem>> classes;  // each sorted, ordered by least member
  std::vector<std::size_t> class_of;       // element -> index into classes
};

ConjugacyPartition conjugacy_classes(const FiniteGroup& g);

}  // namespace orbiloop
