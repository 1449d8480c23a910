#pragma once

#include <map>
#include <utility>

#include "orbiloop/scalar.hpp"

namespace orbiloop {

// Finite formal linear combination sum c_k * [k] over exact scalars.
// Zero coefficients are never stored, so equality is structural.
template <class Key>
class SparseVector {
 public:
  using Terms = std::map<Key, Scalar>;

  SparseVector() = default;
  SparseVector(const Key& k, const Scalar& c) { add(k, c); }

  void add(const Key& k, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(k, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  void add_scaled(const SparseVector& other, const Scalar& c) {
    if (c.is_zero()) return;
    for (const auto& [k, v] : other.terms_) add(k, v * c);
  }

  SparseVector& operator+=(const SparseVector& o) {
    for (const auto& [k, v] : o.terms_) add(k, v);
    return *this;
  }
  friend SparseVector operator+(SparseVector a, const SparseVector& b) { return a += b; }

  SparseVector scaled(const Scalar& c) const {
    SparseVector r;
    r.add_scaled(*this, c);
    return r;
  }

  // Coefficient at k, or nullptr when absent (zero).
  const Scalar* find(const Key& k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? nullptr : &it->second;
  }

  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const Terms& terms() const { return terms_; }
  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }

  friend bool operator==(const SparseVector& a, const SparseVector& b) { return a.terms_ == b.terms_; }

 private:
  Terms terms_;
};

}  // namespace orbiloop
