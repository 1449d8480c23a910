#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace orbiloop::modlinalg {

using Int = std::int64_t;
using BigInt = boost::multiprecision::cpp_int;

// Dense integer matrix with entries kept reduced into [0, m).
class ModMatrix {
 public:
  ModMatrix(std::size_t rows, std::size_t cols, Int modulus);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Int modulus() const { return m_; }

  Int at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }
  void set(std::size_t r, std::size_t c, Int v);
  void add(std::size_t r, std::size_t c, Int v) { set(r, c, at(r, c) + v); }

  // Appends a row and returns its index.
  std::size_t push_row(const std::vector<Int>& row);

  friend struct Reducer;

 private:
  std::size_t rows_, cols_;
  Int m_;
  std::vector<Int> a_;
};

// U * A * V = diag(d_0, d_1, ...) over Z/m with U, V invertible.
struct Diagonal {
  Int modulus = 1;
  std::size_t rows = 0, cols = 0;
  std::vector<Int> diagonal;              // length min(rows, cols), zeros allowed
  std::vector<std::vector<Int>> rhs;      // U * b for each tracked right-hand side
  std::vector<Int> v;                     // cols x cols, row-major (only when tracked)
};

// Row/column reduction with Bezout (gcd) pivoting; exact over the zero divisors of Z/m.
Diagonal diagonalize(ModMatrix a, std::vector<std::vector<Int>> rhs = {}, bool track_columns = false);

// Some x with A x = b (mod m), or nullopt if none exists.
std::optional<std::vector<Int>> solve(const ModMatrix& a, const std::vector<Int>& b);

// |{x : A x = 0}| over (Z/m)^cols.
BigInt kernel_size(const Diagonal& d);
// |{A x}| over (Z/m)^cols.
BigInt image_size(const Diagonal& d);

// Streams rows into a row-equivalent matrix with at most cols rows, so that
// tall systems can be reduced without storing every equation.
class RowAccumulator {
 public:
  RowAccumulator(std::size_t cols, Int modulus);
  void insert(std::vector<Int> row);
  ModMatrix matrix() const;

 private:
  std::size_t cols_;
  Int m_;
  std::vector<std::optional<std::vector<Int>>> pivot_rows_;  // indexed by leading column
};

Int gcd_mod(Int a, Int m);  // gcd(a, m) with gcd(0, m) = m

}  // namespace orbiloop::modlinalg
