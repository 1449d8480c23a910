#include "orbiloop/modlinalg.hpp"

#include <numeric>
#include <stdexcept>
#include <utility>

namespace orbiloop::modlinalg {

namespace {

Int mod(Int v, Int m) {
  v %= m;
  return v < 0 ? v + m : v;
}

// s*a + t*b = g = gcd(a, b), for a, b >= 0.
void ext_gcd(Int a, Int b, Int& g, Int& s, Int& t) {
  Int s0 = 1, s1 = 0, t0 = 0, t1 = 1;
  while (b != 0) {
    const Int q = a / b;
    std::tie(a, b) = std::make_pair(b, a - q * b);
    std::tie(s0, s1) = std::make_pair(s1, s0 - q * s1);
    std::tie(t0, t1) = std::make_pair(t1, t0 - q * t1);
  }
  g = a;
  s = s0;
  t = t0;
}

Int inverse_mod(Int a, Int m) {
  Int g, s, t;
  ext_gcd(mod(a, m), m, g, s, t);
  if (g != 1) throw std::logic_error("modlinalg: element not invertible");
  return mod(s, m);
}

// Applies [[s, t], [u, v]] to the pair (x, y) of vectors, reducing mod m.
void combine(std::vector<Int>& x, std::vector<Int>& y, Int s, Int t, Int u, Int v, Int m) {
  for (std::size_t k = 0; k < x.size(); ++k) {
    const Int nx = mod(mod(s, m) * x[k] + mod(t, m) * y[k], m);
    const Int ny = mod(mod(u, m) * x[k] + mod(v, m) * y[k], m);
    x[k] = nx;
    y[k] = ny;
  }
}

}  // namespace

Int gcd_mod(Int a, Int m) { return std::gcd(mod(a, m), m); }

ModMatrix::ModMatrix(std::size_t rows, std::size_t cols, Int modulus)
    : rows_(rows), cols_(cols), m_(modulus), a_(rows * cols, 0) {
  if (modulus < 1) throw std::invalid_argument("modlinalg: modulus must be >= 1");
}

void ModMatrix::set(std::size_t r, std::size_t c, Int v) { a_[r * cols_ + c] = mod(v, m_); }

std::size_t ModMatrix::push_row(const std::vector<Int>& row) {
  if (row.size() != cols_) throw std::invalid_argument("modlinalg: row length mismatch");
  for (Int v : row) a_.push_back(mod(v, m_));
  return rows_++;
}

struct Reducer {
  std::size_t R, C;
  Int m;
  std::vector<std::vector<Int>> rows;  // R rows of length C
  std::vector<std::vector<Int>> rhs;   // per rhs: length R
  bool track;
  std::vector<std::vector<Int>> vcols;  // C columns of V, each length C

  Int& a(std::size_t r, std::size_t c) { return rows[r][c]; }

  void swap_rows(std::size_t i, std::size_t j) {
    std::swap(rows[i], rows[j]);
    for (auto& b : rhs) std::swap(b[i], b[j]);
  }
  void swap_cols(std::size_t i, std::size_t j) {
    for (auto& row : rows) std::swap(row[i], row[j]);
    if (track) std::swap(vcols[i], vcols[j]);
  }

  // Row op on (k, i) so that a(i, k) becomes 0. Returns true if the pivot changed.
  bool clear_row_entry(std::size_t k, std::size_t i) {
    const Int p = a(k, k), e = a(i, k);
    if (e % p == 0) {
      const Int q = e / p;
      for (std::size_t c = 0; c < C; ++c) a(i, c) = mod(a(i, c) - q * a(k, c), m);
      for (auto& b : rhs) b[i] = mod(b[i] - q * b[k], m);
      return false;
    }
    Int g, s, t;
    ext_gcd(p, e, g, s, t);
    combine(rows[k], rows[i], s, t, -e / g, p / g, m);
    for (auto& b : rhs) {
      const Int bk = b[k], bi = b[i];
      b[k] = mod(mod(s, m) * bk + mod(t, m) * bi, m);
      b[i] = mod(mod(-e / g, m) * bk + mod(p / g, m) * bi, m);
    }
    return true;
  }

  // Column op on (k, j) so that a(k, j) becomes 0. Returns true if column k changed.
  bool clear_col_entry(std::size_t k, std::size_t j) {
    const Int p = a(k, k), e = a(k, j);
    if (e % p == 0) {
      const Int q = e / p;
      for (std::size_t r = 0; r < R; ++r) a(r, j) = mod(a(r, j) - q * a(r, k), m);
      if (track) {
        for (std::size_t r = 0; r < C; ++r) vcols[j][r] = mod(vcols[j][r] - q * vcols[k][r], m);
      }
      return false;
    }
    Int g, s, t;
    ext_gcd(p, e, g, s, t);
    const Int u = -e / g, v = p / g;
    for (std::size_t r = 0; r < R; ++r) {
      const Int ck = a(r, k), cj = a(r, j);
      a(r, k) = mod(mod(s, m) * ck + mod(t, m) * cj, m);
      a(r, j) = mod(mod(u, m) * ck + mod(v, m) * cj, m);
    }
    if (track) combine(vcols[k], vcols[j], s, t, u, v, m);
    return true;
  }

  void run(std::vector<Int>& diag) {
    const std::size_t steps = std::min(R, C);
    diag.assign(steps, 0);
    for (std::size_t k = 0; k < steps; ++k) {
      // Pivot: entry generating the largest ideal, i.e. least gcd with m.
      std::size_t pr = R, pc = C;
      Int best = m + 1;
      for (std::size_t r = k; r < R && best > 1; ++r) {
        for (std::size_t c = k; c < C; ++c) {
          if (a(r, c) == 0) continue;
          const Int g = std::gcd(a(r, c), m);
          if (g < best || (g == best && a(r, c) < a(pr, pc))) {
            best = g;
            pr = r;
            pc = c;
            if (g == 1) break;
          }
        }
      }
      if (pr == R) break;
      if (pr != k) swap_rows(pr, k);
      if (pc != k) swap_cols(pc, k);

      bool dirty = true;
      while (dirty) {
        dirty = false;
        for (std::size_t i = k + 1; i < R; ++i) {
          if (a(i, k) != 0) clear_row_entry(k, i);
        }
        for (std::size_t j = k + 1; j < C; ++j) {
          if (a(k, j) != 0 && clear_col_entry(k, j)) dirty = true;
        }
      }
      diag[k] = a(k, k);
    }
  }
};

Diagonal diagonalize(ModMatrix a, std::vector<std::vector<Int>> rhs, bool track_columns) {
  Reducer red{a.rows(), a.cols(), a.modulus(), {}, {}, track_columns, {}};
  red.rows.resize(a.rows());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    red.rows[r].resize(a.cols());
    for (std::size_t c = 0; c < a.cols(); ++c) red.rows[r][c] = a.at(r, c);
  }
  for (auto& b : rhs) {
    if (b.size() != a.rows()) throw std::invalid_argument("modlinalg: rhs length mismatch");
    for (auto& v : b) v = mod(v, a.modulus());
  }
  red.rhs = std::move(rhs);
  if (track_columns) {
    red.vcols.assign(a.cols(), std::vector<Int>(a.cols(), 0));
    for (std::size_t c = 0; c < a.cols(); ++c) red.vcols[c][c] = 1 % a.modulus();
  }

  Diagonal out;
  out.modulus = a.modulus();
  out.rows = a.rows();
  out.cols = a.cols();
  red.run(out.diagonal);
  out.rhs = std::move(red.rhs);
  if (track_columns) {
    out.v.assign(a.cols() * a.cols(), 0);
    for (std::size_t c = 0; c < a.cols(); ++c) {
      for (std::size_t r = 0; r < a.cols(); ++r) out.v[r * a.cols() + c] = red.vcols[c][r];
    }
  }
  return out;
}

std::optional<std::vector<Int>> solve(const ModMatrix& a, const std::vector<Int>& b) {
  const Int m = a.modulus();
  const Diagonal d = diagonalize(a, {b}, true);
  const auto& ub = d.rhs[0];
  std::vector<Int> y(d.cols, 0);
  for (std::size_t k = 0; k < d.rows; ++k) {
    if (k >= d.diagonal.size()) {
      if (ub[k] != 0) return std::nullopt;
      continue;
    }
    const Int dk = d.diagonal[k];
    const Int g = gcd_mod(dk, m);
    if (ub[k] % g != 0) return std::nullopt;
    if (g == m) continue;
    const Int mg = m / g;
    y[k] = mod((ub[k] / g) % mg * inverse_mod(dk / g, mg), mg);
  }
  std::vector<Int> x(d.cols, 0);
  for (std::size_t r = 0; r < d.cols; ++r) {
    Int acc = 0;
    for (std::size_t c = 0; c < d.cols; ++c) acc = mod(acc + d.v[r * d.cols + c] * y[c], m);
    x[r] = acc;
  }
  return x;
}

BigInt kernel_size(const Diagonal& d) {
  BigInt out = 1;
  for (Int dk : d.diagonal) out *= gcd_mod(dk, d.modulus);
  for (std::size_t k = d.diagonal.size(); k < d.cols; ++k) out *= d.modulus;
  return out;
}

BigInt image_size(const Diagonal& d) {
  BigInt out = 1;
  for (Int dk : d.diagonal) out *= d.modulus / gcd_mod(dk, d.modulus);
  return out;
}

RowAccumulator::RowAccumulator(std::size_t cols, Int modulus)
    : cols_(cols), m_(modulus), pivot_rows_(cols) {}

void RowAccumulator::insert(std::vector<Int> row) {
  for (auto& v : row) v = mod(v, m_);
  std::size_t lead = 0;
  while (true) {
    while (lead < cols_ && row[lead] == 0) ++lead;
    if (lead == cols_) return;
    auto& slot = pivot_rows_[lead];
    if (!slot) {
      slot = std::move(row);
      return;
    }
    auto& piv = *slot;
    const Int p = piv[lead], e = row[lead];
    if (e % p == 0) {
      const Int q = e / p;
      for (std::size_t c = lead; c < cols_; ++c) row[c] = mod(row[c] - q * piv[c], m_);
    } else {
      Int g, s, t;
      ext_gcd(p, e, g, s, t);
      combine(piv, row, s, t, -e / g, p / g, m_);
    }
  }
}

ModMatrix RowAccumulator::matrix() const {
  ModMatrix out(0, cols_, m_);
  for (const auto& r : pivot_rows_) {
    if (r) out.push_row(*r);
  }
  return out;
}

}  // namespace orbiloop::modlinalg
