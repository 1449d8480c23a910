#include "orbiloop/cohomology.hpp"

#include <sstream>

#include "orbiloop/modlinalg.hpp"

namespace orbiloop {

namespace ml = modlinalg;

namespace {

void check_same_space(const Cochain2& x, const Cochain2& y) {
  if (!(x.group() == y.group())) throw InputError("cochains live on different groups");
  if (!(x.coeff() == y.coeff())) throw InputError("cochains have different coefficient groups");
}

void require_cocycle(const Cochain2& c, const char* which) {
  if (auto check = is_cocycle(c); !check) {
    const auto& w = *check.witness;
    std::ostringstream os;
    os << which << " is not a cocycle: identity fails at (" << w[0] << "," << w[1] << "," << w[2] << ")";
    throw ValidationError(os.str());
  }
}

// Non-identity elements in index order; these index the unknowns.
std::vector<Elem> non_identity(const FiniteGroup& g) {
  std::vector<Elem> out;
  for (Elem x = 0; x < g.order(); ++x) {
    if (x != g.identity()) out.push_back(x);
  }
  return out;
}

std::uint64_t search_space(const FiniteGroup& g, const FiniteAbelianGroup& a) {
  std::uint64_t size = 1;
  for (std::size_t i = 1; i < g.order(); ++i) {
    size *= a.order();
    if (size > kBruteForceBound) return kBruteForceBound + 1;
  }
  return size;
}

// Matrix of d1 restricted to normalized cochains: rows (g,h), columns xi(x), x != e.
ml::ModMatrix d1_matrix(const FiniteGroup& g, ml::Int m) {
  const auto others = non_identity(g);
  std::vector<std::size_t> col(g.order(), 0);
  for (std::size_t i = 0; i < others.size(); ++i) col[others[i]] = i;
  ml::ModMatrix mat(others.size() * others.size(), others.size(), m);
  std::size_t row = 0;
  for (Elem x : others) {
    for (Elem y : others) {
      mat.add(row, col[x], 1);
      mat.add(row, col[y], 1);
      if (const Elem xy = g.mul(x, y); xy != g.identity()) mat.add(row, col[xy], -1);
      ++row;
    }
  }
  return mat;
}

// d2 on normalized 2-cochains, streamed into at most (n-1)^2 rows.
ml::ModMatrix d2_matrix(const FiniteGroup& g, ml::Int m) {
  const auto others = non_identity(g);
  const std::size_t k = others.size();
  std::vector<std::size_t> pos(g.order(), 0);
  for (std::size_t i = 0; i < k; ++i) pos[others[i]] = i;
  const Elem e = g.identity();
  ml::RowAccumulator acc(k * k, m);
  std::vector<ml::Int> row(k * k);
  auto term = [&](Elem a, Elem b, ml::Int sign) {
    if (a != e && b != e) row[pos[a] * k + pos[b]] += sign;
  };
  for (Elem x : others) {
    for (Elem y : others) {
      for (Elem z : others) {
        std::fill(row.begin(), row.end(), 0);
        term(y, z, 1);
        term(g.mul(x, y), z, -1);
        term(x, g.mul(y, z), 1);
        term(x, y, -1);
        acc.insert(row);
      }
    }
  }
  return acc.matrix();
}

std::uint64_t h2_linalg(const FiniteGroup& g, const FiniteAbelianGroup& a) {
  ml::BigInt total = 1;
  for (std::uint32_t m : a.factors()) {
    if (m == 1) continue;
    const auto cycles = ml::kernel_size(ml::diagonalize(d2_matrix(g, m)));
    const auto bounds = ml::image_size(ml::diagonalize(d1_matrix(g, m)));
    if (cycles % bounds != 0) throw std::logic_error("h2_order: |B^2| does not divide |Z^2|");
    total *= cycles / bounds;
  }
  return static_cast<std::uint64_t>(total);
}

// Counts normalized cocycles by depth-first search over the values c(x, y),
// x, y != e, with propagation of every identity that has one unknown left
// with coefficient +-1.
class CocycleCounter {
 public:
  CocycleCounter(const FiniteGroup& g, const FiniteAbelianGroup& a) : g_(g), a_(a) {
    others_ = non_identity(g);
    k_ = others_.size();
    pos_.assign(g.order(), 0);
    for (std::size_t i = 0; i < k_; ++i) pos_[others_[i]] = i;
    const Elem e = g.identity();
    watchers_.resize(k_ * k_);
    for (Elem x : others_) {
      for (Elem y : others_) {
        for (Elem z : others_) {
          Equation eq;
          auto term = [&](Elem p, Elem q, int sign) {
            if (p == e || q == e) return;
            const std::size_t v = pos_[p] * k_ + pos_[q];
            for (auto& t : eq.terms) {
              if (t.first == v) {
                t.second += sign;
                return;
              }
            }
            eq.terms.emplace_back(v, sign);
          };
          term(y, z, 1);
          term(g.mul(x, y), z, -1);
          term(x, g.mul(y, z), 1);
          term(x, y, -1);
          std::erase_if(eq.terms, [](const auto& t) { return t.second == 0; });
          if (eq.terms.empty()) continue;
          for (const auto& t : eq.terms) watchers_[t.first].push_back(equations_.size());
          equations_.push_back(std::move(eq));
        }
      }
    }
    value_.assign(k_ * k_, kUnset);
  }

  std::uint64_t count() {
    count_ = 0;
    search(0);
    return count_;
  }

 private:
  static constexpr AElem kUnset = ~AElem{0};
  struct Equation {
    std::vector<std::pair<std::size_t, int>> terms;
  };

  // Returns false on contradiction. Newly assigned variables are appended to trail.
  bool propagate(std::size_t var, std::vector<std::size_t>& trail) {
    std::vector<std::size_t> queue{var};
    while (!queue.empty()) {
      const std::size_t v = queue.back();
      queue.pop_back();
      for (std::size_t ei : watchers_[v]) {
        const auto& eq = equations_[ei];
        AElem sum = a_.zero();
        std::optional<std::pair<std::size_t, int>> open;
        std::size_t n_open = 0;
        for (const auto& [u, coef] : eq.terms) {
          if (value_[u] == kUnset) {
            ++n_open;
            open = {u, coef};
          } else {
            sum = a_.add(sum, a_.times(coef, value_[u]));
          }
        }
        if (n_open == 0) {
          if (sum != a_.zero()) return false;
        } else if (n_open == 1 && (open->second == 1 || open->second == -1)) {
          // coef * x + sum = 0
          const AElem x = open->second == 1 ? a_.neg(sum) : sum;
          value_[open->first] = x;
          trail.push_back(open->first);
          queue.push_back(open->first);
        }
      }
    }
    return true;
  }

  void search(std::size_t next) {
    while (next < value_.size() && value_[next] != kUnset) ++next;
    if (next == value_.size()) {
      ++count_;
      return;
    }
    for (AElem x = 0; x < a_.order(); ++x) {
      std::vector<std::size_t> trail{next};
      value_[next] = x;
      if (propagate(next, trail)) search(next + 1);
      for (std::size_t v : trail) value_[v] = kUnset;
    }
  }

  const FiniteGroup& g_;
  const FiniteAbelianGroup& a_;
  std::vector<Elem> others_;
  std::size_t k_ = 0;
  std::vector<std::size_t> pos_;
  std::vector<Equation> equations_;
  std::vector<std::vector<std::size_t>> watchers_;
  std::vector<AElem> value_;
  std::uint64_t count_ = 0;
};

std::uint64_t h2_brute(const FiniteGroup& g, const FiniteAbelianGroup& a) {
  if (search_space(g, a) > kBruteForceBound) {
    throw InputError("brute force: |A|^(|G|-1) exceeds " + std::to_string(kBruteForceBound));
  }
  // |B^2| = |C^1| / |Z^1|, where Z^1 = Hom(G, A) is counted directly.
  const auto others = non_identity(g);
  std::vector<AElem> xi(g.order(), a.zero());
  const std::uint64_t total = search_space(g, a);
  std::uint64_t homs = 0;
  for (std::uint64_t code = 0; code < total; ++code) {
    std::uint64_t c = code;
    for (std::size_t i = others.size(); i-- > 0;) {
      xi[others[i]] = static_cast<AElem>(c % a.order());
      c /= a.order();
    }
    bool closed = true;
    for (Elem x = 0; x < g.order() && closed; ++x) {
      for (Elem y = 0; y < g.order() && closed; ++y) closed = a.add(xi[x], xi[y]) == xi[g.mul(x, y)];
    }
    homs += closed;
  }
  const std::uint64_t boundaries = total / homs;
  const std::uint64_t cycles = CocycleCounter(g, a).count();
  if (cycles % boundaries != 0) throw std::logic_error("h2_order: |B^2| does not divide |Z^2|");
  return cycles / boundaries;
}

}  // namespace

Cochain1::Cochain1(FiniteGroup g, FiniteAbelianGroup a, std::vector<AElem> values)
    : g_(std::move(g)), a_(std::move(a)), values_(std::move(values)) {
  if (values_.size() != g_.order()) {
    throw InputError("1-cochain has " + std::to_string(values_.size()) + " values, expected " +
                     std::to_string(g_.order()));
  }
  for (AElem v : values_) {
    if (v >= a_.order()) throw InputError("1-cochain value out of range");
  }
  if (values_[g_.identity()] != a_.zero()) {
    throw ValidationError("1-cochain is not normalized: xi(e) = " + a_.name(values_[g_.identity()]));
  }
}

Cochain1 Cochain1::zero(FiniteGroup g, FiniteAbelianGroup a) {
  const std::size_t n = g.order();
  return Cochain1(std::move(g), std::move(a), std::vector<AElem>(n, 0));
}

Cochain2::Cochain2(FiniteGroup g, FiniteAbelianGroup a, std::vector<AElem> values)
    : g_(std::move(g)), a_(std::move(a)), values_(std::move(values)) {
  const std::size_t n = g_.order();
  if (values_.size() != n * n) {
    throw InputError("2-cochain has " + std::to_string(values_.size()) + " values, expected " +
                     std::to_string(n * n));
  }
  for (AElem v : values_) {
    if (v >= a_.order()) throw InputError("2-cochain value out of range");
  }
  const Elem e = g_.identity();
  for (Elem x = 0; x < n; ++x) {
    if ((*this)(e, x) != a_.zero() || (*this)(x, e) != a_.zero()) {
      throw ValidationError("2-cochain is not normalized at (e," + std::to_string(x) + ") or (" +
                            std::to_string(x) + ",e)");
    }
  }
}

Cochain2 Cochain2::zero(FiniteGroup g, FiniteAbelianGroup a) {
  const std::size_t n = g.order();
  return Cochain2(std::move(g), std::move(a), std::vector<AElem>(n * n, 0));
}

Cochain2 Cochain2::normalized(FiniteGroup g, FiniteAbelianGroup a, std::vector<AElem> values) {
  const std::size_t n = g.order();
  if (values.size() == n * n) {
    const Elem e = g.identity();
    for (AElem v : values) {
      if (v >= a.order()) throw InputError("2-cochain value out of range");
    }
    const AElem shift = values[e * n + e];
    for (auto& v : values) v = a.sub(v, shift);
  }
  return Cochain2(std::move(g), std::move(a), std::move(values));
}

void Cochain2::check_compatible(const Cochain2& o) const { check_same_space(*this, o); }

Cochain2 Cochain2::operator+(const Cochain2& o) const {
  check_compatible(o);
  std::vector<AElem> v(values_.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = a_.add(values_[i], o.values_[i]);
  return Cochain2(g_, a_, std::move(v));
}

Cochain2 Cochain2::operator-(const Cochain2& o) const {
  check_compatible(o);
  std::vector<AElem> v(values_.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = a_.sub(values_[i], o.values_[i]);
  return Cochain2(g_, a_, std::move(v));
}

Cochain2 Cochain2::times(std::int64_t k) const {
  std::vector<AElem> v(values_.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = a_.times(k, values_[i]);
  return Cochain2(g_, a_, std::move(v));
}

Cochain2 d1(const Cochain1& xi) {
  const auto& g = xi.group();
  const auto& a = xi.coeff();
  const std::size_t n = g.order();
  std::vector<AElem> v(n * n);
  for (Elem x = 0; x < n; ++x) {
    for (Elem y = 0; y < n; ++y) v[x * n + y] = a.sub(a.add(xi(x), xi(y)), xi(g.mul(x, y)));
  }
  return Cochain2(g, a, std::move(v));
}

CocycleCheck is_cocycle(const Cochain2& c) {
  const auto& g = c.group();
  const auto& a = c.coeff();
  const auto n = static_cast<Elem>(g.order());
  for (Elem x = 0; x < n; ++x) {
    for (Elem y = 0; y < n; ++y) {
      for (Elem z = 0; z < n; ++z) {
        const AElem lhs = a.add(c(y, z), c(x, g.mul(y, z)));
        const AElem rhs = a.add(c(g.mul(x, y), z), c(x, y));
        if (lhs != rhs) return {false, std::array<Elem, 3>{x, y, z}};
      }
    }
  }
  return {};
}

Cochain2 carrying_cocycle(const FiniteGroup& g, const FiniteAbelianGroup& a, AElem value,
                          std::optional<Elem> generator) {
  if (value >= a.order()) throw InputError("carrying cocycle: value out of range");
  const std::size_t n = g.order();
  if (!generator) generator = g.cyclic_generator();
  if (!generator) throw InputError("carrying cocycle: group " + g.label() + " is not cyclic");
  if (*generator >= n || g.element_order(*generator) != n) {
    throw InputError("carrying cocycle: element " + std::to_string(*generator) + " does not generate the group");
  }
  std::vector<std::size_t> exponent(n);
  Elem x = g.identity();
  for (std::size_t i = 0; i < n; ++i, x = g.mul(x, *generator)) exponent[x] = i;
  std::vector<AElem> v(n * n);
  for (Elem p = 0; p < n; ++p) {
    for (Elem q = 0; q < n; ++q) v[p * n + q] = exponent[p] + exponent[q] >= n ? value : a.zero();
  }
  return Cochain2(g, a, std::move(v));
}

std::optional<Cochain1> solve_coboundary(const Cochain2& c, const Cochain2& c2) {
  check_same_space(c, c2);
  require_cocycle(c, "first cochain");
  require_cocycle(c2, "second cochain");
  const auto& g = c.group();
  const auto& a = c.coeff();
  const auto others = non_identity(g);
  const Cochain2 diff = c - c2;

  std::vector<FiniteAbelianGroup::Tuple> xi(g.order(), FiniteAbelianGroup::Tuple(a.rank(), 0));
  for (std::size_t f = 0; f < a.rank(); ++f) {
    const std::uint32_t m = a.factors()[f];
    if (m == 1 || others.empty()) continue;
    std::vector<ml::Int> rhs;
    rhs.reserve(others.size() * others.size());
    for (Elem x : others) {
      for (Elem y : others) rhs.push_back(a.component(diff(x, y), f));
    }
    auto sol = ml::solve(d1_matrix(g, m), rhs);
    if (!sol) return std::nullopt;
    for (std::size_t i = 0; i < others.size(); ++i) xi[others[i]][f] = static_cast<std::uint32_t>((*sol)[i]);
  }
  std::vector<AElem> values(g.order());
  for (Elem x = 0; x < g.order(); ++x) values[x] = a.encode(xi[x]);
  Cochain1 out(g, a, std::move(values));
  if (!(d1(out) + c2 == c)) throw std::logic_error("solve_coboundary: solver returned a non-witness");
  return out;
}

std::optional<Cochain1> brute_force_cohomologous(const Cochain2& c, const Cochain2& c2) {
  check_same_space(c, c2);
  require_cocycle(c, "first cochain");
  require_cocycle(c2, "second cochain");
  const auto& g = c.group();
  const auto& a = c.coeff();
  const std::uint64_t total = search_space(g, a);
  if (total > kBruteForceBound) {
    throw InputError("brute force: |A|^(|G|-1) exceeds " + std::to_string(kBruteForceBound));
  }
  const auto others = non_identity(g);
  const std::size_t n = g.order();
  std::vector<AElem> xi(n, a.zero());
  // Odometer with the last non-identity element varying fastest, so the first
  // hit is lexicographically least.
  for (std::uint64_t code = 0; code < total; ++code) {
    std::uint64_t r = code;
    for (std::size_t i = others.size(); i-- > 0;) {
      xi[others[i]] = static_cast<AElem>(r % a.order());
      r /= a.order();
    }
    bool ok = true;
    for (Elem x = 0; x < n && ok; ++x) {
      for (Elem y = 0; y < n && ok; ++y) {
        ok = a.add(a.sub(a.add(xi[x], xi[y]), xi[g.mul(x, y)]), c2(x, y)) == c(x, y);
      }
    }
    if (ok) return Cochain1(g, a, xi);
  }
  return std::nullopt;
}

std::uint64_t h2_order(const FiniteGroup& g, const FiniteAbelianGroup& a, Method method) {
  return method == Method::linalg ? h2_linalg(g, a) : h2_brute(g, a);
}

std::size_t class_order(const Cochain2& c, Method method) {
  require_cocycle(c, "cochain");
  const Cochain2 zero = Cochain2::zero(c.group(), c.coeff());
  for (std::size_t k = 1;; ++k) {
    const Cochain2 multiple = c.times(static_cast<std::int64_t>(k));
    const bool trivial = method == Method::linalg ? solve_coboundary(multiple, zero).has_value()
                                                  : brute_force_cohomologous(multiple, zero).has_value();
    if (trivial) return k;
  }
}

bool is_conjugation_invariant(const Cochain2& c) {
  const auto& g = c.group();
  const auto n = static_cast<Elem>(g.order());
  for (Elem s = 0; s < n; ++s) {
    for (Elem x = 0; x < n; ++x) {
      for (Elem y = 0; y < n; ++y) {
        if (c(x, y) != c(g.conj(s, x), g.conj(s, y))) return false;
      }
    }
  }
  return true;
}

}  // namespace orbiloop
