#include "orbiloop/twisted.hpp"

#include <map>
#include <numeric>
#include <sstream>

namespace orbiloop {

namespace {

std::string pair_name(const TwistedAlgebra& ta, TwistedKey a, TwistedKey b) {
  return "(" + ta.format_key(a) + ", " + ta.format_key(b) + ")";
}

bool same_embedding(const UnitEmbedding& a, const UnitEmbedding& b) {
  return a.domain() == b.domain() && a.target() == b.target() && a.generator_images() == b.generator_images();
}

void check_pieces(const GradedBasisAlgebra& base, const FiniteGroup& group, const UnitEmbedding& embed,
                  const Cochain2& cocycle) {
  if (!(embed.target() == base)) throw InputError("twisted algebra: embedding does not target the base algebra");
  if (!(cocycle.group() == group)) throw InputError("twisted algebra: cocycle lives on a different group");
  if (!(cocycle.coeff() == embed.domain())) {
    throw InputError("twisted algebra: cocycle coefficients differ from the embedding domain");
  }
}

// Rank of the columns over the algebra's field by Gaussian elimination.
std::size_t rank(std::vector<std::vector<Scalar>> m) {
  if (m.empty()) return 0;
  const std::size_t rows = m.size(), cols = m[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c].is_zero()) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    const Scalar inv = m[r][c].inverse();
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c].is_zero()) continue;
      const Scalar f = m[i][c] * inv;
      for (std::size_t j = c; j < cols; ++j) m[i][j] = m[i][j] - f * m[r][j];
    }
    ++r;
  }
  return r;
}

// Basis-pair products, memoized; nullopt entries overflowed.
class ProductCache {
 public:
  explicit ProductCache(const TwistedAlgebra& ta) : ta_(ta) {}

  const std::optional<TwistedElement>& basis(TwistedKey a, TwistedKey b) {
    auto it = cache_.find({a, b});
    if (it != cache_.end()) return it->second;
    auto value = ta_.try_product(TwistedElement(a, ta_.base().scalar(1)), TwistedElement(b, ta_.base().scalar(1)));
    return cache_.emplace(std::make_pair(a, b), std::move(value)).first->second;
  }

  std::optional<TwistedElement> mul(const TwistedElement& u, const TwistedElement& v) {
    TwistedElement out;
    for (const auto& [a, x] : u) {
      for (const auto& [b, y] : v) {
        const auto& p = basis(a, b);
        if (!p) return std::nullopt;
        out.add_scaled(*p, x * y);
      }
    }
    return out;
  }

 private:
  const TwistedAlgebra& ta_;
  std::map<std::pair<TwistedKey, TwistedKey>, std::optional<TwistedElement>> cache_;
};

}  // namespace

TwistedAlgebra TwistedAlgebra::make(GradedBasisAlgebra base, FiniteGroup group, UnitEmbedding embed,
                                    Cochain2 cocycle) {
  check_pieces(base, group, embed, cocycle);
  if (auto check = is_cocycle(cocycle); !check) {
    const auto& w = *check.witness;
    std::ostringstream os;
    os << "twisted algebra: cochain is not a cocycle at (" << w[0] << "," << w[1] << "," << w[2] << ")";
    throw ValidationError(os.str());
  }
  if (!group.is_abelian() && !is_conjugation_invariant(cocycle)) {
    throw ValidationError("twisted algebra: cocycle on a nonabelian group is not conjugation invariant");
  }
  return TwistedAlgebra(std::move(base), std::move(group), std::move(embed), std::move(cocycle));
}

TwistedAlgebra TwistedAlgebra::make_unchecked(GradedBasisAlgebra base, FiniteGroup group, UnitEmbedding embed,
                                              Cochain2 cocycle) {
  check_pieces(base, group, embed, cocycle);
  return TwistedAlgebra(std::move(base), std::move(group), std::move(embed), std::move(cocycle));
}

std::optional<TwistedElement> TwistedAlgebra::try_product(const TwistedElement& u, const TwistedElement& v) const {
  TwistedElement out;
  for (const auto& [ku, a] : u) {
    for (const auto& [kv, b] : v) {
      const Elem g = group_of(ku), h = group_of(kv);
      const AlgebraElement* xy = base_.structure_constants(base_of(ku), base_of(kv));
      if (!xy) return std::nullopt;
      auto twisted = try_multiply(base_, *xy, embed_(cocycle_(g, h)));
      if (!twisted) return std::nullopt;
      const Elem gh = group_.mul(g, h);
      const Scalar ab = a * b;
      for (const auto& [z, c] : *twisted) out.add(key(z, gh), c * ab);
    }
  }
  return out;
}

TwistedElement TwistedAlgebra::product(const TwistedElement& u, const TwistedElement& v) const {
  auto p = try_product(u, v);
  if (!p) throw WindowOverflow("twisted product " + format(u) + " * " + format(v) + " leaves the window");
  return *std::move(p);
}

TwistedTensor TwistedAlgebra::coproduct(const TwistedElement& u) const {
  const auto& a = coeff();
  TwistedTensor out;
  for (const auto& [ku, coef] : u) {
    const Elem g = group_of(ku);
    const AlgebraElement x = base_.basis_element(base_of(ku));
    for (Elem k = 0; k < group_.order(); ++k) {
      const Elem gk = group_.mul(g, k), kinv = group_.inv(k);
      const AlgebraElement z = multiply(base_, x, embed_(a.neg(cocycle_(gk, kinv))));
      for (const auto& [pair, w] : base_coproduct(base_, z)) {
        out.add({key(pair.first, gk), key(pair.second, kinv)}, w * coef);
      }
    }
  }
  return out;
}

std::string TwistedAlgebra::format_key(TwistedKey k) const {
  return base_.basis()[base_of(k)].name + "⊗" + std::to_string(group_of(k));
}

std::string TwistedAlgebra::format(const TwistedElement& u) const {
  if (u.empty()) return "0";
  std::string out;
  for (const auto& [k, c] : u) {
    if (!out.empty()) out += " + ";
    if (!c.is_one()) out += c.to_string() + "*";
    out += format_key(k);
  }
  return out;
}

std::string TwistedAlgebra::multiplication_table() const {
  std::ostringstream os;
  os << "# base " << base_.name() << " over " << base_.field().name() << "; group " << group_.label()
     << "; coefficients";
  for (auto m : coeff().factors()) os << " Z/" << m;
  os << "\n# basis:";
  for (TwistedKey k = 0; k < dim(); ++k) os << " " << format_key(k);
  os << "\n";
  for (TwistedKey a = 0; a < dim(); ++a) {
    for (TwistedKey b = 0; b < dim(); ++b) {
      auto p = try_product(TwistedElement(a, base_.scalar(1)), TwistedElement(b, base_.scalar(1)));
      os << format_key(a) << "\t" << format_key(b) << "\t→\t" << (p ? format(*p) : "overflow") << "\n";
    }
  }
  return os.str();
}

TwistedElement twisted_product(const TwistedAlgebra& ta, const TwistedElement& u, const TwistedElement& v) {
  return ta.product(u, v);
}

TwistedTensor twisted_coproduct(const TwistedAlgebra& ta, const TwistedElement& u) {
  return ta.coproduct(u);
}

XiMap f_xi_map(const TwistedAlgebra& src, const TwistedAlgebra& dst, const Cochain1& xi) {
  if (!(src.base() == dst.base()) || !(src.group() == dst.group()) ||
      !same_embedding(src.embedding(), dst.embedding())) {
    throw InputError("F_xi: source and target must share base algebra, group and embedding");
  }
  if (!(xi.group() == src.group()) || !(xi.coeff() == src.coeff())) {
    throw InputError("F_xi: xi lives on a different (G, A)");
  }
  const auto& g = src.group();
  const auto& a = src.coeff();
  const Cochain2 dxi = d1(xi);
  for (Elem x = 0; x < g.order(); ++x) {
    for (Elem y = 0; y < g.order(); ++y) {
      if (src.cocycle()(x, y) != a.add(dst.cocycle()(x, y), dxi(x, y))) {
        throw ValidationError("F_xi: c(" + std::to_string(x) + "," + std::to_string(y) + ") = " +
                              a.name(src.cocycle()(x, y)) + " but c'(g,h) + dxi(g,h) = " +
                              a.name(a.add(dst.cocycle()(x, y), dxi(x, y))));
      }
    }
  }
  return XiMap(src, dst, xi);
}

TwistedElement XiMap::operator()(const TwistedElement& u) const {
  const auto& base = src_.base();
  TwistedElement out;
  for (const auto& [k, c] : u) {
    const Elem g = src_.group_of(k);
    const AlgebraElement img = multiply(base, src_.embedding()(xi_(g)), base.basis_element(src_.base_of(k)));
    for (const auto& [z, w] : img) out.add(src_.key(z, g), w * c);
  }
  return out;
}

TwistedTensor XiMap::operator()(const TwistedTensor& t) const {
  TwistedTensor out;
  for (const auto& [pair, c] : t) {
    const TwistedElement l = (*this)(TwistedElement(pair.first, src_.base().scalar(1)));
    const TwistedElement r = (*this)(TwistedElement(pair.second, src_.base().scalar(1)));
    for (const auto& [a, x] : l) {
      for (const auto& [b, y] : r) out.add({a, b}, c * x * y);
    }
  }
  return out;
}

Sweep XiMap::check_multiplicative() const {
  Sweep s;
  const auto one = src_.base().scalar(1);
  for (TwistedKey a = 0; a < src_.dim(); ++a) {
    for (TwistedKey b = 0; b < src_.dim(); ++b) {
      const TwistedElement u(a, one), v(b, one);
      auto uv = src_.try_product(u, v);
      auto rhs = dst_.try_product((*this)(u), (*this)(v));
      if (!uv || !rhs) {
        ++s.skipped;
        continue;
      }
      ++s.checked;
      const TwistedElement lhs = (*this)(*uv);
      if (!(lhs == *rhs)) {
        s.failures.push_back("F(uv) != F(u)F(v) at " + pair_name(src_, a, b) + ": " + dst_.format(lhs) +
                             " vs " + dst_.format(*rhs));
      }
    }
  }
  return s;
}

Sweep XiMap::check_comultiplicative() const {
  Sweep s;
  if (!src_.has_coproduct()) return s;
  const auto one = src_.base().scalar(1);
  for (TwistedKey a = 0; a < src_.dim(); ++a) {
    const TwistedElement u(a, one);
    const TwistedTensor lhs = (*this)(src_.coproduct(u));
    const TwistedTensor rhs = dst_.coproduct((*this)(u));
    ++s.checked;
    if (!(lhs == rhs)) s.failures.push_back("(F⊗F)δ_c != δ_c' F at " + src_.format_key(a));
  }
  return s;
}

bool XiMap::is_bijective() const {
  const std::size_t n = src_.dim();
  const auto& f = src_.base().field();
  std::vector<std::vector<Scalar>> m(n, std::vector<Scalar>(n, Scalar(f, 0)));
  for (TwistedKey c = 0; c < n; ++c) {
    for (const auto& [r, v] : (*this)(TwistedElement(c, Scalar(f, 1)))) m[r][c] = v;
  }
  return rank(std::move(m)) == n;
}

InvariantPart invariant_part(const TwistedAlgebra& ta) {
  InvariantPart part;
  part.classes = conjugacy_classes(ta.group());
  const auto& classes = part.classes.classes;
  part.whole_algebra = classes.size() == ta.group().order();
  for (BasisIndex x = 0; x < ta.base().dim(); ++x) {
    for (std::size_t c = 0; c < classes.size(); ++c) part.basis.emplace_back(x, c);
  }
  ProductCache cache(ta);
  for (std::size_t i = 0; i < part.basis.size(); ++i) {
    const TwistedElement u = class_sum_element(ta, part, i);
    for (std::size_t j = 0; j < part.basis.size(); ++j) {
      auto prod = cache.mul(u, class_sum_element(ta, part, j));
      if (!prod) {
        ++part.skipped_pairs;
        continue;
      }
      ++part.checked_pairs;
      // Closed iff coefficients are constant on every (base index, class) block.
      for (const auto& [k, coef] : *prod) {
        const BasisIndex x = ta.base_of(k);
        for (Elem h : classes[part.classes.class_of[ta.group_of(k)]]) {
          const Scalar* other = prod->find(ta.key(x, h));
          if (!other || !(*other == coef)) {
            throw ValidationError("invariant part not closed: product of basis " + std::to_string(i) + " and " +
                                  std::to_string(j) + " is not a combination of class sums");
          }
        }
      }
    }
  }
  return part;
}

TwistedElement class_sum_element(const TwistedAlgebra& ta, const InvariantPart& part, std::size_t i) {
  const auto [x, c] = part.basis.at(i);
  TwistedElement out;
  for (Elem g : part.classes.classes[c]) out.add(ta.key(x, g), ta.base().scalar(1));
  return out;
}

TqftReport check_tqft(const TwistedAlgebra& ta, std::span<const BasisIndex> window) {
  TqftReport report;
  const auto one = ta.base().scalar(1);
  std::vector<TwistedKey> keys;
  for (TwistedKey k = 0; k < ta.dim(); ++k) {
    if (window.empty() || std::find(window.begin(), window.end(), ta.base_of(k)) != window.end()) {
      keys.push_back(k);
    }
  }
  ProductCache cache(ta);

  for (TwistedKey a : keys) {
    for (TwistedKey b : keys) {
      const auto& ab = cache.basis(a, b);
      for (TwistedKey c : keys) {
        const auto& bc = cache.basis(b, c);
        std::optional<TwistedElement> left, right;
        if (ab) left = cache.mul(*ab, TwistedElement(c, one));
        if (bc) right = cache.mul(TwistedElement(a, one), *bc);
        if (!left || !right) {
          ++report.skipped_triples;
          continue;
        }
        ++report.checked_triples;
        if (!(*left == *right)) {
          report.associativity = false;
          report.failures.push_back({"associativity", {a, b, c},
                                     "(uv)w = " + ta.format(*left) + ", u(vw) = " + ta.format(*right)});
        }
      }
    }
  }

  if (!ta.has_coproduct()) return report;

  std::map<TwistedKey, TwistedTensor> delta;
  auto coproduct = [&](TwistedKey k) -> const TwistedTensor& {
    auto it = delta.find(k);
    if (it == delta.end()) it = delta.emplace(k, ta.coproduct(TwistedElement(k, one))).first;
    return it->second;
  };
  auto coproduct_of = [&](const TwistedElement& u) {
    TwistedTensor out;
    for (const auto& [k, c] : u) out.add_scaled(coproduct(k), c);
    return out;
  };

  report.coassociativity = true;
  report.cocommutativity = true;
  for (TwistedKey a : keys) {
    const TwistedTensor& d = coproduct(a);
    TwistedTriple left, right;
    TwistedTensor swapped;
    for (const auto& [pr, w] : d) {
      for (const auto& [inner, v] : coproduct(pr.first)) {
        left.add({inner.first, inner.second, pr.second}, w * v);
      }
      for (const auto& [inner, v] : coproduct(pr.second)) {
        right.add({pr.first, inner.first, inner.second}, w * v);
      }
      const int da = ta.base().basis()[ta.base_of(pr.first)].degree;
      const int db = ta.base().basis()[ta.base_of(pr.second)].degree;
      swapped.add({pr.second, pr.first}, (da * db) % 2 ? -w : w);
    }
    if (!(left == right)) {
      report.coassociativity = false;
      report.failures.push_back({"coassociativity", {a}, "(δ⊗1)δ != (1⊗δ)δ"});
    }
    if (!(swapped == d)) report.cocommutativity = false;
  }

  report.frobenius = true;
  for (TwistedKey a : keys) {
    for (TwistedKey b : keys) {
      const auto& ab = cache.basis(a, b);
      if (!ab) {
        ++report.skipped_pairs;
        continue;
      }
      const TwistedTensor lhs = coproduct_of(*ab);
      TwistedTensor mid, right;
      bool overflow = false;
      for (const auto& [pr, w] : coproduct(a)) {
        auto yb = cache.mul(TwistedElement(pr.second, one), TwistedElement(b, one));
        if (!yb) {
          overflow = true;
          break;
        }
        for (const auto& [k, v] : *yb) mid.add({pr.first, k}, w * v);
      }
      for (const auto& [pr, w] : coproduct(b)) {
        if (overflow) break;
        auto ax = cache.mul(TwistedElement(a, one), TwistedElement(pr.first, one));
        if (!ax) {
          overflow = true;
          break;
        }
        for (const auto& [k, v] : *ax) right.add({k, pr.second}, w * v);
      }
      if (overflow) {
        ++report.skipped_pairs;
        continue;
      }
      ++report.checked_pairs;
      if (!(lhs == mid) || !(lhs == right)) {
        report.frobenius = false;
        report.failures.push_back({"frobenius", {a, b}, "δ(uv), (1⊗μ)(δu⊗v), (μ⊗1)(u⊗δv) disagree"});
      }
    }
  }
  return report;
}

std::string SplittingVerdict::summary() const {
  std::ostringstream os;
  os << "splits: " << (splits ? "true" : "false");
  if (splits && witness) {
    bool zero = true;
    for (AElem v : witness->values()) zero = zero && v == 0;
    if (zero) {
      os << ", witness: ξ ≡ 0";
    } else {
      os << ", witness: ξ = [";
      for (std::size_t i = 0; i < witness->values().size(); ++i) {
        os << (i ? ", " : "") << witness->coeff().name(witness->values()[i]);
      }
      os << "]";
    }
  } else if (!splits && obstruction_order) {
    os << ", obstruction: class of order " << *obstruction_order << " in H^2 (|H^2| = " << h2_order << ")";
  }
  return os.str();
}

SplittingVerdict splitting_verdict(const TwistedAlgebra& ta) {
  SplittingVerdict v;
  const std::uint32_t p = ta.base().field().characteristic();
  if (p != 0 && ta.group().order() % p == 0) {
    v.warnings.push_back("field characteristic " + std::to_string(p) + " divides |G| = " +
                         std::to_string(ta.group().order()) + "; outside the coprime setting");
  }
  v.h2_order = h2_order(ta.group(), ta.coeff());
  const Cochain2 zero = Cochain2::zero(ta.group(), ta.coeff());
  v.witness = solve_coboundary(ta.cocycle(), zero);
  v.splits = v.witness.has_value();
  if (!v.splits) {
    v.obstruction_order = class_order(ta.cocycle());
    return v;
  }
  const TwistedAlgebra untwisted = TwistedAlgebra::make(ta.base(), ta.group(), ta.embedding(), zero);
  const XiMap f = f_xi_map(ta, untwisted, *v.witness);
  const Sweep mult = f.check_multiplicative();
  v.failures = mult.failures;
  if (!f.is_bijective()) v.failures.push_back("F_xi is not bijective");
  v.checked_iso = v.failures.empty() && mult.checked > 0;
  return v;
}

}  // namespace orbiloop
