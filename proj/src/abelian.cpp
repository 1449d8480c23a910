#include "orbiloop/abelian.hpp"

#include <charconv>
#include <numeric>
#include <set>

namespace orbiloop {

FiniteAbelianGroup::FiniteAbelianGroup(std::vector<std::uint32_t> factors) : factors_(std::move(factors)) {
  if (factors_.empty()) factors_.push_back(1);
  for (auto m : factors_) {
    if (m == 0) throw InputError("coefficient group: zero modulus");
    order_ *= m;
    if (order_ > kMaxCoefficientOrder) {
      throw InputError("coefficient group: order exceeds " + std::to_string(kMaxCoefficientOrder));
    }
  }
  stride_.assign(factors_.size(), 1);
  for (std::size_t i = factors_.size(); i-- > 1;) stride_[i - 1] = stride_[i] * factors_[i];
}

AElem FiniteAbelianGroup::encode(const Tuple& t) const {
  if (t.size() != factors_.size()) {
    throw InputError("coefficient element has " + std::to_string(t.size()) + " components, expected " +
                     std::to_string(factors_.size()));
  }
  std::size_t idx = 0;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (t[i] >= factors_[i]) {
      throw InputError("coefficient component " + std::to_string(t[i]) + " out of range mod " +
                       std::to_string(factors_[i]));
    }
    idx += t[i] * stride_[i];
  }
  return static_cast<AElem>(idx);
}

std::uint32_t FiniteAbelianGroup::component(AElem a, std::size_t i) const {
  return static_cast<std::uint32_t>((a / stride_[i]) % factors_[i]);
}

FiniteAbelianGroup::Tuple FiniteAbelianGroup::decode(AElem a) const {
  Tuple t(factors_.size());
  for (std::size_t i = 0; i < t.size(); ++i) t[i] = component(a, i);
  return t;
}

AElem FiniteAbelianGroup::generator(std::size_t i) const {
  return factors_[i] == 1 ? 0 : static_cast<AElem>(stride_[i]);
}

AElem FiniteAbelianGroup::add(AElem a, AElem b) const {
  if (factors_.size() == 1) return static_cast<AElem>((a + b) % factors_[0]);
  std::size_t idx = 0;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    idx += ((component(a, i) + component(b, i)) % factors_[i]) * stride_[i];
  }
  return static_cast<AElem>(idx);
}

AElem FiniteAbelianGroup::neg(AElem a) const {
  std::size_t idx = 0;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    idx += ((factors_[i] - component(a, i)) % factors_[i]) * stride_[i];
  }
  return static_cast<AElem>(idx);
}

AElem FiniteAbelianGroup::times(std::int64_t k, AElem a) const {
  std::size_t idx = 0;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    const std::int64_t m = factors_[i];
    std::int64_t v = (k % m) * static_cast<std::int64_t>(component(a, i)) % m;
    if (v < 0) v += m;
    idx += static_cast<std::size_t>(v) * stride_[i];
  }
  return static_cast<AElem>(idx);
}

std::size_t FiniteAbelianGroup::element_order(AElem a) const {
  std::size_t k = 1;
  for (AElem x = a; x != zero(); x = add(x, a)) ++k;
  return k;
}

std::string FiniteAbelianGroup::name(AElem a) const {
  if (factors_.size() == 1) return std::to_string(a);
  std::string out = "(";
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(component(a, i));
  }
  return out + ")";
}

AElem FiniteAbelianGroup::parse(std::string_view text) const {
  if (!text.empty() && text.front() == '(' && text.back() == ')') text = text.substr(1, text.size() - 2);
  Tuple t;
  std::size_t start = 0;
  while (true) {
    auto comma = text.find(',', start);
    auto part = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    while (!part.empty() && part.front() == ' ') part.remove_prefix(1);
    while (!part.empty() && part.back() == ' ') part.remove_suffix(1);
    std::uint32_t v = 0;
    auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
    if (part.empty() || ec != std::errc() || ptr != part.data() + part.size()) {
      throw InputError("malformed coefficient element '" + std::string(text) + "'");
    }
    t.push_back(v);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return encode(t);
}

FiniteAbelianGroup abelian_make(std::vector<std::uint32_t> factors) {
  return FiniteAbelianGroup(std::move(factors));
}

std::size_t UnitEmbedding::kernel_size() const {
  std::size_t k = 0;
  const AlgebraElement unit = target_.unit_element();
  for (const auto& img : images_) k += img == unit;
  return k;
}

UnitEmbedding embedding_make(const FiniteAbelianGroup& a, const GradedBasisAlgebra& target,
                             std::vector<AlgebraElement> generator_images) {
  if (generator_images.size() != a.rank()) {
    throw InputError("embedding: expected " + std::to_string(a.rank()) + " generator images, got " +
                     std::to_string(generator_images.size()));
  }
  if (a.order() > kMaxEmbeddingDomain) {
    throw InputError("embedding: coefficient group of order " + std::to_string(a.order()) +
                     " exceeds the supported maximum " + std::to_string(kMaxEmbeddingDomain));
  }
  const AlgebraElement unit = target.unit_element();
  const int unit_degree = target.basis()[target.unit()].degree;

  for (std::size_t i = 0; i < a.rank(); ++i) {
    const auto& img = generator_images[i];
    for (const auto& [k, c] : img) {
      if (k >= target.dim()) throw InputError("embedding: generator image index out of range");
      if (target.basis()[k].degree != unit_degree) {
        throw ValidationError("embedding: image of generator " + std::to_string(i) + " (" +
                              target.format(img) + ") has a term in degree " +
                              std::to_string(target.basis()[k].degree) + ", not the unit degree " +
                              std::to_string(unit_degree));
      }
    }
    const std::uint32_t m = a.factors()[i];
    AlgebraElement power = unit;
    for (std::uint32_t k = 0; k < m; ++k) power = multiply(target, power, img);
    if (!(power == unit)) {
      // Report the actual order when it is small enough to find.
      std::string order = "not dividing " + std::to_string(m);
      AlgebraElement p = img;
      for (std::size_t k = 1; k <= 4 * kMaxEmbeddingDomain; ++k) {
        if (p == unit) {
          order = std::to_string(k) + ", which does not divide " + std::to_string(m);
          break;
        }
        p = multiply(target, p, img);
      }
      throw ValidationError("embedding: image of generator " + std::to_string(i) + " (" +
                            target.format(img) + ") has multiplicative order " + order);
    }
  }

  UnitEmbedding emb(a, target);
  emb.generators_ = std::move(generator_images);
  emb.images_.resize(a.order());
  for (AElem x = 0; x < a.order(); ++x) {
    AlgebraElement img = unit;
    for (std::size_t i = 0; i < a.rank(); ++i) {
      for (std::uint32_t k = 0; k < a.component(x, i); ++k) img = multiply(target, img, emb.generators_[i]);
    }
    emb.images_[x] = std::move(img);
  }
  for (AElem x = 0; x < a.order(); ++x) {
    for (AElem y = 0; y < a.order(); ++y) {
      if (!(multiply(target, emb.images_[x], emb.images_[y]) == emb.images_[a.add(x, y)])) {
        throw ValidationError("embedding: not multiplicative at (" + a.name(x) + "," + a.name(y) + ")");
      }
    }
  }
  return emb;
}

UnitEmbedding trivial_embedding(const FiniteAbelianGroup& a, const GradedBasisAlgebra& target) {
  return embedding_make(a, target, std::vector<AlgebraElement>(a.rank(), target.unit_element()));
}

}  // namespace orbiloop
