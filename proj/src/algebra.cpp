#include "orbiloop/algebra.hpp"

#include <fstream>
#include <numeric>
#include <set>
#include <sstream>

#include "json.hpp"

namespace orbiloop {

using nlohmann::json;

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::string triple(BasisIndex i, BasisIndex j, BasisIndex k) {
  std::ostringstream os;
  os << "(" << i << "," << j << "," << k << ")";
  return os.str();
}

}  // namespace

std::optional<AlgebraElement> try_multiply(const GradedBasisAlgebra& alg, const AlgebraElement& x,
                                           const AlgebraElement& y) {
  AlgebraElement out;
  for (const auto& [i, a] : x) {
    for (const auto& [j, b] : y) {
      const AlgebraElement* e = alg.structure_constants(i, j);
      if (!e) return std::nullopt;
      out.add_scaled(*e, a * b);
    }
  }
  return out;
}

std::optional<BasisIndex> GradedBasisAlgebra::find_basis(std::string_view name) const {
  for (BasisIndex i = 0; i < dim(); ++i) {
    if (basis()[i].name == name) return i;
  }
  return std::nullopt;
}

AlgebraElement GradedBasisAlgebra::parse_element(std::string_view expr) const {
  // Split into signed terms; a sign directly after '^' belongs to an exponent.
  const std::string_view s = trim(expr);
  if (s.empty()) throw InputError("empty algebra element");
  std::vector<std::pair<bool, std::string_view>> terms;
  bool negative = false;
  std::size_t start = 0;
  if (s[0] == '+' || s[0] == '-') {
    negative = s[0] == '-';
    start = 1;
  }
  for (std::size_t i = start; i <= s.size(); ++i) {
    const bool at_end = i == s.size();
    if (!at_end && !((s[i] == '+' || s[i] == '-') && i > start && s[i - 1] != '^')) continue;
    const auto term = trim(s.substr(start, i - start));
    if (term.empty()) throw InputError("malformed algebra element '" + std::string(expr) + "'");
    terms.emplace_back(negative, term);
    if (!at_end) {
      negative = s[i] == '-';
      start = i + 1;
    }
  }

  AlgebraElement out;
  for (const auto& [neg, term] : terms) {
    Scalar coef = scalar(1);
    std::optional<BasisIndex> idx = find_basis(term);
    if (!idx) {
      const auto star = term.find('*');
      if (star != std::string_view::npos) {
        coef = Scalar::parse(field(), term.substr(0, star));
        auto name = trim(term.substr(star + 1));
        idx = find_basis(name);
        if (!idx) {
          throw InputError("unknown basis element '" + std::string(name) + "' in algebra " + this->name());
        }
      } else {
        try {
          coef = Scalar::parse(field(), term);
        } catch (const InputError&) {
          throw InputError("unknown basis element '" + std::string(term) + "' in algebra " + this->name());
        }
        idx = unit();
      }
    }
    out.add(*idx, neg ? -coef : coef);
  }
  return out;
}

std::string GradedBasisAlgebra::format(const AlgebraElement& x) const {
  if (x.empty()) return "0";
  std::string out;
  for (const auto& [i, c] : x) {
    if (!out.empty()) out += " + ";
    if (!c.is_one()) out += c.to_string() + "*";
    out += basis()[i].name;
  }
  return out;
}

std::optional<int> GradedBasisAlgebra::degree_of(const AlgebraElement& x) const {
  std::optional<int> deg;
  for (const auto& [i, c] : x) {
    if (deg && *deg != basis()[i].degree) return std::nullopt;
    deg = basis()[i].degree;
  }
  return deg;
}

bool operator==(const GradedBasisAlgebra& a, const GradedBasisAlgebra& b) {
  if (a.d_ == b.d_) return true;
  const auto &x = *a.d_, &y = *b.d_;
  if (!(x.field == y.field) || x.unit != y.unit || x.point_class != y.point_class ||
      x.euler_char != y.euler_char || x.graded_commutative != y.graded_commutative ||
      x.basis.size() != y.basis.size() || x.products != y.products) {
    return false;
  }
  for (std::size_t i = 0; i < x.basis.size(); ++i) {
    if (x.basis[i].name != y.basis[i].name || x.basis[i].degree != y.basis[i].degree) return false;
  }
  return true;
}

GradedBasisAlgebra::Builder::Builder(std::string name, Field field) {
  d_.name = std::move(name);
  d_.field = field;
}

BasisIndex GradedBasisAlgebra::Builder::add_basis(std::string name, int degree) {
  d_.basis.push_back({std::move(name), degree});
  return static_cast<BasisIndex>(d_.basis.size() - 1);
}

GradedBasisAlgebra::Builder& GradedBasisAlgebra::Builder::unit(BasisIndex u) {
  d_.unit = u;
  return *this;
}
GradedBasisAlgebra::Builder& GradedBasisAlgebra::Builder::point_class(std::optional<BasisIndex> pc) {
  d_.point_class = pc;
  return *this;
}
GradedBasisAlgebra::Builder& GradedBasisAlgebra::Builder::euler_char(std::int64_t chi) {
  d_.euler_char = chi;
  return *this;
}
GradedBasisAlgebra::Builder& GradedBasisAlgebra::Builder::graded_commutative(bool flag) {
  d_.graded_commutative = flag;
  return *this;
}
GradedBasisAlgebra::Builder& GradedBasisAlgebra::Builder::notes(std::string text) {
  d_.notes = std::move(text);
  return *this;
}
GradedBasisAlgebra::Builder& GradedBasisAlgebra::Builder::product(BasisIndex i, BasisIndex j,
                                                                  AlgebraElement value) {
  entries_.push_back({{i, j}, std::move(value)});
  return *this;
}
GradedBasisAlgebra::Builder& GradedBasisAlgebra::Builder::product_outside_window(BasisIndex i,
                                                                                 BasisIndex j) {
  entries_.push_back({{i, j}, std::nullopt});
  return *this;
}

void GradedBasisAlgebra::Builder::check_shape() const {
  const std::size_t n = d_.basis.size();
  if (n == 0) throw InputError("algebra " + d_.name + ": empty basis");
  if (n > kMaxBasisSize) {
    throw InputError("algebra " + d_.name + ": basis size " + std::to_string(n) +
                     " exceeds the supported maximum " + std::to_string(kMaxBasisSize));
  }
  if (d_.unit >= n) throw InputError("algebra " + d_.name + ": unit index out of range");
  if (d_.point_class && *d_.point_class >= n) {
    throw InputError("algebra " + d_.name + ": point_class index out of range");
  }
  std::set<std::string> names;
  for (const auto& b : d_.basis) {
    if (!names.insert(b.name).second) {
      throw InputError("algebra " + d_.name + ": duplicate basis name '" + b.name + "'");
    }
  }
  std::set<std::pair<BasisIndex, BasisIndex>> seen;
  for (const auto& [ij, value] : entries_) {
    if (ij.first >= n || ij.second >= n) {
      throw InputError("algebra " + d_.name + ": product index out of range at (" +
                       std::to_string(ij.first) + "," + std::to_string(ij.second) + ")");
    }
    if (!seen.insert(ij).second) {
      throw InputError("algebra " + d_.name + ": duplicate product entry (" +
                       std::to_string(ij.first) + "," + std::to_string(ij.second) + ")");
    }
    if (value) {
      for (const auto& [k, c] : *value) {
        if (k >= n) throw InputError("algebra " + d_.name + ": product term index out of range");
        if (!(c.field() == d_.field)) throw InputError("algebra " + d_.name + ": coefficient field mismatch");
      }
    }
  }
}

GradedBasisAlgebra GradedBasisAlgebra::Builder::build_unchecked() const {
  check_shape();
  auto d = std::make_shared<Data>(d_);
  const std::size_t n = d->basis.size();
  d->products.assign(n * n, AlgebraElement{});
  for (const auto& [ij, value] : entries_) d->products[ij.first * n + ij.second] = value;
  return GradedBasisAlgebra(std::move(d));
}

GradedBasisAlgebra GradedBasisAlgebra::Builder::build() const {
  GradedBasisAlgebra alg = build_unchecked();
  validate_algebra(alg);
  return alg;
}

void validate_algebra(const GradedBasisAlgebra& alg) {
  using Law = AlgebraLawError::Law;
  const auto n = static_cast<BasisIndex>(alg.dim());
  const auto& basis = alg.basis();
  const BasisIndex u = alg.unit();
  const std::string where = "algebra " + alg.name() + ": ";

  for (BasisIndex b = 0; b < n; ++b) {
    const AlgebraElement expect = alg.basis_element(b);
    const AlgebraElement* left = alg.structure_constants(u, b);
    const AlgebraElement* right = alg.structure_constants(b, u);
    if (!left || !right || !(*left == expect) || !(*right == expect)) {
      throw AlgebraLawError(Law::unit, {b}, where + "unit law fails at basis " + std::to_string(b) +
                                                " (" + basis[b].name + ")");
    }
  }

  for (BasisIndex i = 0; i < n; ++i) {
    for (BasisIndex j = 0; j < n; ++j) {
      const AlgebraElement* e = alg.structure_constants(i, j);
      if (!e) continue;
      for (const auto& [k, c] : *e) {
        if (basis[k].degree != basis[i].degree + basis[j].degree) {
          throw AlgebraLawError(Law::degree, {i, j},
                                where + "degree mismatch at (" + std::to_string(i) + "," +
                                    std::to_string(j) + "): " + basis[i].name + "*" + basis[j].name +
                                    " has a term " + basis[k].name + " of degree " +
                                    std::to_string(basis[k].degree) + ", expected " +
                                    std::to_string(basis[i].degree + basis[j].degree));
        }
      }
    }
  }

  if (alg.graded_commutative()) {
    for (BasisIndex i = 0; i < n; ++i) {
      for (BasisIndex j = i + 1; j < n; ++j) {
        const AlgebraElement* ij = alg.structure_constants(i, j);
        const AlgebraElement* ji = alg.structure_constants(j, i);
        if (!ij || !ji) continue;
        const bool odd = (basis[i].degree * basis[j].degree) % 2 != 0;
        if (!(*ij == (odd ? ji->scaled(alg.scalar(-1)) : *ji))) {
          throw AlgebraLawError(Law::commutativity, {i, j},
                                where + "graded commutativity fails at (" + std::to_string(i) + "," +
                                    std::to_string(j) + ")");
        }
      }
    }
  }

  for (BasisIndex i = 0; i < n; ++i) {
    for (BasisIndex j = 0; j < n; ++j) {
      const AlgebraElement* ij = alg.structure_constants(i, j);
      if (!ij) continue;
      for (BasisIndex k = 0; k < n; ++k) {
        const AlgebraElement* jk = alg.structure_constants(j, k);
        if (!jk) continue;
        auto left = try_multiply(alg, *ij, alg.basis_element(k));
        auto right = try_multiply(alg, alg.basis_element(i), *jk);
        if (!left || !right) continue;
        if (!(*left == *right)) {
          throw AlgebraLawError(Law::associativity, {i, j, k},
                                where + "associativity fails at " + triple(i, j, k));
        }
      }
    }
  }
}

AlgebraElement multiply(const GradedBasisAlgebra& alg, const AlgebraElement& x, const AlgebraElement& y) {
  AlgebraElement out;
  for (const auto& [i, a] : x) {
    for (const auto& [j, b] : y) {
      const AlgebraElement* e = alg.structure_constants(i, j);
      if (!e) {
        throw WindowOverflow("product " + alg.basis()[i].name + " * " + alg.basis()[j].name +
                             " leaves the window of " + alg.name());
      }
      out.add_scaled(*e, a * b);
    }
  }
  return out;
}

BasisIndex circle_index(int window, int exponent, bool exterior) {
  if (exponent < -window || exponent > window) {
    throw WindowOverflow("exponent " + std::to_string(exponent) + " outside window " +
                         std::to_string(window));
  }
  return static_cast<BasisIndex>(exterior ? 3 * window + 1 + exponent : exponent + window);
}

std::vector<BasisIndex> circle_window(int window, int radius) {
  std::vector<BasisIndex> out;
  const int r = std::min(radius, window);
  for (int e = -r; e <= r; ++e) out.push_back(circle_index(window, e, false));
  for (int e = -r; e <= r; ++e) out.push_back(circle_index(window, e, true));
  return out;
}

GradedBasisAlgebra circle_model(std::uint32_t characteristic, int window) {
  if (window < 1) throw InputError("circle model window must be >= 1");
  if (6 * window + 2 > static_cast<int>(kMaxBasisSize)) {
    throw InputError("circle model window " + std::to_string(window) + " exceeds the basis limit");
  }
  const Field field = Field::of_characteristic(characteristic);
  GradedBasisAlgebra::Builder b("circle:" + std::to_string(characteristic) + ":" + std::to_string(window),
                                field);
  for (int e = -window; e <= window; ++e) b.add_basis("t^" + std::to_string(e), 0);
  for (int e = -window; e <= window; ++e) b.add_basis("at^" + std::to_string(e), -1);
  const Scalar one(field, 1);
  for (int e1 = -window; e1 <= window; ++e1) {
    for (int e2 = -window; e2 <= window; ++e2) {
      const int e = e1 + e2;
      for (int x = 0; x < 2; ++x) {
        for (int y = 0; y < 2; ++y) {
          const BasisIndex i = circle_index(window, e1, x), j = circle_index(window, e2, y);
          if (x && y) {
            b.product(i, j, {});  // a^2 = 0 regardless of the window
          } else if (e < -window || e > window) {
            b.product_outside_window(i, j);
          } else {
            b.product(i, j, AlgebraElement(circle_index(window, e, x || y), one));
          }
        }
      }
    }
  }
  b.unit(circle_index(window, 0, false))
      .point_class(circle_index(window, 0, true))
      .euler_char(0)
      .graded_commutative(true)
      .notes(
          "Lambda(a) (x) k[t,t^-1] truncated to |n| <= window. Shifted degrees: deg t = 0 (fundamental "
          "classes of the loop components), deg a = -1 (point classes), so a*t^0 is the constant-loop "
          "class [c0]. The source presentation assigns degree 0 to both generators, which does not "
          "separate H_0 from H_1 of the free loop space; this model uses -1/0 instead.");
  return b.build();
}

GradedBasisAlgebra cpl_minimal_model(int l, std::uint32_t p) {
  if (l < 1) throw InputError("cpl model needs l >= 1");
  const Field field = Field::prime(p);
  const std::string top = "[CP^" + std::to_string(l) + "]";
  GradedBasisAlgebra::Builder b("cpl:" + std::to_string(l) + ":" + std::to_string(p), field);
  const BasisIndex one = b.add_basis(top, 0);
  const Scalar s1(field, 1);
  b.product(one, one, AlgebraElement(one, s1));
  if (std::gcd(static_cast<std::uint32_t>(l + 1), p) > 1) {
    const BasisIndex eps = b.add_basis("eps", 0);
    b.product(one, eps, AlgebraElement(eps, s1));
    b.product(eps, one, AlgebraElement(eps, s1));
    b.product(eps, eps, {});
  }
  b.unit(one).point_class(std::nullopt).euler_char(l + 1).graded_commutative(true);
  return b.build();
}

namespace {

Scalar json_scalar(Field f, const json& v, const std::string& path) {
  if (v.is_string()) return Scalar::parse(f, v.get<std::string>());
  if (v.is_number_integer()) return Scalar(f, v.get<std::int64_t>());
  throw InputError(path + ": coefficient must be a string or integer");
}

template <class T>
T json_get(const json& obj, const char* key, const std::string& path) {
  if (!obj.contains(key)) throw InputError(path + "." + key + ": missing");
  try {
    return obj.at(key).get<T>();
  } catch (const json::exception&) {
    throw InputError(path + "." + key + ": wrong type");
  }
}

}  // namespace

GradedBasisAlgebra parse_presentation(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("presentation: malformed JSON: ") + e.what());
  }
  const std::string root = "presentation";
  if (!doc.is_object()) throw InputError(root + ": expected an object");
  const Field field = Field::parse(json_get<std::string>(doc, "scalar", root));
  GradedBasisAlgebra::Builder b(doc.value("name", std::string("presentation")), field);

  if (!doc.contains("basis") || !doc["basis"].is_array()) throw InputError(root + ".basis: expected an array");
  for (std::size_t i = 0; i < doc["basis"].size(); ++i) {
    const auto path = root + ".basis[" + std::to_string(i) + "]";
    const auto& e = doc["basis"][i];
    b.add_basis(json_get<std::string>(e, "name", path), json_get<int>(e, "degree", path));
  }
  b.unit(json_get<BasisIndex>(doc, "unit", root));
  if (doc.contains("point_class") && !doc["point_class"].is_null()) {
    b.point_class(json_get<BasisIndex>(doc, "point_class", root));
  }
  b.euler_char(doc.contains("euler_char") ? json_get<std::int64_t>(doc, "euler_char", root) : 0);
  b.graded_commutative(doc.contains("graded_commutative") &&
                       json_get<bool>(doc, "graded_commutative", root));

  if (doc.contains("products")) {
    const auto& products = doc["products"];
    if (!products.is_array()) throw InputError(root + ".products: expected an array");
    for (std::size_t r = 0; r < products.size(); ++r) {
      const auto path = root + ".products[" + std::to_string(r) + "]";
      const auto& row = products[r];
      if (!row.is_array() || row.size() != 3 || !row[0].is_number_unsigned() ||
          !row[1].is_number_unsigned() || !row[2].is_array()) {
        throw InputError(path + ": expected [i, j, [[coef, k], ...]]");
      }
      AlgebraElement value;
      for (std::size_t t = 0; t < row[2].size(); ++t) {
        const auto tpath = path + "[2][" + std::to_string(t) + "]";
        const auto& term = row[2][t];
        if (!term.is_array() || term.size() != 2 || !term[1].is_number_unsigned()) {
          throw InputError(tpath + ": expected [coef, k]");
        }
        value.add(term[1].get<BasisIndex>(), json_scalar(field, term[0], tpath));
      }
      b.product(row[0].get<BasisIndex>(), row[1].get<BasisIndex>(), std::move(value));
    }
  }
  return b.build();
}

GradedBasisAlgebra load_presentation(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open presentation file " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_presentation(ss.str());
}

std::string to_presentation(const GradedBasisAlgebra& alg) {
  json doc;
  doc["name"] = alg.name();
  doc["scalar"] = alg.field().name();
  doc["basis"] = json::array();
  for (const auto& b : alg.basis()) doc["basis"].push_back({{"name", b.name}, {"degree", b.degree}});
  doc["unit"] = alg.unit();
  doc["point_class"] = alg.point_class() ? json(*alg.point_class()) : json(nullptr);
  doc["euler_char"] = alg.euler_char();
  doc["graded_commutative"] = alg.graded_commutative();
  doc["products"] = json::array();
  const auto n = static_cast<BasisIndex>(alg.dim());
  for (BasisIndex i = 0; i < n; ++i) {
    for (BasisIndex j = 0; j < n; ++j) {
      const AlgebraElement* e = alg.structure_constants(i, j);
      if (!e) throw InputError("algebra " + alg.name() + " has windowed products; no presentation form");
      if (e->empty()) continue;
      json terms = json::array();
      for (const auto& [k, c] : *e) terms.push_back({c.to_string(), k});
      doc["products"].push_back({i, j, terms});
    }
  }
  return doc.dump(2);
}

UnitGroup unit_group(const GradedBasisAlgebra& alg, const std::vector<AlgebraElement>& candidates) {
  const std::size_t n = candidates.size();
  if (n == 0) throw InputError("unit_group: empty candidate set");
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (candidates[i] == candidates[j]) {
        throw InputError("unit_group: duplicate candidate " + alg.format(candidates[i]));
      }
    }
  }
  std::vector<std::vector<Elem>> table(n, std::vector<Elem>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const AlgebraElement prod = multiply(alg, candidates[i], candidates[j]);
      std::size_t k = 0;
      while (k < n && !(candidates[k] == prod)) ++k;
      if (k == n) {
        throw ValidationError("unit_group: set not closed: (" + alg.format(candidates[i]) + ") * (" +
                              alg.format(candidates[j]) + ") = " + alg.format(prod));
      }
      table[i][j] = static_cast<Elem>(k);
    }
  }
  FiniteGroup g = make_from_table(table);
  if (!(candidates[g.identity()] == alg.unit_element())) {
    throw ValidationError("unit_group: identity of the set is " + alg.format(candidates[g.identity()]) +
                          ", not the algebra unit");
  }
  return {std::move(g), candidates};
}

bool has_coproduct(const GradedBasisAlgebra& alg) {
  return alg.point_class().has_value() || alg.scalar(alg.euler_char()).is_zero();
}

AlgebraTensor base_coproduct(const GradedBasisAlgebra& alg, const AlgebraElement& x) {
  const Scalar chi = alg.scalar(alg.euler_char());
  if (chi.is_zero()) return {};
  if (!alg.point_class()) {
    throw CoproductUndefined("algebra " + alg.name() + ": euler characteristic " +
                             std::to_string(alg.euler_char()) +
                             " is nonzero in the field and no point class is given");
  }
  const BasisIndex pc = *alg.point_class();
  AlgebraTensor out;
  for (const auto& [k, c] : multiply(alg, alg.basis_element(pc), x)) out.add({k, pc}, c * chi);
  return out;
}

}  // namespace orbiloop
