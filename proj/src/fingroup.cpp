#include "orbiloop/fingroup.hpp"

#include <algorithm>
#include <sstream>

namespace orbiloop {

namespace {

std::string table_error(const std::string& what) { return "group table: " + what; }

}  // namespace

FiniteGroup FiniteGroup::validated(std::size_t n, std::vector<Elem> table, std::string label) {
  if (n == 0) throw InputError(table_error("empty table"));
  if (n > kMaxGroupOrder) {
    throw InputError(table_error("order " + std::to_string(n) + " exceeds the supported maximum " +
                                 std::to_string(kMaxGroupOrder)));
  }
  for (Elem x : table) {
    if (x >= n) throw InputError(table_error("entry " + std::to_string(x) + " out of range"));
  }
  auto at = [&](Elem a, Elem b) { return table[a * n + b]; };

  std::optional<Elem> identity;
  for (Elem e = 0; e < n && !identity; ++e) {
    bool ok = true;
    for (Elem g = 0; g < n && ok; ++g) ok = at(e, g) == g && at(g, e) == g;
    if (ok) identity = e;
  }
  if (!identity) throw ValidationError(table_error("no identity element found"));

  std::vector<Elem> inverse(n);
  for (Elem g = 0; g < n; ++g) {
    bool found = false;
    for (Elem h = 0; h < n && !found; ++h) {
      if (at(g, h) == *identity && at(h, g) == *identity) {
        inverse[g] = h;
        found = true;
      }
    }
    if (!found) {
      throw ValidationError(table_error("element " + std::to_string(g) + " has no inverse"));
    }
  }

  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) {
      for (Elem c = 0; c < n; ++c) {
        if (at(at(a, b), c) != at(a, at(b, c))) {
          std::ostringstream os;
          os << "associativity fails at (" << a << "," << b << "," << c << ")";
          throw ValidationError(table_error(os.str()));
        }
      }
    }
  }

  auto d = std::make_shared<Data>();
  d->n = n;
  d->table = std::move(table);
  d->identity = *identity;
  d->inverse = std::move(inverse);
  d->label = std::move(label);
  return FiniteGroup(std::move(d));
}

std::size_t FiniteGroup::element_order(Elem g) const {
  std::size_t k = 1;
  for (Elem x = g; x != identity(); x = mul(x, g)) ++k;
  return k;
}

bool FiniteGroup::is_abelian() const {
  for (Elem g = 0; g < order(); ++g) {
    for (Elem h = g + 1; h < order(); ++h) {
      if (mul(g, h) != mul(h, g)) return false;
    }
  }
  return true;
}

std::optional<Elem> FiniteGroup::cyclic_generator() const {
  for (Elem g = 0; g < order(); ++g) {
    if (element_order(g) == order()) return g;
  }
  return std::nullopt;
}

std::vector<std::vector<Elem>> FiniteGroup::table() const {
  std::vector<std::vector<Elem>> rows(order());
  for (Elem g = 0; g < order(); ++g) {
    rows[g].assign(d_->table.begin() + g * order(), d_->table.begin() + (g + 1) * order());
  }
  return rows;
}

FiniteGroup make_cyclic(std::size_t n) {
  if (n == 0) throw InputError("invalid group order 0");
  if (n > kMaxGroupOrder) {
    throw InputError("invalid group order " + std::to_string(n) + " (maximum " +
                     std::to_string(kMaxGroupOrder) + ")");
  }
  std::vector<Elem> table(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) table[i * n + j] = static_cast<Elem>((i + j) % n);
  }
  return FiniteGroup::validated(n, std::move(table), "cyclic:" + std::to_string(n));
}

FiniteGroup make_from_table(const std::vector<std::vector<Elem>>& rows) {
  const std::size_t n = rows.size();
  std::vector<Elem> table;
  table.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].size() != n) {
      throw InputError(table_error("row " + std::to_string(i) + " has length " +
                                   std::to_string(rows[i].size()) + ", expected " +
                                   std::to_string(n)));
    }
    table.insert(table.end(), rows[i].begin(), rows[i].end());
  }
  return FiniteGroup::validated(n, std::move(table), "table");
}

FiniteGroup make_product(const FiniteGroup& g, const FiniteGroup& h) {
  const std::size_t ng = g.order(), nh = h.order(), n = ng * nh;
  if (n > kMaxGroupOrder) {
    throw InputError("product order " + std::to_string(n) + " exceeds the supported maximum " +
                     std::to_string(kMaxGroupOrder));
  }
  std::vector<Elem> table(n * n);
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) {
      const Elem first = g.mul(a / nh, b / nh);
      const Elem second = h.mul(a % nh, b % nh);
      table[a * n + b] = static_cast<Elem>(first * nh + second);
    }
  }
  return FiniteGroup::validated(n, std::move(table),
                                "product:" + g.label() + "x" + h.label());
}

ConjugacyPartition conjugacy_classes(const FiniteGroup& g) {
  const std::size_t n = g.order();
  ConjugacyPartition out;
  out.class_of.assign(n, n);
  for (Elem x = 0; x < n; ++x) {
    if (out.class_of[x] != n) continue;
    std::vector<Elem> orbit;
    for (Elem s = 0; s < n; ++s) orbit.push_back(g.conj(s, x));
    std::sort(orbit.begin(), orbit.end());
    orbit.erase(std::unique(orbit.begin(), orbit.end()), orbit.end());
    for (Elem y : orbit) out.class_of[y] = out.classes.size();
    out.classes.push_back(std::move(orbit));
  }
  return out;
}

}  // namespace orbiloop
