#include "orbiloop/config.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace orbiloop::config {

using nlohmann::json;
namespace fs = std::filesystem;

namespace {

std::string read_file(const fs::path& path, const std::string& field) {
  std::ifstream in(path);
  if (!in) throw InputError(field + ": cannot open " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json parse_json(std::string_view text, const std::string& field) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(field + ": malformed JSON: " + e.what());
  }
}

fs::path resolve(const fs::path& p, const fs::path& base_dir) {
  return p.is_relative() && !base_dir.empty() ? base_dir / p : p;
}

std::uint64_t parse_uint(std::string_view s, const std::string& what) {
  std::uint64_t v = 0;
  const auto* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (s.empty() || ec != std::errc() || ptr != end) {
    throw InputError(what + ": expected a non-negative integer, got '" + std::string(s) + "'");
  }
  return v;
}

bool has_group_prefix(std::string_view s) {
  return s.starts_with("cyclic:") || s.starts_with("product:") || s.starts_with("table:");
}

// Runs f, re-raising library errors with the field path prepended.
template <class F>
auto at_field(const std::string& field, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const InputError& e) {
    const std::string msg = e.what();
    if (msg.starts_with(field)) throw;
    throw InputError(field + ": " + msg);
  } catch (const Error& e) {
    throw InputError(field + ": " + e.what());
  }
}

const json& member(const json& obj, const char* key, const std::string& root) {
  if (!obj.contains(key)) throw InputError(root + "." + key + ": missing");
  return obj.at(key);
}

std::string member_string(const json& obj, const char* key, const std::string& root) {
  const json& v = member(obj, key, root);
  if (!v.is_string()) throw InputError(root + "." + key + ": expected a string");
  return v.get<std::string>();
}

FiniteGroup group_from_json(const json& v, const fs::path& base_dir, const std::string& field) {
  if (!v.is_string()) throw InputError(field + ": expected a group spec string");
  return at_field(field, [&] { return parse_group(v.get<std::string>(), base_dir); });
}

FiniteAbelianGroup coeff_from_json(const json& v, const std::string& field) {
  if (v.is_string()) return at_field(field, [&] { return parse_coeff(v.get<std::string>()); });
  if (v.is_number_unsigned()) return at_field(field, [&] { return abelian_make({v.get<std::uint32_t>()}); });
  if (v.is_array()) {
    std::vector<std::uint32_t> factors;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (!v[i].is_number_unsigned()) {
        throw InputError(field + "[" + std::to_string(i) + "]: expected a positive integer");
      }
      factors.push_back(v[i].get<std::uint32_t>());
    }
    return at_field(field, [&] { return abelian_make(std::move(factors)); });
  }
  throw InputError(field + ": expected a coefficient spec, integer or list of moduli");
}

AElem aelem_from_json(const FiniteAbelianGroup& a, const json& v, const std::string& field) {
  if (v.is_string()) return at_field(field, [&] { return a.parse(v.get<std::string>()); });
  FiniteAbelianGroup::Tuple t;
  if (v.is_number_integer()) {
    if (v.get<std::int64_t>() < 0) throw InputError(field + ": negative component");
    t.push_back(v.get<std::uint32_t>());
  } else if (v.is_array()) {
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (!v[i].is_number_unsigned()) throw InputError(field + "[" + std::to_string(i) + "]: expected an integer");
      t.push_back(v[i].get<std::uint32_t>());
    }
  } else {
    throw InputError(field + ": expected a tuple, integer or string");
  }
  return at_field(field, [&] { return a.encode(t); });
}

AlgebraElement element_from_json(const GradedBasisAlgebra& alg, const json& v, const std::string& field) {
  if (v.is_string()) return at_field(field, [&] { return alg.parse_element(v.get<std::string>()); });
  if (!v.is_array()) throw InputError(field + ": expected an element expression or [[coef, index], ...]");
  AlgebraElement out;
  for (std::size_t t = 0; t < v.size(); ++t) {
    const std::string tpath = field + "[" + std::to_string(t) + "]";
    const json& term = v[t];
    if (!term.is_array() || term.size() != 2 || !term[1].is_number_unsigned()) {
      throw InputError(tpath + ": expected [coef, index]");
    }
    const auto idx = term[1].get<BasisIndex>();
    if (idx >= alg.dim()) throw InputError(tpath + ": basis index " + std::to_string(idx) + " out of range");
    Scalar c = at_field(tpath, [&] {
      if (term[0].is_string()) return Scalar::parse(alg.field(), term[0].get<std::string>());
      if (term[0].is_number_integer()) return Scalar(alg.field(), term[0].get<std::int64_t>());
      throw InputError("coefficient must be a string or integer");
    });
    out.add(idx, c);
  }
  return out;
}

Cochain2 cocycle_from_json(const json& doc, const fs::path& base_dir, const std::string& root) {
  if (!doc.is_object()) throw InputError(root + ": expected an object");
  const FiniteGroup g = group_from_json(member(doc, "group", root), base_dir, root + ".group");
  const FiniteAbelianGroup a = coeff_from_json(member(doc, "coeff", root), root + ".coeff");
  const json& rows = member(doc, "values", root);
  const std::size_t n = g.order();
  if (!rows.is_array() || rows.size() != n) {
    throw InputError(root + ".values: expected " + std::to_string(n) + " rows");
  }
  std::vector<AElem> values;
  values.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::string rpath = root + ".values[" + std::to_string(i) + "]";
    if (!rows[i].is_array() || rows[i].size() != n) {
      throw InputError(rpath + ": expected " + std::to_string(n) + " entries");
    }
    for (std::size_t j = 0; j < n; ++j) {
      values.push_back(aelem_from_json(a, rows[i][j], rpath + "[" + std::to_string(j) + "]"));
    }
  }
  return at_field(root + ".values", [&] { return Cochain2(g, a, std::move(values)); });
}

}  // namespace

FiniteGroup parse_group(std::string_view spec, const fs::path& base_dir) {
  if (spec.starts_with("cyclic:")) {
    return make_cyclic(parse_uint(spec.substr(7), "group spec '" + std::string(spec) + "'"));
  }
  if (spec.starts_with("product:")) {
    const std::string_view rest = spec.substr(8);
    std::string first_error;
    for (std::size_t i = 0; i < rest.size(); ++i) {
      if (rest[i] != 'x' || !has_group_prefix(rest.substr(i + 1)) || !has_group_prefix(rest)) continue;
      try {
        return make_product(parse_group(rest.substr(0, i), base_dir), parse_group(rest.substr(i + 1), base_dir));
      } catch (const InputError& e) {
        if (first_error.empty()) first_error = e.what();
      }
    }
    throw InputError("group spec '" + std::string(spec) + "': expected product:<spec>x<spec>" +
                     (first_error.empty() ? "" : " (" + first_error + ")"));
  }
  if (spec.starts_with("table:")) {
    const fs::path path = resolve(fs::path(std::string(spec.substr(6))), base_dir);
    const std::string field = "table file " + path.string();
    const json doc = parse_json(read_file(path, field), field);
    if (!doc.is_object() || !doc.contains("table") || !doc["table"].is_array()) {
      throw InputError(field + ".table: expected an array of rows");
    }
    std::vector<std::vector<Elem>> table;
    for (std::size_t r = 0; r < doc["table"].size(); ++r) {
      const json& row = doc["table"][r];
      const std::string rpath = field + ".table[" + std::to_string(r) + "]";
      if (!row.is_array()) throw InputError(rpath + ": expected an array");
      std::vector<Elem> out;
      for (const json& v : row) {
        if (!v.is_number_unsigned()) throw InputError(rpath + ": entries must be non-negative integers");
        out.push_back(v.get<Elem>());
      }
      table.push_back(std::move(out));
    }
    return at_field(field, [&] { return make_from_table(table); });
  }
  throw InputError("unknown group spec '" + std::string(spec) + "' (expected cyclic:, product: or table:)");
}

FiniteAbelianGroup parse_coeff(std::string_view spec) {
  const std::string what = "coefficient spec '" + std::string(spec) + "'";
  std::string_view rest = spec.starts_with("coeff:") ? spec.substr(6) : spec;
  std::vector<std::uint32_t> factors;
  while (true) {
    const auto x = rest.find('x');
    const auto m = parse_uint(rest.substr(0, x), what);
    if (m == 0 || m > kMaxCoefficientOrder) throw InputError(what + ": moduli must lie in [1, 65536]");
    factors.push_back(static_cast<std::uint32_t>(m));
    if (x == std::string_view::npos) break;
    rest = rest.substr(x + 1);
  }
  return abelian_make(std::move(factors));
}

Cochain2 parse_cocycle(std::string_view json_text, const fs::path& base_dir) {
  return cocycle_from_json(parse_json(json_text, "cocycle"), base_dir, "cocycle");
}

Cochain2 load_cocycle(const fs::path& path) {
  const std::string root = path.string();
  return cocycle_from_json(parse_json(read_file(path, root), root), path.parent_path(), root);
}

RunConfig parse_run_config(std::string_view json_text, const fs::path& base_dir) {
  const std::string root = "config";
  const json doc = parse_json(json_text, root);
  if (!doc.is_object()) throw InputError(root + ": expected an object");

  const std::string algebra_spec = member_string(doc, "algebra", root);
  const std::string afield = root + ".algebra";
  int window = 0;
  const GradedBasisAlgebra algebra = at_field(afield, [&]() -> GradedBasisAlgebra {
    if (algebra_spec.starts_with("circle:")) {
      const std::string_view rest = std::string_view(algebra_spec).substr(7);
      const auto colon = rest.find(':');
      if (colon == std::string_view::npos) throw InputError("expected circle:<p>:<window>");
      const auto p = parse_uint(rest.substr(0, colon), "characteristic");
      window = static_cast<int>(parse_uint(rest.substr(colon + 1), "window"));
      return circle_model(static_cast<std::uint32_t>(p), window);
    }
    if (algebra_spec.starts_with("cpl:")) {
      const std::string_view rest = std::string_view(algebra_spec).substr(4);
      const auto colon = rest.find(':');
      if (colon == std::string_view::npos) throw InputError("expected cpl:<l>:<p>");
      const auto l = parse_uint(rest.substr(0, colon), "l");
      const auto p = parse_uint(rest.substr(colon + 1), "p");
      return cpl_minimal_model(static_cast<int>(l), static_cast<std::uint32_t>(p));
    }
    if (algebra_spec.starts_with("file:")) {
      return load_presentation(resolve(fs::path(algebra_spec.substr(5)), base_dir));
    }
    throw InputError("unknown algebra spec '" + algebra_spec + "' (expected circle:, cpl: or file:)");
  });

  const FiniteGroup group = group_from_json(member(doc, "group", root), base_dir, root + ".group");
  const FiniteAbelianGroup coeff = coeff_from_json(member(doc, "coeff", root), root + ".coeff");

  std::vector<AlgebraElement> images;
  const std::string gfield = root + ".generator_images";
  if (doc.contains("generator_images")) {
    const json& gi = doc["generator_images"];
    if (!gi.is_array()) throw InputError(gfield + ": expected an array");
    for (std::size_t i = 0; i < gi.size(); ++i) {
      images.push_back(element_from_json(algebra, gi[i], gfield + "[" + std::to_string(i) + "]"));
    }
  } else {
    for (std::size_t i = 0; i < coeff.rank(); ++i) images.push_back(algebra.unit_element());
  }
  const UnitEmbedding embed = at_field(gfield, [&] { return embedding_make(coeff, algebra, images); });

  const std::string cfield = root + ".cocycle";
  const std::string cspec = member_string(doc, "cocycle", root);
  const Cochain2 cocycle = at_field(cfield, [&]() -> Cochain2 {
    if (cspec == "zero") return Cochain2::zero(group, coeff);
    if (cspec.starts_with("carrying:")) return carrying_cocycle(group, coeff, coeff.parse(cspec.substr(9)));
    if (cspec.starts_with("file:")) {
      Cochain2 c = load_cocycle(resolve(fs::path(cspec.substr(5)), base_dir));
      if (!(c.group() == group)) throw InputError("cocycle file is over a different group");
      if (!(c.coeff() == coeff)) throw InputError("cocycle file has different coefficients");
      return c;
    }
    throw InputError("unknown cocycle spec '" + cspec + "' (expected zero, carrying:<a> or file:<path>)");
  });

  TwistedAlgebra ta = at_field(root, [&] { return TwistedAlgebra::make(algebra, group, embed, cocycle); });
  return RunConfig{algebra_spec, window, std::move(ta)};
}

RunConfig load_run_config(const fs::path& path) {
  return parse_run_config(read_file(path, "config"), path.parent_path());
}

}  // namespace orbiloop::config
