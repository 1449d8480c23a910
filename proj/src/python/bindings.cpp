#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include <sstream>

#include "orbiloop/cli.hpp"
#include "orbiloop/config.hpp"
#include "orbiloop/twisted.hpp"

namespace py = pybind11;
using namespace orbiloop;

namespace {

Method method_of(const std::string& name) {
  if (name == "linalg") return Method::linalg;
  if (name == "brute") return Method::brute;
  throw InputError("method must be 'linalg' or 'brute'");
}

py::dict verdict_dict(const SplittingVerdict& v) {
  py::dict d;
  d["summary"] = v.summary();
  d["splits"] = v.splits;
  d["witness"] = v.witness ? py::cast(v.witness->values()) : py::none();
  d["checked_iso"] = v.checked_iso;
  d["h2_order"] = v.h2_order;
  d["obstruction_order"] = v.obstruction_order ? py::cast(*v.obstruction_order) : py::none();
  d["warnings"] = v.warnings;
  d["failures"] = v.failures;
  return d;
}

py::dict tqft_dict(const TwistedAlgebra& ta, const TqftReport& r) {
  py::dict d;
  d["associativity"] = r.associativity;
  d["coassociativity"] = r.coassociativity ? py::cast(*r.coassociativity) : py::none();
  d["frobenius"] = r.frobenius ? py::cast(*r.frobenius) : py::none();
  d["cocommutativity"] = r.cocommutativity ? py::cast(*r.cocommutativity) : py::none();
  d["checked_triples"] = r.checked_triples;
  d["skipped_triples"] = r.skipped_triples;
  d["checked_pairs"] = r.checked_pairs;
  d["skipped_pairs"] = r.skipped_pairs;
  py::list failures;
  for (const auto& f : r.failures) {
    std::vector<std::string> w;
    for (TwistedKey k : f.witness) w.push_back(ta.format_key(k));
    failures.append(py::make_tuple(f.axiom, w, f.detail));
  }
  d["failures"] = failures;
  d["passed"] = r.passed();
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Twisted loop-homology algebras over finite groups";

  py::register_exception<Error>(m, "Error");
  py::register_exception<InputError>(m, "InputError", m.attr("Error"));
  py::register_exception<ValidationError>(m, "ValidationError", m.attr("Error"));
  py::register_exception<WindowOverflow>(m, "WindowOverflow", m.attr("Error"));
  py::register_exception<CoproductUndefined>(m, "CoproductUndefined", m.attr("Error"));

  py::class_<FiniteGroup>(m, "FiniteGroup")
      .def_property_readonly("order", &FiniteGroup::order)
      .def_property_readonly("identity", &FiniteGroup::identity)
      .def_property_readonly("label", &FiniteGroup::label)
      .def("mul", &FiniteGroup::mul)
      .def("inv", &FiniteGroup::inv)
      .def("element_order", &FiniteGroup::element_order)
      .def("is_abelian", &FiniteGroup::is_abelian)
      .def("cyclic_generator", &FiniteGroup::cyclic_generator)
      .def("table", &FiniteGroup::table)
      .def("conjugacy_classes", [](const FiniteGroup& g) { return conjugacy_classes(g).classes; })
      .def("__eq__", [](const FiniteGroup& a, const FiniteGroup& b) { return a == b; })
      .def("__repr__", [](const FiniteGroup& g) { return "<FiniteGroup " + g.label() + ">"; });
  m.def("cyclic", &make_cyclic, py::arg("n"));
  m.def("product", &make_product);
  m.def("from_table", &make_from_table);
  m.def("parse_group", [](const std::string& spec) { return config::parse_group(spec); });

  py::class_<FiniteAbelianGroup>(m, "FiniteAbelianGroup")
      .def(py::init<std::vector<std::uint32_t>>())
      .def_property_readonly("factors", &FiniteAbelianGroup::factors)
      .def_property_readonly("order", &FiniteAbelianGroup::order)
      .def("encode", &FiniteAbelianGroup::encode)
      .def("decode", &FiniteAbelianGroup::decode)
      .def("add", &FiniteAbelianGroup::add)
      .def("neg", &FiniteAbelianGroup::neg)
      .def("name", &FiniteAbelianGroup::name)
      .def("parse", &FiniteAbelianGroup::parse)
      .def("element_order", &FiniteAbelianGroup::element_order);
  m.def("parse_coeff", &config::parse_coeff);

  py::class_<GradedBasisAlgebra>(m, "Algebra")
      .def_property_readonly("name", &GradedBasisAlgebra::name)
      .def_property_readonly("dim", &GradedBasisAlgebra::dim)
      .def_property_readonly("characteristic", [](const GradedBasisAlgebra& h) { return h.field().characteristic(); })
      .def_property_readonly("euler_char", &GradedBasisAlgebra::euler_char)
      .def_property_readonly("notes", &GradedBasisAlgebra::notes)
      .def_property_readonly("basis",
                             [](const GradedBasisAlgebra& h) {
                               std::vector<std::pair<std::string, int>> out;
                               for (const auto& b : h.basis()) out.emplace_back(b.name, b.degree);
                               return out;
                             })
      .def(
          "multiply",
          [](const GradedBasisAlgebra& h, const std::string& x, const std::string& y) {
            return h.format(multiply(h, h.parse_element(x), h.parse_element(y)));
          },
          "Multiply two element expressions and format the result")
      .def("coproduct", [](const GradedBasisAlgebra& h, const std::string& x) {
        std::vector<std::tuple<std::string, std::string, std::string>> out;
        for (const auto& [pr, c] : base_coproduct(h, h.parse_element(x))) {
          out.emplace_back(c.to_string(), h.basis()[pr.first].name, h.basis()[pr.second].name);
        }
        return out;
      });
  m.def("circle_model", &circle_model, py::arg("characteristic"), py::arg("window"));
  m.def("cpl_minimal_model", &cpl_minimal_model, py::arg("l"), py::arg("p"));
  m.def("load_presentation", &load_presentation);

  py::class_<Cochain2>(m, "Cochain2")
      .def(py::init<FiniteGroup, FiniteAbelianGroup, std::vector<AElem>>())
      .def_static("zero", &Cochain2::zero)
      .def_property_readonly("values", &Cochain2::values)
      .def("__add__", &Cochain2::operator+)
      .def("times", &Cochain2::times)
      .def("__eq__", [](const Cochain2& a, const Cochain2& b) { return a == b; });
  m.def("carrying_cocycle", [](const FiniteGroup& g, const FiniteAbelianGroup& a, AElem v) {
    return carrying_cocycle(g, a, v);
  });
  m.def("coboundary", [](const FiniteGroup& g, const FiniteAbelianGroup& a, std::vector<AElem> xi) {
    return d1(Cochain1(g, a, std::move(xi)));
  });
  m.def("is_cocycle", [](const Cochain2& c) { return is_cocycle(c).ok; });
  m.def(
      "cohomologous",
      [](const Cochain2& c, const Cochain2& c2, const std::string& method) -> std::optional<std::vector<AElem>> {
        auto xi = method_of(method) == Method::brute ? brute_force_cohomologous(c, c2) : solve_coboundary(c, c2);
        if (!xi) return std::nullopt;
        return xi->values();
      },
      py::arg("c"), py::arg("c2"), py::arg("method") = "linalg",
      "A witness xi with c = c2 + d(xi), or None");
  m.def(
      "h2_order",
      [](const FiniteGroup& g, const FiniteAbelianGroup& a, const std::string& method) {
        return h2_order(g, a, method_of(method));
      },
      py::arg("group"), py::arg("coeff"), py::arg("method") = "linalg");
  m.def(
      "class_order", [](const Cochain2& c, const std::string& method) { return class_order(c, method_of(method)); },
      py::arg("c"), py::arg("method") = "linalg");

  py::class_<TwistedAlgebra>(m, "TwistedAlgebra")
      .def_static(
          "make",
          [](const GradedBasisAlgebra& h, const FiniteGroup& g, const FiniteAbelianGroup& a,
             const std::vector<std::string>& images, const Cochain2& c) {
            std::vector<AlgebraElement> imgs;
            for (const auto& s : images) imgs.push_back(h.parse_element(s));
            return TwistedAlgebra::make(h, g, embedding_make(a, h, imgs), c);
          },
          py::arg("algebra"), py::arg("group"), py::arg("coeff"), py::arg("generator_images"), py::arg("cocycle"))
      .def_property_readonly("dim", &TwistedAlgebra::dim)
      .def_property_readonly("base", &TwistedAlgebra::base)
      .def_property_readonly("group", &TwistedAlgebra::group)
      .def_property_readonly("cocycle", &TwistedAlgebra::cocycle)
      .def(
          "product",
          [](const TwistedAlgebra& ta, BasisIndex x, Elem g, BasisIndex y, Elem h) {
            return ta.format(ta.product(ta.basis_element(x, g), ta.basis_element(y, h)));
          },
          "Product of basis elements x(x)g and y(x)h, formatted")
      .def("multiplication_table", &TwistedAlgebra::multiplication_table)
      .def("verdict", [](const TwistedAlgebra& ta) { return verdict_dict(splitting_verdict(ta)); })
      .def(
          "tqft",
          [](const TwistedAlgebra& ta, std::vector<BasisIndex> window) {
            return tqft_dict(ta, check_tqft(ta, window));
          },
          py::arg("window") = std::vector<BasisIndex>{})
      .def("invariant_part_size", [](const TwistedAlgebra& ta) { return invariant_part(ta).basis.size(); });

  m.def("load_config", [](const std::filesystem::path& p) { return config::load_run_config(p).twisted; });
  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  });
}
