#include "orbiloop/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "json.hpp"
#include "orbiloop/config.hpp"

namespace orbiloop::cli {

namespace {

using ojson = nlohmann::ordered_json;

Method parse_method(const std::string& name) {
  if (name == "linalg") return Method::linalg;
  if (name == "brute") return Method::brute;
  throw InputError("--method: expected linalg or brute, got '" + name + "'");
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw InputError("cannot write " + path);
  f << text;
}

ojson witness_json(const Cochain1& xi) {
  ojson out = ojson::array();
  for (AElem v : xi.values()) out.push_back(xi.coeff().name(v));
  return out;
}

std::string witness_text(const Cochain1& xi) {
  std::string s = "[";
  for (std::size_t i = 0; i < xi.values().size(); ++i) {
    s += (i ? ", " : "") + xi.coeff().name(xi.values()[i]);
  }
  return s + "]";
}

int cmd_group(const std::string& spec, std::ostream& out) {
  const FiniteGroup g = config::parse_group(spec, std::filesystem::current_path());
  const auto classes = conjugacy_classes(g);
  ojson doc;
  doc["label"] = g.label();
  doc["order"] = g.order();
  doc["identity"] = g.identity();
  doc["abelian"] = g.is_abelian();
  const auto gen = g.cyclic_generator();
  doc["cyclic_generator"] = gen ? ojson(*gen) : ojson(nullptr);
  ojson orders = ojson::array();
  for (Elem x = 0; x < g.order(); ++x) orders.push_back(g.element_order(x));
  doc["element_orders"] = orders;
  doc["conjugacy_classes"] = classes.classes;
  doc["table"] = g.table();
  out << doc.dump(2) << "\n";
  return kExitOk;
}

int cmd_h2(const std::string& group, const std::string& coeff, const std::string& method, std::ostream& out) {
  const Method m = parse_method(method);
  const FiniteGroup g = config::parse_group(group, std::filesystem::current_path());
  const FiniteAbelianGroup a = config::parse_coeff(coeff);
  out << h2_order(g, a, m) << "\n";
  return kExitOk;
}

int cmd_cohomologous(const std::string& p1, const std::string& p2, const std::string& method, std::ostream& out) {
  const Method m = parse_method(method);
  const Cochain2 c = config::load_cocycle(p1);
  const Cochain2 c2 = config::load_cocycle(p2);
  if (!(c.group() == c2.group())) throw InputError(p2 + ".group: differs from " + p1);
  if (!(c.coeff() == c2.coeff())) throw InputError(p2 + ".coeff: differs from " + p1);
  for (const auto* x : {&c, &c2}) {
    if (auto check = is_cocycle(*x); !check) {
      const auto& w = *check.witness;
      throw InputError(std::string(x == &c ? p1 : p2) + ".values: not a cocycle at (" + std::to_string(w[0]) + "," +
                       std::to_string(w[1]) + "," + std::to_string(w[2]) + ")");
    }
  }
  const auto xi = m == Method::brute ? brute_force_cohomologous(c, c2) : solve_coboundary(c, c2);
  if (!xi) {
    out << "not cohomologous\n";
    return kExitNegative;
  }
  out << "cohomologous, witness: ξ = " << witness_text(*xi) << "\n";
  return kExitOk;
}

int cmd_twist(const std::string& path, const std::string& table, std::ostream& out) {
  const auto cfg = config::load_run_config(path);
  const std::string text = cfg.twisted.multiplication_table();
  if (table.empty()) {
    out << text;
  } else {
    write_file(table, text);
  }
  return kExitOk;
}

int cmd_tqft(const std::string& path, int radius, std::ostream& out) {
  const auto cfg = config::load_run_config(path);
  std::vector<BasisIndex> window;
  if (radius >= 0) {
    if (cfg.circle_window == 0) throw InputError("--window: only meaningful for the circle model");
    if (radius > cfg.circle_window) throw InputError("--window: radius exceeds the model window");
    window = circle_window(cfg.circle_window, radius);
  }
  const TqftReport r = check_tqft(cfg.twisted, window);
  auto status = [](const std::optional<bool>& b) { return b ? ojson(*b) : ojson("n/a"); };
  ojson doc;
  doc["associativity"] = r.associativity;
  doc["coassociativity"] = status(r.coassociativity);
  doc["frobenius"] = status(r.frobenius);
  doc["cocommutativity"] = status(r.cocommutativity);
  doc["checked_triples"] = r.checked_triples;
  doc["skipped_triples"] = r.skipped_triples;
  doc["checked_pairs"] = r.checked_pairs;
  doc["skipped_pairs"] = r.skipped_pairs;
  ojson failures = ojson::array();
  for (const auto& f : r.failures) {
    ojson w = ojson::array();
    for (TwistedKey k : f.witness) w.push_back(cfg.twisted.format_key(k));
    failures.push_back({{"axiom", f.axiom}, {"witness", w}, {"detail", f.detail}});
  }
  doc["failures"] = failures;
  doc["passed"] = r.passed();
  out << doc.dump(2) << "\n";
  return r.passed() ? kExitOk : kExitNegative;
}

int cmd_verdict(const std::string& path, const std::string& report_path, const std::string& table, bool as_json,
                std::ostream& out, std::ostream& err) {
  const auto cfg = config::load_run_config(path);
  const SplittingVerdict v = splitting_verdict(cfg.twisted);
  ojson doc;
  doc["summary"] = v.summary();
  doc["splits"] = v.splits;
  doc["witness"] = v.witness ? witness_json(*v.witness) : ojson(nullptr);
  doc["checked_iso"] = v.checked_iso;
  doc["h2_order"] = v.h2_order;
  doc["obstruction_order"] = v.obstruction_order ? ojson(*v.obstruction_order) : ojson(nullptr);
  doc["warnings"] = v.warnings;
  doc["failures"] = v.failures;
  const std::string report = doc.dump(2) + "\n";
  if (!report_path.empty()) write_file(report_path, report);
  if (!table.empty()) write_file(table, cfg.twisted.multiplication_table());
  for (const auto& w : v.warnings) err << "warning: " << w << "\n";
  if (as_json) {
    out << report;
  } else {
    out << v.summary() << "\n";
  }
  return v.splits && v.checked_iso ? kExitOk : kExitNegative;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Twisted loop-homology algebras over finite groups"};
  app.require_subcommand(1);

  std::string group_spec, coeff_spec, method = "linalg", path1, path2, table, report;
  int radius = -1;
  bool as_json = false;

  auto* group = app.add_subcommand("group", "Print a group's table, element orders and conjugacy classes");
  group->add_option("spec", group_spec, "cyclic:<n> | product:<A>x<B> | table:<path>")->required();

  auto* h2 = app.add_subcommand("h2", "Print the order of H^2(G; A)");
  h2->add_option("--group", group_spec, "group spec")->required();
  h2->add_option("--coeff", coeff_spec, "coefficient spec, e.g. 2 or coeff:2x4")->required();
  h2->add_option("--method", method, "linalg | brute");

  auto* coh = app.add_subcommand("cohomologous", "Decide whether two cocycle files define the same class");
  coh->add_option("c", path1, "cocycle JSON")->required();
  coh->add_option("c2", path2, "cocycle JSON")->required();
  coh->add_option("--method", method, "linalg | brute");

  auto* twist = app.add_subcommand("twist", "Print the twisted multiplication table (TSV)");
  twist->add_option("config", path1, "verdict config JSON")->required();
  twist->add_option("--table", table, "write the table here instead of stdout");

  auto* tqft = app.add_subcommand("tqft", "Check associativity, coassociativity and the Frobenius relation");
  tqft->add_option("config", path1, "verdict config JSON")->required();
  tqft->add_option("--window", radius, "circle model: restrict to exponents |n| <= radius");

  auto* verdict = app.add_subcommand("verdict", "Decide whether the twisted algebra splits");
  verdict->add_option("config", path1, "verdict config JSON")->required();
  verdict->add_option("--out", report, "write the JSON report here");
  verdict->add_option("--table", table, "write the twisted multiplication table here");
  verdict->add_flag("--json", as_json, "print the JSON report instead of the summary line");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(std::move(reversed));
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitInputError;
  }

  try {
    if (*group) return cmd_group(group_spec, out);
    if (*h2) return cmd_h2(group_spec, coeff_spec, method, out);
    if (*coh) return cmd_cohomologous(path1, path2, method, out);
    if (*twist) return cmd_twist(path1, table, out);
    if (*tqft) return cmd_tqft(path1, radius, out);
    if (*verdict) return cmd_verdict(path1, report, table, as_json, out, err);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}

}  // namespace orbiloop::cli
