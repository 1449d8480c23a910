#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "orbiloop/cli.hpp"
#include "orbiloop/config.hpp"

using namespace orbiloop;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(ORBILOOP_TEST_DATA) + "/" + name; }

}  // namespace

TEST_CASE("group and coefficient specs") {
  CHECK(config::parse_group("cyclic:5").order() == 5);
  CHECK(config::parse_group("product:cyclic:2xcyclic:3").order() == 6);
  CHECK(config::parse_group("product:product:cyclic:2xcyclic:2xcyclic:3").order() == 12);
  CHECK(config::parse_group("table:s3_table.json", ORBILOOP_TEST_DATA).order() == 6);
  CHECK_THROWS_AS(config::parse_group("dihedral:4"), InputError);
  CHECK_THROWS_AS(config::parse_group("cyclic:x"), InputError);
  CHECK_THROWS_AS(config::parse_group("table:missing.json"), InputError);
  CHECK(config::parse_coeff("2").factors() == std::vector<std::uint32_t>{2});
  CHECK(config::parse_coeff("coeff:2x4").factors() == std::vector<std::uint32_t>{2, 4});
  CHECK_THROWS_AS(config::parse_coeff("coeff:0"), InputError);
  CHECK_THROWS_AS(config::parse_coeff("coeff:"), InputError);
}

TEST_CASE("cocycle files") {
  const auto c = config::load_cocycle(data("carrying_c2_z2.json"));
  CHECK(c.values() == std::vector<AElem>{0, 0, 0, 1});
  CHECK(config::load_cocycle(data("zero_c2_z3.json")) == Cochain2::zero(make_cyclic(2), abelian_make({3})));
  CHECK_THROWS_WITH_AS(config::parse_cocycle(R"({"group": "cyclic:2", "coeff": [2], "values": [[0, 0]]})"),
                       doctest::Contains("cocycle.values"), InputError);
  CHECK_THROWS_WITH_AS(config::parse_cocycle(R"({"group": "cyclic:2", "coeff": [2], "values": [[0, 0], [0, 5]]})"),
                       doctest::Contains("cocycle.values[1][1]"), InputError);
}

TEST_CASE("run configs fail fast with field paths") {
  CHECK_NOTHROW(config::load_run_config(data("verdict_synthetic.json")));
  CHECK_THROWS_WITH_AS(config::load_run_config(data("bad_generator.json")),
                       doctest::Contains("config.generator_images"), InputError);
  CHECK_THROWS_WITH_AS(config::parse_run_config(R"({"algebra": "torus:1", "group": "cyclic:2", "coeff": "1",
                                                   "cocycle": "zero"})"),
                       doctest::Contains("config.algebra"), InputError);
  CHECK_THROWS_WITH_AS(config::parse_run_config(R"({"algebra": "cpl:1:2", "group": "cyclic:2", "coeff": "1"})"),
                       doctest::Contains("config.cocycle: missing"), InputError);
  CHECK_THROWS_WITH_AS(config::parse_run_config(R"({"algebra": "cpl:1:2", "group": "product:cyclic:2xcyclic:2",
                                                   "coeff": "2", "generator_images": ["1+eps"],
                                                   "cocycle": "carrying:1"})"),
                       doctest::Contains("config.cocycle"), InputError);
  const auto cfg = config::load_run_config(data("verdict_circle_c3.json"));
  CHECK(cfg.circle_window == 3);
}

TEST_CASE("h2 subcommand") {
  const auto r = run({"h2", "--group", "cyclic:4", "--coeff", "2"});
  CHECK(r.code == 0);
  CHECK(r.out == "2\n");
  CHECK(run({"h2", "--group", "cyclic:4", "--coeff", "2", "--method", "brute"}).out == "2\n");
  CHECK(run({"h2", "--group", "cyclic:4", "--coeff", "2", "--method", "fast"}).code == 2);
  CHECK(run({"h2", "--group", "cyclic:4"}).code == 2);
}

TEST_CASE("cohomologous subcommand") {
  const auto r = run({"cohomologous", data("carrying_c2_z2.json"), data("zero.json")});
  CHECK(r.code == 1);
  CHECK(r.out == "not cohomologous\n");
  const auto b = run({"cohomologous", data("carrying_c2_z2.json"), data("zero.json"), "--method", "brute"});
  CHECK(b.code == 1);
  const auto s = run({"cohomologous", data("carrying_c2_z3.json"), data("zero_c2_z3.json"), "--method", "brute"});
  CHECK(s.code == 0);
  CHECK(s.out == "cohomologous, witness: ξ = [0, 2]\n");
  const auto mismatch = run({"cohomologous", data("carrying_c2_z2.json"), data("zero_c2_z3.json")});
  CHECK(mismatch.code == 2);
  CHECK(mismatch.err.find(".coeff") != std::string::npos);
}

TEST_CASE("verdict subcommand") {
  const auto r = run({"verdict", data("verdict_circle_c3.json")});
  CHECK(r.code == 0);
  CHECK(r.out == "splits: true, witness: ξ ≡ 0\n");
  CHECK(run({"verdict", data("verdict_circle_c3.json")}).out == r.out);

  const auto n = run({"verdict", data("verdict_cp1_c2_z2.json"), "--json"});
  CHECK(n.code == 1);
  CHECK(n.out.find("\"splits\": false") != std::string::npos);
  CHECK(n.out.find("\"obstruction_order\": 2") != std::string::npos);
  CHECK(n.err.find("warning") != std::string::npos);
  CHECK(run({"verdict", data("verdict_cocycle_file.json")}).code == 1);

  const auto p = run({"verdict", data("verdict_cp2_c2.json")});
  CHECK(p.code == 0);
  CHECK(p.out.rfind("splits: true", 0) == 0);

  const auto bad = run({"verdict", data("bad_generator.json")});
  CHECK(bad.code == 2);
  CHECK(bad.err.find("config.generator_images") != std::string::npos);

  const auto tmp = std::filesystem::temp_directory_path() / "orbiloop_report.json";
  CHECK(run({"verdict", data("verdict_synthetic.json"), "--out", tmp.string()}).code == 0);
  std::ifstream in(tmp);
  std::stringstream ss;
  ss << in.rdbuf();
  CHECK(ss.str().find("\"checked_iso\": true") != std::string::npos);
  std::filesystem::remove(tmp);
}

TEST_CASE("twist, tqft and group subcommands") {
  const auto t = run({"twist", data("verdict_cp1_c2_z2.json")});
  CHECK(t.code == 0);
  CHECK(t.out.find("[CP^1]⊗1\t[CP^1]⊗1\t→\t[CP^1]⊗0 + eps⊗0\n") != std::string::npos);
  const auto q = run({"tqft", data("verdict_synthetic.json")});
  CHECK(q.code == 0);
  CHECK(q.out.find("\"frobenius\": true") != std::string::npos);
  CHECK(run({"tqft", data("verdict_circle_c3.json"), "--window", "1"}).code == 0);
  CHECK(run({"tqft", data("verdict_synthetic.json"), "--window", "1"}).code == 2);
  const auto g = run({"group", "product:cyclic:2xcyclic:2"});
  CHECK(g.code == 0);
  CHECK(g.out.find("\"order\": 4") != std::string::npos);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({}).code == 2);
}
