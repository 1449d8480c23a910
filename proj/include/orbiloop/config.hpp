#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "orbiloop/abelian.hpp"
#include "orbiloop/algebra.hpp"
#include "orbiloop/cohomology.hpp"
#include "orbiloop/fingroup.hpp"
#include "orbiloop/twisted.hpp"

namespace orbiloop::config {

// Group specs: "cyclic:<n>", "product:<spec>x<spec>", "table:<path>" where the
// file holds {"table": [[...], ...]}. Relative paths resolve against base_dir.
FiniteGroup parse_group(std::string_view spec, const std::filesystem::path& base_dir = {});

// Coefficient specs: "coeff:<m1>[x<m2>...]" or the bare "<m1>[x<m2>...]".
FiniteAbelianGroup parse_coeff(std::string_view spec);

// Cocycle file: {"group": <spec>, "coeff": [m1, ...] or <spec>,
//                "values": [[<a-element>, ...], ...]} in element-index order,
// where an a-element is a tuple [a1, ...], an integer (rank one) or a string.
Cochain2 parse_cocycle(std::string_view json_text, const std::filesystem::path& base_dir = {});
Cochain2 load_cocycle(const std::filesystem::path& path);

// Verdict config: {"algebra": "circle:<p>:<w>" | "cpl:<l>:<p>" | "file:<path>",
//                  "group": <spec>, "coeff": <spec>,
//                  "generator_images": [<element expression or term list>, ...],
//                  "cocycle": "zero" | "carrying:<a-element>" | "file:<path>"}
// Every piece is built and validated before anything is returned; errors
// carry the offending field path.
struct RunConfig {
  std::string algebra_spec;
  int circle_window = 0;  // > 0 when the algebra is the circle model
  TwistedAlgebra twisted;
};

RunConfig parse_run_config(std::string_view json_text, const std::filesystem::path& base_dir = {});
RunConfig load_run_config(const std::filesystem::path& path);

}  // namespace orbiloop::config
