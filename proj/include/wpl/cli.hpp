#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "wpl/admissible_hom.hpp"
#include "wpl/coordinate_algebra.hpp"

namespace wpl {

enum class CommandStatus { Ok, Error };

struct CommandResult {
  CommandStatus status = CommandStatus::Ok;
  // JSON payload; empty on error.
  nlohmann::json payload;
  // Raw text output (DOT, help); printed instead of the payload when set.
  std::string text;
  std::vector<std::string> diagnostics;
  // 0 ok, 1 domain error, 2 usage error.
  int exit_code = 0;
};

// args excludes the program name.
CommandResult run(const std::vector<std::string>& args);

// Hom JSON: {"domain":[..],"codomain":[..],"matrix":[[..],..]} or with
// "images":["d","z2+z3",..] in place of the matrix.
nlohmann::json hom_to_json(const StringHom& h);
StringHom hom_from_json(const nlohmann::json& j);

// Phi JSON: hom fields for pi plus "mu":[literals] and "phi":[polynomials].
nlohmann::json phi_to_json(const CompatibleHom<FieldElem>& ch);
CompatibleHom<FieldElem> phi_from_json(const nlohmann::json& j);

// Splits "a,b,(c,d)" on top-level commas.
std::vector<std::string> split_top_level(const std::string& text, char sep = ',');

}  // namespace wpl
