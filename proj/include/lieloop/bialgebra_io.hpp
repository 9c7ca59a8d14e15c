#pragma once

// JSON files for BialgebraSpec: {"dim": n, "mu": [..], "gamma": [..], "psi": [..]},
// each tensor a row-major nested n x n x n array.

#include <string>

#include "lieloop/errors.hpp"
#include "lieloop/quasi_lie_bialgebra.hpp"

namespace lieloop {

/// Malformed file: parse error, wrong shape, or broken antisymmetry.
class FormatError : public InvalidInput {
 public:
  explicit FormatError(const std::string& what) : InvalidInput(what) {}
};

BialgebraSpec parse_bialgebra(const std::string& text, const std::string& source = "<string>");
std::string bialgebra_to_json(const BialgebraSpec& spec);

BialgebraSpec load_bialgebra(const std::string& path);
void save_bialgebra(const BialgebraSpec& spec, const std::string& path);

}  // namespace lieloop
