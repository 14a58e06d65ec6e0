#pragma once

#include <string>
#include <vector>

#include "lpstable/semantics.hpp"
#include "lpstable/syntax.hpp"

namespace lpstable::testing {

using Names = std::vector<std::vector<std::string>>;

inline Program prog(std::string_view text) { return parseProgram(text); }

inline AtomSet atoms(const Program& p, const std::vector<std::string>& names) { return p.lookup(names); }

/// Sorted name lists, for comparing families across programs.
inline Names names(const Program& p, const ModelFamily& family) { return familyNames(p, family); }

}  // namespace lpstable::testing
