#pragma once

#include <string_view>

#include "lpstable/syntax.hpp"

namespace lpstable {

/// Atoms true and false under the well-founded semantics; the rest are undefined.
struct WfsResult {
    AtomSet trueSet;
    AtomSet falseSet;
};

/// Alternating fixpoint of the squared Gelfond-Lifschitz operator.
/// Atoms are those occurring in the program; atoms heading no rule end up false.
WfsResult wellFounded(const Program& program);

enum class ImpliedSetStrategy {
    Trivial,      ///< M = {}, P0 = P
    WellFounded,  ///< M = T, P0 = simp(P, T, F)
};

std::string_view toString(ImpliedSetStrategy strategy) noexcept;
/// "trivial" or "wfs"; throws Error otherwise.
ImpliedSetStrategy impliedSetStrategyFromString(std::string_view name);

/// M is contained in every stable model of P; stable models of P are exactly M united
/// with the stable models of the residual.
struct ImpliedSetResult {
    AtomSet impliedTrue;
    Program residual;
};

ImpliedSetResult impliedSet(const Program& program, ImpliedSetStrategy strategy = ImpliedSetStrategy::WellFounded);

}  // namespace lpstable
