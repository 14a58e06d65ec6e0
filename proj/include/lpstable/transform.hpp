#pragma once

#include <cstddef>

#include "lpstable/syntax.hpp"

namespace lpstable {

/// Atoms forced true (T) and forced false (F); the two sets must be disjoint.
struct SplitContext {
    AtomSet forcedTrue;
    AtomSet forcedFalse;
};

/// simp(P,T,F), steps applied in order:
///   1. drop rules whose head is in T or F
///   2. drop rules with a positive body atom in F
///   3. drop rules with a negative body atom in T
///   4. delete positive body atoms in T and negative body atoms in F
/// Defined for normal programs only.
Program simp(const Program& program, const AtomSet& forcedTrue, const AtomSet& forcedFalse);
inline Program simp(const Program& program, const SplitContext& ctx) {
    return simp(program, ctx.forcedTrue, ctx.forcedFalse);
}

/// P(q+) = simp(P, {q}, {}).
Program atomReductPos(const Program& program, AtomId q);
/// P(q-) = simp(P, {}, {q}).
Program atomReductNeg(const Program& program, AtomId q);

/// The split context of P(r+): T = {head} + posBody, F = negBody.
/// Throws Error when they overlap (the rule can never be generating).
SplitContext ruleSplitContext(const Program& program, std::size_t ruleIndex);
/// True when P(r+) is defined for the rule at ruleIndex.
bool ruleReductPosDefined(const Program& program, std::size_t ruleIndex);
Program ruleReductPos(const Program& program, std::size_t ruleIndex);
/// P with exactly the rule at ruleIndex removed.
Program ruleReductNeg(const Program& program, std::size_t ruleIndex);

/// Drops every rule whose head occurs in its own body or whose body has an atom in both signs.
Program removeRedundantRules(const Program& program);

/// Deletes not(q) everywhere for every atom q that heads no rule.
Program overline(const Program& program);

}  // namespace lpstable
