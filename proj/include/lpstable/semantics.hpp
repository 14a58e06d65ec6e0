#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "lpstable/syntax.hpp"

namespace lpstable {

/// A program with no negative body literals. Heads may be disjunctive.
class PositiveProgram {
public:
    /// Throws Error if some rule has a negative body literal.
    explicit PositiveProgram(Program program);
    const Program& program() const noexcept { return program_; }
    const std::vector<Rule>& rules() const noexcept { return program_.rules(); }

private:
    Program program_;
};

/// Sorted set of interpretations (ordered by atom ids).
using ModelFamily = std::vector<Interpretation>;

/// Sorts and removes duplicates.
ModelFamily normalizeFamily(ModelFamily family);
bool isAntichain(const ModelFamily& family);
/// One model per line, atoms sorted by name, lines sorted lexicographically.
std::string formatFamily(const Program& program, const ModelFamily& family);
/// Models as name lists, in the same order formatFamily prints them.
std::vector<std::vector<std::string>> familyNames(const Program& program, const ModelFamily& family);

/// Drops rules blocked by M, strips the remaining negative literals.
PositiveProgram glReduct(const Program& program, const Interpretation& model);

/// Least model of a normal positive program by unit propagation.
Interpretation leastModel(const PositiveProgram& program);

bool isModel(const PositiveProgram& program, const Interpretation& model);

/// M = LM(P^M). Rejects disjunctive programs.
bool isStable(const Program& program, const Interpretation& model);

/// Model of H with no model of H strictly inside it. Exhaustive over subsets of M.
bool isMinimalModel(const PositiveProgram& program, const Interpretation& model);

/// M is a minimal model of D^M.
bool isAnswerSet(const Program& program, const Interpretation& model);

/// Indices of rules r with posBody(r) in M and negBody(r) disjoint from M.
std::vector<std::size_t> generatingRules(const Program& program, const Interpretation& model);

inline constexpr std::size_t kDefaultBruteForceCap = 20;

/// Every subset of heads(P) that is stable. Throws Error when |heads| > cap.
ModelFamily bruteForceStable(const Program& program, std::size_t cap = kDefaultBruteForceCap);

/// Every subset of the head atoms of D that is an answer set.
ModelFamily bruteForceAnswerSets(const Program& program, std::size_t cap = kDefaultBruteForceCap);

}  // namespace lpstable
