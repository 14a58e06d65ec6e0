#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "lpstable/families.hpp"
#include "lpstable/syntax.hpp"
#include "lpstable/transform.hpp"

namespace lpstable {

/// Seeded program generators for property suites.
///
/// Distribution: the rule count is uniform in the requested range, heads are uniform
/// over the atom pool, body length is geometric (continue with probability
/// bodyContinue) capped at maxBody, each body literal picks a distinct atom uniformly
/// and is negative with probability negativeBias.
class RandomPrograms {
public:
    explicit RandomPrograms(std::uint64_t seed) : rng_(seed) {}

    double bodyContinue = 0.65;
    std::size_t maxBody = 3;
    /// Probability that a body literal is negative.
    double negativeBias = 0.5;

    /// Atom names a, b, c, ... (then a1, b1, ... past 26).
    static std::vector<std::string> atomPool(std::size_t count);

    std::size_t uniform(std::size_t lo, std::size_t hi);
    bool coin(double p = 0.5);

    Program normal(std::size_t atomCount, std::size_t minRules, std::size_t maxRules);
    /// Exactly n rules, each with at most one body literal.
    Program shortBody(std::size_t atomCount, std::size_t n);
    /// Normal program of size at most maxSize (at least one rule when maxSize >= 1).
    Program sizeBounded(std::size_t atomCount, std::size_t maxSize);
    /// n rules, each clause (head plus body) has at most m atom occurrences.
    Program disjunctive(std::size_t atomCount, std::size_t n, std::size_t m);
    /// Applies `count` random edits (drop a body literal, add one, or retarget the head)
    /// to a normal program; the rule count is preserved and bodies stay within maxBody.
    Program perturb(const Program& program, std::size_t count);
    /// Disjoint T and F over the atoms of the program.
    SplitContext split(const Program& program, double pTrue = 0.2, double pFalse = 0.2);
    /// Antichain of nonempty sets over at most atomCount atoms.
    SetFamily antichain(std::size_t atomCount, std::size_t maxSets);

    std::mt19937_64& engine() noexcept { return rng_; }

private:
    std::vector<std::string> pickDistinct(const std::vector<std::string>& pool, std::size_t count);
    std::size_t bodyLength();
    bool negative() { return coin(negativeBias); }

    std::mt19937_64 rng_;
};

/// Seed for the i-th case of a suite run with base seed `base`.
std::uint64_t caseSeed(std::uint64_t base, std::uint64_t index) noexcept;

}  // namespace lpstable
