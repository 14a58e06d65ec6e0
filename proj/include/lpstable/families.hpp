#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "lpstable/semantics.hpp"
#include "lpstable/syntax.hpp"

namespace lpstable {

/// A family of finite sets of atom names. Normalized: members sorted and
/// duplicate-free, the family sorted and duplicate-free.
class SetFamily {
public:
    using Set = std::vector<std::string>;

    SetFamily() = default;
    explicit SetFamily(std::vector<Set> sets);

    const std::vector<Set>& sets() const noexcept { return sets_; }
    std::size_t size() const noexcept { return sets_.size(); }
    bool empty() const noexcept { return sets_.empty(); }
    /// Sum of member cardinalities.
    std::size_t totalSize() const noexcept;

    friend bool operator==(const SetFamily&, const SetFamily&) = default;

private:
    std::vector<Set> sets_;
};

/// Family of stable models of a program, by atom name.
SetFamily toSetFamily(const Program& program, const ModelFamily& models);

/// One set per line, "{a, b}"; blank lines and %-comments are skipped.
SetFamily parseFamily(std::string_view text);
std::string printFamily(const SetFamily& family);

bool isAntichain(const SetFamily& family);

/// Picks x_{B,C} from the sorted, nonempty difference C \ B.
using WitnessPolicy = std::function<std::string(const std::vector<std::string>& choices)>;

WitnessPolicy leastWitness();
WitnessPolicy greatestWitness();
/// Deterministic pseudo-random choice seeded by seed.
WitnessPolicy seededWitness(std::uint64_t seed);

/// For each B in F and b in B: b <- not x_{B,C} for every other C in F.
/// The empty family encodes to {x <- not x}; the family {{}} to the empty program.
/// Throws Error on a non-antichain or when the empty set sits beside other members.
Program encodeAntichain(const SetFamily& family, const WitnessPolicy& policy = leastWitness());

struct EncodingSizeReport {
    std::size_t clauses = 0;
    std::size_t size = 0;
    std::size_t clauseCeiling = 0;  ///< sum of |B|
    std::size_t sizeCeiling = 0;    ///< |F| * sum of |B|

    bool withinBounds() const noexcept { return clauses <= clauseCeiling && size <= sizeCeiling; }
};

EncodingSizeReport encodingSizeReport(const SetFamily& family, const WitnessPolicy& policy = leastWitness());

}  // namespace lpstable
