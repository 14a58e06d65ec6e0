#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace lpstable {

/// Oracle-backed property suites used by `lpstable verify` and the acceptance binary.
///
///   bounds      extremal generators attain s0(n), n = 2..12
///   counting    every 2,3,4-signature with at most 12 clauses
///   disjunctive D(n,m) for nm <= 9 has exactly m^n answer sets
///   ceilings    random programs never exceed the class maxima
///   lemma1      stable models survive simp(P,T,F) with T removed
///   wfs         stable models are rebuilt exactly from the well-founded residual
///   solvers     all algorithms and implied-set strategies match brute force
///   search      recursive calls on A(k) against 3^(n/3)
///   roundtrip   antichain encoding reproduces the family within its size bounds
///   shift       ST(D) is contained in ST(shift(D))
struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct SuiteReport {
    std::string suite;
    std::vector<std::string> table;
    std::vector<CheckResult> checks;
    double seconds = 0.0;

    bool passed() const noexcept;
    std::string render() const;
};

struct VerifyOptions {
    std::optional<std::size_t> cases;  ///< overrides the suite's default case count
    std::uint64_t seed = 0;
};

const std::vector<std::string>& suiteNames();
/// Throws Error for unknown suite names.
SuiteReport runSuite(std::string_view name, const VerifyOptions& options = {});

}  // namespace lpstable
