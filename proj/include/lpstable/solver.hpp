#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>

#include "lpstable/semantics.hpp"
#include "lpstable/syntax.hpp"
#include "lpstable/wfs.hpp"

namespace lpstable {

enum class SplitMode { Atom, Rule };

// Selectors. Each is total on programs with at least one rule.
AtomId selectAtomSizeMin(const Program& program);
AtomId selectAtomFirst(const Program& program);
std::size_t selectRuleSizeMin(const Program& program);
std::size_t selectRuleFirst(const Program& program);
SplitMode selectModeAtom(const Program& program, std::size_t depth);
SplitMode selectModeRule(const Program& program, std::size_t depth);
/// Rule splitting whenever some rule has at most one body literal.
SplitMode selectModeShortBody(const Program& program, std::size_t depth);
/// Atom splitting at odd depths, rule splitting at even depths.
SplitMode selectModeAlternate(const Program& program, std::size_t depth);

/// Pluggable branching choices. The names are informational; the functions decide.
struct Heuristics {
    using AtomSelector = std::function<AtomId(const Program&)>;
    using RuleSelector = std::function<std::size_t(const Program&)>;
    using ModeSelector = std::function<SplitMode(const Program&, std::size_t depth)>;

    std::string atomSelectorName = "size-min";
    std::string ruleSelectorName = "size-min";
    std::string modeSelectorName = "atom";
    AtomSelector selectAtom = selectAtomSizeMin;
    RuleSelector selectRule = selectRuleSizeMin;
    ModeSelector selectMode = selectModeAtom;

    /// Looks up the built-in selectors:
    ///   atom: size-min | first, rule: size-min | first,
    ///   mode: atom | rule | short-body | alternate.
    static Heuristics named(std::string_view atomSelector, std::string_view ruleSelector,
                            std::string_view modeSelector);
};

struct SearchStats {
    std::uint64_t recursiveCalls = 0;
    std::uint64_t stabilityChecks = 0;
    std::uint64_t candidatesTested = 0;
    std::uint64_t candidatesAccepted = 0;
    std::uint64_t maxDepth = 0;

    /// Flat key=value lines.
    std::string toKeyValue() const;
    friend bool operator==(const SearchStats&, const SearchStats&) = default;
};

enum class Algorithm {
    Atom,    ///< split on atoms
    Rule,    ///< split on rules
    Hybrid,  ///< per call, as chosen by the mode selector
};

std::string_view toString(Algorithm algorithm) noexcept;
/// "a" / "r" / "h".
Algorithm algorithmFromString(std::string_view name);

class SearchDepthExceeded : public Error {
public:
    using Error::Error;
};

struct SolverOptions {
    Algorithm algorithm = Algorithm::Atom;
    ImpliedSetStrategy strategy = ImpliedSetStrategy::WellFounded;
    Heuristics heuristics;
    std::size_t depthCap = 64;
};

struct SolveResult {
    ModelFamily models;
    SearchStats stats;
};

/// Streams every stable model to onModel in search order; onModel returns false to stop.
/// Returns the statistics of the (possibly interrupted) run.
SearchStats enumerateStableModels(const Program& program, const SolverOptions& options,
                                  const std::function<bool(const Interpretation&)>& onModel);

SolveResult solve(const Program& program, const SolverOptions& options = {});

SolveResult stableModelsA(const Program& program, const Heuristics& heuristics = {},
                          ImpliedSetStrategy strategy = ImpliedSetStrategy::WellFounded);
SolveResult stableModelsR(const Program& program, const Heuristics& heuristics = {},
                          ImpliedSetStrategy strategy = ImpliedSetStrategy::WellFounded);
SolveResult stableModelsH(const Program& program, const Heuristics& heuristics = {},
                          ImpliedSetStrategy strategy = ImpliedSetStrategy::WellFounded);

struct QueryMode {
    enum class Kind { All, First, Exists, Brave, Cautious };
    Kind kind = Kind::All;
    std::string atom;  ///< for Brave and Cautious

    static QueryMode all() { return {Kind::All, {}}; }
    static QueryMode first() { return {Kind::First, {}}; }
    static QueryMode exists() { return {Kind::Exists, {}}; }
    static QueryMode brave(std::string atom) { return {Kind::Brave, std::move(atom)}; }
    static QueryMode cautious(std::string atom) { return {Kind::Cautious, std::move(atom)}; }
    /// "all", "first", "exists", "brave:x", "cautious:x".
    static QueryMode parse(std::string_view text);
};

struct QueryAnswer {
    QueryMode::Kind kind = QueryMode::Kind::All;
    ModelFamily models;                  ///< All
    std::optional<Interpretation> model;  ///< First; also the witness for Brave / counterexample for Cautious
    bool holds = false;                   ///< Exists, Brave, Cautious; First: a model was found
    bool vacuous = false;                 ///< Cautious answered true because there are no models
    SearchStats stats;
};

/// Runs the search and stops as soon as the query is decided.
QueryAnswer solveQuery(const Program& program, const SolverOptions& options, const QueryMode& mode);

}  // namespace lpstable
