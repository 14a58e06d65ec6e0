#include "lpstable/solver.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include "lpstable/transform.hpp"

namespace lpstable {

// Selectors ----------------------------------------------------------------

AtomId selectAtomSizeMin(const Program& program) {
    const AtomSet atoms = program.atoms();
    if (atoms.empty()) {
        throw Error("selectAtom on an empty program");
    }
    AtomId best = *atoms.begin();
    std::size_t bestCost = std::numeric_limits<std::size_t>::max();
    for (AtomId q : atoms) {
        std::size_t cost = atomReductPos(program, q).size() + atomReductNeg(program, q).size();
        if (cost < bestCost) {  // strict: ties keep the smallest id
            best = q;
            bestCost = cost;
        }
    }
    return best;
}

AtomId selectAtomFirst(const Program& program) {
    const AtomSet atoms = program.atoms();
    if (atoms.empty()) {
        throw Error("selectAtom on an empty program");
    }
    return *atoms.begin();
}

std::size_t selectRuleSizeMin(const Program& program) {
    if (program.empty()) {
        throw Error("selectRule on an empty program");
    }
    std::size_t best = 0;
    std::size_t bestCost = std::numeric_limits<std::size_t>::max();
    for (std::size_t i = 0; i < program.clauseCount(); ++i) {
        // An undefined positive reduct contributes nothing: that branch is pruned.
        std::size_t pos = ruleReductPosDefined(program, i) ? ruleReductPos(program, i).size() : 0;
        std::size_t cost = pos + program.size() - program.rule(i).size();
        if (cost < bestCost) {
            best = i;
            bestCost = cost;
        }
    }
    return best;
}

std::size_t selectRuleFirst(const Program& program) {
    if (program.empty()) {
        throw Error("selectRule on an empty program");
    }
    return 0;
}

SplitMode selectModeAtom(const Program&, std::size_t) { return SplitMode::Atom; }

SplitMode selectModeRule(const Program&, std::size_t) { return SplitMode::Rule; }

SplitMode selectModeShortBody(const Program& program, std::size_t) {
    bool shortBody = std::any_of(program.rules().begin(), program.rules().end(),
                                 [](const Rule& r) { return r.bodySize() <= 1; });
    return shortBody ? SplitMode::Rule : SplitMode::Atom;
}

SplitMode selectModeAlternate(const Program&, std::size_t depth) {
    return depth % 2 == 1 ? SplitMode::Atom : SplitMode::Rule;
}

Heuristics Heuristics::named(std::string_view atomSelector, std::string_view ruleSelector,
                             std::string_view modeSelector) {
    Heuristics h;
    h.atomSelectorName = atomSelector;
    h.ruleSelectorName = ruleSelector;
    h.modeSelectorName = modeSelector;
    if (atomSelector == "size-min") {
        h.selectAtom = selectAtomSizeMin;
    } else if (atomSelector == "first") {
        h.selectAtom = selectAtomFirst;
    } else {
        throw Error("unknown atom selector '" + std::string(atomSelector) + "'");
    }
    if (ruleSelector == "size-min") {
        h.selectRule = selectRuleSizeMin;
    } else if (ruleSelector == "first") {
        h.selectRule = selectRuleFirst;
    } else {
        throw Error("unknown rule selector '" + std::string(ruleSelector) + "'");
    }
    if (modeSelector == "atom") {
        h.selectMode = selectModeAtom;
    } else if (modeSelector == "rule") {
        h.selectMode = selectModeRule;
    } else if (modeSelector == "short-body") {
        h.selectMode = selectModeShortBody;
    } else if (modeSelector == "alternate") {
        h.selectMode = selectModeAlternate;
    } else {
        throw Error("unknown mode selector '" + std::string(modeSelector) + "'");
    }
    return h;
}

std::string SearchStats::toKeyValue() const {
    std::ostringstream out;
    out << "recursive_calls=" << recursiveCalls << '\n'
        << "stability_checks=" << stabilityChecks << '\n'
        << "candidates_tested=" << candidatesTested << '\n'
        << "candidates_accepted=" << candidatesAccepted << '\n'
        << "max_depth=" << maxDepth << '\n';
    return out.str();
}

std::string_view toString(Algorithm algorithm) noexcept {
    switch (algorithm) {
        case Algorithm::Atom: return "a";
        case Algorithm::Rule: return "r";
        case Algorithm::Hybrid: return "h";
    }
    return "?";
}

Algorithm algorithmFromString(std::string_view name) {
    if (name == "a") {
        return Algorithm::Atom;
    }
    if (name == "r") {
        return Algorithm::Rule;
    }
    if (name == "h") {
        return Algorithm::Hybrid;
    }
    throw Error("unknown algorithm '" + std::string(name) + "' (expected a, r or h)");
}

// Search -------------------------------------------------------------------

namespace {

using Emit = std::function<bool(const Interpretation&)>;

class Search {
public:
    explicit Search(const SolverOptions& options) : options_(options) {}

    /// Returns false once the consumer asked to stop.
    bool run(const Program& program, std::size_t depth, const Emit& emit) {
        ++stats_.recursiveCalls;
        stats_.maxDepth = std::max<std::uint64_t>(stats_.maxDepth, depth);
        if (depth > options_.depthCap) {
            throw SearchDepthExceeded("recursion depth exceeds cap of " + std::to_string(options_.depthCap));
        }
        ImpliedSetResult implied = impliedSet(program, options_.strategy);
        const AtomSet& m = implied.impliedTrue;
        const Program& p0 = implied.residual;
        if (p0.empty()) {
            return emit(m);
        }
        SplitMode mode = SplitMode::Atom;
        switch (options_.algorithm) {
            case Algorithm::Atom: mode = SplitMode::Atom; break;
            case Algorithm::Rule: mode = SplitMode::Rule; break;
            case Algorithm::Hybrid: mode = options_.heuristics.selectMode(p0, depth); break;
        }
        return mode == SplitMode::Atom ? splitOnAtom(m, p0, depth, emit) : splitOnRule(m, p0, depth, emit);
    }

    const SearchStats& stats() const noexcept { return stats_; }

private:
    bool splitOnAtom(const AtomSet& m, const Program& p0, std::size_t depth, const Emit& emit) {
        const AtomId q = options_.heuristics.selectAtom(p0);
        const AtomSet added{q};
        bool more = run(atomReductPos(p0, q), depth + 1, [&](const Interpretation& n) {
            return test(p0, m, n.unite(added), emit);
        });
        if (!more) {
            return false;
        }
        return run(atomReductNeg(p0, q), depth + 1,
                   [&](const Interpretation& n) { return test(p0, m, n, emit); });
    }

    bool splitOnRule(const AtomSet& m, const Program& p0, std::size_t depth, const Emit& emit) {
        const std::size_t ri = options_.heuristics.selectRule(p0);
        const Rule& r = p0.rule(ri);
        // A rule with its head or a positive body atom under not() is never generating,
        // so every stable model of p0 lives in the negative branch.
        if (ruleReductPosDefined(p0, ri)) {
            const AtomSet added = r.posBody.unite(r.head);
            bool more = run(ruleReductPos(p0, ri), depth + 1, [&](const Interpretation& n) {
                return test(p0, m, n.unite(added), emit);
            });
            if (!more) {
                return false;
            }
        }
        return run(ruleReductNeg(p0, ri), depth + 1,
                   [&](const Interpretation& n) { return test(p0, m, n, emit); });
    }

    bool test(const Program& p0, const AtomSet& m, const Interpretation& candidate, const Emit& emit) {
        ++stats_.candidatesTested;
        ++stats_.stabilityChecks;
        if (!isStable(p0, candidate)) {
            return true;
        }
        ++stats_.candidatesAccepted;
        return emit(m.unite(candidate));
    }

    const SolverOptions& options_;
    SearchStats stats_;
};

SolverOptions optionsFor(Algorithm algorithm, const Heuristics& heuristics, ImpliedSetStrategy strategy) {
    SolverOptions options;
    options.algorithm = algorithm;
    options.heuristics = heuristics;
    options.strategy = strategy;
    return options;
}

}  // namespace

SearchStats enumerateStableModels(const Program& program, const SolverOptions& options,
                                  const std::function<bool(const Interpretation&)>& onModel) {
    if (!program.isNormal()) {
        throw Error("stable model search requires a normal program");
    }
    Search search(options);
    search.run(program, 1, onModel);
    return search.stats();
}

SolveResult solve(const Program& program, const SolverOptions& options) {
    SolveResult result;
    result.stats = enumerateStableModels(program, options, [&](const Interpretation& m) {
        result.models.push_back(m);
        return true;
    });
    result.models = normalizeFamily(std::move(result.models));
    return result;
}

SolveResult stableModelsA(const Program& program, const Heuristics& heuristics, ImpliedSetStrategy strategy) {
    return solve(program, optionsFor(Algorithm::Atom, heuristics, strategy));
}

SolveResult stableModelsR(const Program& program, const Heuristics& heuristics, ImpliedSetStrategy strategy) {
    return solve(program, optionsFor(Algorithm::Rule, heuristics, strategy));
}

SolveResult stableModelsH(const Program& program, const Heuristics& heuristics, ImpliedSetStrategy strategy) {
    return solve(program, optionsFor(Algorithm::Hybrid, heuristics, strategy));
}

// Queries ------------------------------------------------------------------

QueryMode QueryMode::parse(std::string_view text) {
    if (text == "all") {
        return all();
    }
    if (text == "first") {
        return first();
    }
    if (text == "exists") {
        return exists();
    }
    auto colon = text.find(':');
    if (colon != std::string_view::npos) {
        std::string_view kind = text.substr(0, colon);
        std::string atom(text.substr(colon + 1));
        if (!isValidAtomName(atom)) {
            throw Error("invalid atom in query mode '" + std::string(text) + "'");
        }
        if (kind == "brave") {
            return brave(std::move(atom));
        }
        if (kind == "cautious") {
            return cautious(std::move(atom));
        }
    }
    throw Error("unknown query mode '" + std::string(text) + "'");
}

QueryAnswer solveQuery(const Program& program, const SolverOptions& options, const QueryMode& mode) {
    using Kind = QueryMode::Kind;
    QueryAnswer answer;
    answer.kind = mode.kind;
    std::optional<AtomId> target;
    if (mode.kind == Kind::Brave || mode.kind == Kind::Cautious) {
        target = program.symbols().id(mode.atom);
    }
    std::function<bool(const Interpretation&)> onModel;
    switch (mode.kind) {
        case Kind::All:
            onModel = [&](const Interpretation& m) {
                answer.models.push_back(m);
                return true;
            };
            break;
        case Kind::First:
        case Kind::Exists:
            onModel = [&](const Interpretation& m) {
                answer.model = m;
                answer.holds = true;
                return false;
            };
            break;
        case Kind::Brave:
            onModel = [&](const Interpretation& m) {
                if (!m.contains(*target)) {
                    return true;
                }
                answer.model = m;
                answer.holds = true;
                return false;
            };
            break;
        case Kind::Cautious:
            answer.holds = true;
            answer.vacuous = true;
            onModel = [&](const Interpretation& m) {
                answer.vacuous = false;
                if (m.contains(*target)) {
                    return true;
                }
                answer.model = m;
                answer.holds = false;
                return false;
            };
            break;
    }
    answer.stats = enumerateStableModels(program, options, onModel);
    if (mode.kind == Kind::All) {
        answer.models = normalizeFamily(std::move(answer.models));
        answer.holds = !answer.models.empty();
    }
    return answer;
}

}  // namespace lpstable
