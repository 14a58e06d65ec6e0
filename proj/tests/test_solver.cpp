#include <catch2/catch_amalgamated.hpp>

#include "lpstable/extremal.hpp"
#include "lpstable/random.hpp"
#include "lpstable/solver.hpp"
#include "support.hpp"

using namespace lpstable;
using namespace lpstable::testing;

namespace {

const Algorithm kAlgorithms[] = {Algorithm::Atom, Algorithm::Rule, Algorithm::Hybrid};
const ImpliedSetStrategy kStrategies[] = {ImpliedSetStrategy::Trivial, ImpliedSetStrategy::WellFounded};

Names solveNames(const Program& p, Algorithm algorithm, ImpliedSetStrategy strategy) {
    SolverOptions options;
    options.algorithm = algorithm;
    options.strategy = strategy;
    return names(p, solve(p, options).models);
}

}  // namespace

TEST_CASE("stable_models_a") {
    Program cp3 = canonicalProgram({"a", "b", "c"});
    CHECK(names(cp3, stableModelsA(cp3).models) == Names{{"a"}, {"b"}, {"c"}});
    CHECK(stableModelsA(prog("a :- not a.")).models.empty());
    CHECK(stableModelsA(generateNamed(NamedFamily::B, 0)).models.size() == 2);
}

TEST_CASE("stable_models_r") {
    Program cp3 = canonicalProgram({"a", "b", "c"});
    CHECK(stableModelsR(cp3).models.size() == 3);
    Program p = prog("a :- not b.\nb :- not a.\nc :- a.");
    CHECK(names(p, stableModelsR(p).models) == Names{{"a", "c"}, {"b"}});
    CHECK(stableModelsR(Program{}).models == ModelFamily{AtomSet{}});
}

TEST_CASE("stable_models_h") {
    CHECK(stableModelsH(generateNamed(NamedFamily::A, 2)).models.size() == 9);
    CHECK(stableModelsH(prog("a :- not a.")).models.empty());
    CHECK(stableModelsH(generateNamed(NamedFamily::P, 2)).models.size() == 4);
}

TEST_CASE("every algorithm and strategy handles the edge programs") {
    const char* programs[] = {
        "",
        "a.",
        "a :- not a.",
        "a :- a.",
        "a :- not b.\nb :- not c.\nc :- not a.",
        "a :- not a.\nb :- not b, a.",
        "a :- b, not a.\nb :- not c.",
        "p :- not q.\nq :- not p.\nr :- p.\nr :- q.\ns :- r, not t.\nt :- not s.",
    };
    for (const char* text : programs) {
        Program p = prog(text);
        Names expected = names(p, bruteForceStable(p));
        for (Algorithm algorithm : kAlgorithms) {
            for (ImpliedSetStrategy strategy : kStrategies) {
                INFO(text << " / " << toString(algorithm) << " / " << toString(strategy));
                CHECK(solveNames(p, algorithm, strategy) == expected);
            }
        }
    }
}

TEST_CASE("rule splitting skips the positive branch of self-blocking rules") {
    Program p = prog("a :- not a.\nb :- c, not c.\nd.");
    Heuristics h = Heuristics::named("first", "first", "rule");
    CHECK(names(p, stableModelsR(p, h, ImpliedSetStrategy::Trivial).models).empty());
    Program q = prog("b :- c, not c.\nd.");
    CHECK(names(q, stableModelsR(q, h, ImpliedSetStrategy::Trivial).models) == Names{{"d"}});
}

TEST_CASE("select_atom_default") {
    Program cp = canonicalProgram({"a", "b"});
    CHECK(cp.atomName(selectAtomSizeMin(cp)) == "a");

    Program p = prog("a :- not b.\nb :- not a.\nc :- not a.\nd :- not a.");
    CHECK(p.atomName(selectAtomSizeMin(p)) == "a");

    // a: both reducts empty (0); b: {a.} on the negative side (1).
    Program single = prog("a :- not b.");
    CHECK(single.atomName(selectAtomSizeMin(single)) == "a");

    Program q = prog("x :- y.\ny :- not z.\nz :- not y.");
    CHECK(q.atomName(selectAtomFirst(q)) == "x");
}

TEST_CASE("rule selectors") {
    Program p = prog("a :- b, c, not d.\nb :- not a.\nd.");
    CHECK(selectRuleFirst(p) == 0);
    std::size_t chosen = selectRuleSizeMin(p);
    CHECK(chosen < p.clauseCount());
}

TEST_CASE("mode selectors") {
    Program longBodies = prog("a :- b, not c.\nc :- a, not b.");
    Program shortBody = prog("a :- not b.\nb :- c, not a.");
    CHECK(selectModeAtom(shortBody, 1) == SplitMode::Atom);
    CHECK(selectModeRule(longBodies, 1) == SplitMode::Rule);
    CHECK(selectModeShortBody(shortBody, 1) == SplitMode::Rule);
    CHECK(selectModeShortBody(longBodies, 1) == SplitMode::Atom);
    CHECK(selectModeAlternate(shortBody, 1) == SplitMode::Atom);
    CHECK(selectModeAlternate(shortBody, 2) == SplitMode::Rule);
}

TEST_CASE("heuristics by name") {
    Heuristics h = Heuristics::named("first", "size-min", "alternate");
    CHECK(h.atomSelectorName == "first");
    CHECK(h.modeSelectorName == "alternate");
    CHECK_THROWS_AS(Heuristics::named("best", "first", "atom"), Error);
    CHECK_THROWS_AS(Heuristics::named("first", "best", "atom"), Error);
    CHECK_THROWS_AS(Heuristics::named("first", "first", "best"), Error);
}

TEST_CASE("algorithm names") {
    CHECK(algorithmFromString("a") == Algorithm::Atom);
    CHECK(algorithmFromString("r") == Algorithm::Rule);
    CHECK(algorithmFromString("h") == Algorithm::Hybrid);
    CHECK(toString(Algorithm::Hybrid) == "h");
    CHECK_THROWS_AS(algorithmFromString("x"), Error);
}

TEST_CASE("solve_query") {
    SolverOptions options;
    Program cp = canonicalProgram({"a", "b"});
    QueryAnswer brave = solveQuery(cp, options, QueryMode::brave("a"));
    CHECK(brave.holds);
    REQUIRE(brave.model);
    CHECK(brave.model->contains(cp.symbols().id("a")));

    QueryAnswer cautious = solveQuery(cp, options, QueryMode::cautious("a"));
    CHECK_FALSE(cautious.holds);
    CHECK_FALSE(cautious.vacuous);
    REQUIRE(cautious.model);
    CHECK_FALSE(cautious.model->contains(cp.symbols().id("a")));

    CHECK_FALSE(solveQuery(prog("a :- not a."), options, QueryMode::exists()).holds);
    CHECK(solveQuery(prog("a."), options, QueryMode::cautious("a")).holds);
}

TEST_CASE("solve_query: first, all and vacuous cautious") {
    SolverOptions options;
    Program cp = canonicalProgram({"a", "b", "c"});
    QueryAnswer first = solveQuery(cp, options, QueryMode::first());
    CHECK(first.holds);
    REQUIRE(first.model);
    CHECK(first.model->size() == 1);

    QueryAnswer all = solveQuery(cp, options, QueryMode::all());
    CHECK(all.models.size() == 3);

    Program none = prog("a :- not a.\nb.");
    QueryAnswer vacuous = solveQuery(none, options, QueryMode::cautious("b"));
    CHECK(vacuous.holds);
    CHECK(vacuous.vacuous);
    CHECK_FALSE(solveQuery(none, options, QueryMode::first()).model);
    CHECK_FALSE(solveQuery(none, options, QueryMode::brave("b")).holds);
}

TEST_CASE("solve_query stops early") {
    SolverOptions options;
    Program a5 = generateNamed(NamedFamily::A, 5);
    SearchStats all = solveQuery(a5, options, QueryMode::all()).stats;
    SearchStats exists = solveQuery(a5, options, QueryMode::exists()).stats;
    CHECK(exists.recursiveCalls < all.recursiveCalls);
}

TEST_CASE("solve_query rejects unknown atoms") {
    CHECK_THROWS_AS(solveQuery(prog("a."), {}, QueryMode::brave("zz")), Error);
}

TEST_CASE("query mode parsing") {
    CHECK(QueryMode::parse("all").kind == QueryMode::Kind::All);
    CHECK(QueryMode::parse("first").kind == QueryMode::Kind::First);
    CHECK(QueryMode::parse("exists").kind == QueryMode::Kind::Exists);
    QueryMode b = QueryMode::parse("brave:x1");
    CHECK(b.kind == QueryMode::Kind::Brave);
    CHECK(b.atom == "x1");
    CHECK(QueryMode::parse("cautious:y").kind == QueryMode::Kind::Cautious);
    CHECK_THROWS_AS(QueryMode::parse("brave:"), Error);
    CHECK_THROWS_AS(QueryMode::parse("brave:X"), Error);
    CHECK_THROWS_AS(QueryMode::parse("some"), Error);
}

TEST_CASE("solver rejects disjunctive programs") {
    CHECK_THROWS_AS(stableModelsA(prog("a | b.")), Error);
}

TEST_CASE("depth cap") {
    SolverOptions options;
    options.depthCap = 2;
    CHECK_THROWS_AS(solve(generateNamed(NamedFamily::A, 3), options), SearchDepthExceeded);
    options.depthCap = 64;
    CHECK(solve(generateNamed(NamedFamily::A, 3), options).models.size() == 27);
}

TEST_CASE("search statistics") {
    SolveResult empty = stableModelsA(Program{});
    CHECK(empty.stats.recursiveCalls == 1);
    CHECK(empty.stats.stabilityChecks == 0);

    SolveResult r = stableModelsA(generateNamed(NamedFamily::A, 2));
    CHECK(r.stats.recursiveCalls >= 1);
    CHECK(r.stats.candidatesAccepted <= r.stats.candidatesTested);
    CHECK(r.stats.maxDepth >= 2);
    std::string kv = r.stats.toKeyValue();
    CHECK(kv.find("recursive_calls=" + std::to_string(r.stats.recursiveCalls) + "\n") != std::string::npos);
    CHECK(kv.find("max_depth=") != std::string::npos);
}

TEST_CASE("property: solvers are deterministic") {
    for (std::uint64_t i = 0; i < 50; ++i) {
        RandomPrograms gen(caseSeed(31, i));
        Program p = gen.normal(gen.uniform(1, 10), 0, 12);
        for (Algorithm algorithm : kAlgorithms) {
            SolverOptions options;
            options.algorithm = algorithm;
            options.heuristics = Heuristics::named("size-min", "size-min", "short-body");
            std::vector<Interpretation> firstOrder;
            std::vector<Interpretation> secondOrder;
            SearchStats s1 = enumerateStableModels(p, options, [&](const Interpretation& m) {
                firstOrder.push_back(m);
                return true;
            });
            SearchStats s2 = enumerateStableModels(p, options, [&](const Interpretation& m) {
                secondOrder.push_back(m);
                return true;
            });
            CHECK(s1 == s2);
            CHECK(firstOrder == secondOrder);
        }
    }
}

TEST_CASE("property: all selectors agree with the oracle") {
    const char* selectors[][3] = {
        {"size-min", "size-min", "atom"},   {"first", "first", "rule"},
        {"first", "size-min", "alternate"}, {"size-min", "first", "short-body"},
    };
    for (std::uint64_t i = 0; i < 150; ++i) {
        RandomPrograms gen(caseSeed(32, i));
        Program p = gen.normal(gen.uniform(1, 8), 0, 10);
        ModelFamily expected = bruteForceStable(p);
        for (const auto& s : selectors) {
            SolverOptions options;
            options.algorithm = Algorithm::Hybrid;
            options.heuristics = Heuristics::named(s[0], s[1], s[2]);
            for (ImpliedSetStrategy strategy : kStrategies) {
                options.strategy = strategy;
                ModelFamily got = solve(p, options).models;
                CHECK(got == expected);
                CHECK(isAntichain(got));
                for (const Interpretation& m : got) {
                    CHECK(m.isSubsetOf(p.heads()));
                }
            }
        }
    }
}

TEST_CASE("property: candidate counters are consistent") {
    for (std::uint64_t i = 0; i < 150; ++i) {
        RandomPrograms gen(caseSeed(33, i));
        Program p = gen.normal(gen.uniform(1, 8), 0, 10);
        ModelFamily oracle = bruteForceStable(p);
        for (Algorithm algorithm : kAlgorithms) {
            SolverOptions options;
            options.algorithm = algorithm;
            options.strategy = ImpliedSetStrategy::Trivial;
            SolveResult r = solve(p, options);
            CHECK(r.stats.candidatesAccepted <= r.stats.candidatesTested);
            CHECK(r.stats.candidatesTested == r.stats.stabilityChecks);
            CHECK(r.models == oracle);
        }
    }
}
