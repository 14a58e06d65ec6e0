#include <catch2/catch_amalgamated.hpp>

#include "lpstable/extremal.hpp"
#include "support.hpp"

using namespace lpstable;
using namespace lpstable::testing;

TEST_CASE("gl_reduct") {
    Program cp = canonicalProgram({"a", "b"});
    PositiveProgram r = glReduct(cp, atoms(cp, {"a"}));
    CHECK(printProgram(r.program()) == "a.");

    Program horn = prog("a.\nb :- a.");
    CHECK(sameProgram(glReduct(horn, {}).program(), horn));

    Program loop = prog("a :- not a.");
    CHECK(glReduct(loop, atoms(loop, {"a"})).program().empty());
}

TEST_CASE("positive programs reject negative literals") {
    CHECK_THROWS_AS(PositiveProgram(prog("a :- not b.")), Error);
}

TEST_CASE("least_model") {
    Program h = prog("a.\nb :- a.\nc :- d.");
    CHECK(names(h, {leastModel(PositiveProgram(h))}) == Names{{"a", "b"}});
    CHECK(leastModel(PositiveProgram(Program{})).empty());

    Program cp = canonicalProgram({"a", "b", "c"});
    Interpretation lm = leastModel(glReduct(cp, atoms(cp, {"b"})));
    CHECK(lm == atoms(cp, {"b"}));

    CHECK_THROWS_AS(leastModel(PositiveProgram(prog("a | b."))), Error);
}

TEST_CASE("least_model chains through long bodies") {
    Program h = prog("e :- a, b, c, d.\nd :- c.\nc :- b.\nb :- a.\na.");
    CHECK(leastModel(PositiveProgram(h)).size() == 5);
}

TEST_CASE("is_stable") {
    Program cp = canonicalProgram({"a", "b"});
    CHECK(isStable(cp, atoms(cp, {"a"})));
    CHECK_FALSE(isStable(cp, atoms(cp, {"a", "b"})));
    CHECK_FALSE(isStable(cp, {}));

    Program loop = prog("a :- not a.");
    CHECK_FALSE(isStable(loop, {}));
    CHECK_FALSE(isStable(loop, atoms(loop, {"a"})));

    Program p = prog("a.\nb :- c.");
    CHECK(isStable(p, atoms(p, {"a"})));
    CHECK_FALSE(isStable(p, atoms(p, {"a", "c"})));

    CHECK_THROWS_AS(isStable(prog("a | b."), {}), Error);
}

TEST_CASE("is_minimal_model") {
    Program d = prog("a | b.");
    CHECK(isMinimalModel(PositiveProgram(d), atoms(d, {"a"})));
    CHECK_FALSE(isMinimalModel(PositiveProgram(d), atoms(d, {"a", "b"})));
    CHECK_FALSE(isMinimalModel(PositiveProgram(d), {}));
    CHECK(isMinimalModel(PositiveProgram(Program{}), {}));
}

TEST_CASE("is_answer_set") {
    Program d12 = generateD(1, 2);
    CHECK(isAnswerSet(d12, atoms(d12, {"a1_1"})));

    Program d = prog("a | b.\na.");
    CHECK(isAnswerSet(d, atoms(d, {"a"})));
    CHECK_FALSE(isAnswerSet(d, atoms(d, {"b"})));
    CHECK_FALSE(isAnswerSet(d, atoms(d, {"a", "b"})));

    Program cp = canonicalProgram({"a", "b"});
    CHECK(isAnswerSet(cp, atoms(cp, {"a"})));
}

TEST_CASE("generating_rules") {
    Program cp = canonicalProgram({"a", "b"});
    CHECK(generatingRules(cp, atoms(cp, {"a"})) == std::vector<std::size_t>{0});

    Program p = prog("a :- not b.\nb :- c.\nc.\nd :- not a.");
    CHECK(generatingRules(p, {}) == std::vector<std::size_t>{0, 2, 3});

    Program cp3 = canonicalProgram({"a", "b", "c"});
    CHECK(generatingRules(cp3, atoms(cp3, {"a", "b"})).empty());
}

TEST_CASE("brute_force_stable") {
    Program cp3 = canonicalProgram({"a", "b", "c"});
    CHECK(names(cp3, bruteForceStable(cp3)) == Names{{"a"}, {"b"}, {"c"}});
    CHECK(bruteForceStable(prog("a :- not a.")).empty());
    CHECK(bruteForceStable(Program{}) == ModelFamily{AtomSet{}});
}

TEST_CASE("brute_force_stable enforces the head cap") {
    CHECK_THROWS_AS(bruteForceStable(generateNamed(NamedFamily::A, 7)), Error);
    CHECK(bruteForceStable(generateNamed(NamedFamily::A, 7), 21).size() == 2187);
    CHECK_THROWS_AS(bruteForceStable(prog("a | b.")), Error);
}

TEST_CASE("brute_force_answer_sets") {
    Program d22 = generateD(2, 2);
    CHECK(names(d22, bruteForceAnswerSets(d22)) ==
          Names{{"a1_1", "a2_1"}, {"a1_1", "a2_2"}, {"a1_2", "a2_1"}, {"a1_2", "a2_2"}});

    Program d = prog("a | b :- not a.");
    CHECK(names(d, bruteForceAnswerSets(d)) == Names{{"b"}});

    Program d13 = generateD(1, 3);
    CHECK(names(d13, bruteForceAnswerSets(d13)) == Names{{"a1_1"}, {"a1_2"}, {"a1_3"}});

    CHECK_THROWS_AS(bruteForceAnswerSets(generateD(3, 7)), Error);
}

TEST_CASE("antichain check and family formatting") {
    Program p = prog("a.\nb.");
    AtomSet a = atoms(p, {"a"});
    AtomSet ab = atoms(p, {"a", "b"});
    CHECK(isAntichain(ModelFamily{a, atoms(p, {"b"})}));
    CHECK_FALSE(isAntichain(ModelFamily{a, ab}));
    CHECK(isAntichain(ModelFamily{}));
    CHECK(formatFamily(p, {ab, a}) == "{a}\n{a, b}\n");
    CHECK(formatFamily(p, {AtomSet{}}) == "{}\n");
    CHECK(formatFamily(p, {}).empty());
}
