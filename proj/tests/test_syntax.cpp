#include <catch2/catch_amalgamated.hpp>

#include <algorithm>

#include "lpstable/extremal.hpp"
#include "lpstable/random.hpp"
#include "support.hpp"

using namespace lpstable;
using namespace lpstable::testing;

TEST_CASE("parse: two-atom canonical program") {
    Program p = prog("a :- not b.\nb :- not a.");
    REQUIRE(p.clauseCount() == 2);
    CHECK(sameProgram(p, canonicalProgram({"a", "b"})));
    CHECK(p.isNormal());
    CHECK_FALSE(p.isPositive());
}

TEST_CASE("parse: empty input") {
    Program p = prog("");
    CHECK(p.empty());
    CHECK(p.clauseCount() == 0);
    CHECK(prog("  \n% only a comment\n\n").empty());
}

TEST_CASE("parse: disjunctive fact") {
    Program p = prog("a | b.");
    REQUIRE(p.clauseCount() == 1);
    const Rule& r = p.rule(0);
    CHECK(p.names(r.head) == std::vector<std::string>{"a", "b"});
    CHECK(r.isFact());
    CHECK_FALSE(p.isNormal());
}

TEST_CASE("parse: whitespace and comments are insignificant") {
    Program p = prog("  c:-a ,not   b . % trailing\n% full line\n a.");
    REQUIRE(p.clauseCount() == 2);
    CHECK(printProgram(p) == "c :- a, not b.\na.");
}

TEST_CASE("parse: atom names") {
    CHECK(isValidAtomName("a"));
    CHECK(isValidAtomName("a1_1"));
    CHECK(isValidAtomName("fooBar"));
    CHECK(isValidAtomName("nota"));
    CHECK_FALSE(isValidAtomName("not"));
    CHECK_FALSE(isValidAtomName("A"));
    CHECK_FALSE(isValidAtomName("1a"));
    CHECK_FALSE(isValidAtomName("_a"));
    CHECK_FALSE(isValidAtomName(""));
    CHECK(prog("nota :- not notb.").clauseCount() == 1);
}

TEST_CASE("parse: duplicate body literals are removed and flagged") {
    ParseDiagnostics diag;
    Program p = parseProgram("x.\na :- b, b, not c, not c.", &diag);
    CHECK(diag.deduplicated);
    CHECK(diag.dedupLines == std::vector<std::size_t>{2});
    CHECK(p.rule(1).bodySize() == 2);

    ParseDiagnostics clean;
    parseProgram("a :- b, not c.", &clean);
    CHECK_FALSE(clean.deduplicated);
}

TEST_CASE("parse: syntax errors carry a position") {
    auto errorAt = [](std::string_view text) -> std::pair<std::size_t, std::size_t> {
        try {
            parseProgram(text);
        } catch (const ParseError& e) {
            return {e.line(), e.column()};
        }
        FAIL("no ParseError for: " << text);
        return {0, 0};
    };
    CHECK(errorAt("a").first == 1);
    CHECK(errorAt("a.\nb :- .").first == 2);
    CHECK(errorAt("a.\n\nb :- c").first == 3);
    CHECK(errorAt(":- a.").first == 1);
    CHECK(errorAt("a :- not.").first == 1);
    CHECK(errorAt("A.").first == 1);
    CHECK(errorAt("a | .").first == 1);
    CHECK(errorAt("not :- a.").first == 1);
    CHECK(errorAt("a :- b,, c.").first == 1);
    auto [line, column] = errorAt("a.\nb :- c d.");
    CHECK(line == 2);
    CHECK(column == 8);
}

TEST_CASE("print: canonical ordering") {
    CHECK(printProgram(canonicalProgram({"a", "b"})) == "a :- not b.\nb :- not a.");
    CHECK(printProgram(Program{}).empty());

    ProgramBuilder b;
    b.addRule({"b", "a"}, {"c"});
    CHECK(printProgram(b.build()) == "a | b :- c.");

    CHECK(printProgram(prog("z :- not y, x, not w, v.")) == "z :- v, x, not w, not y.");
}

TEST_CASE("print: rule order is preserved") {
    std::string text = "b.\na :- b.\nb.";
    CHECK(printProgram(prog(text)) == text);
}

TEST_CASE("program_size") {
    CHECK(canonicalProgram({"a", "b", "c"}).size() == 9);
    CHECK(Program{}.size() == 0);
    CHECK(generateD(2, 3).size() == 6);
    CHECK(prog("a | b :- c, not d.").size() == 4);
}

TEST_CASE("program: heads and atoms") {
    Program p = prog("a :- b, not c.\nd.");
    CHECK(p.names(p.heads()) == std::vector<std::string>{"a", "d"});
    CHECK(p.names(p.atoms()) == std::vector<std::string>{"a", "b", "c", "d"});
    CHECK_THROWS_AS(p.lookup({"zz"}), Error);
}

TEST_CASE("rule redundancy predicate") {
    Program p = prog("a :- not a.\na :- a.\na :- b, not b.\na :- b, not c.");
    CHECK(p.rule(0).isRedundant());
    CHECK(p.rule(1).isRedundant());
    CHECK(p.rule(2).isRedundant());
    CHECK_FALSE(p.rule(3).isRedundant());
}

TEST_CASE("builder snapshots the symbol table") {
    ProgramBuilder b;
    b.addRule({"a"});
    Program first = b.build();
    b.addRule({"b"});
    CHECK(first.symbols().size() == 1);
    CHECK(b.build().symbols().size() == 2);
}

TEST_CASE("builder rejects bad atoms and empty heads") {
    ProgramBuilder b;
    CHECK_THROWS_AS(b.addRule({"Bad"}), Error);
    CHECK_THROWS_AS(b.addRule(std::vector<std::string>{}), Error);
}

TEST_CASE("formatModel") {
    Program p = prog("b.\na.");
    CHECK(formatModel(p, atoms(p, {"a", "b"})) == "{a, b}");
    CHECK(formatModel(p, {}) == "{}");
}

TEST_CASE("property: parse after print is the identity on generated programs") {
    for (const char* spec : {"A:3", "B:2", "C:2", "Cp:2", "P:4", "D:3x2", "sig:2,1,1"}) {
        Program p = generateFromSpec(spec);
        CHECK(sameProgram(prog(printProgram(p)), p));
    }
    for (std::uint64_t i = 0; i < 300; ++i) {
        RandomPrograms gen(caseSeed(11, i));
        Program p = i % 3 == 0 ? gen.disjunctive(6, gen.uniform(0, 6), 4) : gen.normal(8, 0, 10);
        std::string text = printProgram(p);
        Program back = prog(text);
        CHECK(sameProgram(back, p));
        CHECK(printProgram(back) == text);
        bool nonemptyHeads = std::all_of(p.rules().begin(), p.rules().end(),
                                         [](const Rule& r) { return !r.head.empty(); });
        CHECK((!nonemptyHeads || p.size() >= p.clauseCount()));
    }
}
