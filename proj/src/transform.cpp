#include "lpstable/transform.hpp"

#include <vector>

namespace lpstable {

Program simp(const Program& program, const AtomSet& forcedTrue, const AtomSet& forcedFalse) {
    if (forcedTrue.intersects(forcedFalse)) {
        throw Error("simp: forced-true and forced-false sets overlap");
    }
    if (!program.isNormal()) {
        throw Error("simp is defined for normal programs only");
    }
    std::vector<Rule> out;
    for (const Rule& r : program.rules()) {
        AtomId h = r.headAtom();
        if (forcedTrue.contains(h) || forcedFalse.contains(h)) {
            continue;
        }
        if (r.posBody.intersects(forcedFalse)) {
            continue;
        }
        if (r.negBody.intersects(forcedTrue)) {
            continue;
        }
        out.push_back(Rule{r.head, r.posBody.minus(forcedTrue), r.negBody.minus(forcedFalse)});
    }
    return program.withRules(std::move(out));
}

Program atomReductPos(const Program& program, AtomId q) { return simp(program, AtomSet{q}, AtomSet{}); }

Program atomReductNeg(const Program& program, AtomId q) { return simp(program, AtomSet{}, AtomSet{q}); }

SplitContext ruleSplitContext(const Program& program, std::size_t ruleIndex) {
    const Rule& r = program.rule(ruleIndex);
    SplitContext ctx{r.posBody.unite(AtomSet{r.headAtom()}), r.negBody};
    if (ctx.forcedTrue.intersects(ctx.forcedFalse)) {
        throw Error("rule " + std::to_string(ruleIndex) + " (" + printRule(program, r) +
                    ") can never be generating; P(r+) is undefined");
    }
    return ctx;
}

bool ruleReductPosDefined(const Program& program, std::size_t ruleIndex) {
    const Rule& r = program.rule(ruleIndex);
    return !r.negBody.intersects(r.posBody) && !r.negBody.intersects(r.head);
}

Program ruleReductPos(const Program& program, std::size_t ruleIndex) {
    return simp(program, ruleSplitContext(program, ruleIndex));
}

Program ruleReductNeg(const Program& program, std::size_t ruleIndex) {
    if (ruleIndex >= program.clauseCount()) {
        throw Error("rule index out of range");
    }
    std::vector<Rule> rules = program.rules();
    rules.erase(rules.begin() + static_cast<std::ptrdiff_t>(ruleIndex));
    return program.withRules(std::move(rules));
}

Program removeRedundantRules(const Program& program) {
    std::vector<Rule> out;
    for (const Rule& r : program.rules()) {
        if (!r.isRedundant()) {
            out.push_back(r);
        }
    }
    return program.withRules(std::move(out));
}

Program overline(const Program& program) {
    const AtomSet heads = program.heads();
    std::vector<Rule> out;
    out.reserve(program.clauseCount());
    for (const Rule& r : program.rules()) {
        out.push_back(Rule{r.head, r.posBody, r.negBody.intersect(heads)});
    }
    return program.withRules(std::move(out));
}

}  // namespace lpstable
