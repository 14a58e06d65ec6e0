#include "lpstable/semantics.hpp"

#include <algorithm>
#include <cstdint>

namespace lpstable {

PositiveProgram::PositiveProgram(Program program) : program_(std::move(program)) {
    if (!program_.isPositive()) {
        throw Error("program has negative body literals");
    }
}

ModelFamily normalizeFamily(ModelFamily family) {
    std::sort(family.begin(), family.end());
    family.erase(std::unique(family.begin(), family.end()), family.end());
    return family;
}

bool isAntichain(const ModelFamily& family) {
    for (std::size_t i = 0; i < family.size(); ++i) {
        for (std::size_t j = 0; j < family.size(); ++j) {
            if (i != j && family[i] != family[j] && family[i].isSubsetOf(family[j])) {
                return false;
            }
        }
    }
    return true;
}

std::vector<std::vector<std::string>> familyNames(const Program& program, const ModelFamily& family) {
    std::vector<std::vector<std::string>> out;
    out.reserve(family.size());
    for (const Interpretation& m : family) {
        out.push_back(program.names(m));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::string formatFamily(const Program& program, const ModelFamily& family) {
    std::string out;
    for (const auto& names : familyNames(program, family)) {
        out += '{';
        for (std::size_t i = 0; i < names.size(); ++i) {
            out += (i ? ", " : "") + names[i];
        }
        out += "}\n";
    }
    return out;
}

PositiveProgram glReduct(const Program& program, const Interpretation& model) {
    std::vector<Rule> kept;
    for (const Rule& r : program.rules()) {
        if (r.negBody.intersects(model)) {
            continue;
        }
        kept.push_back(Rule{r.head, r.posBody, {}});
    }
    return PositiveProgram(program.withRules(std::move(kept)));
}

Interpretation leastModel(const PositiveProgram& positive) {
    const Program& program = positive.program();
    if (!program.isNormal()) {
        throw Error("least model requires a normal program");
    }
    const std::size_t atomCount = program.symbols().size();
    const auto& rules = program.rules();
    std::vector<std::vector<std::size_t>> watchers(atomCount);
    std::vector<std::size_t> missing(rules.size());
    std::vector<char> derived(atomCount, 0);
    std::vector<AtomId> queue;

    auto fire = [&](std::size_t ri) {
        AtomId h = rules[ri].headAtom();
        if (!derived[h]) {
            derived[h] = 1;
            queue.push_back(h);
        }
    };
    for (std::size_t ri = 0; ri < rules.size(); ++ri) {
        missing[ri] = rules[ri].posBody.size();
        for (AtomId b : rules[ri].posBody) {
            watchers[b].push_back(ri);
        }
        if (missing[ri] == 0) {
            fire(ri);
        }
    }
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
        for (std::size_t ri : watchers[queue[qi]]) {
            if (--missing[ri] == 0) {
                fire(ri);
            }
        }
    }
    return Interpretation(std::move(queue));
}

bool isModel(const PositiveProgram& program, const Interpretation& model) {
    return std::all_of(program.rules().begin(), program.rules().end(), [&](const Rule& r) {
        return !r.posBody.isSubsetOf(model) || r.head.intersects(model);
    });
}

bool isStable(const Program& program, const Interpretation& model) {
    if (!program.isNormal()) {
        throw Error("isStable requires a normal program; use isAnswerSet");
    }
    return leastModel(glReduct(program, model)) == model;
}

bool isMinimalModel(const PositiveProgram& program, const Interpretation& model) {
    if (!isModel(program, model)) {
        return false;
    }
    const auto& members = model.ids();
    if (members.size() > 30) {
        throw Error("minimality check limited to 30 atoms");
    }
    // Only rules whose body can hold inside M constrain subsets of M.
    std::vector<const Rule*> active;
    for (const Rule& r : program.rules()) {
        if (r.posBody.isSubsetOf(model)) {
            active.push_back(&r);
        }
    }
    const std::uint64_t full = (std::uint64_t{1} << members.size()) - 1;
    for (std::uint64_t mask = 0; mask < full; ++mask) {
        std::vector<AtomId> ids;
        for (std::size_t i = 0; i < members.size(); ++i) {
            if (mask >> i & 1U) {
                ids.push_back(members[i]);
            }
        }
        Interpretation subset(std::move(ids));
        bool satisfied = std::all_of(active.begin(), active.end(), [&](const Rule* r) {
            return !r->posBody.isSubsetOf(subset) || r->head.intersects(subset);
        });
        if (satisfied) {
            return false;
        }
    }
    return true;
}

bool isAnswerSet(const Program& program, const Interpretation& model) {
    return isMinimalModel(glReduct(program, model), model);
}

std::vector<std::size_t> generatingRules(const Program& program, const Interpretation& model) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < program.clauseCount(); ++i) {
        const Rule& r = program.rule(i);
        if (r.posBody.isSubsetOf(model) && !r.negBody.intersects(model)) {
            out.push_back(i);
        }
    }
    return out;
}

namespace {

template <typename Accept>
ModelFamily enumerateHeadSubsets(const Program& program, std::size_t cap, Accept accept) {
    const AtomSet heads = program.heads();
    if (heads.size() > cap) {
        throw Error("brute force limited to " + std::to_string(cap) + " head atoms, program has " +
                    std::to_string(heads.size()));
    }
    const auto& ids = heads.ids();
    ModelFamily out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << ids.size()); ++mask) {
        std::vector<AtomId> members;
        for (std::size_t i = 0; i < ids.size(); ++i) {
            if (mask >> i & 1U) {
                members.push_back(ids[i]);
            }
        }
        Interpretation candidate(std::move(members));
        if (accept(candidate)) {
            out.push_back(std::move(candidate));
        }
    }
    return normalizeFamily(std::move(out));
}

}  // namespace

ModelFamily bruteForceStable(const Program& program, std::size_t cap) {
    if (!program.isNormal()) {
        throw Error("bruteForceStable requires a normal program");
    }
    return enumerateHeadSubsets(program, cap, [&](const Interpretation& m) { return isStable(program, m); });
}

ModelFamily bruteForceAnswerSets(const Program& program, std::size_t cap) {
    return enumerateHeadSubsets(program, cap, [&](const Interpretation& m) { return isAnswerSet(program, m); });
}

}  // namespace lpstable
