#include "lpstable/random.hpp"

#include <algorithm>

namespace lpstable {

std::vector<std::string> RandomPrograms::atomPool(std::size_t count) {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < count; ++i) {
        std::string name(1, static_cast<char>('a' + i % 26));
        if (i >= 26) {
            name += std::to_string(i / 26);
        }
        out.push_back(std::move(name));
    }
    return out;
}

std::size_t RandomPrograms::uniform(std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng_);
}

bool RandomPrograms::coin(double p) { return std::bernoulli_distribution(p)(rng_); }

std::size_t RandomPrograms::bodyLength() {
    std::size_t len = 0;
    while (len < maxBody && coin(bodyContinue)) {
        ++len;
    }
    return len;
}

std::vector<std::string> RandomPrograms::pickDistinct(const std::vector<std::string>& pool, std::size_t count) {
    std::vector<std::string> shuffled = pool;
    std::shuffle(shuffled.begin(), shuffled.end(), rng_);
    shuffled.resize(std::min(count, shuffled.size()));
    return shuffled;
}

Program RandomPrograms::normal(std::size_t atomCount, std::size_t minRules, std::size_t maxRules) {
    const auto pool = atomPool(atomCount);
    ProgramBuilder builder;
    const std::size_t rules = uniform(minRules, maxRules);
    for (std::size_t i = 0; i < rules; ++i) {
        std::string head = pool[uniform(0, pool.size() - 1)];
        std::vector<std::string> pos;
        std::vector<std::string> neg;
        for (std::string& atom : pickDistinct(pool, bodyLength())) {
            (negative() ? neg : pos).push_back(std::move(atom));
        }
        builder.addRule({head}, pos, neg);
    }
    return builder.build();
}

Program RandomPrograms::shortBody(std::size_t atomCount, std::size_t n) {
    const auto pool = atomPool(atomCount);
    ProgramBuilder builder;
    for (std::size_t i = 0; i < n; ++i) {
        std::string head = pool[uniform(0, pool.size() - 1)];
        std::string body = pool[uniform(0, pool.size() - 1)];
        if (coin(0.2)) {
            builder.addRule({head});
        } else if (negative()) {
            builder.addRule({head}, {}, {body});
        } else {
            builder.addRule({head}, {body});
        }
    }
    return builder.build();
}

Program RandomPrograms::sizeBounded(std::size_t atomCount, std::size_t maxSize) {
    const auto pool = atomPool(atomCount);
    ProgramBuilder builder;
    std::size_t budget = uniform(std::min<std::size_t>(1, maxSize), maxSize);
    while (budget > 0) {
        std::size_t body = std::min(bodyLength(), budget - 1);
        std::string head = pool[uniform(0, pool.size() - 1)];
        std::vector<std::string> pos;
        std::vector<std::string> neg;
        for (std::string& atom : pickDistinct(pool, body)) {
            (negative() ? neg : pos).push_back(std::move(atom));
        }
        builder.addRule({head}, pos, neg);
        budget -= 1 + pos.size() + neg.size();
    }
    return builder.build();
}

Program RandomPrograms::disjunctive(std::size_t atomCount, std::size_t n, std::size_t m) {
    const auto pool = atomPool(atomCount);
    ProgramBuilder builder;
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t headSize = uniform(1, std::min(m, pool.size()));
        std::vector<std::string> head = pickDistinct(pool, headSize);
        std::size_t body = std::min(bodyLength(), m - headSize);
        std::vector<std::string> pos;
        std::vector<std::string> neg;
        for (std::string& atom : pickDistinct(pool, body)) {
            (negative() ? neg : pos).push_back(std::move(atom));
        }
        builder.addRule(head, pos, neg);
    }
    return builder.build();
}

Program RandomPrograms::perturb(const Program& program, std::size_t count) {
    if (program.empty()) {
        return program;
    }
    std::vector<Rule> rules = program.rules();
    const std::vector<AtomId> atoms = program.atoms().ids();
    auto randomAtom = [&] { return atoms[uniform(0, atoms.size() - 1)]; };
    for (std::size_t i = 0; i < count; ++i) {
        Rule& r = rules[uniform(0, rules.size() - 1)];
        switch (uniform(0, 2)) {
            case 0: {
                std::vector<std::pair<bool, AtomId>> body;
                for (AtomId a : r.posBody) body.emplace_back(true, a);
                for (AtomId a : r.negBody) body.emplace_back(false, a);
                if (!body.empty()) {
                    auto [positive, atom] = body[uniform(0, body.size() - 1)];
                    (positive ? r.posBody : r.negBody).erase(atom);
                }
                break;
            }
            case 1:
                if (r.bodySize() < maxBody) {
                    (negative() ? r.negBody : r.posBody).insert(randomAtom());
                }
                break;
            default:
                r.head = AtomSet{randomAtom()};
                break;
        }
    }
    return program.withRules(std::move(rules));
}

SplitContext RandomPrograms::split(const Program& program, double pTrue, double pFalse) {
    SplitContext ctx;
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (AtomId a : program.atoms()) {
        double x = u(rng_);
        if (x < pTrue) {
            ctx.forcedTrue.insert(a);
        } else if (x < pTrue + pFalse) {
            ctx.forcedFalse.insert(a);
        }
    }
    return ctx;
}

SetFamily RandomPrograms::antichain(std::size_t atomCount, std::size_t maxSets) {
    const auto pool = atomPool(atomCount);
    const std::size_t attempts = uniform(1, maxSets);
    std::vector<SetFamily::Set> chosen;
    for (std::size_t i = 0; i < attempts; ++i) {
        SetFamily::Set candidate = pickDistinct(pool, uniform(1, pool.size()));
        std::sort(candidate.begin(), candidate.end());
        bool comparable = std::any_of(chosen.begin(), chosen.end(), [&](const SetFamily::Set& s) {
            return std::includes(s.begin(), s.end(), candidate.begin(), candidate.end()) ||
                   std::includes(candidate.begin(), candidate.end(), s.begin(), s.end());
        });
        if (!comparable) {
            chosen.push_back(std::move(candidate));
        }
    }
    return SetFamily(std::move(chosen));
}

std::uint64_t caseSeed(std::uint64_t base, std::uint64_t index) noexcept {
    // splitmix64 over (base, index).
    std::uint64_t z = base * 0x9E3779B97F4A7C15ULL + index + 0x632BE59BD9B4E019ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

}  // namespace lpstable
