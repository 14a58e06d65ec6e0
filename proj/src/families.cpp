#include "lpstable/families.hpp"

#include <algorithm>
#include <iterator>
#include <random>
#include <sstream>

namespace lpstable {

SetFamily::SetFamily(std::vector<Set> sets) : sets_(std::move(sets)) {
    for (Set& s : sets_) {
        std::sort(s.begin(), s.end());
        s.erase(std::unique(s.begin(), s.end()), s.end());
    }
    std::sort(sets_.begin(), sets_.end());
    sets_.erase(std::unique(sets_.begin(), sets_.end()), sets_.end());
}

std::size_t SetFamily::totalSize() const noexcept {
    std::size_t total = 0;
    for (const Set& s : sets_) {
        total += s.size();
    }
    return total;
}

SetFamily toSetFamily(const Program& program, const ModelFamily& models) {
    return SetFamily(familyNames(program, models));
}

SetFamily parseFamily(std::string_view text) {
    std::vector<SetFamily::Set> sets;
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t lineNo = 0;
    while (std::getline(in, line)) {
        ++lineNo;
        auto comment = line.find('%');
        if (comment != std::string::npos) {
            line.erase(comment);
        }
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) {
            continue;
        }
        auto last = line.find_last_not_of(" \t\r");
        if (line[first] != '{' || line[last] != '}') {
            throw ParseError(lineNo, first + 1, "expected a set written as {a, b}");
        }
        std::string inner = line.substr(first + 1, last - first - 1);
        SetFamily::Set set;
        std::istringstream items(inner);
        std::string item;
        while (std::getline(items, item, ',')) {
            auto b = item.find_first_not_of(" \t");
            if (b == std::string::npos) {
                if (!inner.empty() && inner.find_first_not_of(" \t") != std::string::npos) {
                    throw ParseError(lineNo, first + 1, "empty element");
                }
                continue;
            }
            auto e = item.find_last_not_of(" \t");
            std::string name = item.substr(b, e - b + 1);
            if (!isValidAtomName(name)) {
                throw ParseError(lineNo, first + 1, "invalid atom name '" + name + "'");
            }
            set.push_back(std::move(name));
        }
        sets.push_back(std::move(set));
    }
    return SetFamily(std::move(sets));
}

std::string printFamily(const SetFamily& family) {
    std::string out;
    for (const auto& set : family.sets()) {
        out += '{';
        for (std::size_t i = 0; i < set.size(); ++i) {
            out += (i ? ", " : "") + set[i];
        }
        out += "}\n";
    }
    return out;
}

bool isAntichain(const SetFamily& family) {
    const auto& sets = family.sets();
    for (std::size_t i = 0; i < sets.size(); ++i) {
        for (std::size_t j = 0; j < sets.size(); ++j) {
            if (i != j && std::includes(sets[j].begin(), sets[j].end(), sets[i].begin(), sets[i].end())) {
                return false;
            }
        }
    }
    return true;
}

WitnessPolicy leastWitness() {
    return [](const std::vector<std::string>& choices) { return choices.front(); };
}

WitnessPolicy greatestWitness() {
    return [](const std::vector<std::string>& choices) { return choices.back(); };
}

WitnessPolicy seededWitness(std::uint64_t seed) {
    auto rng = std::make_shared<std::mt19937_64>(seed);
    return [rng](const std::vector<std::string>& choices) {
        std::uniform_int_distribution<std::size_t> pick(0, choices.size() - 1);
        return choices[pick(*rng)];
    };
}

Program encodeAntichain(const SetFamily& family, const WitnessPolicy& policy) {
    if (!isAntichain(family)) {
        throw Error("family is not an antichain");
    }
    const auto& sets = family.sets();
    ProgramBuilder builder;
    if (sets.empty()) {
        builder.addRule({"x"}, {}, {"x"});
        return builder.build();
    }
    if (sets.size() > 1 && std::any_of(sets.begin(), sets.end(), [](const auto& s) { return s.empty(); })) {
        throw Error("the empty set cannot share a family with other sets");
    }
    for (const auto& b : sets) {
        std::vector<std::string> witnesses;
        for (const auto& c : sets) {
            if (&c == &b) {
                continue;
            }
            std::vector<std::string> diff;
            std::set_difference(c.begin(), c.end(), b.begin(), b.end(), std::back_inserter(diff));
            witnesses.push_back(policy(diff));
        }
        for (const std::string& atom : b) {
            builder.addRule({atom}, {}, witnesses);
        }
    }
    return builder.build();
}

EncodingSizeReport encodingSizeReport(const SetFamily& family, const WitnessPolicy& policy) {
    Program p = encodeAntichain(family, policy);
    EncodingSizeReport report;
    report.clauses = p.clauseCount();
    report.size = p.size();
    report.clauseCeiling = family.totalSize();
    report.sizeCeiling = family.size() * family.totalSize();
    return report;
}

}  // namespace lpstable
