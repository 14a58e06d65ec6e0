#include "lpstable/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <iomanip>
#include <map>
#include <sstream>

#include "lpstable/extremal.hpp"
#include "lpstable/families.hpp"
#include "lpstable/random.hpp"
#include "lpstable/semantics.hpp"
#include "lpstable/solver.hpp"
#include "lpstable/transform.hpp"
#include "lpstable/wfs.hpp"

namespace lpstable {

bool SuiteReport::passed() const noexcept {
    return !checks.empty() && std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

std::string SuiteReport::render() const {
    std::ostringstream out;
    out << "suite " << suite << '\n';
    for (const std::string& row : table) {
        out << "  " << row << '\n';
    }
    for (const CheckResult& c : checks) {
        out << (c.passed ? "PASS " : "FAIL ") << c.name;
        if (!c.detail.empty()) {
            out << " -- " << c.detail;
        }
        out << '\n';
    }
    out << std::fixed << std::setprecision(2) << "time " << seconds << "s\n";
    return out.str();
}

namespace {

/// Counts violations and keeps the first counterexample.
class Tally {
public:
    void fail(const std::string& what) {
        if (violations_++ == 0) {
            first_ = what;
        }
    }
    CheckResult result(std::string name, std::size_t cases) const {
        std::string detail = std::to_string(cases) + " cases, " + std::to_string(violations_) + " violations";
        if (violations_ != 0) {
            detail += "; first: " + first_;
        }
        return CheckResult{std::move(name), violations_ == 0, detail};
    }

private:
    std::size_t violations_ = 0;
    std::string first_;
};

std::string oneLine(const Program& p) {
    std::string text = printProgram(p);
    std::replace(text.begin(), text.end(), '\n', ' ');
    return text.empty() ? "<empty>" : text;
}

SuiteReport bounds(const VerifyOptions&) {
    SuiteReport report;
    const std::vector<std::uint64_t> expected{2, 3, 4, 6, 9, 12, 18, 27, 36, 54, 81};
    bool allMatch = true;
    report.table.push_back("n   s0(n)  generator  attained");
    for (int n = 2; n <= 12; ++n) {
        BoundDescriptor bound = maxStable(ProgramClass::LPn, n);
        std::vector<std::string> generators{bound.witnessProgram};
        if (n % 3 == 1) {
            generators.push_back("Cp:" + std::to_string(n / 3));
        }
        for (const std::string& gen : generators) {
            Program p = generateFromSpec(gen);
            std::size_t attained = bruteForceStable(p).size();
            bool ok = p.clauseCount() == static_cast<std::size_t>(n) && attained == s0(n) &&
                      s0(n) == expected[static_cast<std::size_t>(n - 2)] && isExtremalMember(p, n);
            allMatch = allMatch && ok;
            std::ostringstream row;
            row << std::left << std::setw(4) << n << std::setw(7) << s0(n) << std::setw(11) << gen << attained
                << (ok ? "" : "  MISMATCH");
            report.table.push_back(row.str());
        }
    }
    report.checks.push_back({"s0 table attained by extremal generators", allMatch, "n = 2..12"});
    return report;
}

SuiteReport counting(const VerifyOptions&) {
    SuiteReport report;
    Tally tally;
    std::size_t cases = 0;
    report.table.push_back("signature   clauses  models");
    for (std::uint32_t l4 = 0; 4 * l4 <= 12; ++l4) {
        for (std::uint32_t l3 = 0; 3 * l3 + 4 * l4 <= 12; ++l3) {
            for (std::uint32_t l2 = 0; 2 * l2 + 3 * l3 + 4 * l4 <= 12; ++l2) {
                Signature sig{l2, l3, l4};
                if (sig.clauseCount() == 0) {
                    continue;
                }
                ++cases;
                Program p = program234(sig);
                std::size_t models = bruteForceStable(p).size();
                std::ostringstream row;
                row << '<' << l2 << ',' << l3 << ',' << l4 << ">     " << std::left << std::setw(9)
                    << p.clauseCount() << models;
                report.table.push_back(row.str());
                if (p.clauseCount() != sig.clauseCount() || models != sig.modelCount() || signatureOf(p) != sig) {
                    tally.fail(row.str());
                }
            }
        }
    }
    report.checks.push_back(tally.result("clause and model counts of 2,3,4-programs", cases));
    return report;
}

SuiteReport disjunctive(const VerifyOptions&) {
    SuiteReport report;
    Tally tally;
    std::size_t cases = 0;
    report.table.push_back("n  m  answer sets  m^n");
    for (int n = 1; n <= 9; ++n) {
        for (int m = 1; n * m <= 9; ++m) {
            ++cases;
            Program d = generateD(n, m);
            ModelFamily sets = bruteForceAnswerSets(d);
            std::uint64_t expected = *maxStable(ProgramClass::DPnm, n, m).exact;
            // Every answer set must pick exactly one atom per rule.
            bool transversals = std::all_of(sets.begin(), sets.end(), [&](const Interpretation& s) {
                return s.size() == static_cast<std::size_t>(n) &&
                       std::all_of(d.rules().begin(), d.rules().end(),
                                   [&](const Rule& r) { return r.head.intersect(s).size() == 1; });
            });
            std::ostringstream row;
            row << n << "  " << m << "  " << std::left << std::setw(13) << sets.size() << expected;
            report.table.push_back(row.str());
            if (sets.size() != expected || !transversals) {
                tally.fail(row.str());
            }
        }
    }
    report.checks.push_back(tally.result("D(n,m) answer sets are exactly the m^n transversals", cases));
    return report;
}

SuiteReport ceilings(const VerifyOptions& options) {
    SuiteReport report;
    const std::size_t cases = options.cases.value_or(500);
    Tally lpn;
    Tally lp2;
    Tally lpsize;
    Tally dpnm;
    std::size_t best[4] = {0, 0, 0, 0};
    for (std::size_t i = 0; i < cases; ++i) {
        RandomPrograms gen(caseSeed(options.seed, i));
        gen.negativeBias = 0.8;
        gen.bodyContinue = 0.7;
        // Odd cases are small edits of an extremal program.
        const bool nearExtremal = i % 2 == 1;
        {
            std::size_t n = gen.uniform(2, 8);
            Program p = nearExtremal ? gen.perturb(program234(extremalSignature(static_cast<int>(n))), gen.uniform(1, 2))
                                     : gen.normal(gen.uniform(1, n), n, n);
            std::size_t count = bruteForceStable(p).size();
            best[0] = std::max(best[0], count);
            if (count > s0(static_cast<int>(n))) {
                lpn.fail(oneLine(p));
            }
        }
        {
            std::size_t n = gen.uniform(1, 10);
            Program p = gen.shortBody(gen.uniform(1, n + 1), n);
            if (nearExtremal && n >= 2) {
                // P(k) plus, for odd n, one random short rule.
                ProgramBuilder builder;
                Program pk = generateNamed(NamedFamily::P, static_cast<int>(n / 2));
                gen.maxBody = 1;
                Program edited = gen.perturb(pk, gen.uniform(0, 1));
                gen.maxBody = 3;
                for (const Rule& r : edited.rules()) {
                    builder.addRule(pk.names(r.head), pk.names(r.posBody), pk.names(r.negBody));
                }
                if (n % 2 == 1) {
                    Program extra = gen.shortBody(n, 1);
                    const Rule& r = extra.rule(0);
                    builder.addRule(extra.names(r.head), extra.names(r.posBody), extra.names(r.negBody));
                }
                p = builder.build();
            }
            std::size_t count = bruteForceStable(p).size();
            best[1] = std::max(best[1], count);
            bool shortBodies = std::all_of(p.rules().begin(), p.rules().end(),
                                           [](const Rule& r) { return r.bodySize() <= 1; });
            if (p.clauseCount() != n || !shortBodies ||
                count > *maxStable(ProgramClass::LP2n, static_cast<int>(n)).exact) {
                lp2.fail(oneLine(p));
            }
        }
        {
            std::size_t n = gen.uniform(1, 16);
            Program p = gen.sizeBounded(gen.uniform(1, 8), n);
            if (nearExtremal && n >= 4) {
                p = gen.perturb(generateNamed(NamedFamily::P, static_cast<int>(n / 4)), 1);
            }
            std::size_t count = bruteForceStable(p).size();
            best[2] = std::max(best[2], count);
            // count <= 2^(size/4)  <=>  count^4 <= 2^size
            double lhs = std::pow(static_cast<double>(count), 4.0);
            if (lhs > std::pow(2.0, static_cast<double>(p.size()))) {
                lpsize.fail(oneLine(p));
            }
        }
        {
            std::size_t n = gen.uniform(1, 4);
            std::size_t m = gen.uniform(1, 3);
            Program d = gen.disjunctive(gen.uniform(1, 8), n, m);
            std::size_t count = bruteForceAnswerSets(d).size();
            best[3] = std::max(best[3], count);
            if (count > *maxStable(ProgramClass::DPnm, static_cast<int>(n), static_cast<int>(m)).exact) {
                dpnm.fail(oneLine(d));
            }
        }
    }
    report.table.push_back("largest model counts seen: LPn " + std::to_string(best[0]) + ", LP2n " +
                           std::to_string(best[1]) + ", LPsize " + std::to_string(best[2]) + ", DPnm " +
                           std::to_string(best[3]));
    report.checks.push_back(lpn.result("n-clause programs stay within s0(n)", cases));
    report.checks.push_back(lp2.result("one-body-literal programs stay within 2^floor(n/2)", cases));
    report.checks.push_back(lpsize.result("size-n programs stay within 2^(n/4)", cases));
    report.checks.push_back(dpnm.result("disjunctive (n,m) programs stay within m^n", cases));
    return report;
}

/// A random normal program, and with even odds a split (T,F) consistent with one of its models.
struct SplitCase {
    Program program;
    SplitContext split;
};

SplitCase randomSplitCase(RandomPrograms& gen) {
    Program p = gen.normal(gen.uniform(1, 10), 1, 10);
    ModelFamily models = bruteForceStable(p);
    SplitContext ctx;
    if (!models.empty() && gen.coin()) {
        const Interpretation& m = models[gen.uniform(0, models.size() - 1)];
        for (AtomId a : p.atoms()) {
            if (gen.coin(0.4)) {
                (m.contains(a) ? ctx.forcedTrue : ctx.forcedFalse).insert(a);
            }
        }
    } else {
        ctx = gen.split(p);
    }
    return {std::move(p), std::move(ctx)};
}

SuiteReport lemma1(const VerifyOptions& options) {
    SuiteReport report;
    const std::size_t cases = options.cases.value_or(500);
    Tally tally;
    std::size_t applicable = 0;
    for (std::size_t i = 0; i < cases; ++i) {
        RandomPrograms gen(caseSeed(options.seed, i));
        SplitCase c = randomSplitCase(gen);
        ModelFamily reduced = bruteForceStable(simp(c.program, c.split));
        for (const Interpretation& m : bruteForceStable(c.program)) {
            if (!c.split.forcedTrue.isSubsetOf(m) || m.intersects(c.split.forcedFalse)) {
                continue;
            }
            ++applicable;
            if (!std::binary_search(reduced.begin(), reduced.end(), m.minus(c.split.forcedTrue))) {
                tally.fail(oneLine(c.program) + " model " + formatModel(c.program, m));
            }
        }
    }
    report.table.push_back(std::to_string(applicable) + " stable models matched a split");
    report.checks.push_back(tally.result("M \\ T is stable in simp(P,T,F)", cases));
    return report;
}

SuiteReport wfs(const VerifyOptions& options) {
    SuiteReport report;
    const std::size_t cases = options.cases.value_or(500);
    Tally exact;
    Tally bracket;
    Tally residual;
    for (std::size_t i = 0; i < cases; ++i) {
        RandomPrograms gen(caseSeed(options.seed, i));
        Program p = gen.normal(gen.uniform(1, 10), 1, 12);
        WfsResult w = wellFounded(p);
        Program rest = simp(p, w.trueSet, w.falseSet);
        ModelFamily models = bruteForceStable(p);
        ModelFamily rebuilt;
        for (const Interpretation& m : bruteForceStable(rest)) {
            rebuilt.push_back(m.unite(w.trueSet));
        }
        if (normalizeFamily(std::move(rebuilt)) != models) {
            exact.fail(oneLine(p));
        }
        for (const Interpretation& m : models) {
            if (!w.trueSet.isSubsetOf(m) || m.intersects(w.falseSet)) {
                bracket.fail(oneLine(p));
            }
        }
        WfsResult again = wellFounded(rest);
        if (!again.trueSet.empty() || !again.falseSet.empty()) {
            residual.fail(oneLine(p));
        }
    }
    report.checks.push_back(exact.result("ST(P) = { M' + T : M' in ST(simp(P,T,F)) }", cases));
    report.checks.push_back(bracket.result("T inside and F outside every stable model", cases));
    report.checks.push_back(residual.result("residual program is fully undefined", cases));
    return report;
}

SuiteReport solvers(const VerifyOptions& options) {
    SuiteReport report;
    const std::size_t cases = options.cases.value_or(500);
    struct Variant {
        std::string name;
        SolverOptions options;
    };
    std::vector<Variant> variants;
    for (Algorithm algo : {Algorithm::Atom, Algorithm::Rule, Algorithm::Hybrid}) {
        for (ImpliedSetStrategy strategy : {ImpliedSetStrategy::Trivial, ImpliedSetStrategy::WellFounded}) {
            SolverOptions opt;
            opt.algorithm = algo;
            opt.strategy = strategy;
            if (algo == Algorithm::Hybrid) {
                opt.heuristics = Heuristics::named("size-min", "size-min", "short-body");
            }
            variants.push_back({std::string(toString(algo)) + "/" + std::string(toString(strategy)), opt});
        }
    }
    std::vector<Tally> tallies(variants.size());
    Tally shape;
    for (std::size_t i = 0; i < cases; ++i) {
        RandomPrograms gen(caseSeed(options.seed, i));
        Program p = gen.normal(gen.uniform(1, 10), 1, 12);
        ModelFamily oracle = bruteForceStable(p);
        if (!isAntichain(oracle)) {
            shape.fail(oneLine(p));
        }
        for (std::size_t v = 0; v < variants.size(); ++v) {
            SolveResult r = solve(p, variants[v].options);
            if (r.models != oracle) {
                tallies[v].fail(oneLine(p));
            }
        }
    }
    for (std::size_t v = 0; v < variants.size(); ++v) {
        report.checks.push_back(tallies[v].result("stable_models " + variants[v].name + " equals brute force", cases));
    }
    report.checks.push_back(shape.result("oracle families are antichains", cases));
    return report;
}

SuiteReport search(const VerifyOptions&) {
    SuiteReport report;
    double constant = 0.0;
    bool ok = true;
    report.table.push_back("k  n   calls  3^(n/3)  ratio");
    for (int k = 1; k <= 6; ++k) {
        Program p = generateNamed(NamedFamily::A, k);
        SolveResult r = stableModelsA(p);
        double scale = std::pow(3.0, static_cast<double>(p.clauseCount()) / 3.0);
        double ratio = static_cast<double>(r.stats.recursiveCalls) / scale;
        constant = std::max(constant, ratio);
        bool row = r.stats.recursiveCalls <= 4.0 * scale && r.models.size() == s0(3 * k);
        ok = ok && row;
        std::ostringstream line;
        line << k << "  " << std::left << std::setw(4) << p.clauseCount() << std::setw(7) << r.stats.recursiveCalls
             << std::setw(9) << scale << std::fixed << std::setprecision(3) << ratio;
        report.table.push_back(line.str());
    }
    std::ostringstream detail;
    detail << "measured constant " << std::fixed << std::setprecision(3) << constant << " (limit 4)";
    report.checks.push_back({"recursive calls on A(k) within 4 * 3^(n/3)", ok, detail.str()});
    return report;
}

SuiteReport roundtrip(const VerifyOptions& options) {
    SuiteReport report;
    const std::size_t cases = options.cases.value_or(200);
    Tally stable;
    Tally sizes;
    Tally policies;
    for (std::size_t i = 0; i < cases; ++i) {
        RandomPrograms gen(caseSeed(options.seed, i));
        SetFamily family = gen.antichain(gen.uniform(1, 6), 8);
        Program p = encodeAntichain(family);
        if (toSetFamily(p, bruteForceStable(p)) != family) {
            stable.fail(printFamily(family));
        }
        if (!encodingSizeReport(family).withinBounds()) {
            sizes.fail(printFamily(family));
        }
        for (const WitnessPolicy& policy : {greatestWitness(), seededWitness(caseSeed(options.seed + 1, i))}) {
            Program q = encodeAntichain(family, policy);
            if (toSetFamily(q, bruteForceStable(q)) != family) {
                policies.fail(printFamily(family));
            }
        }
    }
    report.checks.push_back(stable.result("ST(P_F) = F", cases));
    report.checks.push_back(sizes.result("clause and size ceilings hold", cases));
    report.checks.push_back(policies.result("witness choice does not change ST(P_F)", cases));
    return report;
}

SuiteReport shiftSuite(const VerifyOptions& options) {
    SuiteReport report;
    const std::size_t cases = options.cases.value_or(300);
    Tally tally;
    std::size_t nonEmpty = 0;
    for (std::size_t i = 0; i < cases; ++i) {
        RandomPrograms gen(caseSeed(options.seed, i));
        Program d = gen.disjunctive(gen.uniform(1, 7), gen.uniform(1, 5), gen.uniform(1, 4));
        ModelFamily original = bruteForceAnswerSets(d);
        ModelFamily shifted = bruteForceAnswerSets(shift(d));
        nonEmpty += original.empty() ? 0 : 1;
        if (!std::includes(shifted.begin(), shifted.end(), original.begin(), original.end())) {
            tally.fail(oneLine(d));
        }
    }
    report.table.push_back(std::to_string(nonEmpty) + " programs had at least one answer set");
    report.checks.push_back(tally.result("ST(D) contained in ST(shift(D))", cases));
    return report;
}

using SuiteFn = std::function<SuiteReport(const VerifyOptions&)>;

const std::map<std::string, SuiteFn, std::less<>>& registry() {
    static const std::map<std::string, SuiteFn, std::less<>> suites{
        {"bounds", bounds},     {"counting", counting}, {"disjunctive", disjunctive},
        {"ceilings", ceilings}, {"lemma1", lemma1},     {"wfs", wfs},
        {"solvers", solvers},   {"search", search},     {"roundtrip", roundtrip},
        {"shift", shiftSuite},
    };
    return suites;
}

}  // namespace

const std::vector<std::string>& suiteNames() {
    static const std::vector<std::string> names{"bounds", "counting", "disjunctive", "ceilings", "lemma1",
                                                "wfs",    "solvers",  "search",      "roundtrip", "shift"};
    return names;
}

SuiteReport runSuite(std::string_view name, const VerifyOptions& options) {
    auto it = registry().find(name);
    if (it == registry().end()) {
        throw Error("unknown verify suite '" + std::string(name) + "'");
    }
    auto start = std::chrono::steady_clock::now();
    SuiteReport report = it->second(options);
    report.suite = std::string(name);
    report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

}  // namespace lpstable
