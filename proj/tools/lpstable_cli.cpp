// lpstable: command-line front end for the stable-model workbench.
//
// Exit codes: 0 success (or a query answered "yes"), 1 a query answered "no",
// 2 bad input or usage, 3 a verify suite failed.

#include <chrono>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "lpstable/extremal.hpp"
#include "lpstable/families.hpp"
#include "lpstable/semantics.hpp"
#include "lpstable/solver.hpp"
#include "lpstable/transform.hpp"
#include "lpstable/verify.hpp"
#include "lpstable/wfs.hpp"

namespace {

using namespace lpstable;

constexpr int kExitNo = 1;
constexpr int kExitInput = 2;
constexpr int kExitVerify = 3;

struct RunConfig {
    std::string input = "-";
    std::string generator;
    std::string algorithm = "a";
    std::string heuristics = "size-min";
    std::string modeSelector = "atom";
    std::string strategy = "wfs";
    std::string mode = "all";
    std::uint64_t seed = 0;
    std::size_t atomCap = kDefaultBruteForceCap;
    std::size_t depthCap = 64;
    bool stats = false;
    bool oracle = false;
};

std::string readInput(const std::string& path) {
    if (path == "-") {
        return std::string(std::istreambuf_iterator<char>(std::cin), {});
    }
    std::ifstream in(path);
    if (!in) {
        throw Error("cannot open '" + path + "'");
    }
    return std::string(std::istreambuf_iterator<char>(in), {});
}

Program loadProgram(const RunConfig& cfg) {
    if (!cfg.generator.empty()) {
        return generateFromSpec(cfg.generator);
    }
    ParseDiagnostics diag;
    Program p = parseProgram(readInput(cfg.input), &diag);
    if (diag.deduplicated) {
        std::cerr << "warning: duplicate literals removed on line(s)";
        for (std::size_t line : diag.dedupLines) {
            std::cerr << ' ' << line;
        }
        std::cerr << '\n';
    }
    return p;
}

SolverOptions solverOptions(const RunConfig& cfg) {
    SolverOptions options;
    options.algorithm = algorithmFromString(cfg.algorithm);
    options.strategy = impliedSetStrategyFromString(cfg.strategy);
    options.heuristics = Heuristics::named(cfg.heuristics, cfg.heuristics, cfg.modeSelector);
    options.depthCap = cfg.depthCap;
    return options;
}

std::vector<std::string> splitList(const std::string& text) {
    std::vector<std::string> out;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        if (!item.empty()) {
            out.push_back(item);
        }
    }
    return out;
}

int cmdSolve(const RunConfig& cfg) {
    Program p = loadProgram(cfg);
    if (!p.isNormal()) {
        if (cfg.mode != "all") {
            throw Error("queries on disjunctive programs are not supported; use --mode all");
        }
        std::cout << formatFamily(p, bruteForceAnswerSets(p, cfg.atomCap));
        return 0;
    }
    if (cfg.oracle) {
        std::cout << formatFamily(p, bruteForceStable(p, cfg.atomCap));
        return 0;
    }
    QueryMode mode = QueryMode::parse(cfg.mode);
    QueryAnswer answer = solveQuery(p, solverOptions(cfg), mode);
    int code = 0;
    using Kind = QueryMode::Kind;
    switch (mode.kind) {
        case Kind::All:
            std::cout << formatFamily(p, answer.models);
            break;
        case Kind::First:
            if (answer.model) {
                std::cout << formatModel(p, *answer.model) << '\n';
            } else {
                std::cout << "no\n";
                code = kExitNo;
            }
            break;
        case Kind::Exists:
        case Kind::Brave:
        case Kind::Cautious:
            std::cout << (answer.holds ? "yes" : "no") << '\n';
            if (answer.vacuous) {
                std::cout << "% vacuous: no stable models\n";
            }
            code = answer.holds ? 0 : kExitNo;
            break;
    }
    if (cfg.stats) {
        std::cout << "% stats\n" << answer.stats.toKeyValue();
    }
    return code;
}

int cmdGenerate(const std::string& spec) {
    std::string text = printProgram(generateFromSpec(spec));
    std::cout << text << (text.empty() ? "" : "\n");
    return 0;
}

int cmdVerify(const std::string& suite, const VerifyOptions& options) {
    std::vector<std::string> names = suite == "all" ? suiteNames() : std::vector<std::string>{suite};
    bool ok = true;
    for (const std::string& name : names) {
        SuiteReport report = runSuite(name, options);
        std::cout << report.render();
        ok = ok && report.passed();
    }
    return ok ? 0 : kExitVerify;
}

int cmdEncode(const std::string& path) {
    SetFamily family = parseFamily(readInput(path));
    Program p = encodeAntichain(family);
    std::string text = printProgram(p);
    std::cout << text << (text.empty() ? "" : "\n");
    EncodingSizeReport r = encodingSizeReport(family);
    std::cerr << "% clauses " << r.clauses << " <= " << r.clauseCeiling << ", size " << r.size
              << " <= " << r.sizeCeiling << '\n';
    return 0;
}

int cmdWfs(const RunConfig& cfg) {
    Program p = loadProgram(cfg);
    WfsResult w = wellFounded(p);
    std::cout << "T=" << formatModel(p, w.trueSet) << " F=" << formatModel(p, w.falseSet) << '\n';
    return 0;
}

struct ReductArgs {
    std::string forcedTrue;
    std::string forcedFalse;
    long rulePos = -1;
    long ruleNeg = -1;
    bool overline = false;
    bool nonRedundant = false;
};

int cmdReduct(const RunConfig& cfg, const ReductArgs& args) {
    Program p = loadProgram(cfg);
    Program out = p;
    if (args.rulePos >= 0) {
        out = ruleReductPos(p, static_cast<std::size_t>(args.rulePos));
    } else if (args.ruleNeg >= 0) {
        out = ruleReductNeg(p, static_cast<std::size_t>(args.ruleNeg));
    } else if (args.overline) {
        out = overline(p);
    } else if (args.nonRedundant) {
        out = removeRedundantRules(p);
    } else {
        out = simp(p, p.lookup(splitList(args.forcedTrue)), p.lookup(splitList(args.forcedFalse)));
    }
    std::string text = printProgram(out);
    std::cout << text << (text.empty() ? "" : "\n");
    return 0;
}

int cmdBench(const RunConfig& cfg) {
    Program p = loadProgram(cfg);
    auto start = std::chrono::steady_clock::now();
    SolveResult r = solve(p, solverOptions(cfg));
    double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::cout << "algorithm=" << cfg.algorithm << '\n'
              << "strategy=" << cfg.strategy << '\n'
              << "clauses=" << p.clauseCount() << '\n'
              << "size=" << p.size() << '\n'
              << "models=" << r.models.size() << '\n'
              << r.stats.toKeyValue() << "seconds=" << seconds << '\n';
    return 0;
}

void addSolverFlags(CLI::App* cmd, RunConfig& cfg) {
    cmd->add_option("--algo", cfg.algorithm, "a (split on atoms), r (split on rules), h (hybrid)")
        ->check(CLI::IsMember({"a", "r", "h"}));
    cmd->add_option("--heuristics", cfg.heuristics, "atom and rule selector")
        ->check(CLI::IsMember({"size-min", "first"}));
    cmd->add_option("--mode-selector", cfg.modeSelector, "split-mode choice for --algo h")
        ->check(CLI::IsMember({"atom", "rule", "short-body", "alternate"}));
    cmd->add_option("--strategy", cfg.strategy, "implied-set strategy")->check(CLI::IsMember({"wfs", "trivial"}));
    cmd->add_option("--depth-cap", cfg.depthCap, "maximum recursion depth");
}

void addInput(CLI::App* cmd, RunConfig& cfg) {
    cmd->add_option("input", cfg.input, "program file, or - for standard input");
    cmd->add_option("--gen", cfg.generator, "use a generated program instead, e.g. A:3, D:2x2, sig:1,1,0");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Stable-model workbench for ground logic programs"};
    app.require_subcommand(1);
    RunConfig cfg;

    auto* solveCmd = app.add_subcommand("solve", "enumerate stable models or answer a query");
    addInput(solveCmd, cfg);
    addSolverFlags(solveCmd, cfg);
    solveCmd->add_option("--mode", cfg.mode, "all | first | exists | brave:ATOM | cautious:ATOM");
    solveCmd->add_flag("--stats", cfg.stats, "print search statistics");
    solveCmd->add_flag("--oracle", cfg.oracle, "use brute-force enumeration");
    solveCmd->add_option("--atom-cap", cfg.atomCap, "head-atom cap for brute force");

    std::string genSpec;
    auto* generateCmd = app.add_subcommand("generate", "print a named program family member");
    generateCmd->add_option("spec", genSpec, "A:k B:k C:k Cp:k P:k D:NxM sig:L2,L3,L4")->required();

    std::string suite;
    VerifyOptions verifyOptions;
    std::size_t seeds = 0;
    auto* verifyCmd = app.add_subcommand("verify", "run an oracle-backed property suite");
    verifyCmd->add_option("suite", suite, "suite name or 'all'")->required();
    verifyCmd->add_option("--seeds", seeds, "number of random cases (suite default if omitted)");
    verifyCmd->add_option("--seed", verifyOptions.seed, "base seed");

    std::string familyPath = "-";
    auto* encodeCmd = app.add_subcommand("encode", "build a program whose stable models are a given antichain");
    encodeCmd->add_option("family", familyPath, "family file, one {a, b} set per line");

    auto* wfsCmd = app.add_subcommand("wfs", "print the well-founded true and false atoms");
    addInput(wfsCmd, cfg);

    ReductArgs reductArgs;
    auto* reductCmd = app.add_subcommand("reduct", "apply simp(P,T,F) or a rule reduct");
    addInput(reductCmd, cfg);
    reductCmd->add_option("--true", reductArgs.forcedTrue, "comma-separated forced-true atoms");
    reductCmd->add_option("--false", reductArgs.forcedFalse, "comma-separated forced-false atoms");
    reductCmd->add_option("--rule-pos", reductArgs.rulePos, "positive reduct on rule index");
    reductCmd->add_option("--rule-neg", reductArgs.ruleNeg, "negative reduct on rule index");
    reductCmd->add_flag("--overline", reductArgs.overline, "drop negated atoms that head no rule");
    reductCmd->add_flag("--remove-redundant", reductArgs.nonRedundant, "drop redundant rules");

    auto* benchCmd = app.add_subcommand("bench", "solve and print key=value statistics");
    addInput(benchCmd, cfg);
    addSolverFlags(benchCmd, cfg);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitInput;
    }

    try {
        if (seeds != 0) {
            verifyOptions.cases = seeds;
        }
        if (*solveCmd) return cmdSolve(cfg);
        if (*generateCmd) return cmdGenerate(genSpec);
        if (*verifyCmd) return cmdVerify(suite, verifyOptions);
        if (*encodeCmd) return cmdEncode(familyPath);
        if (*wfsCmd) return cmdWfs(cfg);
        if (*reductCmd) return cmdReduct(cfg, reductArgs);
        if (*benchCmd) return cmdBench(cfg);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInput;
    }
    return kExitInput;
}
