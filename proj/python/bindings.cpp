#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "lpstable/extremal.hpp"
#include "lpstable/families.hpp"
#include "lpstable/semantics.hpp"
#include "lpstable/solver.hpp"
#include "lpstable/transform.hpp"
#include "lpstable/verify.hpp"
#include "lpstable/wfs.hpp"

namespace py = pybind11;
using namespace lpstable;

namespace {

using Names = std::vector<std::vector<std::string>>;

py::dict statsDict(const SearchStats& s) {
    py::dict d;
    d["recursive_calls"] = s.recursiveCalls;
    d["stability_checks"] = s.stabilityChecks;
    d["candidates_tested"] = s.candidatesTested;
    d["candidates_accepted"] = s.candidatesAccepted;
    d["max_depth"] = s.maxDepth;
    return d;
}

SolverOptions options(const std::string& algo, const std::string& strategy, const std::string& heuristics,
                      const std::string& modeSelector, std::size_t depthCap) {
    SolverOptions o;
    o.algorithm = algorithmFromString(algo);
    o.strategy = impliedSetStrategyFromString(strategy);
    o.heuristics = Heuristics::named(heuristics, heuristics, modeSelector);
    o.depthCap = depthCap;
    return o;
}

WitnessPolicy policyFrom(const py::object& policy) {
    if (py::isinstance<py::int_>(policy)) {
        return seededWitness(policy.cast<std::uint64_t>());
    }
    std::string name = policy.cast<std::string>();
    if (name == "least") return leastWitness();
    if (name == "greatest") return greatestWitness();
    throw Error("witness policy must be 'least', 'greatest' or an integer seed");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Stable-model workbench for ground logic programs";

    auto& error = py::register_exception<Error>(m, "LpstableError", PyExc_ValueError);
    py::register_exception<ParseError>(m, "ParseError", error.ptr());
    py::register_exception<SearchDepthExceeded>(m, "SearchDepthExceeded", error.ptr());

    py::class_<Program>(m, "Program")
        .def(py::init<>())
        .def_static("parse", [](std::string_view text) { return parseProgram(text); }, py::arg("text"))
        .def("__str__", &printProgram)
        .def("__repr__", [](const Program& p) {
            return "<Program " + std::to_string(p.clauseCount()) + " rules, size " + std::to_string(p.size()) + ">";
        })
        .def("__len__", &Program::clauseCount)
        .def("__eq__", &sameProgram)
        .def_property_readonly("clause_count", &Program::clauseCount)
        .def_property_readonly("size", &Program::size)
        .def_property_readonly("is_normal", &Program::isNormal)
        .def_property_readonly("atoms", [](const Program& p) { return p.names(p.atoms()); })
        .def_property_readonly("heads", [](const Program& p) { return p.names(p.heads()); });

    m.def("parse", [](std::string_view text) { return parseProgram(text); }, py::arg("text"));
    m.def("generate", &generateFromSpec, py::arg("spec"), "Named family member, e.g. 'A:3', 'D:2x2', 'sig:1,1,0'.");

    m.def(
        "stable_models",
        [](const Program& p, const std::string& algo, const std::string& strategy, const std::string& heuristics,
           const std::string& modeSelector, std::size_t depthCap) {
            SolveResult r = solve(p, options(algo, strategy, heuristics, modeSelector, depthCap));
            return py::make_tuple(familyNames(p, r.models), statsDict(r.stats));
        },
        py::arg("program"), py::arg("algo") = "a", py::arg("strategy") = "wfs", py::arg("heuristics") = "size-min",
        py::arg("mode_selector") = "atom", py::arg("depth_cap") = 64,
        "Returns (models, stats); models are sorted lists of atom names.");

    m.def(
        "query",
        [](const Program& p, const std::string& mode, const std::string& algo, const std::string& strategy) {
            QueryAnswer a = solveQuery(p, options(algo, strategy, "size-min", "atom", 64), QueryMode::parse(mode));
            py::dict d;
            d["holds"] = a.holds;
            d["vacuous"] = a.vacuous;
            d["models"] = familyNames(p, a.models);
            d["model"] = a.model ? py::cast(p.names(*a.model)) : py::none();
            d["stats"] = statsDict(a.stats);
            return d;
        },
        py::arg("program"), py::arg("mode"), py::arg("algo") = "a", py::arg("strategy") = "wfs",
        "mode is one of all, first, exists, brave:ATOM, cautious:ATOM.");

    m.def(
        "brute_force_stable",
        [](const Program& p, std::size_t cap) { return familyNames(p, bruteForceStable(p, cap)); },
        py::arg("program"), py::arg("cap") = kDefaultBruteForceCap);
    m.def(
        "brute_force_answer_sets",
        [](const Program& p, std::size_t cap) { return familyNames(p, bruteForceAnswerSets(p, cap)); },
        py::arg("program"), py::arg("cap") = kDefaultBruteForceCap);
    m.def(
        "is_stable", [](const Program& p, const std::vector<std::string>& model) { return isStable(p, p.lookup(model)); },
        py::arg("program"), py::arg("model"));
    m.def(
        "is_answer_set",
        [](const Program& p, const std::vector<std::string>& model) { return isAnswerSet(p, p.lookup(model)); },
        py::arg("program"), py::arg("model"));

    m.def(
        "well_founded",
        [](const Program& p) {
            WfsResult w = wellFounded(p);
            return py::make_tuple(p.names(w.trueSet), p.names(w.falseSet));
        },
        py::arg("program"), "Returns (true_atoms, false_atoms).");
    m.def(
        "simp",
        [](const Program& p, const std::vector<std::string>& t, const std::vector<std::string>& f) {
            return simp(p, p.lookup(t), p.lookup(f));
        },
        py::arg("program"), py::arg("true_atoms") = std::vector<std::string>{},
        py::arg("false_atoms") = std::vector<std::string>{});
    m.def("overline", &overline, py::arg("program"));
    m.def("remove_redundant_rules", &removeRedundantRules, py::arg("program"));
    m.def("shift", &shift, py::arg("program"));

    m.def("s0", &s0, py::arg("n"));
    m.def(
        "max_stable",
        [](const std::string& cls, int n, int mm) {
            BoundDescriptor b = maxStable(programClassFromString(cls), n, mm);
            py::dict d;
            d["exact"] = b.exact ? py::cast(*b.exact) : py::none();
            d["ceiling"] = b.ceiling ? py::cast(*b.ceiling) : py::none();
            d["witness"] = b.witness;
            d["witness_program"] = b.witnessProgram;
            return d;
        },
        py::arg("cls"), py::arg("n"), py::arg("m") = 0, "cls is one of LPn, LP2n, LPsize, DPnm, DPsize.");
    m.def(
        "is_extremal_member", [](const Program& p, int n) { return isExtremalMember(p, n); }, py::arg("program"),
        py::arg("n"));

    m.def(
        "is_antichain", [](const Names& family) { return isAntichain(SetFamily(family)); }, py::arg("family"));
    m.def(
        "encode",
        [](const Names& family, const py::object& policy) { return encodeAntichain(SetFamily(family), policyFrom(policy)); },
        py::arg("family"), py::arg("policy") = "least",
        "Program whose stable models are exactly the given antichain.");
    m.def(
        "encoding_size_report",
        [](const Names& family) {
            EncodingSizeReport r = encodingSizeReport(SetFamily(family));
            py::dict d;
            d["clauses"] = r.clauses;
            d["size"] = r.size;
            d["clause_ceiling"] = r.clauseCeiling;
            d["size_ceiling"] = r.sizeCeiling;
            d["within_bounds"] = r.withinBounds();
            return d;
        },
        py::arg("family"));

    m.def("suite_names", &suiteNames);
    m.def(
        "run_suite",
        [](const std::string& name, std::optional<std::size_t> cases, std::uint64_t seed) {
            VerifyOptions o;
            o.cases = cases;
            o.seed = seed;
            SuiteReport r = runSuite(name, o);
            return py::make_tuple(r.passed(), r.render());
        },
        py::arg("name"), py::arg("cases") = py::none(), py::arg("seed") = 0, "Returns (passed, report_text).");
}
