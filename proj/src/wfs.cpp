#include "lpstable/wfs.hpp"

#include "lpstable/semantics.hpp"
#include "lpstable/transform.hpp"

namespace lpstable {

namespace {

// Gamma(X) = LM(P^X); antimonotone in X.
AtomSet gamma(const Program& program, const AtomSet& assumed) {
    return leastModel(glReduct(program, assumed));
}

}  // namespace

WfsResult wellFounded(const Program& program) {
    if (!program.isNormal()) {
        throw Error("well-founded semantics requires a normal program");
    }
    AtomSet known;  // under-estimate of the true atoms
    AtomSet possible = gamma(program, known);
    for (;;) {
        AtomSet next = gamma(program, possible);
        if (next == known) {
            break;
        }
        known = std::move(next);
        possible = gamma(program, known);
    }
    return WfsResult{known, program.atoms().minus(possible)};
}

std::string_view toString(ImpliedSetStrategy strategy) noexcept {
    return strategy == ImpliedSetStrategy::Trivial ? "trivial" : "wfs";
}

ImpliedSetStrategy impliedSetStrategyFromString(std::string_view name) {
    if (name == "trivial") {
        return ImpliedSetStrategy::Trivial;
    }
    if (name == "wfs") {
        return ImpliedSetStrategy::WellFounded;
    }
    throw Error("unknown implied-set strategy '" + std::string(name) + "'");
}

ImpliedSetResult impliedSet(const Program& program, ImpliedSetStrategy strategy) {
    if (strategy == ImpliedSetStrategy::Trivial) {
        return ImpliedSetResult{AtomSet{}, program};
    }
    WfsResult wfs = wellFounded(program);
    Program residual = simp(program, wfs.trueSet, wfs.falseSet);
    return ImpliedSetResult{std::move(wfs.trueSet), std::move(residual)};
}

}  // namespace lpstable
