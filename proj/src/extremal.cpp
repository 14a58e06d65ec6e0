#include "lpstable/extremal.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <map>
#include <numeric>

#include "lpstable/transform.hpp"

namespace lpstable {

namespace {

std::uint64_t checkedPow(std::uint64_t base, std::uint64_t exponent) {
    std::uint64_t out = 1;
    for (std::uint64_t i = 0; i < exponent; ++i) {
        if (base != 0 && out > UINT64_MAX / base) {
            throw Error("integer overflow in bound computation");
        }
        out *= base;
    }
    return out;
}

void addCanonical(ProgramBuilder& builder, const std::vector<std::string>& atoms) {
    for (std::size_t i = 0; i < atoms.size(); ++i) {
        std::vector<std::string> neg;
        for (std::size_t j = 0; j < atoms.size(); ++j) {
            if (j != i) {
                neg.push_back(atoms[j]);
            }
        }
        builder.addRule({atoms[i]}, {}, neg);
    }
}

int parseInt(std::string_view text, std::string_view context) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size()) {
        throw Error("bad number '" + std::string(text) + "' in generator spec '" + std::string(context) + "'");
    }
    return value;
}

}  // namespace

std::uint64_t Signature::modelCount() const {
    return checkedPow(2, lambda2) * checkedPow(3, lambda3) * checkedPow(4, lambda4);
}

Program canonicalProgram(const std::vector<std::string>& atoms) {
    if (atoms.empty()) {
        throw Error("canonical program needs at least one atom");
    }
    std::vector<std::string> sorted = atoms;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        throw Error("canonical program atoms must be distinct");
    }
    ProgramBuilder builder;
    addCanonical(builder, atoms);
    return builder.build();
}

Program program234(const Signature& signature) {
    if (signature.lambda2 + signature.lambda3 + signature.lambda4 == 0) {
        throw Error("2,3,4-program needs at least one stratum");
    }
    ProgramBuilder builder;
    int stratum = 0;
    auto emit = [&](std::uint32_t count, int width) {
        for (std::uint32_t i = 0; i < count; ++i) {
            ++stratum;
            std::vector<std::string> atoms;
            for (int j = 1; j <= width; ++j) {
                atoms.push_back("c" + std::to_string(stratum) + "_" + std::to_string(j));
            }
            addCanonical(builder, atoms);
        }
    };
    emit(signature.lambda2, 2);
    emit(signature.lambda3, 3);
    emit(signature.lambda4, 4);
    return builder.build();
}

Signature namedSignature(NamedFamily family, int k) {
    auto need = [&](int min, const char* name) {
        if (k < min) {
            throw Error(std::string(name) + "(k) requires k >= " + std::to_string(min));
        }
    };
    auto u = [](int v) { return static_cast<std::uint32_t>(v); };
    switch (family) {
        case NamedFamily::A: need(1, "A"); return {0, u(k), 0};
        case NamedFamily::B: need(0, "B"); return {1, u(k), 0};
        case NamedFamily::C: need(1, "C"); return {2, u(k - 1), 0};
        case NamedFamily::CPrime: need(1, "C'"); return {0, u(k - 1), 1};
        case NamedFamily::P: need(0, "P"); return {u(k), 0, 0};
    }
    throw Error("unknown family");
}

Program generateNamed(NamedFamily family, int k) {
    Signature sig = namedSignature(family, k);
    if (sig.clauseCount() == 0) {
        return Program();  // P(0)
    }
    return program234(sig);
}

Program generateD(int n, int m) {
    if (n < 1 || m < 1) {
        throw Error("D(n,m) requires n, m >= 1");
    }
    ProgramBuilder builder;
    for (int i = 1; i <= n; ++i) {
        std::vector<std::string> head;
        for (int j = 1; j <= m; ++j) {
            head.push_back("a" + std::to_string(i) + "_" + std::to_string(j));
        }
        builder.addRule(head);
    }
    return builder.build();
}

Program generateFromSpec(std::string_view spec) {
    auto colon = spec.find(':');
    if (colon == std::string_view::npos) {
        throw Error("generator spec '" + std::string(spec) + "' lacks ':'");
    }
    std::string_view name = spec.substr(0, colon);
    std::string_view args = spec.substr(colon + 1);
    if (name == "D") {
        auto x = args.find('x');
        if (x == std::string_view::npos) {
            throw Error("D spec must look like D:NxM");
        }
        return generateD(parseInt(args.substr(0, x), spec), parseInt(args.substr(x + 1), spec));
    }
    if (name == "sig") {
        std::vector<int> parts;
        std::size_t start = 0;
        for (;;) {
            auto comma = args.find(',', start);
            parts.push_back(parseInt(args.substr(start, comma - start), spec));
            if (comma == std::string_view::npos) {
                break;
            }
            start = comma + 1;
        }
        if (parts.size() != 3 || std::any_of(parts.begin(), parts.end(), [](int v) { return v < 0; })) {
            throw Error("sig spec must be sig:L2,L3,L4 with non-negative counts");
        }
        return program234(Signature{static_cast<std::uint32_t>(parts[0]), static_cast<std::uint32_t>(parts[1]),
                                    static_cast<std::uint32_t>(parts[2])});
    }
    static const std::map<std::string_view, NamedFamily> families{
        {"A", NamedFamily::A}, {"B", NamedFamily::B}, {"C", NamedFamily::C},
        {"Cp", NamedFamily::CPrime}, {"P", NamedFamily::P}};
    auto it = families.find(name);
    if (it == families.end()) {
        throw Error("unknown generator '" + std::string(name) + "'");
    }
    return generateNamed(it->second, parseInt(args, spec));
}

std::uint64_t s0(int n) {
    if (n < 2) {
        throw Error("s0(n) is defined for n >= 2");
    }
    if (n == 2) {
        return 2;  // 6 * 3^-1
    }
    const std::uint64_t factor[] = {3, 4, 6};
    return factor[n % 3] * checkedPow(3, static_cast<std::uint64_t>(n / 3 - 1));
}

Signature extremalSignature(int n) {
    if (n < 2) {
        throw Error("extremal 2,3,4-programs need n >= 2");
    }
    int k = n / 3;
    switch (n % 3) {
        case 0: return namedSignature(NamedFamily::A, k);
        case 1: return namedSignature(NamedFamily::C, k);
        default: return namedSignature(NamedFamily::B, k);
    }
}

ProgramClass programClassFromString(std::string_view name) {
    if (name == "LPn") return ProgramClass::LPn;
    if (name == "LP2n") return ProgramClass::LP2n;
    if (name == "LPsize") return ProgramClass::LPsize;
    if (name == "DPnm") return ProgramClass::DPnm;
    if (name == "DPsize") return ProgramClass::DPsize;
    throw Error("unknown program class '" + std::string(name) + "'");
}

BoundDescriptor maxStable(ProgramClass cls, int n, int m) {
    BoundDescriptor out;
    switch (cls) {
        case ProgramClass::LPn: {
            std::uint64_t value = s0(n);
            out.exact = value;
            out.witness = value;
            int k = n / 3;
            out.witnessProgram = n % 3 == 0 ? "A:" + std::to_string(k)
                                 : n % 3 == 1 ? "C:" + std::to_string(k)
                                              : "B:" + std::to_string(k);
            return out;
        }
        case ProgramClass::LP2n: {
            if (n < 1) {
                throw Error("LP2n requires n >= 1");
            }
            out.exact = checkedPow(2, static_cast<std::uint64_t>(n / 2));
            out.witness = *out.exact;
            out.witnessProgram = "P:" + std::to_string(n / 2);
            return out;
        }
        case ProgramClass::LPsize: {
            if (n < 1) {
                throw Error("LPsize requires n >= 1");
            }
            out.ceiling = std::pow(2.0, n / 4.0);
            out.witness = checkedPow(2, static_cast<std::uint64_t>(n / 4));
            out.witnessProgram = "P:" + std::to_string(n / 4);
            return out;
        }
        case ProgramClass::DPnm: {
            if (n < 1 || m < 1) {
                throw Error("DPnm requires n, m >= 1");
            }
            out.exact = checkedPow(static_cast<std::uint64_t>(m), static_cast<std::uint64_t>(n));
            out.witness = *out.exact;
            out.witnessProgram = "D:" + std::to_string(n) + "x" + std::to_string(m);
            return out;
        }
        case ProgramClass::DPsize: {
            if (n < 2) {
                throw Error("DPsize requires n >= 2");
            }
            // No closed-form ceiling is shipped for this class; only the witness.
            out.witness = checkedPow(2, static_cast<std::uint64_t>(n / 2));
            out.witnessProgram = "D:" + std::to_string(n / 2) + "x2";
            return out;
        }
    }
    throw Error("unknown program class");
}

Program shift(const Program& program) {
    std::vector<Rule> out;
    out.reserve(program.clauseCount());
    for (const Rule& r : program.rules()) {
        out.push_back(Rule{r.head.unite(r.negBody), r.posBody, {}});
    }
    return program.withRules(std::move(out));
}

std::optional<Signature> signatureOf(const Program& program) {
    const std::size_t atomCount = program.symbols().size();
    std::vector<std::size_t> parent(atomCount);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    };
    for (const Rule& r : program.rules()) {
        if (!r.isNormal() || !r.posBody.empty()) {
            return std::nullopt;
        }
        for (AtomId b : r.negBody) {
            parent[find(b)] = find(r.headAtom());
        }
    }
    std::map<std::size_t, std::vector<const Rule*>> components;
    for (const Rule& r : program.rules()) {
        components[find(r.headAtom())].push_back(&r);
    }
    Signature sig;
    AtomSet covered;
    for (const auto& [root, rules] : components) {
        AtomSet atoms;
        AtomSet heads;
        for (const Rule* r : rules) {
            atoms = atoms.unite(r->head).unite(r->negBody);
            heads.insert(r->headAtom());
        }
        if (heads.size() != rules.size() || heads != atoms) {
            return std::nullopt;
        }
        for (const Rule* r : rules) {
            if (r->negBody != atoms.minus(r->head)) {
                return std::nullopt;
            }
        }
        switch (rules.size()) {
            case 2: ++sig.lambda2; break;
            case 3: ++sig.lambda3; break;
            case 4: ++sig.lambda4; break;
            default: return std::nullopt;
        }
    }
    return sig;
}

bool isExtremalMember(const Program& program, int n) {
    if (n < 2 || !program.isNormal() || program.clauseCount() != static_cast<std::size_t>(n)) {
        return false;
    }
    std::optional<Signature> sig = signatureOf(overline(program));
    if (!sig) {
        return false;
    }
    int k = n / 3;
    if (n % 3 == 1) {
        return *sig == namedSignature(NamedFamily::C, k) || *sig == namedSignature(NamedFamily::CPrime, k);
    }
    return *sig == extremalSignature(n);
}

bool isIsomorphicToD(const Program& program, int n, int m) {
    if (program.clauseCount() != static_cast<std::size_t>(n)) {
        return false;
    }
    AtomSet seen;
    for (const Rule& r : program.rules()) {
        if (!r.isFact() || r.head.size() != static_cast<std::size_t>(m) || r.head.intersects(seen)) {
            return false;
        }
        seen = seen.unite(r.head);
    }
    return true;
}

}  // namespace lpstable
