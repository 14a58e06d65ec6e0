#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lpstable/syntax.hpp"

namespace lpstable {

/// Counts of canonical strata over 2-, 3- and 4-element atom sets.
struct Signature {
    std::uint32_t lambda2 = 0;
    std::uint32_t lambda3 = 0;
    std::uint32_t lambda4 = 0;

    std::uint32_t clauseCount() const noexcept { return 2 * lambda2 + 3 * lambda3 + 4 * lambda4; }
    /// 2^lambda2 * 3^lambda3 * 4^lambda4.
    std::uint64_t modelCount() const;
    friend bool operator==(const Signature&, const Signature&) = default;
};

/// CP[A]: for each a_i, the rule a_i <- not a_j for every j != i.
Program canonicalProgram(const std::vector<std::string>& atoms);

/// Disjoint union of canonical programs; stratum s of size t uses atoms c{s}_1 .. c{s}_t.
Program program234(const Signature& signature);

enum class NamedFamily {
    A,       ///< <0,k,0>, k >= 1
    B,       ///< <1,k,0>, k >= 0
    C,       ///< <2,k-1,0>, k >= 1
    CPrime,  ///< <0,k-1,1>, k >= 1
    P,       ///< <k,0,0>, k >= 0
};

Signature namedSignature(NamedFamily family, int k);
Program generateNamed(NamedFamily family, int k);

/// n facts, rule i has head a{i}_1 | ... | a{i}_m.
Program generateD(int n, int m);

/// Parses "A:3", "B:2", "C:2", "Cp:2", "P:4", "D:3x2" or "sig:2,1,1" and builds the program.
Program generateFromSpec(std::string_view spec);

/// Maximum number of stable models of a 2,3,4-program with n >= 2 clauses.
std::uint64_t s0(int n);

/// The signature of the extremal 2,3,4-program with n clauses (C(k) when n = 3k+1).
Signature extremalSignature(int n);

enum class ProgramClass {
    LPn,     ///< normal, at most n clauses
    LP2n,    ///< normal, n clauses, at most one body literal each
    LPsize,  ///< normal, size at most n
    DPnm,    ///< disjunctive, at most n clauses of length at most m
    DPsize,  ///< disjunctive, size at most n
};

ProgramClass programClassFromString(std::string_view name);

struct BoundDescriptor {
    std::optional<std::uint64_t> exact;  ///< the class maximum, when known exactly
    std::optional<double> ceiling;       ///< a proven upper bound, when only that is known
    std::uint64_t witness = 0;           ///< models of an explicit member of the class
    std::string witnessProgram;          ///< generator spec of that member
};

/// Throws Error for invalid parameters. m is used by DPnm only.
BoundDescriptor maxStable(ProgramClass cls, int n, int m = 0);

/// Moves every negated body atom into the head.
Program shift(const Program& program);

/// Recognizes a disjoint union of canonical programs over 2..4 atoms each.
std::optional<Signature> signatureOf(const Program& program);

/// overline(P) is isomorphic to the extremal 2,3,4-program for n clauses
/// (A(k), B(k), or C(k)/C'(k) according to n mod 3).
bool isExtremalMember(const Program& program, int n);

/// True when the rules are n facts with pairwise disjoint heads of exactly m atoms.
bool isIsomorphicToD(const Program& program, int n, int m);

}  // namespace lpstable
