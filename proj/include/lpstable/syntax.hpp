#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace lpstable {

using AtomId = std::uint32_t;

/// Base class of every error raised by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ParseError : public Error {
public:
    ParseError(std::size_t line, std::size_t column, const std::string& message);
    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

/// Checks an atom name against [a-z][A-Za-z0-9_]* (and rejects the keyword "not").
bool isValidAtomName(std::string_view name) noexcept;

/// Dense bijection between atom names and ids 0..size()-1.
class SymbolTable {
public:
    AtomId intern(std::string_view name);
    const std::string& name(AtomId id) const { return names_.at(id); }
    bool contains(std::string_view name) const;
    /// Throws Error for unknown names.
    AtomId id(std::string_view name) const;
    std::size_t size() const noexcept { return names_.size(); }

private:
    std::vector<std::string> names_;
    std::unordered_map<std::string, AtomId> ids_;
};

/// Sorted, duplicate-free set of atom ids.
class AtomSet {
public:
    AtomSet() = default;
    AtomSet(std::initializer_list<AtomId> ids);
    explicit AtomSet(std::vector<AtomId> ids);

    bool contains(AtomId a) const noexcept;
    void insert(AtomId a);
    void erase(AtomId a);
    bool empty() const noexcept { return ids_.empty(); }
    std::size_t size() const noexcept { return ids_.size(); }
    auto begin() const noexcept { return ids_.begin(); }
    auto end() const noexcept { return ids_.end(); }
    const std::vector<AtomId>& ids() const noexcept { return ids_; }

    bool isSubsetOf(const AtomSet& other) const;
    bool intersects(const AtomSet& other) const;
    AtomSet unite(const AtomSet& other) const;
    AtomSet minus(const AtomSet& other) const;
    AtomSet intersect(const AtomSet& other) const;

    friend bool operator==(const AtomSet&, const AtomSet&) = default;
    friend auto operator<=>(const AtomSet& a, const AtomSet& b) { return a.ids_ <=> b.ids_; }

private:
    std::vector<AtomId> ids_;
};

/// A candidate or actual stable model / answer set.
using Interpretation = AtomSet;

/// head <- posBody, not negBody. |head| >= 2 makes the rule disjunctive.
struct Rule {
    AtomSet head;
    AtomSet posBody;
    AtomSet negBody;

    bool isNormal() const noexcept { return head.size() == 1; }
    bool isFact() const noexcept { return posBody.empty() && negBody.empty(); }
    std::size_t bodySize() const noexcept { return posBody.size() + negBody.size(); }
    std::size_t size() const noexcept { return head.size() + bodySize(); }
    /// Head atom in its own body (either sign) or a body atom in both signs.
    bool isRedundant() const;
    /// The single head atom of a normal rule.
    AtomId headAtom() const;

    friend bool operator==(const Rule&, const Rule&) = default;
};

/// Ordered rule collection over a shared, immutable symbol table.
class Program {
public:
    Program();
    Program(std::shared_ptr<const SymbolTable> symbols, std::vector<Rule> rules);

    const std::vector<Rule>& rules() const noexcept { return rules_; }
    const Rule& rule(std::size_t index) const { return rules_.at(index); }
    const SymbolTable& symbols() const noexcept { return *symbols_; }
    const std::shared_ptr<const SymbolTable>& sharedSymbols() const noexcept { return symbols_; }

    std::size_t clauseCount() const noexcept { return rules_.size(); }
    bool empty() const noexcept { return rules_.empty(); }
    /// Total number of atom occurrences.
    std::size_t size() const noexcept;
    bool isNormal() const noexcept;
    bool isPositive() const noexcept;

    AtomSet heads() const;
    /// Atoms occurring anywhere in the rules (not the whole symbol table).
    AtomSet atoms() const;

    /// Same symbol table, different rules.
    Program withRules(std::vector<Rule> rules) const;

    std::string atomName(AtomId a) const { return symbols_->name(a); }
    std::vector<std::string> names(const AtomSet& set) const;
    /// Maps names to ids; throws Error for unknown names.
    AtomSet lookup(const std::vector<std::string>& names) const;

private:
    std::shared_ptr<const SymbolTable> symbols_;
    std::vector<Rule> rules_;
};

/// Structural equality through atom names: rule order matters, ids do not.
bool sameProgram(const Program& a, const Program& b);

/// Incremental construction of a Program from atom names.
class ProgramBuilder {
public:
    ProgramBuilder();
    AtomId atom(std::string_view name);
    ProgramBuilder& addRule(const std::vector<std::string>& head,
                            const std::vector<std::string>& posBody = {},
                            const std::vector<std::string>& negBody = {});
    ProgramBuilder& addRule(Rule rule);
    std::size_t ruleCount() const noexcept { return rules_.size(); }
    Program build() const;

private:
    std::shared_ptr<SymbolTable> symbols_;
    std::vector<Rule> rules_;
};

struct ParseDiagnostics {
    /// Set when a rule listed the same literal twice.
    bool deduplicated = false;
    std::vector<std::size_t> dedupLines;
};

Program parseProgram(std::string_view text, ParseDiagnostics* diagnostics = nullptr);
std::string printRule(const Program& program, const Rule& rule);
/// Canonical text, one rule per line; empty program prints as "".
std::string printProgram(const Program& program);

/// "{a, b, c}" with atoms sorted by name.
std::string formatModel(const Program& program, const Interpretation& model);

}  // namespace lpstable
