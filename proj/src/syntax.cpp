#include "lpstable/syntax.hpp"

#include <algorithm>
#include <cctype>
#include <iterator>
#include <sstream>

namespace lpstable {

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& message)
    : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + message), line_(line), column_(column) {}

bool isValidAtomName(std::string_view name) noexcept {
    if (name.empty() || name == "not" || !(name[0] >= 'a' && name[0] <= 'z')) {
        return false;
    }
    return std::all_of(name.begin() + 1, name.end(), [](char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
    });
}

// SymbolTable --------------------------------------------------------------

AtomId SymbolTable::intern(std::string_view name) {
    auto it = ids_.find(std::string(name));
    if (it != ids_.end()) {
        return it->second;
    }
    if (!isValidAtomName(name)) {
        throw Error("invalid atom name '" + std::string(name) + "'");
    }
    auto id = static_cast<AtomId>(names_.size());
    names_.emplace_back(name);
    ids_.emplace(names_.back(), id);
    return id;
}

bool SymbolTable::contains(std::string_view name) const {
    return ids_.count(std::string(name)) != 0;
}

AtomId SymbolTable::id(std::string_view name) const {
    auto it = ids_.find(std::string(name));
    if (it == ids_.end()) {
        throw Error("unknown atom '" + std::string(name) + "'");
    }
    return it->second;
}

// AtomSet ------------------------------------------------------------------

AtomSet::AtomSet(std::initializer_list<AtomId> ids) : AtomSet(std::vector<AtomId>(ids)) {}

AtomSet::AtomSet(std::vector<AtomId> ids) : ids_(std::move(ids)) {
    std::sort(ids_.begin(), ids_.end());
    ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
}

bool AtomSet::contains(AtomId a) const noexcept {
    return std::binary_search(ids_.begin(), ids_.end(), a);
}

void AtomSet::insert(AtomId a) {
    auto it = std::lower_bound(ids_.begin(), ids_.end(), a);
    if (it == ids_.end() || *it != a) {
        ids_.insert(it, a);
    }
}

void AtomSet::erase(AtomId a) {
    auto it = std::lower_bound(ids_.begin(), ids_.end(), a);
    if (it != ids_.end() && *it == a) {
        ids_.erase(it);
    }
}

bool AtomSet::isSubsetOf(const AtomSet& other) const {
    return std::includes(other.ids_.begin(), other.ids_.end(), ids_.begin(), ids_.end());
}

bool AtomSet::intersects(const AtomSet& other) const {
    auto a = ids_.begin();
    auto b = other.ids_.begin();
    while (a != ids_.end() && b != other.ids_.end()) {
        if (*a == *b) {
            return true;
        }
        *a < *b ? ++a : ++b;
    }
    return false;
}

AtomSet AtomSet::unite(const AtomSet& other) const {
    AtomSet out;
    std::set_union(ids_.begin(), ids_.end(), other.ids_.begin(), other.ids_.end(), std::back_inserter(out.ids_));
    return out;
}

AtomSet AtomSet::minus(const AtomSet& other) const {
    AtomSet out;
    std::set_difference(ids_.begin(), ids_.end(), other.ids_.begin(), other.ids_.end(),
                        std::back_inserter(out.ids_));
    return out;
}

AtomSet AtomSet::intersect(const AtomSet& other) const {
    AtomSet out;
    std::set_intersection(ids_.begin(), ids_.end(), other.ids_.begin(), other.ids_.end(),
                          std::back_inserter(out.ids_));
    return out;
}

// Rule / Program -----------------------------------------------------------

bool Rule::isRedundant() const {
    return head.intersects(posBody) || head.intersects(negBody) || posBody.intersects(negBody);
}

AtomId Rule::headAtom() const {
    if (!isNormal()) {
        throw Error("rule is not normal");
    }
    return *head.begin();
}

Program::Program() : symbols_(std::make_shared<SymbolTable>()) {}

Program::Program(std::shared_ptr<const SymbolTable> symbols, std::vector<Rule> rules)
    : symbols_(std::move(symbols)), rules_(std::move(rules)) {
    for (const Rule& r : rules_) {
        if (r.head.empty()) {
            throw Error("rule with empty head");
        }
        for (const AtomSet* part : {&r.head, &r.posBody, &r.negBody}) {
            if (!part->empty() && part->ids().back() >= symbols_->size()) {
                throw Error("rule references an atom outside the symbol table");
            }
        }
    }
}

std::size_t Program::size() const noexcept {
    std::size_t total = 0;
    for (const Rule& r : rules_) {
        total += r.size();
    }
    return total;
}

bool Program::isNormal() const noexcept {
    return std::all_of(rules_.begin(), rules_.end(), [](const Rule& r) { return r.isNormal(); });
}

bool Program::isPositive() const noexcept {
    return std::all_of(rules_.begin(), rules_.end(), [](const Rule& r) { return r.negBody.empty(); });
}

AtomSet Program::heads() const {
    std::vector<AtomId> ids;
    for (const Rule& r : rules_) {
        ids.insert(ids.end(), r.head.begin(), r.head.end());
    }
    return AtomSet(std::move(ids));
}

AtomSet Program::atoms() const {
    std::vector<AtomId> ids;
    for (const Rule& r : rules_) {
        for (const AtomSet* part : {&r.head, &r.posBody, &r.negBody}) {
            ids.insert(ids.end(), part->begin(), part->end());
        }
    }
    return AtomSet(std::move(ids));
}

Program Program::withRules(std::vector<Rule> rules) const {
    return Program(symbols_, std::move(rules));
}

std::vector<std::string> Program::names(const AtomSet& set) const {
    std::vector<std::string> out;
    out.reserve(set.size());
    for (AtomId a : set) {
        out.push_back(symbols_->name(a));
    }
    std::sort(out.begin(), out.end());
    return out;
}

AtomSet Program::lookup(const std::vector<std::string>& names) const {
    std::vector<AtomId> ids;
    ids.reserve(names.size());
    for (const std::string& n : names) {
        ids.push_back(symbols_->id(n));
    }
    return AtomSet(std::move(ids));
}

bool sameProgram(const Program& a, const Program& b) {
    if (a.clauseCount() != b.clauseCount()) {
        return false;
    }
    for (std::size_t i = 0; i < a.clauseCount(); ++i) {
        const Rule& ra = a.rule(i);
        const Rule& rb = b.rule(i);
        if (a.names(ra.head) != b.names(rb.head) || a.names(ra.posBody) != b.names(rb.posBody) ||
            a.names(ra.negBody) != b.names(rb.negBody)) {
            return false;
        }
    }
    return true;
}

ProgramBuilder::ProgramBuilder() : symbols_(std::make_shared<SymbolTable>()) {}

AtomId ProgramBuilder::atom(std::string_view name) { return symbols_->intern(name); }

ProgramBuilder& ProgramBuilder::addRule(const std::vector<std::string>& head,
                                        const std::vector<std::string>& posBody,
                                        const std::vector<std::string>& negBody) {
    auto intern = [this](const std::vector<std::string>& names) {
        std::vector<AtomId> ids;
        for (const std::string& n : names) {
            ids.push_back(atom(n));
        }
        return AtomSet(std::move(ids));
    };
    Rule r{intern(head), intern(posBody), intern(negBody)};
    return addRule(std::move(r));
}

ProgramBuilder& ProgramBuilder::addRule(Rule rule) {
    if (rule.head.empty()) {
        throw Error("rule with empty head");
    }
    rules_.push_back(std::move(rule));
    return *this;
}

Program ProgramBuilder::build() const {
    // Snapshot the table.
    return Program(std::make_shared<const SymbolTable>(*symbols_), rules_);
}

// Parsing ------------------------------------------------------------------

namespace {

class Lexer {
public:
    explicit Lexer(std::string_view text) : text_(text) {}

    void skipSpace() {
        while (pos_ < text_.size()) {
            char c = text_[pos_];
            if (c == '%') {
                while (pos_ < text_.size() && text_[pos_] != '\n') {
                    advance();
                }
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                advance();
            } else {
                break;
            }
        }
    }

    bool atEnd() {
        skipSpace();
        return pos_ >= text_.size();
    }

    bool accept(std::string_view token) {
        skipSpace();
        if (text_.substr(pos_, token.size()) == token) {
            for (std::size_t i = 0; i < token.size(); ++i) {
                advance();
            }
            return true;
        }
        return false;
    }

    void expect(std::string_view token) {
        if (!accept(token)) {
            fail("expected '" + std::string(token) + "'");
        }
    }

    std::string identifier() {
        skipSpace();
        std::size_t start = pos_;
        if (pos_ < text_.size() && text_[pos_] >= 'a' && text_[pos_] <= 'z') {
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
                advance();
            }
        }
        if (start == pos_) {
            fail("expected atom");
        }
        return std::string(text_.substr(start, pos_ - start));
    }

    /// True when the next token is "not" followed by whitespace.
    bool acceptNot() {
        skipSpace();
        if (text_.substr(pos_, 3) == "not" && pos_ + 3 < text_.size() &&
            std::isspace(static_cast<unsigned char>(text_[pos_ + 3]))) {
            for (int i = 0; i < 3; ++i) {
                advance();
            }
            return true;
        }
        return false;
    }

    [[noreturn]] void fail(const std::string& message) const { throw ParseError(line_, column_, message); }
    std::size_t line() const noexcept { return line_; }

private:
    void advance() {
        if (text_[pos_] == '\n') {
            ++line_;
            column_ = 1;
        } else {
            ++column_;
        }
        ++pos_;
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    std::size_t line_ = 1;
    std::size_t column_ = 1;
};

}  // namespace

Program parseProgram(std::string_view text, ParseDiagnostics* diagnostics) {
    Lexer lex(text);
    ProgramBuilder builder;
    auto checkedAtom = [&](const std::string& name) {
        if (name == "not") {
            lex.fail("'not' is reserved");
        }
        return name;
    };
    while (!lex.atEnd()) {
        std::size_t line = lex.line();
        std::vector<std::string> head{checkedAtom(lex.identifier())};
        while (lex.accept("|")) {
            head.push_back(checkedAtom(lex.identifier()));
        }
        std::vector<std::string> pos;
        std::vector<std::string> neg;
        if (lex.accept(":-")) {
            do {
                if (lex.acceptNot()) {
                    neg.push_back(checkedAtom(lex.identifier()));
                } else {
                    pos.push_back(checkedAtom(lex.identifier()));
                }
            } while (lex.accept(","));
        }
        lex.expect(".");
        builder.addRule(head, pos, neg);
        auto distinct = [](std::vector<std::string> v) {
            std::sort(v.begin(), v.end());
            return std::adjacent_find(v.begin(), v.end()) == v.end();
        };
        if (!distinct(head) || !distinct(pos) || !distinct(neg)) {
            if (diagnostics != nullptr) {
                diagnostics->deduplicated = true;
                diagnostics->dedupLines.push_back(line);
            }
        }
    }
    return builder.build();
}

// Printing -----------------------------------------------------------------

std::string printRule(const Program& program, const Rule& rule) {
    std::ostringstream out;
    auto heads = program.names(rule.head);
    for (std::size_t i = 0; i < heads.size(); ++i) {
        out << (i ? " | " : "") << heads[i];
    }
    if (rule.bodySize() != 0) {
        out << " :- ";
        bool first = true;
        for (const std::string& n : program.names(rule.posBody)) {
            out << (first ? "" : ", ") << n;
            first = false;
        }
        for (const std::string& n : program.names(rule.negBody)) {
            out << (first ? "" : ", ") << "not " << n;
            first = false;
        }
    }
    out << '.';
    return out.str();
}

std::string printProgram(const Program& program) {
    std::string out;
    for (std::size_t i = 0; i < program.clauseCount(); ++i) {
        if (i) {
            out += '\n';
        }
        out += printRule(program, program.rule(i));
    }
    return out;
}

std::string formatModel(const Program& program, const Interpretation& model) {
    std::string out = "{";
    auto names = program.names(model);
    for (std::size_t i = 0; i < names.size(); ++i) {
        out += (i ? ", " : "") + names[i];
    }
    return out + "}";
}

}  // namespace lpstable
