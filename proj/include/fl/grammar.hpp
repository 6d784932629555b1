#pragma once

#include <compare>
#include <set>
#include <string>
#include <vector>

#include "fl/text.hpp"

namespace fl {

enum class GrammarClass { ContextFree, Regular, Cnf, Gnf, Noncontracting };

/// One grammar symbol: either a variable (by index) or a terminal scalar.
struct GSym {
    int var = -1;
    Symbol term = 0;

    static GSym variable(int v) { return {v, 0}; }
    static GSym terminal(Symbol t) { return {-1, t}; }
    bool is_var() const { return var >= 0; }
    auto operator<=>(const GSym&) const = default;
};

struct Rule {
    std::vector<GSym> lhs;  // nonempty
    std::vector<GSym> rhs;  // may be empty (the word epsilon)
};

/// A rewriting grammar (V, T, S, R). The `cls` flag selects which shape
/// invariants `validate` enforces:
///   ContextFree / Regular / Cnf / Gnf — every lhs is one variable;
///   Regular      — every rhs is empty or terminal·variable;
///   Cnf          — rhs is a terminal or two variables (S -> eps allowed
///                  only if S is absent from every rhs);
///   Gnf          — rhs is a terminal followed by variables (same
///                  exception);
///   Noncontracting — |lhs| <= |rhs| except the sanctioned S -> eps.
struct Grammar {
    std::vector<std::string> variables;
    std::vector<Symbol> terminals;  // sorted, duplicate-free
    int start = 0;
    std::vector<Rule> rules;
    GrammarClass cls = GrammarClass::ContextFree;

    int n_vars() const { return static_cast<int>(variables.size()); }
    int add_variable(std::string name);
    void add_terminal(Symbol t);
    bool has_terminal(Symbol t) const;
    int find_variable(const std::string& name) const;  // -1 when absent

    /// Resolves a token to a symbol: a known variable name, otherwise a
    /// single-scalar terminal (added to T on first use).
    GSym sym(const std::string& token);

    /// Convenience: rule("S", {"a","S","b"}). Tokens resolve via sym().
    void rule(const std::string& lhs_token, const std::vector<std::string>& rhs_tokens);
    /// Convenience for non-context-free rules: both sides are token lists.
    void rule2(const std::vector<std::string>& lhs_tokens,
               const std::vector<std::string>& rhs_tokens);

    void validate() const;

    bool single_variable_lhs() const;
    bool has_rule(const std::vector<GSym>& lhs, const std::vector<GSym>& rhs) const;
};

/// Brute-force oracle: exactly the words of L(g) of length <= maxlen, by
/// breadth-first leftmost derivation with minimal-yield pruning. Requires a
/// context-free class (noncontracting membership lives in the rewriting
/// module). Exceeding `budget` expanded forms is a ResourceError.
std::set<Word> generate_words(const Grammar& g, int maxlen, std::size_t budget = 4'000'000);

/// Drops variables that derive no terminal word or are unreachable from the
/// start, together with the rules mentioning them. Context-free only.
Grammar remove_useless(const Grammar& g);

/// Language closures: fresh start symbol wired to disjoint copies.
Grammar grammar_union(const Grammar& g1, const Grammar& g2);
Grammar grammar_concat(const Grammar& g1, const Grammar& g2);
Grammar grammar_star(const Grammar& g);
/// Reverses every rule's right-hand side.
Grammar grammar_reverse(const Grammar& g);

}  // namespace fl
