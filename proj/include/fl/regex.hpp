#pragma once

#include <memory>
#include <set>
#include <string>
#include <vector>

#include "fl/fa.hpp"

namespace fl {

/// Regular-expression syntax tree over { empty language, empty word,
/// symbol, concatenation, union, star }.
struct Regex;
using RegexPtr = std::shared_ptr<const Regex>;

struct Regex {
    enum class Kind { Empty, Epsilon, Literal, Concat, Union, Star };
    Kind kind;
    Symbol sym = 0;        // Literal only
    RegexPtr left, right;  // Concat/Union both, Star left only
};

RegexPtr rx_empty();
RegexPtr rx_epsilon();
RegexPtr rx_literal(Symbol a);
RegexPtr rx_concat(RegexPtr l, RegexPtr r);
RegexPtr rx_union(RegexPtr l, RegexPtr r);
RegexPtr rx_star(RegexPtr x);

/// Concrete syntax: `@` is the empty language, `_` the empty word,
/// juxtaposition concatenates, `+` takes unions, postfix `*` is the Kleene
/// star, parentheses group; precedence * > concat > +. `∅` and `ε` are
/// accepted as aliases for `@` and `_`; a backslash escapes the next
/// character as a literal symbol. Throws ParseError with a position.
RegexPtr parse_regex(const std::string& utf8_text);

/// Prints in the same concrete syntax, parenthesizing minimally.
std::string regex_to_string(const RegexPtr& r);

/// Every alphabet symbol occurring in the expression.
std::set<Symbol> regex_symbols(const RegexPtr& r);

/// Compiles by structural recursion on the tree; the result recognizes
/// L(r) under Exists acceptance. The automaton's alphabet is the symbols of
/// `r` plus any extra symbols supplied.
Fa regex_to_nfa(const RegexPtr& r, const std::vector<Symbol>& extra_alphabet = {});

/// Extracts an expression by state elimination: a fresh accepting sink is
/// wired up, interior states are removed one at a time (fewest in*out
/// first), parallel edges merge with `+`, and a path through the removed
/// state s contributes phi1 phi3* phi2 where phi3 labels s's self-loop.
RegexPtr nfa_to_regex(const Fa& m);

/// Same, with an explicit removal order (state indices of `m`; states not
/// listed are removed afterwards by the default heuristic).
RegexPtr nfa_to_regex(const Fa& m, const std::vector<int>& elimination_order);

/// Compile-and-run convenience. Symbols outside the expression's alphabet
/// make the word a plain mismatch, not an error.
bool regex_match(const RegexPtr& r, const Word& w);

/// The expression for the reversed language: (ab)^R = b^R a^R, unions map
/// through, (x*)^R = (x^R)*.
RegexPtr reverse_regex(const RegexPtr& r);

}  // namespace fl
