#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <memory>
#include <variant>

#include "fl/fa.hpp"
#include "fl/grammar.hpp"

namespace fl {

using BigInt = boost::multiprecision::cpp_int;

/// Dynamic-programming membership for a CNF grammar: table[i..j] holds the
/// variables deriving that substring. Non-CNF input is a StructureError;
/// convert with to_cnf first.
bool cyk_member(const Grammar& g, const Word& w);

/// Chomsky normal form via the standard pipeline: fresh start symbol,
/// epsilon-rule elimination, unit-rule elimination, terminal isolation,
/// binarization, useless-variable cleanup. Membership is preserved exactly,
/// including the empty word.
Grammar to_cnf(const Grammar& g);

/// Greibach normal form: CNF first, then variable ordering with
/// left-recursion removal and back-substitution.
Grammar to_gnf(const Grammar& g);

struct ParseTree;
using ParseTreePtr = std::shared_ptr<const ParseTree>;

/// A derivation tree: each node records the variable, the rule applied, and
/// the children spelling out that rule's rhs. The left-to-right leaves are
/// the derived word.
struct ParseTree {
    int var = 0;
    int rule = 0;  // index into g.rules
    std::vector<std::variant<ParseTreePtr, Symbol>> children;
};

/// All distinct parse trees of `w` under a CNF grammar, up to `limit`.
/// Two or more trees certify that the grammar is ambiguous for `w`.
std::vector<ParseTreePtr> enumerate_parse_trees(const Grammar& g, const Word& w,
                                                std::size_t limit);

/// Number of distinct parse trees of `w` (exact, derivation-count DP).
BigInt count_parse_trees(const Grammar& g, const Word& w);

Word tree_frontier(const ParseTreePtr& t);
std::string tree_to_string(const Grammar& g, const ParseTreePtr& t);

/// Word counts n_0..n_maxlen of L(g) for a CNF grammar. By default each
/// length is counted by explicit membership enumeration over T^len (exact
/// for any grammar; lengths whose T^len exceeds `budget` are a
/// ResourceError). When the caller asserts the grammar is unambiguous, the
/// counts come from the derivation-count DP instead, which is exact exactly
/// when that assertion holds.
std::vector<BigInt> count_words(const Grammar& g, int maxlen, bool assume_unambiguous = false,
                                std::size_t budget = 2'000'000);

/// Number of Dyck words over k bracket pairs of the given even length:
/// k^(len/2) / (len/2 + 1) * C(len, len/2). Odd lengths are an InputError.
BigInt dyck_coefficient(int k, int len);

/// One NFA state per variable: A -> t B becomes an edge, A -> epsilon marks
/// A accepting. Requires the Regular class.
Fa regular_grammar_to_nfa(const Grammar& g);

/// Inverse construction; epsilon transitions are eliminated first.
Grammar nfa_to_regular_grammar(const Fa& m);

/// The context-free pumping decomposition w = uvxyz with |vy| > 0,
/// |vxy| <= p and u v^t x y^t z in L for all t >= 0, where p = 2^|V| for a
/// CNF grammar. Found from a repeated variable among the last |V|+1
/// variables on a longest root-to-leaf path of a parse tree.
struct CflPump {
    Word u, v, x, y, z;
    BigInt p;
};

CflPump cfl_pump_decompose(const Grammar& g, const Word& w);

}  // namespace fl
