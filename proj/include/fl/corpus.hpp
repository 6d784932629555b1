#pragma once

#include "fl/counter.hpp"
#include "fl/fa.hpp"
#include "fl/grammar.hpp"
#include "fl/pda.hpp"
#include "fl/rewriting.hpp"

/// The worked examples used throughout the library's tests and shipped as
/// JSON documents under corpus/.
namespace fl::corpus {

/// Strings over {a,b} with no two b's in a row; 3 states, accepting {1,2}.
Fa nobb_dfa();
/// nobb with every state split into two equivalent copies (6 states).
Fa nobb6_dfa();
/// Strings over {a,b} with an even number of b's.
Fa evenb_dfa();
/// Strings over {a,b,c} with no c anywhere to the left of an a.
Fa no_c_before_a_dfa();
/// Binary encodings of multiples of 3 (the empty string encodes 0).
Fa binary_mod3_dfa();
/// Words whose 3rd-to-last symbol is b (the 4-state NFA).
Fa m3_nfa();
/// Words whose k-th-to-last symbol is b; k+1 states.
Fa lk_nfa(int k);
/// Unary words whose length is a multiple of p.
Fa unary_multiple_dfa(int p);
/// The (ab)* two-state cycle, left partial.
Fa ab_star_dfa();
/// Accepts exactly the given word.
Fa single_word_nfa(const Word& w, const Word& alphabet);

/// Dyck language with k bracket pairs out of ()[]{}<>; S -> (S)S | ... | eps.
Grammar dyck_grammar(int k);
/// a^n b^n, n >= 0.
Grammar anbn_grammar();
/// Palindromes over {a,b}.
Grammar palindrome_grammar();
/// Equal numbers of a's and b's: S -> aSbS | bSaS | eps.
Grammar aeqb_grammar();
/// a^m b^n with m > n >= 0.
Grammar ambn_grammar();
/// The ambiguous grammar S -> S(S)S | eps for D1.
Grammar d1_ambiguous_grammar();
/// Hand-written CNF for nonempty balanced parentheses (4 variables).
Grammar d1plus_cnf();
/// Hand-written CNF for a^n b^n, n >= 1 (4 variables).
Grammar anbn_cnf();
/// Regular grammar {S -> aS, S -> bT, T -> aS, T -> eps}.
Grammar endsb_regular_grammar();

/// Noncontracting grammar for the copy language { ww : w nonempty }.
Grammar copy_csg();
/// Noncontracting grammar for a^n b^n c^n, n >= 1.
Grammar anbncn_csg();

/// Dyck-language DPDA over k bracket pairs; accepts on empty stack.
Pda dyck_dpda(int k);
/// a^n b^n DPDA: push markers on a's, pop them on b's.
Pda anbn_dpda();
/// Palindrome NPDA: push a prefix, guess the midpoint (even or odd), match
/// the reversed suffix.
Pda palindrome_npda();

/// One-counter machine for equal numbers of a's and b's.
CounterMachine aeqb_dca();
/// One-counter nondeterministic machine for the complement of palindromes.
CounterMachine not_palindrome_nca();
/// Two-counter machine for #a=#b and #c=#d over {a,b,c,d}.
CounterMachine grid2_dca();

/// Zig-zag marker machine deciding a^n b^n.
TuringMachine anbn_tm();
/// delta(blank, s0) = (blank, s0, +1): loops forever.
TuringMachine loop_tm();
/// Scans right and accepts at the first blank.
TuringMachine rightscan_tm();

}  // namespace fl::corpus
