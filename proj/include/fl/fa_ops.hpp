#pragma once

#include <optional>

#include "fl/fa.hpp"

namespace fl {

enum class BoolOp { And, Or, Xor };

/// Language complement of a deterministic automaton: same structure with the
/// accepting set flipped (totalized first). Nondeterministic input is a
/// StructureError; determinize first.
Fa complement(const Fa& m);

/// Runs both machines in parallel: states are reachable pairs, acceptance is
/// `op` applied to the two memberships. Both inputs must be deterministic
/// and share the alphabet (totalized automatically).
Fa product(const Fa& m1, const Fa& m2, BoolOp op);

/// std::nullopt iff both machines accept the same language; otherwise a
/// shortest word on which they disagree. Any witness has length < n1*n2
/// (state counts after totalization).
std::optional<Word> equivalence_check(const Fa& m1, const Fa& m2);

/// L(m1)L(m2): disjoint union with epsilon edges from m1's accepting states
/// to m2's start.
Fa concatenate(const Fa& m1, const Fa& m2);

/// L(m)*: epsilon edges from accepting states back to the start, plus a
/// fresh accepting start so the empty word is included.
Fa star(const Fa& m);

/// L(m) reversed: arrows flipped, fresh start wired to the old accepting
/// states, the old start becomes the single accepting state.
Fa reverse(const Fa& m);

/// All interleavings of one word from each language: pair states, each step
/// advances exactly one component.
Fa interleave(const Fa& m1, const Fa& m2);

enum class Fraction { FirstHalf, MiddleThird };

/// FirstHalf: { x | exists y, |x|=|y|, xy in L } — tracks the forward run
/// and a backward walk from a guessed accepting state, accepting when they
/// meet. MiddleThird: { y | exists x,z, |x|=|y|=|z|, xyz in L } — one step
/// forward and two backward walks per symbol. Input must be deterministic.
Fa fraction_language(const Fa& m, Fraction which);

}  // namespace fl
