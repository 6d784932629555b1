#pragma once

#include <optional>

#include "fl/fa.hpp"

namespace fl {

/// Disjoint blocks of equivalent states covering the reachable part of a
/// deterministic automaton. Accepting and rejecting states never share a
/// block.
using StatePartition = std::vector<std::set<int>>;

/// The unique minimal DFA for L(m): unreachable states dropped, then
/// iterated block splitting until stable, one state per block. The input
/// must be deterministic; partial machines are completed with a sink first,
/// which may survive into the result.
Fa minimize(const Fa& m);

/// The stable partition of m's reachable states computed by refinement.
/// Blocks correspond one-to-one with the states of minimize(m). States of a
/// partial machine keep their original indices; the synthetic sink is not
/// reported.
StatePartition state_partition(const Fa& m);

/// std::nullopt when the two states are equivalent; otherwise a shortest
/// word accepted from exactly one of them. Unknown state indices are an
/// InputError.
std::optional<Word> distinguishing_suffix(const Fa& m, int s1, int s2);

/// Structural equality up to a renaming of states (start, accepting set and
/// all transitions preserved). For minimal DFAs this coincides with language
/// equality.
bool isomorphic(const Fa& m1, const Fa& m2);

/// The pumping-lemma decomposition w = xyz with |xy| <= p, |y| > 0 and
/// x y^t z accepted for every t >= 0; p is the state count of the machine.
struct PumpDecomposition {
    Word x, y, z;
    int p = 0;
};

/// Splits an accepted word of length >= p at the first repeated state among
/// the states visited while reading its first p symbols. Rejected or too
/// short words are an InputError.
PumpDecomposition pump_decompose(const Fa& m, const Word& w);

}  // namespace fl
