#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "fl/text.hpp"

namespace fl {

/// How a nondeterministic automaton turns its computation paths into a
/// verdict: some path accepts, every path accepts, or an odd number of
/// accepting paths.
enum class AcceptMode { Exists, ForAll, Parity };

/// A finite-state automaton over single-scalar symbols. States are dense
/// indices; `names` carries a human-readable tag per state (constructions
/// name their states after what they denote, e.g. the subset "{1,2}").
///
/// The transition relation maps (state, symbol) to a set of successors;
/// epsilon moves are kept separately in `eps`. `deterministic` asserts that
/// there are no epsilon moves and at most one successor per (state, symbol);
/// the relation may still be partial, operations that need a total machine
/// complete it with a rejecting sink.
struct Fa {
    std::vector<std::string> names;
    std::vector<Symbol> alphabet;  // sorted, duplicate-free
    int start = 0;
    std::vector<bool> accepting;
    std::vector<std::map<Symbol, std::set<int>>> delta;
    std::vector<std::set<int>> eps;
    bool deterministic = false;

    int size() const { return static_cast<int>(names.size()); }

    int add_state(std::string name, bool accept = false);
    void add_symbol(Symbol a);
    void add_alphabet(std::u32string_view symbols);
    void add_edge(int from, Symbol a, int to);
    void add_eps(int from, int to);

    bool has_symbol(Symbol a) const;
    bool has_eps() const;

    /// True when deterministic and every (state, symbol) has a successor.
    bool total() const;

    /// Checks all structural invariants; throws ValidationError.
    void validate() const;

    /// Epsilon closure of a set of states.
    std::set<int> eclose(std::set<int> src) const;

    /// Deterministic single step; -1 when undefined.
    int dstep(int s, Symbol a) const;

    /// Extended transition function: state reached from `s` by reading `w`,
    /// or -1 if the run dies. Requires a deterministic machine.
    int dwalk(int s, const Word& w) const;

    /// States reachable from the start by any edges.
    std::set<int> reachable() const;
};

/// Returns a machine with the same language in which every (state, symbol)
/// has a successor, adding one rejecting sink state if needed.
/// Input must be deterministic.
Fa totalize(const Fa& m);

/// Runs a deterministic automaton. Throws InputError on symbols outside the
/// alphabet, StructureError if `m` is not deterministic.
bool dfa_run(const Fa& m, const Word& w);

/// Runs a (possibly nondeterministic) automaton under the given acceptance
/// mode. ForAll counts a path that dies without consuming the input as
/// rejecting. Parity requires the reachable part to be free of epsilon
/// cycles (the path count is undefined otherwise).
bool nfa_run(const Fa& m, const Word& w, AcceptMode mode = AcceptMode::Exists);

/// Subset construction (Exists), subset-with-dead-sink (ForAll), or mod-2
/// path counting over indicator vectors (Parity; requires no epsilon moves).
/// Only states reachable from the start are materialized; the result is
/// deterministic and total.
Fa determinize(const Fa& m, AcceptMode mode = AcceptMode::Exists);

/// Removes epsilon moves, preserving the Exists-mode language.
Fa eliminate_epsilon(const Fa& m);

}  // namespace fl
