#pragma once

#include <string>
#include <vector>

#include "fl/pda.hpp"
#include "fl/text.hpp"

namespace fl {

/// A real-time k-counter automaton. The counters hold nonnegative integers
/// observable only through their zero pattern; transitions are keyed on
/// (state, zero pattern, symbol) and update each counter by inc/dec/none.
/// There are no epsilon moves at all, and decrements are representable only
/// under patterns that declare the counter nonzero, so no run can drive a
/// counter negative.
struct CounterMachine {
    enum class CounterOp { None, Inc, Dec };

    struct Trans {
        int state = 0;
        unsigned pattern = 0;  // bit i set = counter i is nonzero
        Symbol sym = 0;
        int to = 0;
        std::vector<CounterOp> ops;  // one per counter
    };
    struct AcceptPair {
        int state = 0;
        unsigned pattern = 0;
    };

    std::vector<std::string> states;
    std::vector<Symbol> alphabet;  // sorted, duplicate-free
    int counters = 1;
    int start = 0;
    bool deterministic = false;
    std::vector<AcceptPair> accept;
    std::vector<Trans> transitions;

    int n_states() const { return static_cast<int>(states.size()); }
    int add_state(std::string name);
    void add_symbol(Symbol a);
    bool has_symbol(Symbol a) const;

    /// Deterministic machines must have exactly one transition per
    /// (state, pattern, symbol); decrements must be gated on nonzero.
    void validate() const;

    bool is_accepting(int state, unsigned pattern) const;
};

struct CounterConfiguration {
    int state = 0;
    std::vector<long> values;  // all >= 0
};

/// Parses / prints zero patterns like "zn" (counter 0 zero, counter 1
/// nonzero).
unsigned parse_zero_pattern(const std::string& s, int counters);
std::string format_zero_pattern(unsigned pattern, int counters);

/// Runs the machine in real time: one transition per symbol. Deterministic
/// machines follow their single trajectory; nondeterministic ones accept
/// when some path does. Counter values never exceed the word length, so the
/// search space is finite.
bool ca_run(const CounterMachine& m, const Word& w);

/// Exact number of configurations reachable within `steps` transitions over
/// all inputs. Bounded above by |S| * (steps+1)^k.
std::size_t count_reachable(const CounterMachine& m, int steps,
                            std::size_t budget = 4'000'000);

/// Compiles a deterministic one-counter machine to a DPDA that keeps the
/// counter value as a stack of identical markers.
Pda counter_to_dpda(const CounterMachine& m);

}  // namespace fl
