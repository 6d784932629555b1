#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "fl/grammar.hpp"
#include "fl/text.hpp"

namespace fl {

/// Exact membership for a noncontracting grammar: breadth-first search over
/// sentential forms of length at most |w| (forms never shrink, so the bound
/// is sound and the search is a decision procedure). The empty word is a
/// member iff the sanctioned S -> epsilon rule exists. Exceeding `budget`
/// visited forms is a ResourceError.
bool csg_member(const Grammar& g, const Word& w, std::size_t budget = 8'000'000);

/// All words of L(g) of length <= maxlen, by the same bounded search.
std::set<Word> csg_words(const Grammar& g, int maxlen, std::size_t budget = 8'000'000);

/// A deterministic Turing machine. Missing transitions halt and reject; the
/// accept state has none. In LBA mode the head must stay on the input span.
struct TuringMachine {
    struct Key {
        int state;
        Symbol read;
        auto operator<=>(const Key&) const = default;
    };
    struct Step {
        Symbol write = 0;
        int next = 0;
        int move = +1;  // +1 right, -1 left
    };

    std::vector<std::string> states;
    std::vector<Symbol> tape_alphabet;  // sorted, duplicate-free
    Symbol blank = U'_';
    std::vector<Symbol> input_alphabet;  // subset of tape_alphabet minus blank
    int start = 0;
    int accept = 0;
    bool lba = false;
    std::map<Key, Step> transitions;

    int n_states() const { return static_cast<int>(states.size()); }
    int add_state(std::string name);
    void add_tape_symbol(Symbol a);
    bool has_tape_symbol(Symbol a) const;
    bool has_input_symbol(Symbol a) const;
    void set_transition(int state, Symbol read, Symbol write, int next, int move);
    void validate() const;
};

/// A tape with finite support over the blank, a head position, and a
/// control state. `span_end` records the input length for LBA bounds.
struct TmConfiguration {
    std::map<long, Symbol> tape;
    long head = 0;
    int state = 0;
    long span_end = 0;  // input occupied [0, span_end)

    Symbol read(Symbol blank) const;
    void write(Symbol blank, Symbol a);
};

enum class TmVerdict { Accept, Reject, Timeout };

/// The standard initial configuration: input at positions 0..|w|-1, head at
/// 0, start state.
TmConfiguration tm_initial(const TuringMachine& tm, const Word& w);

struct TmStepResult {
    bool halted = false;
    TmVerdict verdict = TmVerdict::Accept;  // meaningful when halted
};

/// Applies one transition in place. Halts with Accept on reaching the accept
/// state, with Reject on a missing transition or, in LBA mode, on a move off
/// the input span.
TmStepResult tm_step(const TuringMachine& tm, TmConfiguration& c);

struct TmRunResult {
    TmVerdict verdict = TmVerdict::Timeout;
    std::size_t steps = 0;
};

/// Iterates tm_step up to `step_limit` times. Timeout is an explicit third
/// verdict, never conflated with rejection.
TmRunResult tm_run(const TuringMachine& tm, const Word& w, std::size_t step_limit);

/// Same, also reporting every head position visited (for trace checks).
TmRunResult tm_run_trace(const TuringMachine& tm, const Word& w, std::size_t step_limit,
                         std::vector<long>& head_positions);

}  // namespace fl
