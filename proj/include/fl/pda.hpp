#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fl/fa.hpp"
#include "fl/grammar.hpp"

namespace fl {

/// A push-down automaton. Transitions are keyed on (control state,
/// stack-top-or-empty, input-symbol-or-epsilon) and perform one stack
/// action. `replace` pops the top and pushes a string — the proof-friendly
/// generalized move; `compile_replaces` lowers it to strict single actions.
/// Acceptance is a set of (state, stack-top-or-empty) pairs.
struct Pda {
    /// Stack-top pattern meaning "the stack is empty".
    static constexpr int kEmptyTop = -1;

    struct Action {
        enum class Kind { None, Push, Pop, Replace };
        Kind kind = Kind::None;
        std::vector<int> payload;  // Push: one symbol; Replace: pushed left
                                   // to right, so the last element ends on top
    };
    struct Trans {
        int state = 0;
        int top = kEmptyTop;  // stack symbol index, or kEmptyTop
        bool eps = false;
        Symbol sym = 0;  // ignored when eps
        int to = 0;
        Action action;
    };
    struct AcceptPair {
        int state = 0;
        int top = kEmptyTop;
    };

    std::vector<std::string> states;
    std::vector<Symbol> input_alphabet;  // sorted, duplicate-free
    std::vector<std::string> stack_alphabet;
    int start = 0;
    bool deterministic = false;
    std::vector<AcceptPair> accept;
    std::vector<Trans> transitions;

    int n_states() const { return static_cast<int>(states.size()); }
    int add_state(std::string name);
    int add_stack_symbol(std::string name);
    int find_state(const std::string& name) const;
    int find_stack_symbol(const std::string& name) const;
    void add_input_symbol(Symbol a);
    bool has_input_symbol(Symbol a) const;

    /// Structural checks, including the determinism guard: at most one
    /// applicable transition per (state, top, lookahead), with epsilon and
    /// symbol moves never coexisting on the same (state, top).
    void validate() const;

    bool is_accepting(int state, int top) const;
};

struct PdaConfiguration {
    int state = 0;
    std::vector<int> stack;  // top at the end
    std::size_t input_position = 0;
};

struct SearchBudget {
    std::size_t max_stack = 64;
    std::size_t max_configs = 1'000'000;
};

/// Deterministic run: consume the word, allowing interleaved epsilon moves
/// (capped; exceeding the cap is a DivergenceError), then accept if any
/// configuration after the input — including through trailing epsilon
/// moves — matches the acceptance set.
bool dpda_run(const Pda& p, const Word& w, std::size_t eps_cap = 100000);

/// Same, also reporting the stack height after each consumed input symbol.
bool dpda_run_trace(const Pda& p, const Word& w, std::vector<std::size_t>& heights,
                    std::size_t eps_cap = 100000);

/// Nondeterministic run: breadth-first search over configurations with
/// deduplication. True iff some configuration with the input consumed is
/// accepting. Configurations whose stack would exceed budget.max_stack are
/// pruned; if pruning happened (or max_configs was hit) and no accepting
/// configuration was found, the verdict is unknown — a ResourceError —
/// rather than false.
bool npda_run(const Pda& p, const Word& w, const SearchBudget& budget = {});

/// Rewrites replace-actions into chains of single push moves through fresh
/// states, leaving only None/Push/Pop actions.
Pda compile_replaces(const Pda& p);

/// The parse-tree-growing NPDA: the stack holds the active frontier
/// (leftmost symbol on top); a variable on top expands by a rule via an
/// epsilon move, a terminal on top is matched against the input; accepts on
/// empty stack.
Pda cfg_to_npda(const Grammar& g);

/// The path grammar of the NPDA: variables [s1,t,s2] derive the input
/// consumed by a computation from s1 to s2 that starts and ends with the
/// same stack (top t), never dipping below it. Acceptance is normalized to
/// a single final state on empty stack first.
Grammar npda_to_cfg(const Pda& p);

/// Runs the automaton and a total DFA in parallel; acceptance needs both.
Pda pda_intersect_regular(const Pda& p, const Fa& m);

}  // namespace fl
