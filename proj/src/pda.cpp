#include "fl/pda.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "fl/errors.hpp"

namespace fl {

int Pda::add_state(std::string name) {
    states.push_back(std::move(name));
    return n_states() - 1;
}

int Pda::add_stack_symbol(std::string name) {
    stack_alphabet.push_back(std::move(name));
    return static_cast<int>(stack_alphabet.size()) - 1;
}

int Pda::find_state(const std::string& name) const {
    for (int i = 0; i < n_states(); ++i)
        if (states[i] == name) return i;
    return -1;
}

int Pda::find_stack_symbol(const std::string& name) const {
    for (int i = 0; i < static_cast<int>(stack_alphabet.size()); ++i)
        if (stack_alphabet[i] == name) return i;
    return -1;
}

void Pda::add_input_symbol(Symbol a) {
    auto it = std::lower_bound(input_alphabet.begin(), input_alphabet.end(), a);
    if (it == input_alphabet.end() || *it != a) input_alphabet.insert(it, a);
}

bool Pda::has_input_symbol(Symbol a) const {
    return std::binary_search(input_alphabet.begin(), input_alphabet.end(), a);
}

void Pda::validate() const {
    int n = n_states(), ng = static_cast<int>(stack_alphabet.size());
    if (n == 0) throw ValidationError("PDA has no states");
    if (start < 0 || start >= n) throw ValidationError("PDA start state out of range");
    for (const AcceptPair& a : accept) {
        if (a.state < 0 || a.state >= n) throw ValidationError("acceptance pair names an unknown state");
        if (a.top < kEmptyTop || a.top >= ng)
            throw ValidationError("acceptance pair names an unknown stack symbol");
    }
    for (const Trans& t : transitions) {
        if (t.state < 0 || t.state >= n || t.to < 0 || t.to >= n)
            throw ValidationError("transition endpoint out of range");
        if (t.top < kEmptyTop || t.top >= ng)
            throw ValidationError("transition stack pattern out of range");
        if (!t.eps && !has_input_symbol(t.sym))
            throw ValidationError("transition symbol outside the input alphabet");
        switch (t.action.kind) {
            case Action::Kind::Push:
                if (t.action.payload.size() != 1)
                    throw ValidationError("push action must carry exactly one symbol");
                break;
            case Action::Kind::Pop:
            case Action::Kind::Replace:
                if (t.top == kEmptyTop)
                    throw ValidationError("pop/replace requires a nonempty stack pattern");
                break;
            case Action::Kind::None: break;
        }
        for (int g : t.action.payload)
            if (g < 0 || g >= ng) throw ValidationError("action pushes an unknown stack symbol");
    }
    if (deterministic) {
        // at most one applicable move per (state, top, next symbol), and
        // epsilon moves never share a (state, top) with symbol moves
        std::set<std::pair<int, int>> eps_keys;
        std::set<std::tuple<int, int, Symbol>> sym_keys;
        for (const Trans& t : transitions) {
            if (t.eps) {
                if (!eps_keys.insert({t.state, t.top}).second)
                    throw ValidationError("two epsilon moves from one (state, stack-top)");
            } else if (!sym_keys.insert({t.state, t.top, t.sym}).second) {
                throw ValidationError("two moves for one (state, stack-top, symbol)");
            }
        }
        for (const auto& [s, g, a] : sym_keys)
            if (eps_keys.count({s, g}))
                throw ValidationError(
                    "epsilon and symbol moves coexist on one (state, stack-top)");
    }
}

bool Pda::is_accepting(int state, int top) const {
    for (const AcceptPair& a : accept)
        if (a.state == state && a.top == top) return true;
    return false;
}

namespace {

int top_of(const std::vector<int>& stack) {
    return stack.empty() ? Pda::kEmptyTop : stack.back();
}

void apply_action(const Pda::Action& act, std::vector<int>& stack) {
    switch (act.kind) {
        case Pda::Action::Kind::None: break;
        case Pda::Action::Kind::Push: stack.push_back(act.payload[0]); break;
        case Pda::Action::Kind::Pop: stack.pop_back(); break;
        case Pda::Action::Kind::Replace:
            stack.pop_back();
            stack.insert(stack.end(), act.payload.begin(), act.payload.end());
            break;
    }
}

// The unique applicable transition of a validated DPDA, preferring the
// symbol move when input remains.
const Pda::Trans* dpda_move(const Pda& p, int state, int top, const Symbol* next) {
    const Pda::Trans* eps_move = nullptr;
    for (const Pda::Trans& t : p.transitions) {
        if (t.state != state || t.top != top) continue;
        if (t.eps)
            eps_move = &t;
        else if (next && t.sym == *next)
            return &t;
    }
    return eps_move;
}

bool dpda_run_impl(const Pda& p, const Word& w, std::vector<std::size_t>* heights,
                   std::size_t eps_cap) {
    p.validate();
    if (!p.deterministic) throw StructureError("dpda_run requires a deterministic PDA");
    for (Symbol a : w)
        if (!p.has_input_symbol(a)) throw InputError("symbol outside the PDA's input alphabet");

    int state = p.start;
    std::vector<int> stack;
    std::size_t pos = 0, eps_used = 0;
    while (pos < w.size()) {
        const Pda::Trans* t = dpda_move(p, state, top_of(stack), &w[pos]);
        if (!t) return false;  // stuck with input remaining
        if (t->eps && ++eps_used > eps_cap)
            throw DivergenceError("epsilon-move cap exceeded while consuming input");
        state = t->to;
        apply_action(t->action, stack);
        if (!t->eps) {
            ++pos;
            if (heights) heights->push_back(stack.size());
        }
    }
    // input consumed: accept if any configuration along the trailing
    // epsilon chain matches the acceptance set
    std::size_t trailing = 0;
    for (;;) {
        if (p.is_accepting(state, top_of(stack))) return true;
        const Pda::Trans* t = dpda_move(p, state, top_of(stack), nullptr);
        if (!t) return false;
        if (++trailing > eps_cap)
            throw DivergenceError("epsilon-move cap exceeded after consuming input");
        state = t->to;
        apply_action(t->action, stack);
    }
}

}  // namespace

bool dpda_run(const Pda& p, const Word& w, std::size_t eps_cap) {
    return dpda_run_impl(p, w, nullptr, eps_cap);
}

bool dpda_run_trace(const Pda& p, const Word& w, std::vector<std::size_t>& heights,
                    std::size_t eps_cap) {
    heights.clear();
    return dpda_run_impl(p, w, &heights, eps_cap);
}

bool npda_run(const Pda& p, const Word& w, const SearchBudget& budget) {
    p.validate();
    for (Symbol a : w)
        if (!p.has_input_symbol(a)) throw InputError("symbol outside the PDA's input alphabet");

    using Config = std::tuple<int, std::vector<int>, std::size_t>;
    std::set<Config> seen;
    std::deque<Config> queue;
    bool pruned = false;
    auto enqueue = [&](int state, std::vector<int> stack, std::size_t pos) {
        if (stack.size() > budget.max_stack) {
            pruned = true;
            return;
        }
        Config c{state, std::move(stack), pos};
        if (seen.count(c)) return;
        if (seen.size() >= budget.max_configs) {
            pruned = true;
            return;
        }
        seen.insert(c);
        queue.push_back(std::move(c));
    };
    enqueue(p.start, {}, 0);
    while (!queue.empty()) {
        auto [state, stack, pos] = queue.front();
        queue.pop_front();
        if (pos == w.size() && p.is_accepting(state, top_of(stack))) return true;
        int top = top_of(stack);
        for (const Pda::Trans& t : p.transitions) {
            if (t.state != state || t.top != top) continue;
            if (!t.eps && (pos >= w.size() || t.sym != w[pos])) continue;
            std::vector<int> next = stack;
            apply_action(t.action, next);
            enqueue(t.to, std::move(next), t.eps ? pos : pos + 1);
        }
    }
    if (pruned)
        throw ResourceError("npda_run budget exhausted before reaching a verdict");
    return false;
}

Pda compile_replaces(const Pda& p) {
    Pda r = p;
    r.transitions.clear();
    int serial = 0;
    bool lowered = false;
    for (const Pda::Trans& t : p.transitions) {
        if (t.action.kind != Pda::Action::Kind::Replace) {
            r.transitions.push_back(t);
            continue;
        }
        lowered = true;
        if (t.action.payload.empty()) {
            Pda::Trans pop = t;
            pop.action = {Pda::Action::Kind::Pop, {}};
            r.transitions.push_back(pop);
            continue;
        }
        // pop, then push the payload through a chain of fresh states; the
        // first push cannot see a statically known top, so key it on every
        // possible one
        int prev = r.add_state(p.states[t.state] + "~rep" + std::to_string(serial++));
        Pda::Trans pop = t;
        pop.to = prev;
        pop.action = {Pda::Action::Kind::Pop, {}};
        r.transitions.push_back(pop);
        for (std::size_t i = 0; i < t.action.payload.size(); ++i) {
            bool last = i + 1 == t.action.payload.size();
            int next = last ? t.to
                            : r.add_state(p.states[t.state] + "~rep" + std::to_string(serial++));
            Pda::Action push{Pda::Action::Kind::Push, {t.action.payload[i]}};
            if (i == 0) {
                for (int g = Pda::kEmptyTop; g < static_cast<int>(r.stack_alphabet.size()); ++g)
                    r.transitions.push_back({prev, g, true, 0, next, push});
            } else {
                r.transitions.push_back(
                    {prev, t.action.payload[i - 1], true, 0, next, push});
            }
            prev = next;
        }
    }
    if (lowered) r.deterministic = false;  // the chains introduce epsilon moves
    return r;
}

Pda cfg_to_npda(const Grammar& g) {
    if (!g.single_variable_lhs() || g.cls == GrammarClass::Noncontracting)
        throw StructureError("cfg_to_npda requires a context-free grammar");
    Pda p;
    p.deterministic = false;
    int q0 = p.add_state("init");
    int loop = p.add_state("loop");
    p.start = q0;
    for (Symbol t : g.terminals) p.add_input_symbol(t);

    std::vector<int> var_sym(g.n_vars());
    for (int v = 0; v < g.n_vars(); ++v) var_sym[v] = p.add_stack_symbol(g.variables[v]);
    std::map<Symbol, int> term_sym;
    for (Symbol t : g.terminals) term_sym[t] = p.add_stack_symbol(utf8_encode(t));

    // push the start symbol, then grow the parse tree on the stack
    p.transitions.push_back({q0, Pda::kEmptyTop, true, 0, loop,
                             {Pda::Action::Kind::Push, {var_sym[g.start]}}});
    for (const Rule& r : g.rules) {
        std::vector<int> payload;
        for (auto it = r.rhs.rbegin(); it != r.rhs.rend(); ++it)
            payload.push_back(it->is_var() ? var_sym[it->var] : term_sym[it->term]);
        p.transitions.push_back({loop, var_sym[r.lhs[0].var], true, 0, loop,
                                 {Pda::Action::Kind::Replace, std::move(payload)}});
    }
    for (Symbol t : g.terminals)
        p.transitions.push_back({loop, term_sym[t], false, t, loop, {Pda::Action::Kind::Pop, {}}});

    p.accept.push_back({loop, Pda::kEmptyTop});
    return p;
}

namespace {

// Adds a drain that pops the stack and a single final state accepting on
// empty stack, reached by epsilon moves from every accepting pair.
Pda normalize_empty_stack(const Pda& p_in) {
    Pda p = p_in;
    int drain = p.add_state("drain");
    int fin = p.add_state("final");
    for (const Pda::AcceptPair& a : p_in.accept) {
        if (a.top == Pda::kEmptyTop)
            p.transitions.push_back({a.state, Pda::kEmptyTop, true, 0, fin,
                                     {Pda::Action::Kind::None, {}}});
        else
            p.transitions.push_back({a.state, a.top, true, 0, drain, {Pda::Action::Kind::None, {}}});
    }
    for (int g = 0; g < static_cast<int>(p.stack_alphabet.size()); ++g)
        p.transitions.push_back({drain, g, true, 0, drain, {Pda::Action::Kind::Pop, {}}});
    p.transitions.push_back({drain, Pda::kEmptyTop, true, 0, fin, {Pda::Action::Kind::None, {}}});
    p.accept.clear();
    p.accept.push_back({fin, Pda::kEmptyTop});
    p.deterministic = false;
    return p;
}

}  // namespace

Grammar npda_to_cfg(const Pda& p_in) {
    p_in.validate();
    Pda p = normalize_empty_stack(compile_replaces(p_in));
    int n = p.n_states();
    int ng = static_cast<int>(p.stack_alphabet.size());
    int final_state = p.accept[0].state;

    Grammar g;
    g.cls = GrammarClass::ContextFree;
    for (Symbol a : p.input_alphabet) g.add_terminal(a);

    // variable [s1, t, s2]: from s1 to s2 with identical stack (top t),
    // never popping below it; t ranges over stack symbols and "empty"
    auto top_name = [&](int t) {
        return t == Pda::kEmptyTop ? std::string("empty") : p.stack_alphabet[t];
    };
    std::vector<int> var((std::size_t)n * (ng + 1) * n);
    for (int s1 = 0; s1 < n; ++s1)
        for (int t = Pda::kEmptyTop; t < ng; ++t)
            for (int s2 = 0; s2 < n; ++s2)
                var[((std::size_t)s1 * (ng + 1) + (t + 1)) * n + s2] = g.add_variable(
                    "[" + p.states[s1] + "," + top_name(t) + "," + p.states[s2] + "]");
    auto v = [&](int s1, int t, int s2) {
        return GSym::variable(var[((std::size_t)s1 * (ng + 1) + (t + 1)) * n + s2]);
    };

    int start_var = g.add_variable("S");
    g.start = start_var;
    g.rules.push_back({{GSym::variable(start_var)}, {v(p.start, Pda::kEmptyTop, final_state)}});

    for (int s = 0; s < n; ++s)
        for (int t = Pda::kEmptyTop; t < ng; ++t)
            g.rules.push_back({{v(s, t, s)}, {}});

    auto read_syms = [&](const Pda::Trans& t) {
        std::vector<GSym> out;
        if (!t.eps) out.push_back(GSym::terminal(t.sym));
        return out;
    };

    for (const Pda::Trans& a : p.transitions) {
        if (a.action.kind == Pda::Action::Kind::None) {
            // [s1,t,s2] -> a [s3,t,s2]
            for (int s2 = 0; s2 < n; ++s2) {
                std::vector<GSym> rhs = read_syms(a);
                rhs.push_back(v(a.to, a.top, s2));
                g.rules.push_back({{v(a.state, a.top, s2)}, std::move(rhs)});
            }
        } else if (a.action.kind == Pda::Action::Kind::Push) {
            int gamma = a.action.payload[0];
            for (const Pda::Trans& b : p.transitions) {
                if (b.action.kind != Pda::Action::Kind::Pop || b.top != gamma) continue;
                // [s1,t,s2] -> a [s3,gamma,s4] b [s5,t,s2]
                for (int s2 = 0; s2 < n; ++s2) {
                    std::vector<GSym> rhs = read_syms(a);
                    rhs.push_back(v(a.to, gamma, b.state));
                    for (const GSym& s : read_syms(b)) rhs.push_back(s);
                    rhs.push_back(v(b.to, a.top, s2));
                    g.rules.push_back({{v(a.state, a.top, s2)}, std::move(rhs)});
                }
            }
        }
        // pop transitions are consumed by the push bracketing above
    }
    return remove_useless(g);
}

Pda pda_intersect_regular(const Pda& p, const Fa& m_in) {
    p.validate();
    if (!m_in.deterministic)
        throw StructureError("pda_intersect_regular requires a deterministic automaton");
    Fa m = totalize(m_in);
    if (p.input_alphabet != m.alphabet)
        throw InputError("PDA and automaton must share the input alphabet");

    Pda r;
    r.input_alphabet = p.input_alphabet;
    r.stack_alphabet = p.stack_alphabet;
    r.deterministic = p.deterministic;
    auto id = [&](int sp, int sm) { return sp * m.size() + sm; };
    for (int sp = 0; sp < p.n_states(); ++sp)
        for (int sm = 0; sm < m.size(); ++sm)
            r.add_state("(" + p.states[sp] + "," + m.names[sm] + ")");
    r.start = id(p.start, m.start);
    for (const Pda::Trans& t : p.transitions) {
        for (int sm = 0; sm < m.size(); ++sm) {
            Pda::Trans nt = t;
            nt.state = id(t.state, sm);
            nt.to = id(t.to, t.eps ? sm : m.dstep(sm, t.sym));
            r.transitions.push_back(nt);
        }
    }
    for (const Pda::AcceptPair& a : p.accept)
        for (int sm = 0; sm < m.size(); ++sm)
            if (m.accepting[sm]) r.accept.push_back({id(a.state, sm), a.top});
    return r;
}

}  // namespace fl
