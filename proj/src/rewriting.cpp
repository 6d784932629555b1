#include "fl/rewriting.hpp"

#include <algorithm>
#include <deque>

#include "fl/errors.hpp"

namespace fl {

namespace {

void require_noncontracting(const Grammar& g) {
    if (g.cls != GrammarClass::Noncontracting)
        throw StructureError("this operation requires the Noncontracting class");
    g.validate();
}

bool matches_at(const std::vector<GSym>& form, const std::vector<GSym>& lhs, std::size_t at) {
    if (at + lhs.size() > form.size()) return false;
    for (std::size_t i = 0; i < lhs.size(); ++i)
        if (!(form[at + i] == lhs[i])) return false;
    return true;
}

// Reachable sentential forms of length <= maxlen, the start form included.
std::set<std::vector<GSym>> bounded_forms(const Grammar& g, int maxlen, std::size_t budget) {
    std::set<std::vector<GSym>> seen;
    std::deque<std::vector<GSym>> queue;
    std::vector<GSym> init = {GSym::variable(g.start)};
    if (maxlen < 1) return seen;
    seen.insert(init);
    queue.push_back(init);
    while (!queue.empty()) {
        std::vector<GSym> form = queue.front();
        queue.pop_front();
        for (const Rule& r : g.rules) {
            if (r.rhs.empty()) continue;  // the sanctioned S -> epsilon only derives epsilon
            if (form.size() - r.lhs.size() + r.rhs.size() > static_cast<std::size_t>(maxlen))
                continue;
            for (std::size_t at = 0; at + r.lhs.size() <= form.size(); ++at) {
                if (!matches_at(form, r.lhs, at)) continue;
                std::vector<GSym> next;
                next.reserve(form.size() - r.lhs.size() + r.rhs.size());
                next.insert(next.end(), form.begin(), form.begin() + at);
                next.insert(next.end(), r.rhs.begin(), r.rhs.end());
                next.insert(next.end(), form.begin() + at + r.lhs.size(), form.end());
                if (seen.count(next)) continue;
                if (seen.size() >= budget)
                    throw ResourceError("sentential-form search exceeded its budget");
                seen.insert(next);
                queue.push_back(std::move(next));
            }
        }
    }
    return seen;
}

bool all_terminal(const std::vector<GSym>& form) {
    for (const GSym& s : form)
        if (s.is_var()) return false;
    return true;
}

Word to_word(const std::vector<GSym>& form) {
    Word w;
    for (const GSym& s : form) w.push_back(s.term);
    return w;
}

bool has_epsilon_rule(const Grammar& g) {
    for (const Rule& r : g.rules)
        if (r.rhs.empty()) return true;
    return false;
}

}  // namespace

bool csg_member(const Grammar& g, const Word& w, std::size_t budget) {
    require_noncontracting(g);
    for (Symbol a : w)
        if (!g.has_terminal(a)) return false;
    if (w.empty()) return has_epsilon_rule(g);
    std::vector<GSym> target;
    for (Symbol a : w) target.push_back(GSym::terminal(a));
    auto forms = bounded_forms(g, static_cast<int>(w.size()), budget);
    return forms.count(target) != 0;
}

std::set<Word> csg_words(const Grammar& g, int maxlen, std::size_t budget) {
    require_noncontracting(g);
    std::set<Word> words;
    if (has_epsilon_rule(g)) words.insert(Word());
    for (const auto& form : bounded_forms(g, maxlen, budget))
        if (all_terminal(form)) words.insert(to_word(form));
    return words;
}

int TuringMachine::add_state(std::string name) {
    states.push_back(std::move(name));
    return n_states() - 1;
}

void TuringMachine::add_tape_symbol(Symbol a) {
    auto it = std::lower_bound(tape_alphabet.begin(), tape_alphabet.end(), a);
    if (it == tape_alphabet.end() || *it != a) tape_alphabet.insert(it, a);
}

bool TuringMachine::has_tape_symbol(Symbol a) const {
    return std::binary_search(tape_alphabet.begin(), tape_alphabet.end(), a);
}

bool TuringMachine::has_input_symbol(Symbol a) const {
    return std::find(input_alphabet.begin(), input_alphabet.end(), a) != input_alphabet.end();
}

void TuringMachine::set_transition(int state, Symbol read, Symbol write, int next, int move) {
    transitions[{state, read}] = {write, next, move};
}

void TuringMachine::validate() const {
    if (states.empty()) throw ValidationError("Turing machine has no states");
    if (start < 0 || start >= n_states()) throw ValidationError("start state out of range");
    if (accept < 0 || accept >= n_states()) throw ValidationError("accept state out of range");
    if (!has_tape_symbol(blank)) throw ValidationError("blank symbol missing from tape alphabet");
    for (Symbol a : input_alphabet) {
        if (!has_tape_symbol(a)) throw ValidationError("input symbol missing from tape alphabet");
        if (a == blank) throw ValidationError("the blank cannot be an input symbol");
    }
    for (const auto& [key, step] : transitions) {
        if (key.state < 0 || key.state >= n_states() || step.next < 0 || step.next >= n_states())
            throw ValidationError("transition state out of range");
        if (key.state == accept) throw ValidationError("the accept state has no outgoing moves");
        if (!has_tape_symbol(key.read) || !has_tape_symbol(step.write))
            throw ValidationError("transition symbol outside the tape alphabet");
        if (step.move != 1 && step.move != -1)
            throw ValidationError("moves must be +1 or -1");
    }
}

Symbol TmConfiguration::read(Symbol blank) const {
    auto it = tape.find(head);
    return it == tape.end() ? blank : it->second;
}

void TmConfiguration::write(Symbol blank, Symbol a) {
    if (a == blank)
        tape.erase(head);
    else
        tape[head] = a;
}

TmConfiguration tm_initial(const TuringMachine& tm, const Word& w) {
    TmConfiguration c;
    c.state = tm.start;
    c.head = 0;
    c.span_end = static_cast<long>(w.size());
    for (std::size_t i = 0; i < w.size(); ++i)
        if (w[i] != tm.blank) c.tape[static_cast<long>(i)] = w[i];
    return c;
}

TmStepResult tm_step(const TuringMachine& tm, TmConfiguration& c) {
    if (c.state == tm.accept) return {true, TmVerdict::Accept};
    if (tm.lba && (c.head < 0 || c.head >= std::max<long>(c.span_end, 1)))
        return {true, TmVerdict::Reject};
    auto it = tm.transitions.find({c.state, c.read(tm.blank)});
    if (it == tm.transitions.end()) return {true, TmVerdict::Reject};
    const TuringMachine::Step& step = it->second;
    c.write(tm.blank, step.write);
    c.state = step.next;
    c.head += step.move;
    if (c.state == tm.accept) return {true, TmVerdict::Accept};
    if (tm.lba && (c.head < 0 || c.head >= std::max<long>(c.span_end, 1)))
        return {true, TmVerdict::Reject};
    return {false, TmVerdict::Accept};
}

namespace {

TmRunResult run_impl(const TuringMachine& tm, const Word& w, std::size_t step_limit,
                     std::vector<long>* trace) {
    tm.validate();
    for (Symbol a : w)
        if (!tm.has_input_symbol(a)) throw InputError("symbol outside the input alphabet");
    TmConfiguration c = tm_initial(tm, w);
    if (trace) trace->push_back(c.head);
    if (c.state == tm.accept) return {TmVerdict::Accept, 0};
    for (std::size_t i = 1; i <= step_limit; ++i) {
        TmStepResult r = tm_step(tm, c);
        if (trace) trace->push_back(c.head);
        if (r.halted) return {r.verdict, i};
    }
    return {TmVerdict::Timeout, step_limit};
}

}  // namespace

TmRunResult tm_run(const TuringMachine& tm, const Word& w, std::size_t step_limit) {
    return run_impl(tm, w, step_limit, nullptr);
}

TmRunResult tm_run_trace(const TuringMachine& tm, const Word& w, std::size_t step_limit,
                         std::vector<long>& head_positions) {
    head_positions.clear();
    return run_impl(tm, w, step_limit, &head_positions);
}

}  // namespace fl
