#include "fl/counter.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <tuple>

#include "fl/errors.hpp"

namespace fl {

int CounterMachine::add_state(std::string name) {
    states.push_back(std::move(name));
    return n_states() - 1;
}

void CounterMachine::add_symbol(Symbol a) {
    auto it = std::lower_bound(alphabet.begin(), alphabet.end(), a);
    if (it == alphabet.end() || *it != a) alphabet.insert(it, a);
}

bool CounterMachine::has_symbol(Symbol a) const {
    return std::binary_search(alphabet.begin(), alphabet.end(), a);
}

void CounterMachine::validate() const {
    if (states.empty()) throw ValidationError("counter machine has no states");
    if (counters < 1 || counters > 16) throw ValidationError("counter count out of range");
    if (start < 0 || start >= n_states()) throw ValidationError("start state out of range");
    unsigned pattern_limit = 1u << counters;
    for (const AcceptPair& a : accept) {
        if (a.state < 0 || a.state >= n_states())
            throw ValidationError("acceptance pair names an unknown state");
        if (a.pattern >= pattern_limit) throw ValidationError("acceptance pattern out of range");
    }
    std::map<std::tuple<int, unsigned, Symbol>, int> fanout;
    for (const Trans& t : transitions) {
        if (t.state < 0 || t.state >= n_states() || t.to < 0 || t.to >= n_states())
            throw ValidationError("transition endpoint out of range");
        if (t.pattern >= pattern_limit) throw ValidationError("transition pattern out of range");
        if (!has_symbol(t.sym)) throw ValidationError("transition symbol outside the alphabet");
        if (static_cast<int>(t.ops.size()) != counters)
            throw ValidationError("transition must carry one action per counter");
        for (int i = 0; i < counters; ++i)
            if (t.ops[i] == CounterOp::Dec && !((t.pattern >> i) & 1))
                throw ValidationError(
                    "decrement under a zero pattern: counters cannot go negative");
        fanout[{t.state, t.pattern, t.sym}]++;
    }
    if (deterministic) {
        for (int s = 0; s < n_states(); ++s)
            for (unsigned pat = 0; pat < pattern_limit; ++pat)
                for (Symbol a : alphabet)
                    if (fanout[{s, pat, a}] != 1)
                        throw ValidationError(
                            "deterministic machine needs exactly one transition per "
                            "(state, pattern, symbol)");
    }
}

bool CounterMachine::is_accepting(int state, unsigned pattern) const {
    for (const AcceptPair& a : accept)
        if (a.state == state && a.pattern == pattern) return true;
    return false;
}

unsigned parse_zero_pattern(const std::string& s, int counters) {
    if (static_cast<int>(s.size()) != counters)
        throw InputError("zero pattern must have one letter per counter");
    unsigned pattern = 0;
    for (int i = 0; i < counters; ++i) {
        if (s[i] == 'n')
            pattern |= 1u << i;
        else if (s[i] != 'z')
            throw InputError("zero pattern letters must be 'z' or 'n'");
    }
    return pattern;
}

std::string format_zero_pattern(unsigned pattern, int counters) {
    std::string s;
    for (int i = 0; i < counters; ++i) s += ((pattern >> i) & 1) ? 'n' : 'z';
    return s;
}

namespace {

unsigned pattern_of(const std::vector<long>& values) {
    unsigned p = 0;
    for (std::size_t i = 0; i < values.size(); ++i)
        if (values[i] != 0) p |= 1u << i;
    return p;
}

std::vector<long> apply_ops(const std::vector<long>& values,
                            const std::vector<CounterMachine::CounterOp>& ops) {
    std::vector<long> out = values;
    for (std::size_t i = 0; i < ops.size(); ++i) {
        if (ops[i] == CounterMachine::CounterOp::Inc) ++out[i];
        if (ops[i] == CounterMachine::CounterOp::Dec) --out[i];
    }
    return out;
}

}  // namespace

bool ca_run(const CounterMachine& m, const Word& w) {
    m.validate();
    for (Symbol a : w)
        if (!m.has_symbol(a)) throw InputError("symbol outside the machine's alphabet");

    using Config = std::pair<int, std::vector<long>>;
    std::set<Config> current;
    current.insert({m.start, std::vector<long>(m.counters, 0)});
    for (Symbol a : w) {
        std::set<Config> next;
        for (const auto& [state, values] : current) {
            unsigned pat = pattern_of(values);
            for (const CounterMachine::Trans& t : m.transitions) {
                if (t.state != state || t.pattern != pat || t.sym != a) continue;
                next.insert({t.to, apply_ops(values, t.ops)});
            }
        }
        current = std::move(next);
        if (current.empty()) return false;
    }
    for (const auto& [state, values] : current)
        if (m.is_accepting(state, pattern_of(values))) return true;
    return false;
}

std::size_t count_reachable(const CounterMachine& m, int steps, std::size_t budget) {
    m.validate();
    if (steps < 0) throw InputError("step count must be nonnegative");
    using Config = std::pair<int, std::vector<long>>;
    std::set<Config> seen;
    std::set<Config> frontier;
    Config init{m.start, std::vector<long>(m.counters, 0)};
    seen.insert(init);
    frontier.insert(init);
    for (int step = 0; step < steps && !frontier.empty(); ++step) {
        std::set<Config> next;
        for (const auto& [state, values] : frontier) {
            unsigned pat = pattern_of(values);
            for (const CounterMachine::Trans& t : m.transitions) {
                if (t.state != state || t.pattern != pat) continue;
                Config c{t.to, apply_ops(values, t.ops)};
                if (seen.insert(c).second) {
                    if (seen.size() > budget)
                        throw ResourceError("count_reachable exceeded its budget");
                    next.insert(std::move(c));
                }
            }
        }
        frontier = std::move(next);
    }
    return seen.size();
}

Pda counter_to_dpda(const CounterMachine& m) {
    m.validate();
    if (m.counters != 1) throw InputError("counter_to_dpda handles one-counter machines");
    if (!m.deterministic) throw InputError("counter_to_dpda requires a deterministic machine");

    Pda p;
    p.deterministic = true;
    p.states = m.states;
    p.start = m.start;
    for (Symbol a : m.alphabet) p.add_input_symbol(a);
    int marker = p.add_stack_symbol("I");

    // counter value n <-> a stack of n markers
    for (const CounterMachine::Trans& t : m.transitions) {
        Pda::Trans nt;
        nt.state = t.state;
        nt.top = (t.pattern & 1) ? marker : Pda::kEmptyTop;
        nt.eps = false;
        nt.sym = t.sym;
        nt.to = t.to;
        switch (t.ops[0]) {
            case CounterMachine::CounterOp::Inc:
                nt.action = {Pda::Action::Kind::Push, {marker}};
                break;
            case CounterMachine::CounterOp::Dec:
                nt.action = {Pda::Action::Kind::Pop, {}};
                break;
            case CounterMachine::CounterOp::None:
                nt.action = {Pda::Action::Kind::None, {}};
                break;
        }
        p.transitions.push_back(nt);
    }
    for (const CounterMachine::AcceptPair& a : m.accept)
        p.accept.push_back({a.state, (a.pattern & 1) ? marker : Pda::kEmptyTop});
    p.validate();
    return p;
}

}  // namespace fl
