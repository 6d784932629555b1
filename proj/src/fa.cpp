#include "fl/fa.hpp"

#include <algorithm>
#include <deque>

#include "fl/errors.hpp"

namespace fl {

int Fa::add_state(std::string name, bool accept) {
    names.push_back(std::move(name));
    accepting.push_back(accept);
    delta.emplace_back();
    eps.emplace_back();
    return size() - 1;
}

void Fa::add_symbol(Symbol a) {
    auto it = std::lower_bound(alphabet.begin(), alphabet.end(), a);
    if (it == alphabet.end() || *it != a) alphabet.insert(it, a);
}

void Fa::add_alphabet(std::u32string_view symbols) {
    for (Symbol a : symbols) add_symbol(a);
}

void Fa::add_edge(int from, Symbol a, int to) { delta[from][a].insert(to); }

void Fa::add_eps(int from, int to) { eps[from].insert(to); }

bool Fa::has_symbol(Symbol a) const {
    return std::binary_search(alphabet.begin(), alphabet.end(), a);
}

bool Fa::has_eps() const {
    for (const auto& e : eps)
        if (!e.empty()) return true;
    return false;
}

bool Fa::total() const {
    if (!deterministic) return false;
    for (int s = 0; s < size(); ++s)
        for (Symbol a : alphabet)
            if (dstep(s, a) < 0) return false;
    return true;
}

void Fa::validate() const {
    int n = size();
    if (n == 0) throw ValidationError("automaton has no states");
    if (static_cast<int>(accepting.size()) != n || static_cast<int>(delta.size()) != n ||
        static_cast<int>(eps.size()) != n)
        throw ValidationError("automaton state tables have inconsistent sizes");
    if (start < 0 || start >= n) throw ValidationError("start state out of range");
    if (!std::is_sorted(alphabet.begin(), alphabet.end()) ||
        std::adjacent_find(alphabet.begin(), alphabet.end()) != alphabet.end())
        throw ValidationError("alphabet must be sorted and duplicate-free");
    for (int s = 0; s < n; ++s) {
        for (const auto& [a, tos] : delta[s]) {
            if (!has_symbol(a))
                throw ValidationError("transition from '" + names[s] +
                                      "' labeled with a symbol outside the alphabet");
            if (tos.empty()) throw ValidationError("empty transition target set");
            for (int t : tos)
                if (t < 0 || t >= n)
                    throw ValidationError("transition target out of range from '" + names[s] + "'");
            if (deterministic && tos.size() > 1)
                throw ValidationError("deterministic automaton has two targets for (" + names[s] +
                                      ", " + utf8_encode(a) + ")");
        }
        for (int t : eps[s]) {
            if (t < 0 || t >= n) throw ValidationError("epsilon target out of range");
            if (deterministic)
                throw ValidationError("deterministic automaton has an epsilon transition");
        }
    }
}

std::set<int> Fa::eclose(std::set<int> src) const {
    std::deque<int> queue(src.begin(), src.end());
    while (!queue.empty()) {
        int s = queue.front();
        queue.pop_front();
        for (int t : eps[s])
            if (src.insert(t).second) queue.push_back(t);
    }
    return src;
}

int Fa::dstep(int s, Symbol a) const {
    auto it = delta[s].find(a);
    if (it == delta[s].end() || it->second.empty()) return -1;
    return *it->second.begin();
}

int Fa::dwalk(int s, const Word& w) const {
    if (!deterministic) throw StructureError("dwalk requires a deterministic automaton");
    for (Symbol a : w) {
        if (!has_symbol(a)) throw InputError("symbol outside the automaton's alphabet");
        s = dstep(s, a);
        if (s < 0) return -1;
    }
    return s;
}

std::set<int> Fa::reachable() const {
    std::set<int> seen = {start};
    std::deque<int> queue = {start};
    while (!queue.empty()) {
        int s = queue.front();
        queue.pop_front();
        for (const auto& [a, tos] : delta[s])
            for (int t : tos)
                if (seen.insert(t).second) queue.push_back(t);
        for (int t : eps[s])
            if (seen.insert(t).second) queue.push_back(t);
    }
    return seen;
}

Fa totalize(const Fa& m) {
    if (!m.deterministic) throw StructureError("totalize requires a deterministic automaton");
    if (m.total()) return m;
    Fa r = m;
    std::string name = "sink";
    while (std::find(r.names.begin(), r.names.end(), name) != r.names.end()) name += "'";
    int sink = r.add_state(name, false);
    for (int s = 0; s <= sink; ++s)
        for (Symbol a : r.alphabet)
            if (r.dstep(s, a) < 0) r.add_edge(s, a, sink);
    return r;
}

bool dfa_run(const Fa& m, const Word& w) {
    if (!m.deterministic) throw StructureError("dfa_run requires a deterministic automaton");
    int s = m.dwalk(m.start, w);
    return s >= 0 && m.accepting[s];
}

namespace {

// Union of symbol successors over a set of (already closed) states.
std::set<int> symbol_step(const Fa& m, const std::set<int>& from, Symbol a) {
    std::set<int> out;
    for (int s : from) {
        auto it = m.delta[s].find(a);
        if (it != m.delta[s].end()) out.insert(it->second.begin(), it->second.end());
    }
    return out;
}

// True when no state of the closure of {s} has a successor on `a` — every
// maximal path parked at s is doomed before consuming `a`.
bool stuck_on(const Fa& m, int s, Symbol a) {
    for (int t : m.eclose({s}))
        if (m.delta[t].count(a)) return false;
    return true;
}

bool run_exists(const Fa& m, const Word& w) {
    std::set<int> cur = m.eclose({m.start});
    for (Symbol a : w) {
        if (!m.has_symbol(a)) throw InputError("symbol outside the automaton's alphabet");
        cur = m.eclose(symbol_step(m, cur, a));
        if (cur.empty()) return false;
    }
    for (int s : cur)
        if (m.accepting[s]) return true;
    return false;
}

bool run_forall(const Fa& m, const Word& w) {
    std::set<int> cur = m.eclose({m.start});
    for (Symbol a : w) {
        if (!m.has_symbol(a)) throw InputError("symbol outside the automaton's alphabet");
        for (int s : cur)
            if (stuck_on(m, s, a)) return false;  // a dying path rejects
        cur = m.eclose(symbol_step(m, cur, a));
    }
    for (int s : cur)
        if (!m.accepting[s]) return false;
    return true;
}

// Detects an epsilon cycle among states reachable from the start.
bool has_reachable_eps_cycle(const Fa& m) {
    std::set<int> reach = m.reachable();
    std::map<int, int> color;  // 0 absent/white, 1 gray, 2 black
    for (int root : reach) {
        if (color[root]) continue;
        std::vector<std::pair<int, std::set<int>::const_iterator>> stack;
        color[root] = 1;
        stack.push_back({root, m.eps[root].begin()});
        while (!stack.empty()) {
            auto& [s, it] = stack.back();
            if (it == m.eps[s].end()) {
                color[s] = 2;
                stack.pop_back();
                continue;
            }
            int t = *it++;
            if (color[t] == 1) return true;
            if (color[t] == 0) {
                color[t] = 1;
                stack.push_back({t, m.eps[t].begin()});
            }
        }
    }
    return false;
}

// Parity of the number of epsilon paths between every pair of states,
// including the empty path. Requires an epsilon-acyclic machine.
std::vector<std::vector<char>> eps_path_parity(const Fa& m) {
    int n = m.size();
    // topological order of the epsilon DAG
    std::vector<int> indeg(n, 0);
    for (int s = 0; s < n; ++s)
        for (int t : m.eps[s]) indeg[t]++;
    std::deque<int> queue;
    for (int s = 0; s < n; ++s)
        if (indeg[s] == 0) queue.push_back(s);
    std::vector<int> topo;
    while (!queue.empty()) {
        int s = queue.front();
        queue.pop_front();
        topo.push_back(s);
        for (int t : m.eps[s])
            if (--indeg[t] == 0) queue.push_back(t);
    }
    std::vector<std::vector<char>> par(n, std::vector<char>(n, 0));
    for (auto it = topo.rbegin(); it != topo.rend(); ++it) {
        int s = *it;
        par[s][s] ^= 1;
        for (int t : m.eps[s])
            for (int u = 0; u < n; ++u) par[s][u] ^= par[t][u];
    }
    return par;
}

bool run_parity(const Fa& m, const Word& w) {
    if (has_reachable_eps_cycle(m))
        throw StructureError("parity acceptance is undefined on machines with reachable epsilon cycles");
    int n = m.size();
    auto eps_par = eps_path_parity(m);
    auto apply_eps = [&](const std::vector<char>& f) {
        std::vector<char> g(n, 0);
        for (int s = 0; s < n; ++s)
            if (f[s])
                for (int t = 0; t < n; ++t) g[t] ^= eps_par[s][t];
        return g;
    };
    std::vector<char> f(n, 0);
    f[m.start] = 1;
    f = apply_eps(f);
    for (Symbol a : w) {
        if (!m.has_symbol(a)) throw InputError("symbol outside the automaton's alphabet");
        std::vector<char> g(n, 0);
        for (int s = 0; s < n; ++s) {
            if (!f[s]) continue;
            auto it = m.delta[s].find(a);
            if (it == m.delta[s].end()) continue;
            for (int t : it->second) g[t] ^= 1;
        }
        f = apply_eps(g);
    }
    char acc = 0;
    for (int s = 0; s < n; ++s)
        if (m.accepting[s] && f[s]) acc ^= 1;
    return acc;
}

std::string subset_name(const Fa& m, const std::set<int>& states) {
    std::string name = "{";
    for (int s : states) {
        if (name.size() > 1) name += ",";
        name += m.names[s];
    }
    return name + "}";
}

Fa determinize_subsets(const Fa& m, AcceptMode mode) {
    Fa r;
    r.alphabet = m.alphabet;
    r.deterministic = true;
    std::map<std::set<int>, int> index;
    std::deque<std::set<int>> queue;

    auto accepts = [&](const std::set<int>& t) {
        if (mode == AcceptMode::Exists) {
            for (int s : t)
                if (m.accepting[s]) return true;
            return false;
        }
        // ForAll: the empty set marks that some path has died.
        if (t.empty()) return false;
        for (int s : t)
            if (!m.accepting[s]) return false;
        return true;
    };
    auto intern = [&](const std::set<int>& t) {
        auto it = index.find(t);
        if (it != index.end()) return it->second;
        int id = r.add_state(t.empty() ? "{}" : subset_name(m, t), accepts(t));
        index.emplace(t, id);
        queue.push_back(t);
        return id;
    };

    r.start = intern(m.eclose({m.start}));
    while (!queue.empty()) {
        std::set<int> cur = queue.front();
        queue.pop_front();
        int from = index[cur];
        for (Symbol a : m.alphabet) {
            std::set<int> next;
            bool died = false;
            if (mode == AcceptMode::ForAll) {
                for (int s : cur)
                    if (stuck_on(m, s, a)) {
                        died = true;
                        break;
                    }
            }
            if (!died) next = m.eclose(symbol_step(m, cur, a));
            if (mode == AcceptMode::ForAll && died) next.clear();
            r.add_edge(from, a, intern(next));
        }
    }
    return r;
}

Fa determinize_parity(const Fa& m) {
    if (m.has_eps())
        throw StructureError("parity determinization requires an epsilon-free automaton");
    Fa r;
    r.alphabet = m.alphabet;
    r.deterministic = true;
    int n = m.size();
    std::map<std::vector<char>, int> index;
    std::deque<std::vector<char>> queue;

    auto accepts = [&](const std::vector<char>& f) {
        char acc = 0;
        for (int s = 0; s < n; ++s)
            if (m.accepting[s] && f[s]) acc ^= 1;
        return acc != 0;
    };
    auto intern = [&](const std::vector<char>& f) {
        auto it = index.find(f);
        if (it != index.end()) return it->second;
        std::set<int> ones;
        for (int s = 0; s < n; ++s)
            if (f[s]) ones.insert(s);
        int id = r.add_state(subset_name(m, ones), accepts(f));
        index.emplace(f, id);
        queue.push_back(f);
        return id;
    };

    std::vector<char> f0(n, 0);
    f0[m.start] = 1;
    r.start = intern(f0);
    while (!queue.empty()) {
        std::vector<char> f = queue.front();
        queue.pop_front();
        int from = index[f];
        for (Symbol a : m.alphabet) {
            std::vector<char> g(n, 0);
            for (int s = 0; s < n; ++s) {
                if (!f[s]) continue;
                auto it = m.delta[s].find(a);
                if (it == m.delta[s].end()) continue;
                for (int t : it->second) g[t] ^= 1;
            }
            r.add_edge(from, a, intern(g));
        }
    }
    return r;
}

}  // namespace

bool nfa_run(const Fa& m, const Word& w, AcceptMode mode) {
    switch (mode) {
        case AcceptMode::Exists: return run_exists(m, w);
        case AcceptMode::ForAll: return run_forall(m, w);
        case AcceptMode::Parity: return run_parity(m, w);
    }
    throw InputError("unknown acceptance mode");
}

Fa determinize(const Fa& m, AcceptMode mode) {
    if (mode == AcceptMode::Parity) return determinize_parity(m);
    return determinize_subsets(m, mode);
}

Fa eliminate_epsilon(const Fa& m) {
    Fa r;
    r.names = m.names;
    r.alphabet = m.alphabet;
    r.start = m.start;
    r.deterministic = false;
    r.accepting.resize(m.size());
    r.delta.resize(m.size());
    r.eps.resize(m.size());
    for (int s = 0; s < m.size(); ++s) {
        std::set<int> cl = m.eclose({s});
        for (int t : cl) {
            if (m.accepting[t]) r.accepting[s] = true;
            for (const auto& [a, tos] : m.delta[t]) r.delta[s][a].insert(tos.begin(), tos.end());
        }
    }
    return r;
}

}  // namespace fl
