#pragma once

// Brute-force oracles and seeded generators used by the test suites. These
// stay independent of the constructions they check: membership is decided
// by explicit path enumeration or by direct set arithmetic on enumerated
// languages.

#include <algorithm>
#include <functional>
#include <optional>
#include <random>
#include <set>
#include <vector>

#include "fl/fa.hpp"
#include "fl/grammar.hpp"

namespace oracle {

using fl::Fa;
using fl::Symbol;
using fl::Word;

// all words over `alphabet` of length <= maxlen, shortest first
inline std::vector<Word> all_words(const std::vector<Symbol>& alphabet, int maxlen) {
    std::vector<Word> out = {Word()};
    std::size_t level_begin = 0;
    for (int len = 1; len <= maxlen; ++len) {
        std::size_t level_end = out.size();
        for (std::size_t i = level_begin; i < level_end; ++i)
            for (Symbol a : alphabet) {
                Word w = out[i];
                w.push_back(a);
                out.push_back(std::move(w));
            }
        level_begin = level_end;
    }
    return out;
}

// every distinct computation path of m on w, by explicit recursion; epsilon
// runs are capped at |S| consecutive moves so exists-mode stays sound on
// machines with epsilon cycles
struct PathOracle {
    bool any_accepting = false;   // some path consumes w and ends accepting
    bool any_dead = false;        // some maximal path dies before consuming w
    long long accepting_paths = 0;  // number of accepting paths (epsilon-acyclic only)
    bool all_ends_accepting = true;  // every state reachable at the end accepts
};

inline void path_walk(const Fa& m, const Word& w, int s, std::size_t pos, int eps_run,
                      PathOracle& st, bool count_paths) {
    bool has_move = false;
    if (pos == w.size()) {
        if (m.accepting[s]) {
            st.any_accepting = true;
            if (count_paths) ++st.accepting_paths;
        } else {
            st.all_ends_accepting = false;
        }
    }
    if (pos < w.size()) {
        auto it = m.delta[s].find(w[pos]);
        if (it != m.delta[s].end())
            for (int t : it->second) {
                has_move = true;
                path_walk(m, w, t, pos + 1, 0, st, count_paths);
            }
    }
    for (int t : m.eps[s]) {
        if (eps_run < m.size()) {
            has_move = true;
            path_walk(m, w, t, pos, eps_run + 1, st, count_paths);
        }
    }
    if (!has_move && pos < w.size()) st.any_dead = true;
}

inline PathOracle enumerate_paths(const Fa& m, const Word& w, bool count_paths = false) {
    PathOracle st;
    path_walk(m, w, m.start, 0, 0, st, count_paths);
    return st;
}

inline bool exists_accepts(const Fa& m, const Word& w) {
    return enumerate_paths(m, w).any_accepting;
}

// language of m (exists mode) restricted to words of length <= maxlen
inline std::set<Word> language(const Fa& m, int maxlen) {
    std::set<Word> out;
    for (const Word& w : all_words(m.alphabet, maxlen))
        if (exists_accepts(m, w)) out.insert(w);
    return out;
}

inline std::set<Word> concat_sets(const std::set<Word>& a, const std::set<Word>& b, int maxlen) {
    std::set<Word> out;
    for (const Word& x : a)
        for (const Word& y : b)
            if (static_cast<int>(x.size() + y.size()) <= maxlen) out.insert(x + y);
    return out;
}

inline std::set<Word> star_set(const std::set<Word>& a, int maxlen) {
    std::set<Word> out = {Word()};
    bool grew = true;
    while (grew) {
        grew = false;
        for (const Word& x : std::set<Word>(out)) {
            for (const Word& y : a) {
                if (y.empty()) continue;
                Word w = x + y;
                if (static_cast<int>(w.size()) <= maxlen && out.insert(w).second) grew = true;
            }
        }
    }
    return out;
}

inline std::set<Word> reverse_set(const std::set<Word>& a) {
    std::set<Word> out;
    for (Word w : a) {
        std::reverse(w.begin(), w.end());
        out.insert(w);
    }
    return out;
}

inline void interleavings(const Word& u, const Word& v, Word& acc, std::set<Word>& out) {
    if (u.empty() && v.empty()) {
        out.insert(acc);
        return;
    }
    if (!u.empty()) {
        acc.push_back(u[0]);
        interleavings(u.substr(1), v, acc, out);
        acc.pop_back();
    }
    if (!v.empty()) {
        acc.push_back(v[0]);
        interleavings(u, v.substr(1), acc, out);
        acc.pop_back();
    }
}

inline std::set<Word> interleave_sets(const std::set<Word>& a, const std::set<Word>& b,
                                      int maxlen) {
    std::set<Word> out;
    for (const Word& u : a)
        for (const Word& v : b) {
            if (static_cast<int>(u.size() + v.size()) > maxlen) continue;
            Word acc;
            interleavings(u, v, acc, out);
        }
    return out;
}

// { x : exists y, |x| = |y|, xy in lang }
inline std::set<Word> half_set(const std::set<Word>& lang) {
    std::set<Word> out;
    for (const Word& w : lang)
        if (w.size() % 2 == 0) out.insert(w.substr(0, w.size() / 2));
    return out;
}

// { y : exists x,z, |x| = |y| = |z|, xyz in lang }
inline std::set<Word> third_set(const std::set<Word>& lang) {
    std::set<Word> out;
    for (const Word& w : lang)
        if (w.size() % 3 == 0) out.insert(w.substr(w.size() / 3, w.size() / 3));
    return out;
}

// --- seeded generators ------------------------------------------------------

inline Fa random_nfa(std::mt19937& rng, int n_states, const std::vector<Symbol>& alphabet,
                     double edge_prob = 0.35, double eps_prob = 0.0) {
    Fa m;
    m.alphabet = alphabet;
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    for (int s = 0; s < n_states; ++s) m.add_state("q" + std::to_string(s), coin(rng) < 0.4);
    for (int s = 0; s < n_states; ++s) {
        for (Symbol a : alphabet)
            for (int t = 0; t < n_states; ++t)
                if (coin(rng) < edge_prob) m.add_edge(s, a, t);
        for (int t = 0; t < n_states; ++t)
            if (s != t && coin(rng) < eps_prob) m.add_eps(s, t);
    }
    // make sure something accepts occasionally
    if (std::none_of(m.accepting.begin(), m.accepting.end(), [](bool b) { return b; }))
        m.accepting[rng() % n_states] = true;
    return m;
}

inline Fa random_total_dfa(std::mt19937& rng, int n_states, const std::vector<Symbol>& alphabet) {
    Fa m;
    m.deterministic = true;
    m.alphabet = alphabet;
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    for (int s = 0; s < n_states; ++s) m.add_state("q" + std::to_string(s), coin(rng) < 0.5);
    for (int s = 0; s < n_states; ++s)
        for (Symbol a : alphabet) m.add_edge(s, a, static_cast<int>(rng() % n_states));
    return m;
}

// a DFA with the same language as m in which one reachable state is split
// into two equivalent copies
inline Fa duplicate_state(std::mt19937& rng, const Fa& m) {
    std::set<int> reach = m.reachable();
    std::vector<int> reachable(reach.begin(), reach.end());
    int victim = reachable[rng() % reachable.size()];
    Fa r;
    r.deterministic = true;
    r.alphabet = m.alphabet;
    for (int s = 0; s < m.size(); ++s) r.add_state(m.names[s], m.accepting[s]);
    int copy = r.add_state(m.names[victim] + "'", m.accepting[victim]);
    for (int s = 0; s < m.size(); ++s)
        for (Symbol a : m.alphabet) {
            int t = m.dstep(s, a);
            if (t < 0) continue;
            // route roughly half of the victim's incoming edges to the copy
            int target = (t == victim && rng() % 2 == 0) ? copy : t;
            r.add_edge(s, a, target);
        }
    for (Symbol a : m.alphabet) {
        int t = m.dstep(victim, a);
        if (t >= 0) r.add_edge(copy, a, t == victim && rng() % 2 ? copy : t);
    }
    r.start = (m.start == victim && rng() % 2) ? copy : m.start;
    return r;
}

inline fl::Grammar random_cnf(std::mt19937& rng, int n_vars, const std::vector<Symbol>& terminals) {
    fl::Grammar g;
    g.cls = fl::GrammarClass::Cnf;
    for (int v = 0; v < n_vars; ++v) g.add_variable("V" + std::to_string(v));
    for (Symbol t : terminals) g.add_terminal(t);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    for (int v = 0; v < n_vars; ++v) {
        for (Symbol t : terminals)
            if (coin(rng) < 0.5)
                g.rules.push_back({{fl::GSym::variable(v)}, {fl::GSym::terminal(t)}});
        for (int b = 0; b < n_vars; ++b)
            for (int c = 0; c < n_vars; ++c)
                if (coin(rng) < 0.25)
                    g.rules.push_back(
                        {{fl::GSym::variable(v)},
                         {fl::GSym::variable(b), fl::GSym::variable(c)}});
    }
    if (g.rules.empty())
        g.rules.push_back({{fl::GSym::variable(0)}, {fl::GSym::terminal(terminals[0])}});
    g.start = 0;
    return g;
}

}  // namespace oracle
