#include "fl/fa_ops.hpp"

#include <deque>
#include <tuple>

#include "fl/errors.hpp"

namespace fl {

namespace {

void require_same_alphabet(const Fa& m1, const Fa& m2) {
    if (m1.alphabet != m2.alphabet)
        throw InputError("the two automata must share the same alphabet");
}

std::string pair_name(const Fa& m1, const Fa& m2, int s1, int s2) {
    return "(" + m1.names[s1] + "," + m2.names[s2] + ")";
}

// Disjoint union of states; returns the index offset of m2's states.
int append_states(Fa& r, const Fa& src, bool keep_accepting) {
    int offset = r.size();
    for (int s = 0; s < src.size(); ++s)
        r.add_state(src.names[s], keep_accepting && src.accepting[s]);
    for (int s = 0; s < src.size(); ++s) {
        for (const auto& [a, tos] : src.delta[s])
            for (int t : tos) r.add_edge(offset + s, a, offset + t);
        for (int t : src.eps[s]) r.add_eps(offset + s, offset + t);
    }
    return offset;
}

std::vector<Symbol> merged_alphabet(const Fa& m1, const Fa& m2) {
    std::vector<Symbol> a = m1.alphabet;
    for (Symbol c : m2.alphabet)
        if (!std::binary_search(a.begin(), a.end(), c))
            a.insert(std::lower_bound(a.begin(), a.end(), c), c);
    return a;
}

}  // namespace

Fa complement(const Fa& m) {
    if (!m.deterministic)
        throw StructureError("complement requires a deterministic automaton; determinize first");
    Fa r = totalize(m);
    for (int s = 0; s < r.size(); ++s) r.accepting[s] = !r.accepting[s];
    return r;
}

Fa product(const Fa& m1_in, const Fa& m2_in, BoolOp op) {
    if (!m1_in.deterministic || !m2_in.deterministic)
        throw StructureError("product requires deterministic automata");
    require_same_alphabet(m1_in, m2_in);
    Fa m1 = totalize(m1_in), m2 = totalize(m2_in);

    auto combine = [op](bool a, bool b) {
        switch (op) {
            case BoolOp::And: return a && b;
            case BoolOp::Or: return a || b;
            case BoolOp::Xor: return a != b;
        }
        return false;
    };

    Fa r;
    r.alphabet = m1.alphabet;
    r.deterministic = true;
    std::map<std::pair<int, int>, int> index;
    std::deque<std::pair<int, int>> queue;
    auto intern = [&](int s1, int s2) {
        auto key = std::make_pair(s1, s2);
        auto it = index.find(key);
        if (it != index.end()) return it->second;
        int id = r.add_state(pair_name(m1, m2, s1, s2), combine(m1.accepting[s1], m2.accepting[s2]));
        index.emplace(key, id);
        queue.push_back(key);
        return id;
    };
    r.start = intern(m1.start, m2.start);
    while (!queue.empty()) {
        auto [s1, s2] = queue.front();
        queue.pop_front();
        int from = index[{s1, s2}];
        for (Symbol a : r.alphabet) r.add_edge(from, a, intern(m1.dstep(s1, a), m2.dstep(s2, a)));
    }
    return r;
}

std::optional<Word> equivalence_check(const Fa& m1_in, const Fa& m2_in) {
    if (!m1_in.deterministic || !m2_in.deterministic)
        throw StructureError("equivalence_check requires deterministic automata");
    require_same_alphabet(m1_in, m2_in);
    Fa m1 = totalize(m1_in), m2 = totalize(m2_in);

    // Breadth-first search on the pair graph; the first disagreeing pair
    // found is reached by a shortest (and lexicographically least) word.
    std::map<std::pair<int, int>, std::pair<std::pair<int, int>, Symbol>> parent;
    std::deque<std::pair<int, int>> queue;
    auto start = std::make_pair(m1.start, m2.start);
    parent[start] = {start, 0};
    queue.push_back(start);
    while (!queue.empty()) {
        auto cur = queue.front();
        queue.pop_front();
        auto [s1, s2] = cur;
        if (m1.accepting[s1] != m2.accepting[s2]) {
            Word w;
            for (auto p = cur; p != start; p = parent[p].first) w.push_back(parent[p].second);
            std::reverse(w.begin(), w.end());
            return w;
        }
        for (Symbol a : m1.alphabet) {
            auto next = std::make_pair(m1.dstep(s1, a), m2.dstep(s2, a));
            if (!parent.count(next)) {
                parent[next] = {cur, a};
                queue.push_back(next);
            }
        }
    }
    return std::nullopt;
}

Fa concatenate(const Fa& m1, const Fa& m2) {
    Fa r;
    r.alphabet = merged_alphabet(m1, m2);
    r.deterministic = false;
    append_states(r, m1, false);
    int off2 = append_states(r, m2, true);
    r.start = m1.start;
    for (int s = 0; s < m1.size(); ++s)
        if (m1.accepting[s]) r.add_eps(s, off2 + m2.start);
    return r;
}

Fa star(const Fa& m) {
    Fa r;
    r.alphabet = m.alphabet;
    r.deterministic = false;
    append_states(r, m, true);
    for (int s = 0; s < m.size(); ++s)
        if (m.accepting[s]) r.add_eps(s, m.start);
    r.start = r.add_state("star", true);
    r.add_eps(r.start, m.start);
    return r;
}

Fa reverse(const Fa& m) {
    Fa r;
    r.alphabet = m.alphabet;
    r.deterministic = false;
    for (int s = 0; s < m.size(); ++s) r.add_state(m.names[s], s == m.start);
    for (int s = 0; s < m.size(); ++s) {
        for (const auto& [a, tos] : m.delta[s])
            for (int t : tos) r.add_edge(t, a, s);
        for (int t : m.eps[s]) r.add_eps(t, s);
    }
    r.start = r.add_state("rstart", m.accepting[m.start]);
    for (int s = 0; s < m.size(); ++s)
        if (m.accepting[s]) r.add_eps(r.start, s);
    return r;
}

Fa interleave(const Fa& m1, const Fa& m2) {
    require_same_alphabet(m1, m2);
    Fa r;
    r.alphabet = m1.alphabet;
    r.deterministic = false;
    std::map<std::pair<int, int>, int> index;
    std::deque<std::pair<int, int>> queue;
    auto intern = [&](int s1, int s2) {
        auto key = std::make_pair(s1, s2);
        auto it = index.find(key);
        if (it != index.end()) return it->second;
        int id = r.add_state(pair_name(m1, m2, s1, s2), m1.accepting[s1] && m2.accepting[s2]);
        index.emplace(key, id);
        queue.push_back(key);
        return id;
    };
    r.start = intern(m1.start, m2.start);
    while (!queue.empty()) {
        auto [s1, s2] = queue.front();
        queue.pop_front();
        int from = index[{s1, s2}];
        for (const auto& [a, tos] : m1.delta[s1])
            for (int t : tos) r.add_edge(from, a, intern(t, s2));
        for (const auto& [a, tos] : m2.delta[s2])
            for (int t : tos) r.add_edge(from, a, intern(s1, t));
        for (int t : m1.eps[s1]) r.add_eps(from, intern(t, s2));
        for (int t : m2.eps[s2]) r.add_eps(from, intern(s1, t));
    }
    return r;
}

namespace {

// Predecessor sets under any symbol: back[t] = { s | delta(s,a) contains t }.
std::vector<std::set<int>> backward_adjacency(const Fa& m) {
    std::vector<std::set<int>> back(m.size());
    for (int s = 0; s < m.size(); ++s)
        for (const auto& [a, tos] : m.delta[s])
            for (int t : tos) back[t].insert(s);
    return back;
}

Fa first_half(const Fa& m) {
    auto back = backward_adjacency(m);
    Fa r;
    r.alphabet = m.alphabet;
    int n = m.size();
    // state (s,t): s runs forward from the start, t walks backward from a
    // guessed accepting state; accept when the walks meet.
    std::vector<int> id(n * n);
    for (int s = 0; s < n; ++s)
        for (int t = 0; t < n; ++t)
            id[s * n + t] = r.add_state(pair_name(m, m, s, t), s == t);
    for (int s = 0; s < n; ++s)
        for (int t = 0; t < n; ++t)
            for (Symbol a : m.alphabet) {
                int fwd = m.dstep(s, a);
                if (fwd < 0) continue;
                for (int tp : back[t]) r.add_edge(id[s * n + t], a, id[fwd * n + tp]);
            }
    r.start = r.add_state("half-start", false);
    for (int f = 0; f < n; ++f)
        if (m.accepting[f]) r.add_eps(r.start, id[m.start * n + f]);
    // x = y = epsilon: the empty word is a first half iff epsilon is in L
    if (m.accepting[m.start]) r.accepting[r.start] = true;
    return r;
}

Fa middle_third(const Fa& m) {
    auto back = backward_adjacency(m);
    Fa r;
    r.alphabet = m.alphabet;
    int n = m.size();
    // state (p,c,u): c runs forward on the input from a guessed state q; p
    // walks backward from q (so ending at the start certifies a length-|y|
    // path from the start to q); u walks backward from a guessed accepting
    // state (ending at c certifies a length-|y| path from c's end to it).
    auto id = [&](int p, int c, int u) { return (p * n + c) * n + u; };
    for (int p = 0; p < n; ++p)
        for (int c = 0; c < n; ++c)
            for (int u = 0; u < n; ++u)
                r.add_state("(" + m.names[p] + "," + m.names[c] + "," + m.names[u] + ")",
                            p == m.start && c == u);
    for (int p = 0; p < n; ++p)
        for (int c = 0; c < n; ++c)
            for (int u = 0; u < n; ++u)
                for (Symbol a : m.alphabet) {
                    int fwd = m.dstep(c, a);
                    if (fwd < 0) continue;
                    for (int pp : back[p])
                        for (int up : back[u]) r.add_edge(id(p, c, u), a, id(pp, fwd, up));
                }
    r.start = r.add_state("third-start", m.accepting[m.start]);
    for (int q = 0; q < n; ++q)
        for (int f = 0; f < n; ++f)
            if (m.accepting[f]) r.add_eps(r.start, id(q, q, f));
    return r;
}

}  // namespace

Fa fraction_language(const Fa& m_in, Fraction which) {
    if (!m_in.deterministic)
        throw StructureError("fraction_language requires a deterministic automaton");
    Fa m = totalize(m_in);
    return which == Fraction::FirstHalf ? first_half(m) : middle_third(m);
}

}  // namespace fl
