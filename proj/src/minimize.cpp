#include "fl/minimize.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include "fl/errors.hpp"

namespace fl {

namespace {

// Moore refinement on the reachable part of a total DFA. Returns block ids
// per state (-1 for unreachable states).
std::vector<int> refine(const Fa& m) {
    std::set<int> reach = m.reachable();
    std::vector<int> block(m.size(), -1);
    for (int s : reach) block[s] = m.accepting[s] ? 1 : 0;
    for (;;) {
        // signature of a state: its block plus the blocks of its successors
        std::map<std::vector<int>, int> ids;
        std::vector<int> next(m.size(), -1);
        for (int s : reach) {
            std::vector<int> sig = {block[s]};
            for (Symbol a : m.alphabet) sig.push_back(block[m.dstep(s, a)]);
            auto [it, fresh] = ids.emplace(sig, static_cast<int>(ids.size()));
            (void)fresh;
            next[s] = it->second;
        }
        bool changed = false;
        for (int s : reach)
            for (int t : reach)
                if ((block[s] == block[t]) != (next[s] == next[t])) changed = true;
        block = next;
        if (!changed) break;
    }
    return block;
}

}  // namespace

Fa minimize(const Fa& m_in) {
    if (!m_in.deterministic) throw StructureError("minimize requires a deterministic automaton");
    Fa m = totalize(m_in);
    std::vector<int> block = refine(m);
    int nblocks = *std::max_element(block.begin(), block.end()) + 1;

    Fa r;
    r.alphabet = m.alphabet;
    r.deterministic = true;
    std::vector<std::set<int>> members(nblocks);
    for (int s = 0; s < m.size(); ++s)
        if (block[s] >= 0) members[block[s]].insert(s);
    for (int b = 0; b < nblocks; ++b) {
        std::string name = "{";
        for (int s : members[b]) {
            if (name.size() > 1) name += ",";
            name += m.names[s];
        }
        r.add_state(name + "}", m.accepting[*members[b].begin()]);
    }
    for (int b = 0; b < nblocks; ++b) {
        int rep = *members[b].begin();
        for (Symbol a : m.alphabet) r.add_edge(b, a, block[m.dstep(rep, a)]);
    }
    r.start = block[m.start];
    return r;
}

StatePartition state_partition(const Fa& m_in) {
    if (!m_in.deterministic)
        throw StructureError("state_partition requires a deterministic automaton");
    Fa m = totalize(m_in);
    std::vector<int> block = refine(m);
    std::map<int, std::set<int>> members;
    for (int s = 0; s < m_in.size(); ++s)  // excludes the synthetic sink, if any
        if (block[s] >= 0) members[block[s]].insert(s);
    StatePartition part;
    for (auto& [b, states] : members) part.push_back(std::move(states));
    return part;
}

std::optional<Word> distinguishing_suffix(const Fa& m_in, int s1, int s2) {
    if (!m_in.deterministic)
        throw StructureError("distinguishing_suffix requires a deterministic automaton");
    if (s1 < 0 || s1 >= m_in.size() || s2 < 0 || s2 >= m_in.size())
        throw InputError("unknown state index");
    Fa m = totalize(m_in);
    std::map<std::pair<int, int>, std::pair<std::pair<int, int>, Symbol>> parent;
    std::deque<std::pair<int, int>> queue;
    auto start = std::make_pair(s1, s2);
    parent[start] = {start, 0};
    queue.push_back(start);
    while (!queue.empty()) {
        auto cur = queue.front();
        queue.pop_front();
        if (m.accepting[cur.first] != m.accepting[cur.second]) {
            Word w;
            for (auto p = cur; p != start; p = parent[p].first) w.push_back(parent[p].second);
            std::reverse(w.begin(), w.end());
            return w;
        }
        for (Symbol a : m.alphabet) {
            auto next = std::make_pair(m.dstep(cur.first, a), m.dstep(cur.second, a));
            if (!parent.count(next)) {
                parent[next] = {cur, a};
                queue.push_back(next);
            }
        }
    }
    return std::nullopt;
}

bool isomorphic(const Fa& m1_in, const Fa& m2_in) {
    if (!m1_in.deterministic || !m2_in.deterministic)
        throw StructureError("isomorphic requires deterministic automata");
    if (m1_in.alphabet != m2_in.alphabet) return false;
    Fa m1 = totalize(m1_in), m2 = totalize(m2_in);
    if (m1.size() != m2.size()) return false;
    // follow both machines from the starts; a total DFA pins the bijection
    std::vector<int> map1(m1.size(), -1), map2(m2.size(), -1);
    std::deque<int> queue;
    map1[m1.start] = m2.start;
    map2[m2.start] = m1.start;
    queue.push_back(m1.start);
    while (!queue.empty()) {
        int s = queue.front();
        queue.pop_front();
        int t = map1[s];
        if (m1.accepting[s] != m2.accepting[t]) return false;
        for (Symbol a : m1.alphabet) {
            int sn = m1.dstep(s, a), tn = m2.dstep(t, a);
            if (map1[sn] == -1 && map2[tn] == -1) {
                map1[sn] = tn;
                map2[tn] = sn;
                queue.push_back(sn);
            } else if (map1[sn] != tn) {
                return false;
            }
        }
    }
    // unreached states would make the mapping partial; they cannot exist in
    // minimal machines, but check to keep the predicate honest
    for (int s = 0; s < m1.size(); ++s)
        if ((map1[s] == -1) != (map2[s] == -1)) return false;
    for (int s = 0; s < m1.size(); ++s)
        if (map1[s] == -1) return false;
    return true;
}

PumpDecomposition pump_decompose(const Fa& m, const Word& w) {
    if (!m.deterministic) throw StructureError("pump_decompose requires a deterministic automaton");
    int p = m.size();
    if (static_cast<int>(w.size()) < p)
        throw InputError("word shorter than the pumping constant");
    if (!dfa_run(m, w)) throw InputError("word not accepted by the automaton");

    // states visited while reading the first p symbols; p+1 entries, so by
    // pigeonhole a repeat occurs; take the first one in visit order
    std::vector<int> visited = {m.start};
    int s = m.start;
    for (int i = 0; i < p; ++i) {
        s = m.dstep(s, w[i]);
        visited.push_back(s);
    }
    int first = -1, again = -1;
    for (int j = 1; j <= p && again < 0; ++j)
        for (int i = 0; i < j; ++i)
            if (visited[i] == visited[j]) {
                first = i;
                again = j;
                break;
            }
    PumpDecomposition d;
    d.p = p;
    d.x = w.substr(0, first);
    d.y = w.substr(first, again - first);
    d.z = w.substr(again);
    return d;
}

}  // namespace fl
