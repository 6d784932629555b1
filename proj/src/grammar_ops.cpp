#include "fl/grammar_ops.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <map>

#include "fl/errors.hpp"

namespace fl {

namespace {

void require_cnf(const Grammar& g, const char* op) {
    if (g.cls != GrammarClass::Cnf)
        throw StructureError(std::string(op) + " requires a grammar in Chomsky normal form");
}

struct CnfIndex {
    // pair rules: (B,C) -> list of (A, rule index)
    std::map<std::pair<int, int>, std::vector<std::pair<int, int>>> pairs;
    // terminal rules: t -> list of (A, rule index)
    std::map<Symbol, std::vector<std::pair<int, int>>> terms;
    int eps_rule = -1;  // start -> epsilon, when present

    explicit CnfIndex(const Grammar& g) {
        for (int i = 0; i < static_cast<int>(g.rules.size()); ++i) {
            const Rule& r = g.rules[i];
            int a = r.lhs[0].var;
            if (r.rhs.empty())
                eps_rule = i;
            else if (r.rhs.size() == 1)
                terms[r.rhs[0].term].push_back({a, i});
            else
                pairs[{r.rhs[0].var, r.rhs[1].var}].push_back({a, i});
        }
    }
};

// table(i, len) = set of variables deriving w[i, i+len)
struct CykTable {
    int n = 0, nv = 0;
    std::vector<char> bits;

    CykTable(int n_, int nv_) : n(n_), nv(nv_), bits(std::size_t(n_) * n_ * nv_, 0) {}
    char& at(int i, int len, int v) {
        return bits[(std::size_t(i) * (n + 1) + len - 1) * nv + v];
    }
};

CykTable cyk_fill(const Grammar& g, const Word& w) {
    CnfIndex idx(g);
    int n = static_cast<int>(w.size());
    CykTable table(n + 1, g.n_vars());
    for (int i = 0; i < n; ++i) {
        auto it = idx.terms.find(w[i]);
        if (it == idx.terms.end()) continue;
        for (auto [a, ri] : it->second) table.at(i, 1, a) = 1;
    }
    for (int len = 2; len <= n; ++len)
        for (int i = 0; i + len <= n; ++i)
            for (const auto& [bc, as] : idx.pairs)
                for (int split = 1; split < len; ++split)
                    if (table.at(i, split, bc.first) &&
                        table.at(i + split, len - split, bc.second))
                        for (auto [a, ri] : as) table.at(i, len, a) = 1;
    return table;
}

}  // namespace

bool cyk_member(const Grammar& g, const Word& w) {
    require_cnf(g, "cyk_member");
    for (Symbol a : w)
        if (!g.has_terminal(a)) return false;
    if (w.empty()) {
        CnfIndex idx(g);
        return idx.eps_rule >= 0;
    }
    CykTable table = cyk_fill(g, w);
    return table.at(0, static_cast<int>(w.size()), g.start) != 0;
}

namespace {

std::vector<bool> nullables(const Grammar& g) {
    std::vector<bool> nullable(g.n_vars(), false);
    bool changed = true;
    while (changed) {
        changed = false;
        for (const Rule& r : g.rules) {
            if (nullable[r.lhs[0].var]) continue;
            bool all = true;
            for (const GSym& s : r.rhs)
                if (!s.is_var() || !nullable[s.var]) all = false;
            if (all) {
                nullable[r.lhs[0].var] = true;
                changed = true;
            }
        }
    }
    return nullable;
}

}  // namespace

Grammar to_cnf(const Grammar& g_in) {
    if (!g_in.single_variable_lhs())
        throw StructureError("to_cnf requires a context-free grammar");

    // fresh start symbol
    Grammar g;
    g.terminals = g_in.terminals;
    g.cls = GrammarClass::ContextFree;
    g.start = g.add_variable("S0");
    for (const std::string& v : g_in.variables) g.add_variable(v);
    auto shift = [](const Rule& r) {
        Rule copy = r;
        copy.lhs[0].var += 1;
        for (GSym& s : copy.rhs)
            if (s.is_var()) s.var += 1;
        return copy;
    };
    for (const Rule& r : g_in.rules) g.rules.push_back(shift(r));
    g.rules.push_back({{GSym::variable(0)}, {GSym::variable(g_in.start + 1)}});

    // epsilon elimination: keep membership of the empty word on the start
    std::vector<bool> nullable = nullables(g);
    bool eps_member = nullable[g.start];
    {
        std::set<std::pair<std::vector<GSym>, std::vector<GSym>>> seen;
        std::vector<Rule> out;
        for (const Rule& rule : g.rules) {
            std::vector<int> optional;
            for (std::size_t i = 0; i < rule.rhs.size(); ++i)
                if (rule.rhs[i].is_var() && nullable[rule.rhs[i].var])
                    optional.push_back(static_cast<int>(i));
            for (std::size_t mask = 0; mask < (std::size_t{1} << optional.size()); ++mask) {
                std::vector<GSym> rhs;
                std::size_t k = 0;
                for (std::size_t i = 0; i < rule.rhs.size(); ++i) {
                    bool drop = false;
                    if (k < optional.size() && optional[k] == static_cast<int>(i)) {
                        drop = (mask >> k) & 1;
                        ++k;
                    }
                    if (!drop) rhs.push_back(rule.rhs[i]);
                }
                if (rhs.empty()) continue;
                if (seen.insert({rule.lhs, rhs}).second) out.push_back({rule.lhs, std::move(rhs)});
            }
        }
        g.rules = std::move(out);
    }

    // unit elimination: A =>* B by unit rules, then A inherits B's non-unit rules
    {
        int nv = g.n_vars();
        std::vector<std::vector<bool>> unit(nv, std::vector<bool>(nv, false));
        for (int v = 0; v < nv; ++v) unit[v][v] = true;
        bool changed = true;
        while (changed) {
            changed = false;
            for (const Rule& r : g.rules)
                if (r.rhs.size() == 1 && r.rhs[0].is_var())
                    for (int v = 0; v < nv; ++v)
                        if (unit[v][r.lhs[0].var] && !unit[v][r.rhs[0].var]) {
                            unit[v][r.rhs[0].var] = true;
                            changed = true;
                        }
        }
        std::set<std::pair<std::vector<GSym>, std::vector<GSym>>> seen;
        std::vector<Rule> out;
        for (int v = 0; v < nv; ++v)
            for (const Rule& r : g.rules) {
                if (r.rhs.size() == 1 && r.rhs[0].is_var()) continue;
                if (!unit[v][r.lhs[0].var]) continue;
                std::vector<GSym> lhs = {GSym::variable(v)};
                if (seen.insert({lhs, r.rhs}).second) out.push_back({lhs, r.rhs});
            }
        g.rules = std::move(out);
    }

    // terminal isolation in long rules
    {
        std::map<Symbol, int> isolator;
        for (Rule& r : g.rules) {
            if (r.rhs.size() < 2) continue;
            for (GSym& s : r.rhs) {
                if (s.is_var()) continue;
                auto it = isolator.find(s.term);
                if (it == isolator.end()) {
                    int v = g.add_variable("T_" + utf8_encode(s.term));
                    it = isolator.emplace(s.term, v).first;
                }
                s = GSym::variable(it->second);
            }
        }
        for (auto [t, v] : isolator)
            g.rules.push_back({{GSym::variable(v)}, {GSym::terminal(t)}});
    }

    // binarization
    {
        std::vector<Rule> out;
        int serial = 0;
        for (const Rule& r : g.rules) {
            if (r.rhs.size() <= 2) {
                out.push_back(r);
                continue;
            }
            std::vector<GSym> rest(r.rhs.begin(), r.rhs.end());
            GSym head = r.lhs[0];
            while (rest.size() > 2) {
                int v = g.add_variable(g.variables[r.lhs[0].var] + "#" + std::to_string(serial++));
                out.push_back({{head}, {rest[0], GSym::variable(v)}});
                head = GSym::variable(v);
                rest.erase(rest.begin());
            }
            out.push_back({{head}, {rest[0], rest[1]}});
        }
        g.rules = std::move(out);
    }

    if (eps_member) g.rules.push_back({{GSym::variable(g.start)}, {}});
    g.cls = GrammarClass::Cnf;
    Grammar cleaned = remove_useless(g);
    cleaned.cls = GrammarClass::Cnf;
    cleaned.validate();
    return cleaned;
}

Grammar to_gnf(const Grammar& g_in) {
    Grammar g = to_cnf(g_in);
    bool eps_member = false;
    {
        std::vector<Rule> kept;
        for (const Rule& r : g.rules) {
            if (r.rhs.empty())
                eps_member = true;
            else
                kept.push_back(r);
        }
        g.rules = std::move(kept);
    }
    int nv = g.n_vars();

    auto rules_of = [&](int v) {
        std::vector<Rule> out;
        for (const Rule& r : g.rules)
            if (r.lhs[0].var == v) out.push_back(r);
        return out;
    };
    auto replace_rules_of = [&](int v, std::vector<Rule> with) {
        std::vector<Rule> out;
        for (const Rule& r : g.rules)
            if (r.lhs[0].var != v) out.push_back(r);
        for (Rule& r : with) out.push_back(std::move(r));
        g.rules = std::move(out);
    };

    // forward pass: make every A_i -> A_j ... satisfy j > i, removing
    // immediate left recursion with fresh Z variables
    std::vector<int> z_of(nv, -1);
    for (int i = 0; i < nv; ++i) {
        bool changed = true;
        while (changed) {
            changed = false;
            std::vector<Rule> out;
            for (const Rule& r : rules_of(i)) {
                if (!r.rhs.empty() && r.rhs[0].is_var() && r.rhs[0].var < nv &&
                    r.rhs[0].var < i) {
                    for (const Rule& sub : rules_of(r.rhs[0].var)) {
                        Rule n;
                        n.lhs = r.lhs;
                        n.rhs = sub.rhs;
                        n.rhs.insert(n.rhs.end(), r.rhs.begin() + 1, r.rhs.end());
                        out.push_back(std::move(n));
                    }
                    changed = true;
                } else {
                    out.push_back(r);
                }
            }
            replace_rules_of(i, std::move(out));
        }
        // immediate left recursion: A_i -> A_i alpha | beta
        std::vector<Rule> rec, base;
        for (const Rule& r : rules_of(i)) {
            if (!r.rhs.empty() && r.rhs[0].is_var() && r.rhs[0].var == i)
                rec.push_back(r);
            else
                base.push_back(r);
        }
        if (!rec.empty()) {
            int z = g.add_variable("Z_" + g.variables[i]);
            z_of[i] = z;
            std::vector<Rule> out;
            for (const Rule& b : base) {
                out.push_back(b);
                Rule with_z = b;
                with_z.rhs.push_back(GSym::variable(z));
                out.push_back(std::move(with_z));
            }
            for (const Rule& r : rec) {
                std::vector<GSym> alpha(r.rhs.begin() + 1, r.rhs.end());
                Rule plain{{GSym::variable(z)}, alpha};
                Rule looped{{GSym::variable(z)}, alpha};
                looped.rhs.push_back(GSym::variable(z));
                g.rules.push_back(std::move(plain));
                g.rules.push_back(std::move(looped));
            }
            replace_rules_of(i, std::move(out));
        }
    }

    // back-substitution: highest-numbered variables already start with a
    // terminal; expand leading variables downward, then fix the Z rules
    for (int i = nv - 1; i >= 0; --i) {
        std::vector<Rule> out;
        for (const Rule& r : rules_of(i)) {
            if (!r.rhs.empty() && r.rhs[0].is_var()) {
                for (const Rule& sub : rules_of(r.rhs[0].var)) {
                    Rule n;
                    n.lhs = r.lhs;
                    n.rhs = sub.rhs;
                    n.rhs.insert(n.rhs.end(), r.rhs.begin() + 1, r.rhs.end());
                    out.push_back(std::move(n));
                }
            } else {
                out.push_back(r);
            }
        }
        replace_rules_of(i, std::move(out));
    }
    for (int i = 0; i < nv; ++i) {
        if (z_of[i] < 0) continue;
        int z = z_of[i];
        std::vector<Rule> out;
        for (const Rule& r : rules_of(z)) {
            if (!r.rhs.empty() && r.rhs[0].is_var()) {
                for (const Rule& sub : rules_of(r.rhs[0].var)) {
                    Rule n;
                    n.lhs = r.lhs;
                    n.rhs = sub.rhs;
                    n.rhs.insert(n.rhs.end(), r.rhs.begin() + 1, r.rhs.end());
                    out.push_back(std::move(n));
                }
            } else {
                out.push_back(r);
            }
        }
        replace_rules_of(z, std::move(out));
    }

    if (eps_member) g.rules.push_back({{GSym::variable(g.start)}, {}});
    g.cls = GrammarClass::ContextFree;
    Grammar cleaned = remove_useless(g);
    cleaned.cls = GrammarClass::Gnf;
    cleaned.validate();
    return cleaned;
}

namespace {

void enumerate_trees(const Grammar& g, const CnfIndex& idx, CykTable& table, const Word& w, int i,
                     int len, int v, std::size_t limit, std::vector<ParseTreePtr>& out) {
    if (out.size() >= limit) return;
    if (len == 1) {
        auto it = idx.terms.find(w[i]);
        if (it == idx.terms.end()) return;
        for (auto [a, ri] : it->second)
            if (a == v) {
                auto t = std::make_shared<ParseTree>();
                t->var = v;
                t->rule = ri;
                t->children.push_back(w[i]);
                out.push_back(std::move(t));
                if (out.size() >= limit) return;
            }
        return;
    }
    for (int ri = 0; ri < static_cast<int>(g.rules.size()); ++ri) {
        const Rule& r = g.rules[ri];
        if (r.lhs[0].var != v || r.rhs.size() != 2) continue;
        for (int split = 1; split < len; ++split) {
            if (!table.at(i, split, r.rhs[0].var) ||
                !table.at(i + split, len - split, r.rhs[1].var))
                continue;
            std::vector<ParseTreePtr> lefts, rights;
            enumerate_trees(g, idx, table, w, i, split, r.rhs[0].var, limit, lefts);
            enumerate_trees(g, idx, table, w, i + split, len - split, r.rhs[1].var, limit, rights);
            for (const auto& l : lefts)
                for (const auto& rt : rights) {
                    if (out.size() >= limit) return;
                    auto t = std::make_shared<ParseTree>();
                    t->var = v;
                    t->rule = ri;
                    t->children.push_back(l);
                    t->children.push_back(rt);
                    out.push_back(std::move(t));
                }
        }
    }
}

}  // namespace

std::vector<ParseTreePtr> enumerate_parse_trees(const Grammar& g, const Word& w,
                                                std::size_t limit) {
    require_cnf(g, "enumerate_parse_trees");
    std::vector<ParseTreePtr> out;
    if (limit == 0) return out;
    for (Symbol a : w)
        if (!g.has_terminal(a)) return out;
    CnfIndex idx(g);
    if (w.empty()) {
        if (idx.eps_rule >= 0) {
            auto t = std::make_shared<ParseTree>();
            t->var = g.start;
            t->rule = idx.eps_rule;
            out.push_back(std::move(t));
        }
        return out;
    }
    CykTable table = cyk_fill(g, w);
    enumerate_trees(g, idx, table, w, 0, static_cast<int>(w.size()), g.start, limit, out);
    return out;
}

BigInt count_parse_trees(const Grammar& g, const Word& w) {
    require_cnf(g, "count_parse_trees");
    for (Symbol a : w)
        if (!g.has_terminal(a)) return 0;
    CnfIndex idx(g);
    if (w.empty()) return idx.eps_rule >= 0 ? 1 : 0;
    int n = static_cast<int>(w.size());
    int nv = g.n_vars();
    // counts[i][len][v]
    std::vector<BigInt> counts(std::size_t(n) * (n + 1) * nv, BigInt(0));
    auto at = [&](int i, int len, int v) -> BigInt& {
        return counts[(std::size_t(i) * (n + 1) + len - 1) * nv + v];
    };
    for (int i = 0; i < n; ++i) {
        auto it = idx.terms.find(w[i]);
        if (it == idx.terms.end()) continue;
        for (auto [a, ri] : it->second) at(i, 1, a) += 1;
    }
    for (int len = 2; len <= n; ++len)
        for (int i = 0; i + len <= n; ++i)
            for (const auto& [bc, as] : idx.pairs)
                for (int split = 1; split < len; ++split) {
                    BigInt l = at(i, split, bc.first);
                    if (l == 0) continue;
                    BigInt r = at(i + split, len - split, bc.second);
                    if (r == 0) continue;
                    for (auto [a, ri] : as) at(i, len, a) += l * r;
                }
    return at(0, n, g.start);
}

Word tree_frontier(const ParseTreePtr& t) {
    Word w;
    for (const auto& c : t->children) {
        if (std::holds_alternative<Symbol>(c))
            w.push_back(std::get<Symbol>(c));
        else
            w += tree_frontier(std::get<ParseTreePtr>(c));
    }
    return w;
}

std::string tree_to_string(const Grammar& g, const ParseTreePtr& t) {
    std::string out = "(" + g.variables[t->var];
    for (const auto& c : t->children) {
        out += " ";
        if (std::holds_alternative<Symbol>(c))
            out += utf8_encode(std::get<Symbol>(c));
        else
            out += tree_to_string(g, std::get<ParseTreePtr>(c));
    }
    return out + ")";
}

std::vector<BigInt> count_words(const Grammar& g, int maxlen, bool assume_unambiguous,
                                std::size_t budget) {
    require_cnf(g, "count_words");
    std::vector<BigInt> out(maxlen + 1, BigInt(0));
    if (assume_unambiguous) {
        // derivation counts equal word counts exactly when no word has two
        // parse trees
        CnfIndex idx(g);
        int nv = g.n_vars();
        std::vector<std::vector<BigInt>> d(maxlen + 1, std::vector<BigInt>(nv, BigInt(0)));
        for (const auto& [t, as] : idx.terms)
            for (auto [a, ri] : as)
                if (maxlen >= 1) d[1][a] += 1;
        for (int len = 2; len <= maxlen; ++len)
            for (const auto& [bc, as] : idx.pairs)
                for (int split = 1; split < len; ++split) {
                    BigInt l = d[split][bc.first];
                    if (l == 0) continue;
                    BigInt r = d[len - split][bc.second];
                    if (r == 0) continue;
                    for (auto [a, ri] : as) d[len][a] += l * r;
                }
        out[0] = idx.eps_rule >= 0 ? 1 : 0;
        for (int len = 1; len <= maxlen; ++len) out[len] = d[len][g.start];
        return out;
    }
    // explicit enumeration over T^len
    out[0] = cyk_member(g, Word()) ? 1 : 0;
    std::size_t nt = g.terminals.size();
    for (int len = 1; len <= maxlen; ++len) {
        double total = std::pow(static_cast<double>(nt), len);
        if (nt == 0) break;
        if (total > static_cast<double>(budget))
            throw ResourceError("count_words: terminal alphabet too large for explicit "
                                "enumeration at length " +
                                std::to_string(len) + "; assert unambiguity to use the "
                                "derivation-count mode");
        std::vector<std::size_t> odo(len, 0);
        Word w(len, g.terminals[0]);
        for (;;) {
            if (cyk_member(g, w)) out[len] += 1;
            int pos = len - 1;
            while (pos >= 0) {
                if (++odo[pos] < nt) {
                    w[pos] = g.terminals[odo[pos]];
                    break;
                }
                odo[pos] = 0;
                w[pos] = g.terminals[0];
                --pos;
            }
            if (pos < 0) break;
        }
    }
    return out;
}

BigInt dyck_coefficient(int k, int len) {
    if (k <= 0) throw InputError("dyck_coefficient requires k >= 1");
    if (len < 0 || len % 2 != 0)
        throw InputError("Dyck words exist only for even nonnegative lengths");
    int h = len / 2;
    // Catalan number C(len, h) / (h+1), an exact integer
    BigInt binom = 1;
    for (int i = 1; i <= h; ++i) {
        binom *= (h + i);
        binom /= i;
    }
    BigInt catalan = binom / (h + 1);
    BigInt kpow = 1;
    for (int i = 0; i < h; ++i) kpow *= k;
    return kpow * catalan;
}

Fa regular_grammar_to_nfa(const Grammar& g) {
    if (g.cls != GrammarClass::Regular)
        throw StructureError("regular_grammar_to_nfa requires the Regular class");
    g.validate();
    Fa m;
    m.deterministic = false;
    for (Symbol t : g.terminals) m.add_symbol(t);
    for (const std::string& name : g.variables) m.add_state(name, false);
    m.start = g.start;
    for (const Rule& r : g.rules) {
        if (r.rhs.empty())
            m.accepting[r.lhs[0].var] = true;
        else
            m.add_edge(r.lhs[0].var, r.rhs[0].term, r.rhs[1].var);
    }
    return m;
}

Grammar nfa_to_regular_grammar(const Fa& m_in) {
    Fa m = m_in.has_eps() ? eliminate_epsilon(m_in) : m_in;
    Grammar g;
    g.cls = GrammarClass::Regular;
    for (Symbol a : m.alphabet) g.add_terminal(a);
    for (const std::string& name : m.names) g.add_variable(name);
    g.start = m.start;
    for (int s = 0; s < m.size(); ++s) {
        if (m.accepting[s]) g.rules.push_back({{GSym::variable(s)}, {}});
        for (const auto& [a, tos] : m.delta[s])
            for (int t : tos)
                g.rules.push_back({{GSym::variable(s)}, {GSym::terminal(a), GSym::variable(t)}});
    }
    return g;
}

namespace {

// First parse tree of w[i, i+len) rooted at v, chosen deterministically
// (lowest rule index, then smallest split).
ParseTreePtr first_tree(const Grammar& g, const CnfIndex& idx, CykTable& table, const Word& w,
                        int i, int len, int v) {
    if (len == 1) {
        auto it = idx.terms.find(w[i]);
        for (auto [a, ri] : it->second)
            if (a == v) {
                auto t = std::make_shared<ParseTree>();
                t->var = v;
                t->rule = ri;
                t->children.push_back(w[i]);
                return t;
            }
        return nullptr;
    }
    for (int ri = 0; ri < static_cast<int>(g.rules.size()); ++ri) {
        const Rule& r = g.rules[ri];
        if (r.lhs[0].var != v || r.rhs.size() != 2) continue;
        for (int split = 1; split < len; ++split) {
            if (!table.at(i, split, r.rhs[0].var) ||
                !table.at(i + split, len - split, r.rhs[1].var))
                continue;
            auto t = std::make_shared<ParseTree>();
            t->var = v;
            t->rule = ri;
            t->children.push_back(first_tree(g, idx, table, w, i, split, r.rhs[0].var));
            t->children.push_back(
                first_tree(g, idx, table, w, i + split, len - split, r.rhs[1].var));
            return t;
        }
    }
    return nullptr;
}

struct PathNode {
    const ParseTree* node;
    int i, len;  // span in w
};

int tree_depth(const ParseTree* t) {
    int d = 0;
    for (const auto& c : t->children)
        if (std::holds_alternative<ParseTreePtr>(c))
            d = std::max(d, tree_depth(std::get<ParseTreePtr>(c).get()));
    return d + 1;
}

}  // namespace

CflPump cfl_pump_decompose(const Grammar& g, const Word& w) {
    require_cnf(g, "cfl_pump_decompose");
    BigInt p = 1;
    for (int i = 0; i < g.n_vars(); ++i) p *= 2;
    if (BigInt(w.size()) <= p) throw InputError("word not longer than the pumping constant");
    if (!cyk_member(g, w)) throw InputError("word not generated by the grammar");

    CnfIndex idx(g);
    CykTable table = cyk_fill(g, w);
    ParseTreePtr root = first_tree(g, idx, table, w, 0, static_cast<int>(w.size()), g.start);

    // walk down a longest root-to-leaf path, recording variable nodes and spans
    std::vector<PathNode> path;
    const ParseTree* cur = root.get();
    int i = 0, len = static_cast<int>(w.size());
    for (;;) {
        path.push_back({cur, i, len});
        const ParseTree* next = nullptr;
        int next_i = i, next_len = len;
        int best_depth = -1;
        int offset = 0;
        for (const auto& c : cur->children) {
            if (std::holds_alternative<Symbol>(c)) {
                ++offset;
                continue;
            }
            const ParseTree* child = std::get<ParseTreePtr>(c).get();
            Word sub = tree_frontier(std::get<ParseTreePtr>(c));
            int d = tree_depth(child);
            if (d > best_depth) {
                best_depth = d;
                next = child;
                next_i = i + offset;
                next_len = static_cast<int>(sub.size());
            }
            offset += static_cast<int>(sub.size());
        }
        if (!next) break;
        cur = next;
        i = next_i;
        len = next_len;
    }

    // deepest repeated variable among the last |V|+1 nodes of the path
    int window = std::min<int>(g.n_vars() + 1, static_cast<int>(path.size()));
    int lo = static_cast<int>(path.size()) - window;
    int upper = -1, lower = -1;
    // deepest pair: maximize the lower occurrence, then the upper one
    for (int b = static_cast<int>(path.size()) - 1; b > lo && lower < 0; --b)
        for (int a = b - 1; a >= lo && lower < 0; --a)
            if (path[a].node->var == path[b].node->var) {
                upper = a;
                lower = b;
            }
    if (lower < 0)
        throw StructureError("no repeated variable on the longest path; the word is too short");

    const PathNode& un = path[upper];
    const PathNode& ln = path[lower];
    CflPump out;
    out.p = p;
    out.u = w.substr(0, un.i);
    out.v = w.substr(un.i, ln.i - un.i);
    out.x = w.substr(ln.i, ln.len);
    out.y = w.substr(ln.i + ln.len, (un.i + un.len) - (ln.i + ln.len));
    out.z = w.substr(un.i + un.len);
    return out;
}

}  // namespace fl
