#include "fl/grammar.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include "fl/errors.hpp"

namespace fl {

int Grammar::add_variable(std::string name) {
    variables.push_back(std::move(name));
    return n_vars() - 1;
}

void Grammar::add_terminal(Symbol t) {
    auto it = std::lower_bound(terminals.begin(), terminals.end(), t);
    if (it == terminals.end() || *it != t) terminals.insert(it, t);
}

bool Grammar::has_terminal(Symbol t) const {
    return std::binary_search(terminals.begin(), terminals.end(), t);
}

int Grammar::find_variable(const std::string& name) const {
    for (int v = 0; v < n_vars(); ++v)
        if (variables[v] == name) return v;
    return -1;
}

GSym Grammar::sym(const std::string& token) {
    int v = find_variable(token);
    if (v >= 0) return GSym::variable(v);
    Symbol t = utf8_decode_symbol(token);
    add_terminal(t);
    return GSym::terminal(t);
}

void Grammar::rule(const std::string& lhs_token, const std::vector<std::string>& rhs_tokens) {
    rule2({lhs_token}, rhs_tokens);
}

void Grammar::rule2(const std::vector<std::string>& lhs_tokens,
                    const std::vector<std::string>& rhs_tokens) {
    Rule r;
    for (const auto& t : lhs_tokens) r.lhs.push_back(sym(t));
    for (const auto& t : rhs_tokens) r.rhs.push_back(sym(t));
    rules.push_back(std::move(r));
}

bool Grammar::single_variable_lhs() const {
    for (const Rule& r : rules)
        if (r.lhs.size() != 1 || !r.lhs[0].is_var()) return false;
    return true;
}

bool Grammar::has_rule(const std::vector<GSym>& lhs, const std::vector<GSym>& rhs) const {
    for (const Rule& r : rules)
        if (r.lhs == lhs && r.rhs == rhs) return true;
    return false;
}

namespace {

void check_sym(const Grammar& g, const GSym& s, const char* where) {
    if (s.is_var()) {
        if (s.var >= g.n_vars()) throw ValidationError(std::string("rule ") + where +
                                                       " references an unknown variable");
    } else if (!g.has_terminal(s.term)) {
        throw ValidationError(std::string("rule ") + where +
                              " references a symbol outside the terminal alphabet");
    }
}

bool start_on_any_rhs(const Grammar& g) {
    for (const Rule& r : g.rules)
        for (const GSym& s : r.rhs)
            if (s.is_var() && s.var == g.start) return true;
    return false;
}

}  // namespace

void Grammar::validate() const {
    if (variables.empty()) throw ValidationError("grammar has no variables");
    if (start < 0 || start >= n_vars()) throw ValidationError("start variable out of range");
    if (!std::is_sorted(terminals.begin(), terminals.end()) ||
        std::adjacent_find(terminals.begin(), terminals.end()) != terminals.end())
        throw ValidationError("terminal alphabet must be sorted and duplicate-free");
    for (const Rule& r : rules) {
        if (r.lhs.empty()) throw ValidationError("rule with empty left-hand side");
        for (const GSym& s : r.lhs) check_sym(*this, s, "lhs");
        for (const GSym& s : r.rhs) check_sym(*this, s, "rhs");
    }
    bool start_free = !start_on_any_rhs(*this);
    auto sanctioned_eps = [&](const Rule& r) {
        return r.rhs.empty() && r.lhs.size() == 1 && r.lhs[0] == GSym::variable(start) &&
               start_free;
    };
    switch (cls) {
        case GrammarClass::ContextFree:
            if (!single_variable_lhs())
                throw ValidationError("context-free rules must have a single variable lhs");
            break;
        case GrammarClass::Regular:
            for (const Rule& r : rules) {
                if (r.lhs.size() != 1 || !r.lhs[0].is_var())
                    throw ValidationError("regular rules must have a single variable lhs");
                bool ok = r.rhs.empty() || (r.rhs.size() == 2 && !r.rhs[0].is_var() &&
                                            r.rhs[1].is_var());
                if (!ok)
                    throw ValidationError(
                        "regular rules must be A -> t B or A -> epsilon");
            }
            break;
        case GrammarClass::Cnf:
            for (const Rule& r : rules) {
                if (r.lhs.size() != 1 || !r.lhs[0].is_var())
                    throw ValidationError("CNF rules must have a single variable lhs");
                bool term = r.rhs.size() == 1 && !r.rhs[0].is_var();
                bool pair = r.rhs.size() == 2 && r.rhs[0].is_var() && r.rhs[1].is_var();
                if (!(term || pair || sanctioned_eps(r)))
                    throw ValidationError(
                        "CNF rules must be A -> t or A -> B C (S -> epsilon only when S is "
                        "absent from every rhs)");
            }
            break;
        case GrammarClass::Gnf:
            for (const Rule& r : rules) {
                if (r.lhs.size() != 1 || !r.lhs[0].is_var())
                    throw ValidationError("GNF rules must have a single variable lhs");
                if (sanctioned_eps(r)) continue;
                bool ok = !r.rhs.empty() && !r.rhs[0].is_var();
                for (std::size_t i = 1; ok && i < r.rhs.size(); ++i) ok = r.rhs[i].is_var();
                if (!ok)
                    throw ValidationError(
                        "GNF rules must be a terminal followed by variables (S -> epsilon only "
                        "when S is absent from every rhs)");
            }
            break;
        case GrammarClass::Noncontracting:
            for (const Rule& r : rules) {
                if (sanctioned_eps(r)) continue;
                if (r.lhs.size() > r.rhs.size())
                    throw ValidationError(
                        "noncontracting rules must satisfy |lhs| <= |rhs| (only the sanctioned "
                        "S -> epsilon may shrink)");
            }
            break;
    }
}

namespace {

void require_context_free(const Grammar& g, const char* op) {
    if (g.cls == GrammarClass::Noncontracting || !g.single_variable_lhs())
        throw StructureError(std::string(op) + " requires a context-free grammar");
}

// Nullable variables of a context-free grammar.
std::vector<bool> nullable_set(const Grammar& g) {
    std::vector<bool> nullable(g.n_vars(), false);
    bool changed = true;
    while (changed) {
        changed = false;
        for (const Rule& r : g.rules) {
            if (nullable[r.lhs[0].var]) continue;
            bool all = true;
            for (const GSym& s : r.rhs)
                if (!s.is_var() || !nullable[s.var]) {
                    all = false;
                    break;
                }
            if (all) {
                nullable[r.lhs[0].var] = true;
                changed = true;
            }
        }
    }
    return nullable;
}

// Copy of g with epsilon rules removed; language preserved except for the
// membership of the empty word (returned through eps_in_language).
Grammar strip_epsilon(const Grammar& g, bool& eps_in_language) {
    std::vector<bool> nullable = nullable_set(g);
    eps_in_language = nullable[g.start];
    Grammar r;
    r.variables = g.variables;
    r.terminals = g.terminals;
    r.start = g.start;
    r.cls = GrammarClass::ContextFree;
    std::set<std::pair<std::vector<GSym>, std::vector<GSym>>> seen;
    for (const Rule& rule : g.rules) {
        // emit every variant that drops some subset of nullable occurrences
        std::vector<int> optional;  // positions of nullable variables
        for (std::size_t i = 0; i < rule.rhs.size(); ++i)
            if (rule.rhs[i].is_var() && nullable[rule.rhs[i].var])
                optional.push_back(static_cast<int>(i));
        std::size_t subsets = std::size_t{1} << optional.size();
        for (std::size_t mask = 0; mask < subsets; ++mask) {
            std::vector<GSym> rhs;
            std::size_t opt_idx = 0;
            for (std::size_t i = 0; i < rule.rhs.size(); ++i) {
                bool drop = false;
                if (opt_idx < optional.size() && optional[opt_idx] == static_cast<int>(i)) {
                    drop = (mask >> opt_idx) & 1;
                    ++opt_idx;
                }
                if (!drop) rhs.push_back(rule.rhs[i]);
            }
            if (rhs.empty()) continue;
            if (seen.insert({rule.lhs, rhs}).second)
                r.rules.push_back({rule.lhs, std::move(rhs)});
        }
    }
    return r;
}

// Minimal terminal-yield length per variable; -1 when the variable derives
// no terminal word.
std::vector<long> min_yields(const Grammar& g) {
    std::vector<long> best(g.n_vars(), -1);
    bool changed = true;
    while (changed) {
        changed = false;
        for (const Rule& r : g.rules) {
            long total = 0;
            bool known = true;
            for (const GSym& s : r.rhs) {
                if (!s.is_var()) {
                    total += 1;
                } else if (best[s.var] < 0) {
                    known = false;
                    break;
                } else {
                    total += best[s.var];
                }
            }
            if (!known) continue;
            int v = r.lhs[0].var;
            if (best[v] < 0 || total < best[v]) {
                best[v] = total;
                changed = true;
            }
        }
    }
    return best;
}

}  // namespace

std::set<Word> generate_words(const Grammar& g, int maxlen, std::size_t budget) {
    require_context_free(g, "generate_words");
    bool eps_member = false;
    Grammar stripped = strip_epsilon(g, eps_member);
    std::vector<long> yield = min_yields(stripped);

    std::set<Word> words;
    if (eps_member) words.insert(Word());
    if (yield[stripped.start] < 0) return words;

    // leftmost breadth-first derivation over sentential forms
    std::vector<std::vector<Rule>> by_var(stripped.n_vars());
    for (const Rule& r : stripped.rules) by_var[r.lhs[0].var].push_back(r);

    auto min_total = [&](const std::vector<GSym>& form) -> long {
        long total = 0;
        for (const GSym& s : form) {
            if (!s.is_var())
                total += 1;
            else if (yield[s.var] < 0)
                return -1;
            else
                total += yield[s.var];
        }
        return total;
    };

    std::set<std::vector<GSym>> seen;
    std::deque<std::vector<GSym>> queue;
    std::vector<GSym> init = {GSym::variable(stripped.start)};
    seen.insert(init);
    queue.push_back(init);
    std::size_t expanded = 0;
    while (!queue.empty()) {
        std::vector<GSym> form = queue.front();
        queue.pop_front();
        if (++expanded > budget)
            throw ResourceError("generate_words exceeded its form budget");
        std::size_t leftmost = form.size();
        for (std::size_t i = 0; i < form.size(); ++i)
            if (form[i].is_var()) {
                leftmost = i;
                break;
            }
        if (leftmost == form.size()) {
            Word w;
            for (const GSym& s : form) w.push_back(s.term);
            words.insert(std::move(w));
            continue;
        }
        for (const Rule& r : by_var[form[leftmost].var]) {
            std::vector<GSym> next;
            next.reserve(form.size() + r.rhs.size() - 1);
            next.insert(next.end(), form.begin(), form.begin() + leftmost);
            next.insert(next.end(), r.rhs.begin(), r.rhs.end());
            next.insert(next.end(), form.begin() + leftmost + 1, form.end());
            long low = min_total(next);
            if (low < 0 || low > maxlen) continue;
            if (seen.insert(next).second) queue.push_back(std::move(next));
        }
    }
    return words;
}

Grammar remove_useless(const Grammar& g) {
    require_context_free(g, "remove_useless");
    std::vector<long> yield = min_yields(g);
    std::vector<bool> productive(g.n_vars());
    for (int v = 0; v < g.n_vars(); ++v) productive[v] = yield[v] >= 0;

    // reachability through rules whose rhs is fully productive
    std::vector<bool> reachable(g.n_vars(), false);
    std::deque<int> queue;
    reachable[g.start] = true;
    queue.push_back(g.start);
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        for (const Rule& r : g.rules) {
            if (r.lhs[0].var != v) continue;
            bool ok = true;
            for (const GSym& s : r.rhs)
                if (s.is_var() && !productive[s.var]) ok = false;
            if (!ok) continue;
            for (const GSym& s : r.rhs)
                if (s.is_var() && !reachable[s.var]) {
                    reachable[s.var] = true;
                    queue.push_back(s.var);
                }
        }
    }

    Grammar r;
    r.cls = g.cls;
    r.terminals = g.terminals;
    std::vector<int> remap(g.n_vars(), -1);
    for (int v = 0; v < g.n_vars(); ++v)
        if (reachable[v] && productive[v]) remap[v] = r.add_variable(g.variables[v]);
    if (remap[g.start] < 0) {
        // empty language: keep the start with no rules
        remap[g.start] = r.add_variable(g.variables[g.start]);
    }
    r.start = remap[g.start];
    for (const Rule& rule : g.rules) {
        if (remap[rule.lhs[0].var] < 0) continue;
        bool ok = true;
        Rule copy = rule;
        copy.lhs[0].var = remap[copy.lhs[0].var];
        for (GSym& s : copy.rhs)
            if (s.is_var()) {
                if (remap[s.var] < 0) {
                    ok = false;
                    break;
                }
                s.var = remap[s.var];
            }
        if (ok) r.rules.push_back(std::move(copy));
    }
    return r;
}

namespace {

// Appends a renamed copy of src's variables and rules; returns the offset.
int append_grammar(Grammar& r, const Grammar& src, const std::string& tag) {
    int offset = r.n_vars();
    for (const std::string& name : src.variables) r.add_variable(name + tag);
    for (Symbol t : src.terminals) r.add_terminal(t);
    for (const Rule& rule : src.rules) {
        Rule copy = rule;
        for (GSym& s : copy.lhs)
            if (s.is_var()) s.var += offset;
        for (GSym& s : copy.rhs)
            if (s.is_var()) s.var += offset;
        r.rules.push_back(std::move(copy));
    }
    return offset;
}

}  // namespace

Grammar grammar_union(const Grammar& g1, const Grammar& g2) {
    require_context_free(g1, "grammar_union");
    require_context_free(g2, "grammar_union");
    Grammar r;
    r.cls = GrammarClass::ContextFree;
    r.start = r.add_variable("S");
    int o1 = append_grammar(r, g1, "#1");
    int o2 = append_grammar(r, g2, "#2");
    r.rules.push_back({{GSym::variable(r.start)}, {GSym::variable(o1 + g1.start)}});
    r.rules.push_back({{GSym::variable(r.start)}, {GSym::variable(o2 + g2.start)}});
    return r;
}

Grammar grammar_concat(const Grammar& g1, const Grammar& g2) {
    require_context_free(g1, "grammar_concat");
    require_context_free(g2, "grammar_concat");
    Grammar r;
    r.cls = GrammarClass::ContextFree;
    r.start = r.add_variable("S");
    int o1 = append_grammar(r, g1, "#1");
    int o2 = append_grammar(r, g2, "#2");
    r.rules.push_back({{GSym::variable(r.start)},
                       {GSym::variable(o1 + g1.start), GSym::variable(o2 + g2.start)}});
    return r;
}

Grammar grammar_star(const Grammar& g) {
    require_context_free(g, "grammar_star");
    Grammar r;
    r.cls = GrammarClass::ContextFree;
    r.start = r.add_variable("S");
    int o = append_grammar(r, g, "#1");
    GSym s = GSym::variable(r.start);
    r.rules.push_back({{s}, {s, s}});
    r.rules.push_back({{s}, {GSym::variable(o + g.start)}});
    r.rules.push_back({{s}, {}});
    return r;
}

Grammar grammar_reverse(const Grammar& g) {
    require_context_free(g, "grammar_reverse");
    Grammar r = g;
    for (Rule& rule : r.rules) std::reverse(rule.rhs.begin(), rule.rhs.end());
    return r;
}

}  // namespace fl
