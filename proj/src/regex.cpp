#include "fl/regex.hpp"

#include <algorithm>
#include <map>

#include "fl/errors.hpp"
#include "fl/fa_ops.hpp"

namespace fl {

namespace {
RegexPtr node(Regex::Kind k, Symbol s = 0, RegexPtr l = nullptr, RegexPtr r = nullptr) {
    auto p = std::make_shared<Regex>();
    p->kind = k;
    p->sym = s;
    p->left = std::move(l);
    p->right = std::move(r);
    return p;
}
}  // namespace

RegexPtr rx_empty() { return node(Regex::Kind::Empty); }
RegexPtr rx_epsilon() { return node(Regex::Kind::Epsilon); }
RegexPtr rx_literal(Symbol a) { return node(Regex::Kind::Literal, a); }
RegexPtr rx_concat(RegexPtr l, RegexPtr r) {
    return node(Regex::Kind::Concat, 0, std::move(l), std::move(r));
}
RegexPtr rx_union(RegexPtr l, RegexPtr r) {
    return node(Regex::Kind::Union, 0, std::move(l), std::move(r));
}
RegexPtr rx_star(RegexPtr x) { return node(Regex::Kind::Star, 0, std::move(x)); }

namespace {

// Simplifying combinators used by state elimination. Only the identities
// 0+x=x, 0x=0, _x=x (and mirrors) are applied.
RegexPtr s_union(RegexPtr l, RegexPtr r) {
    if (!l || l->kind == Regex::Kind::Empty) return r;
    if (!r || r->kind == Regex::Kind::Empty) return l;
    return rx_union(std::move(l), std::move(r));
}
RegexPtr s_concat(RegexPtr l, RegexPtr r) {
    if (!l || !r || l->kind == Regex::Kind::Empty || r->kind == Regex::Kind::Empty)
        return rx_empty();
    if (l->kind == Regex::Kind::Epsilon) return r;
    if (r->kind == Regex::Kind::Epsilon) return l;
    return rx_concat(std::move(l), std::move(r));
}
RegexPtr s_star(RegexPtr x) {
    if (!x || x->kind == Regex::Kind::Empty || x->kind == Regex::Kind::Epsilon)
        return rx_epsilon();
    return rx_star(std::move(x));
}

// Recursive-descent parser over decoded scalars.
struct Parser {
    Word text;
    std::size_t pos = 0;

    bool at_end() const { return pos >= text.size(); }
    Symbol peek() const { return text[pos]; }

    bool atom_start() const {
        if (at_end()) return false;
        Symbol c = peek();
        return c != U'+' && c != U'*' && c != U')';
    }

    RegexPtr parse_union() {
        RegexPtr l = parse_concat();
        while (!at_end() && peek() == U'+') {
            ++pos;
            if (!atom_start()) throw ParseError("dangling '+'", pos);
            l = rx_union(std::move(l), parse_concat());
        }
        return l;
    }

    RegexPtr parse_concat() {
        if (!atom_start()) throw ParseError("expected an expression", pos);
        RegexPtr l = parse_postfix();
        while (atom_start()) l = rx_concat(std::move(l), parse_postfix());
        return l;
    }

    RegexPtr parse_postfix() {
        RegexPtr x = parse_atom();
        while (!at_end() && peek() == U'*') {
            ++pos;
            x = rx_star(std::move(x));
        }
        return x;
    }

    RegexPtr parse_atom() {
        if (at_end()) throw ParseError("unexpected end of expression", pos);
        Symbol c = text[pos];
        if (c == U'(') {
            std::size_t open = pos++;
            RegexPtr inner = parse_union();
            if (at_end() || peek() != U')') throw ParseError("unbalanced '('", open);
            ++pos;
            return inner;
        }
        if (c == U')') throw ParseError("unbalanced ')'", pos);
        if (c == U'*') throw ParseError("dangling '*'", pos);
        ++pos;
        if (c == U'@' || c == U'∅') return rx_empty();
        if (c == U'_' || c == U'ε') return rx_epsilon();
        if (c == U'\\') {
            if (at_end()) throw ParseError("dangling escape", pos - 1);
            return rx_literal(text[pos++]);
        }
        return rx_literal(c);
    }
};

}  // namespace

RegexPtr parse_regex(const std::string& utf8_text) {
    Parser p{utf8_decode(utf8_text)};
    RegexPtr r = p.parse_union();
    if (!p.at_end()) throw ParseError("trailing input after expression", p.pos);
    return r;
}

namespace {

int precedence(Regex::Kind k) {
    switch (k) {
        case Regex::Kind::Union: return 0;
        case Regex::Kind::Concat: return 1;
        default: return 2;
    }
}

void print(const RegexPtr& r, std::string& out, int min_prec) {
    int prec = precedence(r->kind);
    if (prec < min_prec) out += "(";
    switch (r->kind) {
        case Regex::Kind::Empty: out += "@"; break;
        case Regex::Kind::Epsilon: out += "_"; break;
        case Regex::Kind::Literal: {
            Symbol c = r->sym;
            if (c == U'@' || c == U'_' || c == U'+' || c == U'*' || c == U'(' || c == U')' ||
                c == U'\\')
                out += "\\";
            out += utf8_encode(c);
            break;
        }
        case Regex::Kind::Concat:
            print(r->left, out, 1);
            print(r->right, out, 1);
            break;
        case Regex::Kind::Union:
            print(r->left, out, 0);
            out += "+";
            print(r->right, out, 1);
            break;
        case Regex::Kind::Star:
            print(r->left, out, 2);
            out += "*";
            break;
    }
    if (prec < min_prec) out += ")";
}

}  // namespace

std::string regex_to_string(const RegexPtr& r) {
    std::string out;
    print(r, out, 0);
    return out;
}

std::set<Symbol> regex_symbols(const RegexPtr& r) {
    std::set<Symbol> out;
    if (!r) return out;
    if (r->kind == Regex::Kind::Literal) out.insert(r->sym);
    if (r->left)
        for (Symbol s : regex_symbols(r->left)) out.insert(s);
    if (r->right)
        for (Symbol s : regex_symbols(r->right)) out.insert(s);
    return out;
}

namespace {

Fa compile(const RegexPtr& r, const std::vector<Symbol>& alphabet) {
    switch (r->kind) {
        case Regex::Kind::Empty: {
            Fa m;
            m.alphabet = alphabet;
            m.start = m.add_state("e0", false);
            return m;
        }
        case Regex::Kind::Epsilon: {
            Fa m;
            m.alphabet = alphabet;
            m.start = m.add_state("q0", true);
            return m;
        }
        case Regex::Kind::Literal: {
            Fa m;
            m.alphabet = alphabet;
            int s = m.add_state("q0", false);
            int t = m.add_state("q1", true);
            m.add_edge(s, r->sym, t);
            m.start = s;
            return m;
        }
        case Regex::Kind::Concat:
            return concatenate(compile(r->left, alphabet), compile(r->right, alphabet));
        case Regex::Kind::Union: {
            Fa l = compile(r->left, alphabet);
            Fa rr = compile(r->right, alphabet);
            Fa m;
            m.alphabet = alphabet;
            int off1 = 0, off2 = l.size();
            for (const Fa* part : {&l, &rr})
                for (int s = 0; s < part->size(); ++s)
                    m.add_state(part->names[s], part->accepting[s]);
            for (const auto& [part, off] : {std::pair<const Fa*, int>{&l, off1}, {&rr, off2}})
                for (int s = 0; s < part->size(); ++s) {
                    for (const auto& [a, tos] : part->delta[s])
                        for (int t : tos) m.add_edge(off + s, a, off + t);
                    for (int t : part->eps[s]) m.add_eps(off + s, off + t);
                }
            m.start = m.add_state("alt", false);
            m.add_eps(m.start, off1 + l.start);
            m.add_eps(m.start, off2 + rr.start);
            return m;
        }
        case Regex::Kind::Star: return star(compile(r->left, alphabet));
    }
    throw StructureError("malformed regex node");
}

}  // namespace

Fa regex_to_nfa(const RegexPtr& r, const std::vector<Symbol>& extra_alphabet) {
    std::set<Symbol> syms = regex_symbols(r);
    syms.insert(extra_alphabet.begin(), extra_alphabet.end());
    return compile(r, std::vector<Symbol>(syms.begin(), syms.end()));
}

namespace {

// Generalized automaton for state elimination: edges carry expressions.
struct Gnfa {
    int n = 0;
    std::map<std::pair<int, int>, RegexPtr> edge;

    RegexPtr get(int u, int v) const {
        auto it = edge.find({u, v});
        return it == edge.end() ? nullptr : it->second;
    }
    void merge(int u, int v, RegexPtr r) {
        if (!r || r->kind == Regex::Kind::Empty) return;
        edge[{u, v}] = s_union(get(u, v), std::move(r));
    }
};

}  // namespace

RegexPtr nfa_to_regex(const Fa& m, const std::vector<int>& elimination_order) {
    Gnfa g;
    int sink = m.size();
    g.n = m.size() + 1;
    for (int s = 0; s < m.size(); ++s) {
        for (const auto& [a, tos] : m.delta[s])
            for (int t : tos) g.merge(s, t, rx_literal(a));
        for (int t : m.eps[s]) g.merge(s, t, rx_epsilon());
        if (m.accepting[s]) g.merge(s, sink, rx_epsilon());
    }

    std::vector<int> pending;
    for (int s = 0; s < m.size(); ++s)
        if (s != m.start) pending.push_back(s);
    // honor the requested order first
    std::vector<int> order;
    for (int s : elimination_order) {
        auto it = std::find(pending.begin(), pending.end(), s);
        if (it != pending.end()) {
            order.push_back(s);
            pending.erase(it);
        }
    }

    auto eliminate = [&](int s) {
        RegexPtr loop = g.get(s, s);
        std::vector<std::pair<std::pair<int, int>, RegexPtr>> in, out;
        for (const auto& [uv, r] : g.edge) {
            if (uv.second == s && uv.first != s) in.push_back({uv, r});
            if (uv.first == s && uv.second != s) out.push_back({uv, r});
        }
        for (const auto& [uv_in, r_in] : in)
            for (const auto& [uv_out, r_out] : out) {
                RegexPtr path = r_in;
                if (loop) path = s_concat(path, s_star(loop));
                path = s_concat(path, r_out);
                g.merge(uv_in.first, uv_out.second, path);
            }
        for (auto it = g.edge.begin(); it != g.edge.end();)
            it = (it->first.first == s || it->first.second == s) ? g.edge.erase(it) : ++it;
    };

    for (int s : order) eliminate(s);
    while (!pending.empty()) {
        // fewest (in-degree * out-degree) first, then lowest index
        int best = -1;
        long best_score = -1;
        for (int s : pending) {
            long indeg = 0, outdeg = 0;
            for (const auto& [uv, r] : g.edge) {
                if (uv.second == s && uv.first != s) ++indeg;
                if (uv.first == s && uv.second != s) ++outdeg;
            }
            long score = indeg * outdeg;
            if (best < 0 || score < best_score) {
                best = s;
                best_score = score;
            }
        }
        eliminate(best);
        pending.erase(std::find(pending.begin(), pending.end(), best));
    }

    RegexPtr loop = g.get(m.start, m.start);
    RegexPtr to_sink = g.get(m.start, sink);
    if (!to_sink) return rx_empty();
    if (!loop) return to_sink;
    return s_concat(s_star(loop), to_sink);
}

RegexPtr nfa_to_regex(const Fa& m) { return nfa_to_regex(m, {}); }

bool regex_match(const RegexPtr& r, const Word& w) {
    std::set<Symbol> syms = regex_symbols(r);
    for (Symbol a : w)
        if (!syms.count(a)) return false;
    Fa dfa = determinize(regex_to_nfa(r), AcceptMode::Exists);
    return dfa_run(dfa, w);
}

RegexPtr reverse_regex(const RegexPtr& r) {
    switch (r->kind) {
        case Regex::Kind::Empty:
        case Regex::Kind::Epsilon:
        case Regex::Kind::Literal: return r;
        case Regex::Kind::Concat: return rx_concat(reverse_regex(r->right), reverse_regex(r->left));
        case Regex::Kind::Union: return rx_union(reverse_regex(r->left), reverse_regex(r->right));
        case Regex::Kind::Star: return rx_star(reverse_regex(r->left));
    }
    throw StructureError("malformed regex node");
}

}  // namespace fl
