#include "fl/corpus.hpp"

#include "fl/errors.hpp"

namespace fl::corpus {

Fa nobb_dfa() {
    Fa m;
    m.deterministic = true;
    m.add_alphabet(U"ab");
    m.add_state("1", true);
    m.add_state("2", true);
    m.add_state("3", false);
    m.add_edge(0, U'a', 0);
    m.add_edge(0, U'b', 1);
    m.add_edge(1, U'a', 0);
    m.add_edge(1, U'b', 2);
    m.add_edge(2, U'a', 2);
    m.add_edge(2, U'b', 2);
    return m;
}

Fa nobb6_dfa() {
    // each state of nobb split into two copies that alternate targets
    Fa base = nobb_dfa();
    Fa m;
    m.deterministic = true;
    m.alphabet = base.alphabet;
    for (int s = 0; s < base.size(); ++s) {
        m.add_state(base.names[s] + "a", base.accepting[s]);
        m.add_state(base.names[s] + "b", base.accepting[s]);
    }
    for (int s = 0; s < base.size(); ++s)
        for (Symbol a : base.alphabet) {
            int t = base.dstep(s, a);
            m.add_edge(2 * s, a, 2 * t + 1);
            m.add_edge(2 * s + 1, a, 2 * t);
        }
    m.start = 2 * base.start;
    return m;
}

Fa evenb_dfa() {
    Fa m;
    m.deterministic = true;
    m.add_alphabet(U"ab");
    m.add_state("even", true);
    m.add_state("odd", false);
    m.add_edge(0, U'a', 0);
    m.add_edge(0, U'b', 1);
    m.add_edge(1, U'a', 1);
    m.add_edge(1, U'b', 0);
    return m;
}

Fa no_c_before_a_dfa() {
    Fa m;
    m.deterministic = true;
    m.add_alphabet(U"abc");
    m.add_state("no-c", true);
    m.add_state("c-seen", true);
    m.add_state("dead", false);
    m.add_edge(0, U'a', 0);
    m.add_edge(0, U'b', 0);
    m.add_edge(0, U'c', 1);
    m.add_edge(1, U'a', 2);
    m.add_edge(1, U'b', 1);
    m.add_edge(1, U'c', 1);
    m.add_edge(2, U'a', 2);
    m.add_edge(2, U'b', 2);
    m.add_edge(2, U'c', 2);
    return m;
}

Fa binary_mod3_dfa() {
    Fa m;
    m.deterministic = true;
    m.add_alphabet(U"01");
    m.add_state("0", true);
    m.add_state("1", false);
    m.add_state("2", false);
    for (int s = 0; s < 3; ++s) {
        m.add_edge(s, U'0', (2 * s) % 3);
        m.add_edge(s, U'1', (2 * s + 1) % 3);
    }
    return m;
}

Fa m3_nfa() { return lk_nfa(3); }

Fa lk_nfa(int k) {
    if (k < 1) throw InputError("lk_nfa requires k >= 1");
    Fa m;
    m.add_alphabet(U"ab");
    m.add_state("1", false);
    m.add_edge(0, U'a', 0);
    m.add_edge(0, U'b', 0);
    for (int i = 1; i <= k; ++i) {
        m.add_state(std::to_string(i + 1), i == k);
        for (Symbol a : {U'a', U'b'})
            if (i > 1) m.add_edge(i - 1, a, i);
    }
    m.add_edge(0, U'b', 1);
    return m;
}

Fa unary_multiple_dfa(int p) {
    if (p < 1) throw InputError("unary_multiple_dfa requires p >= 1");
    Fa m;
    m.deterministic = true;
    m.add_alphabet(U"a");
    for (int i = 0; i < p; ++i) m.add_state(std::to_string(i), i == 0);
    for (int i = 0; i < p; ++i) m.add_edge(i, U'a', (i + 1) % p);
    return m;
}

Fa ab_star_dfa() {
    Fa m;
    m.deterministic = true;
    m.add_alphabet(U"ab");
    m.add_state("even", true);
    m.add_state("mid", false);
    m.add_edge(0, U'a', 1);
    m.add_edge(1, U'b', 0);
    return m;
}

Fa single_word_nfa(const Word& w, const Word& alphabet) {
    Fa m;
    m.add_alphabet(alphabet);
    for (Symbol a : w) m.add_symbol(a);
    m.add_state("q0", w.empty());
    for (std::size_t i = 0; i < w.size(); ++i) {
        m.add_state("q" + std::to_string(i + 1), i + 1 == w.size());
        m.add_edge(static_cast<int>(i), w[i], static_cast<int>(i) + 1);
    }
    return m;
}

Grammar dyck_grammar(int k) {
    if (k < 1 || k > 4) throw InputError("dyck_grammar supports 1 <= k <= 4 bracket pairs");
    const char* lefts = "([{<";
    const char* rights = ")]}>";
    Grammar g;
    g.cls = GrammarClass::ContextFree;
    g.start = g.add_variable("S");
    for (int i = 0; i < k; ++i)
        g.rule("S", {std::string(1, lefts[i]), "S", std::string(1, rights[i]), "S"});
    g.rule("S", {});
    return g;
}

Grammar anbn_grammar() {
    Grammar g;
    g.cls = GrammarClass::ContextFree;
    g.start = g.add_variable("S");
    g.rule("S", {"a", "S", "b"});
    g.rule("S", {});
    return g;
}

Grammar palindrome_grammar() {
    Grammar g;
    g.cls = GrammarClass::ContextFree;
    g.start = g.add_variable("S");
    g.rule("S", {"a", "S", "a"});
    g.rule("S", {"b", "S", "b"});
    g.rule("S", {"a"});
    g.rule("S", {"b"});
    g.rule("S", {});
    return g;
}

Grammar aeqb_grammar() {
    Grammar g;
    g.cls = GrammarClass::ContextFree;
    g.start = g.add_variable("S");
    g.rule("S", {"a", "S", "b", "S"});
    g.rule("S", {"b", "S", "a", "S"});
    g.rule("S", {});
    return g;
}

Grammar ambn_grammar() {
    Grammar g;
    g.cls = GrammarClass::ContextFree;
    g.start = g.add_variable("S");
    g.add_variable("U");
    g.rule("S", {"a", "S"});
    g.rule("S", {"a", "U"});
    g.rule("U", {"a", "U", "b"});
    g.rule("U", {});
    return g;
}

Grammar d1_ambiguous_grammar() {
    Grammar g;
    g.cls = GrammarClass::ContextFree;
    g.start = g.add_variable("S");
    g.rule("S", {"S", "(", "S", ")", "S"});
    g.rule("S", {});
    return g;
}

Grammar d1plus_cnf() {
    // S -> SS | LA | LR ; A -> SR ; L -> ( ; R -> )
    Grammar g;
    g.cls = GrammarClass::Cnf;
    g.start = g.add_variable("S");
    g.add_variable("A");
    g.add_variable("L");
    g.add_variable("R");
    g.rule("S", {"S", "S"});
    g.rule("S", {"L", "A"});
    g.rule("S", {"L", "R"});
    g.rule("A", {"S", "R"});
    g.rule("L", {"("});
    g.rule("R", {")"});
    g.validate();
    return g;
}

Grammar anbn_cnf() {
    // S -> AB | AX ; X -> SB ; A -> a ; B -> b
    Grammar g;
    g.cls = GrammarClass::Cnf;
    g.start = g.add_variable("S");
    g.add_variable("X");
    g.add_variable("A");
    g.add_variable("B");
    g.rule("S", {"A", "B"});
    g.rule("S", {"A", "X"});
    g.rule("X", {"S", "B"});
    g.rule("A", {"a"});
    g.rule("B", {"b"});
    g.validate();
    return g;
}

Grammar endsb_regular_grammar() {
    Grammar g;
    g.cls = GrammarClass::Regular;
    g.start = g.add_variable("S");
    g.add_variable("T");
    g.rule("S", {"a", "S"});
    g.rule("S", {"b", "T"});
    g.rule("T", {"a", "S"});
    g.rule("T", {});
    g.validate();
    return g;
}

Grammar copy_csg() {
    // Builds w with uppercase copies in reverse; a hat marks the uppercase
    // currently converting. A hand-off moves the hat one step deeper and
    // drops the converted letter as a migrant immediately right of it;
    // migrants travel right past unhatted uppercase only (so they can never
    // reorder) and settle left-to-right against the settled F-block once the
    // hat finishes. Premature conversions strand a variable, killing the
    // derivation.
    Grammar g;
    g.cls = GrammarClass::Noncontracting;
    g.start = g.add_variable("S");
    for (const char* v : {"A", "B", "A^", "B^", "Ma", "Mb", "Fa", "Fb"}) g.add_variable(v);

    auto up = [](char c) { return std::string(1, static_cast<char>(c - 'a' + 'A')); };
    for (char c : {'a', 'b'}) {
        std::string t(1, c);
        g.rule("S", {t, "S", up(c)});       // grow: S -> aSA | bSB
        g.rule("S", {t, up(c) + "^"});      // last letter carries the hat
        g.rule2({up(c) + "^"}, {"F" + t});  // final convert: A^ -> Fa
        for (char d : {'a', 'b'}) {
            std::string u(1, d);
            // hand-off: A^ B -> B^ Ma
            g.rule2({up(c) + "^", up(d)}, {up(d) + "^", "M" + t});
            // migrants pass unhatted uppercase
            g.rule2({"M" + t, up(d)}, {up(d), "M" + t});
            // settle against the settled block: Fa Mb -> Fa Fb
            g.rule2({"F" + t, "M" + u}, {"F" + t, "F" + u});
        }
        g.rule2({"F" + t}, {t});  // settled letters become terminals
    }
    g.validate();
    return g;
}

Grammar anbncn_csg() {
    // S -> aSBC | aBC ; CB -> BC ; aB -> ab ; bB -> bb ; bC -> bc ; cC -> cc
    Grammar g;
    g.cls = GrammarClass::Noncontracting;
    g.start = g.add_variable("S");
    g.add_variable("B");
    g.add_variable("C");
    g.rule("S", {"a", "S", "B", "C"});
    g.rule("S", {"a", "B", "C"});
    g.rule2({"C", "B"}, {"B", "C"});
    g.rule2({"a", "B"}, {"a", "b"});
    g.rule2({"b", "B"}, {"b", "b"});
    g.rule2({"b", "C"}, {"b", "c"});
    g.rule2({"c", "C"}, {"c", "c"});
    g.validate();
    return g;
}

Pda dyck_dpda(int k) {
    if (k < 1 || k > 4) throw InputError("dyck_dpda supports 1 <= k <= 4 bracket pairs");
    const char32_t* lefts = U"([{<";
    const char32_t* rights = U")]}>";
    Pda p;
    p.deterministic = true;
    int s = p.add_state("s");
    p.start = s;
    for (int i = 0; i < k; ++i) {
        p.add_input_symbol(lefts[i]);
        p.add_input_symbol(rights[i]);
    }
    std::vector<int> mark(k);
    for (int i = 0; i < k; ++i) mark[i] = p.add_stack_symbol("g" + std::to_string(i + 1));
    for (int i = 0; i < k; ++i) {
        // push on a left bracket under any top
        p.transitions.push_back({s, Pda::kEmptyTop, false, lefts[i], s,
                                 {Pda::Action::Kind::Push, {mark[i]}}});
        for (int j = 0; j < k; ++j)
            p.transitions.push_back({s, mark[j], false, lefts[i], s,
                                     {Pda::Action::Kind::Push, {mark[i]}}});
        // pop on the matching right bracket
        p.transitions.push_back({s, mark[i], false, rights[i], s, {Pda::Action::Kind::Pop, {}}});
    }
    p.accept.push_back({s, Pda::kEmptyTop});
    p.validate();
    return p;
}

Pda anbn_dpda() {
    Pda p;
    p.deterministic = true;
    int up = p.add_state("up");
    int down = p.add_state("down");
    p.start = up;
    p.add_input_symbol(U'a');
    p.add_input_symbol(U'b');
    int mark = p.add_stack_symbol("I");
    p.transitions.push_back({up, Pda::kEmptyTop, false, U'a', up,
                             {Pda::Action::Kind::Push, {mark}}});
    p.transitions.push_back({up, mark, false, U'a', up, {Pda::Action::Kind::Push, {mark}}});
    p.transitions.push_back({up, mark, false, U'b', down, {Pda::Action::Kind::Pop, {}}});
    p.transitions.push_back({down, mark, false, U'b', down, {Pda::Action::Kind::Pop, {}}});
    p.accept.push_back({up, Pda::kEmptyTop});
    p.accept.push_back({down, Pda::kEmptyTop});
    p.validate();
    return p;
}

Pda palindrome_npda() {
    Pda p;
    p.deterministic = false;
    int push = p.add_state("push");
    int match = p.add_state("match");
    p.start = push;
    p.add_input_symbol(U'a');
    p.add_input_symbol(U'b');
    int ga = p.add_stack_symbol("a");
    int gb = p.add_stack_symbol("b");
    auto mark = [&](Symbol c) { return c == U'a' ? ga : gb; };
    for (Symbol c : {U'a', U'b'}) {
        // first half: push
        p.transitions.push_back({push, Pda::kEmptyTop, false, c, push,
                                 {Pda::Action::Kind::Push, {mark(c)}}});
        for (int g : {ga, gb})
            p.transitions.push_back({push, g, false, c, push,
                                     {Pda::Action::Kind::Push, {mark(c)}}});
        // odd palindrome: consume the middle symbol while switching
        p.transitions.push_back({push, Pda::kEmptyTop, false, c, match,
                                 {Pda::Action::Kind::None, {}}});
        for (int g : {ga, gb})
            p.transitions.push_back({push, g, false, c, match, {Pda::Action::Kind::None, {}}});
        // second half: match against the stack
        p.transitions.push_back({match, mark(c), false, c, match, {Pda::Action::Kind::Pop, {}}});
    }
    // even palindrome: switch without consuming
    p.transitions.push_back({push, Pda::kEmptyTop, true, 0, match, {Pda::Action::Kind::None, {}}});
    for (int g : {ga, gb})
        p.transitions.push_back({push, g, true, 0, match, {Pda::Action::Kind::None, {}}});
    p.accept.push_back({match, Pda::kEmptyTop});
    p.validate();
    return p;
}

CounterMachine aeqb_dca() {
    CounterMachine m;
    m.deterministic = true;
    m.counters = 1;
    m.add_symbol(U'a');
    m.add_symbol(U'b');
    int plus = m.add_state("plus");   // counter = #a - #b when nonnegative
    int minus = m.add_state("minus");  // counter = #b - #a when positive
    m.start = plus;
    using Op = CounterMachine::CounterOp;
    auto t = [&](int s, const char* pat, Symbol a, int to, Op op) {
        m.transitions.push_back({s, parse_zero_pattern(pat, 1), a, to, {op}});
    };
    t(plus, "z", U'a', plus, Op::Inc);
    t(plus, "z", U'b', minus, Op::Inc);
    t(plus, "n", U'a', plus, Op::Inc);
    t(plus, "n", U'b', plus, Op::Dec);
    t(minus, "z", U'a', plus, Op::Inc);
    t(minus, "z", U'b', minus, Op::Inc);
    t(minus, "n", U'a', minus, Op::Dec);
    t(minus, "n", U'b', minus, Op::Inc);
    m.accept.push_back({plus, 0});
    m.accept.push_back({minus, 0});
    m.validate();
    return m;
}

CounterMachine not_palindrome_nca() {
    // Count up to a guessed position t, record its symbol, then from some
    // later position with a different symbol count down; accept on zero.
    CounterMachine m;
    m.deterministic = false;
    m.counters = 1;
    m.add_symbol(U'a');
    m.add_symbol(U'b');
    int up = m.add_state("up");
    int hold_a = m.add_state("hold-a");
    int hold_b = m.add_state("hold-b");
    int down = m.add_state("down");
    m.start = up;
    using Op = CounterMachine::CounterOp;
    auto hold_of = [&](Symbol c) { return c == U'a' ? hold_a : hold_b; };
    for (Symbol c : {U'a', U'b'}) {
        for (unsigned pat : {0u, 1u}) {
            m.transitions.push_back({up, pat, c, up, {Op::Inc}});
            m.transitions.push_back({up, pat, c, hold_of(c), {Op::Inc}});
            m.transitions.push_back({hold_a, pat, c, hold_a, {Op::None}});
            m.transitions.push_back({hold_b, pat, c, hold_b, {Op::None}});
        }
        // start counting down at a position whose symbol differs
        Symbol other = c == U'a' ? U'b' : U'a';
        m.transitions.push_back({hold_of(c), 1u, other, down, {Op::Dec}});
        m.transitions.push_back({down, 1u, c, down, {Op::Dec}});
    }
    m.accept.push_back({down, 0});
    m.validate();
    return m;
}

CounterMachine grid2_dca() {
    // states track the signs of #a-#b and #c-#d; counters hold the magnitudes
    CounterMachine m;
    m.deterministic = true;
    m.counters = 2;
    for (Symbol c : {U'a', U'b', U'c', U'd'}) m.add_symbol(c);
    for (const char* n : {"++", "-+", "+-", "--"}) m.add_state(n);
    m.start = 0;
    using Op = CounterMachine::CounterOp;
    auto state_of = [](bool neg1, bool neg2) { return (neg1 ? 1 : 0) + (neg2 ? 2 : 0); };
    for (int s = 0; s < 4; ++s) {
        bool neg1 = s & 1, neg2 = s & 2;
        for (unsigned pat = 0; pat < 4; ++pat) {
            bool z1 = !(pat & 1), z2 = !(pat & 2);
            for (Symbol c : {U'a', U'b', U'c', U'd'}) {
                bool first = c == U'a' || c == U'b';   // touches counter 1
                bool positive = c == U'a' || c == U'c';  // moves its difference up
                bool zero = first ? z1 : z2;
                bool neg = first ? neg1 : neg2;
                Op op;
                bool new_neg = neg;
                if (zero) {
                    op = Op::Inc;
                    new_neg = !positive;
                } else {
                    op = (positive != neg) ? Op::Inc : Op::Dec;
                }
                std::vector<Op> ops = {Op::None, Op::None};
                ops[first ? 0 : 1] = op;
                int to = state_of(first ? new_neg : neg1, first ? neg2 : new_neg);
                m.transitions.push_back({s, pat, c, to, ops});
            }
        }
    }
    for (int s = 0; s < 4; ++s) m.accept.push_back({s, 0});  // both counters zero
    m.validate();
    return m;
}

TuringMachine anbn_tm() {
    TuringMachine tm;
    tm.blank = U'_';
    tm.add_tape_symbol(U'_');
    for (Symbol c : {U'a', U'b', U'X', U'Y'}) tm.add_tape_symbol(c);
    tm.input_alphabet = {U'a', U'b'};
    int s0 = tm.add_state("scan");
    int s1 = tm.add_state("seek-b");
    int s2 = tm.add_state("rewind");
    int s3 = tm.add_state("verify");
    int acc = tm.add_state("accept");
    tm.start = s0;
    tm.accept = acc;
    // mark a leftmost a, find the first unmarked b, mark it, rewind
    tm.set_transition(s0, U'a', U'X', s1, +1);
    tm.set_transition(s0, U'Y', U'Y', s3, +1);
    tm.set_transition(s0, U'_', U'_', acc, +1);
    tm.set_transition(s1, U'a', U'a', s1, +1);
    tm.set_transition(s1, U'Y', U'Y', s1, +1);
    tm.set_transition(s1, U'b', U'Y', s2, -1);
    tm.set_transition(s2, U'a', U'a', s2, -1);
    tm.set_transition(s2, U'Y', U'Y', s2, -1);
    tm.set_transition(s2, U'X', U'X', s0, +1);
    tm.set_transition(s3, U'Y', U'Y', s3, +1);
    tm.set_transition(s3, U'_', U'_', acc, +1);
    tm.validate();
    return tm;
}

TuringMachine loop_tm() {
    TuringMachine tm;
    tm.blank = U'_';
    tm.add_tape_symbol(U'_');
    tm.add_tape_symbol(U'a');
    tm.add_tape_symbol(U'b');
    tm.input_alphabet = {U'a', U'b'};
    int s0 = tm.add_state("spin");
    int acc = tm.add_state("accept");
    tm.start = s0;
    tm.accept = acc;
    tm.set_transition(s0, U'_', U'_', s0, +1);
    tm.set_transition(s0, U'a', U'a', s0, +1);
    tm.set_transition(s0, U'b', U'b', s0, +1);
    tm.validate();
    return tm;
}

TuringMachine rightscan_tm() {
    TuringMachine tm;
    tm.blank = U'_';
    tm.add_tape_symbol(U'_');
    tm.add_tape_symbol(U'a');
    tm.add_tape_symbol(U'b');
    tm.input_alphabet = {U'a', U'b'};
    int s0 = tm.add_state("scan");
    int acc = tm.add_state("accept");
    tm.start = s0;
    tm.accept = acc;
    tm.set_transition(s0, U'a', U'a', s0, +1);
    tm.set_transition(s0, U'b', U'b', s0, +1);
    tm.set_transition(s0, U'_', U'_', acc, +1);
    tm.validate();
    return tm;
}

}  // namespace fl::corpus
