#include <doctest.h>

#include "fl/corpus.hpp"
#include "fl/errors.hpp"
#include "fl/fa.hpp"
#include "fl/fa_ops.hpp"
#include "fl/minimize.hpp"
#include "oracle.hpp"

using namespace fl;

namespace {
const std::vector<Symbol> kAB = {U'a', U'b'};

Fa epsilon_only_nfa(const std::vector<Symbol>& alphabet) {
    Fa m;
    m.alphabet = alphabet;
    m.add_state("q0", true);
    return m;
}
}  // namespace

TEST_SUITE_BEGIN("fa_core");

TEST_CASE("dfa_run on the no-bb machine") {
    Fa m = corpus::nobb_dfa();
    m.validate();
    CHECK(dfa_run(m, U"bab"));
    CHECK_FALSE(dfa_run(m, U"abb"));
    CHECK(dfa_run(m, U""));
    CHECK_THROWS_AS(dfa_run(m, U"abc"), InputError);
}

TEST_CASE("dfa extended transition composes at every cut point") {
    Fa m = corpus::binary_mod3_dfa();
    Word w = U"1011010";
    for (std::size_t cut = 0; cut <= w.size(); ++cut) {
        int mid = m.dwalk(m.start, w.substr(0, cut));
        CHECK(m.dwalk(mid, w.substr(cut)) == m.dwalk(m.start, w));
    }
}

TEST_CASE("nfa_run exists on the 3rd-to-last-b machine") {
    Fa m = corpus::m3_nfa();
    // derived by enumerating all computation paths
    oracle::PathOracle abba = oracle::enumerate_paths(m, U"abba");
    CHECK(abba.any_accepting);
    CHECK(nfa_run(m, U"abba", AcceptMode::Exists));
    oracle::PathOracle baaa = oracle::enumerate_paths(m, U"baaa");
    CHECK_FALSE(baaa.any_accepting);
    CHECK_FALSE(nfa_run(m, U"baaa", AcceptMode::Exists));
}

TEST_CASE("empty word acceptance is the closure of the start") {
    Fa m;
    m.alphabet = kAB;
    m.add_state("s", false);
    m.add_state("t", true);
    m.add_eps(0, 1);
    CHECK(nfa_run(m, U"", AcceptMode::Exists));
}

TEST_CASE("parity mode rejects reachable epsilon cycles") {
    Fa m;
    m.alphabet = kAB;
    m.add_state("s", true);
    m.add_state("t", false);
    m.add_eps(0, 1);
    m.add_eps(1, 0);
    CHECK_THROWS_AS(nfa_run(m, U"", AcceptMode::Parity), StructureError);
    CHECK_THROWS_AS(determinize(m, AcceptMode::Parity), StructureError);
}

TEST_CASE("determinize agrees with direct simulation in all three modes") {
    std::mt19937 rng(1234);
    for (int trial = 0; trial < 40; ++trial) {
        Fa m = oracle::random_nfa(rng, 2 + trial % 4, kAB, 0.35, trial % 3 ? 0.0 : 0.15);
        bool eps_free = !m.has_eps();
        Fa de = determinize(m, AcceptMode::Exists);
        Fa da = determinize(m, AcceptMode::ForAll);
        Fa dp = eps_free ? determinize(m, AcceptMode::Parity) : Fa();
        for (const Word& w : oracle::all_words(kAB, 5)) {
            CHECK(dfa_run(de, w) == nfa_run(m, w, AcceptMode::Exists));
            CHECK(dfa_run(da, w) == nfa_run(m, w, AcceptMode::ForAll));
            if (eps_free) CHECK(dfa_run(dp, w) == nfa_run(m, w, AcceptMode::Parity));
        }
    }
}

TEST_CASE("exists and forall modes match the path-enumeration oracle") {
    std::mt19937 rng(99);
    for (int trial = 0; trial < 40; ++trial) {
        Fa m = oracle::random_nfa(rng, 2 + trial % 4, kAB, 0.3, 0.0);  // epsilon-free
        for (const Word& w : oracle::all_words(kAB, 4)) {
            oracle::PathOracle st = oracle::enumerate_paths(m, w, true);
            CHECK(nfa_run(m, w, AcceptMode::Exists) == st.any_accepting);
            bool forall = !st.any_dead && st.all_ends_accepting;
            CHECK(nfa_run(m, w, AcceptMode::ForAll) == forall);
            CHECK(nfa_run(m, w, AcceptMode::Parity) == (st.accepting_paths % 2 == 1));
        }
    }
}

TEST_CASE("determinize of the m3 machine reaches 8 subsets") {
    Fa d = determinize(corpus::m3_nfa(), AcceptMode::Exists);
    CHECK(d.size() == 8);  // derived by breadth-first closure over subsets
    CHECK(minimize(d).size() == 8);
}

TEST_CASE("determinizing a DFA preserves its language") {
    Fa m = corpus::nobb_dfa();
    Fa d = determinize(m, AcceptMode::Exists);
    CHECK_FALSE(equivalence_check(m, d).has_value());
}

TEST_CASE("complement flips membership") {
    Fa m = corpus::nobb_dfa();
    Fa c = complement(m);
    CHECK(dfa_run(c, U"abb"));
    CHECK_FALSE(dfa_run(c, U"bab"));
    CHECK_FALSE(equivalence_check(complement(c), m).has_value());
    Fa all;
    all.alphabet = kAB;
    all.deterministic = true;
    all.add_state("q", true);
    all.add_edge(0, U'a', 0);
    all.add_edge(0, U'b', 0);
    for (const Word& w : oracle::all_words(kAB, 4)) CHECK_FALSE(dfa_run(complement(all), w));
    CHECK_THROWS_AS(complement(corpus::m3_nfa()), StructureError);
}

TEST_CASE("product membership is the boolean of the two memberships") {
    Fa m1 = corpus::nobb_dfa();
    Fa m2 = corpus::evenb_dfa();
    for (BoolOp op : {BoolOp::And, BoolOp::Or, BoolOp::Xor}) {
        Fa p = product(m1, m2, op);
        for (const Word& w : oracle::all_words(kAB, 6)) {
            bool a = dfa_run(m1, w), b = dfa_run(m2, w);
            bool expect = op == BoolOp::And ? (a && b) : op == BoolOp::Or ? (a || b) : (a != b);
            CHECK(dfa_run(p, w) == expect);
        }
    }
    // membership pair checked by direct runs: "aa" in both, "b" only in nobb
    CHECK(dfa_run(product(m1, m2, BoolOp::And), U"aa"));
    CHECK_FALSE(dfa_run(product(m1, m2, BoolOp::And), U"b"));
    CHECK_THROWS_AS(product(m1, corpus::binary_mod3_dfa(), BoolOp::And), InputError);
}

TEST_CASE("a language xor itself is empty") {
    Fa m = corpus::evenb_dfa();
    Fa p = product(m, m, BoolOp::Xor);
    for (const Word& w : oracle::all_words(kAB, 5)) CHECK_FALSE(dfa_run(p, w));
}

TEST_CASE("unary divisibility product needs lcm many states") {
    Fa p = product(corpus::unary_multiple_dfa(2), corpus::unary_multiple_dfa(3), BoolOp::And);
    CHECK(minimize(p).size() == 6);
}

TEST_CASE("equivalence_check returns a shortest witness") {
    Fa l2 = corpus::unary_multiple_dfa(2), l3 = corpus::unary_multiple_dfa(3);
    CHECK_FALSE(equivalence_check(l2, l2).has_value());
    auto w = equivalence_check(l2, l3);
    REQUIRE(w.has_value());
    CHECK(*w == U"aa");  // derived by brute force over words in length order
    CHECK(w->size() < 2 * 3);
}

TEST_CASE("equivalence agrees with exhaustive comparison below n1*n2") {
    std::mt19937 rng(77);
    for (int trial = 0; trial < 60; ++trial) {
        Fa m1 = oracle::random_total_dfa(rng, 2 + trial % 3, kAB);
        Fa m2 = oracle::random_total_dfa(rng, 2 + (trial / 3) % 3, kAB);
        auto witness = equivalence_check(m1, m2);
        bool disagree = false;
        Word shortest;
        for (const Word& w : oracle::all_words(kAB, m1.size() * m2.size() - 1)) {
            if (dfa_run(m1, w) != dfa_run(m2, w)) {
                disagree = true;
                shortest = w;
                break;
            }
        }
        CHECK(witness.has_value() == disagree);
        if (witness) {
            CHECK(witness->size() == shortest.size());  // minimality
            CHECK(dfa_run(m1, *witness) != dfa_run(m2, *witness));
            CHECK(static_cast<int>(witness->size()) < m1.size() * m2.size());
        }
    }
}

TEST_CASE("concatenation matches the set-level definition") {
    Fa m1 = corpus::nobb_dfa(), m2 = corpus::evenb_dfa();
    Fa c = concatenate(m1, m2);
    CHECK(nfa_run(c, U"babaabbab"));
    auto expect =
        oracle::concat_sets(oracle::language(m1, 6), oracle::language(m2, 6), 6);
    for (const Word& w : oracle::all_words(kAB, 6))
        CHECK(nfa_run(c, w) == (expect.count(w) != 0));
}

TEST_CASE("simple forced concatenation") {
    Fa a = corpus::single_word_nfa(U"a", U"ab");
    Fa b = corpus::single_word_nfa(U"b", U"ab");
    Fa c = concatenate(a, b);
    CHECK(nfa_run(c, U"ab"));
    CHECK_FALSE(nfa_run(c, U"ba"));
}

TEST_CASE("concatenation with the epsilon machine is the identity") {
    Fa m = corpus::nobb_dfa();
    Fa c = concatenate(m, epsilon_only_nfa(kAB));
    Fa lhs = minimize(determinize(c));
    CHECK_FALSE(equivalence_check(lhs, m).has_value());
}

TEST_CASE("star matches the set-level definition") {
    Fa ab = corpus::single_word_nfa(U"ab", U"ab");
    Fa s = star(ab);
    CHECK(nfa_run(s, U""));
    CHECK(nfa_run(s, U"abab"));
    CHECK_FALSE(nfa_run(s, U"aba"));
    auto expect = oracle::star_set(oracle::language(ab, 4), 4);
    for (const Word& w : oracle::all_words(kAB, 4))
        CHECK(nfa_run(s, w) == (expect.count(w) != 0));
}

TEST_CASE("star is idempotent at the language level") {
    std::mt19937 rng(5);
    for (int trial = 0; trial < 10; ++trial) {
        Fa m = oracle::random_nfa(rng, 3, kAB);
        Fa s1 = star(m), s2 = star(star(m));
        for (const Word& w : oracle::all_words(kAB, 4)) CHECK(nfa_run(s1, w) == nfa_run(s2, w));
    }
}

TEST_CASE("reverse matches the set-level definition") {
    Fa m = corpus::nobb_dfa();
    Fa r = reverse(m);
    CHECK(nfa_run(r, U"bab"));
    auto expect = oracle::reverse_set(oracle::language(m, 6));
    for (const Word& w : oracle::all_words(kAB, 6))
        CHECK(nfa_run(r, w) == (expect.count(w) != 0));
}

TEST_CASE("double reverse preserves the language") {
    std::mt19937 rng(6);
    for (int trial = 0; trial < 10; ++trial) {
        Fa m = oracle::random_nfa(rng, 3, kAB, 0.3, 0.1);
        Fa rr = reverse(reverse(m));
        for (const Word& w : oracle::all_words(kAB, 4)) CHECK(nfa_run(m, w) == nfa_run(rr, w));
    }
}

TEST_CASE("reversing the k-th-to-last-b language needs k+2 states") {
    Fa r = reverse(corpus::lk_nfa(3));
    CHECK(minimize(determinize(r)).size() == 5);
}

TEST_CASE("interleave recognizes shuffles and nothing else") {
    Word cat = U"cat", tapir = U"tapir";
    Word sigma = U"aciprt";
    Fa m1 = corpus::single_word_nfa(cat, sigma);
    Fa m2 = corpus::single_word_nfa(tapir, sigma);
    Fa w = interleave(m1, m2);
    CHECK(nfa_run(w, U"ctaapitr"));
    CHECK_FALSE(nfa_run(w, U"cat"));
    // every accepted word is a true interleaving, hence has length |u|+|v|
    std::set<Word> expect;
    Word acc;
    oracle::interleavings(cat, tapir, acc, expect);
    int hits = 0;
    for (const Word& x : oracle::all_words({U'a', U'c', U'i', U'p', U'r', U't'}, 8))
        if (nfa_run(w, x)) {
            CHECK(expect.count(x) == 1);
            CHECK(x.size() == cat.size() + tapir.size());
            ++hits;
        }
    CHECK(hits == static_cast<int>(expect.size()));
}

TEST_CASE("interleave with the epsilon machine is the identity") {
    Fa m = corpus::evenb_dfa();
    Fa w = interleave(m, epsilon_only_nfa(kAB));
    for (const Word& x : oracle::all_words(kAB, 5)) CHECK(nfa_run(w, x) == dfa_run(m, x));
}

TEST_CASE("interleave against the set oracle on random machines") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 8; ++trial) {
        Fa m1 = oracle::random_nfa(rng, 2, kAB);
        Fa m2 = oracle::random_nfa(rng, 2, kAB);
        Fa w = interleave(m1, m2);
        auto expect = oracle::interleave_sets(oracle::language(m1, 5), oracle::language(m2, 5), 5);
        for (const Word& x : oracle::all_words(kAB, 5))
            CHECK(nfa_run(w, x) == (expect.count(x) != 0));
    }
}

TEST_CASE("first halves of (ab)*") {
    Fa m = corpus::ab_star_dfa();
    Fa h = fraction_language(m, Fraction::FirstHalf);
    CHECK(nfa_run(h, U"ab"));  // witness: "abab" is in the language
    auto expect = oracle::half_set(oracle::language(m, 8));
    for (const Word& w : oracle::all_words(kAB, 4))
        CHECK(nfa_run(h, w) == (expect.count(w) != 0));
}

TEST_CASE("the empty word is a first half exactly when epsilon is accepted") {
    CHECK(nfa_run(fraction_language(corpus::ab_star_dfa(), Fraction::FirstHalf), U""));
    Fa none = corpus::single_word_nfa(U"ab", U"ab");
    none.deterministic = false;
    Fa det = determinize(none);
    CHECK_FALSE(nfa_run(fraction_language(det, Fraction::FirstHalf), U""));
}

TEST_CASE("fraction languages agree with the brute-force oracle on random DFAs") {
    std::mt19937 rng(8);
    for (int trial = 0; trial < 12; ++trial) {
        Fa m = oracle::random_total_dfa(rng, 3, kAB);
        Fa h = fraction_language(m, Fraction::FirstHalf);
        auto half = oracle::half_set(oracle::language(m, 8));
        for (const Word& w : oracle::all_words(kAB, 4))
            CHECK(nfa_run(h, w) == (half.count(w) != 0));
        Fa t = fraction_language(m, Fraction::MiddleThird);
        auto third = oracle::third_set(oracle::language(m, 9));
        for (const Word& w : oracle::all_words(kAB, 3))
            CHECK(nfa_run(t, w) == (third.count(w) != 0));
    }
}

TEST_CASE("totalize adds a sink only when needed") {
    Fa partial = corpus::ab_star_dfa();
    CHECK_FALSE(partial.total());
    Fa t = totalize(partial);
    CHECK(t.total());
    CHECK(t.size() == partial.size() + 1);
    CHECK(totalize(t).size() == t.size());
}

TEST_CASE("validation catches malformed machines") {
    Fa m;
    m.add_state("a", false);
    m.alphabet = {U'b', U'a'};  // unsorted
    CHECK_THROWS_AS(m.validate(), ValidationError);
    Fa d = corpus::nobb_dfa();
    d.add_eps(0, 1);
    CHECK_THROWS_AS(d.validate(), ValidationError);
}

TEST_SUITE_END();
