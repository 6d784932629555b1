#include <doctest.h>

#include "fl/corpus.hpp"
#include "fl/errors.hpp"
#include "fl/fa_ops.hpp"
#include "fl/minimize.hpp"
#include "fl/regex.hpp"
#include "oracle.hpp"

using namespace fl;

namespace {
const std::vector<Symbol> kAB = {U'a', U'b'};

bool language_equal(const Fa& a, const Fa& b) {
    return isomorphic(minimize(determinize(a)), minimize(determinize(b)));
}
}  // namespace

TEST_SUITE_BEGIN("regex");

TEST_CASE("parsing builds the expected tree") {
    RegexPtr r = parse_regex("(a+ba)*(_+b)");
    REQUIRE(r->kind == Regex::Kind::Concat);
    const Regex& left = *r->left;
    REQUIRE(left.kind == Regex::Kind::Star);
    REQUIRE(left.left->kind == Regex::Kind::Union);
    CHECK(left.left->left->kind == Regex::Kind::Literal);
    CHECK(left.left->left->sym == U'a');
    REQUIRE(left.left->right->kind == Regex::Kind::Concat);
    CHECK(left.left->right->left->sym == U'b');
    CHECK(left.left->right->right->sym == U'a');
    const Regex& right = *r->right;
    REQUIRE(right.kind == Regex::Kind::Union);
    CHECK(right.left->kind == Regex::Kind::Epsilon);
    CHECK(right.right->sym == U'b');
}

TEST_CASE("parse atoms and aliases") {
    CHECK(parse_regex("_")->kind == Regex::Kind::Epsilon);
    CHECK(parse_regex("@")->kind == Regex::Kind::Empty);
    CHECK(parse_regex("ε")->kind == Regex::Kind::Epsilon);
    CHECK(parse_regex("∅")->kind == Regex::Kind::Empty);
    CHECK(parse_regex("\\+")->sym == U'+');
}

TEST_CASE("parse errors carry a position") {
    CHECK_THROWS_AS(parse_regex("a+"), ParseError);
    CHECK_THROWS_AS(parse_regex("(ab"), ParseError);
    CHECK_THROWS_AS(parse_regex("ab)"), ParseError);
    CHECK_THROWS_AS(parse_regex("*a"), ParseError);
    CHECK_THROWS_AS(parse_regex(""), ParseError);
}

TEST_CASE("printing round-trips through the parser") {
    std::mt19937 rng(21);
    for (int trial = 0; trial < 25; ++trial) {
        Fa m = oracle::random_nfa(rng, 3, kAB);
        RegexPtr r = nfa_to_regex(m);
        RegexPtr back = parse_regex(regex_to_string(r));
        Fa a = regex_to_nfa(r, kAB), b = regex_to_nfa(back, kAB);
        CHECK(language_equal(a, b));
    }
}

TEST_CASE("both paper expressions denote the no-bb language") {
    for (const char* text : {"(a+ba)*(_+b)", "(_+b)(aa*b)*a*"}) {
        Fa m = regex_to_nfa(parse_regex(text));
        CHECK_FALSE(equivalence_check(determinize(m), corpus::nobb_dfa()).has_value());
    }
}

TEST_CASE("the empty-language expression accepts nothing") {
    Fa m = regex_to_nfa(rx_empty(), kAB);
    for (const Word& w : oracle::all_words(kAB, 4)) CHECK_FALSE(nfa_run(m, w));
}

TEST_CASE("regex compilation matches word enumeration") {
    RegexPtr r = parse_regex("(a+ba)*(_+b)");
    CHECK(regex_match(r, U"bab"));
    CHECK(regex_match(r, U""));
    CHECK_FALSE(regex_match(parse_regex("@"), U""));
    CHECK(regex_match(parse_regex("_"), U""));
    CHECK_FALSE(regex_match(parse_regex("ab"), U"abc"));  // foreign symbol, plain mismatch
}

TEST_CASE("state elimination round-trips the corpus machines") {
    for (const Fa& m : {corpus::nobb_dfa(), corpus::evenb_dfa(), corpus::no_c_before_a_dfa(),
                        corpus::binary_mod3_dfa()}) {
        RegexPtr r = nfa_to_regex(m);
        Fa back = regex_to_nfa(r, m.alphabet);
        CHECK_FALSE(equivalence_check(determinize(back), m).has_value());
    }
}

TEST_CASE("an automaton with no accepting states eliminates to the empty language") {
    Fa m;
    m.alphabet = kAB;
    m.add_state("q0", false);
    m.add_state("q1", false);
    m.add_edge(0, U'a', 1);
    m.add_edge(1, U'b', 0);
    RegexPtr r = nfa_to_regex(m);
    Fa back = regex_to_nfa(r, kAB);
    for (const Word& w : oracle::all_words(kAB, 6)) CHECK_FALSE(nfa_run(back, w));
}

TEST_CASE("round trips on random machines") {
    std::mt19937 rng(22);
    for (int trial = 0; trial < 30; ++trial) {
        Fa m = oracle::random_nfa(rng, 2 + trial % 3, kAB, 0.3, trial % 4 ? 0.0 : 0.2);
        Fa back = regex_to_nfa(nfa_to_regex(m), kAB);
        CHECK(language_equal(m, back));
    }
}

TEST_CASE("elimination order does not change the language") {
    Fa m = corpus::nobb_dfa();
    RegexPtr heuristic = nfa_to_regex(m);
    RegexPtr forward = nfa_to_regex(m, {1, 2});
    RegexPtr backward = nfa_to_regex(m, {2, 1});
    Fa a = regex_to_nfa(heuristic, kAB), b = regex_to_nfa(forward, kAB),
       c = regex_to_nfa(backward, kAB);
    CHECK(language_equal(a, b));
    CHECK(language_equal(b, c));
    // a machine where the two orders give syntactically different results
    Fa m3 = corpus::binary_mod3_dfa();
    CHECK(regex_to_string(nfa_to_regex(m3, {1, 2})) !=
          regex_to_string(nfa_to_regex(m3, {2, 1})));
}

TEST_CASE("denotational identities at the language level") {
    std::mt19937 rng(23);
    for (int trial = 0; trial < 12; ++trial) {
        RegexPtr phi = nfa_to_regex(oracle::random_nfa(rng, 3, kAB));
        RegexPtr self_union = rx_union(phi, phi);
        RegexPtr eps_concat = rx_concat(phi, rx_epsilon());
        RegexPtr empty_concat = rx_concat(rx_empty(), phi);
        RegexPtr double_star = rx_star(rx_star(phi));
        for (const Word& w : oracle::all_words(kAB, 5)) {
            bool base = regex_match(phi, w);
            CHECK(regex_match(self_union, w) == base);
            CHECK(regex_match(eps_concat, w) == base);
            CHECK_FALSE(regex_match(empty_concat, w));
            CHECK(regex_match(double_star, w) == regex_match(rx_star(phi), w));
        }
    }
}

TEST_CASE("the reversed expression denotes the reversed language") {
    std::mt19937 rng(24);
    for (int trial = 0; trial < 12; ++trial) {
        Fa m = oracle::random_nfa(rng, 3, kAB);
        RegexPtr r = nfa_to_regex(m);
        Fa reversed_machine = reverse(regex_to_nfa(r, kAB));
        Fa reversed_regex = regex_to_nfa(reverse_regex(r), kAB);
        CHECK(language_equal(reversed_machine, reversed_regex));
    }
}

TEST_SUITE_END();
