#include <doctest.h>

#include "fl/corpus.hpp"
#include "fl/errors.hpp"
#include "fl/rewriting.hpp"
#include "oracle.hpp"

using namespace fl;

TEST_SUITE_BEGIN("rewriting");

TEST_CASE("the copy grammar derives abab and rejects aba") {
    Grammar g = corpus::copy_csg();
    CHECK(csg_member(g, U"abab"));
    CHECK_FALSE(csg_member(g, U"aba"));
}

TEST_CASE("the copy grammar generates exactly the nonempty copy words up to length 6") {
    Grammar g = corpus::copy_csg();
    std::set<Word> expect;
    for (const Word& w : oracle::all_words({U'a', U'b'}, 3))
        if (!w.empty()) expect.insert(w + w);
    CHECK(csg_words(g, 6) == expect);
    int accepted = 0;
    for (const Word& w : oracle::all_words({U'a', U'b'}, 6)) {
        bool member = csg_member(g, w);
        if (member) ++accepted;
        CHECK(member == (expect.count(w) != 0));
    }
    CHECK(accepted == 14);
}

TEST_CASE("the abc-counting grammar") {
    Grammar g = corpus::anbncn_csg();
    CHECK(csg_member(g, U"abc"));
    CHECK_FALSE(csg_member(g, U"abcc"));
    std::set<Word> expect = {U"abc", U"aabbcc"};
    CHECK(csg_words(g, 6) == expect);
}

TEST_CASE("noncontracting validation rejects shrinking rules") {
    Grammar g = corpus::anbncn_csg();
    g.rule2({"B", "C"}, {"b"});
    CHECK_THROWS_AS(g.validate(), ValidationError);

    // S -> eps is sanctioned only while S stays off every rhs
    Grammar e;
    e.cls = GrammarClass::Noncontracting;
    e.start = e.add_variable("S");
    e.add_terminal(U'a');
    e.rules.push_back({{GSym::variable(0)}, {}});
    e.validate();
    CHECK(csg_member(e, U""));
    e.rule("S", {"a", "S"});
    CHECK_THROWS_AS(e.validate(), ValidationError);
}

TEST_CASE("csg_member only accepts epsilon via the sanctioned rule") {
    CHECK_FALSE(csg_member(corpus::copy_csg(), U""));
}

TEST_CASE("the zig-zag machine decides a^n b^n") {
    TuringMachine tm = corpus::anbn_tm();
    CHECK(tm_run(tm, U"aabb", 500).verdict == TmVerdict::Accept);
    CHECK(tm_run(tm, U"aab", 500).verdict == TmVerdict::Reject);
    for (int n = 0; n <= 5; ++n)
        for (int m = 0; m <= 5; ++m) {
            Word w = Word(n, U'a') + Word(m, U'b');
            auto r = tm_run(tm, w, 500);
            CHECK(r.verdict == (n == m ? TmVerdict::Accept : TmVerdict::Reject));
        }
    CHECK(tm_run(tm, U"ba", 500).verdict == TmVerdict::Reject);
    CHECK(tm_run(tm, U"abab", 500).verdict == TmVerdict::Reject);
}

TEST_CASE("runs are deterministic replays") {
    TuringMachine tm = corpus::anbn_tm();
    auto a = tm_run(tm, U"aaabbb", 500);
    auto b = tm_run(tm, U"aaabbb", 500);
    CHECK(a.verdict == b.verdict);
    CHECK(a.steps == b.steps);
}

TEST_CASE("the spinning machine times out and never rejects") {
    TuringMachine tm = corpus::loop_tm();
    for (std::size_t limit : {1u, 10u, 1000u}) {
        auto r = tm_run(tm, U"", limit);
        CHECK(r.verdict == TmVerdict::Timeout);
        CHECK(r.steps == limit);
    }
}

TEST_CASE("the right-scanning machine accepts in |w|+1 steps") {
    TuringMachine tm = corpus::rightscan_tm();
    for (const Word& w : oracle::all_words({U'a', U'b'}, 5)) {
        auto r = tm_run(tm, w, 100);
        CHECK(r.verdict == TmVerdict::Accept);
        CHECK(r.steps == w.size() + 1);
    }
}

TEST_CASE("symbols outside the input alphabet are rejected up front") {
    CHECK_THROWS_AS(tm_run(corpus::rightscan_tm(), U"ax", 10), InputError);
}

TEST_CASE("LBA mode confines the head to the input span") {
    // a machine that walks left immediately
    TuringMachine tm;
    tm.blank = U'_';
    tm.add_tape_symbol(U'_');
    tm.add_tape_symbol(U'a');
    tm.input_alphabet = {U'a'};
    int s0 = tm.add_state("left");
    int acc = tm.add_state("accept");
    tm.start = s0;
    tm.accept = acc;
    tm.set_transition(s0, U'a', U'a', s0, -1);
    tm.set_transition(s0, U'_', U'_', s0, -1);
    tm.lba = true;
    CHECK(tm_run(tm, U"aa", 100).verdict == TmVerdict::Reject);

    // a marker-terminated scanner works entirely inside the span
    TuringMachine scan;
    scan.blank = U'_';
    scan.add_tape_symbol(U'_');
    scan.add_tape_symbol(U'a');
    scan.add_tape_symbol(U'$');
    scan.input_alphabet = {U'a', U'$'};
    int walk = scan.add_state("walk");
    int done = scan.add_state("accept");
    scan.start = walk;
    scan.accept = done;
    scan.set_transition(walk, U'a', U'a', walk, +1);
    scan.set_transition(walk, U'$', U'$', done, -1);
    scan.lba = true;
    std::vector<long> heads;
    auto r = tm_run_trace(scan, U"aaa$", 100, heads);
    CHECK(r.verdict == TmVerdict::Accept);
    for (long h : heads) {
        CHECK(h >= 0);
        CHECK(h < 4);
    }
}

TEST_CASE("a malformed machine fails validation") {
    TuringMachine tm = corpus::rightscan_tm();
    tm.set_transition(tm.accept, U'a', U'a', tm.start, +1);
    CHECK_THROWS_AS(tm.validate(), ValidationError);
}

TEST_SUITE_END();
