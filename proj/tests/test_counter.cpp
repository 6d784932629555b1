#include <doctest.h>

#include "fl/corpus.hpp"
#include "fl/counter.hpp"
#include "fl/errors.hpp"
#include "fl/pda.hpp"
#include "oracle.hpp"

using namespace fl;

namespace {
long count_of(const Word& w, Symbol c) {
    long n = 0;
    for (Symbol x : w)
        if (x == c) ++n;
    return n;
}
}  // namespace

TEST_SUITE_BEGIN("counter");

TEST_CASE("equal-counts machine") {
    CounterMachine m = corpus::aeqb_dca();
    CHECK(ca_run(m, U"ab"));
    CHECK_FALSE(ca_run(m, U"aab"));
    for (const Word& w : oracle::all_words({U'a', U'b'}, 7))
        CHECK(ca_run(m, w) == (count_of(w, U'a') == count_of(w, U'b')));
}

TEST_CASE("complement-of-palindromes machine") {
    CounterMachine m = corpus::not_palindrome_nca();
    CHECK(ca_run(m, U"ab"));
    CHECK_FALSE(ca_run(m, U"aba"));
    for (const Word& w : oracle::all_words({U'a', U'b'}, 7)) {
        Word rev(w.rbegin(), w.rend());
        CHECK(ca_run(m, w) == (w != rev));
    }
}

TEST_CASE("two-counter grid machine") {
    CounterMachine m = corpus::grid2_dca();
    for (const Word& w : oracle::all_words({U'a', U'b', U'c', U'd'}, 5)) {
        bool expect = count_of(w, U'a') == count_of(w, U'b') &&
                      count_of(w, U'c') == count_of(w, U'd');
        CHECK(ca_run(m, w) == expect);
    }
}

TEST_CASE("zero-pattern parsing") {
    CHECK(parse_zero_pattern("zn", 2) == 2u);
    CHECK(parse_zero_pattern("nz", 2) == 1u);
    CHECK(format_zero_pattern(2u, 2) == "zn");
    CHECK_THROWS_AS(parse_zero_pattern("z", 2), InputError);
    CHECK_THROWS_AS(parse_zero_pattern("zx", 2), InputError);
}

TEST_CASE("decrement under a zero pattern is unrepresentable") {
    CounterMachine m = corpus::aeqb_dca();
    m.transitions.push_back({0, 0u, U'a', 0, {CounterMachine::CounterOp::Dec}});
    CHECK_THROWS_AS(m.validate(), ValidationError);
}

TEST_CASE("deterministic machines must be total") {
    CounterMachine m = corpus::aeqb_dca();
    m.transitions.pop_back();
    CHECK_THROWS_AS(m.validate(), ValidationError);
}

TEST_CASE("runs are real time and keep counters nonnegative") {
    // instrumented replay of the deterministic machine
    CounterMachine m = corpus::aeqb_dca();
    for (const Word& w : oracle::all_words({U'a', U'b'}, 6)) {
        int state = m.start;
        std::vector<long> values(m.counters, 0);
        std::size_t steps = 0;
        for (Symbol a : w) {
            unsigned pat = 0;
            for (int i = 0; i < m.counters; ++i)
                if (values[i] != 0) pat |= 1u << i;
            bool moved = false;
            for (const CounterMachine::Trans& t : m.transitions) {
                if (t.state != state || t.pattern != pat || t.sym != a) continue;
                state = t.to;
                for (int i = 0; i < m.counters; ++i) {
                    if (t.ops[i] == CounterMachine::CounterOp::Inc) ++values[i];
                    if (t.ops[i] == CounterMachine::CounterOp::Dec) --values[i];
                    CHECK(values[i] >= 0);
                }
                moved = true;
                break;
            }
            CHECK(moved);
            ++steps;
        }
        CHECK(steps == w.size());
    }
}

TEST_CASE("reachable configurations stay within |S|(t+1)^k") {
    CHECK(count_reachable(corpus::aeqb_dca(), 0) == 1);
    for (int t = 0; t <= 8; ++t) {
        for (const CounterMachine& m :
             {corpus::aeqb_dca(), corpus::not_palindrome_nca(), corpus::grid2_dca()}) {
            std::size_t bound = m.n_states();
            for (int i = 0; i < m.counters; ++i) bound *= (t + 1);
            CHECK(count_reachable(m, t) <= bound);
        }
    }
}

TEST_CASE("grid machine reaches every balanced pair of sums") {
    // after 4 steps the reachable (x, y) values include all splits of 4
    std::size_t n = count_reachable(corpus::grid2_dca(), 4);
    CHECK(n <= 4u * 25u);
    CHECK(n >= 15);  // derived: the distinct (value1, value2) pairs with sum <= 4
}

TEST_CASE("the one-counter machine compiles to an equivalent DPDA") {
    CounterMachine m = corpus::aeqb_dca();
    Pda p = counter_to_dpda(m);
    CHECK(p.deterministic);
    for (const Word& w : oracle::all_words({U'a', U'b'}, 8))
        CHECK(dpda_run(p, w) == ca_run(m, w));
    CHECK_THROWS_AS(counter_to_dpda(corpus::grid2_dca()), InputError);
    CHECK_THROWS_AS(counter_to_dpda(corpus::not_palindrome_nca()), InputError);
}

TEST_SUITE_END();
