#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "fl/cli.hpp"
#include "fl/corpus.hpp"
#include "fl/errors.hpp"
#include "fl/fa_ops.hpp"
#include "fl/grammar_ops.hpp"
#include "fl/json_io.hpp"
#include "fl/minimize.hpp"
#include "oracle.hpp"

using namespace fl;
namespace fs = std::filesystem;

namespace {

struct CliResult {
    int status;
    std::string out;
    std::string err;
};

CliResult cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int status = run_command(args, out, err);
    return {status, out.str(), err.str()};
}

fs::path temp_file(const std::string& name) {
    return fs::temp_directory_path() / ("fl_test_" + name);
}

}  // namespace

TEST_SUITE_BEGIN("json_cli");

TEST_CASE("automaton documents round-trip") {
    Fa m = corpus::m3_nfa();
    Document d{m, "mem"};
    Document back = parse_document(to_json(d));
    const Fa& m2 = std::get<Fa>(back.content);
    for (const Word& w : oracle::all_words(m.alphabet, 5)) CHECK(nfa_run(m, w) == nfa_run(m2, w));
}

TEST_CASE("duplicate transitions merge and order does not matter") {
    std::string text = R"({
      "type": "nfa",
      "states": ["t", "s"],
      "alphabet": ["b", "a"],
      "start": "s",
      "accepting": ["t"],
      "transitions": [
        {"from": "s", "symbol": "a", "to": ["t"]},
        {"from": "s", "symbol": "a", "to": ["t", "s"]},
        {"from": "t", "symbol": "", "to": ["s"]}
      ]
    })";
    const Fa& m = std::get<Fa>(parse_document(text).content);
    CHECK(m.delta[m.start].at(U'a').size() == 2);
    CHECK(m.eps[1 - m.start].size() == 1);
}

TEST_CASE("schema violations name the problem") {
    CHECK_THROWS_AS(parse_document("{not json"), ParseError);
    CHECK_THROWS_AS(parse_document(R"({"type":"mystery"})"), ValidationError);
    CHECK_THROWS_WITH_AS(
        parse_document(
            R"({"type":"dfa","states":["s"],"alphabet":["a"],"start":"x","accepting":[],"transitions":[]})"),
        "unknown state \"x\"", ValidationError);
    // transition to an unknown state
    CHECK_THROWS_AS(parse_document(R"({"type":"dfa","states":["s"],"alphabet":["a"],
        "start":"s","accepting":[],
        "transitions":[{"from":"s","symbol":"a","to":["ghost"]}]})"),
                    ValidationError);
}

TEST_CASE("every corpus document loads, validates, and matches its builder") {
    auto check_fa = [](const char* file, const Fa& expect) {
        Document d = load_document(fs::path("corpus") / file);
        const Fa& got = std::get<Fa>(d.content);
        for (const Word& w : oracle::all_words(expect.alphabet, 5))
            CHECK(nfa_run(got, w) == nfa_run(expect, w));
    };
    check_fa("nobb_dfa.json", corpus::nobb_dfa());
    check_fa("nobb6_dfa.json", corpus::nobb6_dfa());
    check_fa("evenb_dfa.json", corpus::evenb_dfa());
    check_fa("nocba_dfa.json", corpus::no_c_before_a_dfa());
    check_fa("mod3_dfa.json", corpus::binary_mod3_dfa());
    check_fa("m3_nfa.json", corpus::m3_nfa());
    check_fa("unary2_dfa.json", corpus::unary_multiple_dfa(2));
    check_fa("unary3_dfa.json", corpus::unary_multiple_dfa(3));

    auto check_grammar = [](const char* file, const Grammar& expect) {
        Document d = load_document(fs::path("corpus") / file);
        const Grammar& got = std::get<Grammar>(d.content);
        CHECK(got.cls == expect.cls);
        if (got.cls == GrammarClass::Noncontracting)
            CHECK(csg_words(got, 5) == csg_words(expect, 5));
        else
            CHECK(generate_words(got, 6) == generate_words(expect, 6));
    };
    check_grammar("dyck1.json", corpus::dyck_grammar(1));
    check_grammar("dyck2.json", corpus::dyck_grammar(2));
    check_grammar("anbn.json", corpus::anbn_grammar());
    check_grammar("palindrome.json", corpus::palindrome_grammar());
    check_grammar("aeqb.json", corpus::aeqb_grammar());
    check_grammar("ambn.json", corpus::ambn_grammar());
    check_grammar("d1_ambiguous.json", corpus::d1_ambiguous_grammar());
    check_grammar("endsb_rg.json", corpus::endsb_regular_grammar());
    check_grammar("copy_csg.json", corpus::copy_csg());
    check_grammar("anbncn_csg.json", corpus::anbncn_csg());

    Document dyck3 = load_document("corpus/dyck3_dpda.json");
    CHECK(dpda_run(std::get<Pda>(dyck3.content), utf8_decode("([]{})")));
    Document pal = load_document("corpus/palindrome_npda.json");
    CHECK(npda_run(std::get<Pda>(pal.content), U"abba"));
    Document dca = load_document("corpus/aeqb_dca.json");
    CHECK(ca_run(std::get<CounterMachine>(dca.content), U"ab"));
    Document nca = load_document("corpus/notpal_nca.json");
    CHECK(ca_run(std::get<CounterMachine>(nca.content), U"ab"));
    Document grid = load_document("corpus/grid2_dca.json");
    CHECK(ca_run(std::get<CounterMachine>(grid.content), U"abcd"));
    Document tm = load_document("corpus/anbn_tm.json");
    CHECK(tm_run(std::get<TuringMachine>(tm.content), U"aabb", 500).verdict ==
          TmVerdict::Accept);
    Document loop = load_document("corpus/loop_tm.json");
    CHECK(tm_run(std::get<TuringMachine>(loop.content), U"", 50).verdict == TmVerdict::Timeout);
}

TEST_CASE("cli run and exit codes") {
    auto yes = cli({"run", "corpus/nobb_dfa.json", "bab"});
    CHECK(yes.status == 0);
    CHECK(yes.out == "yes\n");
    auto no = cli({"run", "corpus/nobb_dfa.json", "abb"});
    CHECK(no.status == 1);
    CHECK(no.out == "no\n");
    auto usage = cli({"frobnicate"});
    CHECK(usage.status == 2);
    auto missing = cli({"run", "corpus/missing.json", "x"});
    CHECK(missing.status == 3);
}

TEST_CASE("cli equiv prints the witness") {
    auto r = cli({"equiv", "corpus/unary2_dfa.json", "corpus/unary3_dfa.json"});
    CHECK(r.status == 1);
    CHECK(r.out == "aa\n");
    auto same = cli({"equiv", "corpus/nobb_dfa.json", "corpus/nobb_dfa.json"});
    CHECK(same.status == 0);
    CHECK(same.out == "equivalent\n");
}

TEST_CASE("cli minimize writes a revalidating document") {
    fs::path out = temp_file("min.json");
    auto r = cli({"minimize", "corpus/nobb6_dfa.json", "-o", out.string()});
    REQUIRE(r.status == 0);
    Document d = load_document(out);
    CHECK(std::get<Fa>(d.content).size() == 3);
    fs::remove(out);
}

TEST_CASE("cli count prints the Catalan prefix") {
    auto r = cli({"count", "corpus/dyck1.json", "--maxlen", "8"});
    CHECK(r.status == 0);
    CHECK(r.out == "1 0 1 0 2 0 5 0 14\n");
}

TEST_CASE("cli conversions revalidate and round-trip") {
    for (auto args : std::vector<std::vector<std::string>>{
             {"determinize", "corpus/m3_nfa.json"},
             {"complement", "corpus/nobb_dfa.json"},
             {"product", "corpus/unary2_dfa.json", "corpus/unary3_dfa.json", "--op", "and"},
             {"concat", "corpus/nobb_dfa.json", "corpus/evenb_dfa.json"},
             {"star", "corpus/nobb_dfa.json"},
             {"reverse", "corpus/m3_nfa.json"},
             {"interleave", "corpus/nobb_dfa.json", "corpus/evenb_dfa.json"},
             {"half", "corpus/nobb_dfa.json"},
             {"cnf", "corpus/dyck2.json"},
             {"gnf", "corpus/dyck1.json"},
             {"cfg2pda", "corpus/dyck2.json"},
             {"pda2cfg", "corpus/dyck1_pda.json"},
             {"regex2nfa", "(a+ba)*(_+b)"},
         }) {
        auto r = cli(args);
        REQUIRE_MESSAGE(r.status == 0, args[0], ": ", r.err);
        CHECK_NOTHROW(parse_document(r.out));
    }
}

TEST_CASE("cli match, member, trees, pump, csg-member, tm-run") {
    CHECK(cli({"match", "(a+ba)*(_+b)", "bab"}).status == 0);
    CHECK(cli({"match", "(a+ba)*(_+b)", "abb"}).status == 1);
    CHECK(cli({"member", "corpus/dyck2.json", "([])[]"}).status == 0);
    CHECK(cli({"member", "corpus/dyck2.json", "[(])"}).status == 1);
    auto trees = cli({"trees", "corpus/d1_ambiguous.json", "()()"});
    CHECK(trees.status == 0);
    CHECK(trees.out.substr(0, 2) == "2\n");
    auto pump = cli({"pump", "corpus/nobb_dfa.json", "aaa"});
    CHECK(pump.status == 0);
    CHECK(pump.out == "p=3 x= y=a z=aa\n");
    CHECK(cli({"csg-member", "corpus/copy_csg.json", "abab"}).status == 0);
    CHECK(cli({"csg-member", "corpus/copy_csg.json", "aba"}).status == 1);
    CHECK(cli({"tm-run", "corpus/anbn_tm.json", "aabb", "--steps", "500"}).status == 0);
    CHECK(cli({"tm-run", "corpus/anbn_tm.json", "aab", "--steps", "500"}).status == 1);
    auto timeout = cli({"tm-run", "corpus/loop_tm.json", "", "--steps", "50"});
    CHECK(timeout.status == 2);
    CHECK(timeout.out == "timeout\n");
}

TEST_CASE("cli nfa2regex output matches the machine") {
    auto r = cli({"nfa2regex", "corpus/nobb_dfa.json"});
    REQUIRE(r.status == 0);
    std::string text = r.out.substr(0, r.out.size() - 1);
    auto back = cli({"match", text, "bab"});
    CHECK(back.status == 0);
    CHECK(cli({"match", text, "abb"}).status == 1);
}

TEST_CASE("cli word files batch words") {
    fs::path words = temp_file("words.txt");
    {
        std::ofstream f(words);
        f << "bab\nabb\n";
    }
    auto r = cli({"run", "corpus/nobb_dfa.json", "--word-file", words.string()});
    CHECK(r.status == 1);  // not all accepted
    CHECK(r.out == "bab: yes\nabb: no\n");
    fs::remove(words);
}

TEST_CASE("cli validate") {
    CHECK(cli({"validate", "corpus/dyck2.json"}).status == 0);
    fs::path bad = temp_file("bad.json");
    {
        std::ofstream f(bad);
        f << R"({"type":"dfa","states":["s"],"alphabet":["a"],"start":"s","accepting":[],
             "transitions":[{"from":"s","symbol":"a","to":["ghost"]}]})";
    }
    CHECK(cli({"validate", bad.string()}).status == 3);
    fs::remove(bad);
}

TEST_SUITE_END();
