#include "fl/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>

#include "fl/counter.hpp"
#include "fl/errors.hpp"
#include "fl/fa.hpp"
#include "fl/fa_ops.hpp"
#include "fl/grammar_ops.hpp"
#include "fl/json_io.hpp"
#include "fl/minimize.hpp"
#include "fl/pda.hpp"
#include "fl/regex.hpp"
#include "fl/rewriting.hpp"

namespace fl {

namespace {

constexpr int kYes = 0, kNo = 1, kUsage = 2, kError = 3;

template <typename T>
const T& content_as(const Document& d, const char* want) {
    if (!std::holds_alternative<T>(d.content))
        throw InputError(d.path + " does not hold a " + want + " document");
    return std::get<T>(d.content);
}

AcceptMode mode_from(const std::string& s) {
    if (s == "exists") return AcceptMode::Exists;
    if (s == "forall") return AcceptMode::ForAll;
    if (s == "parity") return AcceptMode::Parity;
    throw InputError("unknown mode \"" + s + "\" (use exists|forall|parity)");
}

void write_output(const std::string& json, const std::string& out_path, std::ostream& out) {
    if (out_path.empty()) {
        out << json;
        return;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f) throw InputError("cannot write " + out_path);
    f << json;
}

std::vector<Word> words_to_run(const std::string& word_arg, const std::string& word_file,
                               bool word_given) {
    std::vector<Word> words;
    if (!word_file.empty()) {
        std::ifstream f(word_file, std::ios::binary);
        if (!f) throw InputError("cannot open " + word_file);
        std::string line;
        while (std::getline(f, line)) {
            if (!line.empty() && line.back() == '\r') line.pop_back();
            words.push_back(utf8_decode(line));
        }
    } else if (word_given) {
        words.push_back(utf8_decode(word_arg));
    } else {
        throw InputError("a word argument or --word-file is required");
    }
    return words;
}

int verdict_batch(const std::vector<Word>& words, const std::function<bool(const Word&)>& member,
                  std::ostream& out) {
    bool all = true;
    for (const Word& w : words) {
        bool ok = member(w);
        all = all && ok;
        if (words.size() > 1)
            out << utf8_encode(w) << ": " << (ok ? "yes" : "no") << "\n";
        else
            out << (ok ? "yes" : "no") << "\n";
    }
    return all ? kYes : kNo;
}

}  // namespace

int run_command(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"formal-language toolkit"};
    app.require_subcommand(1);

    // shared option storage
    std::string doc_path, doc_path2, word_arg, word_file, out_path;
    std::string mode_str = "exists", op_str = "and", regex_text, alphabet_str;
    bool middle_third = false, unambiguous = false, word_given = false;
    std::size_t budget = 64, steps = 1000;
    int maxlen = 8;
    std::size_t tree_limit = 16;

    int status = kYes;
    std::function<void()> action;

    auto add_word = [&](CLI::App* cmd) {
        cmd->add_option_function<std::string>(
               "word", [&](const std::string& s) { word_arg = s; word_given = true; },
               "input word, one symbol per scalar");
        cmd->add_option("--word-file", word_file, "newline-separated words");
    };

    // run MACHINE [WORD]
    {
        auto* cmd = app.add_subcommand("run", "run a machine on words");
        cmd->add_option("machine", doc_path, "machine document")->required();
        add_word(cmd);
        cmd->add_option("--mode", mode_str, "exists|forall|parity (finite automata)");
        cmd->add_option("--budget", budget, "stack-depth budget for NPDA search");
        action = [&] {
            Document d = load_document(doc_path);
            auto words = words_to_run(word_arg, word_file, word_given);
            std::function<bool(const Word&)> member;
            if (std::holds_alternative<Fa>(d.content)) {
                const Fa& m = std::get<Fa>(d.content);
                AcceptMode mode = mode_from(mode_str);
                member = [&m, mode](const Word& w) { return nfa_run(m, w, mode); };
            } else if (std::holds_alternative<Pda>(d.content)) {
                const Pda& p = std::get<Pda>(d.content);
                std::size_t b = budget;
                member = [&p, b](const Word& w) {
                    return p.deterministic ? dpda_run(p, w) : npda_run(p, w, {b, 1'000'000});
                };
            } else if (std::holds_alternative<CounterMachine>(d.content)) {
                const CounterMachine& m = std::get<CounterMachine>(d.content);
                member = [&m](const Word& w) { return ca_run(m, w); };
            } else {
                throw InputError("run expects an automaton, PDA, or counter machine; "
                                 "use tm-run for Turing machines");
            }
            status = verdict_batch(words, member, out);
        };
        cmd->callback([&] { action(); });
    }
    // determinize IN [-o OUT] [--mode]
    {
        auto* cmd = app.add_subcommand("determinize", "NFA to DFA");
        cmd->add_option("machine", doc_path)->required();
        cmd->add_option("-o,--output", out_path, "output document path");
        cmd->add_option("--mode", mode_str, "exists|forall|parity");
        cmd->callback([&] {
            Document d = load_document(doc_path);
            Fa dfa = determinize(content_as<Fa>(d, "finite automaton"), mode_from(mode_str));
            write_output(to_json(dfa), out_path, out);
        });
    }
    {
        auto* cmd = app.add_subcommand("minimize", "minimal DFA");
        cmd->add_option("machine", doc_path)->required();
        cmd->add_option("-o,--output", out_path);
        cmd->callback([&] {
            Document d = load_document(doc_path);
            write_output(to_json(minimize(content_as<Fa>(d, "finite automaton"))), out_path, out);
        });
    }
    {
        auto* cmd = app.add_subcommand("equiv", "language equivalence of two DFAs");
        cmd->add_option("machine1", doc_path)->required();
        cmd->add_option("machine2", doc_path2)->required();
        cmd->callback([&] {
            Document d1 = load_document(doc_path), d2 = load_document(doc_path2);
            auto witness = equivalence_check(content_as<Fa>(d1, "finite automaton"),
                                             content_as<Fa>(d2, "finite automaton"));
            if (!witness) {
                out << "equivalent\n";
            } else {
                out << utf8_encode(*witness) << "\n";
                status = kNo;
            }
        });
    }
    {
        auto* cmd = app.add_subcommand("complement", "language complement of a DFA");
        cmd->add_option("machine", doc_path)->required();
        cmd->add_option("-o,--output", out_path);
        cmd->callback([&] {
            Document d = load_document(doc_path);
            write_output(to_json(complement(content_as<Fa>(d, "finite automaton"))), out_path,
                         out);
        });
    }
    {
        auto* cmd = app.add_subcommand("product", "parallel product of two DFAs");
        cmd->add_option("machine1", doc_path)->required();
        cmd->add_option("machine2", doc_path2)->required();
        cmd->add_option("--op", op_str, "and|or|xor");
        cmd->add_option("-o,--output", out_path);
        cmd->callback([&] {
            BoolOp op = op_str == "and"  ? BoolOp::And
                        : op_str == "or" ? BoolOp::Or
                        : op_str == "xor"
                            ? BoolOp::Xor
                            : throw InputError("unknown --op \"" + op_str + "\"");
            Document d1 = load_document(doc_path), d2 = load_document(doc_path2);
            write_output(to_json(product(content_as<Fa>(d1, "finite automaton"),
                                         content_as<Fa>(d2, "finite automaton"), op)),
                         out_path, out);
        });
    }
    auto binary_fa_cmd = [&](const char* name, const char* help, Fa (*fn)(const Fa&, const Fa&)) {
        auto* cmd = app.add_subcommand(name, help);
        cmd->add_option("machine1", doc_path)->required();
        cmd->add_option("machine2", doc_path2)->required();
        cmd->add_option("-o,--output", out_path);
        cmd->callback([&, fn] {
            Document d1 = load_document(doc_path), d2 = load_document(doc_path2);
            write_output(to_json(fn(content_as<Fa>(d1, "finite automaton"),
                                    content_as<Fa>(d2, "finite automaton"))),
                         out_path, out);
        });
    };
    binary_fa_cmd("concat", "concatenation of two automata", concatenate);
    binary_fa_cmd("interleave", "interleaving of two automata", interleave);
    auto unary_fa_cmd = [&](const char* name, const char* help, Fa (*fn)(const Fa&)) {
        auto* cmd = app.add_subcommand(name, help);
        cmd->add_option("machine", doc_path)->required();
        cmd->add_option("-o,--output", out_path);
        cmd->callback([&, fn] {
            Document d = load_document(doc_path);
            write_output(to_json(fn(content_as<Fa>(d, "finite automaton"))), out_path, out);
        });
    };
    unary_fa_cmd("star", "Kleene star of an automaton", star);
    unary_fa_cmd("reverse", "reversal of an automaton", reverse);
    {
        auto* cmd = app.add_subcommand("half", "first halves (or middle thirds) of the language");
        cmd->add_option("machine", doc_path)->required();
        cmd->add_flag("--middle-third", middle_third, "middle thirds instead of first halves");
        cmd->add_option("-o,--output", out_path);
        cmd->callback([&] {
            Document d = load_document(doc_path);
            write_output(to_json(fraction_language(
                             content_as<Fa>(d, "finite automaton"),
                             middle_third ? Fraction::MiddleThird : Fraction::FirstHalf)),
                         out_path, out);
        });
    }
    {
        auto* cmd = app.add_subcommand("regex2nfa", "compile a regular expression");
        cmd->add_option("regex", regex_text)->required();
        cmd->add_option("--alphabet", alphabet_str, "extra alphabet symbols");
        cmd->add_option("-o,--output", out_path);
        cmd->callback([&] {
            std::vector<Symbol> extra;
            for (Symbol a : utf8_decode(alphabet_str)) extra.push_back(a);
            write_output(to_json(regex_to_nfa(parse_regex(regex_text), extra)), out_path, out);
        });
    }
    {
        auto* cmd = app.add_subcommand("nfa2regex", "extract a regular expression");
        cmd->add_option("machine", doc_path)->required();
        cmd->callback([&] {
            Document d = load_document(doc_path);
            out << regex_to_string(nfa_to_regex(content_as<Fa>(d, "finite automaton"))) << "\n";
        });
    }
    {
        auto* cmd = app.add_subcommand("match", "match a word against a regular expression");
        cmd->add_option("regex", regex_text)->required();
        add_word(cmd);
        cmd->callback([&] {
            RegexPtr r = parse_regex(regex_text);
            auto words = words_to_run(word_arg, word_file, word_given);
            status = verdict_batch(
                words, [&](const Word& w) { return regex_match(r, w); }, out);
        });
    }
    auto grammar_conv_cmd = [&](const char* name, const char* help,
                                Grammar (*fn)(const Grammar&)) {
        auto* cmd = app.add_subcommand(name, help);
        cmd->add_option("grammar", doc_path)->required();
        cmd->add_option("-o,--output", out_path);
        cmd->callback([&, fn] {
            Document d = load_document(doc_path);
            write_output(to_json(fn(content_as<Grammar>(d, "grammar"))), out_path, out);
        });
    };
    grammar_conv_cmd("cnf", "convert to Chomsky normal form", to_cnf);
    grammar_conv_cmd("gnf", "convert to Greibach normal form", to_gnf);
    {
        auto* cmd = app.add_subcommand("member", "context-free membership (CYK)");
        cmd->add_option("grammar", doc_path)->required();
        add_word(cmd);
        cmd->callback([&] {
            Document d = load_document(doc_path);
            const Grammar& g = content_as<Grammar>(d, "grammar");
            Grammar cnf = g.cls == GrammarClass::Cnf ? g : to_cnf(g);
            auto words = words_to_run(word_arg, word_file, word_given);
            status = verdict_batch(
                words, [&](const Word& w) { return cyk_member(cnf, w); }, out);
        });
    }
    {
        auto* cmd = app.add_subcommand("trees", "enumerate parse trees");
        cmd->add_option("grammar", doc_path)->required();
        add_word(cmd);
        cmd->add_option("--limit", tree_limit, "maximum number of trees");
        cmd->callback([&] {
            Document d = load_document(doc_path);
            const Grammar& g = content_as<Grammar>(d, "grammar");
            Grammar cnf = g.cls == GrammarClass::Cnf ? g : to_cnf(g);
            auto words = words_to_run(word_arg, word_file, word_given);
            auto trees = enumerate_parse_trees(cnf, words.at(0), tree_limit);
            out << trees.size() << "\n";
            for (const auto& t : trees) out << tree_to_string(cnf, t) << "\n";
            status = trees.empty() ? kNo : kYes;
        });
    }
    {
        auto* cmd = app.add_subcommand("count", "word counts by length");
        cmd->add_option("grammar", doc_path)->required();
        cmd->add_option("--maxlen", maxlen, "largest length to count");
        cmd->add_flag("--unambiguous", unambiguous,
                      "assert unambiguity and use the derivation-count DP");
        cmd->callback([&] {
            Document d = load_document(doc_path);
            const Grammar& g = content_as<Grammar>(d, "grammar");
            Grammar cnf = g.cls == GrammarClass::Cnf ? g : to_cnf(g);
            auto counts = count_words(cnf, maxlen, unambiguous);
            for (std::size_t i = 0; i < counts.size(); ++i)
                out << (i ? " " : "") << counts[i];
            out << "\n";
        });
    }
    {
        auto* cmd = app.add_subcommand("pump", "pumping decomposition of an accepted word");
        cmd->add_option("document", doc_path, "DFA or CNF grammar")->required();
        add_word(cmd);
        cmd->callback([&] {
            Document d = load_document(doc_path);
            auto words = words_to_run(word_arg, word_file, word_given);
            const Word& w = words.at(0);
            if (std::holds_alternative<Fa>(d.content)) {
                auto dec = pump_decompose(std::get<Fa>(d.content), w);
                out << "p=" << dec.p << " x=" << utf8_encode(dec.x) << " y=" << utf8_encode(dec.y)
                    << " z=" << utf8_encode(dec.z) << "\n";
            } else {
                const Grammar& g = content_as<Grammar>(d, "grammar");
                auto dec = cfl_pump_decompose(g, w);
                out << "p=" << dec.p << " u=" << utf8_encode(dec.u) << " v=" << utf8_encode(dec.v)
                    << " x=" << utf8_encode(dec.x) << " y=" << utf8_encode(dec.y)
                    << " z=" << utf8_encode(dec.z) << "\n";
            }
        });
    }
    {
        auto* cmd = app.add_subcommand("cfg2pda", "grammar to NPDA");
        cmd->add_option("grammar", doc_path)->required();
        cmd->add_option("-o,--output", out_path);
        cmd->callback([&] {
            Document d = load_document(doc_path);
            write_output(to_json(cfg_to_npda(content_as<Grammar>(d, "grammar"))), out_path, out);
        });
    }
    {
        auto* cmd = app.add_subcommand("pda2cfg", "NPDA to grammar");
        cmd->add_option("pda", doc_path)->required();
        cmd->add_option("-o,--output", out_path);
        cmd->callback([&] {
            Document d = load_document(doc_path);
            write_output(to_json(npda_to_cfg(content_as<Pda>(d, "PDA"))), out_path, out);
        });
    }
    {
        auto* cmd = app.add_subcommand("csg-member", "noncontracting-grammar membership");
        cmd->add_option("grammar", doc_path)->required();
        add_word(cmd);
        cmd->add_option("--budget", budget, "visited-form budget");
        cmd->callback([&] {
            Document d = load_document(doc_path);
            const Grammar& g = content_as<Grammar>(d, "grammar");
            auto words = words_to_run(word_arg, word_file, word_given);
            std::size_t b = budget > 1024 ? budget : 8'000'000;
            status = verdict_batch(
                words, [&](const Word& w) { return csg_member(g, w, b); }, out);
        });
    }
    {
        auto* cmd = app.add_subcommand("tm-run", "run a Turing machine");
        cmd->add_option("machine", doc_path)->required();
        add_word(cmd);
        cmd->add_option("--steps", steps, "step limit before timeout");
        cmd->callback([&] {
            Document d = load_document(doc_path);
            const TuringMachine& tm = content_as<TuringMachine>(d, "Turing machine");
            auto words = words_to_run(word_arg, word_file, word_given);
            auto r = tm_run(tm, words.at(0), steps);
            switch (r.verdict) {
                case TmVerdict::Accept: out << "accept\n"; break;
                case TmVerdict::Reject:
                    out << "reject\n";
                    status = kNo;
                    break;
                case TmVerdict::Timeout:
                    out << "timeout\n";
                    status = kUsage;
                    break;
            }
        });
    }
    {
        auto* cmd = app.add_subcommand("validate", "load and validate a document");
        cmd->add_option("document", doc_path)->required();
        cmd->callback([&] {
            load_document(doc_path);
            out << "ok\n";
        });
    }

    try {
        std::vector<std::string> args(argv.rbegin(), argv.rend());
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {  // --help
            out << app.help();
            return kYes;
        }
        err << "usage error: " << e.what() << "\n";
        return kUsage;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kError;
    }
    return status;
}

}  // namespace fl
