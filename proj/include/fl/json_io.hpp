#pragma once

#include <filesystem>
#include <string>
#include <variant>

#include "fl/counter.hpp"
#include "fl/fa.hpp"
#include "fl/grammar.hpp"
#include "fl/pda.hpp"
#include "fl/rewriting.hpp"

namespace fl {

/// A parsed and validated machine or grammar document.
struct Document {
    std::variant<Fa, Grammar, Pda, CounterMachine, TuringMachine> content;
    std::string path;
};

/// Parses one of the JSON document formats, dispatching on "type"
/// ("dfa" | "nfa" | "grammar" | "pda" | "counter" | "tm"). Malformed JSON is
/// a ParseError; schema or invariant violations are ValidationErrors naming
/// the failed check.
Document load_document(const std::filesystem::path& path);
Document parse_document(const std::string& json_text, const std::string& origin = "<string>");

std::string to_json(const Fa& m);
std::string to_json(const Grammar& g);
std::string to_json(const Pda& p);
std::string to_json(const CounterMachine& m);
std::string to_json(const TuringMachine& tm);
std::string to_json(const Document& d);

void save_document(const Document& d, const std::filesystem::path& path);

}  // namespace fl
