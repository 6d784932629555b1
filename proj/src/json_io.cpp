#include "fl/json_io.hpp"

#include <fstream>
#include <json.hpp>
#include <map>

#include "fl/errors.hpp"

namespace fl {

using nlohmann::json;

namespace {

json parse_json(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("malformed JSON: ") + e.what(), e.byte);
    }
}

const json& field(const json& j, const char* name) {
    auto it = j.find(name);
    if (it == j.end()) throw ValidationError(std::string("missing field \"") + name + "\"");
    return *it;
}

std::string str_field(const json& j, const char* name) {
    const json& f = field(j, name);
    if (!f.is_string()) throw ValidationError(std::string("field \"") + name + "\" must be a string");
    return f.get<std::string>();
}

std::vector<std::string> str_list(const json& j, const char* name) {
    const json& f = field(j, name);
    if (!f.is_array()) throw ValidationError(std::string("field \"") + name + "\" must be an array");
    std::vector<std::string> out;
    for (const json& e : f) {
        if (!e.is_string())
            throw ValidationError(std::string("field \"") + name + "\" must hold strings");
        out.push_back(e.get<std::string>());
    }
    return out;
}

// --- finite automata ------------------------------------------------------

Fa fa_from_json(const json& j) {
    std::string type = str_field(j, "type");
    Fa m;
    m.deterministic = type == "dfa";

    std::map<std::string, int> state_of;
    for (const std::string& name : str_list(j, "states")) {
        if (state_of.count(name)) throw ValidationError("duplicate state \"" + name + "\"");
        state_of[name] = m.add_state(name, false);
    }
    for (const std::string& s : str_list(j, "alphabet")) m.add_symbol(utf8_decode_symbol(s));

    auto lookup = [&](const std::string& name) {
        auto it = state_of.find(name);
        if (it == state_of.end()) throw ValidationError("unknown state \"" + name + "\"");
        return it->second;
    };
    m.start = lookup(str_field(j, "start"));
    for (const std::string& name : str_list(j, "accepting")) m.accepting[lookup(name)] = true;

    const json& trans = field(j, "transitions");
    if (!trans.is_array()) throw ValidationError("field \"transitions\" must be an array");
    for (const json& t : trans) {
        int from = lookup(str_field(t, "from"));
        std::string sym = str_field(t, "symbol");
        for (const std::string& to_name : str_list(t, "to")) {
            int to = lookup(to_name);
            if (sym.empty())
                m.add_eps(from, to);  // "" denotes epsilon
            else
                m.add_edge(from, utf8_decode_symbol(sym), to);
        }
    }
    m.validate();
    return m;
}

// Constructions may reuse display names (two q0's after a concatenation);
// documents key states by name, so suffix repeats before writing.
std::vector<std::string> unique_names(const std::vector<std::string>& names) {
    std::vector<std::string> out;
    std::set<std::string> seen;
    for (const std::string& name : names) {
        std::string candidate = name;
        int serial = 2;
        while (!seen.insert(candidate).second)
            candidate = name + "#" + std::to_string(serial++);
        out.push_back(candidate);
    }
    return out;
}

json fa_to_json(const Fa& m_in) {
    Fa m = m_in;
    m.names = unique_names(m.names);
    json j;
    j["type"] = m.deterministic ? "dfa" : "nfa";
    j["states"] = m.names;
    json alpha = json::array();
    for (Symbol a : m.alphabet) alpha.push_back(utf8_encode(a));
    j["alphabet"] = alpha;
    j["start"] = m.names[m.start];
    json acc = json::array();
    for (int s = 0; s < m.size(); ++s)
        if (m.accepting[s]) acc.push_back(m.names[s]);
    j["accepting"] = acc;
    json trans = json::array();
    for (int s = 0; s < m.size(); ++s) {
        for (const auto& [a, tos] : m.delta[s]) {
            json t;
            t["from"] = m.names[s];
            t["symbol"] = utf8_encode(a);
            json to = json::array();
            for (int x : tos) to.push_back(m.names[x]);
            t["to"] = to;
            trans.push_back(t);
        }
        if (!m.eps[s].empty()) {
            json t;
            t["from"] = m.names[s];
            t["symbol"] = "";
            json to = json::array();
            for (int x : m.eps[s]) to.push_back(m.names[x]);
            t["to"] = to;
            trans.push_back(t);
        }
    }
    j["transitions"] = trans;
    return j;
}

// --- grammars -------------------------------------------------------------

GrammarClass class_from_string(const std::string& s) {
    if (s == "cfg") return GrammarClass::ContextFree;
    if (s == "regular") return GrammarClass::Regular;
    if (s == "cnf") return GrammarClass::Cnf;
    if (s == "gnf") return GrammarClass::Gnf;
    if (s == "noncontracting") return GrammarClass::Noncontracting;
    throw ValidationError("unknown grammar class \"" + s + "\"");
}

std::string class_to_string(GrammarClass c) {
    switch (c) {
        case GrammarClass::ContextFree: return "cfg";
        case GrammarClass::Regular: return "regular";
        case GrammarClass::Cnf: return "cnf";
        case GrammarClass::Gnf: return "gnf";
        case GrammarClass::Noncontracting: return "noncontracting";
    }
    return "cfg";
}

Grammar grammar_from_json(const json& j) {
    Grammar g;
    g.cls = class_from_string(str_field(j, "class"));
    std::map<std::string, int> var_of;
    for (const std::string& name : str_list(j, "variables")) {
        if (var_of.count(name)) throw ValidationError("duplicate variable \"" + name + "\"");
        var_of[name] = g.add_variable(name);
    }
    for (const std::string& s : str_list(j, "terminals")) g.add_terminal(utf8_decode_symbol(s));
    std::string start = str_field(j, "start");
    if (!var_of.count(start)) throw ValidationError("unknown start variable \"" + start + "\"");
    g.start = var_of[start];

    auto token = [&](const std::string& s) {
        auto it = var_of.find(s);
        if (it != var_of.end()) return GSym::variable(it->second);
        Symbol t = utf8_decode_symbol(s);
        if (!g.has_terminal(t))
            throw ValidationError("rule token \"" + s + "\" is neither a variable nor a terminal");
        return GSym::terminal(t);
    };
    const json& rules = field(j, "rules");
    if (!rules.is_array()) throw ValidationError("field \"rules\" must be an array");
    for (const json& r : rules) {
        Rule rule;
        for (const std::string& s : str_list(r, "lhs")) rule.lhs.push_back(token(s));
        for (const std::string& s : str_list(r, "rhs")) rule.rhs.push_back(token(s));
        g.rules.push_back(std::move(rule));
    }
    g.validate();
    return g;
}

json grammar_to_json(const Grammar& g_in) {
    Grammar g = g_in;
    g.variables = unique_names(g.variables);
    json j;
    j["type"] = "grammar";
    j["class"] = class_to_string(g.cls);
    j["variables"] = g.variables;
    json terms = json::array();
    for (Symbol t : g.terminals) terms.push_back(utf8_encode(t));
    j["terminals"] = terms;
    j["start"] = g.variables[g.start];
    json rules = json::array();
    auto tok = [&](const GSym& s) {
        return s.is_var() ? g.variables[s.var] : utf8_encode(s.term);
    };
    for (const Rule& r : g.rules) {
        json jr;
        json lhs = json::array(), rhs = json::array();
        for (const GSym& s : r.lhs) lhs.push_back(tok(s));
        for (const GSym& s : r.rhs) rhs.push_back(tok(s));
        jr["lhs"] = lhs;
        jr["rhs"] = rhs;
        rules.push_back(jr);
    }
    j["rules"] = rules;
    return j;
}

// --- push-down automata -----------------------------------------------------

Pda pda_from_json(const json& j) {
    Pda p;
    p.deterministic = field(j, "deterministic").get<bool>();
    std::map<std::string, int> state_of;
    for (const std::string& name : str_list(j, "states")) {
        if (state_of.count(name)) throw ValidationError("duplicate state \"" + name + "\"");
        state_of[name] = p.add_state(name);
    }
    for (const std::string& s : str_list(j, "input_alphabet"))
        p.add_input_symbol(utf8_decode_symbol(s));
    std::map<std::string, int> stack_of;
    for (const std::string& name : str_list(j, "stack_alphabet")) {
        if (name == "empty") throw ValidationError("\"empty\" is reserved, not a stack symbol");
        if (stack_of.count(name)) throw ValidationError("duplicate stack symbol \"" + name + "\"");
        stack_of[name] = p.add_stack_symbol(name);
    }
    auto lookup = [&](const std::string& name) {
        auto it = state_of.find(name);
        if (it == state_of.end()) throw ValidationError("unknown state \"" + name + "\"");
        return it->second;
    };
    auto top_of = [&](const std::string& name) {
        if (name == "empty") return Pda::kEmptyTop;
        auto it = stack_of.find(name);
        if (it == stack_of.end()) throw ValidationError("unknown stack symbol \"" + name + "\"");
        return it->second;
    };
    p.start = lookup(str_field(j, "start"));
    const json& acc = field(j, "accept");
    if (!acc.is_array()) throw ValidationError("field \"accept\" must be an array");
    for (const json& a : acc)
        p.accept.push_back({lookup(str_field(a, "state")), top_of(str_field(a, "top"))});

    const json& trans = field(j, "transitions");
    if (!trans.is_array()) throw ValidationError("field \"transitions\" must be an array");
    for (const json& t : trans) {
        Pda::Trans tr;
        tr.state = lookup(str_field(t, "state"));
        tr.top = top_of(str_field(t, "top"));
        std::string sym = str_field(t, "symbol");
        tr.eps = sym.empty();
        if (!tr.eps) tr.sym = utf8_decode_symbol(sym);
        tr.to = lookup(str_field(t, "to"));
        const json& act = field(t, "action");
        std::string kind = str_field(act, "kind");
        if (kind == "push")
            tr.action.kind = Pda::Action::Kind::Push;
        else if (kind == "pop")
            tr.action.kind = Pda::Action::Kind::Pop;
        else if (kind == "none")
            tr.action.kind = Pda::Action::Kind::None;
        else if (kind == "replace")
            tr.action.kind = Pda::Action::Kind::Replace;
        else
            throw ValidationError("unknown action kind \"" + kind + "\"");
        if (act.contains("payload"))
            for (const std::string& s : str_list(act, "payload"))
                tr.action.payload.push_back(top_of(s));
        p.transitions.push_back(std::move(tr));
    }
    p.validate();
    return p;
}

json pda_to_json(const Pda& p_in) {
    Pda p = p_in;
    p.states = unique_names(p.states);
    p.stack_alphabet = unique_names(p.stack_alphabet);
    json j;
    j["type"] = "pda";
    j["deterministic"] = p.deterministic;
    j["states"] = p.states;
    json in = json::array();
    for (Symbol a : p.input_alphabet) in.push_back(utf8_encode(a));
    j["input_alphabet"] = in;
    j["stack_alphabet"] = p.stack_alphabet;
    j["start"] = p.states[p.start];
    auto top_name = [&](int t) {
        return t == Pda::kEmptyTop ? std::string("empty") : p.stack_alphabet[t];
    };
    json acc = json::array();
    for (const Pda::AcceptPair& a : p.accept)
        acc.push_back({{"state", p.states[a.state]}, {"top", top_name(a.top)}});
    j["accept"] = acc;
    json trans = json::array();
    for (const Pda::Trans& t : p.transitions) {
        json jt;
        jt["state"] = p.states[t.state];
        jt["top"] = top_name(t.top);
        jt["symbol"] = t.eps ? "" : utf8_encode(t.sym);
        jt["to"] = p.states[t.to];
        json act;
        switch (t.action.kind) {
            case Pda::Action::Kind::Push: act["kind"] = "push"; break;
            case Pda::Action::Kind::Pop: act["kind"] = "pop"; break;
            case Pda::Action::Kind::None: act["kind"] = "none"; break;
            case Pda::Action::Kind::Replace: act["kind"] = "replace"; break;
        }
        json payload = json::array();
        for (int g : t.action.payload) payload.push_back(p.stack_alphabet[g]);
        act["payload"] = payload;
        jt["action"] = act;
        trans.push_back(jt);
    }
    j["transitions"] = trans;
    return j;
}

// --- counter machines -------------------------------------------------------

CounterMachine counter_from_json(const json& j) {
    CounterMachine m;
    m.deterministic = field(j, "deterministic").get<bool>();
    const json& k = field(j, "counters");
    if (!k.is_number_integer()) throw ValidationError("field \"counters\" must be an integer");
    m.counters = k.get<int>();
    std::map<std::string, int> state_of;
    for (const std::string& name : str_list(j, "states")) {
        if (state_of.count(name)) throw ValidationError("duplicate state \"" + name + "\"");
        state_of[name] = m.add_state(name);
    }
    for (const std::string& s : str_list(j, "alphabet")) m.add_symbol(utf8_decode_symbol(s));
    auto lookup = [&](const std::string& name) {
        auto it = state_of.find(name);
        if (it == state_of.end()) throw ValidationError("unknown state \"" + name + "\"");
        return it->second;
    };
    m.start = lookup(str_field(j, "start"));
    const json& acc = field(j, "accept");
    if (!acc.is_array()) throw ValidationError("field \"accept\" must be an array");
    for (const json& a : acc)
        m.accept.push_back({lookup(str_field(a, "state")),
                            parse_zero_pattern(str_field(a, "pattern"), m.counters)});
    const json& trans = field(j, "transitions");
    if (!trans.is_array()) throw ValidationError("field \"transitions\" must be an array");
    for (const json& t : trans) {
        CounterMachine::Trans tr;
        tr.state = lookup(str_field(t, "state"));
        tr.pattern = parse_zero_pattern(str_field(t, "pattern"), m.counters);
        tr.sym = utf8_decode_symbol(str_field(t, "symbol"));
        tr.to = lookup(str_field(t, "to"));
        for (const std::string& s : str_list(t, "actions")) {
            if (s == "inc")
                tr.ops.push_back(CounterMachine::CounterOp::Inc);
            else if (s == "dec")
                tr.ops.push_back(CounterMachine::CounterOp::Dec);
            else if (s == "none")
                tr.ops.push_back(CounterMachine::CounterOp::None);
            else
                throw ValidationError("unknown counter action \"" + s + "\"");
        }
        m.transitions.push_back(std::move(tr));
    }
    m.validate();
    return m;
}

json counter_to_json(const CounterMachine& m) {
    json j;
    j["type"] = "counter";
    j["deterministic"] = m.deterministic;
    j["counters"] = m.counters;
    j["states"] = m.states;
    json alpha = json::array();
    for (Symbol a : m.alphabet) alpha.push_back(utf8_encode(a));
    j["alphabet"] = alpha;
    j["start"] = m.states[m.start];
    json acc = json::array();
    for (const CounterMachine::AcceptPair& a : m.accept)
        acc.push_back({{"state", m.states[a.state]},
                       {"pattern", format_zero_pattern(a.pattern, m.counters)}});
    j["accept"] = acc;
    json trans = json::array();
    for (const CounterMachine::Trans& t : m.transitions) {
        json jt;
        jt["state"] = m.states[t.state];
        jt["pattern"] = format_zero_pattern(t.pattern, m.counters);
        jt["symbol"] = utf8_encode(t.sym);
        jt["to"] = m.states[t.to];
        json acts = json::array();
        for (auto op : t.ops)
            acts.push_back(op == CounterMachine::CounterOp::Inc   ? "inc"
                           : op == CounterMachine::CounterOp::Dec ? "dec"
                                                                  : "none");
        jt["actions"] = acts;
        trans.push_back(jt);
    }
    j["transitions"] = trans;
    return j;
}

// --- Turing machines --------------------------------------------------------

TuringMachine tm_from_json(const json& j) {
    TuringMachine tm;
    std::map<std::string, int> state_of;
    for (const std::string& name : str_list(j, "states")) {
        if (state_of.count(name)) throw ValidationError("duplicate state \"" + name + "\"");
        state_of[name] = tm.add_state(name);
    }
    for (const std::string& s : str_list(j, "tape_alphabet"))
        tm.add_tape_symbol(utf8_decode_symbol(s));
    tm.blank = utf8_decode_symbol(str_field(j, "blank"));
    for (const std::string& s : str_list(j, "input_alphabet"))
        tm.input_alphabet.push_back(utf8_decode_symbol(s));
    auto lookup = [&](const std::string& name) {
        auto it = state_of.find(name);
        if (it == state_of.end()) throw ValidationError("unknown state \"" + name + "\"");
        return it->second;
    };
    tm.start = lookup(str_field(j, "start"));
    tm.accept = lookup(str_field(j, "accept"));
    tm.lba = j.contains("lba") && field(j, "lba").get<bool>();
    const json& trans = field(j, "transitions");
    if (!trans.is_array()) throw ValidationError("field \"transitions\" must be an array");
    for (const json& t : trans) {
        int state = lookup(str_field(t, "state"));
        Symbol read = utf8_decode_symbol(str_field(t, "read"));
        Symbol write = utf8_decode_symbol(str_field(t, "write"));
        int next = lookup(str_field(t, "next"));
        const json& mv = field(t, "move");
        if (!mv.is_number_integer()) throw ValidationError("field \"move\" must be 1 or -1");
        if (tm.transitions.count({state, read}))
            throw ValidationError("duplicate transition for (state, read)");
        tm.set_transition(state, read, write, next, mv.get<int>());
    }
    tm.validate();
    return tm;
}

json tm_to_json(const TuringMachine& tm) {
    json j;
    j["type"] = "tm";
    j["states"] = tm.states;
    json tape = json::array();
    for (Symbol a : tm.tape_alphabet) tape.push_back(utf8_encode(a));
    j["tape_alphabet"] = tape;
    j["blank"] = utf8_encode(tm.blank);
    json in = json::array();
    for (Symbol a : tm.input_alphabet) in.push_back(utf8_encode(a));
    j["input_alphabet"] = in;
    j["start"] = tm.states[tm.start];
    j["accept"] = tm.states[tm.accept];
    j["lba"] = tm.lba;
    json trans = json::array();
    for (const auto& [key, step] : tm.transitions) {
        json jt;
        jt["state"] = tm.states[key.state];
        jt["read"] = utf8_encode(key.read);
        jt["write"] = utf8_encode(step.write);
        jt["next"] = tm.states[step.next];
        jt["move"] = step.move;
        trans.push_back(jt);
    }
    j["transitions"] = trans;
    return j;
}

}  // namespace

Document parse_document(const std::string& json_text, const std::string& origin) {
    json j = parse_json(json_text);
    if (!j.is_object()) throw ValidationError("document must be a JSON object");
    std::string type = str_field(j, "type");
    Document d;
    d.path = origin;
    if (type == "dfa" || type == "nfa")
        d.content = fa_from_json(j);
    else if (type == "grammar")
        d.content = grammar_from_json(j);
    else if (type == "pda")
        d.content = pda_from_json(j);
    else if (type == "counter")
        d.content = counter_from_json(j);
    else if (type == "tm")
        d.content = tm_from_json(j);
    else
        throw ValidationError("unknown document type \"" + type + "\"");
    return d;
}

Document load_document(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open " + path.string());
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return parse_document(text, path.string());
}

std::string to_json(const Fa& m) { return fa_to_json(m).dump(2) + "\n"; }
std::string to_json(const Grammar& g) { return grammar_to_json(g).dump(2) + "\n"; }
std::string to_json(const Pda& p) { return pda_to_json(p).dump(2) + "\n"; }
std::string to_json(const CounterMachine& m) { return counter_to_json(m).dump(2) + "\n"; }
std::string to_json(const TuringMachine& tm) { return tm_to_json(tm).dump(2) + "\n"; }

std::string to_json(const Document& d) {
    return std::visit([](const auto& v) { return to_json(v); }, d.content);
}

void save_document(const Document& d, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError("cannot write " + path.string());
    out << to_json(d);
}

}  // namespace fl
