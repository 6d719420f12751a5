#include "posmc/io.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <set>
#include <sstream>

namespace posmc {

std::string format_value(double v) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, ptr);
}

namespace {

struct Token {
    std::string text;
    int line;
    int column;
};

using TokenRow = std::vector<Token>;

[[noreturn]] void fail(const Token& at, const std::string& message) {
    throw ParseError(at.line, at.column, message);
}

// Lines split on whitespace; '#' starts a comment. Rows keep 1-based
// token locations for diagnostics.
std::vector<TokenRow> tokenize(std::string_view text) {
    std::vector<TokenRow> rows;
    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t eol = text.find('\n', pos);
        std::string_view line =
            text.substr(pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);
        TokenRow row;
        std::size_t i = 0;
        while (i < line.size()) {
            if (std::isspace(static_cast<unsigned char>(line[i]))) {
                ++i;
                continue;
            }
            const std::size_t start = i;
            while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
            row.push_back(
                {std::string(line.substr(start, i - start)), line_no, static_cast<int>(start) + 1});
        }
        if (!row.empty()) rows.push_back(std::move(row));
        if (eol == std::string_view::npos) break;
        pos = eol + 1;
    }
    return rows;
}

void check_name(const Token& t) {
    for (char c : t.text)
        if (c == '{' || c == '}' || c == ',')
            fail(t, "invalid character '" + std::string(1, c) + "' in name '" + t.text + "'");
}

double parse_number(const Token& t) {
    double value = 0.0;
    const char* first = t.text.data();
    const char* last = first + t.text.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last) fail(t, "malformed number '" + t.text + "'");
    if (!(value >= 0.0 && value <= 1.0)) fail(t, "value out of range [0,1]: " + t.text);
    return value;
}

struct ModelParser {
    RawKripke raw;
    std::map<std::string, Token> state_decl;
    std::set<std::string> known_states;
    std::set<std::string> known_props;
    std::set<std::string> init_seen;
    std::set<std::pair<std::string, std::string>> trans_seen;
    std::set<std::string> label_seen;
    bool have_states = false;
    bool have_ap = false;
    Token states_token{"states", 1, 1};
    std::map<std::string, Token> last_row_token;  // last transition per source
    Token last_init_token{"init", 1, 1};

    void require_state(const Token& t) {
        if (!known_states.count(t.text)) fail(t, "unknown state '" + t.text + "'");
    }

    void handle(const TokenRow& row) {
        const Token& key = row[0];
        if (key.text == "states") {
            if (have_states) fail(key, "duplicate states declaration");
            if (row.size() < 2) fail(key, "states declaration needs at least one state");
            for (std::size_t i = 1; i < row.size(); ++i) {
                check_name(row[i]);
                if (!known_states.insert(row[i].text).second)
                    fail(row[i], "duplicate state '" + row[i].text + "'");
                raw.states.push_back(row[i].text);
                state_decl.emplace(row[i].text, row[i]);
            }
            have_states = true;
            states_token = key;
        } else if (key.text == "init") {
            if (!have_states) fail(key, "states must be declared before init");
            if (row.size() != 3) fail(key, "expected: init <state> <value>");
            require_state(row[1]);
            if (!init_seen.insert(row[1].text).second)
                fail(row[1], "duplicate initial entry for state '" + row[1].text + "'");
            raw.init.emplace_back(row[1].text, parse_number(row[2]));
            last_init_token = key;
        } else if (key.text == "ap") {
            if (have_ap) fail(key, "duplicate ap declaration");
            raw.atomic_props.emplace();
            for (std::size_t i = 1; i < row.size(); ++i) {
                check_name(row[i]);
                if (!known_props.insert(row[i].text).second)
                    fail(row[i], "duplicate proposition '" + row[i].text + "'");
                raw.atomic_props->push_back(row[i].text);
            }
            have_ap = true;
        } else if (key.text == "label") {
            if (!have_states) fail(key, "states must be declared before labels");
            if (!have_ap) fail(key, "label requires an ap declaration");
            if (row.size() < 2) fail(key, "expected: label <state> [<prop>...]");
            require_state(row[1]);
            if (!label_seen.insert(row[1].text).second)
                fail(row[1], "duplicate label entry for state '" + row[1].text + "'");
            std::vector<std::string> props;
            std::set<std::string> seen;
            for (std::size_t i = 2; i < row.size(); ++i) {
                if (!known_props.count(row[i].text))
                    fail(row[i], "unknown proposition '" + row[i].text + "'");
                if (!seen.insert(row[i].text).second)
                    fail(row[i], "duplicate proposition '" + row[i].text + "' in label");
                props.push_back(row[i].text);
            }
            raw.labels.emplace_back(row[1].text, std::move(props));
        } else if (key.text == "trans") {
            if (!have_states) fail(key, "states must be declared before transitions");
            if (row.size() != 4) fail(key, "expected: trans <src> <dst> <value>");
            require_state(row[1]);
            require_state(row[2]);
            if (!trans_seen.emplace(row[1].text, row[2].text).second)
                fail(row[1], "duplicate transition " + row[1].text + " -> " + row[2].text);
            raw.transitions.emplace_back(row[1].text, row[2].text, parse_number(row[3]));
            last_row_token.insert_or_assign(row[1].text, key);
        } else {
            fail(key, "unknown declaration '" + key.text + "'");
        }
    }

    // Supremum conditions re-checked here so the diagnostics can point at the
    // declaration that determines each row.
    void check_suprema() const {
        const std::size_t n = raw.states.size();
        std::map<std::string, double> row_sup;
        for (const auto& s : raw.states) row_sup[s] = 0.0;
        for (const auto& [src, dst, value] : raw.transitions)
            row_sup[src] = std::max(row_sup[src], value);
        for (const auto& s : raw.states)
            if (row_sup[s] != 1.0) {
                const Token at = last_row_token.count(s) ? last_row_token.at(s) : states_token;
                fail(at, "transition row supremum of state '" + s + "' is not exactly 1");
            }
        double init_sup = 0.0;
        for (const auto& [s, value] : raw.init) init_sup = std::max(init_sup, value);
        if (init_sup != 1.0)
            fail(raw.init.empty() ? states_token : last_init_token,
                 "initial distribution supremum is not exactly 1");
        (void)n;
    }
};

}  // namespace

PossKripke parse_model(std::string_view text) {
    const auto rows = tokenize(text);
    if (rows.empty()) throw ParseError(1, 1, "empty document");
    if (rows[0].size() != 1 || rows[0][0].text != "kripke")
        fail(rows[0][0], "expected 'kripke' header");
    ModelParser p;
    for (std::size_t i = 1; i < rows.size(); ++i) p.handle(rows[i]);
    if (!p.have_states) throw ParseError(rows.back()[0].line, 1, "missing states declaration");
    p.check_suprema();
    try {
        return PossKripke::validate(p.raw);
    } catch (const ValidationError& e) {
        // Everything locatable was already checked above with a position.
        throw ParseError(p.states_token.line, p.states_token.column, e.what());
    }
}

namespace {

Symbol parse_symbol(const Token& t) {
    if (t.text.size() < 2 || t.text.front() != '{' || t.text.back() != '}')
        fail(t, "expected a symbol of the form {a,b}");
    const std::string inner = t.text.substr(1, t.text.size() - 2);
    Symbol out;
    if (inner.empty()) return out;
    std::size_t pos = 0;
    while (true) {
        const std::size_t comma = inner.find(',', pos);
        const std::string name = inner.substr(pos, comma == std::string::npos ? std::string::npos
                                                                              : comma - pos);
        if (name.empty()) fail(t, "empty proposition name in symbol");
        out.push_back(name);
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return out;
}

}  // namespace

FiniteAutomaton parse_automaton(std::string_view text) {
    const auto rows = tokenize(text);
    if (rows.empty()) throw ParseError(1, 1, "empty document");
    const Token& kind_token = rows[0][0];
    FiniteAutomaton::Kind kind;
    if (kind_token.text == "nfa")
        kind = FiniteAutomaton::Kind::nfa;
    else if (kind_token.text == "nba")
        kind = FiniteAutomaton::Kind::nba;
    else
        fail(kind_token, "unknown automaton kind '" + kind_token.text + "' (expected nfa or nba)");

    std::vector<std::string> states;
    std::vector<std::string> alphabet;
    std::vector<std::tuple<std::string, Symbol, std::string>> transitions;
    std::vector<std::string> initial;
    std::vector<std::string> accepting;
    std::set<std::string> known_states;
    std::set<std::string> known_props;
    bool have_states = false;
    bool have_alphabet = false;
    bool have_initial = false;
    bool have_accepting = false;

    auto require_state = [&](const Token& t) {
        if (!known_states.count(t.text)) fail(t, "unknown automaton state '" + t.text + "'");
    };

    for (std::size_t i = 1; i < rows.size(); ++i) {
        const TokenRow& row = rows[i];
        const Token& key = row[0];
        if (key.text == "states") {
            if (have_states) fail(key, "duplicate states declaration");
            if (row.size() < 2) fail(key, "states declaration needs at least one state");
            for (std::size_t j = 1; j < row.size(); ++j) {
                check_name(row[j]);
                if (!known_states.insert(row[j].text).second)
                    fail(row[j], "duplicate automaton state '" + row[j].text + "'");
                states.push_back(row[j].text);
            }
            have_states = true;
        } else if (key.text == "alphabet") {
            if (have_alphabet) fail(key, "duplicate alphabet declaration");
            for (std::size_t j = 1; j < row.size(); ++j) {
                check_name(row[j]);
                if (!known_props.insert(row[j].text).second)
                    fail(row[j], "duplicate proposition '" + row[j].text + "'");
                alphabet.push_back(row[j].text);
            }
            have_alphabet = true;
        } else if (key.text == "initial") {
            if (have_initial) fail(key, "duplicate initial declaration");
            if (row.size() < 2) fail(key, "empty initial set");
            if (!have_states) fail(key, "states must be declared before initial");
            for (std::size_t j = 1; j < row.size(); ++j) {
                require_state(row[j]);
                initial.push_back(row[j].text);
            }
            have_initial = true;
        } else if (key.text == "accepting") {
            if (have_accepting) fail(key, "duplicate accepting declaration");
            if (!have_states) fail(key, "states must be declared before accepting");
            for (std::size_t j = 1; j < row.size(); ++j) {
                require_state(row[j]);
                accepting.push_back(row[j].text);
            }
            have_accepting = true;
        } else if (key.text == "trans") {
            if (!have_states) fail(key, "states must be declared before transitions");
            if (row.size() != 4) fail(key, "expected: trans <src> <symbol> <dst>");
            require_state(row[1]);
            require_state(row[3]);
            Symbol symbol = parse_symbol(row[2]);
            std::set<std::string> seen;
            for (const auto& prop : symbol) {
                if (!known_props.count(prop))
                    fail(row[2], "symbol references unknown proposition '" + prop + "'");
                if (!seen.insert(prop).second)
                    fail(row[2], "symbol repeats proposition '" + prop + "'");
            }
            transitions.emplace_back(row[1].text, std::move(symbol), row[3].text);
        } else {
            fail(key, "unknown declaration '" + key.text + "'");
        }
    }
    if (!have_states) throw ParseError(rows.back()[0].line, 1, "missing states declaration");
    if (!have_initial) throw ParseError(rows.back()[0].line, 1, "missing initial declaration");
    try {
        return FiniteAutomaton::make(kind, std::move(states), std::move(alphabet), transitions,
                                     initial, accepting);
    } catch (const AutomatonError& e) {
        throw ParseError(kind_token.line, kind_token.column, e.what());
    }
}

std::string render_model(const PossKripke& m) {
    std::ostringstream out;
    out << "kripke\n";
    out << "states";
    for (const auto& s : m.states()) out << " " << s;
    out << "\n";
    for (std::size_t i = 0; i < m.num_states(); ++i)
        if (m.init()[i] != Possibility::zero())
            out << "init " << m.states()[i] << " " << format_value(m.init()[i].value()) << "\n";
    if (!m.has_identity_labeling()) {
        out << "ap";
        for (const auto& p : m.atomic_props()) out << " " << p;
        out << "\n";
        for (std::size_t i = 0; i < m.num_states(); ++i) {
            if (m.labels()[i].empty()) continue;
            out << "label " << m.states()[i];
            for (int p : m.labels()[i]) out << " " << m.atomic_props()[p];
            out << "\n";
        }
    }
    for (std::size_t i = 0; i < m.num_states(); ++i)
        for (std::size_t j = 0; j < m.num_states(); ++j)
            if (m.transitions()(i, j) != Possibility::zero())
                out << "trans " << m.states()[i] << " " << m.states()[j] << " "
                    << format_value(m.transitions()(i, j).value()) << "\n";
    return out.str();
}

std::string render_automaton(const FiniteAutomaton& a) {
    std::ostringstream out;
    out << (a.kind() == FiniteAutomaton::Kind::nfa ? "nfa" : "nba") << "\n";
    out << "states";
    for (const auto& s : a.states()) out << " " << s;
    out << "\n";
    out << "alphabet";
    for (const auto& p : a.alphabet()) out << " " << p;
    out << "\n";
    out << "initial";
    for (int q : a.initial()) out << " " << a.states()[q];
    out << "\n";
    out << "accepting";
    for (int q : a.accepting()) out << " " << a.states()[q];
    out << "\n";
    for (const auto& [src, mask, dst] : a.transition_triples()) {
        const Symbol symbol = a.mask_symbol(mask);
        out << "trans " << a.states()[src] << " {";
        for (std::size_t i = 0; i < symbol.size(); ++i) {
            if (i) out << ",";
            out << symbol[i];
        }
        out << "} " << a.states()[dst] << "\n";
    }
    return out.str();
}

namespace {

std::string dot_quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    out += "\"";
    return out;
}

std::string dot_digraph(const PossKripke& m, const StateSet* goal) {
    std::ostringstream out;
    out << "digraph model {\n";
    out << "  rankdir=LR;\n";
    out << "  node [shape=circle];\n";
    for (std::size_t i = 0; i < m.num_states(); ++i) {
        out << "  " << dot_quote(m.states()[i]);
        if (goal && goal->contains(static_cast<int>(i))) out << " [shape=doublecircle]";
        out << ";\n";
    }
    for (std::size_t i = 0; i < m.num_states(); ++i) {
        if (m.init()[i] == Possibility::zero()) continue;
        const std::string ghost = "__init_" + std::to_string(i);
        out << "  " << dot_quote(ghost) << " [shape=none, label=\"\", width=0, height=0];\n";
        out << "  " << dot_quote(ghost) << " -> " << dot_quote(m.states()[i]) << " [label=\""
            << format_value(m.init()[i].value()) << "\"];\n";
    }
    for (std::size_t i = 0; i < m.num_states(); ++i)
        for (std::size_t j = 0; j < m.num_states(); ++j)
            if (m.transitions()(i, j) != Possibility::zero())
                out << "  " << dot_quote(m.states()[i]) << " -> " << dot_quote(m.states()[j])
                    << " [label=\"" << format_value(m.transitions()(i, j).value()) << "\"];\n";
    out << "}\n";
    return out.str();
}

}  // namespace

std::string export_dot(const PossKripke& m) { return dot_digraph(m, nullptr); }

std::string export_dot(const ProductStructure& p) { return dot_digraph(p.structure, &p.goal); }

}  // namespace posmc
