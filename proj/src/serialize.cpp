#include "witnesslab/serialize.hpp"

#include <map>

#include <json.hpp>

namespace witnesslab {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json parse_object(const std::string& text) {
    ordered_json j = ordered_json::parse(text);
    if (!j.is_object()) throw std::invalid_argument("automaton JSON must be an object");
    return j;
}

/// Folds the JSON library's own exceptions (parse errors, missing keys,
/// type mismatches) into the invalid_argument the loaders promise.
template <typename Fn>
auto translate_json_errors(Fn&& fn) -> decltype(fn()) {
    try {
        return fn();
    } catch (const ordered_json::exception& e) {
        throw std::invalid_argument(std::string("automaton JSON: ") + e.what());
    }
}

ordered_json alphabet_to_json(const std::vector<char>& alphabet) {
    ordered_json out = ordered_json::array();
    for (char c : alphabet) out.push_back(std::string(1, c));
    return out;
}

std::vector<char> alphabet_from_json(const ordered_json& j) {
    std::vector<char> alphabet;
    for (const auto& item : j.at("alphabet")) {
        const std::string s = item.template get<std::string>();
        if (s.size() != 1)
            throw std::invalid_argument("alphabet entries must be single characters");
        alphabet.push_back(s[0]);
    }
    return alphabet;
}

Dfa dfa_from_value(const ordered_json& j) {
    const std::size_t n = j.at("n").template get<std::size_t>();
    const std::vector<char> alphabet = alphabet_from_json(j);
    const auto& rows = j.at("delta");
    if (!rows.is_array() || rows.size() != n)
        throw std::invalid_argument("delta needs one row per state");
    std::vector<State> delta;
    delta.reserve(n * alphabet.size());
    for (const auto& row : rows) {
        if (!row.is_array() || row.size() != alphabet.size())
            throw std::invalid_argument("delta rows need one target per letter");
        for (const auto& t : row) delta.push_back(t.template get<State>());
    }
    return Dfa(n, alphabet, std::move(delta), j.at("initial").template get<State>(),
               j.at("finals").template get<std::vector<State>>());
}

Nfa nfa_from_value(const ordered_json& j) {
    const std::size_t n = j.at("n").template get<std::size_t>();
    const std::vector<char> alphabet = alphabet_from_json(j);
    const auto& rows = j.at("delta");
    if (!rows.is_array() || rows.size() != n)
        throw std::invalid_argument("delta needs one row per state");
    std::vector<std::vector<State>> delta;
    delta.reserve(n * alphabet.size());
    for (const auto& row : rows) {
        if (!row.is_array() || row.size() != alphabet.size())
            throw std::invalid_argument("delta rows need one target set per letter");
        for (const auto& cell : row)
            delta.push_back(cell.template get<std::vector<State>>());
    }
    return Nfa(n, alphabet, std::move(delta),
               j.at("initials").template get<std::vector<State>>(),
               j.at("finals").template get<std::vector<State>>());
}

// Shared DOT skeleton; edge labels arrive pre-merged keyed by (source, target).
std::string dot_text(std::size_t n, const std::vector<bool>& final_mask,
                     const std::vector<State>& initials,
                     const std::map<std::pair<State, State>, std::string>& edges) {
    std::string out = "digraph automaton {\n  rankdir=LR;\n  node [shape=circle];\n";
    for (std::size_t q = 0; q < n; ++q) {
        out += "  " + std::to_string(q);
        if (final_mask[q]) out += " [shape=doublecircle]";
        out += ";\n";
    }
    out += "  __start [shape=point];\n";
    for (State i : initials) out += "  __start -> " + std::to_string(i) + ";\n";
    for (const auto& [edge, label] : edges)
        out += "  " + std::to_string(edge.first) + " -> " + std::to_string(edge.second) +
               " [label=\"" + label + "\"];\n";
    out += "}\n";
    return out;
}

void add_edge_letter(std::map<std::pair<State, State>, std::string>& edges, State from, State to,
                     char letter) {
    std::string& label = edges[{from, to}];
    if (!label.empty()) label += ',';
    label += letter;
}

} // namespace

std::string to_json(const Dfa& dfa) {
    ordered_json j;
    j["n"] = dfa.num_states();
    j["alphabet"] = alphabet_to_json(dfa.alphabet());
    ordered_json rows = ordered_json::array();
    for (State q = 0; q < dfa.num_states(); ++q) {
        ordered_json row = ordered_json::array();
        for (std::size_t a = 0; a < dfa.num_letters(); ++a) row.push_back(dfa.next(q, a));
        rows.push_back(std::move(row));
    }
    j["delta"] = std::move(rows);
    j["initial"] = dfa.initial();
    j["finals"] = dfa.finals();
    return j.dump(2) + "\n";
}

std::string to_json(const Nfa& nfa) {
    ordered_json j;
    j["n"] = nfa.num_states();
    j["alphabet"] = alphabet_to_json(nfa.alphabet());
    ordered_json rows = ordered_json::array();
    for (State q = 0; q < nfa.num_states(); ++q) {
        ordered_json row = ordered_json::array();
        for (std::size_t a = 0; a < nfa.num_letters(); ++a) row.push_back(nfa.targets(q, a));
        rows.push_back(std::move(row));
    }
    j["delta"] = std::move(rows);
    j["initials"] = nfa.initials();
    j["finals"] = nfa.finals();
    return j.dump(2) + "\n";
}

Dfa dfa_from_json(const std::string& text) {
    return translate_json_errors([&] { return dfa_from_value(parse_object(text)); });
}

Nfa nfa_from_json(const std::string& text) {
    return translate_json_errors([&] { return nfa_from_value(parse_object(text)); });
}

Automaton automaton_from_json(const std::string& text) {
    return translate_json_errors([&]() -> Automaton {
        const ordered_json j = parse_object(text);
        if (j.contains("initial")) return dfa_from_value(j);
        if (j.contains("initials")) return nfa_from_value(j);
        throw std::invalid_argument("automaton JSON needs an \"initial\" or \"initials\" field");
    });
}

std::string to_dot(const Dfa& dfa) {
    std::map<std::pair<State, State>, std::string> edges;
    for (State q = 0; q < dfa.num_states(); ++q)
        for (std::size_t a = 0; a < dfa.num_letters(); ++a)
            add_edge_letter(edges, q, dfa.next(q, a), dfa.alphabet()[a]);
    return dot_text(dfa.num_states(), dfa.final_mask(), {dfa.initial()}, edges);
}

std::string to_dot(const Nfa& nfa) {
    std::map<std::pair<State, State>, std::string> edges;
    for (State q = 0; q < nfa.num_states(); ++q)
        for (std::size_t a = 0; a < nfa.num_letters(); ++a)
            for (State t : nfa.targets(q, a)) add_edge_letter(edges, q, t, nfa.alphabet()[a]);
    std::vector<bool> final_mask(nfa.num_states());
    for (State q = 0; q < nfa.num_states(); ++q) final_mask[q] = nfa.is_final(q);
    return dot_text(nfa.num_states(), final_mask, nfa.initials(), edges);
}

} // namespace witnesslab
