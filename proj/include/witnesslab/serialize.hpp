#ifndef WITNESSLAB_SERIALIZE_HPP
#define WITNESSLAB_SERIALIZE_HPP

#include <string>

#include "witnesslab/automata.hpp"

namespace witnesslab {

/// JSON text with fixed field order (n, alphabet, delta, initial, finals),
/// two-space indent and a trailing newline — byte-stable for golden files.
/// The DFA delta is a row per state, one target per letter.
std::string to_json(const Dfa& dfa);

/// Same layout with "initials" (array) in place of "initial"; each delta
/// cell is the sorted target list.
std::string to_json(const Nfa& nfa);

Dfa dfa_from_json(const std::string& text);
Nfa nfa_from_json(const std::string& text);

/// Loads either machine, keyed on whether "initial" or "initials" is
/// present. Throws std::invalid_argument when neither fits.
Automaton automaton_from_json(const std::string& text);

/// Graphviz DOT: states as circles, finals as double circles, initial
/// states marked by an arrow from a point node, parallel edges merged
/// into one arrow with comma-separated letter labels.
std::string to_dot(const Dfa& dfa);
std::string to_dot(const Nfa& nfa);

} // namespace witnesslab

#endif
