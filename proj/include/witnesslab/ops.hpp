#ifndef WITNESSLAB_OPS_HPP
#define WITNESSLAB_OPS_HPP

#include "witnesslab/automata.hpp"

namespace witnesslab {

/// The four boolean set operations on languages.
enum class BooleanOp { Union, Intersection, Difference, SymmetricDifference };

/// Lower-case name, e.g. "union".
const char* to_string(BooleanOp op);

/// Applies `op` to a pair of membership bits (Difference is left-and-not-right).
bool apply(BooleanOp op, bool left, bool right);

/// Ceiling on the number of state pairs a product construction may explore.
inline constexpr std::size_t kDefaultPairCap = std::size_t{1} << 26;

/// Accessible direct product of two complete DFAs over the same alphabet.
/// States are the pairs reachable from the pair of initials, numbered in BFS
/// discovery order (letters in alphabet order); a pair (p, q) is final iff
/// op(p final, q final). The result is complete, and its state count is
/// exactly the reachable-pair count. Throws CapExceeded past `pair_cap`.
Dfa boolean_product(const Dfa& left, const Dfa& right, BooleanOp op,
                    std::size_t pair_cap = kDefaultPairCap);

/// Epsilon-free concatenation; recognizes L(left)·L(right). States are
/// left's followed by right's (right renumbered upward). Every left
/// transition that enters a final state of left gets parallel copies into
/// right's initial states; initials are left's, plus right's when left
/// accepts the empty word; finals are right's only.
Nfa concatenate(const Nfa& left, const Nfa& right);
Nfa concatenate(const Dfa& left, const Dfa& right);
Nfa concatenate(const Dfa& left, const Nfa& right);
Nfa concatenate(const Nfa& left, const Dfa& right);

/// Epsilon-free star; recognizes L(input)*. One added state s, the sole
/// initial and a final state, copies the moves of the old initial states;
/// every final state also copies those moves, closing the loop. Always
/// input size + 1 states.
Nfa star(const Nfa& nfa);
Nfa star(const Dfa& dfa);

} // namespace witnesslab

#endif
