#ifndef WITNESSLAB_MINIMIZE_HPP
#define WITNESSLAB_MINIMIZE_HPP

#include "witnesslab/automata.hpp"

namespace witnesslab {

/// Removes unreachable states; survivors are renumbered in BFS discovery
/// order (letters in alphabet order), so the initial state becomes 0.
Dfa trim_reachable(const Dfa& dfa);

/// Minimal complete DFA of L(dfa) by partition refinement over the
/// reachable states. Block numbering follows the ascending smallest-member
/// order of the final partition, so the output is deterministic.
Dfa minimize_refine(const Dfa& dfa);

/// Minimal complete DFA by double reversal-determinization:
/// determinize(reverse(determinize(reverse(dfa)))). `state_cap` bounds the
/// first subset construction; the second one cannot explode (its output is
/// at most the reachable size of the input) and is exempted from the cap,
/// though the bitmask width still limits the intermediate machine to 64
/// states.
Dfa minimize_brzozowski(const Dfa& dfa, std::size_t state_cap = kDefaultDeterminizeCap);

/// True iff a state bijection maps initial to initial and finals to finals
/// and commutes with the transition tables. Computed by parallel BFS from
/// the initial pair; machines with unreachable states never qualify.
/// Throws on alphabet mismatch.
bool are_isomorphic(const Dfa& d1, const Dfa& d2);

/// True iff L(d1) = L(d2), decided by emptiness of the symmetric-difference
/// product. Independent of both minimizers. Throws on alphabet mismatch.
bool are_equivalent(const Dfa& d1, const Dfa& d2);

} // namespace witnesslab

#endif
