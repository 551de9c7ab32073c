#ifndef WITNESSLAB_WITNESS_HPP
#define WITNESSLAB_WITNESS_HPP

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include "witnesslab/automata.hpp"

namespace witnesslab {

/// Roles a letter can play in a witness family.
enum class LetterRole { Cycle, Transposition, Singular, Identity };

/// Total map on {0..n-1}.
class Transformation {
public:
    /// Validates that every image is < images.size().
    explicit Transformation(std::vector<State> images);

    static Transformation identity(std::size_t n);
    /// i -> i+1 mod n.
    static Transformation cycle(std::size_t n);
    /// Swaps exactly p and q (p != q).
    static Transformation transposition(std::size_t n, State p, State q);
    /// Sends r to s (r != s) and fixes everything else; not a bijection.
    static Transformation singular(std::size_t n, State r, State s);

    std::size_t size() const { return images_.size(); }
    State operator()(State q) const { return images_[q]; }
    const std::vector<State>& images() const { return images_; }

    /// this followed by next: q -> next(this(q)).
    Transformation then(const Transformation& next) const;

    friend bool operator==(const Transformation&, const Transformation&) = default;

private:
    std::vector<State> images_;
};

/// The transformation a role letter performs on n states. Without `params`
/// the U-family defaults apply: transposition (0,1), singular n-1 -> 0.
/// `params` overrides them: (p,q) for the transposition, (r,s) for the
/// singular map r -> s. Cycle and identity take no parameters.
Transformation letter_action(LetterRole role, std::size_t n,
                             std::optional<std::pair<State, State>> params = std::nullopt);

enum class WitnessFamily { UBinary, UTernary, UQuaternary, VQuaternary };

/// The roles of a family in the order a letters string is read:
/// cycle, transposition[, singular[, identity]].
const std::vector<LetterRole>& family_roles(WitnessFamily family);

/// A witness instance: the family, the state count, which letter plays
/// which role (`letters` listed in family_roles order, so "bac" makes b the
/// cycle), and the final set (empty means the default {n-1}). The V family
/// moves the transposition to (n-2,n-1) and the singular map to n-1 -> n-2;
/// the dialect fields override those parameters for either family.
struct WitnessSpec {
    WitnessFamily family = WitnessFamily::UTernary;
    std::size_t n = 0;
    std::string letters;
    std::vector<State> finals;
    std::optional<std::pair<State, State>> transposition;
    std::optional<std::pair<State, State>> singular;

    friend bool operator==(const WitnessSpec&, const WitnessSpec&) = default;
};

/// Compact form, e.g. "U[n=4;letters=abc;finals=0,2]". The finals key is
/// omitted when it is the default {n-1}; dialect overrides appear as
/// trans=p,q and sing=r,s.
std::string to_string(const WitnessSpec& spec);

/// Parses the compact form: ('U'|'V') '[' key=value (';' key=value)* ']'
/// with keys n, letters, finals, trans, sing. The letter count picks the
/// family (U takes 2, 3 or 4 letters; V exactly 4). Throws
/// std::invalid_argument naming the offending offset on bad input.
WitnessSpec parse_witness_spec(std::string_view text);

/// Builds the witness DFA: states 0..n-1, initial 0, alphabet the sorted
/// letters, delta(q, x) = (action of x)(q). Binary specs simply have no
/// singular letter. Throws std::invalid_argument on invariant violations
/// (n < 3, wrong letter count, repeated letters, empty or full finals).
Dfa build_witness(const WitnessSpec& spec);

/// Re-letters the transitions: delta'(q, mapping(x)) = delta(q, x); states
/// and finals are untouched. Letters missing from `mapping` stay put; the
/// completed map must be a bijection of the alphabet onto itself.
Dfa permute_letters(const Dfa& dfa, const std::map<char, char>& mapping);

inline constexpr std::size_t kDefaultMonoidCap = std::size_t{1} << 20;

/// Size of the transformation semigroup generated by the letter actions of
/// `dfa` under composition, or nullopt once more than `cap` distinct
/// transformations appear.
std::optional<std::size_t> transition_monoid_size(const Dfa& dfa,
                                                  std::size_t cap = kDefaultMonoidCap);

} // namespace witnesslab

#endif
