#ifndef WITNESSLAB_AUTOMATA_HPP
#define WITNESSLAB_AUTOMATA_HPP

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace witnesslab {

using State = std::uint32_t;

/// A word is a finite sequence of single-character letters.
using Word = std::string;

/// Thrown when a construction would exceed a configured state cap.
struct CapExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Width of the subset bitmask; no subset construction can run on an NFA
/// with more states than this.
inline constexpr std::size_t kStateSetWidth = 64;

/// Default input-size cap for determinization (bounds the 2^n explosion).
inline constexpr std::size_t kDefaultDeterminizeCap = 24;

/// Subset of {0..63} as a fixed-width characteristic bitmask.
class StateSet {
public:
    constexpr StateSet() = default;
    constexpr explicit StateSet(std::uint64_t bits) : bits_(bits) {}

    static constexpr StateSet singleton(State q) { return StateSet(std::uint64_t{1} << q); }
    static constexpr StateSet full(std::size_t n) {
        return StateSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
    }

    constexpr bool contains(State q) const { return (bits_ >> q) & 1; }
    constexpr void insert(State q) { bits_ |= std::uint64_t{1} << q; }
    constexpr void erase(State q) { bits_ &= ~(std::uint64_t{1} << q); }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr std::size_t count() const { return static_cast<std::size_t>(std::popcount(bits_)); }
    constexpr bool intersects(StateSet other) const { return (bits_ & other.bits_) != 0; }
    constexpr std::uint64_t bits() const { return bits_; }

    template <typename Fn>
    void for_each(Fn&& fn) const {
        for (std::uint64_t b = bits_; b != 0; b &= b - 1)
            fn(static_cast<State>(std::countr_zero(b)));
    }

    friend constexpr bool operator==(StateSet, StateSet) = default;

private:
    std::uint64_t bits_ = 0;
};

/// Complete deterministic finite automaton. States are 0..n-1, the
/// transition table is total, and the alphabet is an ordered list of
/// distinct single-character letters.
class Dfa {
public:
    /// Validates and builds a DFA. `delta` is row-major: the target of
    /// (state q, letter index a) sits at q * alphabet.size() + a.
    /// Rejects partial tables, out-of-range targets and duplicate letters.
    Dfa(std::size_t n, std::vector<char> alphabet, std::vector<State> delta,
        State initial, const std::vector<State>& finals);

    std::size_t num_states() const { return n_; }
    const std::vector<char>& alphabet() const { return alphabet_; }
    std::size_t num_letters() const { return alphabet_.size(); }
    State initial() const { return initial_; }

    State next(State q, std::size_t letter_idx) const { return delta_[q * alphabet_.size() + letter_idx]; }
    const std::vector<State>& delta() const { return delta_; }

    /// Index of `letter` in the alphabet; throws on unknown letters.
    std::size_t letter_index(char letter) const;

    bool is_final(State q) const { return final_mask_[q]; }
    const std::vector<bool>& final_mask() const { return final_mask_; }
    std::vector<State> finals() const;
    std::size_t num_finals() const { return num_finals_; }

    friend bool operator==(const Dfa&, const Dfa&) = default;

private:
    std::size_t n_;
    std::vector<char> alphabet_;
    std::vector<State> delta_;
    State initial_;
    std::vector<bool> final_mask_;
    std::size_t num_finals_ = 0;
};

/// Nondeterministic finite automaton with a set of initial states and no
/// epsilon transitions. Target sets are kept sorted and duplicate-free.
class Nfa {
public:
    Nfa(std::size_t n, std::vector<char> alphabet, std::vector<std::vector<State>> delta,
        const std::vector<State>& initials, const std::vector<State>& finals);

    std::size_t num_states() const { return n_; }
    const std::vector<char>& alphabet() const { return alphabet_; }
    std::size_t num_letters() const { return alphabet_.size(); }

    const std::vector<State>& targets(State q, std::size_t letter_idx) const {
        return delta_[q * alphabet_.size() + letter_idx];
    }
    const std::vector<std::vector<State>>& delta() const { return delta_; }

    std::size_t letter_index(char letter) const;

    const std::vector<State>& initials() const { return initials_; }
    const std::vector<State>& finals() const { return finals_; }
    bool is_final(State q) const { return final_mask_[q]; }
    bool is_initial(State q) const { return initial_mask_[q]; }

    friend bool operator==(const Nfa&, const Nfa&) = default;

private:
    std::size_t n_;
    std::vector<char> alphabet_;
    std::vector<std::vector<State>> delta_;
    std::vector<State> initials_;
    std::vector<State> finals_;
    std::vector<bool> initial_mask_;
    std::vector<bool> final_mask_;
};

/// Either machine type; operations that may come out deterministic or not
/// return this.
using Automaton = std::variant<Dfa, Nfa>;

/// True iff the machine accepts `word`.
bool accepts(const Dfa& dfa, std::string_view word);

/// True iff some run from some initial state accepts `word`.
bool accepts(const Nfa& nfa, std::string_view word);

/// A one-state-per-state copy of a DFA as an NFA.
Nfa to_nfa(const Dfa& dfa);

/// The reverse automaton: initial and final sets are interchanged and all
/// transitions flipped. Recognizes L(dfa) reversed.
Nfa reverse(const Dfa& dfa);
Nfa reverse(const Nfa& nfa);

/// Flips the final-state set; recognizes the complement language.
Dfa complement(const Dfa& dfa);

struct DeterminizeResult {
    Dfa dfa;
    /// Subset represented by each DFA state, in discovery (BFS) order.
    std::vector<StateSet> subsets;
};

/// Accessible subset construction. States of the result are exactly the
/// subsets reachable from the set of initial states; a subset is final iff
/// it intersects the NFA's finals. The empty subset, when reachable, is
/// kept as an ordinary dead state, so the result is complete.
///
/// Refuses inputs with more than `state_cap` states (default 24); the
/// bitmask width (64) is a hard ceiling.
DeterminizeResult determinize_subsets(const Nfa& nfa, std::size_t state_cap = kDefaultDeterminizeCap);
Dfa determinize(const Nfa& nfa, std::size_t state_cap = kDefaultDeterminizeCap);

} // namespace witnesslab

#endif
