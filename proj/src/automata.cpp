#include "witnesslab/automata.hpp"

#include <algorithm>
#include <queue>
#include <unordered_map>

namespace witnesslab {

namespace {

void check_letters(const std::vector<char>& alphabet) {
    for (std::size_t i = 0; i < alphabet.size(); ++i)
        for (std::size_t j = i + 1; j < alphabet.size(); ++j)
            if (alphabet[i] == alphabet[j])
                throw std::invalid_argument(std::string("duplicate alphabet letter '") + alphabet[i] + "'");
}

std::size_t find_letter(const std::vector<char>& alphabet, char letter) {
    for (std::size_t i = 0; i < alphabet.size(); ++i)
        if (alphabet[i] == letter) return i;
    throw std::invalid_argument(std::string("unknown letter '") + letter + "'");
}

} // namespace

Dfa::Dfa(std::size_t n, std::vector<char> alphabet, std::vector<State> delta,
         State initial, const std::vector<State>& finals)
    : n_(n), alphabet_(std::move(alphabet)), delta_(std::move(delta)), initial_(initial) {
    if (n_ == 0) throw std::invalid_argument("DFA needs at least one state");
    check_letters(alphabet_);
    if (delta_.size() != n_ * alphabet_.size())
        throw std::invalid_argument("transition table is not total: expected " +
                                    std::to_string(n_ * alphabet_.size()) + " entries, got " +
                                    std::to_string(delta_.size()));
    for (State t : delta_)
        if (t >= n_) throw std::invalid_argument("transition target " + std::to_string(t) + " out of range");
    if (initial_ >= n_) throw std::invalid_argument("initial state out of range");
    final_mask_.assign(n_, false);
    for (State f : finals) {
        if (f >= n_) throw std::invalid_argument("final state " + std::to_string(f) + " out of range");
        if (!final_mask_[f]) {
            final_mask_[f] = true;
            ++num_finals_;
        }
    }
}

std::size_t Dfa::letter_index(char letter) const { return find_letter(alphabet_, letter); }

std::vector<State> Dfa::finals() const {
    std::vector<State> out;
    out.reserve(num_finals_);
    for (State q = 0; q < n_; ++q)
        if (final_mask_[q]) out.push_back(q);
    return out;
}

Nfa::Nfa(std::size_t n, std::vector<char> alphabet, std::vector<std::vector<State>> delta,
         const std::vector<State>& initials, const std::vector<State>& finals)
    : n_(n), alphabet_(std::move(alphabet)), delta_(std::move(delta)) {
    check_letters(alphabet_);
    if (delta_.size() != n_ * alphabet_.size())
        throw std::invalid_argument("NFA transition table has wrong size");
    for (auto& targets : delta_) {
        std::sort(targets.begin(), targets.end());
        targets.erase(std::unique(targets.begin(), targets.end()), targets.end());
        for (State t : targets)
            if (t >= n_) throw std::invalid_argument("NFA transition target out of range");
    }
    initial_mask_.assign(n_, false);
    final_mask_.assign(n_, false);
    for (State q : initials) {
        if (q >= n_) throw std::invalid_argument("NFA initial state out of range");
        if (!initial_mask_[q]) {
            initial_mask_[q] = true;
            initials_.push_back(q);
        }
    }
    for (State q : finals) {
        if (q >= n_) throw std::invalid_argument("NFA final state out of range");
        if (!final_mask_[q]) {
            final_mask_[q] = true;
            finals_.push_back(q);
        }
    }
    std::sort(initials_.begin(), initials_.end());
    std::sort(finals_.begin(), finals_.end());
}

std::size_t Nfa::letter_index(char letter) const { return find_letter(alphabet_, letter); }

bool accepts(const Dfa& dfa, std::string_view word) {
    State q = dfa.initial();
    for (char x : word) q = dfa.next(q, dfa.letter_index(x));
    return dfa.is_final(q);
}

bool accepts(const Nfa& nfa, std::string_view word) {
    std::vector<bool> current(nfa.num_states(), false);
    for (State q : nfa.initials()) current[q] = true;
    for (char x : word) {
        const std::size_t a = nfa.letter_index(x);
        std::vector<bool> next(nfa.num_states(), false);
        for (State q = 0; q < nfa.num_states(); ++q) {
            if (!current[q]) continue;
            for (State t : nfa.targets(q, a)) next[t] = true;
        }
        current.swap(next);
    }
    for (State q = 0; q < nfa.num_states(); ++q)
        if (current[q] && nfa.is_final(q)) return true;
    return false;
}

Nfa to_nfa(const Dfa& dfa) {
    const std::size_t k = dfa.num_letters();
    std::vector<std::vector<State>> delta(dfa.num_states() * k);
    for (State q = 0; q < dfa.num_states(); ++q)
        for (std::size_t a = 0; a < k; ++a)
            delta[q * k + a] = {dfa.next(q, a)};
    return Nfa(dfa.num_states(), dfa.alphabet(), std::move(delta), {dfa.initial()}, dfa.finals());
}

Nfa reverse(const Dfa& dfa) {
    const std::size_t k = dfa.num_letters();
    std::vector<std::vector<State>> delta(dfa.num_states() * k);
    for (State q = 0; q < dfa.num_states(); ++q)
        for (std::size_t a = 0; a < k; ++a)
            delta[dfa.next(q, a) * k + a].push_back(q);
    return Nfa(dfa.num_states(), dfa.alphabet(), std::move(delta), dfa.finals(), {dfa.initial()});
}

Nfa reverse(const Nfa& nfa) {
    const std::size_t k = nfa.num_letters();
    std::vector<std::vector<State>> delta(nfa.num_states() * k);
    for (State q = 0; q < nfa.num_states(); ++q)
        for (std::size_t a = 0; a < k; ++a)
            for (State t : nfa.targets(q, a))
                delta[t * k + a].push_back(q);
    return Nfa(nfa.num_states(), nfa.alphabet(), std::move(delta), nfa.finals(), nfa.initials());
}

Dfa complement(const Dfa& dfa) {
    std::vector<State> finals;
    for (State q = 0; q < dfa.num_states(); ++q)
        if (!dfa.is_final(q)) finals.push_back(q);
    return Dfa(dfa.num_states(), dfa.alphabet(), dfa.delta(), dfa.initial(), finals);
}

DeterminizeResult determinize_subsets(const Nfa& nfa, std::size_t state_cap) {
    if (nfa.num_states() > state_cap)
        throw CapExceeded("determinization refused: NFA has " + std::to_string(nfa.num_states()) +
                          " states, cap is " + std::to_string(state_cap));
    if (nfa.num_states() > kStateSetWidth)
        throw CapExceeded("determinization refused: NFA has " + std::to_string(nfa.num_states()) +
                          " states, subset bitmask width is " + std::to_string(kStateSetWidth));

    const std::size_t k = nfa.num_letters();

    // Per-letter successor mask of each NFA state, so one subset step is a
    // union of precomputed masks.
    std::vector<StateSet> step(nfa.num_states() * k);
    for (State q = 0; q < nfa.num_states(); ++q)
        for (std::size_t a = 0; a < k; ++a) {
            StateSet s;
            for (State t : nfa.targets(q, a)) s.insert(t);
            step[q * k + a] = s;
        }
    StateSet final_mask;
    for (State q : nfa.finals()) final_mask.insert(q);

    StateSet start;
    for (State q : nfa.initials()) start.insert(q);

    std::unordered_map<std::uint64_t, State> index_of;
    std::vector<StateSet> subsets;
    std::vector<State> delta;
    std::vector<State> finals;

    index_of.emplace(start.bits(), 0);
    subsets.push_back(start);
    for (std::size_t head = 0; head < subsets.size(); ++head) {
        const StateSet current = subsets[head];
        if (final_mask.intersects(current)) finals.push_back(static_cast<State>(head));
        for (std::size_t a = 0; a < k; ++a) {
            StateSet successor;
            current.for_each([&](State q) {
                successor = StateSet(successor.bits() | step[q * k + a].bits());
            });
            auto [it, inserted] = index_of.emplace(successor.bits(), static_cast<State>(subsets.size()));
            if (inserted) subsets.push_back(successor);
            delta.push_back(it->second);
        }
    }

    Dfa dfa(subsets.size(), nfa.alphabet(), std::move(delta), 0, finals);
    return DeterminizeResult{std::move(dfa), std::move(subsets)};
}

Dfa determinize(const Nfa& nfa, std::size_t state_cap) {
    return determinize_subsets(nfa, state_cap).dfa;
}

} // namespace witnesslab
