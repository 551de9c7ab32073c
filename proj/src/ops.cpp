#include "witnesslab/ops.hpp"

#include <string>
#include <unordered_map>
#include <utility>

namespace witnesslab {

namespace {

void check_same_alphabet(const std::vector<char>& a, const std::vector<char>& b) {
    if (a != b) throw std::invalid_argument("alphabet mismatch");
}

} // namespace

const char* to_string(BooleanOp op) {
    switch (op) {
    case BooleanOp::Union: return "union";
    case BooleanOp::Intersection: return "intersection";
    case BooleanOp::Difference: return "difference";
    case BooleanOp::SymmetricDifference: return "symmetric_difference";
    }
    throw std::invalid_argument("unknown BooleanOp");
}

bool apply(BooleanOp op, bool left, bool right) {
    switch (op) {
    case BooleanOp::Union: return left || right;
    case BooleanOp::Intersection: return left && right;
    case BooleanOp::Difference: return left && !right;
    case BooleanOp::SymmetricDifference: return left != right;
    }
    throw std::invalid_argument("unknown BooleanOp");
}

Dfa boolean_product(const Dfa& left, const Dfa& right, BooleanOp op, std::size_t pair_cap) {
    check_same_alphabet(left.alphabet(), right.alphabet());
    const std::size_t k = left.num_letters();
    const std::uint64_t n2 = right.num_states();

    std::unordered_map<std::uint64_t, State> index_of;
    std::vector<std::pair<State, State>> pairs;
    const auto intern = [&](State p, State q) {
        auto [it, inserted] = index_of.emplace(std::uint64_t{p} * n2 + q,
                                               static_cast<State>(pairs.size()));
        if (inserted) {
            if (pairs.size() >= pair_cap)
                throw CapExceeded("product would explore more than " +
                                  std::to_string(pair_cap) + " state pairs");
            pairs.emplace_back(p, q);
        }
        return it->second;
    };

    intern(left.initial(), right.initial());
    std::vector<State> delta;
    for (std::size_t head = 0; head < pairs.size(); ++head) {
        const auto [p, q] = pairs[head];
        for (std::size_t a = 0; a < k; ++a)
            delta.push_back(intern(left.next(p, a), right.next(q, a)));
    }

    std::vector<State> finals;
    for (std::size_t i = 0; i < pairs.size(); ++i)
        if (apply(op, left.is_final(pairs[i].first), right.is_final(pairs[i].second)))
            finals.push_back(static_cast<State>(i));
    return Dfa(pairs.size(), left.alphabet(), std::move(delta), 0, finals);
}

Nfa concatenate(const Nfa& left, const Nfa& right) {
    check_same_alphabet(left.alphabet(), right.alphabet());
    const std::size_t k = left.num_letters();
    const std::size_t nl = left.num_states();
    const State off = static_cast<State>(nl);

    std::vector<std::vector<State>> delta((nl + right.num_states()) * k);
    for (State q = 0; q < nl; ++q) {
        for (std::size_t a = 0; a < k; ++a) {
            std::vector<State>& row = delta[q * k + a];
            row = left.targets(q, a);
            bool enters_final = false;
            for (State t : row)
                if (left.is_final(t)) { enters_final = true; break; }
            if (enters_final)
                for (State i : right.initials()) row.push_back(i + off);
        }
    }
    for (State q = 0; q < right.num_states(); ++q)
        for (std::size_t a = 0; a < k; ++a)
            for (State t : right.targets(q, a))
                delta[(q + off) * k + a].push_back(t + off);

    std::vector<State> initials = left.initials();
    bool left_accepts_empty = false;
    for (State i : left.initials())
        if (left.is_final(i)) left_accepts_empty = true;
    if (left_accepts_empty)
        for (State i : right.initials()) initials.push_back(i + off);

    std::vector<State> finals;
    for (State f : right.finals()) finals.push_back(f + off);

    return Nfa(nl + right.num_states(), left.alphabet(), std::move(delta), initials, finals);
}

Nfa concatenate(const Dfa& left, const Dfa& right) { return concatenate(to_nfa(left), to_nfa(right)); }
Nfa concatenate(const Dfa& left, const Nfa& right) { return concatenate(to_nfa(left), right); }
Nfa concatenate(const Nfa& left, const Dfa& right) { return concatenate(left, to_nfa(right)); }

Nfa star(const Nfa& nfa) {
    const std::size_t n = nfa.num_states();
    const std::size_t k = nfa.num_letters();
    const State s = static_cast<State>(n);

    // Moves of the initial set, reused by s and by every final state.
    std::vector<std::vector<State>> restart(k);
    for (std::size_t a = 0; a < k; ++a)
        for (State i : nfa.initials())
            for (State t : nfa.targets(i, a)) restart[a].push_back(t);

    std::vector<std::vector<State>> delta((n + 1) * k);
    for (State q = 0; q < n; ++q) {
        for (std::size_t a = 0; a < k; ++a) {
            std::vector<State>& row = delta[q * k + a];
            row = nfa.targets(q, a);
            if (nfa.is_final(q))
                row.insert(row.end(), restart[a].begin(), restart[a].end());
        }
    }
    for (std::size_t a = 0; a < k; ++a) delta[s * k + a] = restart[a];

    std::vector<State> finals = nfa.finals();
    finals.push_back(s);
    return Nfa(n + 1, nfa.alphabet(), std::move(delta), {s}, finals);
}

Nfa star(const Dfa& dfa) { return star(to_nfa(dfa)); }

} // namespace witnesslab
