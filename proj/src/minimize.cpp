#include "witnesslab/minimize.hpp"

#include <algorithm>
#include <unordered_map>

namespace witnesslab {

namespace {

struct SignatureHash {
    std::size_t operator()(const std::vector<State>& sig) const {
        std::size_t h = sig.size();
        for (State s : sig) h = h * 1000003u + s + 1;
        return h;
    }
};

void check_same_alphabet(const Dfa& d1, const Dfa& d2) {
    if (d1.alphabet() != d2.alphabet())
        throw std::invalid_argument("alphabet mismatch");
}

constexpr State kUnvisited = static_cast<State>(-1);

} // namespace

Dfa trim_reachable(const Dfa& dfa) {
    const std::size_t k = dfa.num_letters();
    std::vector<State> renumber(dfa.num_states(), kUnvisited);
    std::vector<State> order;
    renumber[dfa.initial()] = 0;
    order.push_back(dfa.initial());
    for (std::size_t head = 0; head < order.size(); ++head) {
        const State q = order[head];
        for (std::size_t a = 0; a < k; ++a) {
            const State t = dfa.next(q, a);
            if (renumber[t] == kUnvisited) {
                renumber[t] = static_cast<State>(order.size());
                order.push_back(t);
            }
        }
    }
    std::vector<State> delta(order.size() * k);
    std::vector<State> finals;
    for (std::size_t i = 0; i < order.size(); ++i) {
        for (std::size_t a = 0; a < k; ++a)
            delta[i * k + a] = renumber[dfa.next(order[i], a)];
        if (dfa.is_final(order[i])) finals.push_back(static_cast<State>(i));
    }
    return Dfa(order.size(), dfa.alphabet(), std::move(delta), 0, finals);
}

Dfa minimize_refine(const Dfa& dfa) {
    const Dfa t = trim_reachable(dfa);
    const std::size_t n = t.num_states();
    const std::size_t k = t.num_letters();

    // Moore refinement. Each round recomputes the class of every state from
    // the signature (own class, classes of successors); new class ids are
    // assigned in ascending first-occurrence order, which numbers blocks by
    // their smallest member.
    std::vector<State> cls(n, 0);
    std::size_t num_classes = 1;
    if (t.num_finals() != 0 && t.num_finals() != n) {
        num_classes = 2;
        for (State q = 0; q < n; ++q) cls[q] = t.is_final(q) ? 1 : 0;
    }
    for (;;) {
        std::unordered_map<std::vector<State>, State, SignatureHash> ids;
        ids.reserve(n);
        std::vector<State> next_cls(n);
        std::vector<State> sig(k + 1);
        for (State q = 0; q < n; ++q) {
            sig[0] = cls[q];
            for (std::size_t a = 0; a < k; ++a) sig[a + 1] = cls[t.next(q, a)];
            auto [it, inserted] = ids.emplace(sig, static_cast<State>(ids.size()));
            next_cls[q] = it->second;
        }
        const std::size_t count = ids.size();
        cls.swap(next_cls);
        if (count == num_classes) break;
        num_classes = count;
    }

    std::vector<State> repr(num_classes, kUnvisited);
    for (State q = 0; q < n; ++q)
        if (repr[cls[q]] == kUnvisited) repr[cls[q]] = q;

    std::vector<State> delta(num_classes * k);
    std::vector<State> finals;
    for (State c = 0; c < num_classes; ++c) {
        const State q = repr[c];
        for (std::size_t a = 0; a < k; ++a)
            delta[c * k + a] = cls[t.next(q, a)];
        if (t.is_final(q)) finals.push_back(c);
    }
    return Dfa(num_classes, t.alphabet(), std::move(delta), cls[0], finals);
}

Dfa minimize_brzozowski(const Dfa& dfa, std::size_t state_cap) {
    const Dfa trimmed = trim_reachable(dfa);
    const Dfa reversed_min = determinize(reverse(trimmed), state_cap);
    return determinize(reverse(reversed_min), reversed_min.num_states());
}

bool are_isomorphic(const Dfa& d1, const Dfa& d2) {
    check_same_alphabet(d1, d2);
    if (d1.num_states() != d2.num_states()) return false;
    const std::size_t k = d1.num_letters();

    std::vector<State> map12(d1.num_states(), kUnvisited);
    std::vector<State> map21(d2.num_states(), kUnvisited);
    std::vector<State> stack;
    map12[d1.initial()] = d2.initial();
    map21[d2.initial()] = d1.initial();
    stack.push_back(d1.initial());
    std::size_t visited = 1;
    while (!stack.empty()) {
        const State p = stack.back();
        stack.pop_back();
        const State q = map12[p];
        if (d1.is_final(p) != d2.is_final(q)) return false;
        for (std::size_t a = 0; a < k; ++a) {
            const State tp = d1.next(p, a);
            const State tq = d2.next(q, a);
            if (map12[tp] == kUnvisited && map21[tq] == kUnvisited) {
                map12[tp] = tq;
                map21[tq] = tp;
                stack.push_back(tp);
                ++visited;
            } else if (map12[tp] != tq) {
                return false;
            }
        }
    }
    return visited == d1.num_states();
}

bool are_equivalent(const Dfa& d1, const Dfa& d2) {
    check_same_alphabet(d1, d2);
    const std::size_t k = d1.num_letters();
    const std::size_t n2 = d2.num_states();

    std::unordered_map<std::uint64_t, bool> seen;
    std::vector<std::pair<State, State>> stack;
    const auto key = [n2](State p, State q) { return std::uint64_t{p} * n2 + q; };
    seen.emplace(key(d1.initial(), d2.initial()), true);
    stack.emplace_back(d1.initial(), d2.initial());
    while (!stack.empty()) {
        const auto [p, q] = stack.back();
        stack.pop_back();
        if (d1.is_final(p) != d2.is_final(q)) return false;
        for (std::size_t a = 0; a < k; ++a) {
            const State tp = d1.next(p, a);
            const State tq = d2.next(q, a);
            if (seen.emplace(key(tp, tq), true).second) stack.emplace_back(tp, tq);
        }
    }
    return true;
}

} // namespace witnesslab
