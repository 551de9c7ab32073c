#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>
#include <vector>

#include "witnesslab/automata.hpp"
#include "witnesslab/minimize.hpp"
#include "witnesslab/witness.hpp"

using namespace witnesslab;

namespace {

Dfa u(std::size_t n, const std::string& letters, std::vector<State> finals = {}) {
    WitnessSpec spec;
    spec.family = letters.size() == 2 ? WitnessFamily::UBinary : WitnessFamily::UTernary;
    spec.n = n;
    spec.letters = letters;
    spec.finals = std::move(finals);
    return build_witness(spec);
}

/// One-state DFA over {a}: Sigma* when accepting, the empty language
/// otherwise.
Dfa one_state(bool accepting) {
    return Dfa(1, {'a'}, {0}, 0, accepting ? std::vector<State>{0} : std::vector<State>{});
}

} // namespace

TEST_CASE("StateSet is a 64-bit characteristic bitmask") {
    StateSet s;
    CHECK(s.empty());
    CHECK(s.count() == 0);

    s.insert(0);
    s.insert(5);
    s.insert(63);
    CHECK(s.contains(0));
    CHECK(s.contains(5));
    CHECK(s.contains(63));
    CHECK_FALSE(s.contains(1));
    CHECK(s.count() == 3);

    s.erase(5);
    CHECK_FALSE(s.contains(5));
    CHECK(s.count() == 2);

    CHECK(StateSet::singleton(3).bits() == 8);
    CHECK(StateSet::full(4).bits() == 15);
    CHECK(StateSet::full(64).count() == 64);

    CHECK(StateSet::full(4).intersects(StateSet::singleton(2)));
    CHECK_FALSE(StateSet::singleton(1).intersects(StateSet::singleton(2)));

    std::vector<State> seen;
    StateSet::full(3).for_each([&](State q) { seen.push_back(q); });
    CHECK(seen == std::vector<State>{0, 1, 2});
}

TEST_CASE("Dfa constructor validates its table") {
    CHECK_NOTHROW(Dfa(1, {'a'}, {0}, 0, {0}));
    CHECK_NOTHROW(Dfa(1, {'a'}, {0}, 0, {}));

    // partial table
    CHECK_THROWS_AS(Dfa(2, {'a', 'b'}, {0, 1, 0}, 0, {1}), std::invalid_argument);
    // out-of-range target
    CHECK_THROWS_AS(Dfa(2, {'a'}, {0, 2}, 0, {1}), std::invalid_argument);
    // out-of-range initial / final
    CHECK_THROWS_AS(Dfa(2, {'a'}, {0, 1}, 2, {1}), std::invalid_argument);
    CHECK_THROWS_AS(Dfa(2, {'a'}, {0, 1}, 0, {2}), std::invalid_argument);
    // duplicate letters
    CHECK_THROWS_AS(Dfa(1, {'a', 'a'}, {0, 0}, 0, {}), std::invalid_argument);
    // an empty alphabet is degenerate but legal: completeness holds vacuously
    CHECK_NOTHROW(Dfa(1, {}, {}, 0, {0}));
}

TEST_CASE("Dfa accessors") {
    const Dfa d = u(4, "abc");
    CHECK(d.num_states() == 4);
    CHECK(d.alphabet() == std::vector<char>{'a', 'b', 'c'});
    CHECK(d.num_letters() == 3);
    CHECK(d.initial() == 0);
    CHECK(d.letter_index('b') == 1);
    CHECK_THROWS_AS(d.letter_index('z'), std::invalid_argument);
    CHECK(d.finals() == std::vector<State>{3});
    CHECK(d.num_finals() == 1);
    CHECK(d.is_final(3));
    CHECK_FALSE(d.is_final(0));

    // the cycle wraps around: delta(3, a) = 0
    CHECK(d.next(3, d.letter_index('a')) == 0);
}

TEST_CASE("Nfa constructor validates its table") {
    CHECK_NOTHROW(Nfa(2, {'a'}, {{1}, {0, 1}}, {0}, {1}));
    // empty initial set is legal (empty language)
    CHECK_NOTHROW(Nfa(2, {'a'}, {{1}, {}}, {}, {1}));

    CHECK_THROWS_AS(Nfa(2, {'a'}, {{1}}, {0}, {1}), std::invalid_argument);
    CHECK_THROWS_AS(Nfa(2, {'a'}, {{2}, {}}, {0}, {1}), std::invalid_argument);
    CHECK_THROWS_AS(Nfa(2, {'a'}, {{0}, {}}, {2}, {1}), std::invalid_argument);
    CHECK_THROWS_AS(Nfa(2, {'a'}, {{0}, {}}, {0}, {2}), std::invalid_argument);
}

TEST_CASE("Nfa keeps target sets sorted and duplicate-free") {
    const Nfa nfa(3, {'a'}, {{2, 0, 2}, {}, {1, 0}}, {2, 0}, {1});
    CHECK(nfa.targets(0, 0) == std::vector<State>{0, 2});
    CHECK(nfa.targets(2, 0) == std::vector<State>{0, 1});
    CHECK(nfa.initials() == std::vector<State>{0, 2});
    CHECK(nfa.is_initial(2));
    CHECK_FALSE(nfa.is_initial(1));
    CHECK(nfa.is_final(1));
}

TEST_CASE("accepts on a DFA walks the table") {
    const Dfa sigma_star = one_state(true);
    CHECK(accepts(sigma_star, ""));
    CHECK(accepts(sigma_star, "aaa"));

    const Dfa empty = one_state(false);
    CHECK_FALSE(accepts(empty, ""));
    CHECK_FALSE(accepts(empty, "a"));

    const Dfa u3 = u(3, "abc");
    CHECK(accepts(u3, "aa"));       // 0 -> 1 -> 2, final
    CHECK_FALSE(accepts(u3, ""));   // initial not final
    CHECK_FALSE(accepts(u3, "a"));

    const Dfa u4 = u(4, "abc");
    CHECK_FALSE(accepts(u4, "c"));  // c fixes 0, and 0 is not final
    CHECK(accepts(u4, "aaa"));

    CHECK_THROWS_AS(accepts(u4, "ax"), std::invalid_argument);
}

TEST_CASE("accepts on an NFA is existential") {
    // two initial states, only the branch from state 1 reaches the final
    const Nfa nfa(3, {'a'}, {{}, {2}, {}}, {0, 1}, {2});
    CHECK(accepts(nfa, "a"));
    CHECK_FALSE(accepts(nfa, ""));
    CHECK_FALSE(accepts(nfa, "aa"));

    const Nfa no_initials(2, {'a'}, {{1}, {}}, {}, {1});
    CHECK_FALSE(accepts(no_initials, ""));
    CHECK_FALSE(accepts(no_initials, "a"));

    CHECK_THROWS_AS(accepts(nfa, "b"), std::invalid_argument);
}

TEST_CASE("to_nfa is a faithful copy") {
    const Dfa d = u(4, "abc");
    const Nfa nfa = to_nfa(d);
    CHECK(nfa.num_states() == 4);
    CHECK(nfa.initials() == std::vector<State>{0});
    CHECK(nfa.finals() == std::vector<State>{3});
    for (State q = 0; q < 4; ++q)
        for (std::size_t a = 0; a < 3; ++a)
            CHECK(nfa.targets(q, a) == std::vector<State>{d.next(q, a)});

    for (const char* w : {"", "a", "aaa", "ba", "caaa", "aabaa"})
        CHECK(accepts(d, w) == accepts(nfa, w));
}

TEST_CASE("reverse swaps initials with finals and flips arrows") {
    const Dfa u4 = u(4, "abc");
    const Nfa rev = reverse(u4);
    CHECK(rev.num_states() == 4);
    CHECK(rev.initials() == std::vector<State>{3});
    CHECK(rev.finals() == std::vector<State>{0});

    // c maps 3 -> 0 and fixes the rest, so the preimage of 0 under c is {0, 3}
    CHECK(rev.targets(0, rev.letter_index('c')) == std::vector<State>{0, 3});
    // a is the 4-cycle: preimage of 0 is {3}
    CHECK(rev.targets(0, rev.letter_index('a')) == std::vector<State>{3});

    // reversal of a palindromic-closed language changes nothing
    const Nfa rev_sigma = reverse(one_state(true));
    CHECK(accepts(rev_sigma, ""));
    CHECK(accepts(rev_sigma, "aa"));

    // w in L(d) iff reversed w in L(reverse(d))
    const std::string w = "abcaa";
    const std::string rw(w.rbegin(), w.rend());
    CHECK(accepts(u4, w) == accepts(rev, rw));
}

TEST_CASE("reverse of an NFA is an involution") {
    const Nfa nfa(3, {'a', 'b'}, {{1, 2}, {}, {1}, {}, {0}, {2}}, {0, 1}, {2});
    const Nfa back = reverse(reverse(nfa));
    CHECK(back == nfa);
}

TEST_CASE("complement flips the final mask and nothing else") {
    const Dfa u3 = u(3, "abc");
    const Dfa comp = complement(u3);
    CHECK(comp.finals() == std::vector<State>{0, 1});
    CHECK(comp.delta() == u3.delta());
    CHECK(complement(comp) == u3);

    CHECK(accepts(complement(one_state(false)), "aaa"));
    for (const char* w : {"", "a", "ab", "ca"})
        CHECK(accepts(comp, w) == !accepts(u3, w));
}

TEST_CASE("determinize performs the accessible subset construction") {
    // already-deterministic NFA with one initial state: isomorphic result
    const Dfa u4 = u(4, "abc");
    const Dfa redet = determinize(to_nfa(u4));
    CHECK(are_isomorphic(redet, u4));

    // reversal of U_n needs all 2^n subsets
    CHECK(determinize(reverse(u(3, "abc"))).num_states() == 8);
    const Dfa rev4 = determinize(reverse(u4));
    CHECK(rev4.num_states() == 16);
    // ... and is already minimal
    CHECK(minimize_refine(rev4).num_states() == 16);
}

TEST_CASE("determinize keeps the empty subset as a dead state") {
    // 'a' has no move out of state 0, so the empty subset is reached
    const Nfa nfa(2, {'a'}, {{}, {0}}, {0}, {0});
    const DeterminizeResult r = determinize_subsets(nfa);
    CHECK(r.dfa.num_states() == 2);
    CHECK(r.subsets[0] == StateSet::singleton(0));
    CHECK(r.subsets[1].empty());
    // the dead state loops to itself, the table stays total
    CHECK(r.dfa.next(1, 0) == 1);
    CHECK(accepts(r.dfa, ""));
    CHECK_FALSE(accepts(r.dfa, "a"));
}

TEST_CASE("determinize agrees with the NFA on membership") {
    const Nfa rev = reverse(u(4, "abc"));
    const Dfa det = determinize(rev);
    // enumerate all words up to length 5 over {a,b,c}
    std::vector<std::string> words = {""};
    std::vector<std::string> frontier = {""};
    for (int len = 0; len < 5; ++len) {
        std::vector<std::string> next;
        for (const std::string& w : frontier)
            for (char x : {'a', 'b', 'c'}) next.push_back(w + x);
        for (const std::string& w : next) words.push_back(w);
        frontier = std::move(next);
    }
    for (const std::string& w : words) CHECK(accepts(rev, w) == accepts(det, w));
}

TEST_CASE("determinize refuses oversized inputs") {
    const Nfa big = reverse(u(30, "abc"));
    CHECK_THROWS_AS(determinize(big), CapExceeded);
    // a custom cap widens the input limit
    CHECK(determinize(reverse(u(8, "abc")), 8).num_states() == 256);
    CHECK_THROWS_AS(determinize(reverse(u(8, "abc")), 7), CapExceeded);
    // the bitmask width is a hard ceiling no cap can lift
    const Nfa huge = reverse(u(70, "abc"));
    CHECK_THROWS_AS(determinize(huge, 100), CapExceeded);
}

TEST_CASE("determinize state count is the reachable subset count") {
    const Nfa rev = reverse(u(5, "abc"));
    const DeterminizeResult r = determinize_subsets(rev);
    CHECK(r.dfa.num_states() == r.subsets.size());
    CHECK(r.dfa.num_states() <= 32);
    // discovery order starts from the initial subset
    StateSet init;
    for (State q : rev.initials()) init.insert(q);
    CHECK(r.subsets[0] == init);
}
