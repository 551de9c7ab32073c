#include "witnesslab/witness.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <unordered_set>

namespace witnesslab {

namespace {

struct ImagesHash {
    std::size_t operator()(const std::vector<State>& t) const {
        std::size_t h = t.size();
        for (State s : t) h = h * 1000003u + s + 1;
        return h;
    }
};

std::vector<State> default_finals(std::size_t n) {
    return {static_cast<State>(n - 1)};
}

void validate_spec(const WitnessSpec& spec) {
    if (spec.n < 3) throw std::invalid_argument("witness needs n >= 3");
    const auto& roles = family_roles(spec.family);
    if (spec.letters.size() != roles.size())
        throw std::invalid_argument("family takes " + std::to_string(roles.size()) +
                                    " letters, got \"" + spec.letters + "\"");
    for (std::size_t i = 0; i < spec.letters.size(); ++i)
        for (std::size_t j = i + 1; j < spec.letters.size(); ++j)
            if (spec.letters[i] == spec.letters[j])
                throw std::invalid_argument("repeated letter '" +
                                            std::string(1, spec.letters[i]) + "'");
    if (!spec.finals.empty()) {
        std::vector<State> distinct = spec.finals;
        std::sort(distinct.begin(), distinct.end());
        distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
        for (State f : distinct)
            if (f >= spec.n) throw std::invalid_argument("final state out of range");
        if (distinct.size() == spec.n)
            throw std::invalid_argument("finals must be a proper subset of the states");
    }
}

} // namespace

Transformation::Transformation(std::vector<State> images) : images_(std::move(images)) {
    for (State s : images_)
        if (s >= images_.size()) throw std::invalid_argument("transformation image out of range");
}

Transformation Transformation::identity(std::size_t n) {
    std::vector<State> t(n);
    for (std::size_t i = 0; i < n; ++i) t[i] = static_cast<State>(i);
    return Transformation(std::move(t));
}

Transformation Transformation::cycle(std::size_t n) {
    std::vector<State> t(n);
    for (std::size_t i = 0; i < n; ++i) t[i] = static_cast<State>((i + 1) % n);
    return Transformation(std::move(t));
}

Transformation Transformation::transposition(std::size_t n, State p, State q) {
    if (p == q) throw std::invalid_argument("transposition needs two distinct states");
    if (p >= n || q >= n) throw std::invalid_argument("transposition state out of range");
    Transformation t = identity(n);
    std::swap(t.images_[p], t.images_[q]);
    return t;
}

Transformation Transformation::singular(std::size_t n, State r, State s) {
    if (r == s) throw std::invalid_argument("singular map needs r != s");
    if (r >= n || s >= n) throw std::invalid_argument("singular state out of range");
    Transformation t = identity(n);
    t.images_[r] = s;
    return t;
}

Transformation Transformation::then(const Transformation& next) const {
    if (next.size() != size()) throw std::invalid_argument("transformation size mismatch");
    std::vector<State> t(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i) t[i] = next.images_[images_[i]];
    return Transformation(std::move(t));
}

Transformation letter_action(LetterRole role, std::size_t n,
                             std::optional<std::pair<State, State>> params) {
    switch (role) {
    case LetterRole::Cycle:
        if (params) throw std::invalid_argument("cycle takes no parameters");
        return Transformation::cycle(n);
    case LetterRole::Identity:
        if (params) throw std::invalid_argument("identity takes no parameters");
        return Transformation::identity(n);
    case LetterRole::Transposition: {
        const auto [p, q] = params.value_or(std::pair<State, State>{0, 1});
        return Transformation::transposition(n, p, q);
    }
    case LetterRole::Singular: {
        const auto [r, s] =
            params.value_or(std::pair<State, State>{static_cast<State>(n - 1), 0});
        return Transformation::singular(n, r, s);
    }
    }
    throw std::invalid_argument("unknown LetterRole");
}

const std::vector<LetterRole>& family_roles(WitnessFamily family) {
    static const std::vector<LetterRole> binary{LetterRole::Cycle, LetterRole::Transposition};
    static const std::vector<LetterRole> ternary{LetterRole::Cycle, LetterRole::Transposition,
                                                 LetterRole::Singular};
    static const std::vector<LetterRole> quaternary{LetterRole::Cycle, LetterRole::Transposition,
                                                    LetterRole::Singular, LetterRole::Identity};
    switch (family) {
    case WitnessFamily::UBinary: return binary;
    case WitnessFamily::UTernary: return ternary;
    case WitnessFamily::UQuaternary:
    case WitnessFamily::VQuaternary: return quaternary;
    }
    throw std::invalid_argument("unknown WitnessFamily");
}

std::string to_string(const WitnessSpec& spec) {
    std::string out(1, spec.family == WitnessFamily::VQuaternary ? 'V' : 'U');
    out += "[n=" + std::to_string(spec.n);
    out += ";letters=" + spec.letters;
    if (!spec.finals.empty() && spec.finals != default_finals(spec.n)) {
        out += ";finals=";
        for (std::size_t i = 0; i < spec.finals.size(); ++i) {
            if (i > 0) out += ',';
            out += std::to_string(spec.finals[i]);
        }
    }
    if (spec.transposition)
        out += ";trans=" + std::to_string(spec.transposition->first) + ',' +
               std::to_string(spec.transposition->second);
    if (spec.singular)
        out += ";sing=" + std::to_string(spec.singular->first) + ',' +
               std::to_string(spec.singular->second);
    out += ']';
    return out;
}

namespace {

// Hand-rolled cursor over the compact witness syntax; every error names the
// offset it happened at.
struct SpecCursor {
    std::string_view text;
    std::size_t pos = 0;

    [[noreturn]] void fail(const std::string& what) const {
        throw std::invalid_argument("witness spec \"" + std::string(text) + "\": " + what +
                                    " at offset " + std::to_string(pos));
    }

    bool done() const { return pos >= text.size(); }
    char peek() const { return text[pos]; }

    void expect(char c) {
        if (done() || peek() != c) fail(std::string("expected '") + c + "'");
        ++pos;
    }

    std::string_view take_until(std::string_view stops) {
        const std::size_t start = pos;
        while (!done() && stops.find(peek()) == std::string_view::npos) ++pos;
        return text.substr(start, pos - start);
    }

    std::size_t parse_number(std::string_view digits) const {
        std::size_t value = 0;
        const auto [ptr, ec] =
            std::from_chars(digits.data(), digits.data() + digits.size(), value);
        if (ec != std::errc() || ptr != digits.data() + digits.size() || digits.empty())
            fail("expected a number, got \"" + std::string(digits) + "\"");
        return value;
    }

    std::vector<State> parse_number_list(std::string_view body) const {
        std::vector<State> out;
        std::size_t start = 0;
        while (true) {
            const std::size_t comma = body.find(',', start);
            const std::string_view item =
                body.substr(start, comma == std::string_view::npos ? comma : comma - start);
            out.push_back(static_cast<State>(parse_number(item)));
            if (comma == std::string_view::npos) break;
            start = comma + 1;
        }
        return out;
    }
};

} // namespace

WitnessSpec parse_witness_spec(std::string_view text) {
    SpecCursor cur{text};
    if (cur.done() || (cur.peek() != 'U' && cur.peek() != 'V')) cur.fail("expected family U or V");
    const char family_char = cur.peek();
    ++cur.pos;
    cur.expect('[');

    WitnessSpec spec;
    bool have_n = false;
    bool have_letters = false;
    bool have_finals = false;
    while (true) {
        const std::string_view key = cur.take_until("=;]");
        cur.expect('=');
        const std::size_t value_pos = cur.pos;
        const std::string_view value = cur.take_until(";]");
        const auto value_fail = [&](const std::string& what) {
            SpecCursor at{text, value_pos};
            at.fail(what);
        };
        if (key == "n") {
            if (have_n) value_fail("duplicate key n");
            spec.n = cur.parse_number(value);
            have_n = true;
        } else if (key == "letters") {
            if (have_letters) value_fail("duplicate key letters");
            if (value.empty()) value_fail("letters must not be empty");
            for (char c : value)
                if (c < 'a' || c > 'z') value_fail("letters must be lower-case ascii");
            spec.letters = std::string(value);
            have_letters = true;
        } else if (key == "finals") {
            if (have_finals) value_fail("duplicate key finals");
            spec.finals = cur.parse_number_list(value);
            have_finals = true;
        } else if (key == "trans" || key == "sing") {
            const std::vector<State> pair = cur.parse_number_list(value);
            if (pair.size() != 2) value_fail("expected two comma-separated states");
            auto& slot = key == "trans" ? spec.transposition : spec.singular;
            if (slot) value_fail("duplicate key " + std::string(key));
            slot = std::pair<State, State>{pair[0], pair[1]};
        } else {
            cur.pos -= key.size() + 1 + value.size();
            cur.fail("unknown key \"" + std::string(key) + "\"");
        }
        if (cur.done()) cur.fail("expected ';' or ']'");
        if (cur.peek() == ']') break;
        cur.expect(';');
    }
    cur.expect(']');
    if (!cur.done()) cur.fail("trailing characters");
    if (!have_n) cur.fail("missing key n");
    if (!have_letters) cur.fail("missing key letters");

    if (family_char == 'U') {
        switch (spec.letters.size()) {
        case 2: spec.family = WitnessFamily::UBinary; break;
        case 3: spec.family = WitnessFamily::UTernary; break;
        case 4: spec.family = WitnessFamily::UQuaternary; break;
        default: cur.fail("family U takes 2, 3 or 4 letters");
        }
    } else {
        if (spec.letters.size() != 4) cur.fail("family V takes exactly 4 letters");
        spec.family = WitnessFamily::VQuaternary;
    }

    validate_spec(spec);
    return spec;
}

Dfa build_witness(const WitnessSpec& spec) {
    validate_spec(spec);
    const std::size_t n = spec.n;
    const auto& roles = family_roles(spec.family);
    const std::size_t k = roles.size();
    const bool v_family = spec.family == WitnessFamily::VQuaternary;

    const std::pair<State, State> trans_params = spec.transposition.value_or(
        v_family ? std::pair<State, State>{static_cast<State>(n - 2), static_cast<State>(n - 1)}
                 : std::pair<State, State>{0, 1});
    const std::pair<State, State> sing_params = spec.singular.value_or(
        v_family ? std::pair<State, State>{static_cast<State>(n - 1), static_cast<State>(n - 2)}
                 : std::pair<State, State>{static_cast<State>(n - 1), 0});

    std::vector<char> alphabet(spec.letters.begin(), spec.letters.end());
    std::sort(alphabet.begin(), alphabet.end());

    std::vector<State> delta(n * k);
    for (std::size_t i = 0; i < k; ++i) {
        std::optional<std::pair<State, State>> params;
        if (roles[i] == LetterRole::Transposition) params = trans_params;
        if (roles[i] == LetterRole::Singular) params = sing_params;
        const Transformation action = letter_action(roles[i], n, params);
        const std::size_t col = static_cast<std::size_t>(
            std::find(alphabet.begin(), alphabet.end(), spec.letters[i]) - alphabet.begin());
        for (State q = 0; q < n; ++q) delta[q * k + col] = action(q);
    }

    const std::vector<State> finals = spec.finals.empty() ? default_finals(n) : spec.finals;
    return Dfa(n, std::move(alphabet), std::move(delta), 0, finals);
}

Dfa permute_letters(const Dfa& dfa, const std::map<char, char>& mapping) {
    const std::vector<char>& alphabet = dfa.alphabet();
    const std::size_t k = alphabet.size();
    for (const auto& [from, to] : mapping) {
        dfa.letter_index(from);
        dfa.letter_index(to);
    }

    std::vector<std::size_t> col_of(k);
    std::vector<bool> taken(k, false);
    for (std::size_t i = 0; i < k; ++i) {
        const auto it = mapping.find(alphabet[i]);
        const char to = it == mapping.end() ? alphabet[i] : it->second;
        const std::size_t j = dfa.letter_index(to);
        if (taken[j]) throw std::invalid_argument("letter mapping is not a bijection");
        taken[j] = true;
        col_of[i] = j;
    }

    std::vector<State> delta(dfa.num_states() * k);
    for (State q = 0; q < dfa.num_states(); ++q)
        for (std::size_t i = 0; i < k; ++i)
            delta[q * k + col_of[i]] = dfa.next(q, i);
    return Dfa(dfa.num_states(), alphabet, std::move(delta), dfa.initial(), dfa.finals());
}

std::optional<std::size_t> transition_monoid_size(const Dfa& dfa, std::size_t cap) {
    const std::size_t n = dfa.num_states();
    const std::size_t k = dfa.num_letters();

    std::vector<std::vector<State>> gens(k, std::vector<State>(n));
    for (std::size_t a = 0; a < k; ++a)
        for (State q = 0; q < n; ++q) gens[a][q] = dfa.next(q, a);

    std::unordered_set<std::vector<State>, ImagesHash> seen;
    std::deque<std::vector<State>> work;
    const auto offer = [&](std::vector<State> t) {
        if (seen.size() > cap) return false;
        if (seen.insert(t).second) {
            if (seen.size() > cap) return false;
            work.push_back(std::move(t));
        }
        return true;
    };

    for (const auto& g : gens)
        if (!offer(g)) return std::nullopt;
    while (!work.empty()) {
        const std::vector<State> t = std::move(work.front());
        work.pop_front();
        for (const auto& g : gens) {
            std::vector<State> u(n);
            for (std::size_t q = 0; q < n; ++q) u[q] = g[t[q]];
            if (!offer(std::move(u))) return std::nullopt;
        }
    }
    return seen.size();
}

} // namespace witnesslab
