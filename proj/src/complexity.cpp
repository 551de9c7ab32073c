#include "witnesslab/complexity.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>

#include "witnesslab/minimize.hpp"

namespace witnesslab {

const std::vector<OperationKind>& all_kinds() {
    static const std::vector<OperationKind> kinds{
        OperationKind::BoolUnion,
        OperationKind::BoolIntersection,
        OperationKind::BoolDifference,
        OperationKind::BoolSymmetricDifference,
        OperationKind::BoolRRightUnion,
        OperationKind::BoolRRightIntersection,
        OperationKind::BoolRRightDifference,
        OperationKind::BoolRRightDifferenceRev,
        OperationKind::BoolRRightSymmetricDifference,
        OperationKind::BoolRBothUnion,
        OperationKind::BoolRBothIntersection,
        OperationKind::BoolRBothDifference,
        OperationKind::BoolRBothSymmetricDifference,
        OperationKind::CatRRight,
        OperationKind::CatRLeft,
        OperationKind::CatROuter,
        OperationKind::StarR,
        OperationKind::Cat,
        OperationKind::Star,
        OperationKind::Rev,
    };
    return kinds;
}

const char* kind_name(OperationKind kind) {
    switch (kind) {
    case OperationKind::BoolUnion: return "union";
    case OperationKind::BoolIntersection: return "intersection";
    case OperationKind::BoolDifference: return "difference";
    case OperationKind::BoolSymmetricDifference: return "symmetric_difference";
    case OperationKind::BoolRRightUnion: return "union_r_right";
    case OperationKind::BoolRRightIntersection: return "intersection_r_right";
    case OperationKind::BoolRRightDifference: return "difference_r_right";
    case OperationKind::BoolRRightDifferenceRev: return "difference_rev_r_right";
    case OperationKind::BoolRRightSymmetricDifference: return "symmetric_difference_r_right";
    case OperationKind::BoolRBothUnion: return "union_r_both";
    case OperationKind::BoolRBothIntersection: return "intersection_r_both";
    case OperationKind::BoolRBothDifference: return "difference_r_both";
    case OperationKind::BoolRBothSymmetricDifference: return "symmetric_difference_r_both";
    case OperationKind::CatRRight: return "cat_r_right";
    case OperationKind::CatRLeft: return "cat_r_left";
    case OperationKind::CatROuter: return "cat_r_outer";
    case OperationKind::StarR: return "star_r";
    case OperationKind::Cat: return "cat";
    case OperationKind::Star: return "star";
    case OperationKind::Rev: return "rev";
    }
    throw std::invalid_argument("unknown OperationKind");
}

const char* kind_group(OperationKind kind) {
    switch (kind) {
    case OperationKind::BoolUnion:
    case OperationKind::BoolIntersection:
    case OperationKind::BoolDifference:
    case OperationKind::BoolSymmetricDifference: return "bool";
    case OperationKind::BoolRRightUnion:
    case OperationKind::BoolRRightIntersection:
    case OperationKind::BoolRRightDifference:
    case OperationKind::BoolRRightDifferenceRev:
    case OperationKind::BoolRRightSymmetricDifference: return "bool_r_right";
    case OperationKind::BoolRBothUnion:
    case OperationKind::BoolRBothIntersection:
    case OperationKind::BoolRBothDifference:
    case OperationKind::BoolRBothSymmetricDifference: return "bool_r_both";
    default: return kind_name(kind);
    }
}

const char* kind_op_label(OperationKind kind) {
    switch (kind) {
    case OperationKind::BoolUnion:
    case OperationKind::BoolRRightUnion:
    case OperationKind::BoolRBothUnion: return "union";
    case OperationKind::BoolIntersection:
    case OperationKind::BoolRRightIntersection:
    case OperationKind::BoolRBothIntersection: return "intersection";
    case OperationKind::BoolDifference:
    case OperationKind::BoolRRightDifference:
    case OperationKind::BoolRBothDifference: return "difference";
    case OperationKind::BoolRRightDifferenceRev: return "difference_rev";
    case OperationKind::BoolSymmetricDifference:
    case OperationKind::BoolRRightSymmetricDifference:
    case OperationKind::BoolRBothSymmetricDifference: return "symmetric_difference";
    default: return "-";
    }
}

namespace {

bool is_plain_bool(OperationKind kind) {
    switch (kind) {
    case OperationKind::BoolUnion:
    case OperationKind::BoolIntersection:
    case OperationKind::BoolDifference:
    case OperationKind::BoolSymmetricDifference: return true;
    default: return false;
    }
}

BooleanOp kind_bool_op(OperationKind kind) {
    switch (kind) {
    case OperationKind::BoolUnion:
    case OperationKind::BoolRRightUnion:
    case OperationKind::BoolRBothUnion: return BooleanOp::Union;
    case OperationKind::BoolIntersection:
    case OperationKind::BoolRRightIntersection:
    case OperationKind::BoolRBothIntersection: return BooleanOp::Intersection;
    case OperationKind::BoolDifference:
    case OperationKind::BoolRRightDifference:
    case OperationKind::BoolRRightDifferenceRev:
    case OperationKind::BoolRBothDifference: return BooleanOp::Difference;
    case OperationKind::BoolSymmetricDifference:
    case OperationKind::BoolRRightSymmetricDifference:
    case OperationKind::BoolRBothSymmetricDifference: return BooleanOp::SymmetricDifference;
    default: throw std::invalid_argument("kind has no boolean operation");
    }
}

std::size_t pow2(std::size_t e) {
    if (e >= 63) throw std::overflow_error("bound does not fit in 64 bits");
    return std::size_t{1} << e;
}

void check_sizes(OperationKind kind, std::size_t m, std::size_t n) {
    if (n < 3 || (!kind_is_unary(kind) && m < 3))
        throw std::invalid_argument("witness sizes start at 3");
}

WitnessSpec u_spec(std::size_t n, std::string letters, std::vector<State> finals = {}) {
    WitnessSpec spec;
    spec.family = letters.size() == 2   ? WitnessFamily::UBinary
                  : letters.size() == 3 ? WitnessFamily::UTernary
                                        : WitnessFamily::UQuaternary;
    spec.n = n;
    spec.letters = std::move(letters);
    spec.finals = std::move(finals);
    return spec;
}

WitnessSpec v_spec(std::size_t n, std::string letters) {
    WitnessSpec spec;
    spec.family = WitnessFamily::VQuaternary;
    spec.n = n;
    spec.letters = std::move(letters);
    return spec;
}

} // namespace

bool kind_is_unary(OperationKind kind) {
    switch (kind) {
    case OperationKind::StarR:
    case OperationKind::Star:
    case OperationKind::Rev: return true;
    default: return false;
    }
}

bool kind_is_double_exp(OperationKind kind) {
    switch (kind) {
    case OperationKind::BoolRBothUnion:
    case OperationKind::BoolRBothIntersection:
    case OperationKind::BoolRBothDifference:
    case OperationKind::BoolRBothSymmetricDifference:
    case OperationKind::CatRLeft:
    case OperationKind::CatROuter: return true;
    default: return false;
    }
}

std::pair<std::size_t, std::size_t> default_sweep_range(OperationKind kind) {
    return kind_is_double_exp(kind) ? std::pair<std::size_t, std::size_t>{3, 6}
                                    : std::pair<std::size_t, std::size_t>{3, 7};
}

std::vector<OperationKind> kinds_by_name(std::string_view name) {
    if (name == "all") return all_kinds();
    std::vector<OperationKind> out;
    for (OperationKind kind : all_kinds())
        if (name == kind_name(kind) || name == kind_group(kind)) out.push_back(kind);
    return out;
}

std::size_t expected_bound(OperationKind kind, std::size_t m, std::size_t n) {
    check_sizes(kind, m, n);
    switch (kind) {
    case OperationKind::BoolUnion:
    case OperationKind::BoolIntersection:
    case OperationKind::BoolDifference:
    case OperationKind::BoolSymmetricDifference: return m * n;
    case OperationKind::BoolRRightUnion:
    case OperationKind::BoolRRightIntersection:
    case OperationKind::BoolRRightDifference:
    case OperationKind::BoolRRightDifferenceRev: return m * pow2(n) - (m - 1);
    case OperationKind::BoolRRightSymmetricDifference: return m * pow2(n);
    case OperationKind::BoolRBothUnion:
    case OperationKind::BoolRBothIntersection:
    case OperationKind::BoolRBothDifference: return (pow2(m) - 1) * (pow2(n) - 1) + 1;
    case OperationKind::BoolRBothSymmetricDifference: return pow2(m + n - 1);
    case OperationKind::CatRRight: return (m - 1) * pow2(n) + pow2(n - 1) - (m - 1);
    case OperationKind::CatRLeft: return 3 * pow2(m + n - 2);
    case OperationKind::CatROuter: return 3 * pow2(m + n - 2) - pow2(n) + 1;
    case OperationKind::StarR: return pow2(n);
    case OperationKind::Cat: return (m - 1) * pow2(n) + pow2(n - 1);
    case OperationKind::Star: return pow2(n - 1) + pow2(n - 2);
    case OperationKind::Rev: return pow2(n);
    }
    throw std::invalid_argument("unknown OperationKind");
}

std::pair<WitnessSpec, std::optional<WitnessSpec>> default_witnesses(OperationKind kind,
                                                                     std::size_t m,
                                                                     std::size_t n) {
    check_sizes(kind, m, n);
    switch (kind) {
    case OperationKind::BoolUnion:
    case OperationKind::BoolIntersection:
    case OperationKind::BoolDifference:
    case OperationKind::BoolSymmetricDifference:
        if (m != n) return {u_spec(m, "ab"), u_spec(n, "ab")};
        return {u_spec(m, "abc"), u_spec(n, "bac")};
    case OperationKind::BoolRRightUnion:
    case OperationKind::BoolRRightIntersection:
    case OperationKind::BoolRRightDifference:
    case OperationKind::BoolRRightDifferenceRev:
    case OperationKind::BoolRRightSymmetricDifference:
    case OperationKind::CatRRight:
    case OperationKind::Cat: return {u_spec(m, "abc"), u_spec(n, "abc")};
    case OperationKind::BoolRBothUnion:
    case OperationKind::BoolRBothIntersection:
    case OperationKind::BoolRBothDifference:
    case OperationKind::BoolRBothSymmetricDifference:
        return {u_spec(m, "abc", {0, 2}),
                n >= 4 ? u_spec(n, "bac", {1, 3}) : u_spec(n, "bac", {1})};
    case OperationKind::CatRLeft: return {v_spec(m, "abcd"), v_spec(n, "dcba")};
    case OperationKind::CatROuter: return {u_spec(n, "dcba"), u_spec(m, "abcd")};
    case OperationKind::StarR: return {u_spec(n, "abc", {0}), std::nullopt};
    case OperationKind::Star: return {u_spec(n, "ab"), std::nullopt};
    case OperationKind::Rev: return {u_spec(n, "abc"), std::nullopt};
    }
    throw std::invalid_argument("unknown OperationKind");
}

Automaton construct(OperationKind kind, const Dfa& left, const Dfa* right, std::size_t det_cap,
                    std::size_t pair_cap) {
    if (kind_is_unary(kind)) {
        if (right)
            throw std::invalid_argument(std::string(kind_name(kind)) + " takes one operand");
    } else if (!right) {
        throw std::invalid_argument(std::string(kind_name(kind)) + " needs two operands");
    }
    switch (kind) {
    case OperationKind::BoolUnion:
    case OperationKind::BoolIntersection:
    case OperationKind::BoolDifference:
    case OperationKind::BoolSymmetricDifference:
        return boolean_product(left, *right, kind_bool_op(kind), pair_cap);
    case OperationKind::BoolRRightUnion:
    case OperationKind::BoolRRightIntersection:
    case OperationKind::BoolRRightDifference:
    case OperationKind::BoolRRightSymmetricDifference:
        return boolean_product(left, determinize(reverse(*right), det_cap), kind_bool_op(kind),
                               pair_cap);
    case OperationKind::BoolRRightDifferenceRev:
        return boolean_product(determinize(reverse(*right), det_cap), left,
                               BooleanOp::Difference, pair_cap);
    case OperationKind::BoolRBothUnion:
    case OperationKind::BoolRBothIntersection:
    case OperationKind::BoolRBothDifference:
    case OperationKind::BoolRBothSymmetricDifference:
        return boolean_product(determinize(reverse(left), det_cap),
                               determinize(reverse(*right), det_cap), kind_bool_op(kind),
                               pair_cap);
    case OperationKind::CatRRight: return concatenate(to_nfa(left), reverse(*right));
    case OperationKind::CatRLeft: return concatenate(reverse(left), to_nfa(*right));
    case OperationKind::CatROuter: return concatenate(reverse(left), reverse(*right));
    case OperationKind::StarR: return reverse(star(left));
    case OperationKind::Cat: return concatenate(left, *right);
    case OperationKind::Star: return star(left);
    case OperationKind::Rev: return reverse(left);
    }
    throw std::invalid_argument("unknown OperationKind");
}

Measurement measure(OperationKind kind, const Dfa& left, const Dfa* right, std::size_t det_cap,
                    std::size_t pair_cap) {
    Automaton built = construct(kind, left, right, det_cap, pair_cap);
    if (const Nfa* nfa = std::get_if<Nfa>(&built)) built = determinize(*nfa, det_cap);
    const Dfa& dfa = std::get<Dfa>(built);
    return {minimize_refine(dfa).num_states(), dfa.num_states()};
}

void VerificationReport::add(CaseResult result) {
    if (result.skipped)
        ++skipped;
    else if (result.pass)
        ++passed;
    else
        ++failed;
    cases.push_back(std::move(result));
}

CaseResult verify_case_expecting(OperationKind kind, std::size_t m, std::size_t n,
                                 std::size_t expected, std::size_t det_cap,
                                 std::size_t pair_cap) {
    const bool unary = kind_is_unary(kind);
    CaseResult result;
    result.kind = kind;
    result.m = unary ? 0 : m;
    result.n = n;
    result.expected = expected;

    const auto [left_spec, right_spec] = default_witnesses(kind, m, n);
    result.left_witness = to_string(left_spec);
    if (right_spec) result.right_witness = to_string(*right_spec);
    if (is_plain_bool(kind) && m == n) result.note = "permutationally equivalent pair (m = n)";

    const Dfa left = build_witness(left_spec);
    std::optional<Dfa> right;
    if (right_spec) right = build_witness(*right_spec);

    const auto start = std::chrono::steady_clock::now();
    try {
        const Measurement got = measure(kind, left, right ? &*right : nullptr, det_cap, pair_cap);
        result.measured = got.measured;
        result.reachable_raw = got.reachable_raw;
        result.pass = got.measured == expected;
    } catch (const CapExceeded& e) {
        result.skipped = true;
        result.note = result.note.empty() ? e.what() : result.note + "; " + e.what();
    }
    result.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
            .count();
    return result;
}

CaseResult verify_case(OperationKind kind, std::size_t m, std::size_t n, std::size_t det_cap,
                       std::size_t pair_cap) {
    return verify_case_expecting(kind, m, n, expected_bound(kind, m, n), det_cap, pair_cap);
}

VerificationReport verify_sweep(std::vector<OperationKind> kinds,
                                std::optional<std::pair<std::size_t, std::size_t>> m_range,
                                std::optional<std::pair<std::size_t, std::size_t>> n_range,
                                std::size_t det_cap, std::size_t pair_cap) {
    std::sort(kinds.begin(), kinds.end());
    kinds.erase(std::unique(kinds.begin(), kinds.end()), kinds.end());

    VerificationReport report;
    for (OperationKind kind : kinds) {
        const auto [n_lo, n_hi] = n_range.value_or(default_sweep_range(kind));
        if (kind_is_unary(kind)) {
            for (std::size_t n = n_lo; n <= n_hi; ++n)
                report.add(verify_case(kind, n, n, det_cap, pair_cap));
            continue;
        }
        const auto [m_lo, m_hi] = m_range.value_or(default_sweep_range(kind));
        for (std::size_t m = m_lo; m <= m_hi; ++m)
            for (std::size_t n = n_lo; n <= n_hi; ++n)
                report.add(verify_case(kind, m, n, det_cap, pair_cap));
    }
    return report;
}

VerificationReport exception_scan(std::size_t det_cap, std::size_t pair_cap) {
    static const OperationKind shapes[] = {
        OperationKind::BoolRBothUnion,
        OperationKind::BoolRBothIntersection,
        OperationKind::BoolRBothDifference,
        OperationKind::BoolRBothSymmetricDifference,
    };
    VerificationReport report;
    for (OperationKind kind : shapes) {
        for (std::size_t m = 3; m <= 6; ++m) {
            for (std::size_t n = 3; n <= 6; ++n) {
                const WitnessSpec left_spec = u_spec(m, "abc");
                const WitnessSpec right_spec = u_spec(n, "bac");
                const bool exceptional = m == 4 && n == 4;

                CaseResult result;
                result.kind = kind;
                result.m = m;
                result.n = n;
                result.left_witness = to_string(left_spec);
                result.right_witness = to_string(right_spec);
                result.expected =
                    exceptional
                        ? (kind == OperationKind::BoolRBothSymmetricDifference ? 116u : 202u)
                        : expected_bound(kind, m, n);

                const Dfa left = build_witness(left_spec);
                const Dfa right = build_witness(right_spec);
                const auto start = std::chrono::steady_clock::now();
                try {
                    const Measurement got = measure(kind, left, &right, det_cap, pair_cap);
                    result.measured = got.measured;
                    result.reachable_raw = got.reachable_raw;
                    result.pass = got.measured == result.expected;
                    if (exceptional) {
                        result.pass = result.pass && got.reachable_raw == 232;
                        result.note = "m=n=4 exception: expects 202/116, raw 232";
                    }
                } catch (const CapExceeded& e) {
                    result.skipped = true;
                    result.note = e.what();
                }
                result.elapsed_ms = std::chrono::duration<double, std::milli>(
                                        std::chrono::steady_clock::now() - start)
                                        .count();
                report.add(std::move(result));
            }
        }
    }
    return report;
}

namespace {

std::string count_or_dash(std::size_t value, bool valid) {
    return valid ? std::to_string(value) : std::string("-");
}

std::string format_ms(double ms) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", ms);
    return buf;
}

std::string witnesses_field(const CaseResult& c) {
    std::string out = c.left_witness;
    if (!c.right_witness.empty()) out += " | " + c.right_witness;
    return out;
}

const char* status_label(const CaseResult& c) {
    return c.skipped ? "skip" : c.pass ? "pass" : "FAIL";
}

} // namespace

std::string to_csv(const VerificationReport& report) {
    std::string out = "kind,op,m,n,witnesses,measured,expected,raw,pass,ms\n";
    for (const CaseResult& c : report.cases) {
        out += kind_group(c.kind);
        out += ',';
        out += kind_op_label(c.kind);
        out += ',';
        out += count_or_dash(c.m, c.m != 0);
        out += ',';
        out += std::to_string(c.n);
        out += ",\"";
        out += witnesses_field(c);
        out += "\",";
        out += count_or_dash(c.measured, !c.skipped);
        out += ',';
        out += std::to_string(c.expected);
        out += ',';
        out += count_or_dash(c.reachable_raw, !c.skipped);
        out += ',';
        out += c.skipped ? "skip" : c.pass ? "true" : "false";
        out += ',';
        out += format_ms(c.elapsed_ms);
        out += '\n';
    }
    return out;
}

std::string to_table(const VerificationReport& report) {
    static const char* headers[] = {"kind",     "m",   "n",      "measured", "expected",
                                    "raw",      "status", "ms", "witnesses", "note"};
    std::vector<std::vector<std::string>> rows;
    rows.emplace_back(std::begin(headers), std::end(headers));
    for (const CaseResult& c : report.cases) {
        rows.push_back({kind_name(c.kind), count_or_dash(c.m, c.m != 0), std::to_string(c.n),
                        count_or_dash(c.measured, !c.skipped), std::to_string(c.expected),
                        count_or_dash(c.reachable_raw, !c.skipped), status_label(c),
                        format_ms(c.elapsed_ms), witnesses_field(c), c.note});
    }

    std::vector<std::size_t> widths(rows[0].size(), 0);
    for (const auto& row : rows)
        for (std::size_t i = 0; i < row.size(); ++i) widths[i] = std::max(widths[i], row[i].size());

    std::string out;
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i > 0) out += "  ";
            out += row[i];
            if (i + 1 < row.size()) out.append(widths[i] - row[i].size(), ' ');
        }
        while (!out.empty() && out.back() == ' ') out.pop_back();
        out += '\n';
    }
    out += std::to_string(report.cases.size()) + " cases: " + std::to_string(report.passed) +
           " passed, " + std::to_string(report.failed) + " failed, " +
           std::to_string(report.skipped) + " skipped\n";
    return out;
}

Dfa random_minimal_dfa(std::size_t n, const std::vector<char>& alphabet, std::mt19937_64& rng) {
    if (n < 2 || n > 32)
        throw std::invalid_argument("random minimal DFAs are sampled for 2 <= n <= 32");
    std::uniform_int_distribution<State> state_dist(0, static_cast<State>(n - 1));
    std::uniform_int_distribution<std::uint64_t> final_dist(1, (std::uint64_t{1} << n) - 2);
    for (;;) {
        std::vector<State> delta(n * alphabet.size());
        for (State& t : delta) t = state_dist(rng);
        const std::uint64_t mask = final_dist(rng);
        std::vector<State> finals;
        for (std::size_t q = 0; q < n; ++q)
            if ((mask >> q) & 1) finals.push_back(static_cast<State>(q));
        const Dfa candidate(n, alphabet, std::move(delta), 0, finals);
        // minimal size n forces the trimmed size to be n as well, so one
        // check covers accessibility and distinguishability
        if (minimize_refine(candidate).num_states() == n) return candidate;
    }
}

} // namespace witnesslab
