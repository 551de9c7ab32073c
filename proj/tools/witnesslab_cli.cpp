// witnesslab command line tool.
//
//   build   witness-spec [--dot]            construct a witness DFA
//   apply   kind left [right] [--minimize]  run one operation on automata
//   verify  [kinds...] [--m-range a..b] [--n-range a..b] [--csv f]
//           [--baseline f] [--lemma-exception]
//   monoid  witness-spec [--cap N]          transition monoid size
//   export  file [--dot]                    re-emit a JSON automaton
//
// Exit codes: 0 success / all bounds pass, 1 verification failure,
// 2 usage or input error.

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <CLI11.hpp>

#include "witnesslab/automata.hpp"
#include "witnesslab/complexity.hpp"
#include "witnesslab/minimize.hpp"
#include "witnesslab/serialize.hpp"
#include "witnesslab/witness.hpp"

namespace {

using namespace witnesslab;

/// Determinization cap for this invocation: WITNESSLAB_MAX_N when set and
/// sane (clamped to the default of 24), the default otherwise.
std::size_t effective_det_cap() {
    const char* raw = std::getenv("WITNESSLAB_MAX_N");
    if (!raw || !*raw) return kDefaultDeterminizeCap;
    char* end = nullptr;
    const unsigned long value = std::strtoul(raw, &end, 10);
    if (end == raw || *end != '\0' || value == 0) {
        std::cerr << "warning: ignoring invalid WITNESSLAB_MAX_N \"" << raw << "\"\n";
        return kDefaultDeterminizeCap;
    }
    return std::min<std::size_t>(value, kDefaultDeterminizeCap);
}

std::size_t parse_count(const std::string& text) {
    std::size_t value = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size())
        throw std::invalid_argument("expected a number, got \"" + text + "\"");
    return value;
}

std::pair<std::size_t, std::size_t> parse_range(const std::string& text) {
    const std::size_t dots = text.find("..");
    if (dots != std::string::npos) {
        try {
            const std::size_t lo = parse_count(text.substr(0, dots));
            const std::size_t hi = parse_count(text.substr(dots + 2));
            if (3 <= lo && lo <= hi && hi <= kStateSetWidth) return {lo, hi};
        } catch (const std::invalid_argument&) {
            // fall through to the shared message
        }
    }
    throw std::invalid_argument("range \"" + text +
                                "\" must look like lo..hi with 3 <= lo <= hi <= 64");
}

/// File contents, or all of stdin when the path is "-".
std::string read_input(const std::string& path) {
    std::ostringstream buffer;
    if (path == "-") {
        buffer << std::cin.rdbuf();
    } else {
        std::ifstream in(path);
        if (!in) throw std::invalid_argument("cannot open " + path);
        buffer << in.rdbuf();
    }
    return buffer.str();
}

bool looks_like_spec(const std::string& arg) {
    return arg.rfind("U[", 0) == 0 || arg.rfind("V[", 0) == 0;
}

/// An operand is a witness spec string, a JSON automaton file, or "-" for
/// JSON on stdin. NFAs are determinized so every operation sees a DFA.
Dfa load_operand(const std::string& arg, std::size_t det_cap) {
    if (looks_like_spec(arg)) return build_witness(parse_witness_spec(arg));
    const Automaton loaded = automaton_from_json(read_input(arg));
    if (const Dfa* dfa = std::get_if<Dfa>(&loaded)) return *dfa;
    return determinize(std::get<Nfa>(loaded), det_cap);
}

OperationKind single_kind(const std::string& name) {
    const std::vector<OperationKind> kinds = kinds_by_name(name);
    if (kinds.empty()) throw std::invalid_argument("unknown operation \"" + name + "\"");
    if (kinds.size() > 1)
        throw std::invalid_argument("\"" + name +
                                    "\" names a group of operations; apply takes exactly one");
    return kinds.front();
}

void print_machine(const Automaton& machine, bool dot) {
    if (const Dfa* dfa = std::get_if<Dfa>(&machine))
        std::cout << (dot ? to_dot(*dfa) : to_json(*dfa));
    else if (const Nfa* nfa = std::get_if<Nfa>(&machine))
        std::cout << (dot ? to_dot(*nfa) : to_json(*nfa));
}

std::size_t machine_states(const Automaton& machine) {
    if (const Dfa* dfa = std::get_if<Dfa>(&machine)) return dfa->num_states();
    return std::get<Nfa>(machine).num_states();
}

int cmd_build(const std::string& spec_text, bool dot) {
    print_machine(build_witness(parse_witness_spec(spec_text)), dot);
    return 0;
}

int cmd_apply(const std::string& kind_text, const std::string& left_arg,
              const std::optional<std::string>& right_arg, bool minimize_result,
              std::size_t det_cap) {
    const OperationKind kind = single_kind(kind_text);
    const Dfa left = load_operand(left_arg, det_cap);
    std::optional<Dfa> right;
    if (right_arg) right = load_operand(*right_arg, det_cap);

    Automaton result = construct(kind, left, right ? &*right : nullptr, det_cap);
    std::cerr << "left: " << left.num_states() << " states\n";
    if (right) std::cerr << "right: " << right->num_states() << " states\n";
    if (minimize_result) {
        if (const Nfa* nfa = std::get_if<Nfa>(&result)) result = determinize(*nfa, det_cap);
        result = minimize_refine(std::get<Dfa>(result));
    }
    std::cerr << "result: " << machine_states(result) << " states\n";
    print_machine(result, false);
    return 0;
}

OperationKind kind_from_csv(const std::string& group, const std::string& op) {
    for (OperationKind kind : all_kinds())
        if (group == kind_group(kind) && op == kind_op_label(kind)) return kind;
    throw std::invalid_argument("baseline row names unknown operation \"" + group + "," + op +
                                "\"");
}

std::vector<std::string> split_csv_row(const std::string& line) {
    std::vector<std::string> fields;
    std::string field;
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        const char ch = line[i];
        if (quoted) {
            if (ch != '"') {
                field += ch;
            } else if (i + 1 < line.size() && line[i + 1] == '"') {
                field += '"';
                ++i;
            } else {
                quoted = false;
            }
        } else if (ch == '"') {
            quoted = true;
        } else if (ch == ',') {
            fields.push_back(std::move(field));
            field.clear();
        } else {
            field += ch;
        }
    }
    fields.push_back(std::move(field));
    return fields;
}

/// Re-measures every row of a bounds CSV (as written by --csv) against the
/// expected column recorded in the file.
VerificationReport verify_baseline(const std::string& path, std::size_t det_cap) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);

    VerificationReport report;
    std::string line;
    bool header = true;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (header) {
            header = false;
            if (line.rfind("kind,op,m,n,", 0) != 0)
                throw std::invalid_argument(path + " is not a bounds csv");
            continue;
        }
        if (line.empty()) continue;
        const std::vector<std::string> fields = split_csv_row(line);
        if (fields.size() != 10)
            throw std::invalid_argument(path + ": malformed row \"" + line + "\"");
        const OperationKind kind = kind_from_csv(fields[0], fields[1]);
        const std::size_t n = parse_count(fields[3]);
        const std::size_t m = fields[2] == "-" ? n : parse_count(fields[2]);
        const std::size_t expected = parse_count(fields[6]);
        report.add(verify_case_expecting(kind, m, n, expected, det_cap));
    }
    return report;
}

int cmd_verify(const std::vector<std::string>& kind_names, const std::string& m_range_text,
               const std::string& n_range_text, const std::string& csv_path,
               const std::string& baseline_path, bool lemma_exception, std::size_t det_cap) {
    VerificationReport report;
    if (lemma_exception) {
        report = exception_scan(det_cap);
    } else if (!baseline_path.empty()) {
        report = verify_baseline(baseline_path, det_cap);
    } else {
        std::vector<OperationKind> kinds;
        const std::vector<std::string> names =
            kind_names.empty() ? std::vector<std::string>{"all"} : kind_names;
        for (const std::string& name : names) {
            const std::vector<OperationKind> matched = kinds_by_name(name);
            if (matched.empty()) throw std::invalid_argument("unknown operation \"" + name + "\"");
            kinds.insert(kinds.end(), matched.begin(), matched.end());
        }
        std::optional<std::pair<std::size_t, std::size_t>> m_range;
        std::optional<std::pair<std::size_t, std::size_t>> n_range;
        if (!m_range_text.empty()) m_range = parse_range(m_range_text);
        if (!n_range_text.empty()) n_range = parse_range(n_range_text);
        report = verify_sweep(std::move(kinds), m_range, n_range, det_cap);
    }

    std::cout << to_table(report);
    if (!csv_path.empty()) {
        std::ofstream out(csv_path);
        if (!out) throw std::invalid_argument("cannot write " + csv_path);
        out << to_csv(report);
    }
    return report.all_passed() ? 0 : 1;
}

int cmd_monoid(const std::string& spec_text, std::size_t cap) {
    const Dfa dfa = build_witness(parse_witness_spec(spec_text));
    if (const std::optional<std::size_t> size = transition_monoid_size(dfa, cap))
        std::cout << *size << "\n";
    else
        std::cout << "exceeded cap " << cap << "\n";
    return 0;
}

int cmd_export(const std::string& path, bool dot) {
    print_machine(automaton_from_json(read_input(path)), dot);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"state complexity witness laboratory"};
    app.require_subcommand(1);

    std::string build_spec;
    bool build_dot = false;
    CLI::App* build = app.add_subcommand("build", "construct a witness DFA from a spec string");
    build->add_option("spec", build_spec, "witness spec, e.g. \"U[n=4;letters=abc;finals=3]\"")
        ->required();
    build->add_flag("--dot", build_dot, "emit Graphviz DOT instead of JSON");

    std::string apply_kind;
    std::string apply_left;
    std::string apply_right;
    bool apply_minimize = false;
    CLI::App* apply = app.add_subcommand("apply", "apply one operation to automata");
    apply->add_option("kind", apply_kind, "operation name, e.g. union_r_right or star")
        ->required();
    apply->add_option("left", apply_left, "witness spec, JSON file, or - for stdin")->required();
    CLI::Option* apply_right_opt =
        apply->add_option("right", apply_right, "second operand for binary operations");
    apply->add_flag("--minimize", apply_minimize, "emit the minimal DFA of the result");

    std::vector<std::string> verify_kinds;
    std::string verify_m_range;
    std::string verify_n_range;
    std::string verify_csv;
    std::string verify_baseline_path;
    bool verify_exception = false;
    CLI::App* verify = app.add_subcommand("verify", "measure operations and check the bounds");
    verify->add_option("kinds", verify_kinds,
                       "operation or group names (default: all)");
    verify->add_option("--m-range", verify_m_range, "left witness sizes, e.g. 3..7");
    verify->add_option("--n-range", verify_n_range, "right witness sizes, e.g. 3..6");
    verify->add_option("--csv", verify_csv, "also write the report as CSV to this path");
    verify->add_option("--baseline", verify_baseline_path,
                       "re-check the rows of a previously written CSV");
    verify->add_flag("--lemma-exception", verify_exception,
                     "scan the plain-finals pair whose m = n = 4 cell beats the formula");

    std::string monoid_spec;
    std::size_t monoid_cap = kDefaultMonoidCap;
    CLI::App* monoid = app.add_subcommand("monoid", "transition monoid size of a witness");
    monoid->add_option("spec", monoid_spec, "witness spec")->required();
    monoid->add_option("--cap", monoid_cap, "give up beyond this many transformations");

    std::string export_path;
    bool export_dot = false;
    CLI::App* export_cmd = app.add_subcommand("export", "re-emit a JSON automaton (or as DOT)");
    export_cmd->add_option("file", export_path, "JSON automaton file, or - for stdin")->required();
    export_cmd->add_flag("--dot", export_dot, "emit Graphviz DOT instead of JSON");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& err) {
        return app.exit(err);
    } catch (const CLI::CallForAllHelp& err) {
        return app.exit(err);
    } catch (const CLI::ParseError& err) {
        app.exit(err);
        return 2;
    }

    const std::size_t det_cap = effective_det_cap();
    try {
        if (build->parsed()) return cmd_build(build_spec, build_dot);
        if (apply->parsed()) {
            std::optional<std::string> right;
            if (apply_right_opt->count() > 0) right = apply_right;
            return cmd_apply(apply_kind, apply_left, right, apply_minimize, det_cap);
        }
        if (verify->parsed())
            return cmd_verify(verify_kinds, verify_m_range, verify_n_range, verify_csv,
                              verify_baseline_path, verify_exception, det_cap);
        if (monoid->parsed()) return cmd_monoid(monoid_spec, monoid_cap);
        if (export_cmd->parsed()) return cmd_export(export_path, export_dot);
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 2;
    }
    return 2;
}
