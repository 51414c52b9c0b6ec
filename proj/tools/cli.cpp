#include "cli.hpp"

#include <charconv>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "qtp/qtp.hpp"

namespace qtp::cli {
namespace {

/// Thrown for bad flag values that CLI11 cannot check on its own.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Globals {
    std::string format;
    std::string out_path;
    std::uint64_t seed = 0;
    bool roman = false;
};

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::string pick_format(const Globals& g, const std::string& fallback, std::initializer_list<const char*> allowed,
                        const char* command) {
    const std::string f = g.format.empty() ? fallback : g.format;
    for (const char* a : allowed)
        if (f == a) return f;
    std::string list;
    for (const char* a : allowed) list += (list.empty() ? "" : "|") + std::string(a);
    throw UsageError(std::string(command) + ": unsupported --format '" + f + "' (expected " + list + ")");
}

// ---------------------------------------------------------------------------

std::string cmd_basis(const Globals& g) {
    const std::string f = pick_format(g, "text", {"text", "json", "latex"}, "basis");
    if (f == "latex") return basis_text(Style::latex);
    if (f == "text") return basis_text(Style::text);
    Json states = Json::array();
    for (int i = 0; i < kBasisSize; ++i) {
        const auto s = entangled_state(i);
        states.push_back(Json{{"index", i}, {"family", family_name(s.family)}, {"ket", to_json(s.ket)}});
    }
    Json gram = Json::array();
    const Matrix9 m = gram_matrix();
    for (const auto& row : m) {
        Json r = Json::array();
        for (const auto& x : row) r.push_back(to_json(x));
        gram.push_back(r);
    }
    return dump(Json{{"states", states}, {"gram_matrix", gram}, {"gram_is_identity", is_identity(m)}});
}

std::string gate_text(const OutcomeRow& row, int channel, bool with_roman) {
    std::string out = "channel " + channel_label(channel, with_roman) + ", outcome " + std::to_string(row.outcome) + "\n";
    out += "  s = " + render(row.premeasure) + "\n";
    out += "  Lambda = " + render(row.gate.entries) + "\n";
    std::istringstream grid(render_grid(row.gate.entries));
    for (std::string line; std::getline(grid, line);) out += "    " + line + "\n";
    return out;
}

std::string cmd_derive(const Globals& g, std::optional<int> channel, std::optional<int> outcome) {
    const std::string f = pick_format(g, "text", {"text", "json", "latex"}, "derive");
    if (outcome && !channel) throw UsageError("derive: --outcome requires --channel");
    if (channel) detail::require_channel(*channel);
    if (outcome) detail::require_outcome(*outcome);
    const auto& all = derive_all();

    if (f == "json") {
        if (channel && outcome) return dump(to_json(oracle_gate(*channel, *outcome)));
        if (!channel) return dump(to_json(oracle_gate_table()));
        const auto& d = all[static_cast<std::size_t>(*channel)];
        Json rows = Json::array();
        for (const auto& row : d.rows)
            rows.push_back(Json{{"outcome", row.outcome}, {"premeasure", to_json(row.premeasure)}, {"gate", to_json(row.gate)}});
        return dump(Json{{"channel", d.channel}, {"composite", to_json(d.composite)}, {"rows", rows}});
    }

    std::string out;
    for (const auto& d : all) {
        if (channel && d.channel != *channel) continue;
        if (f == "latex" && !outcome) {
            out += channel_table_latex(d.channel, g.roman);
            continue;
        }
        for (const auto& row : d.rows) {
            if (outcome && row.outcome != *outcome) continue;
            if (f == "latex")
                out += "\\[\n\\Lambda_" + std::to_string(d.channel) + "^" + std::to_string(row.outcome) + " = " +
                       render(row.gate.entries, Style::latex) + "\n\\]\n";
            else
                out += gate_text(row, d.channel, g.roman);
        }
    }
    return out;
}

struct Check {
    std::string name;
    bool passed;
    std::string detail;
};

std::vector<Check> run_checks() {
    std::vector<Check> checks;
    checks.push_back({"orthonormality", is_identity(gram_matrix()), "Gram matrix of the nine states is the identity"});
    checks.push_back({"closure", is_identity(projector_sum()), "sum of the nine projectors is the identity"});

    int expansion_failures = 0;
    for (int a2 = 0; a2 < 3; ++a2)
        for (int b = 0; b < 3; ++b)
            if (!(reconstruct(expand_product(a2, b)) ==
                  Ket::basis(Site::A2B, static_cast<std::size_t>(3 * a2 + b))))
                ++expansion_failures;
    checks.push_back({"expansion_round_trip", expansion_failures == 0,
                      std::to_string(9 - expansion_failures) + "/9 product states reconstructed"});

    int residual_failures = 0;
    int reassembly_failures = 0;
    for (const auto& d : derive_all()) {
        for (const auto& row : d.rows)
            if (!delta_qt(d.channel, row.outcome, row.gate.entries).is_zero()) ++residual_failures;
        if (!(reassemble(d) == d.composite)) ++reassembly_failures;
    }
    checks.push_back({"residuals_zero", residual_failures == 0,
                      std::to_string(81 - residual_failures) + "/81 gate residuals vanish"});
    checks.push_back({"decomposition_reassembles", reassembly_failures == 0,
                      std::to_string(9 - reassembly_failures) + "/9 channel decompositions reassemble"});

    int complete = 0;
    int non_unitary = 0;
    for (int i = 0; i < 9; ++i) {
        const auto a = analyze_channel(i);
        if (a.completeness.is_identity) ++complete;
        non_unitary += 9 - a.unitary;
    }
    checks.push_back({"completeness", complete == 9, std::to_string(complete) + "/9 channels complete"});
    checks.push_back({"non_unitarity", non_unitary == 81, std::to_string(non_unitary) + "/81 gates non-unitary"});
    return checks;
}

std::string cmd_verify(const Globals& g, bool& violated) {
    const std::string f = pick_format(g, "text", {"text", "json"}, "verify");
    const auto checks = run_checks();
    violated = false;
    for (const auto& c : checks) violated = violated || !c.passed;
    if (f == "json") {
        Json arr = Json::array();
        for (const auto& c : checks) arr.push_back(Json{{"check", c.name}, {"passed", c.passed}, {"detail", c.detail}});
        return dump(Json{{"checks", arr}, {"all_passed", !violated}});
    }
    std::string out;
    for (const auto& c : checks) out += std::string(c.passed ? "PASS " : "FAIL ") + c.name + ": " + c.detail + "\n";
    return out;
}

std::string cmd_compare(const Globals& g, bool fail_on_mismatch, bool& violated) {
    const std::string f = pick_format(g, "markdown", {"json", "markdown", "latex"}, "compare");
    const ErrataReport r = compare_tables();
    violated = fail_on_mismatch && r.has_discrepancies();
    if (f == "json") return dump(to_json(r));
    if (f == "latex") return errata_latex(r);
    return errata_markdown(r, g.roman);
}

std::string cmd_analyze(const Globals& g, std::optional<int> channel) {
    const std::string f = pick_format(g, "markdown", {"json", "markdown"}, "analyze");
    if (channel) detail::require_channel(*channel);
    std::vector<ChannelAnalysis> channels;
    for (int i = 0; i < 9; ++i)
        if (!channel || *channel == i) channels.push_back(analyze_channel(i));
    if (f == "markdown") return analysis_markdown(channels, g.roman);
    Json arr = Json::array();
    for (const auto& a : channels) arr.push_back(to_json(a));
    return dump(Json{{"channels", arr}});
}

State3 parse_state(const std::string& text) {
    std::vector<double> v;
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t comma = std::min(text.find(',', start), text.size());
        const std::string_view part(text.data() + start, comma - start);
        double x = 0.0;
        const auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), x);
        if (ec != std::errc{} || ptr != part.data() + part.size() || part.empty())
            throw UsageError("simulate: malformed --state component '" + std::string(part) + "'");
        v.push_back(x);
        start = comma + 1;
    }
    if (v.size() != 6) throw UsageError("simulate: --state needs six numbers c0r,c0i,c1r,c1i,c2r,c2i");
    return {Amplitude(v[0], v[1]), Amplitude(v[2], v[3]), Amplitude(v[4], v[5])};
}

struct SimulateArgs {
    int channel = 0;
    std::size_t trials = 1;
    std::string state = "1,0,0,0,0,0";
    bool haar = false;
    bool paper_gates = false;
    bool summary_only = false;
    bool events = false;
};

std::string cmd_simulate(const Globals& g, const SimulateArgs& a) {
    const std::string f = pick_format(g, "json", {"json", "csv"}, "simulate");
    detail::require_channel(a.channel);
    if (a.trials == 0) throw UsageError("simulate: --trials must be at least 1");
    StateMode mode = HaarRandom{};
    std::optional<State3> fixed;
    if (!a.haar) {
        fixed = parse_state(a.state);
        require_normalized(*fixed);
        mode = FixedState{*fixed};
    }
    const GateSource source = a.paper_gates ? GateSource::paper : GateSource::oracle;

    if (f == "csv") {
        std::string out = "trial_index,outcome,probability,fidelity,recovery_applied\n";
        run_batch(a.channel, a.trials, g.seed, mode, source, [&](std::size_t t, const TrialRecord& r) {
            out += std::to_string(t) + "," + std::to_string(r.outcome) + "," + format_double(r.outcome_probability) + "," +
                   (r.fidelity ? format_double(*r.fidelity) : std::string("NA")) + "," +
                   (r.recovery_applied ? "true" : "false") + "\n";
        });
        return out;
    }

    Json trials = Json::array();
    const BatchSummary s = run_batch(a.channel, a.trials, g.seed, mode, source, [&](std::size_t t, const TrialRecord& r) {
        if (!a.summary_only) trials.push_back(to_json(r, t, a.events));
    });
    Json doc{{"gate_source", a.paper_gates ? "paper" : "oracle"},
             {"state_mode", a.haar ? "haar" : "fixed"},
             {"input_state", fixed ? to_json(*fixed) : Json(nullptr)},
             {"summary", to_json(s)}};
    if (!a.summary_only) doc["trials"] = trials;
    return dump(doc);
}

std::string cmd_export(const Globals& g, const std::string& source) {
    pick_format(g, "json", {"json"}, "export");
    if (source == "oracle") return dump(to_json(oracle_gate_table()));
    if (source == "paper") return dump(to_json(paper_gate_table()));
    throw UsageError("export: --source must be oracle or paper");
}

std::string cmd_import(const Globals& g, const std::string& path, bool check, bool& violated) {
    const std::string f = pick_format(g, "text", {"text", "json"}, "import");
    std::ifstream in(path);
    if (!in) throw UsageError("import: cannot read '" + path + "'");
    Json j;
    try {
        j = Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw JsonFormatError(std::string("import: not valid JSON: ") + e.what());
    }
    const GateTable t = gate_table_from_json(j);
    bool matches = true;
    for (int i = 0; i < 9 && matches; ++i)
        for (int k = 0; k < 9 && matches; ++k) matches = t.at(i, k).entries == oracle_gate(i, k).entries;
    violated = check && !matches;
    if (f == "json") return dump(Json{{"source", t.source}, {"gates", 81}, {"matches_derived", matches}});
    return "imported 81 gates (source " + t.source + "); matches derived table: " + (matches ? "yes" : "no") + "\n";
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact qutrit teleportation: basis, gates, errata, analysis and simulation", "qutrit_tp"};
    app.require_subcommand(1);
    app.fallthrough();
    app.failure_message(CLI::FailureMessage::help);
    app.set_version_flag("--version", std::string("qutrit_tp ") + kVersion);

    Globals g;
    app.add_option("--format", g.format, "Output format: text, json, csv, markdown, latex")
        ->check(CLI::IsMember({"text", "json", "csv", "markdown", "latex"}));
    app.add_option("--out", g.out_path, "Write output to PATH instead of stdout");
    app.add_option("--seed", g.seed, "Master seed for simulate");
    app.add_flag("--roman", g.roman, "Show channel numbers with Roman numerals too");

    auto* basis = app.add_subcommand("basis", "Print the nine entangled states and their Gram matrix");

    std::optional<int> d_channel, d_outcome;
    auto* derive = app.add_subcommand("derive", "Derive pre-measurement states and measurement gates");
    derive->add_option("--channel", d_channel, "Channel 0-8");
    derive->add_option("--outcome", d_outcome, "Outcome 0-8 (needs --channel)");

    auto* verify = app.add_subcommand("verify", "Check every exact invariant; exit 2 on a violation");

    bool fail_on_mismatch = false;
    auto* compare = app.add_subcommand("compare", "Diff the printed tables against the derived ones");
    compare->add_flag("--fail-on-mismatch", fail_on_mismatch, "Exit 2 when any entry differs");

    std::optional<int> a_channel;
    auto* analyze = app.add_subcommand("analyze", "Unitarity, rank and completeness of the gates");
    analyze->add_option("--channel", a_channel, "Channel 0-8");

    SimulateArgs sim;
    auto* simulate = app.add_subcommand("simulate", "Seeded Monte-Carlo runs of the protocol");
    simulate->add_option("--channel", sim.channel, "Channel 0-8")->required();
    simulate->add_option("--trials", sim.trials, "Number of trials")->required();
    auto* state_opt = simulate->add_option("--state", sim.state, "Input state c0r,c0i,c1r,c1i,c2r,c2i (default |0>)");
    auto* haar_opt = simulate->add_flag("--haar", sim.haar, "Draw a Haar-random input state per trial");
    state_opt->excludes(haar_opt);
    simulate->add_flag("--use-paper-gates", sim.paper_gates, "Use the printed gates instead of the derived ones");
    simulate->add_flag("--summary-only", sim.summary_only, "JSON: omit the per-trial records");
    simulate->add_flag("--events", sim.events, "JSON: include each trial's event log");

    std::string source = "oracle";
    auto* exporter = app.add_subcommand("export", "Write the 81-gate table as JSON");
    exporter->add_option("--source", source, "oracle or paper");

    std::string import_path;
    bool import_check = false;
    auto* importer = app.add_subcommand("import", "Read and validate a gate table");
    importer->add_option("path", import_path, "Gate-table JSON file")->required();
    importer->add_flag("--check", import_check, "Exit 2 unless the table equals the derived one");

    std::vector<std::string> argv_store{"qutrit_tp"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const auto& a : argv_store) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        if (code == 0) return kOk;
        return kUsageError;
    }

    bool violated = false;
    std::string payload;
    try {
        if (basis->parsed()) payload = cmd_basis(g);
        else if (derive->parsed()) payload = cmd_derive(g, d_channel, d_outcome);
        else if (verify->parsed()) payload = cmd_verify(g, violated);
        else if (compare->parsed()) payload = cmd_compare(g, fail_on_mismatch, violated);
        else if (analyze->parsed()) payload = cmd_analyze(g, a_channel);
        else if (simulate->parsed()) payload = cmd_simulate(g, sim);
        else if (exporter->parsed()) payload = cmd_export(g, source);
        else if (importer->parsed()) payload = cmd_import(g, import_path, import_check, violated);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kUsageError;
    }

    if (g.out_path.empty()) {
        out << payload;
    } else {
        std::ofstream file(g.out_path, std::ios::binary);
        if (!file) {
            err << "error: cannot write '" << g.out_path << "'\n";
            return kUsageError;
        }
        file << payload;
    }
    return violated ? kViolation : kOk;
}

}  // namespace qtp::cli
