#include "gammalab/cli.hpp"

#include <algorithm>
#include <cctype>
#include <filesystem>
#include <fstream>
#include <limits>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "gammalab/fixtures.hpp"
#include "gammalab/gamma.hpp"
#include "gammalab/search.hpp"

namespace gammalab::cli {

namespace {

struct Options {
    std::string family;
    std::string graph6;
    std::string json_path;
    std::vector<std::string> positional;
    std::vector<int> s_values;
    std::optional<int> n_cap;
    bool all = false;
    std::string dedupe = "none";
    std::optional<std::uint64_t> budget;
    std::optional<int> exhaustive_cap;
    std::string format;  // empty selects the command default
    std::string labeling;
    int vertices = 0;
    bool connected = false;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::validation, "cannot read '" + path + "'");
    std::ostringstream text;
    text << in.rdbuf();
    return text.str();
}

// Inline text when it looks like JSON, otherwise a path.
nlohmann::json json_argument(const std::string& arg) {
    std::string text = (!arg.empty() && arg.front() == '{') ? arg : read_file(arg);
    try {
        return nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& ex) {
        throw Error(ErrorKind::parse, std::string("JSON: ") + ex.what());
    }
}

std::string trimmed(std::string text) {
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.pop_back();
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.erase(0, 1);
    return text;
}

// Graph from --family, --graph6, --json, or the first positional argument
// (a file path, else inline graph6/JSON text). Consumes that positional.
Graph graph_argument(Options& o) {
    int sources = !o.family.empty() + !o.graph6.empty() + !o.json_path.empty();
    if (sources > 1) throw CLI::ValidationError("graph", "give exactly one graph source");
    if (!o.family.empty()) return family_from_spec(o.family);
    if (!o.graph6.empty()) return graph6_decode(o.graph6);
    if (!o.json_path.empty()) return parse_graph(trimmed(read_file(o.json_path)));
    if (o.positional.empty()) throw CLI::ValidationError("graph", "a graph is required");
    std::string arg = o.positional.front();
    o.positional.erase(o.positional.begin());
    if (std::filesystem::is_regular_file(arg)) arg = read_file(arg);
    return parse_graph(trimmed(arg));
}

std::string next_positional(Options& o, const std::string& what) {
    if (o.positional.empty()) throw CLI::ValidationError(what, what + " is required");
    std::string arg = o.positional.front();
    o.positional.erase(o.positional.begin());
    return arg;
}

void no_extra_positionals(const Options& o) {
    if (!o.positional.empty()) {
        throw CLI::ValidationError("arguments", "unexpected argument '" + o.positional.front() + "'");
    }
}

RingPresentation ring_argument(Options& o) {
    auto ideal = ideal_from_json(json_argument(next_positional(o, "ideal")));
    no_extra_positionals(o);
    return make_ring(ideal.n_vars(), ideal);
}

void print_json(std::ostream& out, const nlohmann::json& j) { out << j.dump(2) << '\n'; }

std::string labels_line(const Labeling& l) {
    std::string line;
    for (Mask m : l.labels) {
        if (!line.empty()) line += ' ';
        line += format_label(m, l.n);
    }
    return line;
}

nlohmann::json certificate_json(const std::vector<ExhaustedSpace>& boxes) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& b : boxes) out.push_back({{"component", b.component}, {"s", b.s}, {"n_max", b.n_max}});
    return out;
}

int cmd_label(Options& o, std::ostream& out, std::ostream& err) {
    Graph g = graph_argument(o);
    no_extra_positionals(o);
    SearchConfig cfg;
    cfg.s_values = o.s_values;
    cfg.n_cap = o.n_cap;
    cfg.dedupe = dedupe_from_string(o.dedupe);
    cfg.limit = o.all ? std::numeric_limits<int>::max() : 0;
    if (o.budget) cfg.node_budget = *o.budget;
    auto outcome = find_labeling(g, cfg);
    if (outcome.status == SearchOutcome::Status::budget_exceeded) {
        err << nlohmann::json{{"error", to_string(ErrorKind::undecided)},
                              {"detail", "node budget exhausted after " +
                                             std::to_string(outcome.nodes_explored) + " nodes"}}
                   .dump()
            << '\n';
        return 1;
    }
    if (o.format == "text") {
        if (outcome.solutions.empty()) out << "no labeling\n";
        for (const auto& l : outcome.solutions) out << labels_line(l) << '\n';
        return 0;
    }
    nlohmann::json labelings = nlohmann::json::array();
    for (const auto& l : outcome.solutions) labelings.push_back(labeling_to_json(l));
    print_json(out, {{"graph6", graph6_encode(g)},
                     {"status", to_string(outcome.status)},
                     {"count", outcome.solutions.size()},
                     {"labelings", labelings},
                     {"certificate", certificate_json(outcome.certificate)},
                     {"nodes_explored", outcome.nodes_explored}});
    return 0;
}

Labeling labeling_argument(Options& o) {
    std::string arg = o.labeling.empty() ? next_positional(o, "labeling") : o.labeling;
    return labeling_from_json(json_argument(arg));
}

int cmd_verify(Options& o, std::ostream& out, std::ostream& err) {
    Graph g = graph_argument(o);
    Labeling l = labeling_argument(o);
    no_extra_positionals(o);
    auto report = verify_labeling(g, l);
    print_json(out, report_to_json(report));
    if (report.ok()) return 0;
    err << nlohmann::json{{"error", to_string(ErrorKind::verification_failed)},
                          {"detail", report.violations.front().detail}}
               .dump()
        << '\n';
    return 1;
}

int cmd_realize(Options& o, std::ostream& out, std::ostream&) {
    Graph g = graph_argument(o);
    Labeling l = labeling_argument(o);
    no_extra_positionals(o);
    auto realization = realize(g, l, o.exhaustive_cap.value_or(0));
    if (o.format == "text") {
        out << ring_text(realization.ring) << '\n';
        return 0;
    }
    print_json(out, {{"ring", ring_to_json(realization.ring)},
                     {"report", report_to_json(realization.report)}});
    return 0;
}

int cmd_gamma(Options& o, std::ostream& out, std::ostream&) {
    auto ring = ring_argument(o);
    auto report = theorem_report(ring, o.exhaustive_cap.value_or(kDefaultExhaustiveCap));
    if (o.format == "graph6") {
        out << graph6_encode(report.gamma.graph) << '\n';
        return 0;
    }
    print_json(out, report_to_json(report));
    return 0;
}

int cmd_report(Options& o, std::ostream& out, std::ostream&) {
    auto ring = ring_argument(o);
    auto report = theorem_report(ring, o.exhaustive_cap.value_or(kDefaultExhaustiveCap));
    print_json(out, {{"ring", ring_to_json(ring)}, {"report", report_to_json(report)}});
    return 0;
}

int cmd_witness(Options& o, std::ostream& out, std::ostream&) {
    auto ring = ring_argument(o);
    auto ideal = construct_height2_ideal(ring);
    if (o.format == "text") {
        out << ideal_string(ideal) << '\n';
        return 0;
    }
    print_json(out, {{"ideal", ideal_to_json(ideal)},
                     {"height", height_in_ring(ring, ideal)},
                     {"components", spec_minus_components(ring, ideal).count()}});
    return 0;
}

int cmd_classify(Options& o, std::ostream& out, std::ostream&) {
    no_extra_positionals(o);
    auto rows = classify_graphs(o.vertices, o.connected);
    if (o.format == "json") {
        nlohmann::json list = nlohmann::json::array();
        for (const auto& r : rows) {
            list.push_back({{"graph6", r.canonical},
                            {"labelable", to_string(r.verdict)},
                            {"witness", r.witness ? labeling_to_json(*r.witness) : nlohmann::json()},
                            {"note", r.note}});
        }
        print_json(out, list);
        return 0;
    }
    for (const auto& r : rows) {
        out << r.canonical << '\t' << to_string(r.verdict) << '\t'
            << (r.witness ? labeling_to_json(*r.witness).dump() : std::string("-")) << '\n';
    }
    return 0;
}

int cmd_families(Options& o, std::ostream& out, std::ostream&) {
    no_extra_positionals(o);
    print_json(out, fixtures_to_json());
    return 0;
}

void add_graph_options(CLI::App* sub, Options& o) {
    sub->add_option("--family", o.family, "Named family, e.g. cycle,5 or petersen");
    sub->add_option("--graph6", o.graph6, "Graph in graph6 format");
    sub->add_option("--json", o.json_path, "Path to a graph JSON file");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Admissible labelings and the graph of minimal primes"};
    app.name("gammalab");
    app.require_subcommand(1);

    using Handler = int (*)(Options&, std::ostream&, std::ostream&);
    std::vector<std::pair<CLI::App*, Handler>> handlers;
    const std::vector<std::string> formats{"json", "text", "tsv", "graph6"};
    auto add = [&](const std::string& name, const std::string& help, Handler h) {
        auto* sub = app.add_subcommand(name, help);
        sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember(formats));
        sub->add_option("args", o.positional, "Positional inputs");
        handlers.push_back({sub, h});
        return sub;
    };

    auto* label = add("label", "Search for admissible labelings", cmd_label);
    add_graph_options(label, o);
    label->add_option("--s", o.s_values, "Label size (repeatable)")->check(CLI::PositiveNumber);
    label->add_option("--n-cap", o.n_cap, "Largest ground set")->check(CLI::PositiveNumber);
    label->add_flag("--all", o.all, "Collect every labeling instead of the first");
    label->add_option("--dedupe", o.dedupe, "none, ground or full")
        ->check(CLI::IsMember({"none", "ground", "full"}));
    label->add_option("--budget", o.budget, "Node budget");

    auto* verify = add("verify", "Check a labeling against a graph", cmd_verify);
    add_graph_options(verify, o);
    verify->add_option("--labeling", o.labeling, "Labeling JSON file or inline JSON");

    auto* realize_cmd = add("realize", "Build the ring of a labeled graph", cmd_realize);
    add_graph_options(realize_cmd, o);
    realize_cmd->add_option("--labeling", o.labeling, "Labeling JSON file or inline JSON");
    realize_cmd->add_option("--exhaustive-cap", o.exhaustive_cap, "Variable cap for the exact maximum");

    auto* gamma = add("gamma", "Gamma_R of a monomial ring", cmd_gamma);
    gamma->add_option("--exhaustive-cap", o.exhaustive_cap, "Variable cap for the exact maximum");
    auto* report = add("report", "Ring presentation and component quantities", cmd_report);
    report->add_option("--exhaustive-cap", o.exhaustive_cap, "Variable cap for the exact maximum");
    add("witness", "Height-two ideal attaining beta(Gamma_R)", cmd_witness);

    auto* classify = add("classify", "Labelability of every graph on d vertices", cmd_classify);
    classify->add_option("--vertices", o.vertices, "Vertex count")
        ->required()
        ->check(CLI::Range(0, kClassifyMaxVertices));
    classify->add_flag("--connected", o.connected, "Connected graphs only");

    add("families", "Worked examples as JSON fixtures", cmd_families);

    std::vector<std::string> argv_storage{"gammalab"};
    argv_storage.insert(argv_storage.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& a : argv_storage) argv.push_back(a.data());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
        for (auto [sub, handler] : handlers) {
            if (sub->parsed()) return handler(o, out, err);
        }
        return 2;
    } catch (const CLI::Success& e) {
        return app.exit(e, out, err);
    } catch (const CLI::Error& e) {
        app.exit(e, out, err);
        return 2;
    } catch (const Error& e) {
        err << nlohmann::json{{"error", to_string(e.kind())}, {"detail", e.what()}}.dump() << '\n';
        return 1;
    }
}

}  // namespace gammalab::cli
