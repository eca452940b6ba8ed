// radiolab: command-line front end.
//
// Exit codes: 0 success, 1 verification or fixture mismatch, 2 bad input,
// 3 solver budget exhausted, 4 internal error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include <CLI11.hpp>

#include "radiolab/constructions.hpp"
#include "radiolab/errors.hpp"
#include "radiolab/exact_solver.hpp"
#include "radiolab/graph.hpp"
#include "radiolab/io.hpp"
#include "radiolab/labeling.hpp"
#include "radiolab/level_structure.hpp"

using namespace radiolab;

namespace {

struct Globals {
    std::string input = "-";
    std::string output = "-";
    std::string format;
};

std::string slurp(const std::string& path) {
    if (path == "-") {
        std::ostringstream os;
        os << std::cin.rdbuf();
        return os.str();
    }
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

class Output {
public:
    explicit Output(const std::string& path) {
        if (path != "-") {
            file_ = std::make_unique<std::ofstream>(path);
            if (!*file_) throw InputError("cannot write " + path);
        }
    }
    std::ostream& stream() { return file_ ? *file_ : std::cout; }

private:
    std::unique_ptr<std::ofstream> file_;
};

Graph graph_from_text(const std::string& text) {
    std::istringstream in(text);
    return read_edge_list(in);
}

json parse_json(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw InputError(std::string("invalid JSON: ") + e.what());
    }
}

std::vector<int> parse_int_list(const std::string& s) {
    std::vector<int> out;
    std::istringstream is(s);
    std::string item;
    while (std::getline(is, item, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stoi(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw InputError("'" + item + "' is not an integer");
        }
    }
    return out;
}

Graph family_graph(const std::string& family, int n, int m) {
    if (family == "pn-petersen") {
        const int params[] = {n};
        return generate(family, params);
    }
    const int params[] = {n, m};
    return generate(family, params);
}

SchemeResult build_scheme(const std::string& family, int n, int m) {
    return parse_family(family) == Family::pn_petersen ? construct_pn_petersen(n) : construct_pn_km(n, m);
}

void write_key_values(std::ostream& out, const json& j, const std::string& format, const std::string& prefix = "") {
    for (auto it = j.begin(); it != j.end(); ++it) {
        const std::string key = prefix + it.key();
        if (it->is_object()) {
            write_key_values(out, *it, format, key + ".");
            continue;
        }
        std::string value = it->is_string() ? it->get<std::string>() : it->dump();
        if (format == "csv") {
            if (value.find(',') != std::string::npos) value = "\"" + value + "\"";
            out << key << ',' << value << '\n';
        } else {
            out << key << ": " << value << '\n';
        }
    }
}

std::uint64_t resolve_budget(long long flag) {
    if (flag > 0) return static_cast<std::uint64_t>(flag);
    if (const char* env = std::getenv("RADIOLAB_BUDGET")) {
        try {
            std::size_t used = 0;
            const long long v = std::stoll(env, &used);
            if (used == std::string(env).size() && v > 0) return static_cast<std::uint64_t>(v);
        } catch (const std::exception&) {
        }
        throw InputError(std::string("RADIOLAB_BUDGET must be a positive integer, got '") + env + "'");
    }
    return kDefaultBudget;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Radio labeling toolkit: level bounds, verification, constructions, exact search"};
    app.require_subcommand(1);
    app.fallthrough();
    Globals g;
    app.add_option("--input", g.input, "Input file, - for stdin")->capture_default_str();
    app.add_option("--output", g.output, "Output file, - for stdout")->capture_default_str();
    app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"json", "table", "csv"}));

    // gen
    auto* gen = app.add_subcommand("gen", "Write a named graph as an edge list");
    std::string gen_family;
    std::vector<int> gen_params;
    gen->add_option("family", gen_family, "path|cycle|complete|star|wheel|gear|petersen|pn-petersen|pn-km")
        ->required();
    gen->add_option("params", gen_params, "Family parameters");

    // bound
    auto* bound = app.add_subcommand("bound", "Level lower bound for the graph on --input");
    std::string bound_center, bound_columns, bound_strategy = "balls";
    int bound_max_size = 0;
    bound->add_option("--center", bound_center, "Comma-separated center vertices");
    bound->add_option("--columns", bound_columns, "Comma-separated product columns forming the center");
    bound->add_option("--center-strategy,--strategy", bound_strategy, "singletons|edges|cliques|balls|exhaustive")
        ->capture_default_str();
    bound->add_option("--max-size", bound_max_size, "Largest center for the exhaustive strategy");

    // construct
    auto* construct = app.add_subcommand("construct", "Optimal labeling of P_n x Petersen or P_n x K_m");
    std::string c_family, c_emit;
    int c_n = 0, c_m = 0;
    construct->add_option("--family", c_family, "pn-petersen|pn-km")->required();
    construct->add_option("--n", c_n, "Path order")->required();
    construct->add_option("--m", c_m, "Complete-graph order (pn-km)");
    construct->add_option("--emit", c_emit, "table|json|csv")->check(CLI::IsMember({"json", "table", "csv"}));

    // verify
    auto* verify = app.add_subcommand("verify", "Check a labeling JSON (--input) against a graph");
    std::string v_graph, v_family, v_center;
    int v_n = 0, v_m = 0;
    verify->add_option("--graph", v_graph, "Edge-list file");
    verify->add_option("--family", v_family, "Generated graph instead of --graph");
    verify->add_option("--n", v_n, "First family parameter");
    verify->add_option("--m", v_m, "Second family parameter");
    verify->add_option("--center", v_center, "Center vertices for the optimality conditions");

    // exact
    auto* exact = app.add_subcommand("exact", "Exact radio number of the graph on --input");
    long long e_budget = 0;
    bool e_no_sym = false, e_no_bounds = false, e_no_stop = false, e_no_seed = false;
    exact->add_option("--budget", e_budget, "Node budget (default RADIOLAB_BUDGET or 1e8)");
    exact->add_flag("--no-symmetry", e_no_sym, "Do not restrict x_0 to orbit representatives");
    exact->add_flag("--no-bounds", e_no_bounds, "Disable bound pruning");
    exact->add_flag("--exhaustive", e_no_stop, "Do not stop when the incumbent meets the lower bound");
    exact->add_flag("--no-seed", e_no_seed, "Start from the identity ordering");

    // table
    auto* table = app.add_subcommand("table", "Emit a construction as a table, optionally comparing a fixture");
    std::string t_family, t_fixture;
    int t_n = 0, t_m = 0;
    table->add_option("--family", t_family, "pn-petersen|pn-km")->required();
    table->add_option("--n", t_n, "Path order")->required();
    table->add_option("--m", t_m, "Complete-graph order (pn-km)");
    table->add_option("--fixture", t_fixture, "CSV with header i,j,t,label to compare against");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        Output out(g.output);
        std::ostream& os = out.stream();

        if (*gen) {
            const Graph graph = generate(gen_family, gen_params);
            if (g.format == "json") {
                os << graph_to_json(graph).dump(2) << '\n';
            } else if (g.format == "csv") {
                os << "a,b\n";
                for (const auto& [a, b] : graph.edges()) os << a << ',' << b << '\n';
            } else {
                write_edge_list(os, graph);
            }
            return 0;
        }

        if (*bound) {
            const Graph graph = graph_from_text(slurp(g.input));
            const DistanceMatrix dm(graph);
            BoundReport rep;
            if (!bound_center.empty() || !bound_columns.empty()) {
                std::vector<Vertex> center = parse_int_list(bound_center);
                for (int col : parse_int_list(bound_columns)) {
                    if (!graph.has_coords()) throw InputError("--columns needs a product graph with coords");
                    auto members = graph.column(col);
                    if (members.empty()) throw InputError("no column " + std::to_string(col));
                    center.insert(center.end(), members.begin(), members.end());
                }
                rep = lower_bound(graph, dm, decompose(graph, dm, center));
            } else {
                rep = best_center(graph, dm, parse_center_strategy(bound_strategy), bound_max_size).report;
            }
            const json j = to_json(rep);
            if (g.format.empty() || g.format == "json")
                os << j.dump(2) << '\n';
            else
                write_key_values(os, j, g.format);
            return 0;
        }

        if (*construct) {
            const auto scheme = build_scheme(c_family, c_n, c_m);
            const std::string fmt = !c_emit.empty() ? c_emit : (g.format.empty() ? "json" : g.format);
            if (fmt == "json")
                os << to_json(scheme).dump(2) << '\n';
            else if (fmt == "csv")
                write_fixture_csv(os, fixture_from_scheme(scheme));
            else
                write_table(os, fixture_from_scheme(scheme));
            return 0;
        }

        if (*verify) {
            if (v_graph.empty() == v_family.empty()) throw InputError("give exactly one of --graph or --family");
            const Graph graph = v_graph.empty() ? family_graph(v_family, v_n, v_m) : graph_from_text(slurp(v_graph));
            const DistanceMatrix dm(graph);
            const json doc = parse_json(slurp(g.input));
            const Labeling lab = labeling_from_json(doc, graph);
            const auto rep = verify_radio(graph, dm, lab);
            json j = to_json(rep);

            std::vector<Vertex> center;
            if (!v_center.empty())
                center = parse_int_list(v_center);
            else if (doc.contains("center") && doc["center"].is_array())
                center = doc["center"].get<std::vector<Vertex>>();
            if (!center.empty()) j["optimality"] = to_json(check_theorem2(graph, dm, decompose(graph, dm, center), lab));

            if (g.format.empty() || g.format == "json") {
                os << j.dump(2) << '\n';
            } else {
                os << (rep.valid ? "valid" : "invalid") << " span=" << rep.span << " violations=" << rep.violations.size()
                   << '\n';
                for (const auto& v : rep.violations)
                    os << "  (" << v.u << "," << v.v << ") dist=" << v.dist << " gap=" << v.gap
                       << " required=" << v.required << '\n';
            }
            return rep.valid ? 0 : 1;
        }

        if (*exact) {
            const Graph graph = graph_from_text(slurp(g.input));
            const DistanceMatrix dm(graph);
            SolverOptions opts;
            opts.budget = resolve_budget(e_budget);
            opts.prune_symmetry = !e_no_sym;
            opts.prune_bounds = !e_no_bounds;
            opts.stop_at_lower_bound = !e_no_stop;
            opts.seed_incumbent = !e_no_seed;
            const auto res = exact_radio_number(graph, dm, opts);
            const json j = to_json(res, graph);
            if (g.format.empty() || g.format == "json") {
                os << j.dump(2) << '\n';
            } else {
                json flat = j;
                flat.erase("witness");
                flat.erase("ordering");
                write_key_values(os, flat, g.format);
            }
            return res.status == SolverStatus::proved ? 0 : 3;
        }

        if (*table) {
            const auto scheme = build_scheme(t_family, t_n, t_m);
            const auto actual = fixture_from_scheme(scheme);
            if (g.format == "csv")
                write_fixture_csv(os, actual);
            else if (g.format == "json")
                os << to_json(scheme).dump(2) << '\n';
            else
                write_table(os, actual);
            if (!t_fixture.empty()) {
                std::istringstream in(slurp(t_fixture));
                const auto expected = read_fixture_csv(in, t_family, actual.n, actual.m);
                validate_fixture(expected);
                const auto diffs = compare_fixtures(expected, actual);
                for (const auto& d : diffs) std::cerr << "mismatch " << d << '\n';
                std::cerr << (diffs.empty() ? "fixture matches" : "fixture differs") << " (" << expected.cells.size()
                          << " cells)\n";
                return diffs.empty() ? 0 : 1;
            }
            return 0;
        }
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 4;
    }
    return 0;
}
