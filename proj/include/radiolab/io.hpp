#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "radiolab/constructions.hpp"
#include "radiolab/exact_solver.hpp"
#include "radiolab/graph.hpp"
#include "radiolab/labeling.hpp"
#include "radiolab/level_structure.hpp"

namespace radiolab {

using nlohmann::json;

// Edge list text format:
//
//   p q
//   a b        (q lines, 0-based endpoints)
//   coords     (optional, product graphs)
//   v i j      (p lines)
//
// Blank lines and text after '#' are ignored.
Graph read_edge_list(std::istream& in);
void write_edge_list(std::ostream& out, const Graph& g);

json graph_to_json(const Graph& g);

/// {"span": s, "labels": [{"vertex": v, "coord": [i, j], "label": f}, ...]}
/// listed in label order; "coord" only for product graphs.
json labeling_to_json(const Graph& g, const Labeling& lab);
/// Accepts the layout above (extra keys ignored). Entries may name a vertex
/// by "vertex" or, on product graphs, by "coord". Every vertex must appear
/// exactly once. Throws InputError otherwise.
Labeling labeling_from_json(const json& j, const Graph& g);

json to_json(const BoundReport& r);
json to_json(const VerificationReport& r);
json to_json(const Theorem2Report& r);
json to_json(const SolverResult& r, const Graph& g);
/// Scheme output: family, n, m, span, claimed_span, method, center, jumps,
/// and the labels in ordering position with "t".
json to_json(const SchemeResult& s);

struct FixtureCell {
    int i = 0;
    int j = 0;
    int t = 0;
    Label label = 0;
    auto operator<=>(const FixtureCell&) const = default;
};

/// An ordering/labeling table for a P_n x H product: column i, row j.
struct FixtureTable {
    std::string family;
    int n = 0;
    int m = 0;
    std::vector<FixtureCell> cells;  // sorted by (i, j)
};

/// CSV with header "i,j,t,label". Throws InputError on malformed rows.
FixtureTable read_fixture_csv(std::istream& in, const std::string& family, int n, int m);
void write_fixture_csv(std::ostream& out, const FixtureTable& table);
/// Cells must cover (1..n) x (1..m) exactly once and t must run over 0..p-1
/// exactly once. Throws InputError naming the first problem.
void validate_fixture(const FixtureTable& table);
FixtureTable fixture_from_scheme(const SchemeResult& s);
/// Human-readable differences on parsed (i, j, t, label) tuples; empty when equal.
std::vector<std::string> compare_fixtures(const FixtureTable& expected, const FixtureTable& actual);
/// Rows j, columns i, cells "x{t}:{label}".
void write_table(std::ostream& out, const FixtureTable& table);

}  // namespace radiolab
