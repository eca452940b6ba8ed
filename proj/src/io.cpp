#include "radiolab/io.hpp"

#include <algorithm>
#include <iomanip>
#include <istream>
#include <map>
#include <ostream>
#include <set>
#include <sstream>

#include "radiolab/errors.hpp"

namespace radiolab {

namespace {

// Non-empty lines with comments stripped, paired with 1-based line numbers.
std::vector<std::pair<int, std::string>> content_lines(std::istream& in) {
    std::vector<std::pair<int, std::string>> out;
    std::string line;
    int no = 0;
    while (std::getline(in, line)) {
        ++no;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        out.emplace_back(no, line);
    }
    return out;
}

[[noreturn]] void parse_error(int line_no, const std::string& what) {
    throw InputError("line " + std::to_string(line_no) + ": " + what);
}

template <class... T>
void read_ints(const std::pair<int, std::string>& line, T&... out) {
    std::istringstream is(line.second);
    (is >> ... >> out);
    std::string rest;
    if (!is || (is >> rest)) parse_error(line.first, "expected " + std::to_string(sizeof...(T)) + " integers");
}

std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> out;
    std::string field;
    std::istringstream is(line);
    while (std::getline(is, field, ',')) {
        field.erase(0, field.find_first_not_of(" \t\r"));
        field.erase(field.find_last_not_of(" \t\r") + 1);
        out.push_back(field);
    }
    return out;
}

long long to_integer(const std::string& s, int line_no) {
    try {
        std::size_t used = 0;
        const long long v = std::stoll(s, &used);
        if (used != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        parse_error(line_no, "'" + s + "' is not an integer");
    }
}

}  // namespace

Graph read_edge_list(std::istream& in) {
    const auto lines = content_lines(in);
    if (lines.empty()) throw InputError("empty edge list");
    int p = 0, q = 0;
    read_ints(lines[0], p, q);
    if (p < 1 || q < 0) parse_error(lines[0].first, "need p >= 1 and q >= 0");
    if (static_cast<int>(lines.size()) < 1 + q) throw InputError("edge list declares " + std::to_string(q) + " edges");
    std::vector<Edge> edges;
    edges.reserve(q);
    for (int e = 1; e <= q; ++e) {
        int a = 0, b = 0;
        read_ints(lines[e], a, b);
        edges.emplace_back(a, b);
    }
    std::size_t next = 1 + q;
    if (next == lines.size()) return Graph(p, std::move(edges));

    std::istringstream tag(lines[next].second);
    std::string word, extra;
    tag >> word;
    if (word != "coords" || (tag >> extra)) parse_error(lines[next].first, "unexpected content after the edges");
    ++next;
    if (lines.size() - next != static_cast<std::size_t>(p))
        throw InputError("coords section must list exactly " + std::to_string(p) + " vertices");
    std::vector<Coord> coords(p);
    std::vector<char> seen(p, 0);
    for (; next < lines.size(); ++next) {
        int v = 0, i = 0, j = 0;
        read_ints(lines[next], v, i, j);
        if (v < 0 || v >= p || seen[v]) parse_error(lines[next].first, "bad or repeated vertex " + std::to_string(v));
        seen[v] = 1;
        coords[v] = {i, j};
    }
    return Graph(p, std::move(edges), std::move(coords));
}

void write_edge_list(std::ostream& out, const Graph& g) {
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (const auto& [a, b] : g.edges()) out << a << ' ' << b << '\n';
    if (g.has_coords()) {
        out << "coords\n";
        for (Vertex v = 0; v < g.vertex_count(); ++v) out << v << ' ' << g.coord(v).i << ' ' << g.coord(v).j << '\n';
    }
}

json graph_to_json(const Graph& g) {
    json j;
    j["vertices"] = g.vertex_count();
    j["edges"] = json::array();
    for (const auto& [a, b] : g.edges()) j["edges"].push_back({a, b});
    if (g.has_coords()) {
        j["coords"] = json::array();
        for (const auto& c : g.coords()) j["coords"].push_back({c.i, c.j});
    }
    return j;
}

json labeling_to_json(const Graph& g, const Labeling& lab) {
    json j;
    j["span"] = lab.span();
    j["labels"] = json::array();
    std::vector<Vertex> order(lab.size());
    for (Vertex v = 0; v < lab.size(); ++v) order[v] = v;
    std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return lab[a] < lab[b]; });
    for (Vertex v : order) {
        json e{{"vertex", v}};
        if (g.has_coords()) e["coord"] = {g.coord(v).i, g.coord(v).j};
        e["label"] = lab[v];
        j["labels"].push_back(std::move(e));
    }
    return j;
}

Labeling labeling_from_json(const json& j, const Graph& g) {
    const int p = g.vertex_count();
    if (!j.is_object() || !j.contains("labels") || !j["labels"].is_array())
        throw InputError("labeling JSON needs a \"labels\" array");
    std::vector<Label> labels(p, 0);
    std::vector<char> seen(p, 0);
    try {
        for (const auto& e : j["labels"]) {
            Vertex v = -1;
            if (e.contains("vertex")) {
                v = e.at("vertex").get<int>();
                if (v < 0 || v >= p) throw InputError("vertex " + std::to_string(v) + " outside 0.." + std::to_string(p - 1));
            } else if (e.contains("coord") && g.has_coords()) {
                const auto& c = e.at("coord");
                v = g.at({c.at(0).get<int>(), c.at(1).get<int>()});
            } else {
                throw InputError("label entry names no vertex");
            }
            if (seen[v]) throw InputError("vertex " + std::to_string(v) + " labeled twice");
            seen[v] = 1;
            labels[v] = e.at("label").get<Label>();
        }
    } catch (const json::exception& ex) {
        throw InputError(std::string("malformed labeling JSON: ") + ex.what());
    }
    for (Vertex v = 0; v < p; ++v)
        if (!seen[v]) throw InputError("vertex " + std::to_string(v) + " has no label");
    return Labeling(std::move(labels));
}

json to_json(const BoundReport& r) {
    return json{{"bound", r.bound},
                {"p", r.p},
                {"d", r.d},
                {"k", r.k},
                {"delta", r.delta},
                {"h", r.h},
                {"weight", r.weight},
                {"terms",
                 {{"p_minus_1", r.terms.p_minus_1},
                  {"d_minus_k_plus_1", r.terms.d_minus_k_plus_1},
                  {"delta", r.terms.delta},
                  {"twice_weight", r.terms.twice_weight}}},
                {"center", r.center}};
}

json to_json(const VerificationReport& r) {
    json j{{"valid", r.valid}, {"span", r.span}, {"violations", json::array()}};
    for (const auto& v : r.violations)
        j["violations"].push_back({{"u", v.u}, {"v", v.v}, {"dist", v.dist}, {"gap", v.gap}, {"required", v.required}});
    return j;
}

json to_json(const Theorem2Report& r) {
    json j{{"holds", r.holds()},
           {"radio_valid", r.radio_valid},
           {"cond_a_failures", r.cond_a_failures},
           {"cond_b_ok", r.cond_b_ok},
           {"first_label_zero", r.first_label_zero},
           {"cond_c_failures", json::array()}};
    for (const auto& f : r.cond_c_failures) j["cond_c_failures"].push_back({{"index", f.index}, {"deviation", f.deviation}});
    return j;
}

json to_json(const SolverResult& r, const Graph& g) {
    json j{{"radio_number", r.radio_number},
           {"status", to_string(r.status)},
           {"nodes_explored", r.nodes_explored},
           {"lower_bound", r.lower_bound},
           {"ordering", r.ordering.sequence()}};
    j["witness"] = labeling_to_json(g, r.witness);
    return j;
}

json to_json(const SchemeResult& s) {
    json j{{"family", to_string(s.family)},
           {"n", s.n},
           {"m", s.m},
           {"span", s.labeling.span()},
           {"claimed_span", s.claimed_span},
           {"method", to_string(s.method)},
           {"center", s.center},
           {"jumps", json::array()},
           {"labels", json::array()}};
    for (const auto& jp : s.jumps) j["jumps"].push_back({{"index", jp.index}, {"extra", jp.extra}});
    for (int t = 0; t < s.ordering.size(); ++t) {
        const Vertex v = s.ordering[t];
        const Coord c = s.graph.coord(v);
        j["labels"].push_back({{"t", t}, {"vertex", v}, {"coord", {c.i, c.j}}, {"label", s.labeling[v]}});
    }
    return j;
}

FixtureTable read_fixture_csv(std::istream& in, const std::string& family, int n, int m) {
    FixtureTable table{family, n, m, {}};
    std::string line;
    int no = 0;
    bool header = false;
    while (std::getline(in, line)) {
        ++no;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        const auto f = split_csv(line);
        if (!header) {
            if (f != std::vector<std::string>{"i", "j", "t", "label"}) parse_error(no, "expected header i,j,t,label");
            header = true;
            continue;
        }
        if (f.size() != 4) parse_error(no, "expected 4 fields");
        table.cells.push_back({static_cast<int>(to_integer(f[0], no)), static_cast<int>(to_integer(f[1], no)),
                               static_cast<int>(to_integer(f[2], no)), to_integer(f[3], no)});
    }
    if (!header) throw InputError("fixture CSV is empty");
    std::sort(table.cells.begin(), table.cells.end());
    return table;
}

void write_fixture_csv(std::ostream& out, const FixtureTable& table) {
    out << "i,j,t,label\n";
    for (const auto& c : table.cells) out << c.i << ',' << c.j << ',' << c.t << ',' << c.label << '\n';
}

void validate_fixture(const FixtureTable& table) {
    const int p = table.n * table.m;
    if (static_cast<int>(table.cells.size()) != p)
        throw InputError("fixture has " + std::to_string(table.cells.size()) + " cells, expected " + std::to_string(p));
    std::set<std::pair<int, int>> coords;
    std::set<int> ts;
    for (const auto& c : table.cells) {
        if (c.i < 1 || c.i > table.n || c.j < 1 || c.j > table.m)
            throw InputError("cell (" + std::to_string(c.i) + "," + std::to_string(c.j) + ") outside the grid");
        if (!coords.insert({c.i, c.j}).second)
            throw InputError("cell (" + std::to_string(c.i) + "," + std::to_string(c.j) + ") repeated");
        if (c.t < 0 || c.t >= p || !ts.insert(c.t).second)
            throw InputError("position t=" + std::to_string(c.t) + " out of range or repeated");
    }
}

FixtureTable fixture_from_scheme(const SchemeResult& s) {
    FixtureTable table{to_string(s.family), s.n, s.m, {}};
    for (int t = 0; t < s.ordering.size(); ++t) {
        const Vertex v = s.ordering[t];
        const Coord c = s.graph.coord(v);
        table.cells.push_back({c.i, c.j, t, s.labeling[v]});
    }
    std::sort(table.cells.begin(), table.cells.end());
    return table;
}

std::vector<std::string> compare_fixtures(const FixtureTable& expected, const FixtureTable& actual) {
    std::vector<std::string> diffs;
    std::map<std::pair<int, int>, const FixtureCell*> got;
    for (const auto& c : actual.cells) got[{c.i, c.j}] = &c;
    std::set<std::pair<int, int>> seen;
    for (const auto& c : expected.cells) {
        seen.insert({c.i, c.j});
        std::ostringstream os;
        os << "(" << c.i << "," << c.j << "): expected x" << c.t << ":" << c.label;
        auto it = got.find({c.i, c.j});
        if (it == got.end()) {
            os << ", missing";
            diffs.push_back(os.str());
        } else if (it->second->t != c.t || it->second->label != c.label) {
            os << ", got x" << it->second->t << ":" << it->second->label;
            diffs.push_back(os.str());
        }
    }
    for (const auto& c : actual.cells)
        if (!seen.count({c.i, c.j}))
            diffs.push_back("(" + std::to_string(c.i) + "," + std::to_string(c.j) + "): unexpected cell");
    return diffs;
}

void write_table(std::ostream& out, const FixtureTable& table) {
    std::map<std::pair<int, int>, std::string> text;
    std::size_t width = 3;
    for (const auto& c : table.cells) {
        auto s = "x" + std::to_string(c.t) + ":" + std::to_string(c.label);
        width = std::max(width, s.size());
        text[{c.i, c.j}] = std::move(s);
    }
    const int w = static_cast<int>(width) + 2;
    auto emit = [&](std::ostringstream& row) {
        std::string s = row.str();
        s.erase(s.find_last_not_of(' ') + 1);
        out << s << '\n';
    };
    std::ostringstream head;
    head << std::left << std::setw(5) << "j\\i";
    for (int i = 1; i <= table.n; ++i) head << std::setw(w) << i;
    emit(head);
    for (int j = 1; j <= table.m; ++j) {
        std::ostringstream row;
        row << std::left << std::setw(5) << j;
        for (int i = 1; i <= table.n; ++i) {
            auto it = text.find({i, j});
            row << std::setw(w) << (it == text.end() ? "-" : it->second);
        }
        emit(row);
    }
}

}  // namespace radiolab
