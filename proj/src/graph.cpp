#include "radiolab/graph.hpp"

#include <algorithm>
#include <queue>
#include <sstream>

#include "radiolab/errors.hpp"

namespace radiolab {

namespace {

std::string range_error(const std::string& family, const std::string& expected, int got) {
    std::ostringstream os;
    os << family << ": parameter " << got << " out of range (expected " << expected << ")";
    return os.str();
}

}  // namespace

Graph::Graph(int vertex_count, std::vector<Edge> edges) : Graph(vertex_count, std::move(edges), {}) {}

Graph::Graph(int vertex_count, std::vector<Edge> edges, std::vector<Coord> coords)
    : coords_(std::move(coords)) {
    if (vertex_count < 1) throw InputError("graph must have at least one vertex");
    if (!coords_.empty() && static_cast<int>(coords_.size()) != vertex_count)
        throw InputError("coordinate count does not match vertex count");

    for (auto& [a, b] : edges) {
        if (a < 0 || b < 0 || a >= vertex_count || b >= vertex_count) {
            std::ostringstream os;
            os << "edge (" << a << "," << b << ") references a vertex outside 0.." << vertex_count - 1;
            throw InputError(os.str());
        }
        if (a == b) throw InputError("self-loop at vertex " + std::to_string(a));
        if (a > b) std::swap(a, b);
    }
    std::sort(edges.begin(), edges.end());
    if (auto dup = std::adjacent_find(edges.begin(), edges.end()); dup != edges.end()) {
        std::ostringstream os;
        os << "duplicate edge (" << dup->first << "," << dup->second << ")";
        throw InputError(os.str());
    }
    edges_ = std::move(edges);

    adjacency_.assign(vertex_count, {});
    for (auto [a, b] : edges_) {
        adjacency_[a].push_back(b);
        adjacency_[b].push_back(a);
    }
    for (auto& nb : adjacency_) std::sort(nb.begin(), nb.end());

    if (!coords_.empty()) {
        auto sorted = coords_;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw InputError("product coordinates are not distinct");
    }

    auto reach = bfs_distances(*this, 0);
    if (std::any_of(reach.begin(), reach.end(), [](int d) { return d < 0; }))
        throw InputError("graph is disconnected");
}

bool Graph::adjacent(Vertex u, Vertex v) const {
    const auto& nb = adjacency_.at(u);
    return std::binary_search(nb.begin(), nb.end(), v);
}

Vertex Graph::at(Coord c) const {
    for (Vertex v = 0; v < static_cast<Vertex>(coords_.size()); ++v)
        if (coords_[v] == c) return v;
    std::ostringstream os;
    os << "no vertex with coordinate (" << c.i << "," << c.j << ")";
    throw InputError(os.str());
}

int Graph::column_count() const {
    int cols = 0;
    for (const auto& c : coords_) cols = std::max(cols, c.i);
    return cols;
}

std::vector<Vertex> Graph::column(int i) const {
    std::vector<Vertex> out;
    for (Vertex v = 0; v < static_cast<Vertex>(coords_.size()); ++v)
        if (coords_[v].i == i) out.push_back(v);
    std::sort(out.begin(), out.end(), [&](Vertex a, Vertex b) { return coords_[a].j < coords_[b].j; });
    return out;
}

std::vector<int> bfs_distances(const Graph& g, Vertex source) {
    std::vector<int> dist(g.vertex_count(), -1);
    std::queue<Vertex> q;
    dist[source] = 0;
    q.push(source);
    while (!q.empty()) {
        Vertex u = q.front();
        q.pop();
        for (Vertex w : g.neighbors(u)) {
            if (dist[w] < 0) {
                dist[w] = dist[u] + 1;
                q.push(w);
            }
        }
    }
    return dist;
}

DistanceMatrix::DistanceMatrix(const Graph& g) : p_(g.vertex_count()) {
    dist_.resize(static_cast<std::size_t>(p_) * p_);
    for (Vertex s = 0; s < p_; ++s) {
        auto row = bfs_distances(g, s);
        std::copy(row.begin(), row.end(), dist_.begin() + static_cast<std::ptrdiff_t>(s) * p_);
    }
    diameter_ = *std::max_element(dist_.begin(), dist_.end());
}

Graph path(int n) {
    if (n < 1) throw InputError(range_error("path", "n >= 1", n));
    std::vector<Edge> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return Graph(n, std::move(e));
}

Graph cycle(int n) {
    if (n < 3) throw InputError(range_error("cycle", "n >= 3", n));
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
    return Graph(n, std::move(e));
}

Graph complete(int m) {
    if (m < 1) throw InputError(range_error("complete", "m >= 1", m));
    std::vector<Edge> e;
    for (int a = 0; a < m; ++a)
        for (int b = a + 1; b < m; ++b) e.emplace_back(a, b);
    return Graph(m, std::move(e));
}

Graph star(int leaves) {
    if (leaves < 1) throw InputError(range_error("star", "leaves >= 1", leaves));
    std::vector<Edge> e;
    for (int i = 1; i <= leaves; ++i) e.emplace_back(0, i);
    return Graph(leaves + 1, std::move(e));
}

Graph wheel(int rim) {
    if (rim < 3) throw InputError(range_error("wheel", "rim >= 3", rim));
    std::vector<Edge> e;
    for (int i = 1; i <= rim; ++i) {
        e.emplace_back(0, i);
        e.emplace_back(i, i % rim + 1);
    }
    return Graph(rim + 1, std::move(e));
}

Graph gear(int teeth) {
    if (teeth < 3) throw InputError(range_error("gear", "teeth >= 3", teeth));
    const int rim = 2 * teeth;
    std::vector<Edge> e;
    for (int i = 1; i <= rim; ++i) {
        e.emplace_back(i, i % rim + 1);
        if (i % 2 == 1) e.emplace_back(0, i);
    }
    return Graph(rim + 1, std::move(e));
}

Graph petersen() {
    // v_i v_{i+1} (1 <= i <= 5), then the ten remaining edges, all 1-based.
    static constexpr int kEdges[15][2] = {{1, 2}, {2, 3}, {3, 4}, {4, 5},  {5, 6},  {1, 6},  {1, 8}, {2, 7},
                                          {3, 9}, {4, 8}, {5, 7}, {6, 9}, {7, 10}, {8, 10}, {9, 10}};
    std::vector<Edge> e;
    for (const auto& [a, b] : kEdges) e.emplace_back(a - 1, b - 1);
    return Graph(10, std::move(e));
}

Graph cartesian_product(const Graph& g, const Graph& h) {
    const int n = g.vertex_count();
    const int m = h.vertex_count();
    auto index = [m](int a, int b) { return a * m + b; };
    std::vector<Edge> e;
    for (int a = 0; a < n; ++a)
        for (auto [b, d] : h.edges()) e.emplace_back(index(a, b), index(a, d));
    for (int b = 0; b < m; ++b)
        for (auto [a, c] : g.edges()) e.emplace_back(index(a, b), index(c, b));
    std::vector<Coord> coords;
    coords.reserve(static_cast<std::size_t>(n) * m);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < m; ++b) coords.push_back({a + 1, b + 1});
    return Graph(n * m, std::move(e), std::move(coords));
}

Graph generate(const std::string& family, std::span<const int> params) {
    auto need = [&](std::size_t count) {
        if (params.size() != count) {
            std::ostringstream os;
            os << family << ": expected " << count << " parameter(s), got " << params.size();
            throw InputError(os.str());
        }
    };
    if (family == "path") return need(1), path(params[0]);
    if (family == "cycle") return need(1), cycle(params[0]);
    if (family == "complete") return need(1), complete(params[0]);
    if (family == "star") return need(1), star(params[0]);
    if (family == "wheel") return need(1), wheel(params[0]);
    if (family == "gear") return need(1), gear(params[0]);
    if (family == "petersen") return need(0), petersen();
    if (family == "pn-petersen") {
        need(1);
        return cartesian_product(path(params[0]), petersen());
    }
    if (family == "pn-km") {
        need(2);
        return cartesian_product(path(params[0]), complete(params[1]));
    }
    throw InputError("unknown graph family '" + family + "'");
}

}  // namespace radiolab
