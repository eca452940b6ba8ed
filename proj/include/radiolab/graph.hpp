#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace radiolab {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

/// 1-based product coordinate (i, j): i indexes the left factor, j the right.
struct Coord {
    int i = 0;
    int j = 0;
    auto operator<=>(const Coord&) const = default;
};

/// Immutable simple connected graph on vertices 0..p-1.
///
/// Edges are normalised to (min, max) and kept sorted. Product graphs carry
/// a coordinate per vertex; vertex (i, j) has index (i-1)*m + (j-1) where m
/// is the size of the right factor.
class Graph {
public:
    /// Throws InputError on self-loops, duplicate edges, out-of-range
    /// endpoints, an empty vertex set or a disconnected graph.
    Graph(int vertex_count, std::vector<Edge> edges);
    Graph(int vertex_count, std::vector<Edge> edges, std::vector<Coord> coords);

    int vertex_count() const { return static_cast<int>(adjacency_.size()); }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    std::span<const Vertex> neighbors(Vertex v) const { return adjacency_.at(v); }
    int degree(Vertex v) const { return static_cast<int>(adjacency_.at(v).size()); }
    bool adjacent(Vertex u, Vertex v) const;

    bool has_coords() const { return !coords_.empty(); }
    const std::vector<Coord>& coords() const { return coords_; }
    Coord coord(Vertex v) const { return coords_.at(v); }
    /// Vertex with the given coordinate; throws InputError if absent.
    Vertex at(Coord c) const;
    /// Number of distinct first coordinates (columns) of a product graph.
    int column_count() const;
    /// All vertices whose first coordinate equals `i`, ordered by j.
    std::vector<Vertex> column(int i) const;

private:
    std::vector<Edge> edges_;
    std::vector<std::vector<Vertex>> adjacency_;
    std::vector<Coord> coords_;
};

/// All-pairs hop distances, computed by one BFS per source.
class DistanceMatrix {
public:
    explicit DistanceMatrix(const Graph& g);

    int size() const { return p_; }
    int operator()(Vertex u, Vertex v) const { return dist_[static_cast<std::size_t>(u) * p_ + v]; }
    int diameter() const { return diameter_; }

private:
    int p_ = 0;
    int diameter_ = 0;
    std::vector<int> dist_;
};

inline DistanceMatrix distances(const Graph& g) { return DistanceMatrix(g); }

/// Hop distances from `source` by BFS.
std::vector<int> bfs_distances(const Graph& g, Vertex source);

// Generators. Parameters outside the documented range raise InputError.

Graph path(int n);        // n >= 1, vertices in path order
Graph cycle(int n);       // n >= 3
Graph complete(int m);    // m >= 1
Graph star(int leaves);   // leaves >= 1, hub is vertex 0
Graph wheel(int rim);     // rim >= 3, hub is vertex 0, rim 1..rim
Graph gear(int teeth);    // teeth >= 3, hub 0, rim cycle 1..2*teeth, hub joined to odd rim vertices
Graph petersen();         // v1..v10 -> 0..9 in the standard numbering used by the schemes

/// Cartesian product g x h with coordinates (a+1, b+1).
Graph cartesian_product(const Graph& g, const Graph& h);

/// Named-family dispatch used by the CLI: path, cycle, complete, star, wheel,
/// gear, petersen, pn-petersen (n), pn-km (n, m).
Graph generate(const std::string& family, std::span<const int> params);

}  // namespace radiolab
