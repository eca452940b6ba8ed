#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "radiolab/graph.hpp"

namespace radiolab {

/// Distance levels L_0..L_h measured from a chosen center set L_0.
struct LevelDecomposition {
    std::vector<Vertex> center;               // sorted, distinct
    std::vector<std::vector<Vertex>> levels;  // levels[i] = L_i, each sorted
    std::vector<int> level_of;                // vertex -> i
    int h = 0;                                // max level index
    int k = 0;                                // max G-distance inside the center
    int delta = 0;                            // 1 iff |center| == 1
    std::int64_t weight = 0;                  // sum_i |L_i| * i
};

/// Levels from `center` by multi-source BFS. Throws InputError on an empty
/// center or an out-of-range vertex; duplicates are merged.
LevelDecomposition decompose(const Graph& g, const DistanceMatrix& dm, std::vector<Vertex> center);

struct BoundTerms {
    std::int64_t p_minus_1 = 0;
    std::int64_t d_minus_k_plus_1 = 0;
    std::int64_t delta = 0;
    std::int64_t twice_weight = 0;

    std::int64_t value() const { return p_minus_1 * d_minus_k_plus_1 + delta - twice_weight; }
};

/// Level-decomposition lower bound on the radio number:
///   rn(G) >= (p-1)(d-k+1) + delta - 2 * sum_i |L_i| i
/// The value can be negative for a badly placed center; it is still a valid
/// (vacuous) bound.
struct BoundReport {
    std::int64_t bound = 0;
    int p = 0;
    int d = 0;
    int k = 0;
    int delta = 0;
    int h = 0;
    std::int64_t weight = 0;
    BoundTerms terms;
    std::vector<Vertex> center;
};

BoundReport lower_bound(const Graph& g, const DistanceMatrix& dm, const LevelDecomposition& dec);

enum class CenterStrategy { singletons, edges, cliques, balls, exhaustive };

CenterStrategy parse_center_strategy(const std::string& name);
std::string to_string(CenterStrategy s);

struct CenterChoice {
    LevelDecomposition decomposition;
    BoundReport report;
};

/// Candidate center sets enumerated by a strategy, in a deterministic order.
///
///  singletons  every {v}
///  edges       every {u, v} with uv an edge
///  cliques     every maximal clique
///  balls       singletons, closed neighbourhoods, and for product graphs
///              every column and every pair of adjacent columns
///  exhaustive  every nonempty subset of size <= max_size; needs
///              |V| <= 16 or max_size <= 3 (InputError otherwise)
std::vector<std::vector<Vertex>> candidate_centers(const Graph& g, CenterStrategy strategy, int max_size = 0);

/// Candidate maximising the bound; ties go to the smaller center, then to
/// the lexicographically smaller vertex list.
CenterChoice best_center(const Graph& g, const DistanceMatrix& dm, CenterStrategy strategy, int max_size = 0);

}  // namespace radiolab
