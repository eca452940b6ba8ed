#pragma once

// Test-side oracles. These deliberately avoid the library's algorithms:
// distances by Floyd-Warshall, radio checks by a plain double loop, radio
// numbers by enumerating label vectors.

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "radiolab/graph.hpp"
#include "radiolab/io.hpp"

namespace oracle {

using radiolab::Edge;
using radiolab::Graph;

inline constexpr int kInf = 1 << 20;

inline std::vector<std::vector<int>> floyd_warshall(int p, const std::vector<Edge>& edges) {
    std::vector<std::vector<int>> d(p, std::vector<int>(p, kInf));
    for (int v = 0; v < p; ++v) d[v][v] = 0;
    for (auto [a, b] : edges) d[a][b] = d[b][a] = 1;
    for (int k = 0; k < p; ++k)
        for (int i = 0; i < p; ++i)
            for (int j = 0; j < p; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
    return d;
}

inline int diameter_of(const std::vector<std::vector<int>>& d) {
    int m = 0;
    for (const auto& row : d)
        for (int x : row) m = std::max(m, x);
    return m;
}

inline bool radio_ok(const std::vector<std::vector<int>>& d, const std::vector<long long>& f) {
    const int diam = diameter_of(d);
    for (std::size_t u = 0; u < f.size(); ++u)
        for (std::size_t v = 0; v < f.size(); ++v)
            if (u != v && d[u][v] + std::llabs(f[u] - f[v]) < diam + 1) return false;
    return true;
}

/// Smallest span of any radio labeling, by backtracking over label vectors
/// in [0, S] for S = 0, 1, 2, ... (vertex 0 is not privileged; some label is
/// forced to 0 only by translation invariance).
inline long long brute_force_radio_number(const std::vector<std::vector<int>>& d) {
    const int p = static_cast<int>(d.size());
    if (p == 1) return 0;
    const int diam = diameter_of(d);
    std::vector<long long> f(p, -1);
    for (long long S = p - 1;; ++S) {
        std::function<bool(int, bool)> rec = [&](int v, bool used_zero) -> bool {
            if (v == p) return used_zero;
            for (long long x = 0; x <= S; ++x) {
                bool ok = true;
                for (int u = 0; u < v && ok; ++u) ok = d[u][v] + std::llabs(f[u] - x) >= diam + 1;
                if (!ok) continue;
                f[v] = x;
                if (rec(v + 1, used_zero || x == 0)) return true;
            }
            return false;
        };
        if (rec(0, false)) return S;
    }
}

/// Minimum span among radio labelings whose label order is exactly `ord`,
/// by enumerating increasing label sequences up to `cap`.
inline long long brute_force_order_min(const std::vector<std::vector<int>>& d, const std::vector<int>& ord,
                                       long long cap) {
    const int p = static_cast<int>(ord.size());
    const int diam = diameter_of(d);
    long long best = -1;
    std::vector<long long> f(p, 0);
    std::function<void(int)> rec = [&](int t) {
        if (t == p) {
            if (best < 0 || f[p - 1] < best) best = f[p - 1];
            return;
        }
        for (long long x = f[t - 1] + 1; x <= cap; ++x) {
            if (best >= 0 && x >= best) break;
            bool ok = true;
            for (int j = 0; j < t && ok; ++j) ok = d[ord[j]][ord[t]] + (x - f[j]) >= diam + 1;
            if (!ok) continue;
            f[t] = x;
            rec(t + 1);
        }
    };
    if (p == 1) return 0;
    rec(1);
    return best;
}

/// Random connected graph: random spanning tree plus each other pair with
/// probability `extra`.
inline Graph random_connected(std::mt19937_64& rng, int p, double extra) {
    std::vector<Edge> edges;
    std::set<std::pair<int, int>> have;
    std::vector<int> perm(p);
    for (int v = 0; v < p; ++v) perm[v] = v;
    std::shuffle(perm.begin(), perm.end(), rng);
    for (int i = 1; i < p; ++i) {
        const int parent = perm[rng() % i];
        const int a = std::min(perm[i], parent), b = std::max(perm[i], parent);
        edges.emplace_back(a, b);
        have.insert({a, b});
    }
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    for (int a = 0; a < p; ++a)
        for (int b = a + 1; b < p; ++b)
            if (!have.count({a, b}) && coin(rng) < extra) edges.emplace_back(a, b);
    return Graph(p, edges);
}

inline std::vector<std::vector<int>> fw(const Graph& g) { return floyd_warshall(g.vertex_count(), g.edges()); }

inline radiolab::FixtureTable load_fixture(const std::string& file, const std::string& family, int n, int m) {
    std::ifstream in(std::string(RADIOLAB_FIXTURE_DIR) + "/" + file);
    return radiolab::read_fixture_csv(in, family, n, m);
}

}  // namespace oracle
