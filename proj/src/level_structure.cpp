#include "radiolab/level_structure.hpp"

#include <algorithm>
#include <optional>
#include <queue>
#include <set>

#include "radiolab/errors.hpp"

namespace radiolab {

LevelDecomposition decompose(const Graph& g, const DistanceMatrix& dm, std::vector<Vertex> center) {
    const int p = g.vertex_count();
    if (center.empty()) throw InputError("center set must be nonempty");
    for (Vertex v : center)
        if (v < 0 || v >= p)
            throw InputError("center vertex " + std::to_string(v) + " outside 0.." + std::to_string(p - 1));
    std::sort(center.begin(), center.end());
    center.erase(std::unique(center.begin(), center.end()), center.end());

    LevelDecomposition dec;
    dec.level_of.assign(p, -1);
    std::queue<Vertex> q;
    for (Vertex v : center) {
        dec.level_of[v] = 0;
        q.push(v);
    }
    while (!q.empty()) {
        Vertex u = q.front();
        q.pop();
        for (Vertex w : g.neighbors(u)) {
            if (dec.level_of[w] < 0) {
                dec.level_of[w] = dec.level_of[u] + 1;
                q.push(w);
            }
        }
    }

    dec.h = *std::max_element(dec.level_of.begin(), dec.level_of.end());
    dec.levels.assign(dec.h + 1, {});
    for (Vertex v = 0; v < p; ++v) {
        dec.levels[dec.level_of[v]].push_back(v);
        dec.weight += dec.level_of[v];
    }
    for (Vertex a : center)
        for (Vertex b : center) dec.k = std::max(dec.k, dm(a, b));
    dec.delta = center.size() == 1 ? 1 : 0;
    dec.center = std::move(center);
    return dec;
}

BoundReport lower_bound(const Graph& g, const DistanceMatrix& dm, const LevelDecomposition& dec) {
    BoundReport r;
    r.p = g.vertex_count();
    r.d = dm.diameter();
    r.k = dec.k;
    r.delta = dec.delta;
    r.h = dec.h;
    r.weight = dec.weight;
    r.terms.p_minus_1 = r.p - 1;
    r.terms.d_minus_k_plus_1 = r.d - r.k + 1;
    r.terms.delta = r.delta;
    r.terms.twice_weight = 2 * r.weight;
    r.bound = r.terms.value();
    r.center = dec.center;
    return r;
}

CenterStrategy parse_center_strategy(const std::string& name) {
    if (name == "singletons") return CenterStrategy::singletons;
    if (name == "edges") return CenterStrategy::edges;
    if (name == "cliques") return CenterStrategy::cliques;
    if (name == "balls") return CenterStrategy::balls;
    if (name == "exhaustive") return CenterStrategy::exhaustive;
    throw InputError("unknown center strategy '" + name + "'");
}

std::string to_string(CenterStrategy s) {
    switch (s) {
        case CenterStrategy::singletons: return "singletons";
        case CenterStrategy::edges: return "edges";
        case CenterStrategy::cliques: return "cliques";
        case CenterStrategy::balls: return "balls";
        case CenterStrategy::exhaustive: return "exhaustive";
    }
    return "?";
}

namespace {

// Bron-Kerbosch with pivoting over sorted vertex sets.
void maximal_cliques(const Graph& g, std::vector<Vertex> r, std::vector<Vertex> p, std::vector<Vertex> x,
                     std::vector<std::vector<Vertex>>& out) {
    if (p.empty() && x.empty()) {
        std::sort(r.begin(), r.end());
        out.push_back(std::move(r));
        return;
    }
    Vertex pivot = p.empty() ? x.front() : p.front();
    std::size_t best = 0;
    for (const auto* set : {&p, &x})
        for (Vertex u : *set) {
            auto cnt = static_cast<std::size_t>(
                std::count_if(p.begin(), p.end(), [&](Vertex w) { return g.adjacent(u, w); }));
            if (cnt >= best) best = cnt, pivot = u;
        }
    std::vector<Vertex> branch;
    for (Vertex v : p)
        if (!g.adjacent(pivot, v)) branch.push_back(v);
    for (Vertex v : branch) {
        std::vector<Vertex> np, nx;
        for (Vertex w : p)
            if (g.adjacent(v, w)) np.push_back(w);
        for (Vertex w : x)
            if (g.adjacent(v, w)) nx.push_back(w);
        auto nr = r;
        nr.push_back(v);
        maximal_cliques(g, std::move(nr), std::move(np), std::move(nx), out);
        p.erase(std::find(p.begin(), p.end(), v));
        x.push_back(v);
    }
}

}  // namespace

std::vector<std::vector<Vertex>> candidate_centers(const Graph& g, CenterStrategy strategy, int max_size) {
    const int p = g.vertex_count();
    std::vector<std::vector<Vertex>> out;
    switch (strategy) {
        case CenterStrategy::singletons:
            for (Vertex v = 0; v < p; ++v) out.push_back({v});
            break;
        case CenterStrategy::edges:
            for (auto [a, b] : g.edges()) out.push_back({a, b});
            if (out.empty()) out.push_back({0});
            break;
        case CenterStrategy::cliques: {
            std::vector<Vertex> all(p);
            for (Vertex v = 0; v < p; ++v) all[v] = v;
            maximal_cliques(g, {}, all, {}, out);
            break;
        }
        case CenterStrategy::balls: {
            for (Vertex v = 0; v < p; ++v) out.push_back({v});
            for (Vertex v = 0; v < p; ++v) {
                std::vector<Vertex> ball(g.neighbors(v).begin(), g.neighbors(v).end());
                ball.push_back(v);
                std::sort(ball.begin(), ball.end());
                out.push_back(std::move(ball));
            }
            if (g.has_coords()) {
                const int cols = g.column_count();
                for (int i = 1; i <= cols; ++i) out.push_back(g.column(i));
                for (int i = 1; i < cols; ++i) {
                    auto both = g.column(i);
                    auto next = g.column(i + 1);
                    both.insert(both.end(), next.begin(), next.end());
                    std::sort(both.begin(), both.end());
                    out.push_back(std::move(both));
                }
            }
            break;
        }
        case CenterStrategy::exhaustive: {
            if (max_size <= 0) max_size = p;
            if (p > 16 && max_size > 3)
                throw InputError("exhaustive center search needs |V| <= 16 or max_size <= 3 (|V| = " +
                                 std::to_string(p) + ", max_size = " + std::to_string(max_size) + ")");
            max_size = std::min(max_size, p);
            // Subsets in increasing size, each size in lexicographic order.
            for (int size = 1; size <= max_size; ++size) {
                std::vector<Vertex> pick(size);
                for (int i = 0; i < size; ++i) pick[i] = i;
                while (true) {
                    out.push_back(pick);
                    int i = size - 1;
                    while (i >= 0 && pick[i] == p - size + i) --i;
                    if (i < 0) break;
                    ++pick[i];
                    for (int j = i + 1; j < size; ++j) pick[j] = pick[j - 1] + 1;
                }
            }
            break;
        }
    }
    return out;
}

CenterChoice best_center(const Graph& g, const DistanceMatrix& dm, CenterStrategy strategy, int max_size) {
    auto candidates = candidate_centers(g, strategy, max_size);
    std::set<std::vector<Vertex>> seen;
    std::optional<CenterChoice> best;
    for (auto& c : candidates) {
        if (!seen.insert(c).second) continue;
        auto dec = decompose(g, dm, c);
        auto rep = lower_bound(g, dm, dec);
        bool better = !best;
        if (best) {
            const auto& b = best->report;
            if (rep.bound != b.bound)
                better = rep.bound > b.bound;
            else if (rep.center.size() != b.center.size())
                better = rep.center.size() < b.center.size();
            else
                better = rep.center < b.center;
        }
        if (better) best = CenterChoice{std::move(dec), std::move(rep)};
    }
    return std::move(*best);
}

}  // namespace radiolab
