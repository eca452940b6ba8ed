#include "radiolab/exact_solver.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>
#include <optional>
#include <set>

#include "radiolab/level_structure.hpp"

namespace radiolab {

std::string to_string(SolverStatus s) { return s == SolverStatus::proved ? "proved" : "budget_exhausted"; }

namespace {

// Vertices grouped by their sorted distance row; automorphisms preserve it.
std::vector<int> profile_classes(const DistanceMatrix& dm) {
    const int p = dm.size();
    std::map<std::vector<int>, int> ids;
    std::vector<int> cls(p);
    for (Vertex v = 0; v < p; ++v) {
        std::vector<int> row(p);
        for (Vertex w = 0; w < p; ++w) row[w] = dm(v, w);
        std::sort(row.begin(), row.end());
        cls[v] = ids.emplace(std::move(row), static_cast<int>(ids.size())).first->second;
    }
    return cls;
}

class AutomorphismSearch {
public:
    AutomorphismSearch(const DistanceMatrix& dm, const std::vector<int>& cls, std::uint64_t cap)
        : dm_(dm), cls_(cls), p_(dm.size()), cap_(cap) {}

    // Some automorphism with phi(u) = v, if found within the node cap.
    std::optional<std::vector<Vertex>> find(Vertex u, Vertex v) {
        nodes_ = 0;
        // Map vertices in order of distance from u so constraints bite early.
        order_.resize(p_);
        std::iota(order_.begin(), order_.end(), 0);
        std::stable_sort(order_.begin(), order_.end(), [&](Vertex a, Vertex b) { return dm_(u, a) < dm_(u, b); });
        phi_.assign(p_, -1);
        taken_.assign(p_, 0);
        phi_[u] = v;
        taken_[v] = 1;
        if (extend(1)) return phi_;
        return std::nullopt;
    }

private:
    bool extend(int idx) {
        if (idx == p_) return true;
        if (++nodes_ > cap_) return false;
        const Vertex w = order_[idx];
        for (Vertex x = 0; x < p_; ++x) {
            if (taken_[x] || cls_[x] != cls_[w]) continue;
            bool ok = true;
            for (int q = 0; q < idx && ok; ++q) ok = dm_(x, phi_[order_[q]]) == dm_(w, order_[q]);
            if (!ok) continue;
            phi_[w] = x;
            taken_[x] = 1;
            if (extend(idx + 1)) return true;
            taken_[x] = 0;
            phi_[w] = -1;
            if (nodes_ > cap_) return false;
        }
        return false;
    }

    const DistanceMatrix& dm_;
    const std::vector<int>& cls_;
    int p_;
    std::uint64_t cap_;
    std::uint64_t nodes_ = 0;
    std::vector<Vertex> order_;
    std::vector<Vertex> phi_;
    std::vector<char> taken_;
};

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
    void unite(int a, int b) {
        a = find(a), b = find(b);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
};

// Next vertex = the one with the smallest feasible label; tried from every start.
Ordering greedy_heuristic(const Graph& g, const DistanceMatrix& dm, const std::vector<Vertex>& starts) {
    const int p = g.vertex_count();
    const Label need = dm.diameter() + 1;
    Ordering best;
    Label best_span = std::numeric_limits<Label>::max();
    for (Vertex s : starts) {
        std::vector<Vertex> seq{s};
        std::vector<Label> lab(p, 0);
        std::vector<char> used(p, 0);
        used[s] = 1;
        for (int t = 1; t < p; ++t) {
            Vertex pick = -1;
            Label pick_label = 0;
            for (Vertex v = 0; v < p; ++v) {
                if (used[v]) continue;
                Label f = 0;
                for (Vertex u : seq) f = std::max(f, lab[u] + std::max<Label>(1, need - dm(u, v)));
                if (pick < 0 || f < pick_label) pick = v, pick_label = f;
            }
            seq.push_back(pick);
            lab[pick] = pick_label;
            used[pick] = 1;
        }
        if (lab[seq.back()] < best_span) {
            best_span = lab[seq.back()];
            best = Ordering(seq);
        }
    }
    return best;
}

class BranchAndBound {
public:
    BranchAndBound(const DistanceMatrix& dm, std::vector<LevelDecomposition> centers, const SolverOptions& opts,
                   Label incumbent, std::vector<Vertex> incumbent_seq, Label stop_at)
        : dm_(dm), p_(dm.size()), need_(dm.diameter() + 1), opts_(opts), centers_(std::move(centers)),
          best_(incumbent), best_seq_(std::move(incumbent_seq)), stop_at_(stop_at), seq_(p_), lab_(p_),
          used_(p_, 0) {
        for (const auto& c : centers_) {
            Label total = 0;
            for (int l : c.level_of) total += l;
            sum_levels_.push_back(total);
            count_at_level_.emplace_back(c.h + 1, 0);
            for (int l : c.level_of) ++count_at_level_.back()[l];
        }
    }

    void run(const std::vector<Vertex>& first_choices) {
        for (Vertex v : first_choices) {
            if (done()) return;
            if (!charge()) return;
            place(0, v, 0);
            dfs(1);
            unplace(v);
        }
    }

    bool exhausted() const { return exhausted_; }
    std::uint64_t nodes() const { return nodes_; }
    Label best() const { return best_; }
    const std::vector<Vertex>& best_sequence() const { return best_seq_; }

private:
    bool done() const { return exhausted_ || (opts_.stop_at_lower_bound && best_ <= stop_at_); }

    bool charge() {
        if (++nodes_ > opts_.budget) {
            exhausted_ = true;
            return false;
        }
        return true;
    }

    Label greedy_label(Vertex v, int t) const {
        Label f = lab_[t - 1] + 1;
        for (int j = t - 1; j >= 0; --j) {
            if (lab_[j] + need_ - 1 <= f) break;
            f = std::max(f, lab_[j] + std::max<Label>(1, need_ - dm_(seq_[j], v)));
        }
        return f;
    }

    void place(int t, Vertex v, Label f) {
        seq_[t] = v;
        lab_[t] = f;
        used_[v] = 1;
        for (std::size_t c = 0; c < centers_.size(); ++c) {
            const int l = centers_[c].level_of[v];
            sum_levels_[c] -= l;
            --count_at_level_[c][l];
        }
    }

    void unplace(Vertex v) {
        used_[v] = 0;
        for (std::size_t c = 0; c < centers_.size(); ++c) {
            const int l = centers_[c].level_of[v];
            sum_levels_[c] += l;
            ++count_at_level_[c][l];
        }
    }

    // Lower bound on (final label - label of x_t) given r unplaced vertices:
    // the remaining walk v = y_0, ..., y_r has increments
    // >= d + 1 - L(y_i) - L(y_{i+1}) - k for every center.
    Label rest_bound(Vertex v, int r) const {
        Label lb = r;
        if (r == 0) return 0;
        for (std::size_t c = 0; c < centers_.size(); ++c) {
            const auto& dec = centers_[c];
            int min_level = 0;
            while (count_at_level_[c][min_level] == 0) ++min_level;
            const Label b = Label{r} * (need_ - dec.k) - dec.level_of[v] - 2 * sum_levels_[c] + min_level;
            lb = std::max(lb, b);
        }
        return lb;
    }

    void dfs(int t) {
        if (t == p_) {
            if (lab_[p_ - 1] < best_) {
                best_ = lab_[p_ - 1];
                best_seq_ = seq_;
            }
            return;
        }
        const int r_after = p_ - t - 1;
        for (Vertex v = 0; v < p_; ++v) {
            if (used_[v]) continue;
            if (done()) return;
            if (!charge()) return;
            const Label f = greedy_label(v, t);
            if (opts_.prune_bounds) {
                if (f + r_after >= best_) continue;
            }
            place(t, v, f);
            if (!opts_.prune_bounds || f + rest_bound(v, r_after) < best_) dfs(t + 1);
            unplace(v);
        }
    }

    const DistanceMatrix& dm_;
    int p_;
    Label need_;
    const SolverOptions& opts_;
    std::vector<LevelDecomposition> centers_;
    std::vector<Label> sum_levels_;  // over unplaced vertices, per center
    std::vector<std::vector<int>> count_at_level_;
    Label best_;
    std::vector<Vertex> best_seq_;
    Label stop_at_;
    std::vector<Vertex> seq_;
    std::vector<Label> lab_;
    std::vector<char> used_;
    std::uint64_t nodes_ = 0;
    bool exhausted_ = false;
};

}  // namespace

std::vector<std::vector<Vertex>> automorphism_orbits(const Graph& g, const DistanceMatrix& dm,
                                                     std::uint64_t node_cap) {
    const int p = g.vertex_count();
    const auto cls = profile_classes(dm);
    UnionFind uf(p);
    AutomorphismSearch search(dm, cls, node_cap);
    for (Vertex v = 1; v < p; ++v) {
        for (Vertex u = 0; u < v; ++u) {
            if (cls[u] != cls[v] || uf.find(u) == uf.find(v)) continue;
            if (auto phi = search.find(u, v)) {
                for (Vertex w = 0; w < p; ++w) uf.unite(w, (*phi)[w]);
                break;
            }
        }
    }
    std::map<int, std::vector<Vertex>> groups;
    for (Vertex v = 0; v < p; ++v) groups[uf.find(v)].push_back(v);
    std::vector<std::vector<Vertex>> out;
    for (auto& [root, members] : groups) out.push_back(std::move(members));
    return out;
}

SolverResult exact_radio_number(const Graph& g, const DistanceMatrix& dm, const SolverOptions& opts) {
    const int p = g.vertex_count();
    SolverResult res;
    if (p == 1) {
        res.status = SolverStatus::proved;
        res.witness = Labeling({0});
        res.ordering = Ordering({0});
        return res;
    }

    // Level bounds: the best ball/clique center plus every singleton.
    std::vector<LevelDecomposition> centers;
    Label lb = p - 1;
    for (auto strategy : {CenterStrategy::balls, CenterStrategy::cliques}) {
        auto choice = best_center(g, dm, strategy);
        lb = std::max(lb, choice.report.bound);
        centers.push_back(std::move(choice.decomposition));
    }
    for (Vertex v = 0; v < p; ++v) centers.push_back(decompose(g, dm, {v}));
    res.lower_bound = lb;

    std::vector<Vertex> firsts;
    if (opts.prune_symmetry) {
        for (const auto& orbit : automorphism_orbits(g, dm)) firsts.push_back(orbit.front());
        std::sort(firsts.begin(), firsts.end());
    } else {
        firsts.resize(p);
        std::iota(firsts.begin(), firsts.end(), 0);
    }

    std::vector<Vertex> identity(p);
    std::iota(identity.begin(), identity.end(), 0);
    Ordering start = opts.seed_incumbent ? greedy_heuristic(g, dm, firsts) : Ordering(identity);
    const Label incumbent = greedy_min_labeling(g, dm, start).span();

    BranchAndBound bb(dm, std::move(centers), opts, incumbent, start.sequence(), lb);
    bb.run(firsts);

    res.nodes_explored = bb.nodes();
    res.status = bb.exhausted() ? SolverStatus::budget_exhausted : SolverStatus::proved;
    res.ordering = Ordering(bb.best_sequence());
    res.witness = greedy_min_labeling(g, dm, res.ordering);
    res.radio_number = res.witness.span();
    return res;
}

bool exhaustive_verify_equivalence(const Graph& g, const DistanceMatrix& dm, const Labeling& lab) {
    const int p = g.vertex_count();
    if (lab.size() != p) return false;
    const Label need = dm.diameter() + 1;
    std::set<std::pair<Vertex, Vertex>> naive;
    for (Vertex u = 0; u < p; ++u)
        for (Vertex v = 0; v < p; ++v) {
            if (u == v) continue;
            const Label gap = lab[u] > lab[v] ? lab[u] - lab[v] : lab[v] - lab[u];
            if (dm(u, v) + gap < need) naive.insert({std::min(u, v), std::max(u, v)});
        }
    const auto rep = verify_radio(g, dm, lab);
    std::set<std::pair<Vertex, Vertex>> fast;
    for (const auto& viol : rep.violations) fast.insert({viol.u, viol.v});
    return fast == naive && rep.valid == naive.empty();
}

}  // namespace radiolab
