#include "radiolab/constructions.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <stdexcept>

#include "radiolab/errors.hpp"

namespace radiolab {

Family parse_family(const std::string& name) {
    if (name == "pn-petersen") return Family::pn_petersen;
    if (name == "pn-km") return Family::pn_km;
    throw InputError("unknown family '" + name + "' (expected pn-petersen or pn-km)");
}

std::string to_string(Family f) { return f == Family::pn_petersen ? "pn-petersen" : "pn-km"; }

std::string to_string(ConstructionMethod m) {
    switch (m) {
        case ConstructionMethod::closed_form: return "closed_form";
        case ConstructionMethod::repaired: return "repaired";
        case ConstructionMethod::searched: return "searched";
    }
    return "?";
}

std::string to_string(GapVerdict v) {
    switch (v) {
        case GapVerdict::bound_achievable: return "bound_achievable";
        case GapVerdict::bound_unachievable: return "bound_unachievable";
        case GapVerdict::budget_exhausted: return "budget_exhausted";
    }
    return "?";
}

namespace {

void require_petersen_n(int n) {
    if (n < 3) throw InputError("P_n x Petersen needs n >= 3, got " + std::to_string(n));
}

void require_km(int n, int m) {
    if (n < 4) throw InputError("P_n x K_m needs n >= 4, got n = " + std::to_string(n));
    if (m < 3) throw InputError("P_n x K_m needs m >= 3, got m = " + std::to_string(m));
}

// Visit order of columns inside one block of an odd sweep: c, n, c-1, n-1, ..., c+1, 1.
std::vector<int> odd_visit(int n) {
    const int c = (n + 1) / 2;
    std::vector<int> v{c};
    for (int q = 0; q < c - 1; ++q) {
        v.push_back(n - q);
        v.push_back(c - 1 - q);
    }
    return v;
}

// Builds the ordering from a position function t(i, j) over all coordinates.
template <class F>
Ordering ordering_from_positions(const Graph& g, F&& pos) {
    const int p = g.vertex_count();
    std::vector<Vertex> seq(p, -1);
    for (Vertex v = 0; v < p; ++v) {
        const int t = pos(g.coord(v));
        if (t < 0 || t >= p || seq[t] != -1) throw std::logic_error("scheme positions do not form a permutation");
        seq[t] = v;
    }
    return Ordering(std::move(seq));
}

bool realises(const Graph& g, const DistanceMatrix& dm, const Labeling& lab, Label span) {
    return lab.span() == span && verify_radio(g, dm, lab).valid;
}

std::optional<Labeling> try_canonical(const Graph& g, const DistanceMatrix& dm, const LevelDecomposition& dec,
                                      const Ordering& ord, std::span<const Jump> jumps) {
    try {
        return canonical_labeling(g, dm, dec, ord, jumps);
    } catch (const IncompatibleOrdering&) {
        return std::nullopt;
    }
}

}  // namespace

Label pn_petersen_radio_number(int n) {
    require_petersen_n(n);
    const Label N = n;
    return 5 * N * N - N + (n % 2 == 0 ? 1 : 6);
}

Label pn_km_radio_number(int n, int m) {
    require_km(n, m);
    const Label N = n, M = m;
    return n % 2 == 0 ? (M * N * N - 2 * N + 2) / 2 : (M * N * N - 2 * N + M + 2) / 2;
}

Permutation PetersenSchemePermutations::even_alpha() { return {1, 8, 3, 7, 2, 10, 5, 4, 6, 9}; }
Permutation PetersenSchemePermutations::even_beta() { return {9, 1, 10, 3, 7, 2, 4, 6, 5, 8}; }
Permutation PetersenSchemePermutations::even_sigma() { return {2, 9, 1, 8, 3, 7, 6, 5, 4, 10}; }
Permutation PetersenSchemePermutations::even_tau() { return {7, 2, 8, 1, 10, 3, 5, 4, 6, 9}; }
Permutation PetersenSchemePermutations::odd1_alpha() { return {1, 4, 3, 6, 2, 7, 9, 8, 10, 5}; }
Permutation PetersenSchemePermutations::odd1_beta() { return {2, 7, 1, 5, 3, 6, 8, 10, 9, 4}; }
Permutation PetersenSchemePermutations::odd1_sigma() { return {2, 3, 1, 7, 4, 5, 6, 9, 10, 8}; }
Permutation PetersenSchemePermutations::odd3_alpha() { return {1, 7, 2, 9, 3, 8, 5, 6, 4, 10}; }
Permutation PetersenSchemePermutations::odd3_sigma() { return {3, 1, 2, 6, 4, 5, 8, 9, 10, 7}; }

std::vector<Vertex> pn_center(const Graph& g, int n) {
    std::vector<Vertex> center;
    auto add = [&](int i) {
        auto col = g.column(i);
        center.insert(center.end(), col.begin(), col.end());
    };
    if (n % 2 == 0) {
        add(n / 2);
        add(n / 2 + 1);
    } else {
        add((n + 1) / 2);
    }
    std::sort(center.begin(), center.end());
    return center;
}

SchemeResult construct_pn_petersen(int n) {
    require_petersen_n(n);
    using P = PetersenSchemePermutations;
    SchemeResult r{.family = Family::pn_petersen, .n = n, .m = 10, .graph = cartesian_product(path(n), petersen())};
    r.center = pn_center(r.graph, n);
    r.claimed_span = pn_petersen_radio_number(n);
    const int p = 10 * n;

    // pi[i] renames column i: vertex (u_i, v_j) becomes (a_i, b_s) with s = pi[i](j).
    std::vector<Permutation> pi(n + 1, Permutation(10));
    if (n % 2 == 0) {
        const int h = n / 2;
        for (int i = 1; i <= n; ++i) {
            if (i <= h)
                pi[i] = (h - i) % 2 == 0 ? P::even_alpha() : P::even_beta();
            else
                pi[i] = (n - i) % 2 == 0 ? P::even_sigma() : P::even_tau();
        }
        r.ordering = ordering_from_positions(r.graph, [&](Coord x) {
            const int s = pi[x.i](x.j);
            return x.i <= h ? (h - x.i) * 20 + 2 * (s - 1) : (n - x.i) * 20 + 2 * s - 1;
        });
    } else {
        const int c = (n + 1) / 2;
        const bool one_mod_4 = n % 4 == 1;
        const int smax = one_mod_4 ? 7 : 9;
        if (one_mod_4) {
            const auto a = P::odd1_alpha(), b = P::odd1_beta(), sg = P::odd1_sigma();
            for (int i = 1; i <= n; ++i) {
                if (i == c) pi[i] = a;
                else if (i > c) pi[i] = sg.pow(2 * (n - i)) * b;
                else pi[i] = sg.pow(2 * (c - i) - 1) * b;
            }
        } else {
            const auto a = P::odd3_alpha(), sg = P::odd3_sigma();
            for (int i = 1; i <= n; ++i) {
                if (i == c) pi[i] = a;
                else if (i > c) pi[i] = sg.pow(2 * (n - i) + 1) * a;
                else pi[i] = sg.pow(2 * (c - i)) * a;
            }
        }
        r.ordering = ordering_from_positions(r.graph, [&](Coord x) {
            const int rr = x.i, s = pi[x.i](x.j);
            if (rr == c && s == 1) return 0;
            if (rr == c && s == 10) return p - 1;
            if (s <= smax) return rr <= c ? (n + 1 - 2 * rr) + n * (s - 1) : 2 * (n - rr) + n * (s - 1) + 1;
            if (rr < c) return (n + 1 - 2 * rr) + n * (s - 1) - 1;
            if (rr > c) return 2 * (n - rr) + n * (s - 1);
            return n * s - 1;
        });
        r.jumps = {Jump{one_mod_4 ? p - 3 * n : p - n, 1}};
    }

    const DistanceMatrix dm(r.graph);
    const auto dec = decompose(r.graph, dm, r.center);
    if (auto lab = try_canonical(r.graph, dm, dec, r.ordering, r.jumps);
        lab && realises(r.graph, dm, *lab, r.claimed_span)) {
        r.labeling = *lab;
        r.method = ConstructionMethod::closed_form;
        return r;
    }

    auto fixed = repair_column_coordinates(r.graph, dm, dec, r.ordering, r.jumps);
    if (!fixed) throw std::logic_error("coordinate repair failed for P_" + std::to_string(n) + " x Petersen");
    r.ordering = *fixed;
    r.labeling = canonical_labeling(r.graph, dm, dec, r.ordering, r.jumps);
    if (!realises(r.graph, dm, r.labeling, r.claimed_span))
        throw std::logic_error("repaired ordering does not realise the claimed span");
    r.method = ConstructionMethod::repaired;
    return r;
}

SchemeResult construct_pn_km(int n, int m) {
    require_km(n, m);
    SchemeResult r{.family = Family::pn_km, .n = n, .m = m, .graph = cartesian_product(path(n), complete(m))};
    r.center = pn_center(r.graph, n);
    r.claimed_span = pn_km_radio_number(n, m);
    const int p = n * m;

    if (n % 2 == 0) {
        // Block s pairs column r on the left with the mirrored column on the
        // right; the right side is shifted by two within K_m.
        const int h = n / 2;
        std::vector<Vertex> seq(p);
        for (int rr = 1; rr <= n; ++rr) {
            for (int s = 1; s <= m; ++s) {
                if (rr <= h)
                    seq[(h - rr) * 2 * m + 2 * (s - 1)] = r.graph.at({rr, s});
                else
                    seq[(n - rr) * 2 * m + 2 * s - 1] = r.graph.at({rr, (s - 1 + 2) % m + 1});
            }
        }
        r.ordering = Ordering(std::move(seq));
    } else {
        // Sweep blocks over the columns (first block forward, the rest in the
        // reversed visit order) and emit the sequence backwards.
        const auto visit = odd_visit(n);
        std::vector<int> rev(visit.begin() + 1, visit.end());
        rev.push_back(visit.front());
        std::map<int, int> shift;
        for (int q = 0; q < n; ++q) shift[visit[q]] = q == 0 ? 0 : (q % 2 ? 1 : 2);
        shift[visit[n - 2]] = 0;
        shift[visit[n - 1]] = 1;
        std::vector<Vertex> seq;
        seq.reserve(p);
        for (int s = 1; s <= m; ++s)
            for (int col : (s == 1 ? visit : rev)) seq.push_back(r.graph.at({col, (s - 1 + shift[col]) % m + 1}));
        std::reverse(seq.begin(), seq.end());
        r.ordering = Ordering(std::move(seq));
        r.jumps = {Jump{p - n, 1}};
    }

    const DistanceMatrix dm(r.graph);
    const auto dec = decompose(r.graph, dm, r.center);
    if (auto lab = try_canonical(r.graph, dm, dec, r.ordering, r.jumps);
        lab && realises(r.graph, dm, *lab, r.claimed_span)) {
        r.labeling = *lab;
        r.method = ConstructionMethod::closed_form;
        return r;
    }

    auto found = search_ordering(r.graph, dm, dec, r.claimed_span, 50'000'000);
    if (!found.ordering) throw std::logic_error("no ordering found for P_n x K_m");
    r.ordering = *found.ordering;
    r.labeling = found.labeling;
    r.jumps.clear();
    for (const auto& dev : check_theorem2(r.graph, dm, dec, r.labeling).cond_c_failures)
        r.jumps.push_back({dev.index, dev.deviation});
    r.method = ConstructionMethod::searched;
    return r;
}

Label improved_odd_bound(Family family, int n, int m) {
    if (family == Family::pn_petersen) {
        require_petersen_n(n);
        m = 10;
    } else {
        require_km(n, m);
    }
    if (n % 2 == 0) throw InputError("improved bound applies to odd n only, got n = " + std::to_string(n));
    // Single center column c; column i sits at level |i - c|.
    const Label N = n, M = m, c = (N + 1) / 2;
    const Label d = family == Family::pn_petersen ? N + 1 : N;
    const Label k = family == Family::pn_petersen ? 2 : 1;
    const Label weight = M * c * (c - 1);
    return (N * M - 1) * (d - k + 1) - 2 * weight + 1;
}

std::optional<Ordering> repair_column_coordinates(const Graph& g, const DistanceMatrix& dm,
                                                  const LevelDecomposition& dec, const Ordering& seed,
                                                  std::span<const Jump> jumps, std::uint64_t max_moves,
                                                  std::uint64_t rng_seed) {
    if (!g.has_coords()) throw InputError("coordinate repair needs a product graph");
    const int p = g.vertex_count();
    if (seed.size() != p) throw InputError("ordering size does not match the graph");
    std::map<int, int> column_level;
    for (Vertex v = 0; v < p; ++v) {
        auto [it, fresh] = column_level.emplace(g.coord(v).i, dec.level_of[v]);
        if (!fresh && it->second != dec.level_of[v]) throw InputError("levels are not constant on columns");
    }

    const auto base = canonical_labeling(g, dm, dec, seed, jumps);
    const Label need = dm.diameter() + 1;
    std::vector<Vertex> y = seed.sequence();
    std::vector<Label> lab(p);
    std::vector<int> lev(p);
    std::map<int, std::vector<int>> slots_by_col;
    for (int t = 0; t < p; ++t) {
        lab[t] = base[y[t]];
        lev[t] = dec.level_of[y[t]];
        slots_by_col[g.coord(y[t]).i].push_back(t);
    }
    std::vector<std::vector<int>> slots;
    for (auto& [col, s] : slots_by_col)
        if (s.size() >= 2) slots.push_back(s);
    if (slots.empty()) return std::nullopt;

    // Pairs whose labels are close enough that the radio condition can bind.
    std::vector<std::vector<int>> near(p);
    for (int t = 0; t < p; ++t)
        for (int u = t + 1; u < p && lab[u] - lab[t] < need; ++u) {
            near[t].push_back(u);
            near[u].push_back(t);
        }

    auto bad = [&](int t, int u) {
        const int dist = dm(y[t], y[u]);
        if (t - u == 1 || u - t == 1) return dist != lev[t] + lev[u] + dec.k;
        return dist + std::abs(lab[t] - lab[u]) < need;
    };
    auto cost_at = [&](int t, int skip) {
        int c = 0;
        for (int u : near[t])
            if (u != skip && bad(t, u)) ++c;
        return c;
    };

    long long total = 0;
    for (int t = 0; t < p; ++t) total += cost_at(t, -1);
    total /= 2;

    std::mt19937_64 rng(rng_seed);
    auto uniform01 = [&] { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };
    double temp = 0.6;
    for (std::uint64_t it = 0; it < max_moves; ++it) {
        if (total == 0) return Ordering(y);
        const auto& col = slots[rng() % slots.size()];
        const int ia = static_cast<int>(rng() % col.size());
        int ib = static_cast<int>(rng() % (col.size() - 1));
        if (ib >= ia) ++ib;
        const int ta = col[ia], tb = col[ib];
        const int before = cost_at(ta, -1) + cost_at(tb, ta);
        std::swap(y[ta], y[tb]);
        const int after = cost_at(ta, -1) + cost_at(tb, ta);
        const int delta = after - before;
        if (delta <= 0 || uniform01() < std::exp(-delta / temp))
            total += delta;
        else
            std::swap(y[ta], y[tb]);
        temp = std::max(0.05, temp * 0.99999);
    }
    if (total == 0) return Ordering(y);
    return std::nullopt;
}

namespace {

class OrderSearch {
public:
    OrderSearch(const DistanceMatrix& dm, const LevelDecomposition& dec, Label slack, std::uint64_t budget)
        : dm_(dm), dec_(dec), p_(dm.size()), need_(dm.diameter() + 1), slack_(slack), budget_(budget),
          seq_(p_), lab_(p_), used_(p_, 0), remaining_at_level_(dec.h + 1, 0) {
        for (Vertex v = 0; v < p_; ++v) ++remaining_at_level_[dec.level_of[v]];
    }

    bool run() { return dfs(0, 0); }
    std::uint64_t nodes() const { return nodes_; }
    bool exhausted() const { return exhausted_; }
    const std::vector<Vertex>& sequence() const { return seq_; }

private:
    Label greedy_label(Vertex v, int t) const {
        Label best = lab_[t - 1] + 1;
        for (int j = t - 1; j >= 0; --j) {
            if (lab_[j] + need_ - 1 <= best) break;  // labels decrease going back
            best = std::max(best, lab_[j] + std::max<Label>(1, need_ - dm_(seq_[j], v)));
        }
        return best;
    }

    int min_remaining_level() const {
        for (int l = 0; l <= dec_.h; ++l)
            if (remaining_at_level_[l]) return l;
        return 0;
    }

    bool dfs(int t, Label surplus) {
        if (t == p_) return true;
        for (Vertex v = 0; v < p_; ++v) {
            if (used_[v]) continue;
            if (++nodes_ > budget_) {
                exhausted_ = true;
                return false;
            }
            const int lv = dec_.level_of[v];
            Label f = 0, s = 0;
            if (t > 0) {
                f = greedy_label(v, t);
                s = surplus + (f - lab_[t - 1]) - canonical_increment(dm_, dec_, seq_[t - 1], v);
            }
            used_[v] = 1;
            --remaining_at_level_[lv];
            const int first = t == 0 ? lv : dec_.level_of[seq_[0]];
            const int last = t == p_ - 1 ? lv : min_remaining_level();
            if (first + last + s <= slack_) {
                seq_[t] = v;
                lab_[t] = f;
                if (dfs(t + 1, s)) return true;
            }
            used_[v] = 0;
            ++remaining_at_level_[lv];
            if (exhausted_) return false;
        }
        return false;
    }

    const DistanceMatrix& dm_;
    const LevelDecomposition& dec_;
    int p_;
    Label need_;
    Label slack_;
    std::uint64_t budget_;
    std::uint64_t nodes_ = 0;
    bool exhausted_ = false;
    std::vector<Vertex> seq_;
    std::vector<Label> lab_;
    std::vector<char> used_;
    std::vector<int> remaining_at_level_;
};

}  // namespace

SearchOutcome search_ordering(const Graph& g, const DistanceMatrix& dm, const LevelDecomposition& dec,
                              Label target_span, std::uint64_t budget) {
    SearchOutcome out;
    const auto rep = lower_bound(g, dm, dec);
    if (target_span < rep.bound) {
        out.rejected = true;
        return out;
    }
    // Any ordering's minimal span is (bound - delta) + level(x_0) + level(x_last)
    // + the summed surplus over the canonical increments.
    const Label slack = target_span - rep.bound + dec.delta;
    OrderSearch search(dm, dec, slack, budget);
    const bool found = search.run();
    out.nodes = search.nodes();
    out.budget_exhausted = search.exhausted();
    if (found) {
        out.ordering = Ordering(search.sequence());
        out.labeling = greedy_min_labeling(g, dm, *out.ordering);
    }
    return out;
}

GapCertificate certify_gap(const Graph& g, const DistanceMatrix& dm, const LevelDecomposition& dec,
                           std::uint64_t budget) {
    GapCertificate cert;
    cert.bound = lower_bound(g, dm, dec).bound;
    const auto res = search_ordering(g, dm, dec, cert.bound, budget);
    cert.nodes = res.nodes;
    if (res.ordering) {
        cert.verdict = GapVerdict::bound_achievable;
        cert.witness = res.labeling;
    } else {
        cert.verdict = res.budget_exhausted ? GapVerdict::budget_exhausted : GapVerdict::bound_unachievable;
    }
    return cert;
}

}  // namespace radiolab
