#include "radiolab/labeling.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "radiolab/errors.hpp"

namespace radiolab {

Labeling::Labeling(std::vector<Label> labels) : labels_(std::move(labels)) {
    for (std::size_t v = 0; v < labels_.size(); ++v)
        if (labels_[v] < 0)
            throw InputError("negative label " + std::to_string(labels_[v]) + " on vertex " + std::to_string(v));
}

Label Labeling::min() const { return labels_.empty() ? 0 : *std::min_element(labels_.begin(), labels_.end()); }
Label Labeling::max() const { return labels_.empty() ? 0 : *std::max_element(labels_.begin(), labels_.end()); }

Ordering::Ordering(std::vector<Vertex> sequence) : seq_(std::move(sequence)) {
    std::vector<char> seen(seq_.size(), 0);
    for (Vertex v : seq_) {
        if (v < 0 || v >= static_cast<Vertex>(seq_.size()) || seen[v])
            throw InputError("ordering is not a permutation of 0.." + std::to_string(seq_.size() - 1));
        seen[v] = 1;
    }
}

std::vector<int> Ordering::positions() const {
    std::vector<int> pos(seq_.size());
    for (int t = 0; t < size(); ++t) pos[seq_[t]] = t;
    return pos;
}

VerificationReport verify_radio(const Graph& g, const DistanceMatrix& dm, const Labeling& lab) {
    const int p = g.vertex_count();
    if (lab.size() != p) {
        std::ostringstream os;
        os << "labeling covers " << lab.size() << " vertices, graph has " << p;
        throw InputError(os.str());
    }
    const Label need = dm.diameter() + 1;
    VerificationReport rep;
    for (Vertex u = 0; u < p; ++u) {
        for (Vertex v = u + 1; v < p; ++v) {
            const Label gap = lab[u] > lab[v] ? lab[u] - lab[v] : lab[v] - lab[u];
            const int d = dm(u, v);
            if (d + gap < need) rep.violations.push_back({u, v, d, gap, need - d});
        }
    }
    rep.valid = rep.violations.empty();
    rep.span = lab.span();
    return rep;
}

Ordering ordering_of(const Labeling& lab) {
    std::vector<Vertex> seq(lab.size());
    std::iota(seq.begin(), seq.end(), 0);
    std::stable_sort(seq.begin(), seq.end(), [&](Vertex a, Vertex b) { return lab[a] < lab[b]; });
    for (std::size_t t = 1; t < seq.size(); ++t)
        if (lab[seq[t]] == lab[seq[t - 1]])
            throw InputError("labeling is not injective: vertices " + std::to_string(seq[t - 1]) + " and " +
                             std::to_string(seq[t]) + " share label " + std::to_string(lab[seq[t]]));
    return Ordering(std::move(seq));
}

Label canonical_increment(const DistanceMatrix& dm, const LevelDecomposition& dec, Vertex a, Vertex b) {
    return Label{dm.diameter()} + 1 - dec.level_of[a] - dec.level_of[b] - dec.k;
}

Labeling canonical_labeling(const Graph& g, const DistanceMatrix& dm, const LevelDecomposition& dec,
                            const Ordering& ord, std::span<const Jump> jumps) {
    const int p = g.vertex_count();
    if (ord.size() != p) throw InputError("ordering size does not match the graph");
    std::vector<Label> extra(p, 0);
    std::set<int> used;
    for (const auto& j : jumps) {
        if (j.index < 1 || j.index > p - 1)
            throw InputError("jump index " + std::to_string(j.index) + " outside 1.." + std::to_string(p - 1));
        if (j.extra < 1) throw InputError("jump extra must be >= 1");
        if (!used.insert(j.index).second) throw InputError("duplicate jump index " + std::to_string(j.index));
        extra[j.index] = j.extra;
    }

    std::vector<Label> labels(p, 0);
    Label cur = 0;
    for (int t = 1; t < p; ++t) {
        const Label inc = canonical_increment(dm, dec, ord[t - 1], ord[t]) + extra[t];
        if (inc < 1) {
            std::ostringstream os;
            os << "non-positive increment " << inc << " at step " << t - 1 << "->" << t << " (vertices "
               << ord[t - 1] << ", " << ord[t] << ")";
            throw IncompatibleOrdering(os.str());
        }
        cur += inc;
        labels[ord[t]] = cur;
    }
    return Labeling(std::move(labels));
}

Theorem2Report check_theorem2(const Graph& g, const DistanceMatrix& dm, const LevelDecomposition& dec,
                              const Labeling& lab) {
    Theorem2Report r;
    r.radio_valid = verify_radio(g, dm, lab).valid;

    std::vector<Vertex> seq(lab.size());
    std::iota(seq.begin(), seq.end(), 0);
    std::stable_sort(seq.begin(), seq.end(), [&](Vertex a, Vertex b) { return lab[a] < lab[b]; });
    const int p = static_cast<int>(seq.size());
    const auto& lv = dec.level_of;

    for (int i = 0; i + 1 < p; ++i)
        if (dm(seq[i], seq[i + 1]) != lv[seq[i]] + lv[seq[i + 1]] + dec.k) r.cond_a_failures.push_back(i);

    if (dec.center.size() >= 2)
        r.cond_b_ok = lv[seq.front()] == 0 && lv[seq.back()] == 0;
    else
        r.cond_b_ok = lv[seq.front()] == 0 && (p == 1 || lv[seq.back()] == 1);

    r.first_label_zero = p == 0 || lab[seq.front()] == 0;
    for (int t = 1; t < p; ++t) {
        const Label actual = lab[seq[t]] - lab[seq[t - 1]];
        const Label dev = actual - canonical_increment(dm, dec, seq[t - 1], seq[t]);
        if (dev != 0) r.cond_c_failures.push_back({t, dev});
    }
    return r;
}

Labeling greedy_min_labeling(const Graph& g, const DistanceMatrix& dm, const Ordering& ord) {
    const int p = g.vertex_count();
    if (ord.size() != p) throw InputError("ordering size does not match the graph");
    const Label need = dm.diameter() + 1;
    std::vector<Label> labels(p, 0);
    for (int t = 1; t < p; ++t) {
        Label best = 0;
        for (int j = 0; j < t; ++j) {
            const Label step = std::max<Label>(1, need - dm(ord[j], ord[t]));
            best = std::max(best, labels[ord[j]] + step);
        }
        labels[ord[t]] = best;
    }
    return Labeling(std::move(labels));
}

}  // namespace radiolab
