#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "radiolab/graph.hpp"
#include "radiolab/level_structure.hpp"

namespace radiolab {

using Label = std::int64_t;

/// Vertex -> non-negative integer label. Injectivity is not enforced here:
/// a non-injective labeling is representable and simply fails verification.
class Labeling {
public:
    Labeling() = default;
    /// Throws InputError if any label is negative.
    explicit Labeling(std::vector<Label> labels);

    int size() const { return static_cast<int>(labels_.size()); }
    Label operator[](Vertex v) const { return labels_.at(v); }
    const std::vector<Label>& labels() const { return labels_; }
    Label min() const;
    Label max() const;
    Label span() const { return labels_.empty() ? 0 : max() - min(); }

    bool operator==(const Labeling&) const = default;

private:
    std::vector<Label> labels_;
};

/// A permutation x_0..x_{p-1} of the vertex set.
class Ordering {
public:
    Ordering() = default;
    /// Throws InputError unless `sequence` is a permutation of 0..size-1.
    explicit Ordering(std::vector<Vertex> sequence);

    int size() const { return static_cast<int>(seq_.size()); }
    Vertex operator[](int t) const { return seq_.at(t); }
    const std::vector<Vertex>& sequence() const { return seq_; }
    /// Inverse map: position of each vertex.
    std::vector<int> positions() const;

    bool operator==(const Ordering&) const = default;

private:
    std::vector<Vertex> seq_;
};

struct Violation {
    Vertex u = 0;
    Vertex v = 0;
    int dist = 0;
    Label gap = 0;
    Label required = 0;  // diam + 1 - dist
    bool operator==(const Violation&) const = default;
};

struct VerificationReport {
    bool valid = true;
    std::vector<Violation> violations;  // ordered by (u, v), u < v
    Label span = 0;
};

/// Checks d(u,v) + |f(u) - f(v)| >= diam + 1 for all pairs and reports every
/// failing pair. Throws InputError if the labeling does not cover V(G).
VerificationReport verify_radio(const Graph& g, const DistanceMatrix& dm, const Labeling& lab);

/// Vertices sorted by label. Throws InputError if two labels coincide.
Ordering ordering_of(const Labeling& lab);

struct Jump {
    int index = 0;    // increment from x_{index-1} to x_index
    Label extra = 0;  // added on top of the canonical increment
    auto operator<=>(const Jump&) const = default;
};

/// Canonical increment d + 1 - level(x_t) - level(x_{t+1}) - k.
Label canonical_increment(const DistanceMatrix& dm, const LevelDecomposition& dec, Vertex a, Vertex b);

/// f(x_0) = 0 and f(x_t) = f(x_{t-1}) + canonical increment (+ extra at
/// jump indices). Throws IncompatibleOrdering when an increment is < 1 and
/// InputError for bad jump indices or extras.
Labeling canonical_labeling(const Graph& g, const DistanceMatrix& dm, const LevelDecomposition& dec,
                            const Ordering& ord, std::span<const Jump> jumps = {});

struct IncrementDeviation {
    int index = 0;         // t, for the step x_{t-1} -> x_t
    Label deviation = 0;   // actual minus canonical increment
    bool operator==(const IncrementDeviation&) const = default;
};

/// Per-condition outcome of the optimality characterisation for a labeling:
///  (a) d(x_i, x_{i+1}) = level(x_i) + level(x_{i+1}) + k for 0 <= i <= p-2
///  (b) endpoints in L_0 (both, when |L_0| >= 2) or x_0 in L_0 and
///      x_{p-1} in L_1 (when |L_0| = 1)
///  (c) f(x_0) = 0 and every increment is canonical
struct Theorem2Report {
    bool radio_valid = false;
    std::vector<int> cond_a_failures;  // i, for the pair (x_i, x_{i+1})
    bool cond_b_ok = false;
    bool first_label_zero = false;
    std::vector<IncrementDeviation> cond_c_failures;

    bool cond_a_ok() const { return cond_a_failures.empty(); }
    bool cond_c_ok() const { return first_label_zero && cond_c_failures.empty(); }
    bool holds() const { return radio_valid && cond_a_ok() && cond_b_ok && cond_c_ok(); }
};

Theorem2Report check_theorem2(const Graph& g, const DistanceMatrix& dm, const LevelDecomposition& dec,
                              const Labeling& lab);

/// Smallest labels compatible with the label order `ord`:
///   f(x_0) = 0, f(x_t) = max_{j<t} f(x_j) + max(1, d + 1 - d(x_j, x_t)).
Labeling greedy_min_labeling(const Graph& g, const DistanceMatrix& dm, const Ordering& ord);

}  // namespace radiolab
