#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "radiolab/graph.hpp"
#include "radiolab/labeling.hpp"
#include "radiolab/level_structure.hpp"
#include "radiolab/permutation.hpp"

namespace radiolab {

enum class Family { pn_petersen, pn_km };

Family parse_family(const std::string& name);
std::string to_string(Family f);

/// How a scheme's ordering was obtained.
enum class ConstructionMethod {
    closed_form,  // index formulas only
    repaired,     // closed-form column schedule, coordinates fixed up by local search
    searched,     // generic ordering search
};

std::string to_string(ConstructionMethod m);

struct SchemeResult {
    Family family = Family::pn_petersen;
    int n = 0;
    int m = 0;  // right-factor order (10 for Petersen)
    Graph graph;
    Ordering ordering;
    Labeling labeling;
    Label claimed_span = 0;
    std::vector<Vertex> center;
    std::vector<Jump> jumps;
    ConstructionMethod method = ConstructionMethod::closed_form;
};

/// rn(P_n x Petersen): 5n^2 - n + 1 for even n, 5n^2 - n + 6 for odd n (n >= 3).
Label pn_petersen_radio_number(int n);
/// rn(P_n x K_m): (mn^2 - 2n + 2)/2 for even n, (mn^2 - 2n + m + 2)/2 for odd n.
Label pn_km_radio_number(int n, int m);

/// The permutations the P_n x Petersen schemes rename columns with.
struct PetersenSchemePermutations {
    // even n
    static Permutation even_alpha();
    static Permutation even_beta();
    static Permutation even_sigma();
    static Permutation even_tau();
    // n = 1 (mod 4)
    static Permutation odd1_alpha();
    static Permutation odd1_beta();
    static Permutation odd1_sigma();
    // n = 3 (mod 4)
    static Permutation odd3_alpha();
    static Permutation odd3_sigma();
};

/// Center columns used by the schemes: {n/2, n/2+1} for even n, {(n+1)/2}
/// for odd n.
std::vector<Vertex> pn_center(const Graph& g, int n);

/// Ordering and labeling of P_n x Petersen with span rn(P_n x Petersen).
/// Even n: no jumps. Odd n: one +1 jump at p-3n (n = 1 mod 4) or p-n
/// (n = 3 mod 4). Throws InputError for n < 3.
SchemeResult construct_pn_petersen(int n);

/// Ordering and labeling of P_n x K_m with span rn(P_n x K_m).
/// Even n: no jumps. Odd n: one +1 jump at p-n. Throws InputError for
/// n < 4 or m < 3.
SchemeResult construct_pn_km(int n, int m);

/// Level bound plus one for odd n, i.e. the value the odd-n impossibility
/// argument establishes. Throws InputError for even n or n, m out of range.
Label improved_odd_bound(Family family, int n, int m = 0);

/// Re-seats vertices within each column of a product graph, keeping the
/// column sequence of `seed`, so that every step satisfies
/// d(x_t, x_{t+1}) = level(x_t) + level(x_{t+1}) + k and the canonical
/// labeling (with `jumps`) is a radio labeling. Levels must be constant on
/// columns. Seeded local search; returns nullopt after `max_moves`.
std::optional<Ordering> repair_column_coordinates(const Graph& g, const DistanceMatrix& dm,
                                                  const LevelDecomposition& dec, const Ordering& seed,
                                                  std::span<const Jump> jumps, std::uint64_t max_moves = 20'000'000,
                                                  std::uint64_t rng_seed = 0x5eed);

struct SearchOutcome {
    std::optional<Ordering> ordering;
    Labeling labeling;  // greedy labels of `ordering` when found
    std::uint64_t nodes = 0;
    bool budget_exhausted = false;
    bool rejected = false;  // target below the level bound; no search done
};

/// Depth-first search for an ordering whose minimal labeling has span
/// <= target_span. Vertices expand in index order. A partial ordering is cut
/// when the bound implied by its accumulated surplus over the canonical
/// increments already exceeds the target.
SearchOutcome search_ordering(const Graph& g, const DistanceMatrix& dm, const LevelDecomposition& dec,
                              Label target_span, std::uint64_t budget);

enum class GapVerdict { bound_achievable, bound_unachievable, budget_exhausted };

std::string to_string(GapVerdict v);

struct GapCertificate {
    GapVerdict verdict = GapVerdict::budget_exhausted;
    Label bound = 0;
    std::optional<Labeling> witness;
    std::uint64_t nodes = 0;
};

/// Decides whether some radio labeling reaches the level bound of `dec`
/// exactly. Exhausting the search proves rn >= bound + 1 for this center.
GapCertificate certify_gap(const Graph& g, const DistanceMatrix& dm, const LevelDecomposition& dec,
                           std::uint64_t budget);

}  // namespace radiolab
