#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "radiolab/graph.hpp"
#include "radiolab/labeling.hpp"

namespace radiolab {

inline constexpr std::uint64_t kDefaultBudget = 100'000'000;

struct SolverOptions {
    std::uint64_t budget = kDefaultBudget;  // candidate extensions tried
    /// Cut a prefix once its label plus a level bound on the remaining
    /// increments reaches the incumbent.
    bool prune_bounds = true;
    /// Try x_0 only on one vertex per automorphism orbit.
    bool prune_symmetry = true;
    /// Finish as soon as the incumbent meets the best available lower bound.
    bool stop_at_lower_bound = true;
    /// Start from a greedy nearest-label ordering instead of 0..p-1.
    bool seed_incumbent = true;
};

enum class SolverStatus { proved, budget_exhausted };

std::string to_string(SolverStatus s);

struct SolverResult {
    SolverStatus status = SolverStatus::budget_exhausted;
    Label radio_number = 0;  // best span found; exact only when proved
    Labeling witness;
    Ordering ordering;
    Label lower_bound = 0;  // level bound used for early stopping
    std::uint64_t nodes_explored = 0;
};

/// Exact radio number by depth-first branch and bound over label orders.
/// For each order the greedy labeling is span-minimal, so the minimum over
/// all orders is rn(G). Vertices expand in index order. Practical up to
/// about 12 vertices.
SolverResult exact_radio_number(const Graph& g, const DistanceMatrix& dm, const SolverOptions& opts = {});

/// Orbits of Aut(G) on vertices, each sorted, ordered by smallest member.
/// Two vertices share an orbit only if an automorphism mapping one to the
/// other was actually found; a search that runs past `node_cap` leaves them
/// apart.
std::vector<std::vector<Vertex>> automorphism_orbits(const Graph& g, const DistanceMatrix& dm,
                                                     std::uint64_t node_cap = 1'000'000);

/// Checks every pair with a plain double loop and compares the violating
/// pairs with verify_radio's report. True when both agree.
bool exhaustive_verify_equivalence(const Graph& g, const DistanceMatrix& dm, const Labeling& lab);

}  // namespace radiolab
