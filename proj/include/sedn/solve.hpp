#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>

#include "sedn/labeling.hpp"
#include "sedn/tripartite.hpp"

namespace sedn {

// The instance is larger than the configured edge cap; nothing was searched.
struct solver_refusal_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SolveConfig {
    int max_edges = 26;           // refuse instances with more edges than this
    bool symmetry_pruning = true; // prune branches with permuted-part duplicates
    bool bound_pruning = true;    // prune branches that cannot beat the incumbent
    int parallel_width = 0;       // worker threads; 0 or 1 searches sequentially
};

struct SolveReport {
    TripartiteParams params;   // as passed by the caller
    std::int64_t optimum = 0;
    EdgeLabeling certificate;  // an optimal labeling, in the caller's part order
    std::uint64_t nodes_explored = 0;
    std::uint64_t pruned_symmetry = 0;
    std::uint64_t pruned_bound = 0;
    bool exhausted = false;
};

// Exact branch and bound over all edge sign assignments. Edges are assigned
// in id order; infeasible branches are cut by an upper bound on each touched
// closed neighborhood sum, so a completed leaf is a valid signed edge
// dominating function by construction. The optimum is deterministic; with
// parallel_width > 1 the certificate may be any optimal labeling.
SolveReport solve_exact(const TripartiteParams& t, const SolveConfig& config = {});

// Unpruned sweep of every labeling via Gray-code flips; the check against
// solve_exact must not share its machinery. Refuses above max_edges.
std::int64_t brute_force(const TripartiteParams& t, int max_edges = 22);

struct VertexWeightScan {
    TripartiteParams params;
    // Minimum vertex weight inside each part after repeatedly rebalancing
    // every same-part pair of the certificate to near-equal negative counts.
    std::array<int, 3> min_weight{0, 0, 0};
};

VertexWeightScan optimum_vertex_weight_scan(const SolveReport& report);

}  // namespace sedn
