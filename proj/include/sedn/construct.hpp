#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "sedn/gamma.hpp"
#include "sedn/labeling.hpp"
#include "sedn/tripartite.hpp"

namespace sedn {

// No closed-form construction covers the requested sizes (p < m+n after
// sorting). Callers map this to the "refused" exit path.
struct no_construction_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A quota plan or realized labeling contradicts its own target (bad block
// totals, failed verification, weight off the closed form). Always a bug in
// the tables rather than bad user input.
struct internal_mismatch_error : std::logic_error {
    using std::logic_error::logic_error;
};

// Rectangular sub-block of one edge block whose edges are all pinned negative
// up front. Index ranges are part-local and half-open; the first range indexes
// the earlier part of the block (U for UV/UW, V for VW).
struct ForcedBlock {
    Block block = Block::UV;
    int left_begin = 0;
    int left_end = 0;
    int right_begin = 0;
    int right_end = 0;
};

// Per-vertex negative-degree targets for one closed-form case, together with
// the group structure the case imposes on the middle and large parts.
// Exceptional vertices sit at index 0 of their part. Block totals follow from
// the quotas: every negative edge consumes one unit of quota at each end, so
//   n_uv = (sum_U + sum_V - sum_W) / 2,  n_uw = sum_U - n_uv,
//   n_vw = sum_V - n_uv.
struct QuotaPlan {
    TripartiteParams params;  // sorted sizes
    CaseTag case_tag;
    std::vector<int> quota;   // per global vertex, U block then V then W
    std::vector<int> v_split; // group sizes partitioning the middle part
    std::vector<int> w_split; // group sizes partitioning the large part
    std::vector<ForcedBlock> forced_negative_blocks;
    std::int64_t n_uv = 0;
    std::int64_t n_uw = 0;
    std::int64_t n_vw = 0;

    std::int64_t negative_total() const { return n_uv + n_uw + n_vw; }
    std::int64_t weight() const { return edge_count(params) - 2 * negative_total(); }
};

// Builds the quota plan for sorted sizes with p >= m+n; throws
// no_construction_error below that line and internal_mismatch_error if the
// derived block totals are inconsistent.
QuotaPlan quota_plan(const TripartiteParams& params);

// Materializes a labeling meeting the plan exactly: forced blocks first, then
// a most-constrained-first greedy per block, then alternating-path repair
// inside the block when the greedy wedges. Throws internal_mismatch_error if
// the plan cannot be met.
EdgeLabeling realize(const QuotaPlan& plan);

struct Construction {
    EdgeLabeling labeling;  // in the caller's original part order
    CaseTag case_tag;
    std::int64_t weight = 0;
};

// quota_plan + realize + verification. The result is checked to be a valid
// signed edge dominating function whose weight equals the closed form for the
// plan's own case; any discrepancy throws internal_mismatch_error.
Construction construct(const TripartiteParams& params);

}  // namespace sedn
