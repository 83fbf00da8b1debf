#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "sedn/tripartite.hpp"

namespace sedn {

// Signs live in a packed bitmask, one bit per edge id, bit set = negative.
// Semantically every edge carries exactly -1 or +1; there is no unset state.
inline constexpr std::int64_t kDefaultLabelingCap = 10'000'000;

struct EdgeLabeling {
    TripartiteParams params;
    std::vector<std::uint64_t> bits;  // bit e set <=> edge e is negative
    std::int64_t negatives = 0;       // running count of set bits

    bool negative(std::int64_t e) const {
        return (bits[static_cast<std::size_t>(e >> 6)] >> (e & 63)) & 1u;
    }
    int sign(std::int64_t e) const { return negative(e) ? -1 : +1; }
    void set_negative(std::int64_t e, bool neg) {
        std::uint64_t& word = bits[static_cast<std::size_t>(e >> 6)];
        const std::uint64_t mask = std::uint64_t{1} << (e & 63);
        const bool cur = (word & mask) != 0;
        if (cur == neg) return;
        word ^= mask;
        negatives += neg ? +1 : -1;
    }
};

// All-positive labeling; always an SEDF since f[e] = deg(a)+deg(b)-1 >= 1.
EdgeLabeling all_positive(const TripartiteParams& t, std::int64_t cap = kDefaultLabelingCap);

inline std::int64_t weight(const EdgeLabeling& f) {
    return edge_count(f.params) - 2 * f.negatives;
}

// Number of negative edges at one vertex.
int negative_count_at(const EdgeLabeling& f, int vertex);

// f(x) = deg(x) - 2 * (negative edges at x), for every global vertex index.
std::vector<int> vertex_weights(const EdgeLabeling& f);

// f[e], the sum of f over the closed neighborhood of e (all edges sharing an
// endpoint with e, plus e itself). Computed by the counting identity
// f[ab] = deg(a) + deg(b) - 2x - 2y - f(ab) with x, y the negative counts at
// the endpoints; tests cross-check it against direct summation.
int closed_neighborhood_sum(const EdgeLabeling& f, std::int64_t e);

struct VerifyReport {
    bool is_sedf = false;
    std::int64_t weight = 0;
    int min_closed_sum = 0;
    std::vector<std::pair<std::int64_t, int>> violations;  // (edge id, f[e]) with f[e] < 1
};

// Full SEDF check: is_sedf iff f[e] >= 1 for every edge.
VerifyReport verify(const EdgeLabeling& f);

// Equalizes the negative-edge counts at two same-part vertices to within 1 by
// repeated sign swaps through common neighbors, preserving weight and the
// SEDF property. Each swap moves one negative edge from the heavier vertex to
// the lighter one via the lowest-index common neighbor ell with
// f(heavy,ell) = -1 and f(light,ell) = +1.
// Throws std::invalid_argument if a and b are in different parts, and
// std::logic_error if the input is not an SEDF.
EdgeLabeling rebalance(const EdgeLabeling& f, int a, int b);

// Labeling JSON: {"m","n","p","uv","uw","vw"} with sign matrices as nested
// arrays of -1/+1. parse_labeling accepts extra fields (certificates add
// case_tag and claimed_gamma) and throws std::runtime_error on malformed input.
std::string labeling_to_json(const EdgeLabeling& f, int indent = 2);
EdgeLabeling parse_labeling(const std::string& json_text);

// Certificate JSON = labeling JSON + case_tag + claimed_gamma sidecar fields.
std::string certificate_to_json(const EdgeLabeling& f, const std::string& case_tag,
                                std::int64_t claimed_gamma, int indent = 2);

// Relabels a result produced on canonicalize(t).params back onto the original
// part order recorded in `c`, transposing blocks as needed.
EdgeLabeling uncanonicalize(const EdgeLabeling& canon, const Canonical& c,
                            const TripartiteParams& original);

}  // namespace sedn
