#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "sedn/tripartite.hpp"

namespace sedn {

// Closed-form branch provenance. Region T11 covers p <= m+n, region MAIN
// covers p >= m+n (m >= 2), SPECIAL covers the m=1 family, the (2,2,odd p)
// family, and the certified small exceptions.
enum class Region { T11, MAIN, SPECIAL };

struct CaseTag {
    Region region = Region::SPECIAL;
    std::string id;  // e.g. "T11.B2", "MAIN.E1", "S.K1np.3", "S.K235"

    friend bool operator==(const CaseTag& a, const CaseTag& b) {
        return a.region == b.region && a.id == b.id;
    }
};

struct TaggedValue {
    CaseTag tag;
    std::int64_t value = 0;
    std::string formula;  // human-readable closed form, e.g. "(3m+2n-1)/2"
};

// Result of the closed-form dispatch. On the p = m+n boundary two branches
// apply; if they agree the common value is returned with both tags, and if
// they disagree the result is a conflict carrying both tagged values — never
// a silent choice between them.
struct GammaResult {
    std::optional<std::int64_t> value;  // engaged iff the branches agree
    std::vector<TaggedValue> branches;  // one entry, or two on the overlap

    bool conflict() const { return !value.has_value(); }
    std::vector<std::string> tag_ids() const {
        std::vector<std::string> out;
        out.reserve(branches.size());
        for (const TaggedValue& b : branches) out.push_back(b.tag.id);
        return out;
    }
};

// Thrown if the dispatch reaches a parameter combination no branch claims.
// Unreachable for positive sizes as far as exhaustive checks go, but the
// dispatch refuses to extrapolate rather than guess.
struct uncovered_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Thrown by operations that need a single gamma value when the dispatch
// reports a conflict instead.
struct conflict_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Closed-form signed edge domination number of K_{m,n,p} (any argument
// order; canonicalized internally). All arithmetic is exact; every division
// is asserted to be exact, so a remainder means a dispatch bug.
GammaResult gamma(const TripartiteParams& t);

// Value of one specific closed-form case at canonical (m,n,p). Used to check
// constructions against the branch that produced their plan.
std::int64_t case_value(const CaseTag& tag, const TripartiteParams& canonical);

struct XuBoundReport {
    std::int64_t gamma_value = 0;
    std::int64_t bound = 0;  // m+n+p-1
    bool tight = false;
};

// Compares gamma against the order-minus-one bound. Throws conflict_error on
// conflicted instances.
XuBoundReport xu_bound(const TripartiteParams& t);

// JSON per the external interface: {m,n,p, value|conflict, tags[], formula_text}.
std::string gamma_to_json(const TripartiteParams& t, const GammaResult& g, int indent = -1);

}  // namespace sedn
