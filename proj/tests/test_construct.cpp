#include "doctest.h"

#include <string>
#include <vector>

#include "sedn/construct.hpp"
#include "sedn/gamma.hpp"
#include "sedn/labeling.hpp"
#include "sedn/tripartite.hpp"

using namespace sedn;

TEST_CASE("quota_plan refuses the small-p region") {
    CHECK_THROWS_AS(quota_plan({2, 3, 4}), no_construction_error);
    CHECK_THROWS_AS(quota_plan({3, 3, 3}), no_construction_error);
    CHECK_THROWS_AS(construct(TripartiteParams{4, 3, 2}), no_construction_error);
}

TEST_CASE("quota plans balance the linear system") {
    for (const TripartiteParams t :
         {TripartiteParams{2, 2, 4}, TripartiteParams{3, 3, 7}, TripartiteParams{1, 2, 5},
          TripartiteParams{2, 2, 5}, TripartiteParams{2, 4, 7}, TripartiteParams{3, 4, 9},
          TripartiteParams{2, 3, 7}, TripartiteParams{6, 7, 13}}) {
        CAPTURE(t.m);
        CAPTURE(t.n);
        CAPTURE(t.p);
        const QuotaPlan plan = quota_plan(t);
        std::int64_t quota_sum = 0;
        for (const int q : plan.quota) quota_sum += q;
        // Every negative edge is counted once at each endpoint.
        CHECK(quota_sum == 2 * plan.negative_total());
        CHECK(plan.n_uv >= 0);
        CHECK(plan.n_uw >= 0);
        CHECK(plan.n_vw >= 0);
        CHECK(plan.n_uv <= static_cast<std::int64_t>(t.m) * t.n);
        CHECK(plan.n_uw <= static_cast<std::int64_t>(t.m) * t.p);
        CHECK(plan.n_vw <= static_cast<std::int64_t>(t.n) * t.p);
        CHECK(plan.weight() == case_value(plan.case_tag, t));
    }
}

TEST_CASE("worked example: the all-odd plan at (3,3,7)") {
    const QuotaPlan plan = quota_plan({3, 3, 7});
    CHECK(plan.case_tag.id == "MAIN.B");
    CHECK(plan.n_uv == 2);
    CHECK(plan.n_uw + plan.n_vw + plan.n_uv == plan.negative_total());
    CHECK(plan.weight() == 7);
}

TEST_CASE("realize hits every per-vertex quota exactly") {
    for (const TripartiteParams t :
         {TripartiteParams{2, 2, 6}, TripartiteParams{2, 3, 6}, TripartiteParams{1, 3, 6},
          TripartiteParams{2, 2, 5}, TripartiteParams{3, 6, 11}, TripartiteParams{6, 7, 15}}) {
        CAPTURE(t.m);
        CAPTURE(t.n);
        CAPTURE(t.p);
        const QuotaPlan plan = quota_plan(t);
        const EdgeLabeling f = realize(plan);
        for (int v = 0; v < t.m + t.n + t.p; ++v)
            REQUIRE(negative_count_at(f, v) == plan.quota[static_cast<std::size_t>(v)]);
        REQUIRE(verify(f).is_sedf);
    }
}

TEST_CASE("forced blocks end up negative in the realization") {
    const QuotaPlan plan = quota_plan({2, 2, 5});  // pins U x W1 and V x W1 blocks
    REQUIRE_FALSE(plan.forced_negative_blocks.empty());
    const EdgeLabeling f = realize(plan);
    for (const ForcedBlock& fb : plan.forced_negative_blocks)
        for (int i = fb.left_begin; i < fb.left_end; ++i)
            for (int j = fb.right_begin; j < fb.right_end; ++j) {
                std::int64_t e = 0;
                switch (fb.block) {
                    case Block::UV: e = uv_edge(plan.params, i, j); break;
                    case Block::UW: e = uw_edge(plan.params, i, j); break;
                    case Block::VW: e = vw_edge(plan.params, i, j); break;
                }
                REQUIRE(f.negative(e));
            }
}

TEST_CASE("construct sweeps the whole covered region cleanly") {
    int rows = 0;
    for (int m = 1; m <= 8; ++m)
        for (int n = m; n <= 8; ++n)
            for (int p = m + n; p <= m + n + 6; ++p) {
                CAPTURE(m);
                CAPTURE(n);
                CAPTURE(p);
                const TripartiteParams t{m, n, p};
                const Construction c = construct(t);
                const VerifyReport r = verify(c.labeling);
                REQUIRE(r.is_sedf);
                REQUIRE(r.weight == c.weight);
                REQUIRE(c.weight == case_value(c.case_tag, canonicalize(t).params));
                // A clean formula value must be achieved exactly.
                const GammaResult g = gamma(t);
                if (!g.conflict()) REQUIRE(c.weight == *g.value);
                ++rows;
            }
    CHECK(rows == 252);
}

TEST_CASE("construct handles larger instances quickly") {
    for (const TripartiteParams t :
         {TripartiteParams{1, 100, 103}, TripartiteParams{33, 33, 66},
          TripartiteParams{40, 50, 101}, TripartiteParams{8, 9, 40}}) {
        CAPTURE(t.m);
        CAPTURE(t.n);
        CAPTURE(t.p);
        const Construction c = construct(t);
        REQUIRE(verify(c.labeling).is_sedf);
        REQUIRE(c.weight == case_value(c.case_tag, canonicalize(t).params));
    }
}

TEST_CASE("construct returns the labeling in the caller's part order") {
    const Construction c = construct(TripartiteParams{6, 2, 3});
    CHECK(c.labeling.params.m == 6);
    CHECK(c.labeling.params.n == 2);
    CHECK(c.labeling.params.p == 3);
    CHECK(verify(c.labeling).is_sedf);
    const Construction canon = construct(TripartiteParams{2, 3, 6});
    CHECK(c.weight == canon.weight);
    CHECK(c.case_tag.id == canon.case_tag.id);
}

TEST_CASE("construction certificates survive a JSON round trip") {
    const Construction c = construct(TripartiteParams{2, 2, 4});
    const std::string text = certificate_to_json(c.labeling, c.case_tag.id, c.weight);
    const EdgeLabeling back = parse_labeling(text);
    const VerifyReport r = verify(back);
    CHECK(r.is_sedf);
    CHECK(r.weight == c.weight);
}
