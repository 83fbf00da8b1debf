#include "sedn/solve.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <thread>
#include <vector>

#include "sedn/construct.hpp"

namespace sedn {

namespace {

struct SearchContext {
    TripartiteParams t;
    std::int64_t edges = 0;
    std::vector<EdgeEnds> ends;                // per edge, global vertex ids
    std::vector<std::vector<std::int64_t>> inc; // per vertex, incident edge ids
    std::vector<int> quota;                    // branch guidance; empty when uncovered
    bool symmetry = true;
    bool bound = true;
};

struct BestState {
    std::atomic<std::int64_t> weight{0};
    std::mutex mu;
    EdgeLabeling labeling;  // guarded by mu, weight of the stored labeling
};

// One depth-first searcher; each worker thread owns one and they share only
// the incumbent.
class Searcher {
public:
    Searcher(const SearchContext& ctx, BestState& best) : ctx_(ctx), best_(best) {
        const TripartiteParams& t = ctx_.t;
        const int verts = vertex_count(t);
        sign_.assign(static_cast<std::size_t>(ctx_.edges), 0);
        as_.assign(verts, 0);
        un_.assign(verts, 0);
        neg_.assign(verts, 0);
        for (int x = 0; x < verts; ++x) un_[x] = degree_of(t, x);
        uv_row_.assign(t.m, 0);
        uv_col_.assign(t.n, 0);
        uw_row_.assign(t.m, 0);
        uw_col_.assign(t.p, 0);
        vw_row_.assign(t.n, 0);
        vw_col_.assign(t.p, 0);
    }

    // Assigns the first `depth` edges from the bits of `prefix` (bit k set
    // means edge k is negative), then searches the remainder. Used with
    // depth 0 for a full sequential search.
    void run_prefix(std::uint64_t prefix, int depth) {
        int done = 0;
        bool ok = true;
        for (int e = 0; e < depth && ok; ++e) {
            const int s = (prefix >> e) & 1 ? -1 : 1;
            ++nodes;
            assign(e, s);
            done = e + 1;
            ok = checks_pass(e);
        }
        if (ok) dfs(done);
        while (done > 0) unassign(--done);
    }

    std::uint64_t nodes = 0;
    std::uint64_t pruned_symmetry = 0;
    std::uint64_t pruned_bound = 0;

private:
    void assign(std::int64_t e, int s) {
        const EdgeEnds& g = ctx_.ends[static_cast<std::size_t>(e)];
        sign_[static_cast<std::size_t>(e)] = static_cast<signed char>(s);
        as_[g.a] += s;
        as_[g.b] += s;
        --un_[g.a];
        --un_[g.b];
        sum_ += s;
        if (s < 0) {
            ++neg_[g.a];
            ++neg_[g.b];
            bump_counts(e, 1);
        }
    }

    void unassign(std::int64_t e) {
        const EdgeEnds& g = ctx_.ends[static_cast<std::size_t>(e)];
        const int s = sign_[static_cast<std::size_t>(e)];
        sign_[static_cast<std::size_t>(e)] = 0;
        as_[g.a] -= s;
        as_[g.b] -= s;
        ++un_[g.a];
        ++un_[g.b];
        sum_ -= s;
        if (s < 0) {
            --neg_[g.a];
            --neg_[g.b];
            bump_counts(e, -1);
        }
    }

    void bump_counts(std::int64_t e, int d) {
        const TripartiteParams& t = ctx_.t;
        const std::int64_t mn = static_cast<std::int64_t>(t.m) * t.n;
        const std::int64_t mp = static_cast<std::int64_t>(t.m) * t.p;
        if (e < mn) {
            uv_row_[e / t.n] += d;
            uv_col_[e % t.n] += d;
        } else if (e < mn + mp) {
            uw_row_[(e - mn) / t.p] += d;
            uw_col_[(e - mn) % t.p] += d;
        } else {
            vw_row_[(e - mn - mp) / t.p] += d;
            vw_col_[(e - mn - mp) % t.p] += d;
        }
    }

    // Largest achievable closed neighborhood sum of edge g if every
    // unassigned edge were positive.
    bool feasible_at(std::int64_t g) const {
        const EdgeEnds& ge = ctx_.ends[static_cast<std::size_t>(g)];
        const int sg = sign_[static_cast<std::size_t>(g)];
        const int cap = as_[ge.a] + un_[ge.a] + as_[ge.b] + un_[ge.b] - (sg != 0 ? sg : 1);
        return cap >= 1;
    }

    bool feasible_after(std::int64_t e) const {
        const EdgeEnds& g = ctx_.ends[static_cast<std::size_t>(e)];
        for (std::int64_t h : ctx_.inc[g.a])
            if (!feasible_at(h)) return false;
        for (std::int64_t h : ctx_.inc[g.b])
            if (!feasible_at(h)) return false;
        return true;
    }

    // Part-interchangeable vertices are forced into non-increasing key order
    // as soon as each key component is final: U keys (uv row, uw row), V keys
    // (uv column, vw row), W keys (uw column, vw column). Permuting one part
    // never changes another part's per-vertex counts, so sorted
    // representatives of every labeling survive all checks.
    bool symmetry_ok_after(std::int64_t e) const {
        const TripartiteParams& t = ctx_.t;
        const std::int64_t mn = static_cast<std::int64_t>(t.m) * t.n;
        const std::int64_t mp = static_cast<std::int64_t>(t.m) * t.p;
        if (e < mn) {
            const int i = static_cast<int>(e / t.n);
            if (e % t.n == t.n - 1 && i >= 1 && uv_row_[i - 1] < uv_row_[i]) return false;
            if (e == mn - 1)
                for (int j = 1; j < t.n; ++j)
                    if (uv_col_[j - 1] < uv_col_[j]) return false;
        } else if (e < mn + mp) {
            const std::int64_t r = e - mn;
            const int i = static_cast<int>(r / t.p);
            if (r % t.p == t.p - 1 && i >= 1 && uv_row_[i - 1] == uv_row_[i] &&
                uw_row_[i - 1] < uw_row_[i])
                return false;
            if (e == mn + mp - 1)
                for (int k = 1; k < t.p; ++k)
                    if (uw_col_[k - 1] < uw_col_[k]) return false;
        } else {
            const std::int64_t r = e - mn - mp;
            const int j = static_cast<int>(r / t.p);
            if (r % t.p == t.p - 1 && j >= 1 && uv_col_[j - 1] == uv_col_[j] &&
                vw_row_[j - 1] < vw_row_[j])
                return false;
            if (e == ctx_.edges - 1)
                for (int k = 1; k < t.p; ++k)
                    if (uw_col_[k - 1] == uw_col_[k] && vw_col_[k - 1] < vw_col_[k]) return false;
        }
        return true;
    }

    bool checks_pass(std::int64_t e) {
        if (ctx_.bound &&
            sum_ - (ctx_.edges - e - 1) >= best_.weight.load(std::memory_order_relaxed)) {
            ++pruned_bound;
            return false;
        }
        if (ctx_.symmetry && !symmetry_ok_after(e)) {
            ++pruned_symmetry;
            return false;
        }
        return feasible_after(e);
    }

    void record_leaf() {
        const std::int64_t w = sum_;
        if (w >= best_.weight.load(std::memory_order_relaxed)) return;
        std::lock_guard<std::mutex> lock(best_.mu);
        if (w >= best_.weight.load(std::memory_order_relaxed)) return;
        EdgeLabeling lab = all_positive(ctx_.t);
        for (std::int64_t e = 0; e < ctx_.edges; ++e)
            if (sign_[static_cast<std::size_t>(e)] < 0) lab.set_negative(e, true);
        best_.labeling = std::move(lab);
        best_.weight.store(w, std::memory_order_relaxed);
    }

    void dfs(std::int64_t e) {
        if (e == ctx_.edges) {
            record_leaf();
            return;
        }
        int first = 1;
        if (!ctx_.quota.empty()) {
            const EdgeEnds& g = ctx_.ends[static_cast<std::size_t>(e)];
            if (neg_[g.a] < ctx_.quota[g.a] && neg_[g.b] < ctx_.quota[g.b]) first = -1;
        }
        for (int branch = 0; branch < 2; ++branch) {
            const int s = branch == 0 ? first : -first;
            ++nodes;
            assign(e, s);
            if (checks_pass(e)) dfs(e + 1);
            unassign(e);
        }
    }

    const SearchContext& ctx_;
    BestState& best_;
    std::vector<signed char> sign_;  // 0 = unassigned
    std::vector<int> as_, un_, neg_;
    std::vector<int> uv_row_, uv_col_, uw_row_, uw_col_, vw_row_, vw_col_;
    std::int64_t sum_ = 0;
};

}  // namespace

SolveReport solve_exact(const TripartiteParams& input, const SolveConfig& config) {
    validate(input);
    const Canonical c = canonicalize(input);
    const TripartiteParams t = c.params;
    const std::int64_t edges = edge_count(t);
    if (edges > config.max_edges)
        throw solver_refusal_error(to_string(input) + " has " + std::to_string(edges) +
                                   " edges, above the solver cap of " +
                                   std::to_string(config.max_edges));

    SearchContext ctx;
    ctx.t = t;
    ctx.edges = edges;
    ctx.symmetry = config.symmetry_pruning;
    ctx.bound = config.bound_pruning;
    ctx.ends.reserve(static_cast<std::size_t>(edges));
    ctx.inc.assign(static_cast<std::size_t>(vertex_count(t)), {});
    for (std::int64_t e = 0; e < edges; ++e) {
        const EdgeEnds g = edge_ends(t, e);
        ctx.ends.push_back(g);
        ctx.inc[g.a].push_back(e);
        ctx.inc[g.b].push_back(e);
    }

    // Start from the closed-form construction when one exists; its weight is
    // an upper bound and steering the negative-first branches toward its
    // quotas finds strong leaves early.
    BestState best;
    try {
        const QuotaPlan plan = quota_plan(t);
        ctx.quota = plan.quota;
        const Construction con = construct(t);
        best.labeling = con.labeling;
        best.weight.store(con.weight, std::memory_order_relaxed);
    } catch (const no_construction_error&) {
        best.labeling = all_positive(t);
        best.weight.store(edges, std::memory_order_relaxed);
    }

    SolveReport report;
    report.params = input;
    if (config.parallel_width > 1 && edges > 1) {
        int depth = 1;
        while ((std::int64_t{1} << depth) < config.parallel_width && depth < 14 &&
               depth < edges)
            ++depth;
        const std::uint64_t prefixes = std::uint64_t{1} << depth;
        std::atomic<std::uint64_t> next{0};
        std::mutex stats_mu;
        auto worker = [&] {
            Searcher s(ctx, best);
            for (std::uint64_t idx = next.fetch_add(1); idx < prefixes;
                 idx = next.fetch_add(1))
                s.run_prefix(idx, depth);
            std::lock_guard<std::mutex> lock(stats_mu);
            report.nodes_explored += s.nodes;
            report.pruned_symmetry += s.pruned_symmetry;
            report.pruned_bound += s.pruned_bound;
        };
        std::vector<std::thread> pool;
        for (int w = 0; w < config.parallel_width; ++w) pool.emplace_back(worker);
        for (std::thread& th : pool) th.join();
    } else {
        Searcher s(ctx, best);
        s.run_prefix(0, 0);
        report.nodes_explored = s.nodes;
        report.pruned_symmetry = s.pruned_symmetry;
        report.pruned_bound = s.pruned_bound;
    }

    report.optimum = best.weight.load(std::memory_order_relaxed);
    report.certificate = uncanonicalize(best.labeling, c, input);
    report.exhausted = true;
    return report;
}

std::int64_t brute_force(const TripartiteParams& t, int max_edges) {
    validate(t);
    const std::int64_t edges = edge_count(t);
    if (edges > max_edges)
        throw solver_refusal_error(to_string(t) + " has " + std::to_string(edges) +
                                   " edges, above the brute-force cap of " +
                                   std::to_string(max_edges));

    std::vector<EdgeEnds> ends;
    std::vector<std::vector<std::int64_t>> inc(static_cast<std::size_t>(vertex_count(t)));
    for (std::int64_t e = 0; e < edges; ++e) {
        const EdgeEnds g = edge_ends(t, e);
        ends.push_back(g);
        inc[g.a].push_back(e);
        inc[g.b].push_back(e);
    }

    // Closed neighborhood sums under the current signs, swept in Gray-code
    // order so one edge flips per step. Flipping edge g by d changes the sum
    // of every edge sharing an endpoint with g by d, and g's own sum by d as
    // well (twice as an endpoint, minus once for -f(g)).
    std::vector<int> sum(static_cast<std::size_t>(edges));
    std::vector<signed char> sgn(static_cast<std::size_t>(edges), 1);
    std::int64_t violations = 0;
    for (std::int64_t e = 0; e < edges; ++e) {
        const EdgeEnds& g = ends[static_cast<std::size_t>(e)];
        sum[static_cast<std::size_t>(e)] = degree_of(t, g.a) + degree_of(t, g.b) - 1;
    }
    std::int64_t weight = edges;
    std::int64_t best = edges;  // the all-positive labeling is always valid

    auto touch = [&](std::int64_t e, int d) {
        const std::size_t i = static_cast<std::size_t>(e);
        if (sum[i] < 1) --violations;
        sum[i] += d;
        if (sum[i] < 1) ++violations;
    };
    const std::uint64_t total = std::uint64_t{1} << edges;
    for (std::uint64_t it = 1; it < total; ++it) {
        std::int64_t g = 0;
        while (((it >> g) & 1) == 0) ++g;
        const int d = sgn[static_cast<std::size_t>(g)] > 0 ? -2 : 2;
        sgn[static_cast<std::size_t>(g)] = static_cast<signed char>(-sgn[static_cast<std::size_t>(g)]);
        weight += d;
        const EdgeEnds& ge = ends[static_cast<std::size_t>(g)];
        for (std::int64_t h : inc[ge.a]) touch(h, d);
        for (std::int64_t h : inc[ge.b])
            if (h != g) touch(h, d);
        if (violations == 0 && weight < best) best = weight;
    }
    return best;
}

VertexWeightScan optimum_vertex_weight_scan(const SolveReport& report) {
    EdgeLabeling f = report.certificate;
    const TripartiteParams& t = f.params;
    bool changed = true;
    while (changed) {
        changed = false;
        for (int part = 0; part < 3; ++part) {
            const int off = part_offset(t, static_cast<Part>(part));
            const int sz = part_size(t, static_cast<Part>(part));
            for (int x = off; x < off + sz; ++x) {
                for (int y = x + 1; y < off + sz; ++y) {
                    const int cx = negative_count_at(f, x);
                    const int cy = negative_count_at(f, y);
                    if (cx - cy >= 2 || cy - cx >= 2) {
                        f = rebalance(f, x, y);
                        changed = true;
                    }
                }
            }
        }
    }
    VertexWeightScan scan;
    scan.params = t;
    const std::vector<int> weights = vertex_weights(f);
    for (int part = 0; part < 3; ++part) {
        const int off = part_offset(t, static_cast<Part>(part));
        const int sz = part_size(t, static_cast<Part>(part));
        int lo = weights[off];
        for (int x = off + 1; x < off + sz; ++x) lo = std::min(lo, weights[x]);
        scan.min_weight[static_cast<std::size_t>(part)] = lo;
    }
    return scan;
}

}  // namespace sedn
