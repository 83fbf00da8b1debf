#include "sedn/construct.hpp"
#include "sedn/gamma.hpp"
#include "sedn/labeling.hpp"
#include "sedn/solve.hpp"
#include "sedn/tripartite.hpp"

#include "CLI11.hpp"

#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace sedn;

// Exit-code contract, kept stable so scripts can gate on it:
//   0 ok / 1 invalid labeling or bound violation / 2 conflict /
//   3 uncovered, refused, or no construction / 4 internal mismatch /
//   5 I/O or parse error.
constexpr int kExitOk = 0;
constexpr int kExitInvalid = 1;
constexpr int kExitConflict = 2;
constexpr int kExitUncovered = 3;
constexpr int kExitMismatch = 4;
constexpr int kExitIoParse = 5;

int solver_cap_default() {
    if (const char* env = std::getenv("SEDN_MAX_EDGES")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) return static_cast<int>(v);
        std::fprintf(stderr, "warning: ignoring malformed SEDN_MAX_EDGES=%s\n", env);
    }
    return SolveConfig{}.max_edges;
}

std::string tag_list(const GammaResult& g) {
    std::string s;
    for (const TaggedValue& b : g.branches) {
        if (!s.empty()) s += " ";
        s += b.tag.id;
    }
    return s;
}

std::string conflict_line(const TripartiteParams& t, const GammaResult& g) {
    std::string line = "conflict for " + to_string(canonicalize(t).params) + ":";
    for (const TaggedValue& b : g.branches)
        line += " " + b.tag.id + "=" + std::to_string(b.value);
    return line;
}

int run_gamma(const TripartiteParams& t, bool as_json) {
    GammaResult g;
    try {
        g = gamma(t);
    } catch (const uncovered_error& e) {
        std::fprintf(stderr, "%s\n", e.what());
        return kExitUncovered;
    }
    if (as_json) {
        std::printf("%s\n", gamma_to_json(t, g, 2).c_str());
    } else if (g.conflict()) {
        std::printf("%s\n", conflict_line(t, g).c_str());
    } else {
        std::printf("%lld [%s]\n", static_cast<long long>(*g.value), tag_list(g).c_str());
    }
    return g.conflict() ? kExitConflict : kExitOk;
}

int run_construct(const TripartiteParams& t, const std::string& out_path) {
    try {
        const Construction c = construct(t);
        if (!out_path.empty()) {
            std::ofstream out(out_path, std::ios::binary);
            if (!out) {
                std::fprintf(stderr, "cannot open %s for writing\n", out_path.c_str());
                return kExitIoParse;
            }
            out << certificate_to_json(c.labeling, c.case_tag.id, c.weight, 2) << "\n";
            if (!out) {
                std::fprintf(stderr, "write to %s failed\n", out_path.c_str());
                return kExitIoParse;
            }
        }
        std::printf("weight %lld, %s\n", static_cast<long long>(c.weight), c.case_tag.id.c_str());
        return kExitOk;
    } catch (const no_construction_error& e) {
        std::fprintf(stderr, "%s\n", e.what());
        return kExitUncovered;
    } catch (const internal_mismatch_error& e) {
        std::fprintf(stderr, "internal consistency failure: %s\n", e.what());
        return kExitMismatch;
    }
}

int run_verify(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        std::fprintf(stderr, "cannot open %s\n", path.c_str());
        return kExitIoParse;
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    VerifyReport r;
    try {
        r = verify(parse_labeling(buf.str()));
    } catch (const std::exception& e) {
        std::fprintf(stderr, "parse error: %s\n", e.what());
        return kExitIoParse;
    }
    if (r.is_sedf) {
        std::printf("SEDF, weight %lld\n", static_cast<long long>(r.weight));
        return kExitOk;
    }
    std::printf("NOT SEDF, %zu violations\n", r.violations.size());
    return kExitInvalid;
}

int run_solve(const TripartiteParams& t, int max_edges, int threads) {
    SolveConfig cfg;
    cfg.max_edges = max_edges > 0 ? max_edges : solver_cap_default();
    cfg.parallel_width = threads;
    SolveReport r;
    try {
        r = solve_exact(t, cfg);
    } catch (const solver_refusal_error& e) {
        std::fprintf(stderr, "%s\n", e.what());
        return kExitUncovered;
    }
    std::printf("optimum %lld\n", static_cast<long long>(r.optimum));
    std::printf("nodes %llu, pruned_symmetry %llu, pruned_bound %llu, exhausted %s\n",
                static_cast<unsigned long long>(r.nodes_explored),
                static_cast<unsigned long long>(r.pruned_symmetry),
                static_cast<unsigned long long>(r.pruned_bound),
                r.exhausted ? "yes" : "no");
    return kExitOk;
}

// ---- sweep ----

// One bound of the p range: either an absolute value or m+n plus an offset
// ("msum", "msum+4", "msum-1").
struct RangeBound {
    bool relative = false;
    int value = 0;

    int resolve(int m, int n) const { return relative ? m + n + value : value; }
};

struct SweepRange {
    int m_lo = 0, m_hi = -1;
    int n_lo = 0, n_hi = -1;
    RangeBound p_lo, p_hi;
};

bool parse_bound(const std::string& tok, RangeBound& out) {
    if (tok.rfind("msum", 0) == 0) {
        out.relative = true;
        const std::string rest = tok.substr(4);
        if (rest.empty()) {
            out.value = 0;
            return true;
        }
        if (rest[0] != '+' && rest[0] != '-') return false;
        char* end = nullptr;
        const long v = std::strtol(rest.c_str(), &end, 10);
        if (*end != '\0') return false;
        out.value = static_cast<int>(v);
        return true;
    }
    char* end = nullptr;
    const long v = std::strtol(tok.c_str(), &end, 10);
    if (end == tok.c_str() || *end != '\0' || v < 1) return false;
    out.relative = false;
    out.value = static_cast<int>(v);
    return true;
}

// Parses "m=2..6,n=2..6,p=msum..msum+4". All three keys are required.
bool parse_range(const std::string& spec, SweepRange& out) {
    bool seen_m = false, seen_n = false, seen_p = false;
    std::istringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const std::size_t eq = item.find('=');
        const std::size_t dots = item.find("..");
        if (eq == std::string::npos || dots == std::string::npos || dots < eq) return false;
        const std::string key = item.substr(0, eq);
        const std::string lo = item.substr(eq + 1, dots - eq - 1);
        const std::string hi = item.substr(dots + 2);
        RangeBound blo, bhi;
        if (!parse_bound(lo, blo) || !parse_bound(hi, bhi)) return false;
        if (key == "m" || key == "n") {
            if (blo.relative || bhi.relative) return false;
            if (key == "m") {
                out.m_lo = blo.value;
                out.m_hi = bhi.value;
                seen_m = true;
            } else {
                out.n_lo = blo.value;
                out.n_hi = bhi.value;
                seen_n = true;
            }
        } else if (key == "p") {
            out.p_lo = blo;
            out.p_hi = bhi;
            seen_p = true;
        } else {
            return false;
        }
    }
    return seen_m && seen_n && seen_p;
}

struct SweepRow {
    int m = 0, n = 0, p = 0;
    std::optional<std::int64_t> gamma_value;
    bool gamma_conflict = false;
    std::optional<std::int64_t> construct_weight;
    std::optional<std::int64_t> solver_optimum;
    const char* status = "OK";
};

SweepRow compute_row(const TripartiteParams& t, bool with_solver, int cap) {
    SweepRow row;
    row.m = t.m;
    row.n = t.n;
    row.p = t.p;

    bool mismatch = false, uncovered = false, skipped = false;
    std::vector<std::int64_t> branch_values;

    try {
        const GammaResult g = gamma(t);
        if (g.conflict()) {
            row.gamma_conflict = true;
            for (const TaggedValue& b : g.branches) branch_values.push_back(b.value);
        } else {
            row.gamma_value = *g.value;
        }
    } catch (const uncovered_error&) {
        uncovered = true;
    }

    try {
        const Construction c = construct(t);
        row.construct_weight = c.weight;
        if (row.gamma_value && *row.gamma_value != c.weight) mismatch = true;
    } catch (const no_construction_error&) {
        // Region without a closed-form construction; column stays empty.
    } catch (const internal_mismatch_error&) {
        mismatch = true;
    }

    if (with_solver) {
        if (edge_count(t) <= cap) {
            SolveConfig cfg;
            cfg.max_edges = cap;
            const SolveReport r = solve_exact(t, cfg);
            row.solver_optimum = r.optimum;
            if (row.gamma_value && *row.gamma_value != r.optimum) mismatch = true;
            if (row.gamma_conflict) {
                bool hits_branch = false;
                for (const std::int64_t v : branch_values) hits_branch |= v == r.optimum;
                if (!hits_branch) mismatch = true;
            }
            if (row.construct_weight && r.optimum > *row.construct_weight) mismatch = true;
        } else {
            skipped = true;
        }
    }

    if (mismatch)
        row.status = "MISMATCH";
    else if (row.gamma_conflict)
        row.status = "CONFLICT";
    else if (uncovered)
        row.status = "UNCOVERED";
    else if (skipped)
        row.status = "SKIPPED";
    return row;
}

std::string render_cell(const std::optional<std::int64_t>& v) {
    return v ? std::to_string(*v) : std::string();
}

int run_sweep(int max_sum, const std::string& range_spec, const std::string& csv_path,
              bool with_solver) {
    std::vector<TripartiteParams> triples;
    if (!range_spec.empty()) {
        SweepRange r;
        if (!parse_range(range_spec, r)) {
            std::fprintf(stderr, "cannot parse range spec '%s'\n", range_spec.c_str());
            return kExitIoParse;
        }
        for (int m = r.m_lo; m <= r.m_hi; ++m)
            for (int n = r.n_lo; n <= r.n_hi; ++n) {
                const int p_lo = r.p_lo.resolve(m, n);
                const int p_hi = r.p_hi.resolve(m, n);
                for (int p = p_lo; p <= p_hi; ++p)
                    if (m >= 1 && m <= n && n <= p) triples.push_back({m, n, p});
            }
    } else {
        for (int m = 1; m <= max_sum; ++m)
            for (int n = m; m + n <= max_sum; ++n)
                for (int p = n; m + n + p <= max_sum; ++p) triples.push_back({m, n, p});
    }

    const int cap = solver_cap_default();
    std::string text = "# sedn-lab v1\nm,n,p,gamma,construct,solver,status\n";
    int count_ok = 0, count_conflict = 0, count_mismatch = 0, count_uncovered = 0,
        count_skipped = 0;
    for (const TripartiteParams& t : triples) {
        const SweepRow row = compute_row(t, with_solver, cap);
        std::string gamma_cell =
            row.gamma_conflict ? std::string("conflict") : render_cell(row.gamma_value);
        text += std::to_string(row.m) + "," + std::to_string(row.n) + "," +
                std::to_string(row.p) + "," + gamma_cell + "," +
                render_cell(row.construct_weight) + "," + render_cell(row.solver_optimum) + "," +
                row.status + "\n";
        if (std::strcmp(row.status, "OK") == 0) ++count_ok;
        if (std::strcmp(row.status, "CONFLICT") == 0) ++count_conflict;
        if (std::strcmp(row.status, "MISMATCH") == 0) ++count_mismatch;
        if (std::strcmp(row.status, "UNCOVERED") == 0) ++count_uncovered;
        if (std::strcmp(row.status, "SKIPPED") == 0) ++count_skipped;
    }
    text += "# summary: rows=" + std::to_string(triples.size()) +
            " OK=" + std::to_string(count_ok) + " CONFLICT=" + std::to_string(count_conflict) +
            " MISMATCH=" + std::to_string(count_mismatch) +
            " UNCOVERED=" + std::to_string(count_uncovered) +
            " SKIPPED=" + std::to_string(count_skipped) + "\n";

    std::fputs(text.c_str(), stdout);
    if (!csv_path.empty()) {
        std::ofstream out(csv_path, std::ios::binary);
        if (!out) {
            std::fprintf(stderr, "cannot open %s for writing\n", csv_path.c_str());
            return kExitIoParse;
        }
        out << text;
        if (!out) {
            std::fprintf(stderr, "write to %s failed\n", csv_path.c_str());
            return kExitIoParse;
        }
    }
    return count_mismatch == 0 ? kExitOk : kExitMismatch;
}

int run_conjecture(int max_sum) {
    int checked = 0, tight = 0, conflicts = 0, violations = 0;
    for (int m = 1; m <= max_sum; ++m)
        for (int n = m; m + n <= max_sum; ++n)
            for (int p = n; m + n + p <= max_sum; ++p) {
                const TripartiteParams t{m, n, p};
                const std::int64_t bound = static_cast<std::int64_t>(m) + n + p - 1;
                GammaResult g;
                try {
                    g = gamma(t);
                } catch (const uncovered_error&) {
                    std::printf("%s: uncovered\n", to_string(t).c_str());
                    continue;
                }
                ++checked;
                if (g.conflict()) {
                    ++conflicts;
                    std::string branches, slacks;
                    bool any_tight = false, all_exceed = true;
                    for (const TaggedValue& b : g.branches) {
                        if (!branches.empty()) branches += " ";
                        branches += b.tag.id + "=" + std::to_string(b.value);
                        const std::int64_t s = bound - b.value;
                        if (!slacks.empty()) slacks += " ";
                        slacks += std::to_string(s);
                        any_tight |= s == 0;
                        all_exceed &= s < 0;
                    }
                    std::printf("%s: conflict %s, bound %lld, slacks [%s]%s%s\n",
                                to_string(t).c_str(), branches.c_str(),
                                static_cast<long long>(bound), slacks.c_str(),
                                any_tight ? " (tight branch)" : "",
                                all_exceed ? " (all branches exceed bound)" : "");
                    if (any_tight) ++tight;
                    if (all_exceed) ++violations;
                } else {
                    const std::int64_t slack = bound - *g.value;
                    std::printf("%s: gamma %lld, bound %lld, slack %lld%s\n", to_string(t).c_str(),
                                static_cast<long long>(*g.value), static_cast<long long>(bound),
                                static_cast<long long>(slack), slack == 0 ? " (tight)" : "");
                    if (slack == 0) ++tight;
                    if (slack < 0) ++violations;
                }
            }
    std::printf("checked %d instances, tight %d, conflicts %d, bound violations %d\n", checked,
                tight, conflicts, violations);
    return violations == 0 ? kExitOk : kExitInvalid;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"signed edge domination on complete tripartite graphs"};
    app.require_subcommand(1);

    int m = 1, n = 1, p = 1;
    bool as_json = false;
    std::string out_path, file_path, range_spec, csv_path;
    int max_edges = 0, threads = 0, max_sum = 0;
    bool with_solver = false;

    CLI::App* cmd_gamma = app.add_subcommand("gamma", "closed-form domination number");
    cmd_gamma->add_option("m", m)->required()->check(CLI::PositiveNumber);
    cmd_gamma->add_option("n", n)->required()->check(CLI::PositiveNumber);
    cmd_gamma->add_option("p", p)->required()->check(CLI::PositiveNumber);
    cmd_gamma->add_flag("--json", as_json, "emit JSON instead of the one-line form");

    CLI::App* cmd_construct = app.add_subcommand("construct", "build an optimal labeling");
    cmd_construct->add_option("m", m)->required()->check(CLI::PositiveNumber);
    cmd_construct->add_option("n", n)->required()->check(CLI::PositiveNumber);
    cmd_construct->add_option("p", p)->required()->check(CLI::PositiveNumber);
    cmd_construct->add_option("--out", out_path, "write the certificate JSON here");

    CLI::App* cmd_verify = app.add_subcommand("verify", "check a labeling file");
    cmd_verify->add_option("file", file_path)->required();

    CLI::App* cmd_solve = app.add_subcommand("solve", "exact branch-and-bound search");
    cmd_solve->add_option("m", m)->required()->check(CLI::PositiveNumber);
    cmd_solve->add_option("n", n)->required()->check(CLI::PositiveNumber);
    cmd_solve->add_option("p", p)->required()->check(CLI::PositiveNumber);
    cmd_solve->add_option("--max-edges", max_edges, "edge cap override")
        ->check(CLI::PositiveNumber);
    cmd_solve->add_option("--threads", threads, "parallel worker count (0 = sequential)")
        ->check(CLI::NonNegativeNumber);

    CLI::App* cmd_sweep = app.add_subcommand("sweep", "formula / construction / solver cross-check");
    CLI::Option* opt_max_sum =
        cmd_sweep->add_option("--max-sum", max_sum, "all canonical triples with m+n+p <= S")
            ->check(CLI::PositiveNumber);
    CLI::Option* opt_range =
        cmd_sweep->add_option("--range", range_spec, "e.g. m=2..6,n=2..6,p=msum..msum+4");
    opt_max_sum->excludes(opt_range);
    opt_range->excludes(opt_max_sum);
    cmd_sweep->add_option("--csv", csv_path, "also write the CSV to this file");
    cmd_sweep->add_flag("--with-solver", with_solver, "add exact solver column where feasible");

    CLI::App* cmd_conjecture = app.add_subcommand("conjecture", "slack against the m+n+p-1 bound");
    cmd_conjecture->add_option("--max-sum", max_sum, "all canonical triples with m+n+p <= S")
        ->required()
        ->check(CLI::PositiveNumber);

    CLI11_PARSE(app, argc, argv);

    try {
        if (cmd_gamma->parsed()) return run_gamma({m, n, p}, as_json);
        if (cmd_construct->parsed()) return run_construct({m, n, p}, out_path);
        if (cmd_verify->parsed()) return run_verify(file_path);
        if (cmd_solve->parsed()) return run_solve({m, n, p}, max_edges, threads);
        if (cmd_sweep->parsed()) {
            if (range_spec.empty() && max_sum <= 0) {
                std::fprintf(stderr, "sweep needs --max-sum or --range\n");
                return kExitIoParse;
            }
            return run_sweep(max_sum, range_spec, csv_path, with_solver);
        }
        if (cmd_conjecture->parsed()) return run_conjecture(max_sum);
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitMismatch;
    }
    return kExitOk;
}
