#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <stdexcept>
#include <string>
#include <vector>

#include "sedn/construct.hpp"
#include "sedn/gamma.hpp"
#include "sedn/labeling.hpp"
#include "sedn/solve.hpp"
#include "sedn/tripartite.hpp"

namespace py = pybind11;
using namespace sedn;

namespace {

using SignMatrix = std::vector<std::vector<int>>;

SignMatrix block_matrix(const EdgeLabeling& f, int rows, int cols,
                        std::int64_t (*edge_fn)(const TripartiteParams&, int, int)) {
    SignMatrix out(rows, std::vector<int>(cols));
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) out[i][j] = f.sign(edge_fn(f.params, i, j));
    return out;
}

void attach_blocks(py::dict& d, const EdgeLabeling& f) {
    const TripartiteParams& t = f.params;
    d["uv"] = block_matrix(f, t.m, t.n, &uv_edge);
    d["uw"] = block_matrix(f, t.m, t.p, &uw_edge);
    d["vw"] = block_matrix(f, t.n, t.p, &vw_edge);
}

EdgeLabeling labeling_from_lists(int m, int n, int p, const SignMatrix& uv, const SignMatrix& uw,
                                 const SignMatrix& vw) {
    const TripartiteParams t{m, n, p};
    validate(t);
    EdgeLabeling f = all_positive(t);
    const auto apply = [&](const SignMatrix& mat, int rows, int cols,
                           std::int64_t (*edge_fn)(const TripartiteParams&, int, int),
                           const char* name) {
        if (static_cast<int>(mat.size()) != rows)
            throw std::invalid_argument(std::string(name) + ": expected " + std::to_string(rows) +
                                        " rows");
        for (int i = 0; i < rows; ++i) {
            if (static_cast<int>(mat[i].size()) != cols)
                throw std::invalid_argument(std::string(name) + ": expected " +
                                            std::to_string(cols) + " columns");
            for (int j = 0; j < cols; ++j) {
                const int s = mat[i][j];
                if (s != 1 && s != -1)
                    throw std::invalid_argument(std::string(name) + ": entries must be -1 or +1");
                if (s == -1) f.set_negative(edge_fn(t, i, j), true);
            }
        }
    };
    apply(uv, m, n, &uv_edge, "uv");
    apply(uw, m, p, &uw_edge, "uw");
    apply(vw, n, p, &vw_edge, "vw");
    return f;
}

py::dict gamma_py(int m, int n, int p) {
    const TripartiteParams t{m, n, p};
    validate(t);
    const GammaResult g = gamma(t);
    py::dict d;
    d["m"] = m;
    d["n"] = n;
    d["p"] = p;
    d["conflict"] = g.conflict();
    d["value"] = g.conflict() ? py::object(py::none()) : py::object(py::cast(*g.value));
    py::list branches, tags;
    for (const TaggedValue& b : g.branches) {
        py::dict e;
        e["tag"] = b.tag.id;
        e["value"] = b.value;
        e["formula"] = b.formula;
        branches.append(e);
        tags.append(b.tag.id);
    }
    d["branches"] = branches;
    d["tags"] = tags;
    return d;
}

py::dict construct_py(int m, int n, int p) {
    const TripartiteParams t{m, n, p};
    validate(t);
    const Construction c = construct(t);
    py::dict d;
    d["m"] = m;
    d["n"] = n;
    d["p"] = p;
    d["weight"] = c.weight;
    d["case_tag"] = c.case_tag.id;
    attach_blocks(d, c.labeling);
    return d;
}

py::dict verify_py(int m, int n, int p, const SignMatrix& uv, const SignMatrix& uw,
                   const SignMatrix& vw) {
    const VerifyReport r = verify(labeling_from_lists(m, n, p, uv, uw, vw));
    py::dict d;
    d["is_sedf"] = r.is_sedf;
    d["weight"] = r.weight;
    d["min_closed_sum"] = r.min_closed_sum;
    py::list violations;
    for (const auto& [edge, closed_sum] : r.violations)
        violations.append(py::make_tuple(edge, closed_sum));
    d["violations"] = violations;
    return d;
}

py::dict solve_py(int m, int n, int p, int max_edges, int threads) {
    const TripartiteParams t{m, n, p};
    validate(t);
    SolveConfig cfg;
    if (max_edges > 0) cfg.max_edges = max_edges;
    cfg.parallel_width = threads;
    const SolveReport r = solve_exact(t, cfg);
    py::dict d;
    d["m"] = m;
    d["n"] = n;
    d["p"] = p;
    d["optimum"] = r.optimum;
    d["nodes_explored"] = r.nodes_explored;
    d["pruned_symmetry"] = r.pruned_symmetry;
    d["pruned_bound"] = r.pruned_bound;
    d["exhausted"] = r.exhausted;
    attach_blocks(d, r.certificate);
    return d;
}

std::int64_t brute_force_py(int m, int n, int p, int max_edges) {
    const TripartiteParams t{m, n, p};
    validate(t);
    return brute_force(t, max_edges);
}

std::int64_t edge_count_py(int m, int n, int p) {
    const TripartiteParams t{m, n, p};
    validate(t);
    return edge_count(t);
}

}  // namespace

PYBIND11_MODULE(sedn, mod) {
    mod.doc() = "signed edge dominating functions of complete tripartite graphs";
    mod.attr("__version__") = "0.1.0";

    py::register_exception<no_construction_error>(mod, "NoConstructionError");
    py::register_exception<solver_refusal_error>(mod, "SolverRefusalError");
    py::register_exception<uncovered_error>(mod, "UncoveredError");

    mod.def("edge_count", &edge_count_py, py::arg("m"), py::arg("n"), py::arg("p"),
            "number of edges of K_{m,n,p}");
    mod.def("gamma", &gamma_py, py::arg("m"), py::arg("n"), py::arg("p"),
            "closed-form signed edge domination number; conflicts are reported, not resolved");
    mod.def("construct", &construct_py, py::arg("m"), py::arg("n"), py::arg("p"),
            "explicit optimal labeling for p >= m+n (after sorting), verified before return");
    mod.def("verify", &verify_py, py::arg("m"), py::arg("n"), py::arg("p"), py::arg("uv"),
            py::arg("uw"), py::arg("vw"),
            "check the SEDF condition for sign matrices given as nested lists of -1/+1");
    mod.def("solve", &solve_py, py::arg("m"), py::arg("n"), py::arg("p"),
            py::arg("max_edges") = 0, py::arg("threads") = 0,
            "exact branch-and-bound optimum with certificate (refuses above the edge cap)");
    mod.def("brute_force", &brute_force_py, py::arg("m"), py::arg("n"), py::arg("p"),
            py::arg("max_edges") = 22, "plain exhaustive optimum, for cross-checking");
}
