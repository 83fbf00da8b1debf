#include "sedn/labeling.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

#include "json.hpp"

namespace sedn {

EdgeLabeling all_positive(const TripartiteParams& t, std::int64_t cap) {
    validate(t);
    const std::int64_t e = edge_count(t);
    if (e > cap)
        throw std::invalid_argument("labeling for " + to_string(t) + " has " + std::to_string(e) +
                                    " edges, above the materialization cap of " + std::to_string(cap));
    EdgeLabeling f;
    f.params = t;
    f.bits.assign(static_cast<std::size_t>((e + 63) / 64), 0);
    f.negatives = 0;
    return f;
}

int negative_count_at(const EdgeLabeling& f, int vertex) {
    const TripartiteParams& t = f.params;
    const Part part = part_of(t, vertex);
    const int local = vertex - part_offset(t, part);
    int count = 0;
    switch (part) {
        case Part::U:
            for (int v = 0; v < t.n; ++v) count += f.negative(uv_edge(t, local, v));
            for (int w = 0; w < t.p; ++w) count += f.negative(uw_edge(t, local, w));
            break;
        case Part::V:
            for (int u = 0; u < t.m; ++u) count += f.negative(uv_edge(t, u, local));
            for (int w = 0; w < t.p; ++w) count += f.negative(vw_edge(t, local, w));
            break;
        case Part::W:
            for (int u = 0; u < t.m; ++u) count += f.negative(uw_edge(t, u, local));
            for (int v = 0; v < t.n; ++v) count += f.negative(vw_edge(t, v, local));
            break;
    }
    return count;
}

std::vector<int> vertex_weights(const EdgeLabeling& f) {
    const TripartiteParams& t = f.params;
    std::vector<int> wts(static_cast<std::size_t>(vertex_count(t)));
    for (int x = 0; x < vertex_count(t); ++x) wts[x] = degree_of(t, x);
    const std::int64_t e_total = edge_count(t);
    for (std::int64_t e = 0; e < e_total; ++e) {
        if (!f.negative(e)) continue;
        const EdgeEnds ends = edge_ends(t, e);
        wts[ends.a] -= 2;
        wts[ends.b] -= 2;
    }
    return wts;
}

int closed_neighborhood_sum(const EdgeLabeling& f, std::int64_t e) {
    const TripartiteParams& t = f.params;
    if (e < 0 || e >= edge_count(t)) throw std::invalid_argument("edge id out of range");
    const EdgeEnds ends = edge_ends(t, e);
    const int x = negative_count_at(f, ends.a);
    const int y = negative_count_at(f, ends.b);
    return degree_of(t, ends.a) + degree_of(t, ends.b) - 2 * x - 2 * y - f.sign(e);
}

VerifyReport verify(const EdgeLabeling& f) {
    const TripartiteParams& t = f.params;
    const std::vector<int> wts = vertex_weights(f);
    VerifyReport report;
    report.weight = weight(f);
    const std::int64_t e_total = edge_count(t);
    int min_sum = 0;
    bool first = true;
    for (std::int64_t e = 0; e < e_total; ++e) {
        const EdgeEnds ends = edge_ends(t, e);
        const int sum = wts[ends.a] + wts[ends.b] - f.sign(e);
        if (first || sum < min_sum) {
            min_sum = sum;
            first = false;
        }
        if (sum < 1) report.violations.emplace_back(e, sum);
    }
    report.min_closed_sum = min_sum;
    report.is_sedf = report.violations.empty();
    return report;
}

EdgeLabeling rebalance(const EdgeLabeling& f, int a, int b) {
    const TripartiteParams& t = f.params;
    const Part pa = part_of(t, a);
    const Part pb = part_of(t, b);
    if (pa != pb) throw std::invalid_argument("rebalance requires two vertices of the same partite set");
    if (a == b) return f;
    if (!verify(f).is_sedf) throw std::logic_error("rebalance requires an SEDF input");

    EdgeLabeling g = f;
    while (true) {
        const int ca = negative_count_at(g, a);
        const int cb = negative_count_at(g, b);
        if (std::abs(ca - cb) <= 1) break;
        const int heavy = ca > cb ? a : b;
        const int light = ca > cb ? b : a;
        // Common neighbors are exactly the vertices of the other two parts.
        bool swapped = false;
        for (int ell = 0; ell < vertex_count(t); ++ell) {
            if (part_of(t, ell) == pa) continue;
            const std::int64_t eh = edge_between(t, heavy, ell);
            const std::int64_t el = edge_between(t, light, ell);
            if (g.negative(eh) && !g.negative(el)) {
                g.set_negative(eh, false);
                g.set_negative(el, true);
                swapped = true;
                break;
            }
        }
        if (!swapped)
            throw std::logic_error("rebalance found no swappable common neighbor; counts inconsistent");
    }
    return g;
}

namespace {

nlohmann::json sign_matrix(const EdgeLabeling& f, Block block, int rows, int cols) {
    nlohmann::json out = nlohmann::json::array();
    for (int r = 0; r < rows; ++r) {
        nlohmann::json row = nlohmann::json::array();
        for (int c = 0; c < cols; ++c) {
            std::int64_t e;
            switch (block) {
                case Block::UV: e = uv_edge(f.params, r, c); break;
                case Block::UW: e = uw_edge(f.params, r, c); break;
                default: e = vw_edge(f.params, r, c); break;
            }
            row.push_back(f.sign(e));
        }
        out.push_back(std::move(row));
    }
    return out;
}

nlohmann::json labeling_json(const EdgeLabeling& f) {
    nlohmann::json j;
    j["m"] = f.params.m;
    j["n"] = f.params.n;
    j["p"] = f.params.p;
    j["uv"] = sign_matrix(f, Block::UV, f.params.m, f.params.n);
    j["uw"] = sign_matrix(f, Block::UW, f.params.m, f.params.p);
    j["vw"] = sign_matrix(f, Block::VW, f.params.n, f.params.p);
    return j;
}

void read_matrix(const nlohmann::json& j, const char* key, EdgeLabeling& f, Block block,
                 int rows, int cols) {
    if (!j.contains(key) || !j.at(key).is_array())
        throw std::runtime_error(std::string("labeling JSON: missing sign matrix \"") + key + "\"");
    const nlohmann::json& mat = j.at(key);
    if (static_cast<int>(mat.size()) != rows)
        throw std::runtime_error(std::string("labeling JSON: \"") + key + "\" must have " +
                                 std::to_string(rows) + " rows");
    for (int r = 0; r < rows; ++r) {
        const nlohmann::json& row = mat.at(r);
        if (!row.is_array() || static_cast<int>(row.size()) != cols)
            throw std::runtime_error(std::string("labeling JSON: \"") + key + "\" row " +
                                     std::to_string(r) + " must have " + std::to_string(cols) +
                                     " entries");
        for (int c = 0; c < cols; ++c) {
            const nlohmann::json& cell = row.at(c);
            if (!cell.is_number_integer())
                throw std::runtime_error(std::string("labeling JSON: \"") + key +
                                         "\" entries must be integers -1 or 1");
            const int s = cell.get<int>();
            if (s != -1 && s != 1)
                throw std::runtime_error(std::string("labeling JSON: \"") + key +
                                         "\" entries must be -1 or 1, got " + std::to_string(s));
            std::int64_t e;
            switch (block) {
                case Block::UV: e = uv_edge(f.params, r, c); break;
                case Block::UW: e = uw_edge(f.params, r, c); break;
                default: e = vw_edge(f.params, r, c); break;
            }
            f.set_negative(e, s == -1);
        }
    }
}

}  // namespace

std::string labeling_to_json(const EdgeLabeling& f, int indent) {
    return labeling_json(f).dump(indent);
}

std::string certificate_to_json(const EdgeLabeling& f, const std::string& case_tag,
                                std::int64_t claimed_gamma, int indent) {
    nlohmann::json j = labeling_json(f);
    j["case_tag"] = case_tag;
    j["claimed_gamma"] = claimed_gamma;
    return j.dump(indent);
}

EdgeLabeling parse_labeling(const std::string& json_text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::exception& e) {
        throw std::runtime_error(std::string("labeling JSON parse error: ") + e.what());
    }
    if (!j.is_object()) throw std::runtime_error("labeling JSON: top level must be an object");
    for (const char* key : {"m", "n", "p"}) {
        if (!j.contains(key) || !j.at(key).is_number_integer())
            throw std::runtime_error(std::string("labeling JSON: missing integer field \"") + key + "\"");
    }
    TripartiteParams t{j.at("m").get<int>(), j.at("n").get<int>(), j.at("p").get<int>()};
    try {
        validate(t);
    } catch (const std::invalid_argument& e) {
        throw std::runtime_error(std::string("labeling JSON: ") + e.what());
    }
    EdgeLabeling f = all_positive(t);
    read_matrix(j, "uv", f, Block::UV, t.m, t.n);
    read_matrix(j, "uw", f, Block::UW, t.m, t.p);
    read_matrix(j, "vw", f, Block::VW, t.n, t.p);
    return f;
}

EdgeLabeling uncanonicalize(const EdgeLabeling& canon, const Canonical& c,
                            const TripartiteParams& original) {
    // slot_of[k] = canonical slot that holds original part k
    std::array<int, 3> slot_of{};
    for (int slot = 0; slot < 3; ++slot) slot_of[c.source[slot]] = slot;

    EdgeLabeling out = all_positive(original);
    const TripartiteParams& ct = canon.params;
    const std::int64_t e_total = edge_count(original);
    for (std::int64_t e = 0; e < e_total; ++e) {
        const EdgeEnds ends = edge_ends(original, e);
        const Part pa = part_of(original, ends.a);
        const Part pb = part_of(original, ends.b);
        const int la = ends.a - part_offset(original, pa);
        const int lb = ends.b - part_offset(original, pb);
        int slot_a = slot_of[static_cast<int>(pa)];
        int slot_b = slot_of[static_cast<int>(pb)];
        int ca = la, cb = lb;
        if (slot_a > slot_b) {
            std::swap(slot_a, slot_b);
            std::swap(ca, cb);
        }
        std::int64_t ce;
        if (slot_a == 0 && slot_b == 1) ce = uv_edge(ct, ca, cb);
        else if (slot_a == 0 && slot_b == 2) ce = uw_edge(ct, ca, cb);
        else ce = vw_edge(ct, ca, cb);
        out.set_negative(e, canon.negative(ce));
    }
    return out;
}

}  // namespace sedn
