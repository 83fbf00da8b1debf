#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace sedn {

// Complete tripartite graph K_{m,n,p} with parts U, V, W.
// Vertices get global indices: U = [0, m), V = [m, m+n), W = [m+n, m+n+p).
// Edges get global ids in block-major order (UV, then UW, then VW),
// row-major within each block. These ids are stable and used in certificates
// and violation reports.
struct TripartiteParams {
    int m = 1;
    int n = 1;
    int p = 1;

    friend bool operator==(const TripartiteParams& a, const TripartiteParams& b) {
        return a.m == b.m && a.n == b.n && a.p == b.p;
    }
    friend bool operator!=(const TripartiteParams& a, const TripartiteParams& b) {
        return !(a == b);
    }
};

inline void validate(const TripartiteParams& t) {
    if (t.m < 1 || t.n < 1 || t.p < 1)
        throw std::invalid_argument("part sizes must all be >= 1, got (" +
                                    std::to_string(t.m) + "," + std::to_string(t.n) + "," +
                                    std::to_string(t.p) + ")");
}

inline std::int64_t edge_count(const TripartiteParams& t) {
    return static_cast<std::int64_t>(t.m) * t.n +
           static_cast<std::int64_t>(t.m) * t.p +
           static_cast<std::int64_t>(t.n) * t.p;
}

inline int vertex_count(const TripartiteParams& t) { return t.m + t.n + t.p; }

enum class Part { U = 0, V = 1, W = 2 };

inline Part part_of(const TripartiteParams& t, int vertex) {
    if (vertex < 0 || vertex >= vertex_count(t))
        throw std::invalid_argument("vertex index out of range");
    if (vertex < t.m) return Part::U;
    if (vertex < t.m + t.n) return Part::V;
    return Part::W;
}

inline int part_size(const TripartiteParams& t, Part part) {
    switch (part) {
        case Part::U: return t.m;
        case Part::V: return t.n;
        default: return t.p;
    }
}

inline int part_offset(const TripartiteParams& t, Part part) {
    switch (part) {
        case Part::U: return 0;
        case Part::V: return t.m;
        default: return t.m + t.n;
    }
}

inline int degree_of(const TripartiteParams& t, int vertex) {
    switch (part_of(t, vertex)) {
        case Part::U: return t.n + t.p;
        case Part::V: return t.m + t.p;
        default: return t.m + t.n;
    }
}

// Edge blocks in id order.
enum class Block { UV = 0, UW = 1, VW = 2 };

inline std::int64_t uv_edge(const TripartiteParams& t, int u, int v) {
    return static_cast<std::int64_t>(u) * t.n + v;
}
inline std::int64_t uw_edge(const TripartiteParams& t, int u, int w) {
    return static_cast<std::int64_t>(t.m) * t.n + static_cast<std::int64_t>(u) * t.p + w;
}
inline std::int64_t vw_edge(const TripartiteParams& t, int v, int w) {
    return static_cast<std::int64_t>(t.m) * t.n + static_cast<std::int64_t>(t.m) * t.p +
           static_cast<std::int64_t>(v) * t.p + w;
}

inline Block block_of(const TripartiteParams& t, std::int64_t e) {
    const std::int64_t uv = static_cast<std::int64_t>(t.m) * t.n;
    const std::int64_t uw = static_cast<std::int64_t>(t.m) * t.p;
    if (e < 0 || e >= edge_count(t)) throw std::invalid_argument("edge id out of range");
    if (e < uv) return Block::UV;
    if (e < uv + uw) return Block::UW;
    return Block::VW;
}

// Endpoints of an edge as global vertex indices; `a` lies in the earlier part.
struct EdgeEnds {
    int a = 0;
    int b = 0;
};

inline EdgeEnds edge_ends(const TripartiteParams& t, std::int64_t e) {
    const std::int64_t uv = static_cast<std::int64_t>(t.m) * t.n;
    const std::int64_t uw = static_cast<std::int64_t>(t.m) * t.p;
    if (e < 0 || e >= edge_count(t)) throw std::invalid_argument("edge id out of range");
    if (e < uv) {
        int u = static_cast<int>(e / t.n);
        int v = static_cast<int>(e % t.n);
        return {u, t.m + v};
    }
    e -= uv;
    if (e < uw) {
        int u = static_cast<int>(e / t.p);
        int w = static_cast<int>(e % t.p);
        return {u, t.m + t.n + w};
    }
    e -= uw;
    int v = static_cast<int>(e / t.p);
    int w = static_cast<int>(e % t.p);
    return {t.m + v, t.m + t.n + w};
}

// Edge id between two global vertices in different parts.
inline std::int64_t edge_between(const TripartiteParams& t, int x, int y) {
    Part px = part_of(t, x);
    Part py = part_of(t, y);
    if (px == py) throw std::invalid_argument("no edge inside a partite set");
    if (px > py) {
        std::swap(x, y);
        std::swap(px, py);
    }
    const int xl = x - part_offset(t, px);
    const int yl = y - part_offset(t, py);
    if (px == Part::U && py == Part::V) return uv_edge(t, xl, yl);
    if (px == Part::U && py == Part::W) return uw_edge(t, xl, yl);
    return vw_edge(t, xl, yl);
}

// Sorted copy of the sizes plus the permutation that produced it, so results
// computed on the sorted triple can be mapped back to the caller's order.
// source[i] names which input slot (0 = m, 1 = n, 2 = p) landed at sorted
// slot i; ties keep input order, so sorting is stable and deterministic.
struct Canonical {
    TripartiteParams params;
    std::array<int, 3> source{0, 1, 2};
};

inline Canonical canonicalize(const TripartiteParams& t) {
    validate(t);
    std::array<int, 3> sizes{t.m, t.n, t.p};
    Canonical c;
    c.source = {0, 1, 2};
    // stable insertion sort on three elements
    for (int i = 1; i < 3; ++i) {
        for (int j = i; j > 0 && sizes[c.source[j - 1]] > sizes[c.source[j]]; --j)
            std::swap(c.source[j - 1], c.source[j]);
    }
    c.params = {sizes[c.source[0]], sizes[c.source[1]], sizes[c.source[2]]};
    return c;
}

inline bool is_canonical(const TripartiteParams& t) { return t.m <= t.n && t.n <= t.p; }

inline std::string to_string(const TripartiteParams& t) {
    return "K_{" + std::to_string(t.m) + "," + std::to_string(t.n) + "," + std::to_string(t.p) + "}";
}

}  // namespace sedn
