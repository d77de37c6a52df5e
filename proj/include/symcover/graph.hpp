#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "symcover/ids.hpp"

namespace symcover {

/// Short-lex order on vertex sets: smaller sets first, lexicographic within
/// one cardinality. Every list of vertex sets returned by this library is
/// sorted this way.
inline bool shortlex_less(const std::vector<VertexId>& a, const std::vector<VertexId>& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
}

/// Finite simple graph with sorted vertex list and normalized edge set.
///
/// Vertices are (base, level) identifiers; plain graphs use level 1
/// throughout. Values are immutable after construction.
class Graph {
public:
    using Edge = std::pair<VertexId, VertexId>;  // first < second

    Graph() = default;

    Graph(std::vector<VertexId> vertices, std::vector<Edge> edges)
        : vertices_(std::move(vertices)) {
        std::sort(vertices_.begin(), vertices_.end());
        if (std::adjacent_find(vertices_.begin(), vertices_.end()) != vertices_.end())
            throw input_error("graph: duplicate vertex identifier");
        edges_.reserve(edges.size());
        for (auto& e : edges) {
            if (e.first == e.second) throw input_error("graph: loop edge " + to_string(e.first));
            if (!has_vertex(e.first) || !has_vertex(e.second))
                throw input_error("graph: edge endpoint not in vertex list");
            edges_.push_back(e.first < e.second ? e : Edge{e.second, e.first});
        }
        std::sort(edges_.begin(), edges_.end());
        edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
        build_adjacency();
    }

    /// Plain graph on bases 1..n, edges given by base pairs.
    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
        std::vector<VertexId> vs;
        vs.reserve(n);
        for (int i = 1; i <= n; ++i) vs.push_back({i, 1});
        std::vector<Edge> es;
        es.reserve(edges.size());
        for (auto [u, v] : edges) es.push_back({{u, 1}, {v, 1}});
        return Graph(std::move(vs), std::move(es));
    }

    static Graph path(int n) {
        std::vector<std::pair<int, int>> es;
        for (int i = 1; i < n; ++i) es.push_back({i, i + 1});
        return from_edges(n, es);
    }

    static Graph cycle(int n) {
        std::vector<std::pair<int, int>> es;
        for (int i = 1; i < n; ++i) es.push_back({i, i + 1});
        if (n >= 3) es.push_back({n, 1});
        return from_edges(n, es);
    }

    static Graph complete(int n) {
        std::vector<std::pair<int, int>> es;
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j) es.push_back({i, j});
        return from_edges(n, es);
    }

    const std::vector<VertexId>& vertices() const { return vertices_; }
    const std::vector<Edge>& edges() const { return edges_; }
    int vertex_count() const { return static_cast<int>(vertices_.size()); }

    bool has_vertex(const VertexId& v) const {
        return std::binary_search(vertices_.begin(), vertices_.end(), v);
    }

    /// Position of v in the sorted vertex list; -1 if absent.
    int index_of(const VertexId& v) const {
        auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v);
        if (it == vertices_.end() || *it != v) return -1;
        return static_cast<int>(it - vertices_.begin());
    }

    bool adjacent(const VertexId& u, const VertexId& v) const {
        int i = index_of(u), j = index_of(v);
        if (i < 0 || j < 0) throw input_error("graph: unknown vertex");
        return (adj_[i] >> j) & 1u;
    }

    /// Adjacency bitmask over vertex positions (vertex_count() <= 64).
    std::uint64_t adjacency_mask(int index) const { return adj_[index]; }

    std::vector<VertexId> neighbors(const VertexId& v) const {
        int i = index_of(v);
        if (i < 0) throw input_error("graph: unknown vertex " + to_string(v));
        std::vector<VertexId> out;
        for (int j = 0; j < vertex_count(); ++j)
            if ((adj_[i] >> j) & 1u) out.push_back(vertices_[j]);
        return out;
    }

    int degree(const VertexId& v) const { return static_cast<int>(neighbors(v).size()); }

    bool has_isolated_vertex() const {
        for (std::uint64_t row : adj_)
            if (row == 0) return true;
        return false;
    }

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.vertices_ == b.vertices_ && a.edges_ == b.edges_;
    }

    std::vector<VertexId> mask_to_vertices(std::uint64_t mask) const {
        std::vector<VertexId> out;
        for (int i = 0; i < vertex_count(); ++i)
            if ((mask >> i) & 1u) out.push_back(vertices_[i]);
        return out;
    }

    std::uint64_t vertices_to_mask(const std::vector<VertexId>& vs) const {
        std::uint64_t mask = 0;
        for (const auto& v : vs) {
            int i = index_of(v);
            if (i < 0) throw input_error("graph: unknown vertex " + to_string(v));
            mask |= std::uint64_t{1} << i;
        }
        return mask;
    }

private:
    void build_adjacency() {
        if (vertices_.size() > 64) throw resource_error("graph: more than 64 vertices");
        adj_.assign(vertices_.size(), 0);
        for (const auto& [u, v] : edges_) {
            int i = index_of(u), j = index_of(v);
            adj_[i] |= std::uint64_t{1} << j;
            adj_[j] |= std::uint64_t{1} << i;
        }
    }

    std::vector<VertexId> vertices_;
    std::vector<Edge> edges_;
    std::vector<std::uint64_t> adj_;
};

namespace detail {

/// Compare two vertex subsets given as bitmasks over a sorted vertex list,
/// in short-lex order (popcount first, then lowest set bits).
inline bool mask_shortlex_less(std::uint64_t a, std::uint64_t b) {
    int pa = __builtin_popcountll(a), pb = __builtin_popcountll(b);
    if (pa != pb) return pa < pb;
    while (a && b) {
        int la = __builtin_ctzll(a), lb = __builtin_ctzll(b);
        if (la != lb) return la < lb;
        a &= a - 1;
        b &= b - 1;
    }
    return false;
}

/// All maximal independent sets as bitmasks (maximal cliques of the
/// complement, Bron-Kerbosch with pivoting).
inline void maximal_independent_masks_rec(const std::vector<std::uint64_t>& nonadj,
                                          std::uint64_t R, std::uint64_t P, std::uint64_t X,
                                          std::vector<std::uint64_t>& out) {
    if (P == 0 && X == 0) {
        out.push_back(R);
        return;
    }
    std::uint64_t PX = P | X;
    int pivot = -1, best = -1;
    for (std::uint64_t m = PX; m;) {
        int v = __builtin_ctzll(m);
        m &= m - 1;
        int cnt = __builtin_popcountll(P & nonadj[v]);
        if (cnt > best) {
            best = cnt;
            pivot = v;
        }
    }
    std::uint64_t cand = P & ~nonadj[pivot];
    while (cand) {
        int v = __builtin_ctzll(cand);
        cand &= cand - 1;
        std::uint64_t bit = std::uint64_t{1} << v;
        maximal_independent_masks_rec(nonadj, R | bit, P & nonadj[v], X & nonadj[v], out);
        P &= ~bit;
        X |= bit;
    }
}

inline std::vector<std::uint64_t> maximal_independent_masks(const Graph& g) {
    int n = g.vertex_count();
    if (n == 0) return {0};
    std::vector<std::uint64_t> nonadj(n);
    std::uint64_t all = (n == 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
    for (int i = 0; i < n; ++i)
        nonadj[i] = all & ~g.adjacency_mask(i) & ~(std::uint64_t{1} << i);
    std::vector<std::uint64_t> out;
    maximal_independent_masks_rec(nonadj, 0, all, 0, out);
    std::sort(out.begin(), out.end(), mask_shortlex_less);
    return out;
}

}  // namespace detail

/// N[F]: union of closed neighborhoods of the vertices of F.
inline std::vector<VertexId> closed_neighborhood(const Graph& g, const std::vector<VertexId>& f) {
    std::uint64_t mask = g.vertices_to_mask(f);
    std::uint64_t out = mask;
    for (int i = 0; i < g.vertex_count(); ++i)
        if ((mask >> i) & 1u) out |= g.adjacency_mask(i);
    return g.mask_to_vertices(out);
}

/// Induced deletion: drops A and every edge meeting A.
inline Graph delete_vertices(const Graph& g, const std::vector<VertexId>& a) {
    std::uint64_t drop = g.vertices_to_mask(a);
    std::vector<VertexId> vs = g.mask_to_vertices(~drop);
    std::vector<Graph::Edge> es;
    for (const auto& e : g.edges()) {
        int i = g.index_of(e.first), j = g.index_of(e.second);
        if (!((drop >> i) & 1u) && !((drop >> j) & 1u)) es.push_back(e);
    }
    return Graph(std::move(vs), std::move(es));
}

inline std::vector<std::vector<VertexId>> maximal_independent_sets(const Graph& g) {
    std::vector<std::vector<VertexId>> out;
    for (std::uint64_t m : detail::maximal_independent_masks(g)) out.push_back(g.mask_to_vertices(m));
    return out;
}

inline std::vector<std::vector<VertexId>> minimal_vertex_covers(const Graph& g) {
    int n = g.vertex_count();
    std::uint64_t all = (n == 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
    std::vector<std::uint64_t> covers;
    for (std::uint64_t m : detail::maximal_independent_masks(g)) covers.push_back(all & ~m);
    std::sort(covers.begin(), covers.end(), detail::mask_shortlex_less);
    std::vector<std::vector<VertexId>> out;
    for (std::uint64_t m : covers) out.push_back(g.mask_to_vertices(m));
    return out;
}

inline bool is_unmixed(const Graph& g) {
    auto mis = detail::maximal_independent_masks(g);
    for (const auto& m : mis)
        if (__builtin_popcountll(m) != __builtin_popcountll(mis.front())) return false;
    return true;
}

inline bool is_very_well_covered(const Graph& g) {
    int n = g.vertex_count();
    if (n == 0 || n % 2 != 0) return false;
    for (const auto& m : detail::maximal_independent_masks(g))
        if (__builtin_popcountll(m) != n / 2) return false;
    return true;
}

/// 2-coloring if one exists. Within each component the side of the smallest
/// vertex goes first, so isolated vertices land on the first side.
inline std::optional<std::pair<std::vector<VertexId>, std::vector<VertexId>>> is_bipartite(
    const Graph& g) {
    int n = g.vertex_count();
    std::vector<int> color(n, -1);
    std::vector<int> stack;
    for (int root = 0; root < n; ++root) {
        if (color[root] != -1) continue;
        color[root] = 0;
        stack.push_back(root);
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (std::uint64_t m = g.adjacency_mask(u); m;) {
                int v = __builtin_ctzll(m);
                m &= m - 1;
                if (color[v] == -1) {
                    color[v] = 1 - color[u];
                    stack.push_back(v);
                } else if (color[v] == color[u]) {
                    return std::nullopt;
                }
            }
        }
    }
    std::pair<std::vector<VertexId>, std::vector<VertexId>> sides;
    for (int i = 0; i < n; ++i)
        (color[i] == 0 ? sides.first : sides.second).push_back(g.vertices()[i]);
    return sides;
}

inline bool is_connected(const Graph& g) {
    int n = g.vertex_count();
    if (n <= 1) return true;
    std::uint64_t seen = 1;
    std::vector<int> stack{0};
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (std::uint64_t m = g.adjacency_mask(u) & ~seen; m;) {
            int v = __builtin_ctzll(m);
            m &= m - 1;
            seen |= std::uint64_t{1} << v;
            stack.push_back(v);
        }
    }
    return __builtin_popcountll(seen) == n;
}

namespace detail {

inline void indmatch_rec(const Graph& g, std::size_t from, std::uint64_t forbidden, int chosen,
                         int& best) {
    const auto& edges = g.edges();
    if (chosen + static_cast<int>(edges.size() - from) <= best) return;
    for (std::size_t e = from; e < edges.size(); ++e) {
        int i = g.index_of(edges[e].first), j = g.index_of(edges[e].second);
        std::uint64_t bits = (std::uint64_t{1} << i) | (std::uint64_t{1} << j);
        if (bits & forbidden) continue;
        std::uint64_t nf = forbidden | bits | g.adjacency_mask(i) | g.adjacency_mask(j);
        if (chosen + 1 > best) best = chosen + 1;
        indmatch_rec(g, e + 1, nf, chosen + 1, best);
    }
}

}  // namespace detail

/// Largest set of edges whose endpoints induce exactly those edges.
inline int induced_matching_number(const Graph& g) {
    int best = 0;
    detail::indmatch_rec(g, 0, 0, 0, best);
    return best;
}

inline int cover_number(const Graph& g) {
    int alpha = 0;
    for (const auto& m : detail::maximal_independent_masks(g))
        alpha = std::max(alpha, __builtin_popcountll(m));
    return g.vertex_count() - alpha;
}

/// Level product: vertices (i,p) for 1 <= p <= k over the vertices x_i of G,
/// with (i,p) ~ (j,q) exactly when x_i ~ x_j and p + q <= k + 1. Requires a
/// plain (level 1) input graph.
inline Graph build_gk(const Graph& g, int k) {
    if (k < 1) throw input_error("build_gk: k must be >= 1");
    for (const auto& v : g.vertices())
        if (v.level != 1) throw input_error("build_gk: input vertices must have level 1");
    std::vector<VertexId> vs;
    for (const auto& v : g.vertices())
        for (int p = 1; p <= k; ++p) vs.push_back({v.base, p});
    std::vector<Graph::Edge> es;
    for (const auto& [u, v] : g.edges())
        for (int p = 1; p <= k; ++p)
            for (int q = 1; p + q <= k + 1; ++q) es.push_back({{u.base, p}, {v.base, q}});
    return Graph(std::move(vs), std::move(es));
}

/// Adds one pendant vertex to every vertex of a plain graph; pendant of base
/// b is base b + (largest base in G).
inline Graph whisker(const Graph& g) {
    int maxbase = 0;
    for (const auto& v : g.vertices()) {
        if (v.level != 1) throw input_error("whisker: input vertices must have level 1");
        maxbase = std::max(maxbase, v.base);
    }
    std::vector<VertexId> vs = g.vertices();
    std::vector<Graph::Edge> es = g.edges();
    for (const auto& v : g.vertices()) {
        VertexId pendant{v.base + maxbase, 1};
        vs.push_back(pendant);
        es.push_back({v, pendant});
    }
    return Graph(std::move(vs), std::move(es));
}

}  // namespace symcover
