#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <unordered_set>
#include <vector>

#include "symcover/betti.hpp"
#include "symcover/canonical.hpp"
#include "symcover/graph.hpp"
#include "symcover/theorems.hpp"

namespace symcover {

enum class Family { all_graphs, bipartite, very_well_covered, cm_very_well_covered, whiskered };

inline std::string family_name(Family f) {
    switch (f) {
        case Family::all_graphs: return "all-graphs";
        case Family::bipartite: return "bipartite";
        case Family::very_well_covered: return "very-well-covered";
        case Family::cm_very_well_covered: return "cm-very-well-covered";
        case Family::whiskered: return "whiskered";
    }
    return "?";
}

inline Family family_from_name(const std::string& name) {
    for (Family f : {Family::all_graphs, Family::bipartite, Family::very_well_covered,
                     Family::cm_very_well_covered, Family::whiskered})
        if (family_name(f) == name) return f;
    throw input_error("unknown family: " + name);
}

struct SweepConfig {
    Family family = Family::all_graphs;
    int max_vertices = 5;
    int kmax = 2;
    FieldSpec field;
    std::vector<StatementId> statements;
    VerifyCaps caps;
};

inline void validate_sweep_config(const SweepConfig& config) {
    if (config.kmax < 1) throw input_error("sweep: kmax must be >= 1");
    if (config.max_vertices < 1) throw input_error("sweep: max_vertices must be >= 1");
    int catalog_bound = config.family == Family::whiskered ? config.max_vertices / 2
                                                           : config.max_vertices;
    if (catalog_bound > 8)
        throw input_error("sweep: enumeration is capped at 8 catalog vertices");
    if (config.statements.empty()) throw input_error("sweep: no statements requested");
}

namespace detail {

// pair order of the canonical encoding: (0,1), (0,2), (1,2), (0,3), ...
inline std::vector<std::uint64_t> decode_adjacency(int n, std::uint64_t bits) {
    std::vector<std::uint64_t> adj(n, 0);
    int total = n * (n - 1) / 2;
    int idx = 0;
    for (int t = 1; t < n; ++t)
        for (int s = 0; s < t; ++s, ++idx)
            if ((bits >> (total - 1 - idx)) & 1u) {
                adj[s] |= std::uint64_t{1} << t;
                adj[t] |= std::uint64_t{1} << s;
            }
    return adj;
}

inline std::uint64_t canonical_bits(const std::vector<std::uint64_t>& adj, int n) {
    return CanonicalSearch(adj, n).best();
}

/// All graphs on exactly n vertices up to isomorphism, as canonical
/// encodings of the adjacency upper triangle. Built by vertex extension from
/// the (n-1)-catalog and cached.
inline const std::vector<std::uint64_t>& graph_catalog(int n) {
    static std::map<int, std::vector<std::uint64_t>> cache;
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    std::vector<std::uint64_t> result;
    if (n <= 1) {
        result = {0};
    } else {
        const auto& smaller = graph_catalog(n - 1);
        std::unordered_set<std::uint64_t> seen;
        for (std::uint64_t enc : smaller) {
            std::vector<std::uint64_t> adj = decode_adjacency(n - 1, enc);
            adj.push_back(0);
            for (std::uint64_t nb = 0; nb < (std::uint64_t{1} << (n - 1)); ++nb) {
                for (int v = 0; v < n - 1; ++v) {
                    if ((nb >> v) & 1u)
                        adj[v] |= std::uint64_t{1} << (n - 1);
                    else
                        adj[v] &= ~(std::uint64_t{1} << (n - 1));
                }
                adj[n - 1] = nb;
                seen.insert(canonical_bits(adj, n));
            }
        }
        result.assign(seen.begin(), seen.end());
        std::sort(result.begin(), result.end());
    }
    return cache.emplace(n, std::move(result)).first->second;
}

inline Graph graph_from_encoding(int n, std::uint64_t bits) {
    std::vector<std::uint64_t> adj = decode_adjacency(n, bits);
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if ((adj[i] >> j) & 1u) edges.push_back({i + 1, j + 1});
    return Graph::from_edges(n, edges);
}

}  // namespace detail

/// Connected graphs up to isomorphism on exactly n vertices, in catalog
/// order (vertices labeled 1..n).
inline std::vector<Graph> connected_graphs(int n) {
    std::vector<Graph> out;
    for (std::uint64_t enc : detail::graph_catalog(n)) {
        Graph g = detail::graph_from_encoding(n, enc);
        if (is_connected(g)) out.push_back(std::move(g));
    }
    return out;
}

/// Members of the configured family, smallest vertex count first and catalog
/// order within one count. The whiskered family ranges over connected bases
/// with at least one edge on up to max_vertices/2 vertices.
inline std::vector<Graph> enumerate_family(const SweepConfig& config) {
    validate_sweep_config(config);
    std::vector<Graph> out;
    if (config.family == Family::whiskered) {
        for (int n = 2; n <= config.max_vertices / 2; ++n)
            for (const auto& base : connected_graphs(n)) out.push_back(whisker(base));
        return out;
    }
    for (int n = 1; n <= config.max_vertices; ++n) {
        for (auto& g : connected_graphs(n)) {
            bool keep = true;
            switch (config.family) {
                case Family::all_graphs: break;
                case Family::bipartite: keep = is_bipartite(g).has_value(); break;
                case Family::very_well_covered: keep = is_very_well_covered(g); break;
                case Family::cm_very_well_covered:
                    keep = is_very_well_covered(g) &&
                           is_cohen_macaulay(independence_complex(g), config.field,
                                             config.caps.hochster);
                    break;
                case Family::whiskered: break;
            }
            if (keep) out.push_back(std::move(g));
        }
    }
    return out;
}

}  // namespace symcover
