#pragma once

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

#include "symcover/graph.hpp"

namespace symcover {

/// Pairing (w_i, z_i) of a minimal vertex cover with a maximal independent
/// set along a perfect matching, subject to:
///   (i)   {w_1..w_h} is a minimal vertex cover, {z_1..z_h} a maximal
///         independent set;
///   (ii)  every {w_i, z_i} is an edge;
///   (iii) {y_i, w_j}, {z_j, w_l} edges imply {y_i, w_l} is an edge, for
///         distinct i, j, l and y_i in {w_i, z_i};
///   (iv)  {w_i, z_j} an edge implies {w_i, w_j} is not;
///   (v)   (optional) {w_i, z_j} an edge implies i <= j.
struct VwcLabeling {
    std::vector<std::pair<VertexId, VertexId>> pairs;
    bool cm_ordered = false;
};

namespace detail {

inline bool vwc_conditions_iii_iv(const Graph& g,
                                  const std::vector<std::pair<VertexId, VertexId>>& pairs) {
    const int h = static_cast<int>(pairs.size());
    auto adj = [&](const VertexId& a, const VertexId& b) { return g.adjacent(a, b); };
    for (int i = 0; i < h; ++i)
        for (int j = 0; j < h; ++j) {
            if (i == j) continue;
            // (iv)
            if (adj(pairs[i].first, pairs[j].second) && adj(pairs[i].first, pairs[j].first))
                return false;
            // (iii)
            for (int l = 0; l < h; ++l) {
                if (l == i || l == j) continue;
                if (!adj(pairs[j].second, pairs[l].first)) continue;
                for (const VertexId& y : {pairs[i].first, pairs[i].second}) {
                    if (adj(y, pairs[j].first) && !adj(y, pairs[l].first)) return false;
                }
            }
        }
    return true;
}

inline bool vwc_condition_v(const Graph& g,
                            const std::vector<std::pair<VertexId, VertexId>>& pairs) {
    const int h = static_cast<int>(pairs.size());
    for (int i = 0; i < h; ++i)
        for (int j = 0; j < i; ++j)
            if (g.adjacent(pairs[i].first, pairs[j].second)) return false;
    return true;
}

/// Lexicographically least reordering satisfying (v), if any: repeatedly take
/// the least pair whose "must come earlier" predecessors are all placed.
inline std::optional<std::vector<std::pair<VertexId, VertexId>>> cm_order(
    const Graph& g, std::vector<std::pair<VertexId, VertexId>> pairs) {
    const int h = static_cast<int>(pairs.size());
    std::sort(pairs.begin(), pairs.end());
    std::vector<std::vector<int>> pred(h);  // pred[j] = pairs that must precede j
    for (int a = 0; a < h; ++a)
        for (int b = 0; b < h; ++b)
            if (a != b && g.adjacent(pairs[a].first, pairs[b].second)) pred[b].push_back(a);
    std::vector<bool> placed(h, false);
    std::vector<std::pair<VertexId, VertexId>> out;
    for (int step = 0; step < h; ++step) {
        int pick = -1;
        for (int c = 0; c < h; ++c) {
            if (placed[c]) continue;
            bool ready = true;
            for (int p : pred[c])
                if (!placed[p]) {
                    ready = false;
                    break;
                }
            if (ready) {
                pick = c;
                break;
            }
        }
        if (pick < 0) return std::nullopt;  // cycle
        placed[pick] = true;
        out.push_back(pairs[pick]);
    }
    return out;
}

inline void matchings_rec(const Graph& g, const std::vector<VertexId>& cover,
                          const std::vector<VertexId>& ind, std::size_t idx,
                          std::vector<std::pair<VertexId, VertexId>>& current,
                          std::vector<bool>& used,
                          std::vector<std::vector<std::pair<VertexId, VertexId>>>& out) {
    if (idx == cover.size()) {
        out.push_back(current);
        return;
    }
    for (std::size_t z = 0; z < ind.size(); ++z) {
        if (used[z] || !g.adjacent(cover[idx], ind[z])) continue;
        used[z] = true;
        current.push_back({cover[idx], ind[z]});
        matchings_rec(g, cover, ind, idx + 1, current, used, out);
        current.pop_back();
        used[z] = false;
    }
}

}  // namespace detail

/// Searches for a labeling satisfying (i)-(iv), and (v) when requested,
/// returning the lexicographically least one under pair-list comparison.
inline std::optional<VwcLabeling> find_vwc_labeling(const Graph& g, bool require_cm_order) {
    if (g.has_isolated_vertex()) throw input_error("find_vwc_labeling: isolated vertex present");
    const int n = g.vertex_count();
    if (n == 0 || n % 2 != 0) return std::nullopt;
    const int h = n / 2;

    std::optional<std::vector<std::pair<VertexId, VertexId>>> best;
    for (const auto& cover : minimal_vertex_covers(g)) {
        if (static_cast<int>(cover.size()) != h) continue;
        std::uint64_t cmask = g.vertices_to_mask(cover);
        std::vector<VertexId> ind = g.mask_to_vertices(~cmask);

        std::vector<std::vector<std::pair<VertexId, VertexId>>> matchings;
        std::vector<std::pair<VertexId, VertexId>> current;
        std::vector<bool> used(ind.size(), false);
        detail::matchings_rec(g, cover, ind, 0, current, used, matchings);

        for (auto& pairs : matchings) {
            if (!detail::vwc_conditions_iii_iv(g, pairs)) continue;
            std::optional<std::vector<std::pair<VertexId, VertexId>>> candidate;
            if (require_cm_order) {
                candidate = detail::cm_order(g, pairs);
            } else {
                std::sort(pairs.begin(), pairs.end());
                candidate = pairs;
            }
            if (candidate && (!best || *candidate < *best)) best = candidate;
        }
    }
    if (!best) return std::nullopt;
    return VwcLabeling{*best, detail::vwc_condition_v(g, *best)};
}

}  // namespace symcover
