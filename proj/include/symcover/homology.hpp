#pragma once

#include <algorithm>
#include <cstdint>
#include <unordered_map>
#include <vector>

#include "symcover/exact_rank.hpp"
#include "symcover/simplicial.hpp"

namespace symcover {
namespace detail {

/// Faces of a complex grouped by dimension; slot d+1 holds the dimension-d
/// faces, so slot 0 is the empty face when present.
struct FaceTable {
    std::vector<std::vector<std::uint64_t>> by_dim;

    long long face_count() const {
        long long n = 0;
        for (const auto& v : by_dim) n += static_cast<long long>(v.size());
        return n;
    }
};

inline FaceTable group_faces(std::vector<std::uint64_t> faces) {
    FaceTable table;
    for (std::uint64_t f : faces) {
        int slot = __builtin_popcountll(f);
        if (slot >= static_cast<int>(table.by_dim.size())) table.by_dim.resize(slot + 1);
        table.by_dim[slot].push_back(f);
    }
    for (auto& v : table.by_dim) std::sort(v.begin(), v.end());
    return table;
}

/// Reduced homology ranks of the chain complex of a face table, indexed from
/// dimension -1 (slot 0) up to the top dimension. Uses the augmented complex,
/// so a lone empty face reports rank 1 in dimension -1.
inline std::vector<long long> chain_homology_ranks(const FaceTable& table,
                                                   const FieldSpec& field) {
    const int slots = static_cast<int>(table.by_dim.size());
    if (slots == 0) return {};
    // boundary_rank[s] = rank of the map from slot s to slot s-1
    std::vector<long long> boundary_rank(slots + 1, 0);
    for (int s = 1; s < slots; ++s) {
        const auto& lower = table.by_dim[s - 1];
        RankReducer reducer(field);
        std::vector<std::pair<std::int32_t, int>> col;
        for (std::uint64_t face : table.by_dim[s]) {
            col.clear();
            int sign = 1;
            for (std::uint64_t m = face; m; m &= m - 1) {
                std::uint64_t sub = face & ~(m & -m);
                auto it = std::lower_bound(lower.begin(), lower.end(), sub);
                col.push_back({static_cast<std::int32_t>(it - lower.begin()), sign});
                sign = -sign;
            }
            std::sort(col.begin(), col.end());
            reducer.add_column(col);
        }
        boundary_rank[s] = reducer.rank();
    }
    std::vector<long long> ranks(slots, 0);
    for (int s = 0; s < slots; ++s)
        ranks[s] = static_cast<long long>(table.by_dim[s].size()) - boundary_rank[s] -
                   boundary_rank[s + 1];
    return ranks;
}

}  // namespace detail

/// Dimensions of the reduced homology of a complex over the given field,
/// indexed by dimension -1 .. dim. The void complex yields an empty list.
inline std::vector<long long> reduced_homology_ranks(const SimplicialComplex& complex,
                                                     const FieldSpec& field) {
    if (complex.is_void()) return {};
    detail::FaceTable table = detail::group_faces(complex.face_masks());
    return detail::chain_homology_ranks(table, field);
}

namespace detail {

/// Complexes given by their minimal non-faces within a vertex mask: faces of
/// the direct complex avoid every listed support; faces of its Alexander dual
/// are the sets whose complement inside the mask still contains a support.
/// Homology is computed on whichever side has fewer faces, via combinatorial
/// Alexander duality.
struct SupportComplex {
    std::uint64_t world;                 // ambient vertex mask
    std::vector<std::uint64_t> supports; // nonempty, each contained in world

    int world_size() const { return __builtin_popcountll(world); }
};

inline void enumerate_direct_rec(const SupportComplex& sc,
                                 const std::vector<std::vector<std::uint64_t>>& by_vertex,
                                 std::uint64_t face, std::uint64_t candidates, long long cap,
                                 std::vector<std::uint64_t>& out, bool& over) {
    if (over) return;
    if (static_cast<long long>(out.size()) > cap) {
        over = true;
        return;
    }
    out.push_back(face);
    for (std::uint64_t rest = candidates; rest && !over;) {
        int v = __builtin_ctzll(rest);
        rest &= rest - 1;
        std::uint64_t extended = face | (std::uint64_t{1} << v);
        bool ok = true;
        for (std::uint64_t s : by_vertex[v])
            if ((s & extended) == s) {
                ok = false;
                break;
            }
        if (ok) enumerate_direct_rec(sc, by_vertex, extended, rest, cap, out, over);
    }
}

/// Faces avoiding every support; false when more than cap faces exist.
inline bool enumerate_direct(const SupportComplex& sc, long long cap,
                             std::vector<std::uint64_t>& out) {
    int n = 64 - __builtin_clzll(sc.world | 1);
    std::vector<std::vector<std::uint64_t>> by_vertex(n);
    for (std::uint64_t s : sc.supports) {
        int top = 63 - __builtin_clzll(s);
        by_vertex[top].push_back(s);
    }
    // a support is checked when its highest vertex joins the face, so DFS
    // must add vertices in increasing order
    bool over = false;
    out.clear();
    enumerate_direct_rec(sc, by_vertex, 0, sc.world, cap, out, over);
    return !over;
}

inline void enumerate_dual_rec(std::uint64_t face, std::uint64_t candidates,
                               const std::vector<std::uint64_t>& disjoint,
                               std::vector<std::uint64_t>& out) {
    out.push_back(face);
    for (std::uint64_t rest = candidates; rest;) {
        int v = __builtin_ctzll(rest);
        rest &= rest - 1;
        std::uint64_t bit = std::uint64_t{1} << v;
        std::vector<std::uint64_t> still;
        for (std::uint64_t s : disjoint)
            if (!(s & bit)) still.push_back(s);
        if (!still.empty()) enumerate_dual_rec(face | bit, rest, still, out);
    }
}

/// Faces of the Alexander dual inside the world mask: sets F with some
/// support disjoint from F.
inline void enumerate_dual(const SupportComplex& sc, std::vector<std::uint64_t>& out) {
    out.clear();
    if (sc.supports.empty()) return;
    enumerate_dual_rec(0, sc.world, sc.supports, out);
}

/// Reduced homology ranks of the direct complex, indexed from dimension -1.
/// Falls back to the dual complex when the direct side is larger, using
/// H~_d(direct) = H~_(w-d-3)(dual) over a field.
inline std::vector<long long> support_complex_homology(const SupportComplex& sc,
                                                       const FieldSpec& field,
                                                       long long face_budget) {
    const int w = sc.world_size();
    long long half = w >= 1 ? (1LL << (w - 1)) : 1;
    std::vector<std::uint64_t> faces;
    if (enumerate_direct(sc, std::min(half, face_budget), faces)) {
        return chain_homology_ranks(group_faces(std::move(faces)), field);
    }
    enumerate_dual(sc, faces);
    if (static_cast<long long>(faces.size()) > face_budget)
        throw resource_error("homology: face budget exceeded");
    std::vector<long long> dual = chain_homology_ranks(group_faces(std::move(faces)), field);
    // translate: rank in dual slot s (dimension s-1) lands in direct
    // dimension w - s - 2, i.e. direct slot w - s - 1
    std::vector<long long> ranks(w + 1, 0);
    for (int s = 0; s < static_cast<int>(dual.size()); ++s) {
        if (dual[s] == 0) continue;
        int slot = w - s - 1;
        if (slot < 0 || slot > w) throw internal_error("homology: dual translation out of range");
        ranks[slot] = dual[s];
    }
    while (!ranks.empty() && ranks.back() == 0) ranks.pop_back();
    return ranks;
}

}  // namespace detail
}  // namespace symcover
