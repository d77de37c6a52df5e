#pragma once

#include <algorithm>
#include <climits>
#include <cstdint>
#include <map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "symcover/homology.hpp"
#include "symcover/monomial.hpp"
#include "symcover/simplicial.hpp"

namespace symcover {

struct HochsterOptions {
    int ambient_cap = 20;             // largest ambient for subset enumeration
    long long face_budget = 2'000'000;  // per-subcomplex face ceiling
};

/// Graded Betti numbers of an ideal or of its quotient ring, over a fixed
/// coefficient field. Entries with rank zero are absent.
struct BettiTable {
    enum class Subject { ideal, quotient };

    Subject subject = Subject::ideal;
    int ambient_size = 0;
    FieldSpec field;
    std::map<std::pair<int, int>, long long> entries;  // (i, j) -> rank

    long long rank(int i, int j) const {
        auto it = entries.find({i, j});
        return it == entries.end() ? 0 : it->second;
    }
};

/// Betti numbers of a squarefree ideal from reduced homology of the induced
/// subcomplexes of its Stanley-Reisner complex. Only vertex subsets that are
/// unions of generator supports can contribute: any other induced subcomplex
/// is a cone and therefore acyclic.
inline BettiTable betti_table_squarefree(const MonomialIdeal& ideal, const FieldSpec& field,
                                         const HochsterOptions& opts = {}) {
    BettiTable table;
    table.subject = BettiTable::Subject::ideal;
    table.ambient_size = static_cast<int>(ideal.ambient().size());
    table.field = field;
    if (ideal.is_zero()) return table;
    if (ideal.is_unit()) throw input_error("betti: unit ideal has no minimal resolution here");
    if (!ideal.is_squarefree()) throw input_error("betti: ideal must be squarefree");

    const auto& amb = ideal.ambient();
    const int n = static_cast<int>(amb.size());
    if (n > opts.ambient_cap || n > 62)
        throw resource_error("betti: ambient exceeds the enumeration cap (" +
                             std::to_string(opts.ambient_cap) + " variables)");

    std::vector<std::uint64_t> supports;
    for (const auto& g : ideal.generators()) {
        std::uint64_t m = 0;
        for (const auto& v : g.support()) {
            auto it = std::lower_bound(amb.begin(), amb.end(), v);
            m |= std::uint64_t{1} << (it - amb.begin());
        }
        supports.push_back(m);
    }

    // union closure of the generator supports
    std::unordered_set<std::uint64_t> closure(supports.begin(), supports.end());
    std::vector<std::uint64_t> queue(closure.begin(), closure.end());
    while (!queue.empty()) {
        std::uint64_t w = queue.back();
        queue.pop_back();
        for (std::uint64_t s : supports) {
            std::uint64_t u = w | s;
            if (closure.insert(u).second) queue.push_back(u);
        }
    }
    std::vector<std::uint64_t> worlds(closure.begin(), closure.end());
    std::sort(worlds.begin(), worlds.end());

    for (std::uint64_t w : worlds) {
        detail::SupportComplex sc;
        sc.world = w;
        for (std::uint64_t s : supports)
            if ((s & w) == s) sc.supports.push_back(s);
        int j = __builtin_popcountll(w);
        std::vector<long long> ranks = detail::support_complex_homology(sc, field, opts.face_budget);
        for (int slot = 0; slot < static_cast<int>(ranks.size()); ++slot) {
            if (ranks[slot] == 0) continue;
            int i = j - slot - 1;  // homological degree for homology in dimension slot-1
            if (i < 0) throw internal_error("betti: negative homological degree");
            table.entries[{i, j}] += ranks[slot];
        }
    }

    // cross-check the generator row
    std::map<int, long long> by_degree;
    for (const auto& g : ideal.generators()) ++by_degree[g.degree()];
    for (const auto& [d, cnt] : by_degree)
        if (table.rank(0, d) != cnt)
            throw internal_error("betti: beta_{0,j} disagrees with the generator count");
    for (const auto& [ij, r] : table.entries)
        if (ij.first == 0 && by_degree[ij.second] == 0)
            throw internal_error("betti: spurious beta_{0,j} entry");

    return table;
}

/// Betti numbers of an arbitrary monomial ideal via its squarefree lift,
/// which preserves every beta_{i,j}.
inline BettiTable betti_table(const MonomialIdeal& ideal, const FieldSpec& field,
                              const HochsterOptions& opts = {}) {
    if (ideal.is_unit()) throw input_error("betti: unit ideal has no minimal resolution here");
    BettiTable table;
    if (ideal.is_zero() || ideal.is_squarefree()) {
        table = betti_table_squarefree(ideal, field, opts);
    } else {
        table = betti_table_squarefree(polarize(ideal).first, field, opts);
    }
    table.ambient_size = static_cast<int>(ideal.ambient().size());
    return table;
}

/// Table of S/I from the table of I: a homological shift plus the rank-one
/// generator in position (0,0).
inline BettiTable quotient_table(const BettiTable& ideal_table) {
    if (ideal_table.subject != BettiTable::Subject::ideal)
        throw input_error("quotient_table: expected an ideal table");
    BettiTable out;
    out.subject = BettiTable::Subject::quotient;
    out.ambient_size = ideal_table.ambient_size;
    out.field = ideal_table.field;
    out.entries[{0, 0}] = 1;
    for (const auto& [ij, r] : ideal_table.entries) out.entries[{ij.first + 1, ij.second}] = r;
    return out;
}

inline int regularity(const BettiTable& table) {
    if (table.entries.empty()) throw input_error("regularity: empty table");
    int reg = INT_MIN;
    for (const auto& [ij, r] : table.entries) reg = std::max(reg, ij.second - ij.first);
    return reg;
}

inline int projective_dimension(const BettiTable& table) {
    if (table.entries.empty()) throw input_error("projective_dimension: empty table");
    int pd = 0;
    for (const auto& [ij, r] : table.entries) pd = std::max(pd, ij.first);
    return pd;
}

inline int depth_of_quotient(const BettiTable& table) {
    if (table.subject != BettiTable::Subject::quotient)
        throw input_error("depth: expected a quotient table");
    return table.ambient_size - projective_dimension(table);
}

/// True when all generators share one degree d and every table entry sits on
/// the diagonal j - i = d. Mixed generator degrees short-circuit to false.
inline bool has_linear_resolution(const MonomialIdeal& ideal, const FieldSpec& field,
                                  const HochsterOptions& opts = {}) {
    if (ideal.is_zero() || ideal.is_unit())
        throw input_error("has_linear_resolution: ideal must be proper and nonzero");
    const int d = ideal.generators().front().degree();
    for (const auto& g : ideal.generators())
        if (g.degree() != d) return false;
    BettiTable table = betti_table(ideal, field, opts);
    for (const auto& [ij, r] : table.entries)
        if (ij.second - ij.first != d) return false;
    return true;
}

namespace detail {

/// Reisner criterion: every link (the empty face included) must have
/// vanishing reduced homology below its own dimension. Cone links are
/// acyclic and are skipped without a rank computation.
inline bool reisner_cohen_macaulay(const SimplicialComplex& complex, const FieldSpec& field) {
    if (complex.is_irrelevant()) return true;
    auto facets = complex.facet_masks();
    auto faces = complex.face_masks();
    // larger faces have smaller links; check them first
    std::sort(faces.begin(), faces.end(),
              [](std::uint64_t a, std::uint64_t b) { return mask_shortlex_less(b, a); });
    for (std::uint64_t face : faces) {
        std::vector<std::uint64_t> link_facets;
        std::uint64_t common = ~std::uint64_t{0};
        int dimlk = -1;
        for (std::uint64_t f : facets) {
            if ((f & face) != face) continue;
            std::uint64_t rest = f & ~face;
            link_facets.push_back(rest);
            common &= rest;
            dimlk = std::max(dimlk, __builtin_popcountll(rest) - 1);
        }
        if (dimlk <= 0) continue;   // nothing below dimension 0 but H~_{-1}, which needs a
                                    // nonempty complex only
        if (common != 0) continue;  // cone
        std::unordered_set<std::uint64_t> seen(link_facets.begin(), link_facets.end());
        std::vector<std::uint64_t> stack(link_facets.begin(), link_facets.end());
        while (!stack.empty()) {
            std::uint64_t f = stack.back();
            stack.pop_back();
            for (std::uint64_t m = f; m; m &= m - 1) {
                std::uint64_t sub = f & ~(m & -m);
                if (seen.insert(sub).second) stack.push_back(sub);
            }
        }
        std::vector<std::uint64_t> link_faces(seen.begin(), seen.end());
        std::vector<long long> ranks = chain_homology_ranks(group_faces(std::move(link_faces)), field);
        for (int slot = 0; slot <= dimlk && slot < static_cast<int>(ranks.size()); ++slot)
            if (ranks[slot] != 0) return false;
    }
    return true;
}

}  // namespace detail

/// Cohen-Macaulayness of a complex, established two independent ways: the
/// Reisner homological criterion, and linearity of the resolution of the
/// Stanley-Reisner ideal of the Alexander dual. Disagreement is an internal
/// consistency failure.
inline bool is_cohen_macaulay(const SimplicialComplex& complex, const FieldSpec& field,
                              const HochsterOptions& opts = {}) {
    if (complex.is_void()) throw input_error("is_cohen_macaulay: void complex");
    bool reisner = detail::reisner_cohen_macaulay(complex, field);
    MonomialIdeal sr = stanley_reisner_ideal(complex);
    bool dual_linear;
    if (sr.is_zero()) {
        dual_linear = true;  // simplex
    } else {
        dual_linear = has_linear_resolution(alexander_dual(sr), field, opts);
    }
    if (reisner != dual_linear)
        throw internal_error("is_cohen_macaulay: Reisner and Eagon-Reiner routes disagree");
    return reisner;
}

}  // namespace symcover
