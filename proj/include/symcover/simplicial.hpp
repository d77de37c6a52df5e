#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "symcover/graph.hpp"
#include "symcover/monomial.hpp"

namespace symcover {

/// Simplicial complex by its facet list. The void complex (no faces at all)
/// and the irrelevant complex {~} (single empty facet) are both representable
/// and distinct.
class SimplicialComplex {
public:
    SimplicialComplex() = default;

    SimplicialComplex(std::vector<VertexId> vertices, std::vector<std::vector<VertexId>> facets,
                      bool is_void = false)
        : vertices_(std::move(vertices)), void_(is_void) {
        std::sort(vertices_.begin(), vertices_.end());
        if (std::adjacent_find(vertices_.begin(), vertices_.end()) != vertices_.end())
            throw input_error("complex: duplicate vertex");
        if (void_) {
            if (!facets.empty()) throw input_error("complex: void complex has no facets");
            return;
        }
        for (auto& f : facets) {
            std::sort(f.begin(), f.end());
            f.erase(std::unique(f.begin(), f.end()), f.end());
            for (const auto& v : f)
                if (!std::binary_search(vertices_.begin(), vertices_.end(), v))
                    throw input_error("complex: facet vertex not in vertex list");
        }
        // keep only inclusion-maximal facets
        for (std::size_t i = 0; i < facets.size(); ++i) {
            bool maximal = true;
            for (std::size_t j = 0; j < facets.size() && maximal; ++j)
                if (j != i && facets[i] != facets[j] &&
                    std::includes(facets[j].begin(), facets[j].end(), facets[i].begin(),
                                  facets[i].end()))
                    maximal = false;
            if (maximal) facets_.push_back(facets[i]);
        }
        std::sort(facets_.begin(), facets_.end(), shortlex_less);
        facets_.erase(std::unique(facets_.begin(), facets_.end()), facets_.end());
        if (facets_.empty()) facets_.push_back({});  // empty facet list means {~}
    }

    static SimplicialComplex void_complex(std::vector<VertexId> vertices) {
        return SimplicialComplex(std::move(vertices), {}, true);
    }

    static SimplicialComplex irrelevant(std::vector<VertexId> vertices) {
        return SimplicialComplex(std::move(vertices), {{}});
    }

    static SimplicialComplex simplex(std::vector<VertexId> vertices) {
        auto all = vertices;
        return SimplicialComplex(std::move(vertices), {all});
    }

    const std::vector<VertexId>& vertices() const { return vertices_; }
    const std::vector<std::vector<VertexId>>& facets() const { return facets_; }

    bool is_void() const { return void_; }
    bool is_irrelevant() const { return !void_ && facets_.size() == 1 && facets_[0].empty(); }

    /// -1 for {~}; undefined (input_error) for the void complex.
    int dim() const {
        if (void_) throw input_error("complex: void complex has no dimension");
        int d = -1;
        for (const auto& f : facets_) d = std::max(d, static_cast<int>(f.size()) - 1);
        return d;
    }

    bool is_face(const std::vector<VertexId>& f) const {
        if (void_) return false;
        std::vector<VertexId> s = f;
        std::sort(s.begin(), s.end());
        for (const auto& facet : facets_)
            if (std::includes(facet.begin(), facet.end(), s.begin(), s.end())) return true;
        return false;
    }

    bool has_facet(const std::vector<VertexId>& f) const {
        return std::binary_search(facets_.begin(), facets_.end(), f, shortlex_less);
    }

    std::vector<std::uint64_t> facet_masks() const {
        std::vector<std::uint64_t> out;
        if (void_) return out;
        for (const auto& f : facets_) {
            std::uint64_t m = 0;
            for (const auto& v : f) m |= std::uint64_t{1} << index_of(v);
            out.push_back(m);
        }
        return out;
    }

    int index_of(const VertexId& v) const {
        auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v);
        if (it == vertices_.end() || *it != v) throw input_error("complex: unknown vertex");
        return static_cast<int>(it - vertices_.begin());
    }

    /// All faces as bitmasks, the empty face included (unless void).
    std::vector<std::uint64_t> face_masks() const {
        std::vector<std::uint64_t> out;
        if (void_) return out;
        std::unordered_set<std::uint64_t> seen;
        std::vector<std::uint64_t> stack = facet_masks();
        for (std::uint64_t f : stack) seen.insert(f);
        while (!stack.empty()) {
            std::uint64_t f = stack.back();
            stack.pop_back();
            for (std::uint64_t m = f; m;) {
                int v = __builtin_ctzll(m);
                m &= m - 1;
                std::uint64_t sub = f & ~(std::uint64_t{1} << v);
                if (seen.insert(sub).second) stack.push_back(sub);
            }
        }
        out.assign(seen.begin(), seen.end());
        std::sort(out.begin(), out.end(), detail::mask_shortlex_less);
        return out;
    }

    friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
        return a.void_ == b.void_ && a.vertices_ == b.vertices_ && a.facets_ == b.facets_;
    }

private:
    std::vector<VertexId> vertices_;
    std::vector<std::vector<VertexId>> facets_;
    bool void_ = false;
};

/// Faces are the independent sets of G.
inline SimplicialComplex independence_complex(const Graph& g) {
    return SimplicialComplex(g.vertices(), maximal_independent_sets(g));
}

/// Ideal of the minimal non-faces. Inverse of independence_complex on graph
/// inputs: the minimal non-faces of an independence complex are the edges.
inline MonomialIdeal stanley_reisner_ideal(const SimplicialComplex& complex) {
    if (complex.is_void()) return MonomialIdeal::unit(complex.vertices());
    const int n = static_cast<int>(complex.vertices().size());
    auto facets = complex.facet_masks();
    auto is_face = [&](std::uint64_t s) {
        for (std::uint64_t f : facets)
            if ((s & f) == s) return true;
        return false;
    };
    std::vector<std::uint64_t> nonfaces;
    for (std::uint64_t face : complex.face_masks()) {
        for (int v = 0; v < n; ++v) {
            std::uint64_t bit = std::uint64_t{1} << v;
            if (face & bit) continue;
            std::uint64_t cand = face | bit;
            if (is_face(cand)) continue;
            bool minimal = true;
            for (std::uint64_t m = cand; m && minimal;) {
                int u = __builtin_ctzll(m);
                m &= m - 1;
                if (!is_face(cand & ~(std::uint64_t{1} << u))) minimal = false;
            }
            if (minimal) nonfaces.push_back(cand);
        }
    }
    std::sort(nonfaces.begin(), nonfaces.end());
    nonfaces.erase(std::unique(nonfaces.begin(), nonfaces.end()), nonfaces.end());
    std::vector<Monomial> gens;
    for (std::uint64_t mask : nonfaces) {
        std::vector<Monomial::Entry> es;
        for (int v = 0; v < n; ++v)
            if ((mask >> v) & 1u) es.push_back({complex.vertices()[v], 1});
        gens.push_back(Monomial(std::move(es)));
    }
    return MonomialIdeal(complex.vertices(), std::move(gens));
}

/// Stanley-Reisner complex of a squarefree ideal: facets are the complements
/// of the minimal primes.
inline SimplicialComplex stanley_reisner_complex(const MonomialIdeal& ideal) {
    if (!ideal.is_squarefree()) throw input_error("stanley_reisner_complex: ideal not squarefree");
    if (ideal.is_zero()) return SimplicialComplex::simplex(ideal.ambient());
    if (ideal.is_unit()) return SimplicialComplex::void_complex(ideal.ambient());
    std::vector<std::vector<VertexId>> facets;
    for (const auto& prime : minimal_primes(ideal)) {
        std::vector<VertexId> facet;
        std::set_difference(ideal.ambient().begin(), ideal.ambient().end(), prime.begin(),
                            prime.end(), std::back_inserter(facet));
        facets.push_back(std::move(facet));
    }
    return SimplicialComplex(ideal.ambient(), std::move(facets));
}

inline SimplicialComplex link(const SimplicialComplex& complex, const std::vector<VertexId>& f) {
    if (!complex.is_face(f)) throw input_error("link: F is not a face");
    std::vector<VertexId> fs = f;
    std::sort(fs.begin(), fs.end());
    std::vector<VertexId> vs;
    std::set_difference(complex.vertices().begin(), complex.vertices().end(), fs.begin(), fs.end(),
                        std::back_inserter(vs));
    std::vector<std::vector<VertexId>> facets;
    for (const auto& facet : complex.facets()) {
        if (!std::includes(facet.begin(), facet.end(), fs.begin(), fs.end())) continue;
        std::vector<VertexId> rest;
        std::set_difference(facet.begin(), facet.end(), fs.begin(), fs.end(),
                            std::back_inserter(rest));
        facets.push_back(std::move(rest));
    }
    return SimplicialComplex(std::move(vs), std::move(facets));
}

inline SimplicialComplex deletion(const SimplicialComplex& complex,
                                  const std::vector<VertexId>& f) {
    if (complex.is_void()) return complex;
    std::vector<VertexId> fs = f;
    std::sort(fs.begin(), fs.end());
    std::vector<VertexId> vs;
    std::set_difference(complex.vertices().begin(), complex.vertices().end(), fs.begin(), fs.end(),
                        std::back_inserter(vs));
    std::vector<std::vector<VertexId>> facets;
    for (const auto& facet : complex.facets()) {
        std::vector<VertexId> rest;
        std::set_difference(facet.begin(), facet.end(), fs.begin(), fs.end(),
                            std::back_inserter(rest));
        facets.push_back(std::move(rest));
    }
    return SimplicialComplex(std::move(vs), std::move(facets));
}

inline bool is_pure(const SimplicialComplex& complex) {
    if (complex.is_void()) return true;
    for (const auto& f : complex.facets())
        if (f.size() != complex.facets().front().size()) return false;
    return true;
}

struct ShellabilityResult {
    SearchStatus status = SearchStatus::no;
    std::vector<std::vector<VertexId>> order;  // witness when status == yes
    long long nodes = 0;
};

namespace detail {

/// The shelling step condition: the intersections of the new facet with the
/// already placed ones must generate a pure complex of dimension one below
/// the new facet.
inline bool shelling_step_ok(const std::vector<std::uint64_t>& placed, std::uint64_t next) {
    int target = __builtin_popcountll(next) - 1;
    for (std::uint64_t p : placed) {
        std::uint64_t cap = p & next;
        bool dominated = false;
        for (std::uint64_t q : placed) {
            std::uint64_t big = q & next;
            if (__builtin_popcountll(big) == target && (cap & big) == cap) {
                dominated = true;
                break;
            }
        }
        if (!dominated) return false;
    }
    return true;
}

struct ShellingSearch {
    const std::vector<std::uint64_t>& facets;
    long long budget;
    long long nodes = 0;
    bool exhausted = false;
    std::vector<int> order;
    std::unordered_set<std::uint32_t> failed;

    ShellingSearch(const std::vector<std::uint64_t>& f, long long b) : facets(f), budget(b) {}

    bool dfs(std::uint32_t chosen, std::vector<std::uint64_t>& placed) {
        if (placed.size() == facets.size()) return true;
        if (failed.count(chosen)) return false;
        for (std::size_t i = 0; i < facets.size(); ++i) {
            if ((chosen >> i) & 1u) continue;
            if (++nodes > budget) {
                exhausted = true;
                return false;
            }
            if (!placed.empty() && !shelling_step_ok(placed, facets[i])) continue;
            placed.push_back(facets[i]);
            order.push_back(static_cast<int>(i));
            if (dfs(chosen | (std::uint32_t{1} << i), placed)) return true;
            if (exhausted) return false;
            placed.pop_back();
            order.pop_back();
        }
        failed.insert(chosen);
        return false;
    }
};

}  // namespace detail

/// Backtracking search for a shelling order. Nonpure complexes are accepted
/// and tested against the same literal step condition.
inline ShellabilityResult is_shellable(const SimplicialComplex& complex,
                                       long long budget = 10'000'000) {
    ShellabilityResult result;
    if (complex.is_void() || complex.facets().size() <= 1) {
        result.status = SearchStatus::yes;
        if (!complex.is_void()) result.order = complex.facets();
        return result;
    }
    if (complex.facets().size() > 20) {
        result.status = SearchStatus::budget_exhausted;
        return result;
    }
    auto masks = complex.facet_masks();
    detail::ShellingSearch search(masks, budget);
    std::vector<std::uint64_t> placed;
    bool found = search.dfs(0, placed);
    result.nodes = search.nodes;
    if (found) {
        result.status = SearchStatus::yes;
        for (int i : search.order) result.order.push_back(complex.facets()[i]);
    } else {
        result.status = search.exhausted ? SearchStatus::budget_exhausted : SearchStatus::no;
    }
    return result;
}

/// Rechecks a shelling order literally against the step condition.
inline bool validate_shelling(const SimplicialComplex& complex,
                              const std::vector<std::vector<VertexId>>& order) {
    auto sorted = order;
    for (auto& f : sorted) std::sort(f.begin(), f.end());
    std::sort(sorted.begin(), sorted.end(), shortlex_less);
    if (!(sorted == complex.facets())) return false;
    std::vector<std::uint64_t> placed;
    for (const auto& f : order) {
        std::uint64_t m = 0;
        for (const auto& v : f) m |= std::uint64_t{1} << complex.index_of(v);
        if (!placed.empty() && !detail::shelling_step_ok(placed, m)) return false;
        placed.push_back(m);
    }
    return true;
}

namespace detail {

inline std::string complex_memo_key(const SimplicialComplex& c) {
    std::string key = std::to_string(c.vertices().size());
    for (std::uint64_t f : c.facet_masks()) {
        key += ';';
        key += std::to_string(f);
    }
    return key;
}

inline bool is_vertex_decomposable_impl(const SimplicialComplex& complex,
                                        std::unordered_map<std::string, bool>& memo) {
    if (complex.is_void() || complex.facets().size() == 1) return true;  // simplex
    std::string key = complex_memo_key(complex);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    bool ok = false;
    for (const auto& v : complex.vertices()) {
        if (!complex.is_face({v})) continue;
        SimplicialComplex del = deletion(complex, {v});
        // shedding condition: no facet of the deletion may be swallowed by a
        // facet of the original complex through v
        bool shedding = true;
        for (const auto& f : del.facets())
            if (!complex.has_facet(f)) {
                shedding = false;
                break;
            }
        if (!shedding) continue;
        if (is_vertex_decomposable_impl(del, memo) &&
            is_vertex_decomposable_impl(link(complex, {v}), memo)) {
            ok = true;
            break;
        }
    }
    memo[key] = ok;
    return ok;
}

}  // namespace detail

/// Recursive test: a simplex, or some vertex whose deletion and link are both
/// vertex decomposable while the deletion keeps every one of its facets a
/// facet of the whole complex.
inline bool is_vertex_decomposable(const SimplicialComplex& complex) {
    std::unordered_map<std::string, bool> memo;
    return detail::is_vertex_decomposable_impl(complex, memo);
}

/// Alexander dual, realized through the Stanley-Reisner translation.
inline SimplicialComplex alexander_dual_complex(const SimplicialComplex& complex) {
    if (complex.is_void()) return SimplicialComplex::simplex(complex.vertices());
    MonomialIdeal ideal = stanley_reisner_ideal(complex);
    if (ideal.is_zero()) return SimplicialComplex::void_complex(complex.vertices());
    if (ideal.is_unit()) return SimplicialComplex::simplex(complex.vertices());
    return stanley_reisner_complex(alexander_dual(ideal));
}

}  // namespace symcover
