#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "symcover/graph.hpp"
#include "symcover/ids.hpp"

namespace symcover {

/// Monomial as a sparse exponent vector over (base, level) variables.
/// The unit monomial has no entries; stored exponents are positive.
class Monomial {
public:
    using Entry = std::pair<VertexId, int>;

    Monomial() = default;

    explicit Monomial(std::vector<Entry> entries) {
        std::sort(entries.begin(), entries.end());
        for (const auto& [v, e] : entries) {
            if (e < 0) throw input_error("monomial: negative exponent");
            if (e == 0) continue;
            if (!exps_.empty() && exps_.back().first == v)
                exps_.back().second += e;
            else
                exps_.push_back({v, e});
        }
    }

    static Monomial unit() { return Monomial(); }

    static Monomial variable(VertexId v, int e = 1) { return Monomial({{v, e}}); }

    const std::vector<Entry>& exponents() const { return exps_; }

    bool is_unit() const { return exps_.empty(); }

    int degree() const {
        int d = 0;
        for (const auto& [v, e] : exps_) d += e;
        return d;
    }

    int exponent(const VertexId& v) const {
        auto it = std::lower_bound(exps_.begin(), exps_.end(), Entry{v, 0},
                                   [](const Entry& a, const Entry& b) { return a.first < b.first; });
        return (it != exps_.end() && it->first == v) ? it->second : 0;
    }

    bool is_squarefree() const {
        for (const auto& [v, e] : exps_)
            if (e > 1) return false;
        return true;
    }

    bool divides(const Monomial& other) const {
        auto it = other.exps_.begin();
        for (const auto& [v, e] : exps_) {
            while (it != other.exps_.end() && it->first < v) ++it;
            if (it == other.exps_.end() || it->first != v || it->second < e) return false;
        }
        return true;
    }

    std::vector<VertexId> support() const {
        std::vector<VertexId> out;
        out.reserve(exps_.size());
        for (const auto& [v, e] : exps_) out.push_back(v);
        return out;
    }

    friend Monomial operator*(const Monomial& a, const Monomial& b) {
        return merge(a, b, [](int x, int y) { return x + y; });
    }

    static Monomial gcd(const Monomial& a, const Monomial& b) {
        Monomial out;
        auto ib = b.exps_.begin();
        for (const auto& [v, e] : a.exps_) {
            while (ib != b.exps_.end() && ib->first < v) ++ib;
            if (ib != b.exps_.end() && ib->first == v)
                out.exps_.push_back({v, std::min(e, ib->second)});
        }
        return out;
    }

    static Monomial lcm(const Monomial& a, const Monomial& b) {
        return merge(a, b, [](int x, int y) { return std::max(x, y); });
    }

    /// this / gcd(this, u): the colon quotient used throughout.
    Monomial quotient_by(const Monomial& u) const {
        Monomial g = gcd(*this, u);
        Monomial out;
        auto ig = g.exps_.begin();
        for (const auto& [v, e] : exps_) {
            while (ig != g.exps_.end() && ig->first < v) ++ig;
            int sub = (ig != g.exps_.end() && ig->first == v) ? ig->second : 0;
            if (e - sub > 0) out.exps_.push_back({v, e - sub});
        }
        return out;
    }

    /// Graded order: degree first, then lexicographic with the larger
    /// exponent on the earliest differing variable coming first.
    friend bool operator<(const Monomial& a, const Monomial& b) {
        int da = a.degree(), db = b.degree();
        if (da != db) return da < db;
        auto ia = a.exps_.begin(), ib = b.exps_.begin();
        while (ia != a.exps_.end() && ib != b.exps_.end()) {
            if (ia->first != ib->first) return ia->first < ib->first;
            if (ia->second != ib->second) return ia->second > ib->second;
            ++ia;
            ++ib;
        }
        return ia != a.exps_.end();
    }

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.exps_ == b.exps_; }

    std::string str() const {
        if (exps_.empty()) return "1";
        std::string out;
        for (const auto& [v, e] : exps_) {
            if (!out.empty()) out += '*';
            out += "x" + to_string(v);
            if (e > 1) out += "^" + std::to_string(e);
        }
        return out;
    }

private:
    template <typename Op>
    static Monomial merge(const Monomial& a, const Monomial& b, Op op) {
        Monomial out;
        auto ia = a.exps_.begin(), ib = b.exps_.begin();
        while (ia != a.exps_.end() || ib != b.exps_.end()) {
            if (ib == b.exps_.end() || (ia != a.exps_.end() && ia->first < ib->first)) {
                int e = op(ia->second, 0);
                if (e) out.exps_.push_back({ia->first, e});
                ++ia;
            } else if (ia == a.exps_.end() || ib->first < ia->first) {
                int e = op(0, ib->second);
                if (e) out.exps_.push_back({ib->first, e});
                ++ib;
            } else {
                int e = op(ia->second, ib->second);
                if (e) out.exps_.push_back({ia->first, e});
                ++ia;
                ++ib;
            }
        }
        return out;
    }

    std::vector<Entry> exps_;
};

/// Monomial ideal held by its minimal generators over an explicit ambient
/// variable list. The zero ideal has no generators; the unit ideal is
/// generated by the unit monomial.
class MonomialIdeal {
public:
    MonomialIdeal() = default;

    MonomialIdeal(std::vector<VertexId> ambient, std::vector<Monomial> gens)
        : ambient_(std::move(ambient)) {
        std::sort(ambient_.begin(), ambient_.end());
        if (std::adjacent_find(ambient_.begin(), ambient_.end()) != ambient_.end())
            throw input_error("ideal: duplicate ambient variable");
        for (const auto& m : gens)
            for (const auto& v : m.support())
                if (!std::binary_search(ambient_.begin(), ambient_.end(), v))
                    throw input_error("ideal: generator variable x" + to_string(v) +
                                      " not in ambient");
        gens_ = reduce(std::move(gens));
    }

    static MonomialIdeal zero(std::vector<VertexId> ambient) {
        return MonomialIdeal(std::move(ambient), {});
    }

    static MonomialIdeal unit(std::vector<VertexId> ambient) {
        return MonomialIdeal(std::move(ambient), {Monomial::unit()});
    }

    const std::vector<VertexId>& ambient() const { return ambient_; }
    const std::vector<Monomial>& generators() const { return gens_; }

    bool is_zero() const { return gens_.empty(); }
    bool is_unit() const { return gens_.size() == 1 && gens_.front().is_unit(); }
    bool is_proper() const { return !is_unit(); }

    bool is_squarefree() const {
        for (const auto& g : gens_)
            if (!g.is_squarefree()) return false;
        return true;
    }

    /// Membership: divisible by some minimal generator.
    bool contains(const Monomial& m) const {
        for (const auto& g : gens_)
            if (g.divides(m)) return true;
        return false;
    }

    friend bool operator==(const MonomialIdeal& a, const MonomialIdeal& b) {
        return a.ambient_ == b.ambient_ && a.gens_ == b.gens_;
    }

    /// Generator-set equality, ignoring the ambient lists.
    static bool same_generators(const MonomialIdeal& a, const MonomialIdeal& b) {
        return a.gens_ == b.gens_;
    }

private:
    /// Keeps only divisibility-minimal monomials, deduplicated and sorted.
    static std::vector<Monomial> reduce(std::vector<Monomial> gens) {
        std::sort(gens.begin(), gens.end());
        gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
        std::vector<Monomial> out;
        for (std::size_t i = 0; i < gens.size(); ++i) {
            bool redundant = false;
            for (std::size_t j = 0; j < gens.size() && !redundant; ++j)
                if (j != i && gens[j].divides(gens[i]) && !(gens[i] == gens[j]))
                    redundant = true;
            if (!redundant) out.push_back(gens[i]);
        }
        return out;
    }

    std::vector<VertexId> ambient_;
    std::vector<Monomial> gens_;
};

inline MonomialIdeal minimalize(std::vector<Monomial> gens, std::vector<VertexId> ambient) {
    return MonomialIdeal(std::move(ambient), std::move(gens));
}

inline MonomialIdeal edge_ideal(const Graph& g) {
    std::vector<Monomial> gens;
    for (const auto& [u, v] : g.edges()) gens.push_back(Monomial({{u, 1}, {v, 1}}));
    return MonomialIdeal(g.vertices(), std::move(gens));
}

inline MonomialIdeal cover_ideal(const Graph& g) {
    std::vector<Monomial> gens;
    for (const auto& cover : minimal_vertex_covers(g)) {
        std::vector<Monomial::Entry> es;
        for (const auto& v : cover) es.push_back({v, 1});
        gens.push_back(Monomial(std::move(es)));
    }
    return MonomialIdeal(g.vertices(), std::move(gens));
}

inline MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b) {
    if (a.ambient() != b.ambient()) throw input_error("intersect: ambient mismatch");
    std::vector<Monomial> gens;
    gens.reserve(a.generators().size() * b.generators().size());
    for (const auto& ga : a.generators())
        for (const auto& gb : b.generators()) gens.push_back(Monomial::lcm(ga, gb));
    return MonomialIdeal(a.ambient(), std::move(gens));
}

inline MonomialIdeal power(const MonomialIdeal& ideal, int k) {
    if (k < 1) throw input_error("power: k must be >= 1");
    MonomialIdeal out = ideal;
    for (int i = 1; i < k; ++i) {
        std::vector<Monomial> gens;
        gens.reserve(out.generators().size() * ideal.generators().size());
        for (const auto& ga : out.generators())
            for (const auto& gb : ideal.generators()) gens.push_back(ga * gb);
        out = MonomialIdeal(ideal.ambient(), std::move(gens));
    }
    return out;
}

namespace detail {

inline void transversal_rec(const std::vector<std::uint64_t>& supports, std::uint64_t chosen,
                            std::uint64_t excluded, std::vector<std::uint64_t>& out) {
    for (std::uint64_t s : supports) {
        if (s & chosen) continue;
        // branch on the vertices of the first uncovered support
        std::uint64_t cand = s & ~excluded;
        std::uint64_t done = 0;
        while (cand) {
            int v = __builtin_ctzll(cand);
            cand &= cand - 1;
            std::uint64_t bit = std::uint64_t{1} << v;
            transversal_rec(supports, chosen | bit, excluded | done, out);
            done |= bit;
        }
        return;
    }
    out.push_back(chosen);
}

/// Inclusion-minimal transversals of a family of nonempty vertex sets.
inline std::vector<std::uint64_t> minimal_transversals(const std::vector<std::uint64_t>& supports) {
    std::vector<std::uint64_t> raw;
    transversal_rec(supports, 0, 0, raw);
    std::sort(raw.begin(), raw.end(), mask_shortlex_less);
    raw.erase(std::unique(raw.begin(), raw.end()), raw.end());
    std::vector<std::uint64_t> out;
    for (std::size_t i = 0; i < raw.size(); ++i) {
        bool minimal = true;
        for (std::size_t j = 0; j < raw.size() && minimal; ++j)
            if (j != i && (raw[j] & raw[i]) == raw[j] && raw[j] != raw[i]) minimal = false;
        if (minimal) out.push_back(raw[i]);
    }
    return out;
}

}  // namespace detail

/// Variable sets of the irredundant prime decomposition of a squarefree
/// ideal: the minimal transversals of the generator supports.
inline std::vector<std::vector<VertexId>> minimal_primes(const MonomialIdeal& ideal) {
    if (ideal.is_zero() || ideal.is_unit())
        throw input_error("minimal_primes: ideal must be proper and nonzero");
    if (!ideal.is_squarefree()) throw input_error("minimal_primes: ideal must be squarefree");
    const auto& amb = ideal.ambient();
    std::vector<std::uint64_t> supports;
    for (const auto& g : ideal.generators()) {
        std::uint64_t m = 0;
        for (const auto& v : g.support()) {
            auto it = std::lower_bound(amb.begin(), amb.end(), v);
            m |= std::uint64_t{1} << (it - amb.begin());
        }
        supports.push_back(m);
    }
    std::vector<std::vector<VertexId>> out;
    for (std::uint64_t mask : detail::minimal_transversals(supports)) {
        std::vector<VertexId> prime;
        for (std::size_t i = 0; i < amb.size(); ++i)
            if ((mask >> i) & 1u) prime.push_back(amb[i]);
        out.push_back(std::move(prime));
    }
    return out;
}

namespace detail {

inline void degree_k_monomials_rec(const std::vector<VertexId>& vars, std::size_t idx, int left,
                                   std::vector<Monomial::Entry>& current,
                                   std::vector<Monomial>& out) {
    if (left == 0) {
        out.push_back(Monomial(current));
        return;
    }
    if (idx == vars.size()) return;
    for (int e = (idx + 1 == vars.size()) ? left : 0; e <= left; ++e) {
        if (e) current.push_back({vars[idx], e});
        degree_k_monomials_rec(vars, idx + 1, left - e, current, out);
        if (e) current.pop_back();
    }
}

}  // namespace detail

/// k-th symbolic power of a squarefree ideal: the intersection of the k-th
/// powers of its minimal primes.
inline MonomialIdeal symbolic_power(const MonomialIdeal& ideal, int k) {
    if (k < 1) throw input_error("symbolic_power: k must be >= 1");
    auto primes = minimal_primes(ideal);
    MonomialIdeal out = MonomialIdeal::unit(ideal.ambient());
    for (const auto& prime : primes) {
        std::vector<Monomial> gens;
        std::vector<Monomial::Entry> current;
        detail::degree_k_monomials_rec(prime, 0, k, current, gens);
        out = intersect(out, MonomialIdeal(ideal.ambient(), std::move(gens)));
    }
    return out;
}

inline MonomialIdeal colon(const MonomialIdeal& ideal, const Monomial& u) {
    std::vector<Monomial> gens;
    gens.reserve(ideal.generators().size());
    for (const auto& g : ideal.generators()) gens.push_back(g.quotient_by(u));
    return MonomialIdeal(ideal.ambient(), std::move(gens));
}

/// I intersected with the subring without v: the generators avoiding v, in
/// the smaller ambient.
inline MonomialIdeal restrict(const MonomialIdeal& ideal, const VertexId& v) {
    const auto& amb = ideal.ambient();
    if (!std::binary_search(amb.begin(), amb.end(), v))
        throw input_error("restrict: unknown variable x" + to_string(v));
    std::vector<VertexId> small;
    for (const auto& w : amb)
        if (w != v) small.push_back(w);
    std::vector<Monomial> gens;
    for (const auto& g : ideal.generators())
        if (g.exponent(v) == 0) gens.push_back(g);
    return MonomialIdeal(std::move(small), std::move(gens));
}

/// Alexander dual of a squarefree ideal: generators are the products over
/// its minimal primes. An involution.
inline MonomialIdeal alexander_dual(const MonomialIdeal& ideal) {
    std::vector<Monomial> gens;
    for (const auto& prime : minimal_primes(ideal)) {
        std::vector<Monomial::Entry> es;
        for (const auto& v : prime) es.push_back({v, 1});
        gens.push_back(Monomial(std::move(es)));
    }
    return MonomialIdeal(ideal.ambient(), std::move(gens));
}

/// Squarefree lift spreading x_i^a over the level block x_{i,1}..x_{i,a}.
/// Returns the lifted ideal plus the map from each original variable to its
/// level block. Inputs must be unpolarized (all levels 1).
inline std::pair<MonomialIdeal, std::map<VertexId, std::vector<VertexId>>> polarize(
    const MonomialIdeal& ideal) {
    if (ideal.is_zero() || ideal.is_unit()) return {ideal, {}};
    for (const auto& v : ideal.ambient())
        if (v.level != 1) throw input_error("polarize: input already has level structure");
    std::map<VertexId, int> maxexp;
    for (const auto& g : ideal.generators())
        for (const auto& [v, e] : g.exponents()) maxexp[v] = std::max(maxexp[v], e);
    std::map<VertexId, std::vector<VertexId>> blocks;
    std::vector<VertexId> ambient;
    for (const auto& [v, a] : maxexp) {
        auto& block = blocks[v];
        for (int t = 1; t <= a; ++t) {
            block.push_back({v.base, t});
            ambient.push_back({v.base, t});
        }
    }
    std::vector<Monomial> gens;
    for (const auto& g : ideal.generators()) {
        std::vector<Monomial::Entry> es;
        for (const auto& [v, e] : g.exponents())
            for (int t = 1; t <= e; ++t) es.push_back({{v.base, t}, 1});
        gens.push_back(Monomial(std::move(es)));
    }
    return {MonomialIdeal(std::move(ambient), std::move(gens)), std::move(blocks)};
}

enum class SearchStatus { yes, no, budget_exhausted };

struct LinearQuotientsResult {
    SearchStatus status = SearchStatus::no;
    std::vector<Monomial> order;  // witness when status == yes
    long long nodes = 0;
};

namespace detail {

struct LinearQuotientsSearch {
    const std::vector<Monomial>& gens;
    long long budget;
    long long nodes = 0;
    bool exhausted = false;
    std::vector<int> order;
    std::unordered_set<std::string> failed;  // chosen-set keys with no completion

    explicit LinearQuotientsSearch(const std::vector<Monomial>& g, long long b)
        : gens(g), budget(b) {}

    std::string key(const std::vector<bool>& chosen) const {
        std::string k((chosen.size() + 7) / 8, '\0');
        for (std::size_t i = 0; i < chosen.size(); ++i)
            if (chosen[i]) k[i / 8] |= static_cast<char>(1 << (i % 8));
        return k;
    }

    // (gens in chosen) : gens[i] is variable-generated iff for every chosen j
    // some chosen m has quotient a single variable dividing j's quotient.
    bool appendable(const std::vector<bool>& chosen, int i) {
        std::vector<Monomial> quot;
        std::vector<std::size_t> idx;
        for (std::size_t j = 0; j < gens.size(); ++j)
            if (chosen[j]) {
                quot.push_back(gens[j].quotient_by(gens[i]));
                idx.push_back(j);
            }
        for (std::size_t a = 0; a < quot.size(); ++a) {
            bool covered = false;
            for (std::size_t b = 0; b < quot.size() && !covered; ++b)
                if (quot[b].degree() == 1 && quot[b].divides(quot[a])) covered = true;
            if (!covered) return false;
        }
        return true;
    }

    bool dfs(std::vector<bool>& chosen, int count) {
        if (count == static_cast<int>(gens.size())) return true;
        std::string k = key(chosen);
        if (failed.count(k)) return false;
        for (std::size_t i = 0; i < gens.size(); ++i) {
            if (chosen[i]) continue;
            if (++nodes > budget) {
                exhausted = true;
                return false;
            }
            if (!appendable(chosen, static_cast<int>(i))) continue;
            chosen[i] = true;
            order.push_back(static_cast<int>(i));
            if (dfs(chosen, count + 1)) return true;
            if (exhausted) return false;
            chosen[i] = false;
            order.pop_back();
        }
        failed.insert(std::move(k));
        return false;
    }
};

}  // namespace detail

/// Exact backtracking search for a linear-quotient order of G(I).
/// "no" is reported only after the search tree is exhausted; running out of
/// budget is a distinct outcome.
inline LinearQuotientsResult has_linear_quotients(const MonomialIdeal& ideal,
                                                  long long budget = 10'000'000) {
    if (ideal.is_zero() || ideal.is_unit())
        throw input_error("has_linear_quotients: ideal must be proper and nonzero");
    // Seed order: generators are already sorted by degree then lexicographically.
    const auto& gens = ideal.generators();
    LinearQuotientsResult result;
    if (gens.size() == 1) {
        result.status = SearchStatus::yes;
        result.order = gens;
        return result;
    }
    detail::LinearQuotientsSearch search(gens, budget);
    std::vector<bool> chosen(gens.size(), false);
    bool found = search.dfs(chosen, 0);
    result.nodes = search.nodes;
    if (found) {
        result.status = SearchStatus::yes;
        for (int i : search.order) result.order.push_back(gens[i]);
    } else {
        result.status = search.exhausted ? SearchStatus::budget_exhausted : SearchStatus::no;
    }
    return result;
}

/// Literal recheck that an order witnesses linear quotients: each colon into
/// the predecessors must be generated by variables.
inline bool validate_linear_quotient_order(const MonomialIdeal& ideal,
                                           const std::vector<Monomial>& order) {
    std::vector<Monomial> sorted = order;
    std::sort(sorted.begin(), sorted.end());
    if (!(sorted == ideal.generators())) return false;
    for (std::size_t i = 1; i < order.size(); ++i) {
        std::vector<Monomial> quot;
        for (std::size_t j = 0; j < i; ++j) quot.push_back(order[j].quotient_by(order[i]));
        MonomialIdeal c = minimalize(quot, ideal.ambient());
        for (const auto& g : c.generators())
            if (g.degree() != 1) return false;
    }
    return true;
}

inline int deg_max(const MonomialIdeal& ideal) {
    if (ideal.is_zero()) throw input_error("deg_max: zero ideal");
    int d = 0;
    for (const auto& g : ideal.generators()) d = std::max(d, g.degree());
    return d;
}

}  // namespace symcover
