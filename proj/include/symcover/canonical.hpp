#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "symcover/graph.hpp"

namespace symcover {

namespace detail {

/// Lexicographic minimization of the upper-triangle adjacency bitstring over
/// all vertex permutations, by branch and bound. Positions are revealed
/// column by column: placing position t reveals the t bits pairing it with
/// positions 0..t-1; earlier bits are more significant.
class CanonicalSearch {
public:
    CanonicalSearch(const std::vector<std::uint64_t>& adj, int n) : adj_(adj), n_(n) {
        total_bits_ = n_ * (n_ - 1) / 2;
        best_ = ~std::uint64_t{0};
        perm_.assign(n_, -1);
        used_ = 0;
        run(0, 0, 0);
    }

    std::uint64_t best() const { return total_bits_ ? (best_ >> (64 - total_bits_)) : 0; }

private:
    // enc keeps revealed bits left-aligned in a 64-bit word.
    void run(int t, std::uint64_t enc, int bits) {
        if (t == n_) {
            if (enc < best_) best_ = enc;
            return;
        }
        for (int v = 0; v < n_; ++v) {
            if ((used_ >> v) & 1u) continue;
            std::uint64_t chunk = 0;
            for (int s = 0; s < t; ++s)
                chunk = (chunk << 1) | ((adj_[perm_[s]] >> v) & 1u);
            std::uint64_t enc2 = enc | (chunk << (64 - bits - t));
            int bits2 = bits + t;
            // prune: compare against the best encoding truncated to bits2
            std::uint64_t bestpfx = bits2 ? (best_ >> (64 - bits2)) << (64 - bits2) : 0;
            if (enc2 > bestpfx) continue;
            perm_[t] = v;
            used_ |= std::uint64_t{1} << v;
            run(t + 1, enc2, bits2);
            used_ &= ~(std::uint64_t{1} << v);
        }
    }

    const std::vector<std::uint64_t>& adj_;
    int n_;
    int total_bits_;
    std::uint64_t best_;
    std::vector<int> perm_;
    std::uint64_t used_;
};

}  // namespace detail

/// Canonical edge-set encoding: the lexicographically least upper-triangle
/// adjacency bitstring over all vertex permutations, prefixed by the vertex
/// count. Two graphs are isomorphic exactly when their encodings are equal.
inline std::string canonical_form(const Graph& g, int max_vertices = 8) {
    int n = g.vertex_count();
    if (n > max_vertices)
        throw resource_error("canonical_form: graph exceeds the " +
                             std::to_string(max_vertices) + "-vertex bound");
    std::vector<std::uint64_t> adj(n);
    for (int i = 0; i < n; ++i) adj[i] = g.adjacency_mask(i);
    detail::CanonicalSearch search(adj, n);
    std::uint64_t bits = search.best();
    int total = n * (n - 1) / 2;
    std::string out = std::to_string(n);
    out += ':';
    for (int t = total - 1; t >= 0; --t) out += ((bits >> t) & 1u) ? '1' : '0';
    return out;
}

}  // namespace symcover
