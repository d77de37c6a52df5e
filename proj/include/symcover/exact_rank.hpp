#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "symcover/ids.hpp"

namespace symcover {

/// Coefficient field: the rationals (characteristic 0) or a prime field.
struct FieldSpec {
    int characteristic = 0;

    FieldSpec() = default;

    explicit FieldSpec(int ch) : characteristic(ch) {
        if (ch == 0) return;
        if (ch < 2) throw input_error("field: characteristic must be 0 or prime");
        for (int d = 2; static_cast<long long>(d) * d <= ch; ++d)
            if (ch % d == 0) throw input_error("field: characteristic must be 0 or prime");
    }

    std::string str() const {
        return characteristic == 0 ? "0" : "p" + std::to_string(characteristic);
    }

    friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

namespace detail {

using BigInt = boost::multiprecision::cpp_int;

/// Incremental rank of a sparse integer matrix over Q, by column reduction.
/// Columns are merged against stored pivot columns with integer row
/// combinations only; scaling a column by a nonzero integer never changes the
/// rank, so no fractions are ever needed.
class RationalRankReducer {
public:
    using Entry = std::pair<std::int32_t, BigInt>;  // (row, coefficient), rows ascending

    void add_column(std::vector<Entry> col) {
        normalize(col);
        while (!col.empty()) {
            std::int32_t pivot_row = col.back().first;
            auto it = owners_.find(pivot_row);
            if (it == owners_.end()) {
                owners_.emplace(pivot_row, std::move(col));
                ++rank_;
                return;
            }
            const std::vector<Entry>& owner = it->second;
            const BigInt& b = owner.back().second;
            BigInt a = col.back().second;
            BigInt g = boost::multiprecision::gcd(a, b);
            combine(col, b / g, owner, -a / g);
            normalize(col);
        }
    }

    long long rank() const { return rank_; }

private:
    // col <- s*col + t*other, merged by row
    static void combine(std::vector<Entry>& col, const BigInt& s, const std::vector<Entry>& other,
                        const BigInt& t) {
        std::vector<Entry> out;
        out.reserve(col.size() + other.size());
        std::size_t i = 0, j = 0;
        while (i < col.size() || j < other.size()) {
            if (j == other.size() || (i < col.size() && col[i].first < other[j].first)) {
                out.push_back({col[i].first, s * col[i].second});
                ++i;
            } else if (i == col.size() || other[j].first < col[i].first) {
                out.push_back({other[j].first, t * other[j].second});
                ++j;
            } else {
                BigInt v = s * col[i].second + t * other[j].second;
                if (v != 0) out.push_back({col[i].first, std::move(v)});
                ++i;
                ++j;
            }
        }
        col = std::move(out);
    }

    static void normalize(std::vector<Entry>& col) {
        if (col.empty()) return;
        BigInt content = 0;
        for (const auto& [r, v] : col) {
            content = boost::multiprecision::gcd(content, v);
            if (content == 1) break;
        }
        if (content > 1)
            for (auto& [r, v] : col) v /= content;
    }

    std::unordered_map<std::int32_t, std::vector<Entry>> owners_;
    long long rank_ = 0;
};

/// Incremental rank over F_p. Stored pivot columns are scaled to pivot 1.
class PrimeRankReducer {
public:
    using Entry = std::pair<std::int32_t, std::uint64_t>;

    explicit PrimeRankReducer(int p) : p_(static_cast<std::uint64_t>(p)) {
        if (p < 2) throw input_error("rank: invalid prime");
    }

    void add_column(std::vector<Entry> col) {
        reduce_mod(col);
        while (!col.empty()) {
            std::int32_t pivot_row = col.back().first;
            auto it = owners_.find(pivot_row);
            if (it == owners_.end()) {
                scale(col, inverse(col.back().second));
                owners_.emplace(pivot_row, std::move(col));
                ++rank_;
                return;
            }
            std::uint64_t a = col.back().second;
            combine(col, it->second, p_ - a);  // col -= a * owner
        }
    }

    long long rank() const { return rank_; }

private:
    void reduce_mod(std::vector<Entry>& col) const {
        std::vector<Entry> out;
        for (auto& [r, v] : col) {
            std::uint64_t m = v % p_;
            if (m) out.push_back({r, m});
        }
        col = std::move(out);
    }

    void scale(std::vector<Entry>& col, std::uint64_t s) const {
        for (auto& [r, v] : col) v = (v * s) % p_;
    }

    // col <- col + t*other (mod p)
    void combine(std::vector<Entry>& col, const std::vector<Entry>& other, std::uint64_t t) const {
        std::vector<Entry> out;
        out.reserve(col.size() + other.size());
        std::size_t i = 0, j = 0;
        while (i < col.size() || j < other.size()) {
            if (j == other.size() || (i < col.size() && col[i].first < other[j].first)) {
                out.push_back(col[i]);
                ++i;
            } else if (i == col.size() || other[j].first < col[i].first) {
                out.push_back({other[j].first, (other[j].second * t) % p_});
                if (out.back().second == 0) out.pop_back();
                ++j;
            } else {
                std::uint64_t v = (col[i].second + other[j].second * t) % p_;
                if (v) out.push_back({col[i].first, v});
                ++i;
                ++j;
            }
        }
        col = std::move(out);
    }

    std::uint64_t inverse(std::uint64_t a) const {
        // extended Euclid; p_ is prime and a != 0 mod p_
        long long t = 0, newt = 1;
        long long r = static_cast<long long>(p_), newr = static_cast<long long>(a % p_);
        while (newr != 0) {
            long long q = r / newr;
            t -= q * newt;
            std::swap(t, newt);
            r -= q * newr;
            std::swap(r, newr);
        }
        if (t < 0) t += static_cast<long long>(p_);
        return static_cast<std::uint64_t>(t);
    }

    std::uint64_t p_;
    std::unordered_map<std::int32_t, std::vector<Entry>> owners_;
    long long rank_ = 0;
};

/// Rank of a sparse integer matrix over the requested field. Columns carry
/// small signed coefficients (boundary maps use only +-1).
class RankReducer {
public:
    explicit RankReducer(const FieldSpec& field) : p_(field.characteristic) {
        if (p_ == 0)
            rational_.emplace();
        else
            prime_.emplace(p_);
    }

    void add_column(const std::vector<std::pair<std::int32_t, int>>& col) {
        if (p_ == 0) {
            std::vector<RationalRankReducer::Entry> c;
            c.reserve(col.size());
            for (const auto& [r, v] : col) c.push_back({r, BigInt(v)});
            rational_->add_column(std::move(c));
        } else {
            std::vector<PrimeRankReducer::Entry> c;
            c.reserve(col.size());
            for (const auto& [r, v] : col) {
                long long m = v % p_;
                if (m < 0) m += p_;
                if (m) c.push_back({r, static_cast<std::uint64_t>(m)});
            }
            prime_->add_column(std::move(c));
        }
    }

    long long rank() const { return p_ == 0 ? rational_->rank() : prime_->rank(); }

private:
    long long p_;
    std::optional<RationalRankReducer> rational_;
    std::optional<PrimeRankReducer> prime_;
};

}  // namespace detail
}  // namespace symcover
