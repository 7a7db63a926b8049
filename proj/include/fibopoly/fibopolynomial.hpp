// Copyright 2026 The fibopoly Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef FIBOPOLY_FIBOPOLYNOMIAL_HPP
#define FIBOPOLY_FIBOPOLYNOMIAL_HPP

/**
 * @file fibopolynomial.hpp
 * @brief s-Fibopolynomials binom(n, k)_{F_s(x)}.
 *
 * Two routes compute the same object:
 *
 *  - fibopolynomial(): the division-free triangle recurrence
 *        binom(n,k) = F_{s(n-k)+1} binom(n-1,k-1) + F_{sk-1} binom(n-1,k),
 *    with binom(n,0) = binom(n,n) = 1. This is the normative route and is
 *    memoized per s.
 *  - fibopolynomial_quotient(): the product quotient
 *        F_{sn} F_{s(n-1)} ... F_{s(n-k+1)} / (F_s F_{2s} ... F_{ks})
 *    via exact polynomial division. Used as an independent cross-check.
 */

#include <algorithm>
#include <deque>
#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <vector>

#include "fibopoly/bigpoly.hpp"
#include "fibopoly/lucas_seq.hpp"

namespace fibopoly {

struct FibopolyKey {
    long n = 0;
    long k = 0;
    long s = 1;
};

/// Rows with n above this are computed on demand and not stored.
inline constexpr long kFibopolyCacheNMax = 128;

namespace detail {

inline void validate(const FibopolyKey& key) {
    if (key.s < 1) throw InvalidIndex("s-Fibopolynomial requires s >= 1");
    if (key.n < 0 || key.k < 0 || key.k > key.n)
        throw InvalidIndex("s-Fibopolynomial requires 0 <= k <= n (got n=" + std::to_string(key.n) +
                           ", k=" + std::to_string(key.k) + ")");
}

using FibopolyRow = std::vector<PolyX>;

inline FibopolyRow next_row(const FibopolyRow& prev, long s) {
    const long n = static_cast<long>(prev.size());  // prev is row n-1
    FibopolyRow row(static_cast<std::size_t>(n) + 1);
    row.front() = PolyX{1};
    row.back() = PolyX{1};
    for (long k = 1; k < n; ++k) {
        row[k] = fib_poly(s * (n - k) + 1) * prev[k - 1] + fib_poly(s * k - 1) * prev[k];
    }
    return row;
}

/// Pascal-style triangle for a fixed s.
class FibopolyTriangle {
   public:
    explicit FibopolyTriangle(long s) : s_(s) { rows_.push_back(FibopolyRow{PolyX{1}}); }

    PolyX at(long n, long k) {
        {
            std::shared_lock lock(mutex_);
            if (static_cast<std::size_t>(n) < rows_.size()) return rows_[n][k];
        }
        std::unique_lock lock(mutex_);
        while (rows_.size() <= static_cast<std::size_t>(n)) rows_.push_back(next_row(rows_.back(), s_));
        return rows_[n][k];
    }

   private:
    long s_;
    std::shared_mutex mutex_;
    std::deque<FibopolyRow> rows_;
};

class FibopolyCache {
   public:
    FibopolyTriangle& triangle(long s) {
        {
            std::shared_lock lock(mutex_);
            if (auto it = triangles_.find(s); it != triangles_.end()) return *it->second;
        }
        std::unique_lock lock(mutex_);
        auto& slot = triangles_[s];
        if (!slot) slot = std::make_unique<FibopolyTriangle>(s);
        return *slot;
    }

   private:
    std::shared_mutex mutex_;
    std::map<long, std::unique_ptr<FibopolyTriangle>> triangles_;
};

inline FibopolyCache& fibopoly_cache() {
    static FibopolyCache cache;
    return cache;
}

}  // namespace detail

inline PolyX fibopolynomial(const FibopolyKey& key) {
    detail::validate(key);
    if (key.k == 0 || key.k == key.n) return PolyX{1};
    if (key.n <= kFibopolyCacheNMax) return detail::fibopoly_cache().triangle(key.s).at(key.n, key.k);

    // Uncached: only columns 0..min(k, n-k) of each row are needed.
    const long width = std::min(key.k, key.n - key.k);
    detail::FibopolyRow row{PolyX{1}};
    for (long n = 1; n <= key.n; ++n) {
        detail::FibopolyRow next(static_cast<std::size_t>(std::min(n, width)) + 1);
        next[0] = PolyX{1};
        for (long j = 1; j < static_cast<long>(next.size()); ++j) {
            if (j == n) {
                next[j] = PolyX{1};
                continue;
            }
            next[j] = fib_poly(key.s * (n - j) + 1) * row[j - 1] + fib_poly(key.s * j - 1) * row[j];
        }
        row = std::move(next);
    }
    return row[width];
}

inline PolyX fibopolynomial(long n, long k, long s) { return fibopolynomial(FibopolyKey{n, k, s}); }

/// binom(n, k)_{F_s} with the convention that it vanishes for k < 0 or k > n.
/// This is the form needed inside sums such as binom(n + tk - i, tk).
inline PolyX fibopolynomial_or_zero(long n, long k, long s) {
    if (n < 0 || k < 0 || k > n) return {};
    return fibopolynomial(n, k, s);
}

inline PolyX fibopolynomial_quotient(const FibopolyKey& key) {
    detail::validate(key);
    PolyX numerator{1};
    PolyX denominator{1};
    for (long i = 0; i < key.k; ++i) {
        numerator *= fib_poly(key.s * (key.n - i));
        denominator *= fib_poly(key.s * (i + 1));
    }
    return exact_div(numerator, denominator);
}

/// Parity of (s*j + 2(s+1)) (j+1) / 2. The product is always even, so the
/// halving is exact. Every signed term of the transform numerators,
/// denominators and expansion coefficients carries (-1) to this power.
inline int sign_exponent(long s, long j) {
    const long long twice = (static_cast<long long>(s) * j + 2LL * (s + 1)) * (j + 1);
    return static_cast<int>((twice / 2) & 1LL);
}

/// (-1)^{sign_exponent(s, j)}
inline int sign_factor(long s, long j) { return sign_exponent(s, j) ? -1 : 1; }

}  // namespace fibopoly

#endif  // FIBOPOLY_FIBOPOLYNOMIAL_HPP
