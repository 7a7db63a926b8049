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

#ifndef FIBOPOLY_LUCAS_SEQ_HPP
#define FIBOPOLY_LUCAS_SEQ_HPP

/**
 * @file lucas_seq.hpp
 * @brief Fibonacci and Lucas polynomials F_n(x), L_n(x) for any integer n.
 *
 * Both families follow P_{n+1} = x P_n + P_{n-1} with seeds F_0 = 0, F_1 = 1
 * and L_0 = 2, L_1 = x. Negative indices use
 *
 *   F_{-n} = (-1)^{n+1} F_n,     L_{-n} = (-1)^n L_n.
 *
 * Nonnegative terms are memoized in a process-wide table guarded by a
 * shared mutex: lookups take a shared lock, growth takes an exclusive lock.
 * Stored polynomials are never modified after insertion.
 */

#include <deque>
#include <mutex>
#include <shared_mutex>
#include <string_view>

#include "fibopoly/bigpoly.hpp"

namespace fibopoly {

enum class SeqKind { Fibonacci, Lucas };

inline std::string_view to_string(SeqKind kind) { return kind == SeqKind::Fibonacci ? "fib" : "lucas"; }

/// Largest |n| the sequence tables will materialize.
inline constexpr long kMaxSequenceIndex = 20000;

namespace detail {

class SequenceTable {
   public:
    SequenceTable(PolyX first, PolyX second) {
        terms_.push_back(std::move(first));
        terms_.push_back(std::move(second));
    }

    PolyX at(std::size_t n) {
        {
            std::shared_lock lock(mutex_);
            if (n < terms_.size()) return terms_[n];
        }
        std::unique_lock lock(mutex_);
        const PolyX x = variable<BigInt>();
        while (terms_.size() <= n) {
            const std::size_t m = terms_.size();
            terms_.push_back(x * terms_[m - 1] + terms_[m - 2]);
        }
        return terms_[n];
    }

   private:
    std::shared_mutex mutex_;
    std::deque<PolyX> terms_;
};

inline SequenceTable& fibonacci_table() {
    static SequenceTable table(PolyX{}, PolyX{1});
    return table;
}

inline SequenceTable& lucas_table() {
    static SequenceTable table(PolyX{2}, PolyX{0, 1});
    return table;
}

inline std::size_t checked_magnitude(long n) {
    if (n > kMaxSequenceIndex || n < -kMaxSequenceIndex)
        throw InvalidIndex("sequence index " + std::to_string(n) + " exceeds the configured limit");
    return static_cast<std::size_t>(n < 0 ? -n : n);
}

}  // namespace detail

inline PolyX fib_poly(long n) {
    const std::size_t m = detail::checked_magnitude(n);
    PolyX p = detail::fibonacci_table().at(m);
    if (n < 0 && m % 2 == 0) return -p;
    return p;
}

inline PolyX lucas_poly(long n) {
    const std::size_t m = detail::checked_magnitude(n);
    PolyX p = detail::lucas_table().at(m);
    if (n < 0 && m % 2 == 1) return -p;
    return p;
}

inline PolyX seq_poly(SeqKind kind, long n) { return kind == SeqKind::Fibonacci ? fib_poly(n) : lucas_poly(n); }

/// (-1)^e as an integer.
inline int neg_one_pow(long long e) { return (e % 2 == 0) ? 1 : -1; }

/// x^2 + 4, the discriminant factor that links F and L.
inline PolyX x2_plus_4() { return PolyX{4, 0, 1}; }

/// F_{(2p-1)s} = F_s [sum_{k<p} (-1)^{sk} L_{2(p-k-1)s} - (-1)^{s(p-1)}]
/// and F_{2ps} = F_s sum_{k<p} (-1)^{sk} L_{(2p-2k-1)s}, both without division.
inline bool check_quotient_identities(long s, long p) {
    if (s < 1 || p < 1) throw InvalidIndex("check_quotient_identities requires s >= 1 and p >= 1");
    PolyX odd_sum, even_sum;
    for (long k = 0; k < p; ++k) {
        const BigInt sign = neg_one_pow(s * k);
        odd_sum += lucas_poly(2 * (p - k - 1) * s) * sign;
        even_sum += lucas_poly((2 * p - 2 * k - 1) * s) * sign;
    }
    odd_sum -= PolyX::constant(neg_one_pow(s * (p - 1)));
    const PolyX fs = fib_poly(s);
    return fib_poly((2 * p - 1) * s) == fs * odd_sum && fib_poly(2 * p * s) == fs * even_sum;
}

enum class IndexReduction { FF, FL, LL };

/// The index-reduction formula and its two mixed variants:
///   FF: F_M F_N - F_{M+K} F_{N-K}          = (-1)^{N-K}   F_{M+K-N} F_K
///   FL: F_M L_N - F_{M+K} L_{N-K}          = (-1)^{N-K+1} L_{M+K-N} F_K
///   LL: (x^2+4) F_M F_N - L_{M+K} L_{N-K}  = (-1)^{N-K+1} L_{M+K-N} L_K
inline bool check_index_reduction(long M, long N, long K, IndexReduction variant) {
    switch (variant) {
        case IndexReduction::FF: {
            const PolyX lhs = fib_poly(M) * fib_poly(N) - fib_poly(M + K) * fib_poly(N - K);
            const PolyX rhs = fib_poly(M + K - N) * fib_poly(K) * BigInt(neg_one_pow(N - K));
            return lhs == rhs;
        }
        case IndexReduction::FL: {
            const PolyX lhs = fib_poly(M) * lucas_poly(N) - fib_poly(M + K) * lucas_poly(N - K);
            const PolyX rhs = lucas_poly(M + K - N) * fib_poly(K) * BigInt(neg_one_pow(N - K + 1));
            return lhs == rhs;
        }
        case IndexReduction::LL: {
            const PolyX lhs = x2_plus_4() * fib_poly(M) * fib_poly(N) - lucas_poly(M + K) * lucas_poly(N - K);
            const PolyX rhs = lucas_poly(M + K - N) * lucas_poly(K) * BigInt(neg_one_pow(N - K + 1));
            return lhs == rhs;
        }
    }
    return false;
}

/// (x^2+4) F_n' = n L_n - x F_n (with exact divisibility by x^2+4) and L_n' = n F_n.
inline bool check_derivative_formulas(long n) {
    const PolyX f = fib_poly(n);
    const PolyX l = lucas_poly(n);
    const PolyX numerator = l * BigInt(n) - variable<BigInt>() * f;
    try {
        if (exact_div(numerator, x2_plus_4()) != derivative(f)) return false;
    } catch (const NotDivisible&) {
        return false;
    }
    return derivative(l) == f * BigInt(n);
}

}  // namespace fibopoly

#endif  // FIBOPOLY_LUCAS_SEQ_HPP
