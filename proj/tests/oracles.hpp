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

#ifndef FIBOPOLY_TESTS_ORACLES_HPP
#define FIBOPOLY_TESTS_ORACLES_HPP

// Reference computations for the tests. Nothing here calls into the library
// beyond the BigInt / PolyX containers: values are produced by integer
// recurrences at a fixed point x0, closed-form binomial sums, or naive loops.

#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

#include "fibopoly/bigpoly.hpp"

namespace oracle {

using fibopoly::BigInt;
using fibopoly::PolyX;

inline constexpr std::uint64_t kSeed = 0x5eed'f1b0'2026ULL;

inline std::mt19937_64 make_rng() { return std::mt19937_64(kSeed); }

inline long uniform(std::mt19937_64& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

/// Random polynomial with degree <= max_degree and coefficients in [-bound, bound].
inline PolyX random_poly(std::mt19937_64& rng, long max_degree = 8, long bound = 99) {
    const long deg = uniform(rng, -1, max_degree);
    std::vector<BigInt> c;
    for (long i = 0; i <= deg; ++i) c.emplace_back(uniform(rng, -bound, bound));
    return PolyX(std::move(c));
}

/// sum c_i x0^i with explicit powers.
inline BigInt naive_eval(const PolyX& p, const BigInt& x0) {
    BigInt total = 0, power = 1;
    for (const auto& c : p.coeffs()) {
        total += c * power;
        power *= x0;
    }
    return total;
}

inline BigInt binomial(long n, long k) {
    if (k < 0 || k > n) return 0;
    BigInt r = 1;
    for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

/// F_n(x) = sum_j binom(n-1-j, j) x^{n-1-2j}, n >= 1.
inline PolyX fib_explicit(long n) {
    if (n < 1) throw std::invalid_argument("fib_explicit needs n >= 1");
    std::vector<BigInt> c(static_cast<std::size_t>(n));
    for (long j = 0; 2 * j <= n - 1; ++j) c[n - 1 - 2 * j] = binomial(n - 1 - j, j);
    return PolyX(std::move(c));
}

/// L_n(x) = sum_j n/(n-j) binom(n-j, j) x^{n-2j}, n >= 1.
inline PolyX lucas_explicit(long n) {
    if (n < 1) throw std::invalid_argument("lucas_explicit needs n >= 1");
    std::vector<BigInt> c(static_cast<std::size_t>(n) + 1);
    for (long j = 0; 2 * j <= n; ++j) c[n - 2 * j] = binomial(n - j, j) * n / (n - j);
    return PolyX(std::move(c));
}

/// Value of the sequence with seeds (a0, a1) and u_{n+1} = x0 u_n + u_{n-1}
/// at index n, walking backwards for negative n.
inline BigInt recurrence_at(long n, const BigInt& x0, BigInt a0, BigInt a1) {
    if (n >= 0) {
        for (long i = 0; i < n; ++i) {
            BigInt next = x0 * a1 + a0;
            a0 = std::move(a1);
            a1 = std::move(next);
        }
        return a0;
    }
    for (long i = 0; i > n; --i) {  // u_{i-1} = u_{i+1} - x0 u_i
        BigInt prev = a1 - x0 * a0;
        a1 = std::move(a0);
        a0 = std::move(prev);
    }
    return a0;
}

inline BigInt fib_at(long n, const BigInt& x0) { return recurrence_at(n, x0, 0, 1); }
inline BigInt lucas_at(long n, const BigInt& x0) { return recurrence_at(n, x0, 2, x0); }

inline BigInt pow_int(BigInt b, long e) {
    BigInt r = 1;
    for (long i = 0; i < e; ++i) r *= b;
    return r;
}

/// binom(n, k)_{F_s} at x0 from the product quotient of integers. x0 must
/// keep every F_{sm}(x0), m >= 1, nonzero (any x0 != 0 does).
inline BigInt fibonomial_at(long n, long k, long s, const BigInt& x0) {
    if (k < 0 || k > n) return 0;
    BigInt num = 1, den = 1;
    for (long i = 0; i < k; ++i) {
        num *= fib_at(s * (n - i), x0);
        den *= fib_at(s * (i + 1), x0);
    }
    if (num % den != 0) throw std::logic_error("fibonomial quotient not integral");
    return num / den;
}

/// (-1)^{(s j + 2(s+1))(j+1)/2} evaluated by a separate parity table:
/// the product halved, reduced mod 2, via 128-bit safe BigInt arithmetic.
inline int signed_term_sign(long s, long j) {
    BigInt e = (BigInt(s) * j + 2 * (BigInt(s) + 1)) * (j + 1);
    e /= 2;
    return (e % 2 == 0) ? 1 : -1;
}

inline std::vector<std::uint64_t> fibonacci_numbers(int count) {
    std::vector<std::uint64_t> f{0, 1};
    while (static_cast<int>(f.size()) < count) f.push_back(f[f.size() - 1] + f[f.size() - 2]);
    return f;
}

inline std::vector<std::uint64_t> lucas_numbers(int count) {
    std::vector<std::uint64_t> l{2, 1};
    while (static_cast<int>(l.size()) < count) l.push_back(l[l.size() - 1] + l[l.size() - 2]);
    return l;
}

}  // namespace oracle

#endif  // FIBOPOLY_TESTS_ORACLES_HPP
