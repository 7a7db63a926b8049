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

#ifndef FIBOPOLY_ZTRANSFORM_HPP
#define FIBOPOLY_ZTRANSFORM_HPP

/**
 * @file ztransform.hpp
 * @brief Rational Z transforms of a_n = F_{tsn}^k(x) and a_n = L_{tsn}^k(x).
 *
 * With D = tk + 1 and
 *
 *   c_i   = sum_{j=0}^{i} (-1)^{e(s,j)} binom(D, j)_{F_s} A_{ts(i-j)}^k,
 *   den(z) = sum_{i=0}^{D} (-1)^{e(s,i)} binom(D, i)_{F_s} z^{D-i},
 *   num(z) = z * sum_{i=0}^{tk} c_i z^{tk-i},
 *
 * (A = F or L, e = sign_exponent) the transform sum_n a_n z^{-n} equals
 * num(z) / den(z).
 *
 * Series convention. Put w = 1/z. Both num and den are reflected about the
 * denominator degree D: the coefficient of z^m moves to w^(D-m). Then
 *
 *   den^(w) * sum_n a_n w^n = num^(w)
 *
 * as formal power series, which is what series_check() tests modulo w^(N+1).
 * The numerator is reflected about D, not about its own degree; for the
 * Fibonacci family c_0 = 0 and the numerator has z-degree tk only.
 */

#include <cstddef>
#include <optional>
#include <vector>

#include "fibopoly/bigpoly.hpp"
#include "fibopoly/fibopolynomial.hpp"
#include "fibopoly/lucas_seq.hpp"

namespace fibopoly {

struct ZParams {
    long t = 1;
    long k = 1;
    long s = 1;
    SeqKind kind = SeqKind::Fibonacci;

    long tk() const { return t * k; }
};

struct RationalZ {
    PolyZX numerator;
    PolyZX denominator;
    ZParams params;
};

namespace detail {

inline void validate(const ZParams& p) {
    if (p.t < 1 || p.k < 1 || p.s < 1) throw InvalidIndex("t, k and s must all be >= 1");
}

}  // namespace detail

/// a_n = A_{tsn}(x)^k
inline PolyX sequence_term(const ZParams& p, long n) {
    return pow(seq_poly(p.kind, p.t * p.s * n), static_cast<unsigned>(p.k));
}

/// c_0 .. c_{tk}, the inner double sums shared by the transform numerator,
/// the Fibopolynomial expansion and every admissibility condition.
inline std::vector<PolyX> numerator_coefficients(const ZParams& p) {
    detail::validate(p);
    const long tk = p.tk();
    std::vector<PolyX> powers(static_cast<std::size_t>(tk) + 1);
    for (long i = 0; i <= tk; ++i) powers[i] = sequence_term(p, i);

    std::vector<PolyX> c(static_cast<std::size_t>(tk) + 1);
    for (long i = 0; i <= tk; ++i) {
        for (long j = 0; j <= i; ++j) {
            if (powers[i - j].is_zero()) continue;
            c[i] += fibopolynomial(tk + 1, j, p.s) * powers[i - j] * BigInt(sign_factor(p.s, j));
        }
    }
    return c;
}

/// D_{s,tk+1}(x, z) from the signed Fibopolynomial sum.
inline PolyZX build_denominator(long s, long tk) {
    if (s < 1 || tk < 1) throw InvalidIndex("build_denominator requires s >= 1 and tk >= 1");
    std::vector<PolyX> coeffs(static_cast<std::size_t>(tk) + 2);
    for (long i = 0; i <= tk + 1; ++i) {
        coeffs[tk + 1 - i] = fibopolynomial(tk + 1, i, s) * BigInt(sign_factor(s, i));
    }
    return PolyZX(std::move(coeffs));
}

/// D_{s,tk+1}(x, z) as a product of quadratics with Lucas middle terms.
///   tk = 2p:     (-1)^{s+1} (z - (-1)^{sp}) prod_{j<p} (z^2 - (-1)^{sj} L_{2s(p-j)} z + 1)
///   tk = 2p - 1: (-1)^{s+1} prod_{j<p} (z^2 - (-1)^{sj} L_{s(2p-1-2j)} z + (-1)^{(2p-1)s})
inline PolyZX build_denominator_factored(long s, long tk) {
    if (s < 1 || tk < 1) throw InvalidIndex("build_denominator_factored requires s >= 1 and tk >= 1");
    const PolyX one_x{1};
    PolyZX product = PolyZX::constant(PolyX::constant(neg_one_pow(s + 1)));
    if (tk % 2 == 0) {
        const long p = tk / 2;
        product *= PolyZX{PolyX::constant(-neg_one_pow(s * p)), one_x};
        for (long j = 0; j < p; ++j) {
            product *= PolyZX{one_x, lucas_poly(2 * s * (p - j)) * BigInt(-neg_one_pow(s * j)), one_x};
        }
    } else {
        const long p = (tk + 1) / 2;
        const PolyX constant_term = PolyX::constant(neg_one_pow((2 * p - 1) * s));
        for (long j = 0; j < p; ++j) {
            product *= PolyZX{constant_term, lucas_poly(s * (2 * p - 1 - 2 * j)) * BigInt(-neg_one_pow(s * j)), one_x};
        }
    }
    return product;
}

/// z * sum_{i=0}^{tk} c_i z^{tk-i}
inline PolyZX build_numerator(const ZParams& p) {
    const auto c = numerator_coefficients(p);
    const long tk = p.tk();
    std::vector<PolyX> coeffs(static_cast<std::size_t>(tk) + 2);
    for (long i = 0; i <= tk; ++i) coeffs[tk + 1 - i] = c[i];
    return PolyZX(std::move(coeffs));
}

inline PolyZX build_numerator(long t, long k, long s, SeqKind kind) { return build_numerator(ZParams{t, k, s, kind}); }

inline RationalZ make_rational_z(const ZParams& p) {
    return RationalZ{build_numerator(p), build_denominator(p.s, p.tk()), p};
}

/// Coefficients of the reflected denominator den^(w), i.e. d_i multiplies
/// a_{n-i} in the recurrence sum_i d_i a_{M-i} = [w^M] num^(w).
inline std::vector<PolyX> recurrence_weights(const RationalZ& rz) {
    const auto width = static_cast<std::size_t>(rz.denominator.degree());
    const PolyZX reflected = reflect(rz.denominator, width);
    std::vector<PolyX> w(width + 1);
    for (std::size_t i = 0; i <= width; ++i) w[i] = reflected.coeff(i);
    return w;
}

namespace detail {

inline bool series_identity_holds(const PolyZX& numerator, const PolyZX& denominator,
                                  const std::vector<PolyX>& terms, std::size_t N) {
    const auto width = static_cast<std::size_t>(denominator.degree());
    if (numerator.degree() > static_cast<std::ptrdiff_t>(width)) return false;
    const PolyZX num_w = reflect(numerator, width);
    const PolyZX den_w = reflect(denominator, width);
    const PolyZX series(terms);
    return mul_trunc(den_w, series, N) == truncate(num_w, N);
}

}  // namespace detail

/// den^(w) * sum_{n<=N} a_n w^n == num^(w)  (mod w^{N+1})
inline bool series_check(const RationalZ& rz, std::size_t N) {
    std::vector<PolyX> terms(N + 1);
    for (std::size_t n = 0; n <= N; ++n) terms[n] = sequence_term(rz.params, static_cast<long>(n));
    return detail::series_identity_holds(rz.numerator, rz.denominator, terms, N);
}

/// Transform of (-1)^n a_n is A(-z): substitute z -> -z in both numerator
/// and denominator and check against the sign-alternated sequence.
inline bool alternating_series_check(const RationalZ& rz, std::size_t N) {
    std::vector<PolyX> terms(N + 1);
    for (std::size_t n = 0; n <= N; ++n) {
        terms[n] = sequence_term(rz.params, static_cast<long>(n));
        if (n % 2 == 1) terms[n] = -terms[n];
    }
    return detail::series_identity_holds(negate_variable(rz.numerator), negate_variable(rz.denominator), terms, N);
}

/// a_n = (-1)^{s+1} sum_{i=0}^{tk} c_i binom(n + tk - i, tk)_{F_s}, checked for n = 0..N.
inline bool expansion_check(const ZParams& p, long N) {
    const auto c = numerator_coefficients(p);
    const long tk = p.tk();
    const BigInt outer = neg_one_pow(p.s + 1);
    for (long n = 0; n <= N; ++n) {
        PolyX rhs;
        for (long i = 0; i <= tk; ++i) {
            if (c[i].is_zero()) continue;
            rhs += c[i] * fibopolynomial_or_zero(n + tk - i, tk, p.s);
        }
        if (rhs * outer != sequence_term(p, n)) return false;
    }
    return true;
}

/// Lowest window start for which sum_i d_i a_{n+tk+1-i} = 0 holds uniformly.
/// The numerator carries a factor z, so [w^{tk+1}] num^(w) = 0 and even the
/// window starting at a_0 annihilates. Pinned by the empirical scan in the tests.
inline constexpr long kRecurrenceWindowStart = 0;

/// True iff sum_i d_i a_{n+tk+1-i} == 0 for window start n (lowest index n).
inline bool recurrence_window_holds(const std::vector<PolyX>& weights, const std::vector<PolyX>& terms, long n) {
    const long order = static_cast<long>(weights.size()) - 1;
    PolyX acc;
    for (long i = 0; i <= order; ++i) acc += weights[i] * terms[n + order - i];
    return acc.is_zero();
}

inline bool recurrence_check(const ZParams& p, long N) {
    const RationalZ rz = make_rational_z(p);
    const auto weights = recurrence_weights(rz);
    const long order = static_cast<long>(weights.size()) - 1;
    if (N < order + 1) throw std::invalid_argument("recurrence_check requires N >= tk + 2");
    std::vector<PolyX> terms(static_cast<std::size_t>(N) + 1);
    for (long n = 0; n <= N; ++n) terms[n] = sequence_term(p, n);
    for (long n = kRecurrenceWindowStart; n + order <= N; ++n) {
        if (!recurrence_window_holds(weights, terms, n)) return false;
    }
    return true;
}

}  // namespace fibopoly

#endif  // FIBOPOLY_ZTRANSFORM_HPP
