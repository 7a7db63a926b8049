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

#ifndef FIBOPOLY_POWERSUMS_HPP
#define FIBOPOLY_POWERSUMS_HPP

/**
 * @file powersums.hpp
 * @brief Sums of powers sum_{n=0}^{q} w(n) A_{tsn}^k(x) as linear combinations
 *        of the s-Fibopolynomials binom(q+m, tk)_{F_s}, m = 1..tk.
 *
 * Write c_i for numerator_coefficients() and let tk = t*k. Every sum splits
 * unconditionally into
 *
 *   sum_m coef_m(q) binom(q+m, tk)  +  T * sum_{n=0}^{q} w'(n) binom(n, tk)
 *
 * and the trailing term vanishes for all q iff the condition polynomial
 *
 *   plain:        sum_i c_i
 *   alternating:  sum_i (-1)^i c_i
 *
 * is zero. For the alternating family each coefficient carries an extra
 * (-1)^{q+m}; PowerSumExpansion keeps that as a flag instead of storing
 * q-dependent coefficients.
 *
 * The weights w(n) = (-1)^{sn} and (-1)^{(s+1)n} (SPower, SPlusOnePower) are
 * resolved to Plain or Alternating by the parity of s before any coefficient
 * is computed.
 */

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fibopoly/bigpoly.hpp"
#include "fibopoly/fibopolynomial.hpp"
#include "fibopoly/lucas_seq.hpp"
#include "fibopoly/ztransform.hpp"

namespace fibopoly {

enum class SignMode { Plain, Alternating, SPower, SPlusOnePower };

inline std::string_view to_string(SignMode mode) {
    switch (mode) {
        case SignMode::Plain: return "plain";
        case SignMode::Alternating: return "alt";
        case SignMode::SPower: return "spower";
        case SignMode::SPlusOnePower: return "s1power";
    }
    return "?";
}

inline std::optional<SignMode> parse_sign_mode(std::string_view text) {
    if (text == "plain") return SignMode::Plain;
    if (text == "alt") return SignMode::Alternating;
    if (text == "spower") return SignMode::SPower;
    if (text == "s1power") return SignMode::SPlusOnePower;
    return std::nullopt;
}

inline std::optional<SeqKind> parse_seq_kind(std::string_view text) {
    if (text == "fib" || text == "fibonacci") return SeqKind::Fibonacci;
    if (text == "lucas") return SeqKind::Lucas;
    return std::nullopt;
}

struct SumSpec {
    long t = 1;
    long k = 1;
    long s = 1;
    SeqKind kind = SeqKind::Fibonacci;
    SignMode sign = SignMode::Plain;

    long tk() const { return t * k; }
    ZParams z_params() const { return ZParams{t, k, s, kind}; }
    friend bool operator==(const SumSpec&, const SumSpec&) = default;
};

inline std::string describe(const SumSpec& spec) {
    return "t=" + std::to_string(spec.t) + " k=" + std::to_string(spec.k) + " s=" + std::to_string(spec.s) +
           " kind=" + std::string(to_string(spec.kind)) + " sign=" + std::string(to_string(spec.sign));
}

inline void validate(const SumSpec& spec) {
    if (spec.t < 1 || spec.k < 1 || spec.s < 1) throw InvalidIndex("t, k and s must all be >= 1");
}

/// Maps SPower / SPlusOnePower onto Plain or Alternating by the parity of s.
inline SumSpec resolve(SumSpec spec) {
    const bool s_odd = spec.s % 2 == 1;
    if (spec.sign == SignMode::SPower) spec.sign = s_odd ? SignMode::Alternating : SignMode::Plain;
    if (spec.sign == SignMode::SPlusOnePower) spec.sign = s_odd ? SignMode::Plain : SignMode::Alternating;
    return spec;
}

inline bool is_alternating(const SumSpec& spec) { return resolve(spec).sign == SignMode::Alternating; }

/// w(n) for the summand of the original, unresolved spec.
inline int summand_sign(const SumSpec& spec, long n) {
    switch (spec.sign) {
        case SignMode::Plain: return 1;
        case SignMode::Alternating: return neg_one_pow(n);
        case SignMode::SPower: return neg_one_pow(spec.s * n);
        case SignMode::SPlusOnePower: return neg_one_pow((spec.s + 1) * n);
    }
    return 1;
}

struct PowerSumExpansion {
    SumSpec spec;
    std::vector<PolyX> base_coeffs;  // base_coeffs[m - 1], m = 1..tk
    bool q_parity_twist = false;

    const PolyX& base(long m) const { return base_coeffs.at(static_cast<std::size_t>(m - 1)); }

    /// Coefficient of binom(q+m, tk) at the given q.
    PolyX coefficient(long m, long q) const {
        if (q_parity_twist && (q + m) % 2 != 0) return -base(m);
        return base(m);
    }

    /// sum_{m=1}^{tk} coefficient(m, q) binom(q+m, tk)_{F_s}
    PolyX assemble(long q) const {
        const long tk = spec.tk();
        PolyX sum;
        for (long m = 1; m <= tk; ++m) {
            if (base(m).is_zero()) continue;
            sum += coefficient(m, q) * fibopolynomial_or_zero(q + m, tk, spec.s);
        }
        return sum;
    }
};

struct ConditionReport {
    SumSpec spec;
    PolyX condition_poly;
    bool is_zero = false;
    bool table_predicts = false;
};

/// Sufficient parity conditions under which the condition polynomial vanishes.
/// Accepts unresolved specs.
inline bool table_predicts(const SumSpec& raw) {
    const SumSpec spec = resolve(raw);
    const long t = spec.t, k = spec.k, s = spec.s;
    const bool t_even = t % 2 == 0, k_odd = k % 2 == 1, s_even = s % 2 == 0;
    const bool alternating = spec.sign == SignMode::Alternating;

    if (spec.kind == SeqKind::Fibonacci && !alternating) {
        return (t_even && k_odd && s_even) || (!t_even && k % 4 == 2 && !s_even) || (t % 4 == 0 && k_odd);
    }
    if (spec.kind == SeqKind::Lucas && !alternating) {
        return (t_even && k_odd && s_even) || (t % 4 == 0 && k_odd);
    }
    if (spec.kind == SeqKind::Fibonacci) {
        return k % 4 == 0 || (!k_odd && s_even) || (t % 4 == 2 && !s_even) || (t_even && !k_odd);
    }
    return !s_even && k_odd && t % 4 == 2;
}

namespace detail {

/// sign applied to c_i inside the condition / base coefficient sums
inline int inner_sign(bool alternating, long i, long tk) { return alternating ? neg_one_pow(i + tk) : 1; }

}  // namespace detail

inline PowerSumExpansion expansion_coefficients(const SumSpec& raw) {
    validate(raw);
    const SumSpec spec = resolve(raw);
    const bool alternating = spec.sign == SignMode::Alternating;
    const long tk = spec.tk();
    const auto c = numerator_coefficients(spec.z_params());
    const BigInt outer = neg_one_pow(spec.s + 1);

    PowerSumExpansion out{raw, std::vector<PolyX>(static_cast<std::size_t>(tk)), alternating};
    // base[m] = outer * sum_{i=0}^{tk-m} sign_i c_i: accumulate from m = tk downwards
    PolyX running;
    for (long m = tk; m >= 1; --m) {
        const long i = tk - m;
        running += c[i] * BigInt(detail::inner_sign(alternating, i, tk));
        out.base_coeffs[m - 1] = running * outer;
    }
    return out;
}

inline PolyX condition_polynomial(const SumSpec& raw) {
    validate(raw);
    const SumSpec spec = resolve(raw);
    const bool alternating = spec.sign == SignMode::Alternating;
    const auto c = numerator_coefficients(spec.z_params());
    PolyX sum;
    for (long i = 0; i < static_cast<long>(c.size()); ++i) sum += c[i] * BigInt(alternating ? neg_one_pow(i) : 1);
    return sum;
}

inline ConditionReport admissibility_condition(const SumSpec& raw) {
    ConditionReport r{raw, condition_polynomial(raw), false, table_predicts(raw)};
    r.is_zero = r.condition_poly.is_zero();
    return r;
}

/// S_q = sum_{n=0}^{q} w(n) A_{tsn}^k for q = 0..q_max, by direct summation.
inline std::vector<PolyX> direct_partial_sums(const SumSpec& spec, long q_max) {
    validate(spec);
    std::vector<PolyX> sums;
    sums.reserve(static_cast<std::size_t>(q_max) + 1);
    PolyX acc;
    for (long n = 0; n <= q_max; ++n) {
        acc += sequence_term(spec.z_params(), n) * BigInt(summand_sign(spec, n));
        sums.push_back(acc);
    }
    return sums;
}

inline PolyX direct_sum(const SumSpec& spec, long q) { return direct_partial_sums(spec, q).back(); }

struct Mismatch {
    long q = 0;
    PolyX difference;  // direct sum minus proposed right-hand side
};

/// First q in 0..q_max where the direct sum differs from the proposed
/// Fibopolynomial combination, if any.
inline std::optional<Mismatch> find_expansion_mismatch(const SumSpec& spec, long q_max) {
    const auto expansion = expansion_coefficients(spec);
    const auto sums = direct_partial_sums(spec, q_max);
    for (long q = 0; q <= q_max; ++q) {
        PolyX diff = sums[q] - expansion.assemble(q);
        if (!diff.is_zero()) return Mismatch{q, std::move(diff)};
    }
    return std::nullopt;
}

inline bool verify_expansion(const SumSpec& spec, long q_max) { return !find_expansion_mismatch(spec, q_max); }

/// The full decomposition including the trailing sum over binom(n, tk),
/// which holds for every (t, k, s).
inline bool verify_unconditional_decomposition(const SumSpec& raw, long q_max) {
    const auto expansion = expansion_coefficients(raw);
    const SumSpec spec = resolve(raw);
    const bool alternating = spec.sign == SignMode::Alternating;
    const long tk = spec.tk();
    const PolyX trailing_factor =
        condition_polynomial(raw) * BigInt(neg_one_pow(spec.s + 1) * (alternating ? neg_one_pow(tk) : 1));
    const auto sums = direct_partial_sums(raw, q_max);

    PolyX trailing_sum;
    for (long q = 0; q <= q_max; ++q) {
        trailing_sum += fibopolynomial_or_zero(q, tk, spec.s) * BigInt(alternating ? neg_one_pow(q) : 1);
        if (sums[q] != expansion.assemble(q) + trailing_factor * trailing_sum) return false;
    }
    return true;
}

/// Right-hand side of the sign-unified family identities, assembled with
/// the printed exponent e(s,j) + f(i + tk + q + m), f = s (SPower) or s + 1
/// (SPlusOnePower). Independent of resolve().
inline PolyX printed_sign_unified_rhs(const SumSpec& spec, long q) {
    validate(spec);
    if (spec.sign != SignMode::SPower && spec.sign != SignMode::SPlusOnePower)
        throw std::invalid_argument("printed_sign_unified_rhs requires an spower or s1power spec");
    const long f = spec.sign == SignMode::SPower ? spec.s : spec.s + 1;
    const long tk = spec.tk();
    const ZParams zp = spec.z_params();
    PolyX total;
    for (long m = 1; m <= tk; ++m) {
        PolyX coef;
        for (long i = 0; i <= tk - m; ++i) {
            for (long j = 0; j <= i; ++j) {
                const PolyX term = sequence_term(zp, i - j);
                if (term.is_zero()) continue;
                const long long exponent = sign_exponent(spec.s, j) + static_cast<long long>(f) * (i + tk + q + m);
                coef += fibopolynomial(tk + 1, j, spec.s) * term * BigInt(neg_one_pow(exponent));
            }
        }
        total += coef * fibopolynomial_or_zero(q + m, tk, spec.s);
    }
    return total * BigInt(neg_one_pow(spec.s + 1));
}

// ---------------------------------------------------------------------------
// Identity catalog
// ---------------------------------------------------------------------------

enum class IdentityId {
    FibonacciSquares,
    Fib4sSum,
    Lucas4sSum,
    FibS1PowerFamily,
    FibSPowerFamily,
    FibSquaresSigned,
    Fib2sSigned,
    SquaresProductChain,
    FibFourthPowersAlternating,
    Fib2sSquaresAlternating,
    LucasSPowerFamily,
    Lucas2sSigned,
    Lucas2sSignedProduct,
    DerivativeFib2sWeightedS1,
    DerivativeLucas2sWeighted,
    DerivativeFib2sWeighted,
};

struct IdentityInfo {
    IdentityId id;
    std::string_view tag;   // numeric tag accepted by the CLI, e.g. "4.27"
    std::string_view name;  // descriptive alias
    std::string_view statement;
    bool derivative;
};

inline constexpr std::array<IdentityInfo, 16> kIdentityCatalog{{
    {IdentityId::FibonacciSquares, "1.15", "fibonacci-squares", "sum F_n^2 = F_q F_{q+1} = binom(q+1,2)_F at x=1", false},
    {IdentityId::Fib4sSum, "3.18", "fib-4s-sum",
     "sum F_{4sn} = F_{4s} (binom(q+1,4) + (-1)^{s+1} L_{2s} binom(q+2,4) + binom(q+3,4))", false},
    {IdentityId::Lucas4sSum, "3.31", "lucas-4s-sum",
     "sum L_{4sn} = 2 binom(q+4,4) + (-L_{4s} + 2(-1)^{s+1} L_{2s}) binom(q+3,4) + "
     "(-1)^s (L_{6s} + L_{2s} + 2(-1)^s) binom(q+2,4) - L_{4s} binom(q+1,4)",
     false},
    {IdentityId::FibS1PowerFamily, "4.19", "fib-s1power-family",
     "sum (-1)^{(s+1)n} F_{tsn}^k as a Fibopolynomial combination; t odd, k = 2 mod 4", false},
    {IdentityId::FibSPowerFamily, "4.20", "fib-spower-family",
     "sum (-1)^{sn} F_{tsn}^k as a Fibopolynomial combination; t = 2 mod 4, k odd", false},
    {IdentityId::FibSquaresSigned, "4.21", "fib-squares-signed", "sum (-1)^{(s+1)(n+q)} F_{sn}^2 = F_s^2 binom(q+1,2)",
     false},
    {IdentityId::Fib2sSigned, "4.24", "fib-2s-signed", "sum (-1)^{s(n+q)} F_{2sn} = F_{2s} binom(q+1,2)", false},
    {IdentityId::SquaresProductChain, "4.27", "squares-product-chain",
     "(-1)^{(s+1)q} L_s sum (-1)^{(s+1)n} F_{sn}^2 = (-1)^{sq} F_s sum (-1)^{sn} F_{2sn} = F_{s(q+1)} F_{sq}", false},
    {IdentityId::FibFourthPowersAlternating, "4.36", "fib-fourth-powers-alternating",
     "sum (-1)^{n+q} F_{sn}^4 = F_s^4 (binom(q+1,4) + binom(q+3,4) + (3(-1)^s L_{2s} + 4) binom(q+2,4))", false},
    {IdentityId::Fib2sSquaresAlternating, "4.37", "fib-2s-squares-alternating",
     "sum (-1)^{n+q} F_{2sn}^2 = F_{2s}^2 (binom(q+1,4) + (-1)^{s+1} L_{2s} binom(q+2,4) + binom(q+3,4))", false},
    {IdentityId::LucasSPowerFamily, "4.43", "lucas-spower-family",
     "sum (-1)^{sn} L_{tsn}^k as a Fibopolynomial combination; t = 2 mod 4, k odd", false},
    {IdentityId::Lucas2sSigned, "4.44", "lucas-2s-signed",
     "sum (-1)^{s(n+q)} L_{2sn} = 2 binom(q+2,2) - L_{2s} binom(q+1,2)", false},
    {IdentityId::Lucas2sSignedProduct, "4.45", "lucas-2s-signed-product",
     "F_s sum (-1)^{s(n+q)} L_{2sn} = L_{sq} F_{s(q+1)}", false},
    {IdentityId::DerivativeFib2sWeightedS1, "5.4", "derivative-fib-2s-weighted-s1",
     "(-1)^{(s+1)q} 2 L_s^2 sum (-1)^{(s+1)n} n F_{2sn} = L_s (2q F_{s(2q+1)} + F_{sq} L_{s(q+1)}) - (x^2+4) F_s "
     "F_{s(q+1)} F_{sq}",
     true},
    {IdentityId::DerivativeLucas2sWeighted, "5.5", "derivative-lucas-2s-weighted",
     "(-1)^{sq} 2 F_s^2 sum (-1)^{sn} n L_{2sn} = F_s (2q F_{s(2q+1)} + F_{sq} L_{s(q+1)}) - L_s F_{s(q+1)} F_{sq}",
     true},
    {IdentityId::DerivativeFib2sWeighted, "5.39", "derivative-fib-2s-weighted",
     "(x^2+4) F_s^2 (-1)^{sq} sum (-1)^{sn} n F_{2sn} = (-1)^{s+1} F_{2sq} + q F_s L_{s(2q+1)}", true},
}};

inline const IdentityInfo& identity_info(IdentityId id) {
    for (const auto& info : kIdentityCatalog)
        if (info.id == id) return info;
    throw UnknownIdentity("identity not in catalog");
}

/// Looks up a catalog entry by numeric tag or descriptive name.
inline const IdentityInfo& find_identity(std::string_view tag_or_name) {
    for (const auto& info : kIdentityCatalog)
        if (info.tag == tag_or_name || info.name == tag_or_name) return info;
    throw UnknownIdentity("unknown identity '" + std::string(tag_or_name) + "'");
}

/// (t, k) pairs exercised for the sign-unified families (tk <= 8).
inline std::vector<std::pair<long, long>> sign_unified_classes(IdentityId id) {
    switch (id) {
        case IdentityId::FibS1PowerFamily: return {{1, 2}, {1, 6}, {3, 2}};
        case IdentityId::FibSPowerFamily:
        case IdentityId::LucasSPowerFamily: return {{2, 1}, {2, 3}, {6, 1}};
        default: return {};
    }
}

struct IdentityFailure {
    long q = 0;
    PolyX difference;  // left side minus right side at the first failing q
    std::string detail;
};

namespace detail {

inline PolyX F(long n) { return fib_poly(n); }
inline PolyX L(long n) { return lucas_poly(n); }
inline PolyX B(long n, long k, long s) { return fibopolynomial_or_zero(n, k, s); }
inline BigInt sgn(long long e) { return BigInt(neg_one_pow(e)); }

/// Runs lhs(q) == rhs(q) for q = 0..q_max; lhs/rhs produce PolyX.
template <class Lhs, class Rhs>
std::optional<IdentityFailure> compare_over_q(long q_max, Lhs&& lhs, Rhs&& rhs, std::string_view detail = {}) {
    for (long q = 0; q <= q_max; ++q) {
        PolyX diff = lhs(q) - rhs(q);
        if (!diff.is_zero()) return IdentityFailure{q, std::move(diff), std::string(detail)};
    }
    return std::nullopt;
}

/// Partial sums of w(n) * term(n) for n = 0..q_max.
template <class Term>
std::vector<PolyX> partial_sums(long q_max, Term&& term) {
    std::vector<PolyX> out;
    PolyX acc;
    for (long n = 0; n <= q_max; ++n) {
        acc += term(n);
        out.push_back(acc);
    }
    return out;
}

inline std::optional<IdentityFailure> check_sign_unified(IdentityId id, long s, long q_max) {
    const SeqKind kind = id == IdentityId::LucasSPowerFamily ? SeqKind::Lucas : SeqKind::Fibonacci;
    const SignMode mode = id == IdentityId::FibS1PowerFamily ? SignMode::SPlusOnePower : SignMode::SPower;
    for (const auto& [t, k] : sign_unified_classes(id)) {
        const SumSpec spec{t, k, s, kind, mode};
        const auto sums = direct_partial_sums(spec, q_max);
        auto failure = compare_over_q(
            q_max, [&](long q) { return sums[q]; }, [&](long q) { return printed_sign_unified_rhs(spec, q); },
            describe(spec));
        if (failure) return failure;
    }
    return std::nullopt;
}

}  // namespace detail

/// Checks a catalog identity for q = 0..q_max at the given s. Identities with
/// a division are compared after multiplying through by the divisor:
///   lucas-2s-signed-product by F_s, the derivative identities by L_s, F_s and
///   (x^2+4) F_s respectively.
inline std::optional<IdentityFailure> find_identity_failure(IdentityId id, long s, long q_max) {
    using detail::B;
    using detail::F;
    using detail::L;
    using detail::sgn;
    if (s < 1) throw InvalidIndex("identity checks require s >= 1");
    if (q_max < 0) throw std::invalid_argument("q_max must be >= 0");

    switch (id) {
        case IdentityId::FibonacciSquares: {
            // Integer identity at x = 1.
            const BigInt one = 1;
            const auto sums = detail::partial_sums(q_max, [&](long n) { return PolyX::constant(pow(evaluate(F(n), one), 2)); });
            auto failure = detail::compare_over_q(
                q_max, [&](long q) { return sums[q]; },
                [&](long q) { return PolyX::constant(evaluate(F(q), one) * evaluate(F(q + 1), one)); }, "F_q F_{q+1}");
            if (failure) return failure;
            return detail::compare_over_q(
                q_max, [&](long q) { return sums[q]; },
                [&](long q) { return PolyX::constant(evaluate(B(q + 1, 2, 1), one)); }, "binom(q+1,2)_F");
        }
        case IdentityId::Fib4sSum: {
            const auto sums = detail::partial_sums(q_max, [&](long n) { return F(4 * s * n); });
            return detail::compare_over_q(
                q_max, [&](long q) { return sums[q]; },
                [&](long q) {
                    return F(4 * s) * (B(q + 1, 4, s) + L(2 * s) * sgn(s + 1) * B(q + 2, 4, s) + B(q + 3, 4, s));
                });
        }
        case IdentityId::Lucas4sSum: {
            const auto sums = detail::partial_sums(q_max, [&](long n) { return L(4 * s * n); });
            return detail::compare_over_q(
                q_max, [&](long q) { return sums[q]; },
                [&](long q) {
                    return PolyX{2} * B(q + 4, 4, s) + (L(2 * s) * (2 * sgn(s + 1)) - L(4 * s)) * B(q + 3, 4, s) +
                           (L(6 * s) + L(2 * s) + PolyX::constant(2 * sgn(s))) * sgn(s) * B(q + 2, 4, s) -
                           L(4 * s) * B(q + 1, 4, s);
                });
        }
        case IdentityId::FibS1PowerFamily:
        case IdentityId::FibSPowerFamily:
        case IdentityId::LucasSPowerFamily: return detail::check_sign_unified(id, s, q_max);
        case IdentityId::FibSquaresSigned: {
            const auto sums = detail::partial_sums(q_max, [&](long n) { return pow(F(s * n), 2) * sgn((s + 1) * n); });
            return detail::compare_over_q(
                q_max, [&](long q) { return sums[q] * sgn((s + 1) * q); },
                [&](long q) { return pow(F(s), 2) * B(q + 1, 2, s); });
        }
        case IdentityId::Fib2sSigned: {
            const auto sums = detail::partial_sums(q_max, [&](long n) { return F(2 * s * n) * sgn(s * n); });
            return detail::compare_over_q(
                q_max, [&](long q) { return sums[q] * sgn(s * q); }, [&](long q) { return F(2 * s) * B(q + 1, 2, s); });
        }
        case IdentityId::SquaresProductChain: {
            const auto squares = detail::partial_sums(q_max, [&](long n) { return pow(F(s * n), 2) * sgn((s + 1) * n); });
            const auto doubled = detail::partial_sums(q_max, [&](long n) { return F(2 * s * n) * sgn(s * n); });
            auto product = [&](long q) { return F(s * (q + 1)) * F(s * q); };
            auto failure = detail::compare_over_q(
                q_max, [&](long q) { return L(s) * squares[q] * sgn((s + 1) * q); }, product, "squares side");
            if (failure) return failure;
            return detail::compare_over_q(
                q_max, [&](long q) { return F(s) * doubled[q] * sgn(s * q); }, product, "doubled-index side");
        }
        case IdentityId::FibFourthPowersAlternating: {
            const auto sums = detail::partial_sums(q_max, [&](long n) { return pow(F(s * n), 4) * sgn(n); });
            return detail::compare_over_q(
                q_max, [&](long q) { return sums[q] * sgn(q); },
                [&](long q) {
                    return pow(F(s), 4) * (B(q + 1, 4, s) + B(q + 3, 4, s) +
                                           (L(2 * s) * (3 * sgn(s)) + PolyX{4}) * B(q + 2, 4, s));
                });
        }
        case IdentityId::Fib2sSquaresAlternating: {
            const auto sums = detail::partial_sums(q_max, [&](long n) { return pow(F(2 * s * n), 2) * sgn(n); });
            return detail::compare_over_q(
                q_max, [&](long q) { return sums[q] * sgn(q); },
                [&](long q) {
                    return pow(F(2 * s), 2) *
                           (B(q + 1, 4, s) + L(2 * s) * sgn(s + 1) * B(q + 2, 4, s) + B(q + 3, 4, s));
                });
        }
        case IdentityId::Lucas2sSigned: {
            const auto sums = detail::partial_sums(q_max, [&](long n) { return L(2 * s * n) * sgn(s * n); });
            return detail::compare_over_q(
                q_max, [&](long q) { return sums[q] * sgn(s * q); },
                [&](long q) { return PolyX{2} * B(q + 2, 2, s) - L(2 * s) * B(q + 1, 2, s); });
        }
        case IdentityId::Lucas2sSignedProduct: {
            const auto sums = detail::partial_sums(q_max, [&](long n) { return L(2 * s * n) * sgn(s * n); });
            return detail::compare_over_q(
                q_max, [&](long q) { return F(s) * sums[q] * sgn(s * q); },
                [&](long q) { return L(s * q) * F(s * (q + 1)); });
        }
        case IdentityId::DerivativeFib2sWeightedS1: {
            const auto sums =
                detail::partial_sums(q_max, [&](long n) { return F(2 * s * n) * (sgn((s + 1) * n) * n); });
            return detail::compare_over_q(
                q_max, [&](long q) { return pow(L(s), 2) * sums[q] * (2 * sgn((s + 1) * q)); },
                [&](long q) {
                    return L(s) * (F(s * (2 * q + 1)) * BigInt(2 * q) + F(s * q) * L(s * (q + 1))) -
                           x2_plus_4() * F(s) * F(s * (q + 1)) * F(s * q);
                });
        }
        case IdentityId::DerivativeLucas2sWeighted: {
            const auto sums = detail::partial_sums(q_max, [&](long n) { return L(2 * s * n) * (sgn(s * n) * n); });
            return detail::compare_over_q(
                q_max, [&](long q) { return pow(F(s), 2) * sums[q] * (2 * sgn(s * q)); },
                [&](long q) {
                    return F(s) * (F(s * (2 * q + 1)) * BigInt(2 * q) + F(s * q) * L(s * (q + 1))) -
                           L(s) * F(s * (q + 1)) * F(s * q);
                });
        }
        case IdentityId::DerivativeFib2sWeighted: {
            const auto sums = detail::partial_sums(q_max, [&](long n) { return F(2 * s * n) * (sgn(s * n) * n); });
            return detail::compare_over_q(
                q_max, [&](long q) { return x2_plus_4() * pow(F(s), 2) * sums[q] * sgn(s * q); },
                [&](long q) { return F(2 * s * q) * sgn(s + 1) + F(s) * L(s * (2 * q + 1)) * BigInt(q); });
        }
    }
    throw UnknownIdentity("identity not in catalog");
}

/// Catalog identities other than the derivative family.
inline bool named_identity(std::string_view tag, long s, long q_max) {
    const auto& info = find_identity(tag);
    if (info.derivative) throw UnknownIdentity("'" + std::string(tag) + "' is a derivative identity");
    return !find_identity_failure(info.id, s, q_max);
}

/// The three derivative identities, compared after clearing denominators.
inline bool derivative_identity(std::string_view tag, long s, long q_max) {
    const auto& info = find_identity(tag);
    if (!info.derivative) throw UnknownIdentity("'" + std::string(tag) + "' is not a derivative identity");
    return !find_identity_failure(info.id, s, q_max);
}

}  // namespace fibopoly

#endif  // FIBOPOLY_POWERSUMS_HPP
