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

#ifndef FIBOPOLY_ACCEPTANCE_HPP
#define FIBOPOLY_ACCEPTANCE_HPP

/**
 * @file acceptance.hpp
 * @brief The release acceptance suite: eleven exact checks, each with a
 *        wall-clock budget. Shared by the acceptance test binary and the
 *        `selftest` CLI subcommand.
 *
 * All comparisons are exact polynomial equalities; there is no tolerance.
 * A criterion passes only if every check in it holds and it finishes
 * within its budget.
 */

#include <chrono>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "fibopoly/fibopolynomial.hpp"
#include "fibopoly/lucas_seq.hpp"
#include "fibopoly/powersums.hpp"
#include "fibopoly/scanner.hpp"
#include "fibopoly/ztransform.hpp"

namespace fibopoly::acceptance {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool passed = false;
    std::string detail;
    double seconds = 0.0;
    double budget_seconds = 0.0;
};

namespace detail {

/// Collects failures; the first few are kept for the report line.
class Tally {
   public:
    void expect(bool ok, const std::string& what) {
        ++checks_;
        if (ok) return;
        ++failures_;
        if (failures_ <= 3) notes_ << (failures_ > 1 ? "; " : "") << what;
    }
    bool ok() const { return failures_ == 0; }
    std::string summary() const {
        std::ostringstream os;
        os << checks_ << " checks";
        if (failures_) os << ", " << failures_ << " failed: " << notes_.str();
        return os.str();
    }

   private:
    long checks_ = 0;
    long failures_ = 0;
    std::ostringstream notes_;
};

inline std::string spec_str(long t, long k, long s, SeqKind kind) {
    return "t=" + std::to_string(t) + " k=" + std::to_string(k) + " s=" + std::to_string(s) + " " +
           std::string(to_string(kind));
}

inline BigInt sgn(long long e) { return BigInt(neg_one_pow(e)); }

inline void fibopolynomial_routes(Tally& tally) {
    for (long s = 1; s <= 4; ++s)
        for (long n = 0; n <= 12; ++n)
            for (long k = 0; k <= n; ++k) {
                const PolyX rec = fibopolynomial(n, k, s);
                const std::string at = "(" + std::to_string(n) + "," + std::to_string(k) + "," + std::to_string(s) + ")";
                tally.expect(rec == fibopolynomial_quotient({n, k, s}), "routes differ at " + at);
                tally.expect(rec == fibopolynomial(n, n - k, s), "symmetry fails at " + at);
                tally.expect(rec.degree() == s * k * (n - k), "degree law fails at " + at);
            }
}

inline void identity_toolkit(Tally& tally) {
    for (long s = 1; s <= 4; ++s)
        for (long p = 1; p <= 5; ++p)
            tally.expect(check_quotient_identities(s, p), "quotient identities s=" + std::to_string(s) + " p=" + std::to_string(p));
    for (long M = -4; M <= 4; ++M)
        for (long N = -4; N <= 4; ++N)
            for (long K = -4; K <= 4; ++K)
                for (auto v : {IndexReduction::FF, IndexReduction::FL, IndexReduction::LL})
                    tally.expect(check_index_reduction(M, N, K, v), "index reduction M=" + std::to_string(M) +
                                                                        " N=" + std::to_string(N) + " K=" + std::to_string(K));
    for (long n = -40; n <= 40; ++n) {
        const PolyX f = fib_poly(n), l = lucas_poly(n);
        tally.expect(l * l - x2_plus_4() * f * f == PolyX::constant(4 * neg_one_pow(n)),
                     "L^2 - (x^2+4) F^2 at n=" + std::to_string(n));
    }
}

inline void denominators(Tally& tally) {
    for (long s = 1; s <= 4; ++s)
        for (long tk = 1; tk <= 8; ++tk)
            tally.expect(build_denominator(s, tk) == build_denominator_factored(s, tk),
                         "denominator s=" + std::to_string(s) + " tk=" + std::to_string(tk));
}

inline void transforms(Tally& tally) {
    for (long t = 1; t <= 6; ++t)
        for (long k = 1; t * k <= 6; ++k)
            for (long s = 1; s <= 3; ++s)
                for (SeqKind kind : {SeqKind::Fibonacci, SeqKind::Lucas}) {
                    const ZParams p{t, k, s, kind};
                    tally.expect(series_check(make_rational_z(p), 25), "series " + spec_str(t, k, s, kind));
                    tally.expect(expansion_check(p, 20), "expansion " + spec_str(t, k, s, kind));
                }
    const PolyX x = variable<BigInt>();
    tally.expect(build_denominator(1, 1) == PolyZX{PolyX{-1}, -x, PolyX{1}}, "denominator z^2 - xz - 1");
    tally.expect(build_numerator(1, 1, 1, SeqKind::Fibonacci) == PolyZX{PolyX{}, PolyX{1}}, "Fibonacci numerator z");
    tally.expect(build_numerator(1, 1, 1, SeqKind::Lucas) == PolyZX{PolyX{}, -x, PolyX{2}}, "Lucas numerator z(2z - x)");
}

struct GridOutcome {
    std::vector<ConditionReport> reports;
};

inline std::vector<SumSpec> expansion_grid() {
    std::vector<SumSpec> specs;
    for (long t = 1; t <= 6; ++t)
        for (long k = 1; k <= 6; ++k) {
            if (t * k > 8) continue;
            for (long s = 1; s <= 4; ++s)
                for (SeqKind kind : {SeqKind::Fibonacci, SeqKind::Lucas})
                    for (SignMode sign : {SignMode::Plain, SignMode::Alternating}) specs.push_back({t, k, s, kind, sign});
        }
    return specs;
}

inline void expansion_equivalence(Tally& tally) {
    for (const auto& spec : expansion_grid()) {
        const auto report = admissibility_condition(spec);
        tally.expect(verify_expansion(spec, 8) == report.is_zero, "iff fails for " + describe(spec));
        tally.expect(verify_unconditional_decomposition(spec, 8), "unconditional fails for " + describe(spec));
    }
}

inline void table_soundness(Tally& tally) {
    long predicted = 0;
    for (const auto& spec : expansion_grid()) {
        const auto report = admissibility_condition(spec);
        if (!report.table_predicts) continue;
        ++predicted;
        tally.expect(report.is_zero, "alarm: predicted but nonzero for " + describe(spec));
    }
    tally.expect(predicted > 0, "no predicted rows on the grid");
}

inline void cubes_condition(Tally& tally) {
    for (long s = 1; s <= 4; ++s) {
        const PolyX cond = condition_polynomial({1, 3, s, SeqKind::Fibonacci, SignMode::Plain});
        const PolyX expected =
            -pow(fib_poly(s), 3) * (lucas_poly(s) * BigInt(2) + PolyX::constant(1 + neg_one_pow(s)));
        tally.expect(cond == expected, "cubes condition s=" + std::to_string(s));
    }
}

/// base coefficients m = 1..tk that a printed identity implies.
inline void expect_coeffs(Tally& tally, const SumSpec& spec, const std::vector<PolyX>& expected, const std::string& what) {
    const auto e = expansion_coefficients(spec);
    tally.expect(e.base_coeffs == expected, what + " (" + describe(spec) + ")");
}

inline void printed_coefficients(Tally& tally) {
    const auto F = fib_poly;
    const auto L = lucas_poly;
    for (long s = 1; s <= 4; ++s) {
        const PolyX f4s = F(4 * s);
        expect_coeffs(tally, {4, 1, s, SeqKind::Fibonacci, SignMode::Plain},
                      {f4s, f4s * L(2 * s) * sgn(s + 1), f4s, PolyX{}}, "fib 4s sum coefficients");
        expect_coeffs(tally, {4, 1, s, SeqKind::Lucas, SignMode::Plain},
                      {-L(4 * s), (L(6 * s) + L(2 * s) + PolyX::constant(2 * neg_one_pow(s))) * sgn(s),
                       L(2 * s) * (2 * sgn(s + 1)) - L(4 * s), PolyX{2}},
                      "lucas 4s sum coefficients");
    }
    {
        const auto e = expansion_coefficients({1, 6, 1, SeqKind::Fibonacci, SignMode::SPlusOnePower});
        const std::vector<BigInt> expected{1, -11, -64, -11, 1, 0};
        std::vector<BigInt> got;
        for (long m = 1; m <= 6; ++m) got.push_back(evaluate(e.base(m), BigInt(1)));
        tally.expect(!e.q_parity_twist && got == expected, "sixth powers at x=1: (1,-11,-64,-11,1,0)");
    }
    // alternating shapes: base[m] (-1)^{q+m} = (-1)^q * printed[m]
    for (long s = 1; s <= 3; ++s) {
        const PolyX f4 = pow(F(s), 4);
        const std::vector<PolyX> fourth{f4, f4 * (L(2 * s) * (3 * sgn(s)) + PolyX{4}), f4, PolyX{}};
        const PolyX f2 = pow(F(2 * s), 2);
        const std::vector<PolyX> squares{f2, f2 * L(2 * s) * sgn(s + 1), f2, PolyX{}};
        std::vector<PolyX> fourth_base, squares_base;
        for (long m = 1; m <= 4; ++m) {
            fourth_base.push_back(fourth[m - 1] * sgn(m));
            squares_base.push_back(squares[m - 1] * sgn(m));
        }
        const auto e4 = expansion_coefficients({1, 4, s, SeqKind::Fibonacci, SignMode::Alternating});
        tally.expect(e4.q_parity_twist && e4.base_coeffs == fourth_base, "alternating fourth powers s=" + std::to_string(s));
        const auto e2 = expansion_coefficients({2, 2, s, SeqKind::Fibonacci, SignMode::Alternating});
        tally.expect(e2.q_parity_twist && e2.base_coeffs == squares_base, "alternating 2s squares s=" + std::to_string(s));
    }
}

inline void identity_catalog(Tally& tally) {
    tally.expect(named_identity("1.15", 1, 20), "fibonacci squares to q=20");
    for (long s = 1; s <= 4; ++s)
        for (const char* tag : {"4.21", "4.24", "4.27", "4.44", "4.45", "4.19", "4.20", "4.43"})
            tally.expect(named_identity(tag, s, 10), std::string(tag) + " s=" + std::to_string(s));
}

inline void derivatives(Tally& tally) {
    for (long n = -30; n <= 30; ++n) tally.expect(check_derivative_formulas(n), "derivative formulas n=" + std::to_string(n));
    for (long s = 1; s <= 3; ++s)
        for (const char* tag : {"5.4", "5.5", "5.39"})
            tally.expect(derivative_identity(tag, s, 8), std::string(tag) + " s=" + std::to_string(s));
}

inline void conjecture_scan(Tally& tally) {
    const auto report = scan(default_scan_grid());
    const auto candidates = conjecture_evidence(report);
    tally.expect(candidates.empty(), std::to_string(candidates.size()) + " counterexample candidates");
    tally.expect(report.summary.predicted_nonzero == 0, "soundness alarms in scan");
    tally.expect(report.summary.cross_check_disagreements == 0, "direct cross-check disagreements in scan");
    static constexpr const char* kRoman[] = {"i", "ii", "iii", "iv", "v", "vi", "vii"};
    for (int c = 0; c < 7; ++c) {
        const long rows = report.summary.uncovered_class_rows[c];
        tally.expect(rows > 0 && report.summary.uncovered_class_nonzero[c] == rows,
                     std::string("class (") + kRoman[c] + ") missing or has a zero condition");
    }
}

}  // namespace detail

struct Criterion {
    int id;
    std::string name;
    double budget_seconds;
    std::function<void(detail::Tally&)> body;
};

inline std::vector<Criterion> criteria() {
    return {
        {1, "fibopolynomial route agreement, symmetry, degree", 10, detail::fibopolynomial_routes},
        {2, "quotient, index-reduction and L^2-(x^2+4)F^2 identities", 10, detail::identity_toolkit},
        {3, "signed-sum denominator equals factored denominator", 30, detail::denominators},
        {4, "Z-transform series and Fibopolynomial expansion", 120, detail::transforms},
        {5, "expansion holds iff condition vanishes; unconditional decomposition", 300, detail::expansion_equivalence},
        {6, "parity table soundness", 300, detail::table_soundness},
        {7, "sum-of-cubes condition polynomial", 5, detail::cubes_condition},
        {8, "printed expansion coefficients", 30, detail::printed_coefficients},
        {9, "named identity catalog and sign-unified families", 120, detail::identity_catalog},
        {10, "derivative formulas and derivative identities", 60, detail::derivatives},
        {11, "conjecture scan on the default grid", 300, detail::conjecture_scan},
    };
}

inline CriterionResult run_criterion(const Criterion& c) {
    detail::Tally tally;
    const auto start = std::chrono::steady_clock::now();
    std::string error;
    try {
        c.body(tally);
    } catch (const std::exception& e) {
        error = e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    CriterionResult r{c.id, c.name, false, tally.summary(), secs, c.budget_seconds};
    r.passed = error.empty() && tally.ok() && secs < c.budget_seconds;
    if (!error.empty()) r.detail += "; exception: " + error;
    if (secs >= c.budget_seconds) r.detail += "; over time budget";
    return r;
}

/// Runs every criterion; `on_result` (optional) sees each result as it lands.
inline std::vector<CriterionResult> run_all(const std::function<void(const CriterionResult&)>& on_result = {}) {
    std::vector<CriterionResult> out;
    for (const auto& c : criteria()) {
        out.push_back(run_criterion(c));
        if (on_result) on_result(out.back());
    }
    return out;
}

inline std::string format_line(const CriterionResult& r) {
    std::ostringstream os;
    os.setf(std::ios::fixed);
    os.precision(2);
    os << (r.passed ? "PASS" : "FAIL") << "  [" << r.id << "] " << r.name << "  (" << r.seconds << "s / " << r.budget_seconds
       << "s)  " << r.detail;
    return os.str();
}

}  // namespace fibopoly::acceptance

#endif  // FIBOPOLY_ACCEPTANCE_HPP
