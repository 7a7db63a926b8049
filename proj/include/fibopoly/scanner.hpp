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

#ifndef FIBOPOLY_SCANNER_HPP
#define FIBOPOLY_SCANNER_HPP

// Grid scan over (t, k, s, kind, sign): exact condition polynomials against
// the parity-table predictions. Rows come back in grid order whatever the
// thread count.

#include <algorithm>
#include <array>
#include <atomic>
#include <exception>
#include <mutex>
#include <optional>
#include <thread>
#include <vector>

#include "fibopoly/powersums.hpp"

namespace fibopoly {

struct IntRange {
    long lo = 1;
    long hi = 1;
};

struct ScanGrid {
    IntRange t{1, 6};
    IntRange k{1, 6};
    IntRange s{1, 4};
    std::vector<SeqKind> kinds{SeqKind::Fibonacci, SeqKind::Lucas};
    std::vector<SignMode> signs{SignMode::Plain, SignMode::Alternating};
    long tk_cap = 8;
    long q_check = 6;  // 0 disables the direct-sum cross-check; otherwise runs to max(q_check, tk)
};

inline ScanGrid default_scan_grid() { return ScanGrid{}; }

enum class DirectCheck { Passed, Failed, Skipped };

inline std::string_view to_string(DirectCheck d) {
    switch (d) {
        case DirectCheck::Passed: return "passed";
        case DirectCheck::Failed: return "failed";
        case DirectCheck::Skipped: return "skipped";
    }
    return "?";
}

struct ScanRow {
    ConditionReport report;
    DirectCheck direct = DirectCheck::Skipped;
    bool direct_agrees = true;  // direct outcome matches is_zero (trivially true when skipped)
};

/// Parity class i..vii (1..7) of (t, k, s) not covered by the plain
/// Fibonacci table; nullopt when the table covers it.
inline std::optional<int> uncovered_parity_class(long t, long k, long s) {
    const bool te = t % 2 == 0, ke = k % 2 == 0, se = s % 2 == 0;
    if (te && ke && se) return 1;
    if (te && ke && !se) return 2;
    if (!te && ke && se) return 3;
    if (t % 4 == 2 && !ke && !se) return 4;
    if (!te && k % 4 == 0 && !se) return 5;
    if (!te && !ke && se) return 6;
    if (!te && !ke && !se) return 7;
    return std::nullopt;
}

struct ScanSummary {
    long predicted_zero = 0;
    long predicted_nonzero = 0;  // soundness alarms
    long unpredicted_zero = 0;   // conjecture counterexample candidates
    long unpredicted_nonzero = 0;
    long cross_check_disagreements = 0;
    std::array<long, 7> uncovered_class_rows{};     // plain Fibonacci rows per class i..vii
    std::array<long, 7> uncovered_class_nonzero{};  // ... with nonzero condition
};

struct ScanReport {
    ScanGrid grid;
    std::vector<ScanRow> rows;
    ScanSummary summary;
};

/// Specs of the grid in deterministic order: t, k, s, kind, sign.
inline std::vector<SumSpec> enumerate_specs(const ScanGrid& grid) {
    if (grid.t.lo < 1 || grid.k.lo < 1 || grid.s.lo < 1 || grid.tk_cap < 1)
        throw InvalidIndex("scan ranges and tk cap must be >= 1");
    std::vector<SumSpec> specs;
    for (long t = grid.t.lo; t <= grid.t.hi; ++t)
        for (long k = grid.k.lo; k <= grid.k.hi; ++k) {
            if (t * k > grid.tk_cap) continue;
            for (long s = grid.s.lo; s <= grid.s.hi; ++s)
                for (SeqKind kind : grid.kinds)
                    for (SignMode sign : grid.signs) specs.push_back(SumSpec{t, k, s, kind, sign});
        }
    return specs;
}

/// Horizon of the direct-sum cross-check. For q < tk every binom(n, tk) with
/// n <= q vanishes, so the trailing term cannot show up before q = tk.
inline long direct_check_horizon(const SumSpec& spec, long q_check) { return std::max(q_check, spec.tk()); }

inline ScanRow scan_row(const SumSpec& spec, long q_check) {
    ScanRow row{admissibility_condition(spec)};
    if (q_check > 0) {
        const bool ok = verify_expansion(spec, direct_check_horizon(spec, q_check));
        row.direct = ok ? DirectCheck::Passed : DirectCheck::Failed;
        row.direct_agrees = ok == row.report.is_zero;
    }
    return row;
}

inline ScanSummary summarize(const std::vector<ScanRow>& rows) {
    ScanSummary sum;
    for (const auto& row : rows) {
        const auto& r = row.report;
        if (r.table_predicts) (r.is_zero ? sum.predicted_zero : sum.predicted_nonzero)++;
        else (r.is_zero ? sum.unpredicted_zero : sum.unpredicted_nonzero)++;
        if (!row.direct_agrees) sum.cross_check_disagreements++;

        const SumSpec resolved = resolve(r.spec);
        if (resolved.kind == SeqKind::Fibonacci && resolved.sign == SignMode::Plain) {
            if (auto cls = uncovered_parity_class(resolved.t, resolved.k, resolved.s)) {
                sum.uncovered_class_rows[*cls - 1]++;
                if (!r.is_zero) sum.uncovered_class_nonzero[*cls - 1]++;
            }
        }
    }
    return sum;
}

/// threads == 0 picks std::thread::hardware_concurrency().
inline ScanReport scan(const ScanGrid& grid, unsigned threads = 0) {
    const auto specs = enumerate_specs(grid);
    std::vector<ScanRow> rows(specs.size());

    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(1, specs.size())));

    std::atomic<std::size_t> next{0};
    std::mutex error_mutex;
    std::exception_ptr error;
    auto worker = [&] {
        try {
            for (std::size_t i = next++; i < specs.size(); i = next++) rows[i] = scan_row(specs[i], grid.q_check);
        } catch (...) {
            std::lock_guard lock(error_mutex);
            if (!error) error = std::current_exception();
            next = specs.size();
        }
    };
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned i = 0; i < threads; ++i) pool.emplace_back(worker);
    }
    if (error) std::rethrow_exception(error);

    ScanReport report{grid, std::move(rows), {}};
    report.summary = summarize(report.rows);
    return report;
}

/// Rows with a vanishing condition polynomial that no table row predicts.
inline std::vector<ScanRow> conjecture_evidence(const ScanReport& report) {
    std::vector<ScanRow> out;
    std::copy_if(report.rows.begin(), report.rows.end(), std::back_inserter(out),
                 [](const ScanRow& r) { return r.report.is_zero && !r.report.table_predicts; });
    return out;
}

}  // namespace fibopoly

#endif  // FIBOPOLY_SCANNER_HPP
