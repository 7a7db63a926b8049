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

#ifndef FIBOPOLY_CLI_HPP
#define FIBOPOLY_CLI_HPP

/**
 * @file cli.hpp
 * @brief Command implementations behind the fibopoly executable.
 *
 * Every command returns an Envelope; argument parsing and I/O live in the
 * executable. Polynomials travel as ascending lists of decimal strings:
 * ["1", "0", "3", "0", "1"] is x^4 + 3x^2 + 1. The zero polynomial is [].
 *
 * CSV output. `scan` emits one row per spec with columns
 * t,k,s,kind,sign,is_zero,predicted,direct_check. `selftest` emits one row
 * per criterion. Every other command emits a long table field,index,value
 * where a polynomial value is its coefficient list joined by spaces.
 */

#include <algorithm>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "fibopoly/acceptance.hpp"
#include "fibopoly/bigpoly.hpp"
#include "fibopoly/fibopolynomial.hpp"
#include "fibopoly/lucas_seq.hpp"
#include "fibopoly/powersums.hpp"
#include "fibopoly/scanner.hpp"
#include "json.hpp"

namespace fibopoly::cli {

using json = nlohmann::ordered_json;

inline constexpr std::string_view kSchemaVersion = "1.0";

enum class Status { Ok, IdentityFailed, InvalidInput };

inline std::string_view to_string(Status s) {
    switch (s) {
        case Status::Ok: return "ok";
        case Status::IdentityFailed: return "identity_failed";
        case Status::InvalidInput: return "invalid_input";
    }
    return "?";
}

inline int exit_code(Status s) {
    switch (s) {
        case Status::Ok: return 0;
        case Status::IdentityFailed: return 1;
        case Status::InvalidInput: return 2;
    }
    return 2;
}

enum class Format { Json, Csv };

inline std::optional<Format> parse_format(std::string_view text) {
    if (text == "json") return Format::Json;
    if (text == "csv") return Format::Csv;
    return std::nullopt;
}

struct Envelope {
    std::string command;
    json params = json::object();
    json result = json::object();
    Status status = Status::Ok;

    json to_json() const {
        json j;
        j["schema_version"] = kSchemaVersion;
        j["command"] = command;
        j["params"] = params;
        j["result"] = result;
        j["status"] = to_string(status);
        return j;
    }
};

// ---------------------------------------------------------------------------
// Polynomial (de)serialization
// ---------------------------------------------------------------------------

inline json poly_to_json(const PolyX& p) {
    json arr = json::array();
    for (const auto& c : p.coeffs()) arr.push_back(c.str());
    return arr;
}

inline BigInt parse_bigint(std::string_view text) {
    const std::size_t digits_from = (!text.empty() && text[0] == '-') ? 1 : 0;
    if (text.size() == digits_from) throw InvalidIndex("empty integer literal");
    for (std::size_t i = digits_from; i < text.size(); ++i)
        if (text[i] < '0' || text[i] > '9') throw InvalidIndex("malformed integer literal '" + std::string(text) + "'");
    return BigInt(std::string(text));
}

/// Inverse of poly_to_json. Trailing zeros are accepted and dropped.
inline PolyX poly_from_json(const json& arr) {
    if (!arr.is_array()) throw InvalidIndex("polynomial must be a JSON array of decimal strings");
    std::vector<BigInt> coeffs;
    for (const auto& c : arr) {
        if (!c.is_string()) throw InvalidIndex("polynomial coefficients must be decimal strings");
        coeffs.push_back(parse_bigint(c.get<std::string>()));
    }
    return PolyX(std::move(coeffs));
}

inline std::string poly_to_csv_cell(const PolyX& p) {
    std::string out;
    for (const auto& c : p.coeffs()) {
        if (!out.empty()) out += ' ';
        out += c.str();
    }
    return out;
}

inline PolyX poly_from_csv_cell(std::string_view cell) {
    std::vector<BigInt> coeffs;
    std::istringstream in{std::string(cell)};
    for (std::string tok; in >> tok;) coeffs.push_back(parse_bigint(tok));
    return PolyX(std::move(coeffs));
}

namespace detail {

inline json spec_to_json(const SumSpec& spec) {
    return json{{"t", spec.t}, {"k", spec.k}, {"s", spec.s}, {"kind", to_string(spec.kind)}, {"sign", to_string(spec.sign)}};
}

inline SeqKind require_kind(std::string_view text) {
    if (auto kind = parse_seq_kind(text)) return *kind;
    throw InvalidIndex("unknown kind '" + std::string(text) + "' (expected fib or lucas)");
}

inline SignMode require_sign(std::string_view text) {
    if (auto sign = parse_sign_mode(text)) return *sign;
    throw InvalidIndex("unknown sign '" + std::string(text) + "' (expected plain, alt, spower or s1power)");
}

inline void require_q_max(long q_max) {
    if (q_max < 0) throw InvalidIndex("q-max must be >= 0");
}

inline std::vector<std::string> split_list(std::string_view text) {
    std::vector<std::string> out;
    std::string item;
    std::istringstream in{std::string(text)};
    while (std::getline(in, item, ','))
        if (!item.empty()) out.push_back(item);
    return out;
}

inline json failure_to_json(long q, const PolyX& difference, std::optional<long> x0) {
    json f{{"q", q}, {"difference", poly_to_json(difference)}, {"difference_text", to_string(difference)}};
    if (x0) f["difference_value"] = evaluate(difference, BigInt(*x0)).str();
    return f;
}

/// Runs `body` and turns library input errors into an invalid_input envelope.
inline Envelope guarded(std::string command, json params, const std::function<void(Envelope&)>& body) {
    Envelope env{std::move(command), std::move(params)};
    try {
        body(env);
    } catch (const Error& e) {
        env.status = Status::InvalidInput;
        env.result = json{{"error", e.what()}};
    } catch (const std::invalid_argument& e) {
        env.status = Status::InvalidInput;
        env.result = json{{"error", e.what()}};
    } catch (const std::out_of_range& e) {
        env.status = Status::InvalidInput;
        env.result = json{{"error", e.what()}};
    }
    return env;
}

inline json optional_to_json(std::optional<long> v) { return v ? json(*v) : json(nullptr); }

}  // namespace detail

/// Envelope for input rejected before any command ran (e.g. a bad flag).
inline Envelope invalid_input(std::string command, std::string message, json params = json::object()) {
    return Envelope{std::move(command), std::move(params), json{{"error", std::move(message)}}, Status::InvalidInput};
}

// ---------------------------------------------------------------------------
// Commands
// ---------------------------------------------------------------------------

inline Envelope cmd_eval(std::string_view kind, long n, std::optional<long> x0) {
    json params{{"kind", kind}, {"n", n}, {"x0", detail::optional_to_json(x0)}};
    return detail::guarded("eval", params, [&](Envelope& env) {
        const PolyX p = seq_poly(detail::require_kind(kind), n);
        env.result = json{{"coeffs", poly_to_json(p)}, {"degree", p.degree()}, {"text", to_string(p)}};
        if (x0) env.result["value"] = evaluate(p, BigInt(*x0)).str();
    });
}

inline Envelope cmd_fibopoly(long n, long k, long s, std::optional<long> x0) {
    json params{{"n", n}, {"k", k}, {"s", s}, {"x0", detail::optional_to_json(x0)}};
    return detail::guarded("fibopoly", params, [&](Envelope& env) {
        const PolyX p = fibopolynomial(n, k, s);
        env.result = json{{"coeffs", poly_to_json(p)}, {"degree", p.degree()}, {"text", to_string(p)}};
        if (x0) env.result["value"] = evaluate(p, BigInt(*x0)).str();
    });
}

inline Envelope cmd_coeffs(long t, long k, long s, std::string_view kind, std::string_view sign, std::optional<long> x0) {
    json params{{"t", t}, {"k", k}, {"s", s}, {"kind", kind}, {"sign", sign}, {"x0", detail::optional_to_json(x0)}};
    return detail::guarded("coeffs", params, [&](Envelope& env) {
        const SumSpec spec{t, k, s, detail::require_kind(kind), detail::require_sign(sign)};
        const auto expansion = expansion_coefficients(spec);
        const auto report = admissibility_condition(spec);

        json coeffs = json::array();
        for (long m = 1; m <= spec.tk(); ++m) {
            json entry{{"m", m}, {"coeffs", poly_to_json(expansion.base(m))}, {"text", to_string(expansion.base(m))}};
            if (x0) entry["value"] = evaluate(expansion.base(m), BigInt(*x0)).str();
            coeffs.push_back(std::move(entry));
        }
        env.result = json{{"spec", detail::spec_to_json(spec)},
                          {"resolved_sign", to_string(resolve(spec).sign)},
                          {"q_parity_twist", expansion.q_parity_twist},
                          {"coefficients", std::move(coeffs)},
                          {"condition_poly", poly_to_json(report.condition_poly)},
                          {"condition_text", to_string(report.condition_poly)},
                          {"is_zero", report.is_zero},
                          {"table_predicts", report.table_predicts}};
        if (x0) env.result["condition_value"] = evaluate(report.condition_poly, BigInt(*x0)).str();
    });
}

inline Envelope cmd_verify_identity(std::string_view tag, long s, long q_max, std::optional<long> x0) {
    json params{{"id", tag}, {"s", s}, {"q_max", q_max}, {"x0", detail::optional_to_json(x0)}};
    return detail::guarded("verify", params, [&](Envelope& env) {
        detail::require_q_max(q_max);
        if (s < 1) throw InvalidIndex("s must be >= 1");
        const auto& info = find_identity(tag);
        const auto failure = find_identity_failure(info.id, s, q_max);
        env.result = json{{"mode", "identity"},
                          {"id", info.tag},
                          {"name", info.name},
                          {"statement", info.statement},
                          {"holds", !failure}};
        if (failure) {
            env.status = Status::IdentityFailed;
            env.result["failure"] = detail::failure_to_json(failure->q, failure->difference, x0);
            if (!failure->detail.empty()) env.result["failure"]["detail"] = failure->detail;
        }
    });
}

inline Envelope cmd_verify_spec(long t, long k, long s, std::string_view kind, std::string_view sign, long q_max,
                                std::optional<long> x0) {
    json params{{"t", t},   {"k", k}, {"s", s}, {"kind", kind}, {"sign", sign}, {"q_max", q_max},
                {"x0", detail::optional_to_json(x0)}};
    return detail::guarded("verify", params, [&](Envelope& env) {
        detail::require_q_max(q_max);
        const SumSpec spec{t, k, s, detail::require_kind(kind), detail::require_sign(sign)};
        validate(spec);
        const auto mismatch = find_expansion_mismatch(spec, q_max);
        const auto report = admissibility_condition(spec);
        env.result = json{{"mode", "spec"},
                          {"spec", detail::spec_to_json(spec)},
                          {"holds", !mismatch},
                          {"condition_poly", poly_to_json(report.condition_poly)},
                          {"is_zero", report.is_zero},
                          {"table_predicts", report.table_predicts}};
        if (mismatch) {
            env.status = Status::IdentityFailed;
            env.result["failure"] = detail::failure_to_json(mismatch->q, mismatch->difference, x0);
        }
    });
}

struct ScanArgs {
    long t_min = 1, t_max = 6;
    long k_min = 1, k_max = 6;
    long s_min = 1, s_max = 4;
    std::string kinds = "fib,lucas";
    std::string signs = "plain,alt";
    long tk_cap = 8;
    long q_check = 6;
    unsigned threads = 0;
};

inline json scan_row_to_json(const ScanRow& row) {
    json j = detail::spec_to_json(row.report.spec);
    j["is_zero"] = row.report.is_zero;
    j["predicted"] = row.report.table_predicts;
    j["direct_check"] = to_string(row.direct);
    j["direct_agrees"] = row.direct_agrees;
    j["condition_poly"] = poly_to_json(row.report.condition_poly);
    return j;
}

/// Soundness alarms and cross-check disagreements fail the scan; candidate
/// counterexamples to the necessity conjecture are reported, not failed.
inline Envelope cmd_scan(const ScanArgs& a) {
    json params{{"t", {a.t_min, a.t_max}}, {"k", {a.k_min, a.k_max}}, {"s", {a.s_min, a.s_max}},
                {"kinds", a.kinds},        {"signs", a.signs},          {"tk_cap", a.tk_cap},
                {"q_check", a.q_check},    {"threads", a.threads}};
    return detail::guarded("scan", params, [&](Envelope& env) {
        ScanGrid grid{{a.t_min, a.t_max}, {a.k_min, a.k_max}, {a.s_min, a.s_max}, {}, {}, a.tk_cap, a.q_check};
        for (const auto& k : detail::split_list(a.kinds)) grid.kinds.push_back(detail::require_kind(k));
        for (const auto& s : detail::split_list(a.signs)) grid.signs.push_back(detail::require_sign(s));
        if (grid.kinds.empty() || grid.signs.empty()) throw InvalidIndex("scan needs at least one kind and one sign");
        if (a.q_check < 0) throw InvalidIndex("q-check must be >= 0");

        const ScanReport report = scan(grid, a.threads);
        const auto& sum = report.summary;
        json classes = json::array();
        static constexpr const char* kRoman[] = {"i", "ii", "iii", "iv", "v", "vi", "vii"};
        for (int c = 0; c < 7; ++c)
            classes.push_back(json{{"class", kRoman[c]},
                                   {"rows", sum.uncovered_class_rows[c]},
                                   {"nonzero", sum.uncovered_class_nonzero[c]}});
        json rows = json::array();
        for (const auto& row : report.rows) rows.push_back(scan_row_to_json(row));
        json candidates = json::array();
        for (const auto& row : conjecture_evidence(report)) candidates.push_back(scan_row_to_json(row));

        env.result = json{{"summary",
                           {{"rows", report.rows.size()},
                            {"predicted_zero", sum.predicted_zero},
                            {"predicted_nonzero", sum.predicted_nonzero},
                            {"unpredicted_zero", sum.unpredicted_zero},
                            {"unpredicted_nonzero", sum.unpredicted_nonzero},
                            {"cross_check_disagreements", sum.cross_check_disagreements}}},
                          {"uncovered_classes", std::move(classes)},
                          {"candidates", std::move(candidates)},
                          {"rows", std::move(rows)}};
        if (sum.predicted_nonzero > 0 || sum.cross_check_disagreements > 0) env.status = Status::IdentityFailed;
    });
}

inline Envelope cmd_selftest(const std::function<void(const acceptance::CriterionResult&)>& on_result = {}) {
    Envelope env{"selftest"};
    json criteria = json::array();
    long passed = 0;
    for (const auto& r : acceptance::run_all(on_result)) {
        passed += r.passed;
        criteria.push_back(json{{"id", r.id},
                                {"name", r.name},
                                {"passed", r.passed},
                                {"seconds", r.seconds},
                                {"budget_seconds", r.budget_seconds},
                                {"detail", r.detail}});
    }
    const long total = static_cast<long>(criteria.size());
    env.result = json{{"passed", passed}, {"total", total}, {"criteria", std::move(criteria)}};
    if (passed != total) env.status = Status::IdentityFailed;
    return env;
}

// ---------------------------------------------------------------------------
// Rendering
// ---------------------------------------------------------------------------

inline std::string render_json(const Envelope& env) { return env.to_json().dump(2) + "\n"; }

namespace detail {

inline std::string csv_escape(const std::string& cell) {
    if (cell.find_first_of(",\"\n") == std::string::npos) return cell;
    std::string out = "\"";
    for (char c : cell) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

inline std::string csv_value(const json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_null()) return "";
    if (v.is_array() && std::all_of(v.begin(), v.end(), [](const json& e) { return e.is_string(); })) {
        std::string out;
        for (const auto& e : v) out += (out.empty() ? "" : " ") + e.get<std::string>();
        return out;
    }
    return v.dump();
}

/// Flattens a JSON object into field,index,value lines. Arrays of objects
/// contribute one line per member field with the element position as index.
inline void flatten(const json& obj, const std::string& prefix, std::ostringstream& os) {
    for (const auto& [key, value] : obj.items()) {
        const std::string field = prefix.empty() ? key : prefix + "." + key;
        if (value.is_object()) {
            flatten(value, field, os);
        } else if (value.is_array() && !value.empty() && value.front().is_object()) {
            for (std::size_t i = 0; i < value.size(); ++i)
                for (const auto& [k2, v2] : value[i].items())
                    os << csv_escape(field + "." + k2) << ',' << i << ',' << csv_escape(csv_value(v2)) << '\n';
        } else {
            os << csv_escape(field) << ",," << csv_escape(csv_value(value)) << '\n';
        }
    }
}

}  // namespace detail

inline constexpr std::string_view kScanCsvHeader = "t,k,s,kind,sign,is_zero,predicted,direct_check";

inline std::string render_csv(const Envelope& env) {
    std::ostringstream os;
    const auto b = [](bool v) { return v ? "true" : "false"; };
    if (env.status == Status::Ok || env.status == Status::IdentityFailed) {
        if (env.command == "scan") {
            os << kScanCsvHeader << '\n';
            for (const auto& r : env.result["rows"])
                os << r["t"].get<long>() << ',' << r["k"].get<long>() << ',' << r["s"].get<long>() << ','
                   << r["kind"].get<std::string>() << ',' << r["sign"].get<std::string>() << ','
                   << b(r["is_zero"].get<bool>()) << ',' << b(r["predicted"].get<bool>()) << ','
                   << r["direct_check"].get<std::string>() << '\n';
            return os.str();
        }
        if (env.command == "selftest") {
            os << "id,name,passed,seconds,budget_seconds,detail\n";
            for (const auto& c : env.result["criteria"])
                os << c["id"].get<int>() << ',' << detail::csv_escape(c["name"].get<std::string>()) << ','
                   << b(c["passed"].get<bool>()) << ',' << c["seconds"].get<double>() << ','
                   << c["budget_seconds"].get<double>() << ',' << detail::csv_escape(c["detail"].get<std::string>())
                   << '\n';
            return os.str();
        }
    }
    os << "field,index,value\n";
    os << "status,," << to_string(env.status) << '\n';
    detail::flatten(env.result, "", os);
    return os.str();
}

inline std::string render(const Envelope& env, Format format) {
    return format == Format::Csv ? render_csv(env) : render_json(env);
}

}  // namespace fibopoly::cli

#endif  // FIBOPOLY_CLI_HPP
