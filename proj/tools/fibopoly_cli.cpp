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

// fibopoly: evaluate Fibonacci/Lucas polynomials and s-Fibopolynomials,
// print power-sum expansions, verify identities and scan parameter grids.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "fibopoly/cli.hpp"

namespace {

namespace fc = fibopoly::cli;

struct Common {
    std::string format = "json";
    long q_max = 12;
    std::optional<long> x0;
    std::string out;
};

void add_common(CLI::App* sub, Common& c) {
    sub->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("--q-max", c.q_max, "Largest upper summation limit q to check");
    sub->add_option("--x0", c.x0, "Integer evaluation point");
    sub->add_option("--out", c.out, "Write the report here instead of stdout");
}

int emit(const fc::Envelope& env, const Common& c) {
    const auto format = fc::parse_format(c.format).value_or(fc::Format::Json);
    const std::string text = fc::render(env, format);
    if (c.out.empty()) {
        std::cout << text;
    } else {
        std::ofstream file(c.out);
        if (!file) {
            std::cerr << "fibopoly: cannot write " << c.out << '\n';
            std::cout << fc::render(fc::invalid_input(env.command, "cannot write " + c.out), format);
            return fc::exit_code(fc::Status::InvalidInput);
        }
        file << text;
    }
    return fc::exit_code(env.status);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Fibonacci/Lucas polynomial power sums as s-Fibopolynomial combinations", "fibopoly"};
    app.require_subcommand(1);
    Common common;

    std::string kind = "fib", sign = "plain", id;
    long n = 0, k = 1, s = 1, t = 1;

    auto* eval = app.add_subcommand("eval", "Coefficients of F_n(x) or L_n(x)");
    eval->add_option("--kind", kind, "fib or lucas");
    eval->add_option("--n", n, "Index (negative allowed)")->required();
    add_common(eval, common);

    auto* fibo = app.add_subcommand("fibopoly", "Coefficients of the s-Fibopolynomial binom(n,k)_{F_s}");
    fibo->add_option("--n", n)->required();
    fibo->add_option("--k", k)->required();
    fibo->add_option("--s", s);
    add_common(fibo, common);

    auto add_spec = [&](CLI::App* sub) {
        sub->add_option("--t", t);
        sub->add_option("--k", k);
        sub->add_option("--s", s);
        sub->add_option("--kind", kind, "fib or lucas");
        sub->add_option("--sign", sign, "plain, alt, spower or s1power");
    };

    auto* coeffs = app.add_subcommand("coeffs", "Expansion coefficients and admissibility condition of a power sum");
    add_spec(coeffs);
    add_common(coeffs, common);

    auto* verify = app.add_subcommand("verify", "Check a catalog identity (--id) or a power-sum expansion (spec flags)");
    verify->add_option("--id", id, "Catalog tag or name, e.g. 4.44 or lucas-2s-signed");
    add_spec(verify);
    add_common(verify, common);

    fc::ScanArgs scan_args;
    auto* scan = app.add_subcommand("scan", "Scan a (t,k,s,kind,sign) grid for vanishing condition polynomials");
    scan->add_option("--t-min", scan_args.t_min);
    scan->add_option("--t-max", scan_args.t_max);
    scan->add_option("--k-min", scan_args.k_min);
    scan->add_option("--k-max", scan_args.k_max);
    scan->add_option("--s-min", scan_args.s_min);
    scan->add_option("--s-max", scan_args.s_max);
    scan->add_option("--kinds", scan_args.kinds, "Comma list of kinds");
    scan->add_option("--signs", scan_args.signs, "Comma list of sign modes");
    scan->add_option("--tk-cap", scan_args.tk_cap, "Skip specs with t*k above this");
    scan->add_option("--q-check", scan_args.q_check, "Direct-sum cross-check horizon (0 disables)");
    scan->add_option("--threads", scan_args.threads, "Worker threads (0 = hardware concurrency)");
    add_common(scan, common);

    auto* selftest = app.add_subcommand("selftest", "Run the acceptance suite");
    add_common(selftest, common);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::string command;
        for (const auto* sub : app.get_subcommands()) command = sub->get_name();
        const bool csv = common.format == "csv";
        std::cerr << "fibopoly: " << e.what() << '\n';
        std::cout << fc::render(fc::invalid_input(command, e.what()), csv ? fc::Format::Csv : fc::Format::Json);
        return fc::exit_code(fc::Status::InvalidInput);
    }

    if (eval->parsed()) return emit(fc::cmd_eval(kind, n, common.x0), common);
    if (fibo->parsed()) return emit(fc::cmd_fibopoly(n, k, s, common.x0), common);
    if (coeffs->parsed()) return emit(fc::cmd_coeffs(t, k, s, kind, sign, common.x0), common);
    if (verify->parsed()) {
        if (!id.empty()) return emit(fc::cmd_verify_identity(id, s, common.q_max, common.x0), common);
        return emit(fc::cmd_verify_spec(t, k, s, kind, sign, common.q_max, common.x0), common);
    }
    if (scan->parsed()) return emit(fc::cmd_scan(scan_args), common);
    if (selftest->parsed()) {
        const auto env = fc::cmd_selftest([](const fibopoly::acceptance::CriterionResult& r) {
            std::cerr << fibopoly::acceptance::format_line(r) << '\n';
        });
        return emit(env, common);
    }
    return fc::exit_code(fc::Status::InvalidInput);
}
