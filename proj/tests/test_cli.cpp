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

#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "fibopoly/cli.hpp"
#include "oracles.hpp"

namespace {

namespace fc = fibopoly::cli;
using fibopoly::BigInt;
using fibopoly::PolyX;

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    const std::string cmd = std::string(FIBOPOLY_CLI_PATH) + " " + args + " 2>/dev/null";
    RunResult r;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return r;
    char buf[4096];
    for (std::size_t n; (n = fread(buf, 1, sizeof buf, pipe)) > 0;) r.out.append(buf, n);
    const int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) out.push_back(line);
    return out;
}

TEST(CliSerialization, JsonRoundTripOnRandomPolynomials) {
    auto rng = oracle::make_rng();
    for (int i = 0; i < 200; ++i) {
        PolyX p = oracle::random_poly(rng, 10, 1000);
        if (i % 5 == 0) p *= BigInt(1) << (40 * (i % 7));
        const auto text = fc::poly_to_json(p).dump();
        EXPECT_EQ(fc::poly_from_json(fc::json::parse(text)), p);
        EXPECT_EQ(fc::poly_from_csv_cell(fc::poly_to_csv_cell(p)), p);
    }
}

TEST(CliSerialization, CoefficientsAreDecimalStrings) {
    const auto j = fc::poly_to_json(PolyX{BigInt(1) << 100, -3});
    ASSERT_EQ(j.size(), 2u);
    EXPECT_EQ(j[0], "1267650600228229401496703205376");
    EXPECT_EQ(j[1], "-3");
    EXPECT_EQ(fc::poly_to_json(PolyX{}), fc::json::array());
}

TEST(CliSerialization, MalformedInputIsRejected) {
    EXPECT_THROW(fc::poly_from_json(fc::json::parse(R"(["1", 2])")), fibopoly::InvalidIndex);
    EXPECT_THROW(fc::poly_from_json(fc::json::parse(R"(["1.5"])")), fibopoly::InvalidIndex);
    EXPECT_THROW(fc::poly_from_json(fc::json::parse(R"("12")")), fibopoly::InvalidIndex);
    EXPECT_THROW(fc::parse_bigint("-"), fibopoly::InvalidIndex);
    EXPECT_THROW(fc::parse_bigint(""), fibopoly::InvalidIndex);
    EXPECT_EQ(fc::poly_from_json(fc::json::parse(R"(["1", "0", "0"])")), PolyX{1});
}

TEST(CliCommands, Eval) {
    auto env = fc::cmd_eval("fib", 5, std::nullopt);
    EXPECT_EQ(env.status, fc::Status::Ok);
    EXPECT_EQ(fc::poly_from_json(env.result["coeffs"]), (PolyX{1, 0, 3, 0, 1}));
    EXPECT_EQ(env.result["coeffs"], fc::json::parse(R"(["1","0","3","0","1"])"));

    env = fc::cmd_eval("lucas", 0, std::nullopt);
    EXPECT_EQ(env.result["coeffs"], fc::json::parse(R"(["2"])"));

    env = fc::cmd_eval("fib", 10, 1);
    EXPECT_EQ(env.result["value"], "55");

    env = fc::cmd_eval("pell", 3, std::nullopt);
    EXPECT_EQ(env.status, fc::Status::InvalidInput);
    EXPECT_TRUE(env.result.contains("error"));
}

TEST(CliCommands, Fibopoly) {
    auto env = fc::cmd_fibopoly(5, 2, 1, 1);
    EXPECT_EQ(env.result["value"], "15");
    env = fc::cmd_fibopoly(7, 0, 3, std::nullopt);
    EXPECT_EQ(env.result["coeffs"], fc::json::parse(R"(["1"])"));
    env = fc::cmd_fibopoly(4, 2, 2, std::nullopt);
    EXPECT_EQ(env.result["degree"], 8);
    EXPECT_EQ(env.result["coeffs"].size(), 9u);
    env = fc::cmd_fibopoly(2, 3, 1, std::nullopt);
    EXPECT_EQ(env.status, fc::Status::InvalidInput);
}

TEST(CliCommands, Coeffs) {
    auto env = fc::cmd_coeffs(4, 1, 2, "fib", "plain", std::nullopt);
    ASSERT_EQ(env.status, fc::Status::Ok);
    const PolyX f8 = fibopoly::fib_poly(8);
    const auto& c = env.result["coefficients"];
    ASSERT_EQ(c.size(), 4u);
    EXPECT_EQ(fc::poly_from_json(c[0]["coeffs"]), f8);
    EXPECT_EQ(fc::poly_from_json(c[1]["coeffs"]), -f8 * fibopoly::lucas_poly(4));
    EXPECT_EQ(fc::poly_from_json(c[2]["coeffs"]), f8);
    EXPECT_EQ(c[3]["coeffs"], fc::json::array());
    EXPECT_TRUE(env.result["is_zero"].get<bool>());
    EXPECT_TRUE(env.result["table_predicts"].get<bool>());

    env = fc::cmd_coeffs(1, 6, 1, "fib", "s1power", 1);
    std::vector<std::string> values;
    for (const auto& e : env.result["coefficients"]) values.push_back(e["value"].get<std::string>());
    EXPECT_EQ(values, (std::vector<std::string>{"1", "-11", "-64", "-11", "1", "0"}));

    env = fc::cmd_coeffs(1, 3, 1, "fib", "plain", std::nullopt);
    EXPECT_FALSE(env.result["is_zero"].get<bool>());
    EXPECT_EQ(fc::poly_from_json(env.result["condition_poly"]), (PolyX{0, -2}));
}

TEST(CliCommands, VerifyIdentity) {
    auto env = fc::cmd_verify_identity("1.15", 1, 20, std::nullopt);
    EXPECT_EQ(env.status, fc::Status::Ok);
    env = fc::cmd_verify_identity("4.44", 3, 8, std::nullopt);
    EXPECT_EQ(env.status, fc::Status::Ok);
    EXPECT_EQ(env.result["name"], "lucas-2s-signed");
    env = fc::cmd_verify_identity("nope", 1, 8, std::nullopt);
    EXPECT_EQ(env.status, fc::Status::InvalidInput);
}

TEST(CliCommands, VerifySpecReportsFirstFailingQ) {
    const auto env = fc::cmd_verify_spec(1, 3, 1, "fib", "plain", 4, 2);
    EXPECT_EQ(env.status, fc::Status::IdentityFailed);
    EXPECT_EQ(fc::exit_code(env.status), 1);
    EXPECT_EQ(env.result["failure"]["q"], 3);
    EXPECT_EQ(fc::poly_from_json(env.result["failure"]["difference"]), (PolyX{0, -2}));
    EXPECT_EQ(env.result["failure"]["difference_value"], "-4");
    EXPECT_EQ(fc::cmd_verify_spec(1, 3, 1, "fib", "plain", 2, std::nullopt).status, fc::Status::Ok);
}

TEST(CliCommands, ScanCsvLayout) {
    fc::ScanArgs args;
    args.t_max = 2;
    args.k_max = 2;
    args.s_max = 2;
    const auto env = fc::cmd_scan(args);
    ASSERT_EQ(env.status, fc::Status::Ok);
    const auto lines = lines_of(fc::render_csv(env));
    ASSERT_FALSE(lines.empty());
    EXPECT_EQ(lines[0], "t,k,s,kind,sign,is_zero,predicted,direct_check");
    EXPECT_EQ(lines.size(), env.result["rows"].size() + 1);
    EXPECT_EQ(lines[1], "1,1,1,fib,plain,false,false,failed");
}

TEST(CliCommands, ExitCodeContract) {
    EXPECT_EQ(fc::exit_code(fc::Status::Ok), 0);
    EXPECT_EQ(fc::exit_code(fc::Status::IdentityFailed), 1);
    EXPECT_EQ(fc::exit_code(fc::Status::InvalidInput), 2);
}

TEST(CliCommands, EnvelopeFields) {
    const auto j = fc::cmd_eval("fib", 3, std::nullopt).to_json();
    std::vector<std::string> keys;
    for (const auto& [k, v] : j.items()) keys.push_back(k);
    EXPECT_EQ(keys, (std::vector<std::string>{"schema_version", "command", "params", "result", "status"}));
    EXPECT_EQ(j["schema_version"], "1.0");
    EXPECT_EQ(j["command"], "eval");
    EXPECT_EQ(j["status"], "ok");
}

TEST(CliExecutable, ExitCodesAndJsonOutput) {
    auto r = run_cli("eval --n 5");
    EXPECT_EQ(r.exit_code, 0);
    EXPECT_EQ(fc::json::parse(r.out)["result"]["coeffs"], fc::json::parse(R"(["1","0","3","0","1"])"));

    r = run_cli("verify --t 1 --k 3 --s 1 --q-max 4");
    EXPECT_EQ(r.exit_code, 1);
    EXPECT_EQ(fc::json::parse(r.out)["status"], "identity_failed");

    r = run_cli("verify --id 9.99");
    EXPECT_EQ(r.exit_code, 2);
    EXPECT_EQ(fc::json::parse(r.out)["status"], "invalid_input");

    r = run_cli("eval --n notanumber");
    EXPECT_EQ(r.exit_code, 2);
    EXPECT_EQ(fc::json::parse(r.out)["status"], "invalid_input");

    r = run_cli("frobnicate");
    EXPECT_EQ(r.exit_code, 2);
}

TEST(CliExecutable, PrintedPolynomialsReparse) {
    const auto r = run_cli("coeffs --t 2 --k 3 --s 2 --kind lucas --sign alt");
    ASSERT_EQ(r.exit_code, 0);
    const auto j = fc::json::parse(r.out);
    const auto e = fibopoly::expansion_coefficients({2, 3, 2, fibopoly::SeqKind::Lucas, fibopoly::SignMode::Alternating});
    for (long m = 1; m <= 6; ++m) EXPECT_EQ(fc::poly_from_json(j["result"]["coefficients"][m - 1]["coeffs"]), e.base(m));
}

TEST(CliExecutable, CsvAndOutFile) {
    const auto path = std::filesystem::temp_directory_path() / "fibopoly_cli_test_out.csv";
    std::filesystem::remove(path);
    const auto r = run_cli("eval --kind lucas --n 4 --format csv --out " + path.string());
    EXPECT_EQ(r.exit_code, 0);
    EXPECT_TRUE(r.out.empty());
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    const auto lines = lines_of(ss.str());
    ASSERT_GE(lines.size(), 3u);
    EXPECT_EQ(lines[0], "field,index,value");
    EXPECT_EQ(lines[1], "status,,ok");
    EXPECT_EQ(lines[2], "coeffs,,2 0 4 0 1");
    std::filesystem::remove(path);
}

}  // namespace
