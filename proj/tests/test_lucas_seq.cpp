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

#include <thread>
#include <vector>

#include "fibopoly/lucas_seq.hpp"
#include "oracles.hpp"

namespace {

using fibopoly::BigInt;
using fibopoly::fib_poly;
using fibopoly::lucas_poly;
using fibopoly::PolyX;

TEST(Sequences, SmallValues) {
    EXPECT_EQ(fib_poly(0), PolyX{});
    EXPECT_EQ(fib_poly(1), PolyX{1});
    EXPECT_EQ(fib_poly(5), (PolyX{1, 0, 3, 0, 1}));
    EXPECT_EQ(lucas_poly(0), PolyX{2});
    EXPECT_EQ(lucas_poly(1), (PolyX{0, 1}));
    EXPECT_EQ(lucas_poly(-3), (PolyX{0, -3, 0, -1}));
}

TEST(Sequences, MatchExplicitBinomialSums) {
    for (long n = 1; n <= 80; ++n) {
        EXPECT_EQ(fib_poly(n), oracle::fib_explicit(n)) << "n=" << n;
        EXPECT_EQ(lucas_poly(n), oracle::lucas_explicit(n)) << "n=" << n;
    }
}

TEST(Sequences, MatchIntegerRecurrenceAtSamplePointsForNegativeIndices) {
    for (long n = -60; n <= 60; ++n)
        for (long x0 = -3; x0 <= 3; ++x0) {
            EXPECT_EQ(fibopoly::evaluate(fib_poly(n), BigInt(x0)), oracle::fib_at(n, x0)) << n << " @ " << x0;
            EXPECT_EQ(fibopoly::evaluate(lucas_poly(n), BigInt(x0)), oracle::lucas_at(n, x0)) << n << " @ " << x0;
        }
}

TEST(Sequences, AtOneGiveFibonacciAndLucasNumbers) {
    const auto f = oracle::fibonacci_numbers(91);
    const auto l = oracle::lucas_numbers(89);
    for (long n = 0; n <= 90; ++n) EXPECT_EQ(fibopoly::evaluate(fib_poly(n), BigInt(1)), BigInt(f[n]));
    for (long n = 0; n <= 88; ++n) EXPECT_EQ(fibopoly::evaluate(lucas_poly(n), BigInt(1)), BigInt(l[n]));
}

TEST(Sequences, NegativeIndexReflection) {
    for (long n = 0; n <= 40; ++n) {
        EXPECT_EQ(fib_poly(-n), fib_poly(n) * BigInt(fibopoly::neg_one_pow(n + 1)));
        EXPECT_EQ(lucas_poly(-n), lucas_poly(n) * BigInt(fibopoly::neg_one_pow(n)));
    }
}

TEST(Sequences, DegreeAndParity) {
    for (long n = 1; n <= 50; ++n) {
        EXPECT_EQ(fib_poly(n).degree(), n - 1);
        EXPECT_EQ(lucas_poly(n).degree(), n);
        EXPECT_EQ(fibopoly::negate_variable(fib_poly(n)), fib_poly(n) * BigInt(fibopoly::neg_one_pow(n + 1)));
    }
}

TEST(Sequences, CassiniAndLucasFibonacciRelations) {
    const PolyX x = fibopoly::variable<BigInt>();
    for (long n = -30; n <= 30; ++n) {
        EXPECT_EQ(fib_poly(n + 1) * fib_poly(n - 1) - fib_poly(n) * fib_poly(n),
                  PolyX::constant(fibopoly::neg_one_pow(n)));
        EXPECT_EQ(lucas_poly(n), fib_poly(n + 1) + fib_poly(n - 1));
        EXPECT_EQ(fib_poly(2 * n), fib_poly(n) * lucas_poly(n));
        EXPECT_EQ(lucas_poly(n) * lucas_poly(n) - fibopoly::x2_plus_4() * fib_poly(n) * fib_poly(n),
                  PolyX::constant(4 * fibopoly::neg_one_pow(n)));
        EXPECT_EQ(fib_poly(n + 1), x * fib_poly(n) + fib_poly(n - 1));
    }
}

TEST(Sequences, SeqPolyDispatch) {
    EXPECT_EQ(fibopoly::seq_poly(fibopoly::SeqKind::Fibonacci, 7), fib_poly(7));
    EXPECT_EQ(fibopoly::seq_poly(fibopoly::SeqKind::Lucas, 7), lucas_poly(7));
}

TEST(Sequences, IndexLimitIsEnforced) {
    EXPECT_THROW(fib_poly(fibopoly::kMaxSequenceIndex + 1), fibopoly::InvalidIndex);
    EXPECT_THROW(lucas_poly(-fibopoly::kMaxSequenceIndex - 1), fibopoly::InvalidIndex);
}

TEST(Sequences, ConcurrentReadersSeeTheSameValues) {
    std::vector<std::vector<PolyX>> seen(4);
    {
        std::vector<std::jthread> pool;
        for (int t = 0; t < 4; ++t)
            pool.emplace_back([&, t] {
                for (long n = 300; n >= -300; n -= 7) seen[t].push_back(fib_poly(n) + lucas_poly(n + t % 2));
            });
    }
    for (int t = 2; t < 4; ++t) EXPECT_EQ(seen[t], seen[t - 2]);
    for (std::size_t i = 0; i < seen[0].size(); ++i) {
        const long n = 300 - 7 * static_cast<long>(i);
        EXPECT_EQ(fibopoly::evaluate(seen[0][i], BigInt(2)), oracle::fib_at(n, 2) + oracle::lucas_at(n, 2)) << n;
    }
}

TEST(SequenceIdentities, QuotientIdentities) {
    for (long s = 1; s <= 6; ++s)
        for (long p = 1; p <= 6; ++p) EXPECT_TRUE(fibopoly::check_quotient_identities(s, p)) << s << "," << p;
    EXPECT_THROW(fibopoly::check_quotient_identities(0, 1), fibopoly::InvalidIndex);
}

TEST(SequenceIdentities, IndexReductionOnRandomTriples) {
    auto rng = oracle::make_rng();
    using fibopoly::IndexReduction;
    for (int i = 0; i < 300; ++i) {
        const long M = oracle::uniform(rng, -12, 12), N = oracle::uniform(rng, -12, 12), K = oracle::uniform(rng, -12, 12);
        for (auto v : {IndexReduction::FF, IndexReduction::FL, IndexReduction::LL})
            EXPECT_TRUE(fibopoly::check_index_reduction(M, N, K, v)) << M << "," << N << "," << K;
    }
}

TEST(SequenceIdentities, IndexReductionAtIntegerPoint) {
    // FF variant recomputed from integer values at x0 = 2.
    const BigInt x0 = 2;
    for (long M = -5; M <= 5; ++M)
        for (long N = -5; N <= 5; ++N)
            for (long K = -5; K <= 5; ++K) {
                const BigInt lhs = oracle::fib_at(M, x0) * oracle::fib_at(N, x0) - oracle::fib_at(M + K, x0) * oracle::fib_at(N - K, x0);
                const BigInt rhs = oracle::fib_at(M + K - N, x0) * oracle::fib_at(K, x0) * ((N - K) % 2 == 0 ? 1 : -1);
                EXPECT_EQ(lhs, rhs);
            }
}

TEST(SequenceIdentities, DerivativeFormulas) {
    for (long n = -40; n <= 40; ++n) EXPECT_TRUE(fibopoly::check_derivative_formulas(n)) << n;
}

TEST(SequenceIdentities, DerivativeFormulaAgainstCoefficientDerivative) {
    for (long n = 1; n <= 30; ++n)
        EXPECT_EQ(fibopoly::derivative(oracle::lucas_explicit(n)), oracle::fib_explicit(n) * BigInt(n));
}

}  // namespace
