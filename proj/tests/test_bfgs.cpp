// Copyright 2026 The vqsvd Authors
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

#include "vqsvd/bfgs.hpp"

#include <cmath>
#include <limits>
#include <vector>

#include <gtest/gtest.h>

namespace {

using vqsvd::BfgsConfig;
using vqsvd::BfgsResult;

TEST(BfgsTest, ConvexQuadratic) {
    // f(x) = (x0-1)^2 + 10 (x1+2)^2, minimum at (1, -2).
    const auto f = [](std::span<const double> x) {
        return (x[0] - 1.0) * (x[0] - 1.0) + 10.0 * (x[1] + 2.0) * (x[1] + 2.0);
    };
    const BfgsResult res = vqsvd::bfgs_minimize(f, {5.0, 5.0});
    EXPECT_TRUE(res.converged);
    EXPECT_EQ(res.status, "converged");
    EXPECT_NEAR(res.x[0], 1.0, 1e-5);
    EXPECT_NEAR(res.x[1], -2.0, 1e-5);
    EXPECT_NEAR(res.value, 0.0, 1e-9);
}

TEST(BfgsTest, Rosenbrock) {
    const auto f = [](std::span<const double> x) {
        const double a = 1.0 - x[0];
        const double b = x[1] - x[0] * x[0];
        return a * a + 100.0 * b * b;
    };
    const BfgsResult res = vqsvd::bfgs_minimize(f, {-1.2, 1.0});
    EXPECT_TRUE(res.converged);
    EXPECT_NEAR(res.x[0], 1.0, 1e-4);
    EXPECT_NEAR(res.x[1], 1.0, 1e-4);
    EXPECT_LT(res.value, 1e-8);
}

TEST(BfgsTest, HighDimensionalQuadratic) {
    const auto f = [](std::span<const double> x) {
        double acc = 0.0;
        for (std::size_t i = 0; i < x.size(); ++i) {
            const double d = x[i] - static_cast<double>(i);
            acc += (1.0 + static_cast<double>(i)) * d * d;
        }
        return acc;
    };
    const BfgsResult res = vqsvd::bfgs_minimize(f, std::vector<double>(10, 0.5));
    EXPECT_TRUE(res.converged);
    for (std::size_t i = 0; i < 10; ++i) {
        EXPECT_NEAR(res.x[i], static_cast<double>(i), 1e-4);
    }
}

TEST(BfgsTest, TraceDecreasesMonotonically) {
    const auto f = [](std::span<const double> x) {
        return std::cos(x[0]) + 0.1 * x[0] * x[0];
    };
    const BfgsResult res = vqsvd::bfgs_minimize(f, {2.0});
    ASSERT_FALSE(res.trace.empty());
    for (std::size_t i = 1; i < res.trace.size(); ++i) {
        EXPECT_LE(res.trace[i], res.trace[i - 1]);
    }
    EXPECT_DOUBLE_EQ(res.trace.back(), res.value);
}

TEST(BfgsTest, AlreadyAtMinimum) {
    const auto f = [](std::span<const double> x) { return x[0] * x[0]; };
    const BfgsResult res = vqsvd::bfgs_minimize(f, {0.0});
    EXPECT_TRUE(res.converged);
    EXPECT_EQ(res.iterations, 0u);
    EXPECT_NEAR(res.value, 0.0, 1e-15);
}

TEST(BfgsTest, MaxIterationsStatus) {
    // Rosenbrock needs dozens of iterations from the classic start, so a
    // tiny cap must end with the budget exhausted, not converged.
    const auto f = [](std::span<const double> x) {
        const double a = 1.0 - x[0];
        const double b = x[1] - x[0] * x[0];
        return a * a + 100.0 * b * b;
    };
    BfgsConfig config;
    config.max_iterations = 3;
    const BfgsResult res = vqsvd::bfgs_minimize(f, {-1.2, 1.0}, config);
    EXPECT_FALSE(res.converged);
    EXPECT_EQ(res.status, "max_iterations");
    EXPECT_LE(res.iterations, 3u);
}

TEST(BfgsTest, NonFiniteObjectiveReported) {
    const auto f = [](std::span<const double>) {
        return std::numeric_limits<double>::quiet_NaN();
    };
    const BfgsResult res = vqsvd::bfgs_minimize(f, {1.0});
    EXPECT_FALSE(res.converged);
    EXPECT_EQ(res.status, "non_finite_objective");
    EXPECT_TRUE(std::isnan(res.value));
}

TEST(BfgsTest, NonFiniteAfterProgressKeepsBestPoint) {
    // Blows up once the iterate leaves the start basin; the result must
    // carry the best value seen before the failure.
    const auto f = [](std::span<const double> x) {
        if (x[0] < -1.0) {
            return std::numeric_limits<double>::infinity();
        }
        return (x[0] - 0.5) * (x[0] - 0.5);
    };
    const BfgsResult res = vqsvd::bfgs_minimize(f, {0.0});
    EXPECT_TRUE(std::isfinite(res.value));
    EXPECT_NEAR(res.x[0], 0.5, 1e-4);
}

TEST(BfgsTest, RespectsGradientTolerance) {
    BfgsConfig loose;
    loose.gradient_tolerance = 1e-2;
    const auto f = [](std::span<const double> x) { return x[0] * x[0]; };
    const BfgsResult res = vqsvd::bfgs_minimize(f, {3.0}, loose);
    EXPECT_TRUE(res.converged);
    // Gradient 2x below 1e-2 means |x| below 5e-3.
    EXPECT_LT(std::abs(res.x[0]), 5.1e-3);
}

}  // namespace
