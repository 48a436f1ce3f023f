/*
* Copyright (C) 2026 The fracepi authors
*
* Licensed under the Apache License, Version 2.0 (the "License");
* you may not use this file except in compliance with the License.
* You may obtain a copy of the License at
*
*     http://www.apache.org/licenses/LICENSE-2.0
*
* Unless required by applicable law or agreed to in writing, software
* distributed under the License is distributed on an "AS IS" BASIS,
* WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
* See the License for the specific language governing permissions and
* limitations under the License.
*/
#include "fracepi/errors.h"
#include "fracepi/nelder_mead.h"

#include <gtest/gtest.h>

#include <cmath>
#include <limits>

using namespace fracepi;

namespace
{

double rosenbrock(std::span<const double> x)
{
    return 100.0 * std::pow(x[1] - x[0] * x[0], 2) + std::pow(1.0 - x[0], 2);
}

} // namespace

TEST(TestNelderMead, rosenbrock)
{
    const std::vector<Bound> free(2, Bound{-10.0, 10.0});
    const auto r = nelder_mead(rosenbrock, {-1.2, 1.0}, free);
    EXPECT_TRUE(r.converged);
    EXPECT_NEAR(r.x[0], 1.0, 1e-5);
    EXPECT_NEAR(r.x[1], 1.0, 1e-5);
    EXPECT_LT(r.value, 1e-10);
    EXPECT_LT(r.iterations, 2000u);
}

TEST(TestNelderMead, activeBound)
{
    // unconstrained minimum at (3, -2) lies outside the box
    const Objective f = [](std::span<const double> x) {
        return std::pow(x[0] - 3.0, 2) + std::pow(x[1] + 2.0, 2);
    };
    const std::vector<Bound> box{{0.0, 1.0}, {0.0, 5.0}};
    const auto r = nelder_mead(f, {0.5, 0.5}, box);
    EXPECT_NEAR(r.x[0], 1.0, 1e-6);
    EXPECT_NEAR(r.x[1], 0.0, 1e-6);
    for (std::size_t d = 0; d < 2; ++d) {
        EXPECT_GE(r.x[d], box[d].lower);
        EXPECT_LE(r.x[d], box[d].upper);
    }
}

TEST(TestNelderMead, infeasibleRegion)
{
    // NaN and inf both count as infinitely bad
    const Objective f = [](std::span<const double> x) {
        if (x[0] > 2.0) {
            return std::nan("");
        }
        if (x[0] < 0.5) {
            return std::numeric_limits<double>::infinity();
        }
        return std::pow(x[0] - 1.5, 2);
    };
    const std::vector<Bound> b{Bound{}};
    const auto r = nelder_mead(f, {1.9}, b);
    EXPECT_NEAR(r.x[0], 1.5, 1e-6);
}

TEST(TestNelderMead, zeroStartUsesAbsoluteStep)
{
    const Objective f = [](std::span<const double> x) {
        return std::pow(x[0] - 0.01, 2);
    };
    const std::vector<Bound> b{Bound{}};
    const auto r = nelder_mead(f, {0.0}, b);
    EXPECT_NEAR(r.x[0], 0.01, 1e-7);
}

TEST(TestNelderMead, iterationCap)
{
    NelderMeadOptions opt;
    opt.max_iterations = 5;
    const std::vector<Bound> free(2, Bound{-10.0, 10.0});
    const auto r = nelder_mead(rosenbrock, {-1.2, 1.0}, free, opt);
    EXPECT_FALSE(r.converged);
    EXPECT_EQ(r.iterations, 5u);
}

TEST(TestNelderMead, emptyProblem)
{
    const Objective f = [](std::span<const double>) {
        return 4.0;
    };
    const auto r = nelder_mead(f, {}, {});
    EXPECT_TRUE(r.converged);
    EXPECT_EQ(r.value, 4.0);
    EXPECT_THROW(nelder_mead(f, {1.0}, {}), DomainError);
}
