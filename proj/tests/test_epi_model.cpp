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
#include "fracepi/epi_model.h"
#include "fracepi/errors.h"
#include "support/oracles.h"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

using namespace fracepi;

namespace
{

ModelParams random_params(std::mt19937_64& rng)
{
    std::uniform_real_distribution<double> rate(0.001, 0.5);
    return {rate(rng), rate(rng), rate(rng), rate(rng), rate(rng), rate(rng), rate(rng)};
}

State random_state(std::mt19937_64& rng)
{
    std::uniform_real_distribution<double> pop(0.0, 100.0);
    return {pop(rng), pop(rng), pop(rng)};
}

} // namespace

TEST(TestVectorField, simulationStudyStart)
{
    const auto f = vector_field(scenarios::simulation_study(), scenarios::simulation_study_initial());
    EXPECT_NEAR(f.p, -0.0879, 1e-15);
    EXPECT_NEAR(f.i, 0.0007033, 1e-16);
    EXPECT_NEAR(f.q, 0.0000224, 1e-17);
}

TEST(TestVectorField, originLeavesSource)
{
    const auto k = scenarios::case_study();
    EXPECT_EQ(vector_field(k, {}), (State{k.lambda, 0.0, 0.0}));
    EXPECT_EQ(total_population_rate(k, {}), k.lambda);
}

TEST(TestVectorField, totalRate)
{
    EXPECT_NEAR(total_population_rate(scenarios::simulation_study(), scenarios::simulation_study_initial()),
                -0.0871743, 1e-15);
    // demographic equilibrium
    ModelParams k{0.05, 0.3, 0.01, 0.2, 0.0, 0.1, 0.0};
    EXPECT_NEAR(total_population_rate(k, {3.0, 1.5, 0.5}), 0.0, 1e-16);
}

TEST(TestVectorField, totalRateIsComponentSum)
{
    std::mt19937_64 rng(17);
    for (int k = 0; k < 1000; ++k) {
        const auto params = random_params(rng);
        const auto s      = random_state(rng);
        const auto f      = vector_field(params, s);
        EXPECT_EQ(total_population_rate(params, s), f.p + f.i + f.q);
        // same quantity, rearranged
        const double direct = params.lambda - params.d0 * s.total() - params.h * s.i - params.mu * s.q;
        EXPECT_NEAR(total_population_rate(params, s), direct, 1e-12 * (1.0 + std::abs(direct) + 50.0 * s.total()));
    }
}

TEST(TestVectorField, affineInEachCoordinate)
{
    std::mt19937_64 rng(19);
    for (int k = 0; k < 200; ++k) {
        const auto params = random_params(rng);
        const auto s      = random_state(rng);
        const double d    = 0.5;
        // second differences along one axis, others fixed
        auto second = [&](State lo, State mid, State hi) {
            const auto a = vector_field(params, lo), b = vector_field(params, mid), c = vector_field(params, hi);
            return State{a.p - 2 * b.p + c.p, a.i - 2 * b.i + c.i, a.q - 2 * b.q + c.q};
        };
        const auto sp = second({s.p - d, s.i, s.q}, s, {s.p + d, s.i, s.q});
        const auto si = second({s.p, s.i - d, s.q}, s, {s.p, s.i + d, s.q});
        const auto sq = second({s.p, s.i, s.q - d}, s, {s.p, s.i, s.q + d});
        for (const auto& v : {sp, si, sq}) {
            EXPECT_NEAR(v.p, 0.0, 1e-11);
            EXPECT_NEAR(v.i, 0.0, 1e-11);
            EXPECT_NEAR(v.q, 0.0, 1e-11);
        }
        // the cross term is the only curvature: mixed difference equals gamma d^2
        const double mixed = vector_field(params, {s.p + d, s.i + d, s.q}).i -
                             vector_field(params, {s.p + d, s.i, s.q}).i -
                             vector_field(params, {s.p, s.i + d, s.q}).i + vector_field(params, s).i;
        EXPECT_NEAR(mixed, params.gamma * d * d, 1e-11);
    }
}

TEST(TestR0, scenariosMatchExactRational)
{
    const double table2 = oracle::to_double(oracle::r0_exact(oracle::simulation_study_rates));
    const double table3 = oracle::to_double(oracle::r0_exact(oracle::case_study_rates));
    EXPECT_NEAR(table2, 0.0079552150854449028, 1e-18);
    EXPECT_NEAR(table3, 0.022136816709063280, 1e-17);
    EXPECT_NEAR(r0(scenarios::simulation_study()) / table2, 1.0, 1e-14);
    EXPECT_NEAR(r0(scenarios::case_study()) / table3, 1.0, 1e-14);
}

TEST(TestR0, zeroTransmission)
{
    auto k  = scenarios::simulation_study();
    k.gamma = 0.0;
    EXPECT_EQ(r0(k), 0.0);
}

TEST(TestR0, homogeneousInGamma)
{
    std::mt19937_64 rng(23);
    std::uniform_real_distribution<double> factor(0.01, 100.0);
    for (int k = 0; k < 500; ++k) {
        const auto params = random_params(rng);
        const double c    = factor(rng);
        auto scaled       = params;
        scaled.gamma *= c;
        EXPECT_NEAR(r0(scaled) / (c * r0(params)), 1.0, 1e-14);
    }
}

TEST(TestR0, degenerateDenominator)
{
    ModelParams k{0.1, 0.2, 0.0, 0.0, 0.3, 0.1, 0.1};
    EXPECT_THROW(r0(k), DegenerateModelError);
    k.eta = 0.2;
    EXPECT_GT(r0(k), 0.0);
}

TEST(TestModelParams, validation)
{
    EXPECT_NO_THROW(scenarios::case_study().validate());
    ModelParams k = scenarios::simulation_study();
    k.sigma       = -0.1;
    EXPECT_THROW(k.validate(), RangeError);
    k.sigma = std::nan("");
    EXPECT_THROW(k.validate(), RangeError);
}

TEST(TestModelParams, fieldTable)
{
    const auto k = scenarios::case_study();
    EXPECT_EQ(k.*find_param("sigma"), 0.04);
    EXPECT_EQ(k.*find_param("lambda"), 0.028);
    EXPECT_EQ(find_param("beta"), nullptr);
}
