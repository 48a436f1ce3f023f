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
#include "fracepi/calibrate.h"
#include "fracepi/errors.h"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>

using namespace fracepi;

namespace
{

// Case-study rates with populations in millions, daily observations for 30 days.
CaseSeries synthetic(const ModelParams& truth, FractionalOrder theta, std::size_t days, double noise = 0.0,
                     std::uint64_t seed = 1)
{
    std::vector<Observation> obs;
    for (std::size_t d = 1; d <= days; ++d) {
        obs.push_back({static_cast<double>(d), 0.0});
    }
    const CaseSeries grid_only(obs);
    const auto traj = solve_abc(truth, scenarios::case_study_initial(), theta, 1.0, calibration_grid(grid_only, 20));
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(-noise, noise);
    for (auto& o : obs) {
        o.cases = traj.interpolate(o.t).i * (1.0 + u(rng));
    }
    return CaseSeries(obs, "synthetic");
}

CalibrationSpec perturbed_spec(const ModelParams& truth, FractionalOrder theta)
{
    CalibrationSpec spec;
    spec.free   = {"gamma", "sigma"};
    spec.params = truth;
    spec.params.gamma *= 1.2;
    spec.params.sigma *= 1.2;
    spec.init  = scenarios::case_study_initial();
    spec.theta = theta;
    return spec;
}

double norm2(const CaseSeries& data)
{
    double s = 0.0;
    for (const auto& o : data.observations()) {
        s += o.cases * o.cases;
    }
    return s;
}

} // namespace

TEST(TestCaseSeries, validation)
{
    EXPECT_THROW(CaseSeries({{1, 1}, {2, 1}, {3, 1}}), RangeError);
    EXPECT_THROW(CaseSeries({{1, 1}, {2, 1}, {2, 1}, {3, 1}}), RangeError);
    EXPECT_THROW(CaseSeries({{1, 1}, {2, -1}, {3, 1}, {4, 1}}), RangeError);
    EXPECT_THROW(CaseSeries({{1, 1}, {2, NAN}, {3, 1}, {4, 1}}), RangeError);
    const CaseSeries s({{4, 1}, {1, 2}, {3, 3}, {2, 4}}, "x");
    EXPECT_EQ(s.observations()[0].t, 1.0);
    EXPECT_EQ(s.observations()[0].cases, 2.0);
    EXPECT_EQ(s.horizon(), 4.0);
    EXPECT_EQ(s.label(), "x");
}

TEST(TestCalibrationGrid, stepsPerGap)
{
    const CaseSeries s({{0.5, 1}, {1, 1}, {2, 1}, {4, 1}});
    const Grid g = calibration_grid(s, 20);
    EXPECT_EQ(g.t_end(), 4.0);
    EXPECT_EQ(g.steps(), 160u);
}

TEST(TestFit, emptyFreeSet)
{
    const auto truth = scenarios::case_study();
    const auto data  = synthetic(truth, FractionalOrder(1.0), 10);
    CalibrationSpec spec;
    spec.params      = truth;
    spec.params.eta  = 0.25;
    spec.init        = scenarios::case_study_initial();
    const auto r     = fit(spec, data);
    EXPECT_EQ(r.params, spec.params);
    EXPECT_EQ(r.loss, sse_loss(spec.params, data, spec.init, spec.theta));
    EXPECT_TRUE(r.converged);
    EXPECT_EQ(r.iterations, 0u);
    EXPECT_EQ(r.evaluations, 1u);
}

TEST(TestFit, perfectFitFloor)
{
    const auto truth = scenarios::case_study();
    const auto data  = synthetic(truth, FractionalOrder(1.0), 20);
    CalibrationSpec spec;
    spec.free   = {"gamma", "sigma"};
    spec.params = truth;
    spec.init   = scenarios::case_study_initial();
    const auto r = fit(spec, data);
    EXPECT_LE(r.loss, 1e-8 * norm2(data));
}

TEST(TestFit, roundTripNoiseless)
{
    // 0.98 keeps the implicit step contractive at this population scale
    for (double theta : {1.0, 0.98}) {
        const auto truth = scenarios::case_study();
        const auto data  = synthetic(truth, FractionalOrder(theta), 30);
        const auto r     = fit(perturbed_spec(truth, FractionalOrder(theta)), data);
        EXPECT_NEAR(r.params.gamma / truth.gamma, 1.0, 0.01) << "theta " << theta;
        EXPECT_NEAR(r.params.sigma / truth.sigma, 1.0, 0.01) << "theta " << theta;
        // untouched rates stay fixed
        EXPECT_EQ(r.params.eta, truth.eta);
        EXPECT_EQ(r.params.mu, truth.mu);
    }
}

TEST(TestFit, roundTripWithNoise)
{
    const auto truth = scenarios::case_study();
    const auto data  = synthetic(truth, FractionalOrder(1.0), 30, 0.01, 2024);
    const auto r     = fit(perturbed_spec(truth, FractionalOrder(1.0)), data);
    EXPECT_NEAR(r.params.gamma / truth.gamma, 1.0, 0.05);
    EXPECT_NEAR(r.params.sigma / truth.sigma, 1.0, 0.05);
}

TEST(TestFit, lossIsReproducible)
{
    const auto truth = scenarios::case_study();
    const auto data  = synthetic(truth, FractionalOrder(1.0), 15, 0.02, 5);
    const auto spec  = perturbed_spec(truth, FractionalOrder(1.0));
    const auto r     = fit(spec, data);
    const double again = sse_loss(r.params, data, spec.init, spec.theta);
    EXPECT_NEAR(r.loss, again, 1e-12 * again);
}

TEST(TestFit, observationOrderIrrelevant)
{
    const auto truth = scenarios::case_study();
    const auto data  = synthetic(truth, FractionalOrder(1.0), 12, 0.02, 9);
    std::vector<Observation> shuffled(data.observations().begin(), data.observations().end());
    std::shuffle(shuffled.begin(), shuffled.end(), std::mt19937_64(3));
    const auto spec = perturbed_spec(truth, FractionalOrder(1.0));
    const auto a    = fit(spec, data);
    const auto b    = fit(spec, CaseSeries(shuffled));
    EXPECT_EQ(a.params, b.params);
    EXPECT_EQ(a.loss, b.loss);
}

TEST(TestFit, respectsBounds)
{
    const auto truth = scenarios::case_study();
    const auto data  = synthetic(truth, FractionalOrder(1.0), 12);
    auto spec        = perturbed_spec(truth, FractionalOrder(1.0));
    spec.bounds["gamma"] = {0.22, 0.3};
    spec.bounds["sigma"] = {0.0, 0.035};
    const auto r         = fit(spec, data);
    EXPECT_GE(r.params.gamma, 0.22);
    EXPECT_LE(r.params.gamma, 0.3);
    EXPECT_LE(r.params.sigma, 0.035);
}

TEST(TestFit, specValidation)
{
    const auto truth = scenarios::case_study();
    const auto data  = synthetic(truth, FractionalOrder(1.0), 6);
    auto spec        = perturbed_spec(truth, FractionalOrder(1.0));
    spec.free        = {"gamma", "beta"};
    EXPECT_THROW(fit(spec, data), RangeError);
    spec.free = {"gamma", "gamma"};
    EXPECT_THROW(fit(spec, data), RangeError);
    spec.free            = {"gamma"};
    spec.bounds["gamma"] = {0.5, 0.1};
    EXPECT_THROW(fit(spec, data), RangeError);
    spec.bounds.clear();
    spec.bounds["mu"] = {0.0, 1.0};
    EXPECT_THROW(fit(spec, data), RangeError);
}

TEST(TestFit, multistartDeterministic)
{
    const auto truth = scenarios::case_study();
    const auto data  = synthetic(truth, FractionalOrder(1.0), 12, 0.02, 11);
    const auto spec  = perturbed_spec(truth, FractionalOrder(1.0));
    const auto a     = fit_multistart(spec, data, 4, 77);
    const auto b     = fit_multistart(spec, data, 4, 77);
    EXPECT_EQ(a.params, b.params);
    EXPECT_EQ(a.loss, b.loss);
    EXPECT_LE(a.loss, fit(spec, data).loss);
    EXPECT_THROW(fit_multistart(spec, data, 0, 1), RangeError);
}

TEST(TestResiduals, modelDataIsExact)
{
    const auto truth = scenarios::case_study();
    const auto data  = synthetic(truth, FractionalOrder(0.95), 10);
    const auto rows  = residual_report(truth, data, FractionalOrder(0.95), scenarios::case_study_initial());
    ASSERT_EQ(rows.size(), 10u);
    for (const auto& r : rows) {
        EXPECT_LE(std::abs(r.residual), 1e-8);
        EXPECT_EQ(r.residual, r.observed - r.predicted);
    }
}

TEST(TestResiduals, beyondHorizon)
{
    const auto truth = scenarios::case_study();
    const auto data  = synthetic(truth, FractionalOrder(1.0), 10);
    const auto traj  = solve_abc(truth, scenarios::case_study_initial(), FractionalOrder(1.0), 1.0, Grid(5.0, 100));
    EXPECT_THROW(residual_report(traj, data), RangeError);
}
