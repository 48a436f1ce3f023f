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
#ifndef FRACEPI_CALIBRATE_H
#define FRACEPI_CALIBRATE_H

#include "fracepi/abc_ivp.h"
#include "fracepi/epi_model.h"
#include "fracepi/fractional_order.h"
#include "fracepi/nelder_mead.h"

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace fracepi
{

struct Observation {
    double t     = 0.0; ///< days since the start of the series
    double cases = 0.0;
};

/// Observed infected counts, kept sorted by time.
class CaseSeries
{
public:
    /// @throws RangeError for fewer than 4 observations, repeated times, negative times or counts.
    explicit CaseSeries(std::vector<Observation> observations, std::string label = {});

    std::span<const Observation> observations() const
    {
        return m_obs;
    }
    const std::string& label() const
    {
        return m_label;
    }
    double horizon() const
    {
        return m_obs.back().t;
    }

private:
    std::vector<Observation> m_obs;
    std::string m_label;
};

struct CalibrationSpec {
    /// Names of the rates to fit; all other rates stay at their value in params.
    std::vector<std::string> free;
    /// Fixed rates, and starting values of the free ones.
    ModelParams params;
    /// Bounds per free rate; missing entries default to [0, inf).
    std::map<std::string, Bound> bounds;
    State init;
    FractionalOrder theta{1.0};
    double b_norm = 1.0;
    /// Solver steps between the two closest observations.
    std::size_t steps_per_gap = 20;
    NelderMeadOptions optimizer;
};

struct CalibrationResult {
    ModelParams params;
    double loss             = 0.0;
    std::size_t iterations  = 0;
    std::size_t evaluations = 0;
    bool converged          = false;
};

/// Solver grid on [0, last observation] with at least steps_per_gap steps between adjacent observations.
Grid calibration_grid(const CaseSeries& data, std::size_t steps_per_gap = 20);

/// Sum of squared differences between observed cases and the interpolated infected compartment.
double sse_loss(const ModelParams& params, const CaseSeries& data, const State& init, FractionalOrder theta,
                double b_norm = 1.0, std::size_t steps_per_gap = 20);

/**
 * @brief Least-squares fit of the free rates to the infected counts (Nelder-Mead).
 *
 * Trial points where the solver fails are treated as infinitely bad; a failure at the starting
 * point propagates as SolverError.
 */
CalibrationResult fit(const CalibrationSpec& spec, const CaseSeries& data);

/// Runs `starts` fits concurrently, the first from spec.params and the rest from seeded random
/// perturbations of it, and returns the lowest loss (earliest start wins ties).
CalibrationResult fit_multistart(const CalibrationSpec& spec, const CaseSeries& data, std::size_t starts,
                                 std::uint64_t seed);

struct Residual {
    double t         = 0.0;
    double observed  = 0.0;
    double predicted = 0.0;
    double residual  = 0.0; ///< observed - predicted
};

/// @throws RangeError if an observation lies beyond the trajectory horizon.
std::vector<Residual> residual_report(const Trajectory& traj, const CaseSeries& data);

std::vector<Residual> residual_report(const ModelParams& params, const CaseSeries& data, FractionalOrder theta,
                                      const State& init, double b_norm = 1.0, std::size_t steps_per_gap = 20);

} // namespace fracepi

#endif // FRACEPI_CALIBRATE_H
