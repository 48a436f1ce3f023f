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

#include <algorithm>
#include <cmath>
#include <future>
#include <random>
#include <set>

namespace fracepi
{

CaseSeries::CaseSeries(std::vector<Observation> observations, std::string label)
    : m_obs(std::move(observations))
    , m_label(std::move(label))
{
    if (m_obs.size() < 4) {
        throw RangeError("a case series needs at least 4 observations");
    }
    std::sort(m_obs.begin(), m_obs.end(), [](const Observation& a, const Observation& b) {
        return a.t < b.t;
    });
    for (std::size_t k = 0; k < m_obs.size(); ++k) {
        const auto& o = m_obs[k];
        if (!std::isfinite(o.t) || o.t < 0.0 || !std::isfinite(o.cases) || o.cases < 0.0) {
            throw RangeError("observation times and counts must be finite and non-negative");
        }
        if (k > 0 && o.t == m_obs[k - 1].t) {
            throw RangeError("observation times must be distinct");
        }
    }
}

Grid calibration_grid(const CaseSeries& data, std::size_t steps_per_gap)
{
    const auto obs = data.observations();
    double min_gap = obs.front().t > 0.0 ? obs.front().t : data.horizon();
    for (std::size_t k = 1; k < obs.size(); ++k) {
        min_gap = std::min(min_gap, obs[k].t - obs[k - 1].t);
    }
    const double steps = std::ceil(data.horizon() / min_gap * static_cast<double>(std::max<std::size_t>(1, steps_per_gap)));
    return Grid(data.horizon(), static_cast<std::size_t>(steps));
}

std::vector<Residual> residual_report(const Trajectory& traj, const CaseSeries& data)
{
    std::vector<Residual> out;
    out.reserve(data.observations().size());
    for (const auto& o : data.observations()) {
        if (o.t > traj.grid.t_end()) {
            throw RangeError("observation at t = " + std::to_string(o.t) + " lies beyond the prediction horizon");
        }
        const double predicted = traj.interpolate(o.t).i;
        out.push_back({o.t, o.cases, predicted, o.cases - predicted});
    }
    return out;
}

std::vector<Residual> residual_report(const ModelParams& params, const CaseSeries& data, FractionalOrder theta,
                                      const State& init, double b_norm, std::size_t steps_per_gap)
{
    const Trajectory traj = solve_abc(params, init, theta, b_norm, calibration_grid(data, steps_per_gap));
    return residual_report(traj, data);
}

double sse_loss(const ModelParams& params, const CaseSeries& data, const State& init, FractionalOrder theta,
                double b_norm, std::size_t steps_per_gap)
{
    double sse = 0.0;
    for (const auto& r : residual_report(params, data, theta, init, b_norm, steps_per_gap)) {
        sse += r.residual * r.residual;
    }
    return sse;
}

namespace
{

std::vector<double ModelParams::*> free_members(const CalibrationSpec& spec)
{
    std::vector<double ModelParams::*> members;
    std::set<std::string> seen;
    for (const auto& name : spec.free) {
        auto member = find_param(name);
        if (!member) {
            throw RangeError("unknown parameter '" + name + "'");
        }
        if (!seen.insert(name).second) {
            throw RangeError("parameter '" + name + "' listed twice");
        }
        members.push_back(member);
    }
    for (const auto& [name, bound] : spec.bounds) {
        if (!seen.count(name)) {
            throw RangeError("bound given for parameter '" + name + "' which is not free");
        }
        if (bound.lower < 0.0 || bound.lower > bound.upper) {
            throw RangeError("invalid bounds for parameter '" + name + "'");
        }
    }
    return members;
}

std::vector<Bound> free_bounds(const CalibrationSpec& spec)
{
    std::vector<Bound> bounds;
    for (const auto& name : spec.free) {
        auto it = spec.bounds.find(name);
        bounds.push_back(it == spec.bounds.end() ? Bound{} : it->second);
    }
    return bounds;
}

} // namespace

CalibrationResult fit(const CalibrationSpec& spec, const CaseSeries& data)
{
    const auto members = free_members(spec);
    const auto bounds  = free_bounds(spec);
    spec.params.validate();

    auto with_values = [&](std::span<const double> x) {
        ModelParams k = spec.params;
        for (std::size_t d = 0; d < members.size(); ++d) {
            k.*members[d] = x[d];
        }
        return k;
    };

    std::vector<double> start;
    for (std::size_t d = 0; d < members.size(); ++d) {
        start.push_back(std::clamp(spec.params.*members[d], bounds[d].lower, bounds[d].upper));
    }
    // fails loudly if the model cannot be solved at the starting point
    const double start_loss =
        sse_loss(with_values(start), data, spec.init, spec.theta, spec.b_norm, spec.steps_per_gap);
    if (members.empty()) {
        return {spec.params, start_loss, 0, 1, true};
    }

    const Objective objective = [&](std::span<const double> x) {
        try {
            return sse_loss(with_values(x), data, spec.init, spec.theta, spec.b_norm, spec.steps_per_gap);
        }
        catch (const SolverError&) {
            return std::numeric_limits<double>::infinity();
        }
    };
    const NelderMeadResult nm = nelder_mead(objective, start, bounds, spec.optimizer);
    return {with_values(nm.x), nm.value, nm.iterations, nm.evaluations + 1, nm.converged};
}

CalibrationResult fit_multistart(const CalibrationSpec& spec, const CaseSeries& data, std::size_t starts,
                                 std::uint64_t seed)
{
    if (starts == 0) {
        throw RangeError("at least one start is required");
    }
    const auto members = free_members(spec);
    const auto bounds  = free_bounds(spec);

    // all random draws happen here, in a fixed order, before any work is launched
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> log_factor(-std::log(2.0), std::log(2.0));
    std::vector<CalibrationSpec> specs(starts, spec);
    for (std::size_t s = 1; s < starts; ++s) {
        for (std::size_t d = 0; d < members.size(); ++d) {
            double& v = specs[s].params.*members[d];
            v         = v != 0.0 ? v * std::exp(log_factor(rng)) : spec.optimizer.zero_step * std::exp(log_factor(rng));
            v         = std::clamp(v, bounds[d].lower, bounds[d].upper);
        }
    }

    std::vector<std::future<CalibrationResult>> runs;
    for (const auto& s : specs) {
        runs.push_back(std::async(std::launch::async, [&s, &data] {
            return fit(s, data);
        }));
    }
    std::vector<CalibrationResult> results;
    for (std::size_t s = 0; s < runs.size(); ++s) {
        try {
            results.push_back(runs[s].get());
        }
        catch (const SolverError&) {
            // a random start outside the solvable region is dropped; the user's start is not
            if (s == 0) {
                throw;
            }
        }
    }
    return *std::min_element(results.begin(), results.end(), [](const auto& a, const auto& b) {
        return a.loss < b.loss;
    });
}

} // namespace fracepi
