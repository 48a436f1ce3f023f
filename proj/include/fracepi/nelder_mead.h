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
#ifndef FRACEPI_NELDER_MEAD_H
#define FRACEPI_NELDER_MEAD_H

#include <cstddef>
#include <functional>
#include <limits>
#include <span>
#include <vector>

namespace fracepi
{

struct Bound {
    double lower = 0.0;
    double upper = std::numeric_limits<double>::infinity();
};

struct NelderMeadOptions {
    double reflection         = 1.0;
    double expansion          = 2.0;
    double contraction        = 0.5;
    double shrink             = 0.5;
    double diameter_tolerance = 1e-8;
    std::size_t max_iterations = 2000;
    /// Initial simplex edge relative to the start coordinate; zero coordinates use zero_step.
    double initial_step = 0.05;
    double zero_step    = 0.00025;
};

struct NelderMeadResult {
    std::vector<double> x;
    double value            = 0.0;
    std::size_t iterations  = 0;
    std::size_t evaluations = 0;
    bool converged          = false; ///< simplex diameter fell below the tolerance
};

using Objective = std::function<double(std::span<const double>)>;

/**
 * Derivative-free minimization with the Nelder-Mead simplex method. Trial points are clipped
 * coordinate-wise into the bounds. The objective may return +inf for infeasible points.
 */
NelderMeadResult nelder_mead(const Objective& f, std::vector<double> start, std::span<const Bound> bounds,
                             const NelderMeadOptions& options = {});

} // namespace fracepi

#endif // FRACEPI_NELDER_MEAD_H
