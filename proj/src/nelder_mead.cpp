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
#include "fracepi/nelder_mead.h"
#include "fracepi/errors.h"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace fracepi
{

namespace
{

using Point = std::vector<double>;

void clip(Point& x, std::span<const Bound> bounds)
{
    for (std::size_t d = 0; d < x.size(); ++d) {
        x[d] = std::clamp(x[d], bounds[d].lower, bounds[d].upper);
    }
}

// c + coeff * (x - c)
Point along(const Point& c, const Point& x, double coeff)
{
    Point out(c.size());
    for (std::size_t d = 0; d < c.size(); ++d) {
        out[d] = c[d] + coeff * (x[d] - c[d]);
    }
    return out;
}

double diameter(const std::vector<Point>& simplex)
{
    double best = 0.0;
    for (std::size_t a = 0; a < simplex.size(); ++a) {
        for (std::size_t b = a + 1; b < simplex.size(); ++b) {
            double sq = 0.0;
            for (std::size_t d = 0; d < simplex[a].size(); ++d) {
                const double diff = simplex[a][d] - simplex[b][d];
                sq += diff * diff;
            }
            best = std::max(best, std::sqrt(sq));
        }
    }
    return best;
}

} // namespace

NelderMeadResult nelder_mead(const Objective& f, std::vector<double> start, std::span<const Bound> bounds,
                             const NelderMeadOptions& options)
{
    const std::size_t n = start.size();
    if (bounds.size() != n) {
        throw DomainError("one bound per coordinate is required");
    }
    NelderMeadResult result;
    auto eval = [&](const Point& x) {
        ++result.evaluations;
        const double v = f(x);
        return std::isnan(v) ? std::numeric_limits<double>::infinity() : v;
    };

    clip(start, bounds);
    std::vector<Point> simplex{start};
    for (std::size_t d = 0; d < n; ++d) {
        Point v         = start;
        const double dx = start[d] != 0.0 ? options.initial_step * start[d] : options.zero_step;
        v[d]            = start[d] + dx <= bounds[d].upper ? start[d] + dx : start[d] - dx;
        clip(v, bounds);
        simplex.push_back(std::move(v));
    }
    std::vector<double> values(n + 1);
    for (std::size_t k = 0; k <= n; ++k) {
        values[k] = eval(simplex[k]);
    }

    std::vector<std::size_t> order(n + 1);
    auto sort_simplex = [&] {
        std::iota(order.begin(), order.end(), std::size_t{0});
        std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
            return values[a] < values[b];
        });
        std::vector<Point> s;
        std::vector<double> v;
        for (std::size_t k : order) {
            s.push_back(std::move(simplex[k]));
            v.push_back(values[k]);
        }
        simplex = std::move(s);
        values  = std::move(v);
    };

    while (true) {
        sort_simplex();
        if (n == 0 || diameter(simplex) < options.diameter_tolerance) {
            result.converged = true;
            break;
        }
        if (result.iterations >= options.max_iterations) {
            break;
        }
        ++result.iterations;

        Point centroid(n, 0.0);
        for (std::size_t k = 0; k < n; ++k) {
            for (std::size_t d = 0; d < n; ++d) {
                centroid[d] += simplex[k][d] / static_cast<double>(n);
            }
        }
        Point& worst = simplex[n];

        Point reflected = along(centroid, worst, -options.reflection);
        clip(reflected, bounds);
        const double f_reflected = eval(reflected);

        if (f_reflected < values[0]) {
            Point expanded = along(centroid, reflected, options.expansion);
            clip(expanded, bounds);
            const double f_expanded = eval(expanded);
            if (f_expanded < f_reflected) {
                worst     = std::move(expanded);
                values[n] = f_expanded;
            }
            else {
                worst     = std::move(reflected);
                values[n] = f_reflected;
            }
            continue;
        }
        if (f_reflected < values[n - 1]) {
            worst     = std::move(reflected);
            values[n] = f_reflected;
            continue;
        }

        const bool outside   = f_reflected < values[n];
        Point contracted     = along(centroid, outside ? reflected : worst, options.contraction);
        clip(contracted, bounds);
        const double f_contracted = eval(contracted);
        if (outside ? f_contracted <= f_reflected : f_contracted < values[n]) {
            worst     = std::move(contracted);
            values[n] = f_contracted;
            continue;
        }

        for (std::size_t k = 1; k <= n; ++k) {
            simplex[k] = along(simplex[0], simplex[k], options.shrink);
            clip(simplex[k], bounds);
            values[k] = eval(simplex[k]);
        }
    }

    result.x     = simplex[0];
    result.value = values[0];
    return result;
}

} // namespace fracepi
