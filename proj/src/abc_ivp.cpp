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
#include "fracepi/abc_ivp.h"
#include "fracepi/errors.h"
#include "fracepi/special_functions.h"

#include <algorithm>
#include <cmath>
#include <string>

namespace fracepi
{

namespace
{

// Below this index the weights are evaluated from their defining powers.
constexpr std::size_t series_threshold = 8;

// sum_{k >= first} C(p,k) (sign x)^k, stopped once terms drop below double resolution.
double binomial_tail(double p, double x, int first, bool even_only, bool alternate)
{
    double coeff = 1.0; // C(p, 0)
    double power = 1.0;
    double sum   = 0.0;
    for (int k = 1; k < 200; ++k) {
        coeff *= (p - (k - 1)) / k;
        power *= alternate ? -x : x;
        if (k < first || (even_only && k % 2 == 1)) {
            continue;
        }
        const double term = coeff * power;
        sum += term;
        if (std::abs(term) <= 1e-18 * std::abs(sum) || coeff == 0.0) {
            break;
        }
    }
    return sum;
}

double interior_weight_value(std::size_t n, double p)
{
    const double nn = static_cast<double>(n);
    if (n < series_threshold) {
        return std::pow(nn + 1.0, p) - 2.0 * std::pow(nn, p) + std::pow(nn - 1.0, p);
    }
    // n^p [(1+x)^p + (1-x)^p - 2] = 2 n^p sum_k C(p,2k) x^{2k}, x = 1/n
    return 2.0 * std::pow(nn, p) * binomial_tail(p, 1.0 / nn, 2, true, false);
}

double start_weight_value(std::size_t j, double theta)
{
    const double p  = theta + 1.0;
    const double jj = static_cast<double>(j);
    if (j < series_threshold) {
        return std::pow(jj - 1.0, p) - (jj - p) * std::pow(jj, theta);
    }
    // j^p [(1-x)^p - 1 + p x] = j^p sum_{k>=2} C(p,k) (-x)^k, x = 1/j
    return std::pow(jj, p) * binomial_tail(p, 1.0 / jj, 2, false, true);
}

} // namespace

Grid::Grid(double t_end, std::size_t steps)
    : m_t_end(t_end)
    , m_steps(steps)
{
    if (steps == 0) {
        throw DegenerateGridError("grid needs at least one step");
    }
    if (!(t_end > 0.0) || !std::isfinite(t_end)) {
        throw DegenerateGridError("grid end time must be positive and finite");
    }
}

ProductTrapezoidWeights::ProductTrapezoidWeights(FractionalOrder theta, std::size_t steps)
    : m_theta(theta.value())
    , m_start(steps + 1, 0.0)
    , m_interior(steps + 1, 0.0)
{
    for (std::size_t j = 1; j <= steps; ++j) {
        if (theta.is_classical()) {
            // plain trapezoidal rule
            m_start[j]    = 1.0;
            m_interior[j] = 2.0;
        }
        else {
            m_start[j]    = start_weight_value(j, m_theta);
            m_interior[j] = interior_weight_value(j, m_theta + 1.0);
        }
    }
}

double ProductTrapezoidWeights::scale(double h) const
{
    return std::pow(h, m_theta) / (m_theta * (m_theta + 1.0));
}

double ProductTrapezoidWeights::integrate(std::size_t j, double h, std::span<const double> g) const
{
    if (j == 0) {
        return 0.0;
    }
    double acc = start_weight(j) * g[0] + g[j];
    for (std::size_t k = 1; k < j; ++k) {
        acc += interior_weight(j - k) * g[k];
    }
    return scale(h) * acc;
}

VolterraSolution solve_volterra(const SystemField& field, std::span<const double> x0, FractionalOrder theta,
                                double b_norm, const Grid& grid, const SolverOptions& options)
{
    if (!(b_norm > 0.0)) {
        throw DomainError("normalization ABC(theta) must be positive");
    }
    const std::size_t dim = x0.size();
    const std::size_t m   = grid.steps();
    const double th       = theta.value();
    const double h        = grid.step();

    const ProductTrapezoidWeights weights(theta, m);
    const double local    = (1.0 - th) / b_norm;
    const double memory   = th / (b_norm * gamma(th)) * weights.scale(h);
    const double implicit = local + memory;

    VolterraSolution sol{grid, dim, std::vector<double>((m + 1) * dim), std::vector<double>(dim),
                         std::vector<StepDiagnostics>(m + 1)};
    std::vector<double> rates((m + 1) * dim); // z(t_k, x_k), row 0 taken at x(0+)
    std::vector<double> base(dim), x(dim), next(dim), z(dim);

    auto row = [dim](std::vector<double>& v, std::size_t j) {
        return std::span<double>(v).subspan(j * dim, dim);
    };

    // Solves x = base + coeff * z(t, x) starting from the current contents of x.
    auto fixed_point = [&](double t, double coeff, std::size_t j) {
        for (std::size_t it = 1; it <= options.max_iterations; ++it) {
            field(t, x, z);
            bool done = true;
            for (std::size_t d = 0; d < dim; ++d) {
                next[d] = base[d] + coeff * z[d];
                if (!std::isfinite(next[d])) {
                    throw NonConvergenceError("non-finite iterate at step " + std::to_string(j), j);
                }
                if (std::abs(next[d] - x[d]) > options.tolerance * std::max(1.0, std::abs(next[d]))) {
                    done = false;
                }
            }
            x.swap(next);
            if (done) {
                return it;
            }
        }
        throw NonConvergenceError("fixed-point iteration did not converge at step " + std::to_string(j) + " (t = " +
                                      std::to_string(t) + ")",
                                  j);
    };

    std::copy(x0.begin(), x0.end(), row(sol.values, 0).begin());

    // right limit at the origin: x = x0 + (1-theta)/B z(0, x)
    std::copy(x0.begin(), x0.end(), base.begin());
    std::copy(x0.begin(), x0.end(), x.begin());
    sol.diagnostics[0].iterations = local > 0.0 ? fixed_point(0.0, local, 0) : 0;
    sol.start_limit               = x;
    field(0.0, x, row(rates, 0));

    auto is_negative = [](std::span<const double> v) {
        return std::any_of(v.begin(), v.end(), [](double c) {
            return c < 0.0;
        });
    };
    sol.diagnostics[0].negative_state = is_negative(x0);

    for (std::size_t j = 1; j <= m; ++j) {
        const double t = grid.time(j);
        for (std::size_t d = 0; d < dim; ++d) {
            double hist = weights.start_weight(j) * rates[d];
            for (std::size_t k = 1; k < j; ++k) {
                hist += weights.interior_weight(j - k) * rates[k * dim + d];
            }
            base[d] = x0[d] + memory * hist;
        }
        const auto prev = row(sol.values, j - 1);
        std::copy(prev.begin(), prev.end(), x.begin());
        sol.diagnostics[j].iterations = fixed_point(t, implicit, j);

        std::copy(x.begin(), x.end(), row(sol.values, j).begin());
        field(t, x, row(rates, j));
        sol.diagnostics[j].negative_state = is_negative(x);
    }
    return sol;
}

State Trajectory::interpolate(double t) const
{
    if (!(t >= 0.0 && t <= grid.t_end())) {
        throw RangeError("time " + std::to_string(t) + " lies outside the trajectory horizon [0, " +
                         std::to_string(grid.t_end()) + "]");
    }
    if (t == 0.0) {
        return states[0];
    }
    const double h  = grid.step();
    std::size_t j   = std::min(static_cast<std::size_t>(t / h), grid.steps() - 1);
    const double w  = (t - grid.time(j)) / (grid.time(j + 1) - grid.time(j));
    const State& a  = j == 0 ? start_limit : states[j];
    const State& b  = states[j + 1];
    return {a.p + w * (b.p - a.p), a.i + w * (b.i - a.i), a.q + w * (b.q - a.q)};
}

Trajectory solve_abc(const ModelParams& params, const State& init, FractionalOrder theta, double b_norm,
                     const Grid& grid, const SolverOptions& options)
{
    params.validate();
    const SystemField field = [&params](double, std::span<const double> x, std::span<double> dxdt) {
        const State f = vector_field(params, {x[0], x[1], x[2]});
        dxdt[0]       = f.p;
        dxdt[1]       = f.i;
        dxdt[2]       = f.q;
    };
    const double x0[3] = {init.p, init.i, init.q};
    VolterraSolution sol = solve_volterra(field, x0, theta, b_norm, grid, options);

    Trajectory traj{grid, {}, {}, std::move(sol.diagnostics)};
    traj.states.reserve(grid.steps() + 1);
    for (std::size_t j = 0; j <= grid.steps(); ++j) {
        const auto v = sol.at(j);
        traj.states.push_back({v[0], v[1], v[2]});
    }
    traj.start_limit = {sol.start_limit[0], sol.start_limit[1], sol.start_limit[2]};
    return traj;
}

double compare_series(const Trajectory& traj, const SeriesSolution& s)
{
    double gap = 0.0;
    for (std::size_t j = 0; j <= traj.grid.steps(); ++j) {
        const State& a = j == 0 ? traj.start_limit : traj.states[j];
        const State b  = series_eval(s, traj.grid.time(j));
        gap            = std::max({gap, std::abs(a.p - b.p), std::abs(a.i - b.i), std::abs(a.q - b.q)});
    }
    return gap;
}

} // namespace fracepi
