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
#ifndef FRACEPI_ABC_IVP_H
#define FRACEPI_ABC_IVP_H

#include "fracepi/epi_model.h"
#include "fracepi/fractional_order.h"
#include "fracepi/ladm.h"

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace fracepi
{

/// Uniform time grid t_j = j * t_end / steps, j = 0..steps.
class Grid
{
public:
    /// @throws DegenerateGridError for steps == 0 or a non-positive/non-finite t_end.
    Grid(double t_end, std::size_t steps);

    double t_end() const
    {
        return m_t_end;
    }
    std::size_t steps() const
    {
        return m_steps;
    }
    double step() const
    {
        return m_t_end / static_cast<double>(m_steps);
    }
    double time(std::size_t j) const
    {
        return j == m_steps ? m_t_end : static_cast<double>(j) * step();
    }

private:
    double m_t_end;
    std::size_t m_steps;
};

/**
 * @brief Product-trapezoidal weights for int_0^{t_j} (t_j - w)^(theta-1) g(w) dw on a uniform grid.
 *
 * With g replaced by its piecewise linear interpolant the integral equals
 *   scale(h) * (start_weight(j) g_0 + sum_{k=1}^{j-1} interior_weight(j-k) g_k + g_j),
 * scale(h) = h^theta / (theta (theta+1)). The kernel moments are integrated exactly.
 */
class ProductTrapezoidWeights
{
public:
    ProductTrapezoidWeights(FractionalOrder theta, std::size_t steps);

    /// (j-1)^(theta+1) - (j-theta-1) j^theta, j >= 1.
    double start_weight(std::size_t j) const
    {
        return m_start.at(j);
    }

    /// (n+1)^(theta+1) - 2 n^(theta+1) + (n-1)^(theta+1), n >= 1.
    double interior_weight(std::size_t n) const
    {
        return m_interior.at(n);
    }

    double scale(double h) const;

    /// Quadrature of the kernel against samples g_0..g_j.
    double integrate(std::size_t j, double h, std::span<const double> g) const;

private:
    double m_theta;
    std::vector<double> m_start;
    std::vector<double> m_interior;
};

struct SolverOptions {
    double tolerance           = 1e-12; ///< per-component, relative to max(1, |x|)
    std::size_t max_iterations = 50;
};

struct StepDiagnostics {
    std::size_t iterations = 0;
    bool negative_state    = false;
};

/// Right-hand side z(t, x) of D^theta x = z for a system of any dimension.
using SystemField = std::function<void(double t, std::span<const double> x, std::span<double> dxdt)>;

/// Raw solution of a system in Volterra form; values are stored row-major, one row per grid node.
struct VolterraSolution {
    Grid grid;
    std::size_t dim = 0;
    std::vector<double> values;
    /// Limit x(0+) of the Volterra solution, which differs from x0 by (1-theta)/B z(0, x(0+)).
    std::vector<double> start_limit;
    std::vector<StepDiagnostics> diagnostics;

    std::span<const double> at(std::size_t j) const
    {
        return std::span<const double>(values).subspan(j * dim, dim);
    }
};

/**
 * @brief Solves x(t) = x0 + (1-theta)/B z(t, x(t)) + theta/(B Gamma(theta)) int_0^t (t-w)^(theta-1) z(w, x(w)) dw.
 *
 * Product-trapezoidal discretization; each implicit node is resolved by fixed-point iteration.
 * Row 0 of the result is x0 itself; the integrand uses the right limit x(0+) at the origin.
 * @throws NonConvergenceError when a node does not converge within the iteration budget.
 */
VolterraSolution solve_volterra(const SystemField& field, std::span<const double> x0, FractionalOrder theta,
                                double b_norm, const Grid& grid, const SolverOptions& options = {});

/// P-I-Q trajectory on a grid; states[0] is the configured initial state.
struct Trajectory {
    Grid grid;
    std::vector<State> states;
    State start_limit;
    std::vector<StepDiagnostics> diagnostics;

    /// Linear interpolation between grid nodes; (0, t_1] interpolates from start_limit.
    /// @throws RangeError outside [0, t_end].
    State interpolate(double t) const;
};

/// Solves the ABC-fractional P-I-Q system on the grid.
Trajectory solve_abc(const ModelParams& params, const State& init, FractionalOrder theta, double b_norm,
                     const Grid& grid, const SolverOptions& options = {});

/// Sup over grid nodes of the component-wise gap between trajectory and series. Node 0 compares start_limit.
double compare_series(const Trajectory& traj, const SeriesSolution& s);

} // namespace fracepi

#endif // FRACEPI_ABC_IVP_H
