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
#ifndef FRACEPI_ANALYSIS_H
#define FRACEPI_ANALYSIS_H

#include "fracepi/epi_model.h"
#include "fracepi/fractional_order.h"

#include <string>
#include <vector>

namespace fracepi
{

enum class SensitivityMode
{
    analytic,
    finite_difference,
};

struct SensitivityEntry {
    std::string name;
    double index  = 0.0;
    bool analytic = true;
};

/// Normalized forward sensitivity indices of R0, in the order gamma, lambda, d0, mu, sigma, h, eta.
struct SensitivityReport {
    std::vector<SensitivityEntry> entries;

    /// @throws IndexError for an unknown parameter name.
    double index(const std::string& name) const;
};

/**
 * @brief S_w = (w / R0) dR0/dw for every rate w.
 *
 * Finite-difference mode uses central differences with relative step 1e-6.
 * @throws DegenerateModelError if R0 is zero or undefined.
 */
SensitivityReport sensitivity_indices(const ModelParams& params, SensitivityMode mode = SensitivityMode::analytic);

/// Upper corners of the state box [0, p] x [0, i] x [0, q].
struct StateBox {
    double p = 0.0;
    double i = 0.0;
    double q = 0.0;
};

/**
 * @brief Lipschitz constant of the vector field on the box in the sum norm |P|+|I|+|Q|.
 *
 * Maximum over the box corners of the induced 1-norm (largest absolute column sum) of the Jacobian.
 * The column sums are convex in the state, so the corner maximum is the supremum over the box.
 * @throws RangeError for negative box bounds.
 */
double lipschitz_estimate(const ModelParams& params, const StateBox& box);

struct ContractionResult {
    double xi  = 0.0;
    bool xi_ok = false; ///< xi < 1
};

/// Xi = (1-theta) L / B + tau^theta L / (Gamma(theta) B).
ContractionResult contraction_constant(double l_phi, FractionalOrder theta, double tau, double b_norm = 1.0);

/// Omega = epsilon (Gamma(theta) + tau^theta) / (Gamma(theta) B).
double ulam_bound(double epsilon, FractionalOrder theta, double tau, double b_norm = 1.0);

struct StabilityReport {
    double l_phi       = 0.0;
    double xi          = 0.0;
    bool xi_ok         = false;
    double omega_bound = 0.0; ///< Ulam constant per unit epsilon
    double tau         = 0.0;
    double theta       = 1.0;
    StateBox box;
};

StabilityReport stability_report(const ModelParams& params, const StateBox& box, FractionalOrder theta, double tau,
                                 double b_norm = 1.0);

} // namespace fracepi

#endif // FRACEPI_ANALYSIS_H
