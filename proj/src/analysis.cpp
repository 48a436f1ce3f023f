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
#include "fracepi/analysis.h"
#include "fracepi/errors.h"
#include "fracepi/special_functions.h"

#include <algorithm>
#include <array>
#include <cmath>

namespace fracepi
{

namespace
{

constexpr std::array<const char*, 7> sensitivity_order = {"gamma", "lambda", "d0", "mu", "sigma", "h", "eta"};

void check_tau_and_norm(double tau, double b_norm)
{
    if (!(tau > 0.0)) {
        throw DomainError("horizon tau must be positive");
    }
    if (!(b_norm > 0.0)) {
        throw DomainError("normalization ABC(theta) must be positive");
    }
}

/*
 * Logarithmic derivatives of R0 = gamma lambda A / D with
 *   A = d0 + mu + sigma,
 *   D = d0 A (d0 + h) + eta (d0 + mu),
 * so that S_w = w (dA/dw / A - dD/dw / D):
 *   gamma, lambda: R0 is linear in both, S = 1
 *   d0:    dA = 1, dD = A (d0+h) + d0 (d0+h) + d0 A + eta
 *   mu:    dA = 1, dD = d0 (d0+h) + eta
 *   sigma: dA = 1, dD = d0 (d0+h)
 *   h:     dA = 0, dD = d0 A
 *   eta:   dA = 0, dD = d0 + mu
 */
double analytic_index(const ModelParams& k, const std::string& name)
{
    const double a = k.d0 + k.mu + k.sigma;
    const double d = k.d0 * a * (k.d0 + k.h) + k.eta * (k.d0 + k.mu);
    if (name == "gamma" || name == "lambda") {
        return 1.0;
    }
    if (name == "d0") {
        const double dd = a * (k.d0 + k.h) + k.d0 * (k.d0 + k.h) + k.d0 * a + k.eta;
        return k.d0 * (1.0 / a - dd / d);
    }
    if (name == "mu") {
        return k.mu * (1.0 / a - (k.d0 * (k.d0 + k.h) + k.eta) / d);
    }
    if (name == "sigma") {
        return k.sigma * (1.0 / a - k.d0 * (k.d0 + k.h) / d);
    }
    if (name == "h") {
        return -k.h * k.d0 * a / d;
    }
    return -k.eta * (k.d0 + k.mu) / d; // eta
}

double central_difference_index(const ModelParams& k, const std::string& name, double base_r0)
{
    double ModelParams::*member = find_param(name);
    const double w              = k.*member;
    if (w == 0.0) {
        return 0.0;
    }
    const double step = 1e-6 * w;
    ModelParams up = k, down = k;
    up.*member   = w + step;
    down.*member = w - step;
    const double derivative = (r0(up) - r0(down)) / (2.0 * step);
    return w / base_r0 * derivative;
}

} // namespace

double SensitivityReport::index(const std::string& name) const
{
    for (const auto& e : entries) {
        if (e.name == name) {
            return e.index;
        }
    }
    throw IndexError("no sensitivity entry for parameter " + name);
}

SensitivityReport sensitivity_indices(const ModelParams& params, SensitivityMode mode)
{
    params.validate();
    const double base = r0(params);
    if (base == 0.0 || !std::isfinite(base)) {
        throw DegenerateModelError("sensitivity indices need a nonzero R0");
    }
    SensitivityReport report;
    for (const char* name : sensitivity_order) {
        const bool analytic = mode == SensitivityMode::analytic;
        const double s      = analytic ? analytic_index(params, name) : central_difference_index(params, name, base);
        report.entries.push_back({name, s, analytic});
    }
    return report;
}

double lipschitz_estimate(const ModelParams& k, const StateBox& box)
{
    if (box.p < 0.0 || box.i < 0.0 || box.q < 0.0) {
        throw RangeError("state box bounds must be non-negative");
    }
    // Jacobian of (f1, f2, f3):
    //   [ -d0 - gamma I    -gamma P                   0               ]
    //   [  gamma I          gamma P - (d0+h+eta)      sigma           ]
    //   [  0                eta                      -(d0+mu+sigma)   ]
    double best = 0.0;
    for (double p : {0.0, box.p}) {
        for (double i : {0.0, box.i}) {
            const double col_p = std::abs(-k.d0 - k.gamma * i) + std::abs(k.gamma * i);
            const double col_i =
                std::abs(-k.gamma * p) + std::abs(k.gamma * p - (k.d0 + k.h + k.eta)) + std::abs(k.eta);
            const double col_q = std::abs(k.sigma) + std::abs(k.d0 + k.mu + k.sigma);
            best = std::max({best, col_p, col_i, col_q});
        }
    }
    return best;
}

ContractionResult contraction_constant(double l_phi, FractionalOrder theta, double tau, double b_norm)
{
    if (!(l_phi >= 0.0)) {
        throw DomainError("Lipschitz constant must be non-negative");
    }
    check_tau_and_norm(tau, b_norm);
    const double th = theta.value();
    const double xi = (1.0 - th) * l_phi / b_norm + std::pow(tau, th) * l_phi / (gamma(th) * b_norm);
    return {xi, xi < 1.0};
}

double ulam_bound(double epsilon, FractionalOrder theta, double tau, double b_norm)
{
    if (!(epsilon >= 0.0)) {
        throw DomainError("epsilon must be non-negative");
    }
    check_tau_and_norm(tau, b_norm);
    const double th     = theta.value();
    const double factor = (gamma(th) + std::pow(tau, th)) / (gamma(th) * b_norm);
    return epsilon * factor;
}

StabilityReport stability_report(const ModelParams& params, const StateBox& box, FractionalOrder theta, double tau,
                                 double b_norm)
{
    StabilityReport report;
    report.l_phi            = lipschitz_estimate(params, box);
    const auto contraction  = contraction_constant(report.l_phi, theta, tau, b_norm);
    report.xi               = contraction.xi;
    report.xi_ok            = contraction.xi_ok;
    report.omega_bound      = ulam_bound(1.0, theta, tau, b_norm);
    report.tau              = tau;
    report.theta            = theta.value();
    report.box              = box;
    return report;
}

} // namespace fracepi
