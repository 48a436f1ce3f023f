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
#ifndef FRACEPI_EPI_MODEL_H
#define FRACEPI_EPI_MODEL_H

#include <array>
#include <string_view>

namespace fracepi
{

/**
 * @brief Rates of the susceptible-infected-quarantined (P-I-Q) model.
 *
 * Units: persons/day for lambda, 1/(persons*day) for gamma, 1/day for the rest.
 */
struct ModelParams {
    double lambda = 0.0; ///< recruitment rate
    double gamma  = 0.0; ///< transmission rate
    double d0     = 0.0; ///< natural death rate
    double eta    = 0.0; ///< infected -> quarantined
    double mu     = 0.0; ///< death rate in quarantine
    double sigma  = 0.0; ///< quarantined -> infected
    double h      = 0.0; ///< death rate of infected

    /// @throws RangeError if a rate is negative or not finite.
    void validate() const;

    friend bool operator==(const ModelParams&, const ModelParams&) = default;
};

/// Name/member pairs in the canonical order lambda, gamma, d0, eta, mu, sigma, h.
struct ParamField {
    std::string_view name;
    double ModelParams::*member;
};

inline constexpr std::array<ParamField, 7> param_fields = {{
    {"lambda", &ModelParams::lambda},
    {"gamma", &ModelParams::gamma},
    {"d0", &ModelParams::d0},
    {"eta", &ModelParams::eta},
    {"mu", &ModelParams::mu},
    {"sigma", &ModelParams::sigma},
    {"h", &ModelParams::h},
}};

/// Member pointer for a parameter name, or nullptr if the name is unknown.
double ModelParams::*find_param(std::string_view name);

/// Compartment sizes. Also used for time derivatives of the compartments.
struct State {
    double p = 0.0; ///< susceptible
    double i = 0.0; ///< infected
    double q = 0.0; ///< quarantined

    double total() const
    {
        return p + i + q;
    }

    friend bool operator==(const State&, const State&) = default;
};

/// Right-hand side (f1, f2, f3) of the P-I-Q system.
State vector_field(const ModelParams& params, const State& s);

/// dN/dt for N = P + I + Q, computed as f1 + f2 + f3 of vector_field().
double total_population_rate(const ModelParams& params, const State& s);

/**
 * @brief Basic reproduction number
 *        R0 = gamma lambda (d0+mu+sigma) / [d0 (d0+mu+sigma)(d0+h) + eta (d0+mu)].
 * @throws DegenerateModelError if the denominator vanishes.
 */
double r0(const ModelParams& params);

/// Reference parameter sets.
namespace scenarios
{

/// Simulation study: populations in millions.
ModelParams simulation_study();
State simulation_study_initial();

/// Khyber Pakhtunkhwa case study rates (gamma, mu, sigma, eta are fitted values).
ModelParams case_study();
/// Case study initial populations in millions (35,525,047 / 10,485 / 18,000 persons).
State case_study_initial();

} // namespace scenarios

} // namespace fracepi

#endif // FRACEPI_EPI_MODEL_H
