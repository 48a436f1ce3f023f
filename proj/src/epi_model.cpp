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
#include "fracepi/epi_model.h"
#include "fracepi/errors.h"

#include <cmath>
#include <string>

namespace fracepi
{

void ModelParams::validate() const
{
    for (const auto& field : param_fields) {
        const double v = this->*field.member;
        if (!std::isfinite(v) || v < 0.0) {
            throw RangeError("parameter " + std::string(field.name) + " must be finite and non-negative");
        }
    }
}

double ModelParams::*find_param(std::string_view name)
{
    for (const auto& field : param_fields) {
        if (field.name == name) {
            return field.member;
        }
    }
    return nullptr;
}

State vector_field(const ModelParams& k, const State& s)
{
    const double infection = k.gamma * s.p * s.i;
    return {
        k.lambda - infection - k.d0 * s.p,
        infection - (k.d0 + k.h + k.eta) * s.i + k.sigma * s.q,
        k.eta * s.i - (k.d0 + k.mu + k.sigma) * s.q,
    };
}

double total_population_rate(const ModelParams& params, const State& s)
{
    const State f = vector_field(params, s);
    return f.p + f.i + f.q;
}

double r0(const ModelParams& k)
{
    const double outflow_q = k.d0 + k.mu + k.sigma;
    const double denom     = k.d0 * outflow_q * (k.d0 + k.h) + k.eta * (k.d0 + k.mu);
    if (denom == 0.0) {
        throw DegenerateModelError("R0 denominator vanishes");
    }
    return k.gamma * k.lambda * outflow_q / denom;
}

namespace scenarios
{

ModelParams simulation_study()
{
    ModelParams k;
    k.lambda = 0.003;
    k.gamma  = 0.009;
    k.d0     = 0.009;
    k.eta    = 0.004;
    k.mu     = 0.004;
    k.sigma  = 0.003;
    k.h      = 0.007;
    return k;
}

State simulation_study_initial()
{
    return {10.0, 0.01, 0.0011};
}

ModelParams case_study()
{
    ModelParams k;
    k.lambda = 0.028;
    k.gamma  = 0.2;
    k.d0     = 0.011;
    k.eta    = 0.3;
    k.mu     = 0.2;
    k.sigma  = 0.04;
    k.h      = 0.06;
    return k;
}

State case_study_initial()
{
    return {35.525047, 0.010485, 0.018};
}

} // namespace scenarios

} // namespace fracepi
