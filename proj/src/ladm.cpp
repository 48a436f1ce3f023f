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
#include "fracepi/ladm.h"
#include "fracepi/errors.h"

#include <algorithm>
#include <cmath>
#include <string>

namespace fracepi
{

ThetaPolynomial adomian_product(std::span<const ThetaPolynomial> p_terms, std::span<const ThetaPolynomial> i_terms,
                                std::size_t n)
{
    if (p_terms.size() <= n || i_terms.size() <= n) {
        throw IndexError("Adomian polynomial H_" + std::to_string(n) + " needs " + std::to_string(n + 1) +
                         " iterates per component");
    }
    ThetaPolynomial h(p_terms[0].theta());
    for (std::size_t k = 0; k <= n; ++k) {
        h = h + p_terms[k] * i_terms[n - k];
    }
    return h;
}

SeriesSolution ladm_expand(const ModelParams& params, const State& init, FractionalOrder theta, double b_norm,
                           std::size_t order, SourcePlacement source)
{
    const double th = theta.value();
    SeriesSolution s;
    s.theta  = theta;
    s.b_norm = b_norm;
    s.p_terms.reserve(order + 1);
    s.i_terms.reserve(order + 1);
    s.q_terms.reserve(order + 1);
    s.p_terms.push_back(ThetaPolynomial::constant(th, init.p));
    s.i_terms.push_back(ThetaPolynomial::constant(th, init.i));
    s.q_terms.push_back(ThetaPolynomial::constant(th, init.q));

    const double i_outflow = params.d0 + params.h + params.eta;
    const double q_outflow = params.d0 + params.mu + params.sigma;
    for (std::size_t n = 0; n < order; ++n) {
        const ThetaPolynomial h = adomian_product(s.p_terms, s.i_terms, n);
        const bool with_source  = n == 0 || source == SourcePlacement::every_term;
        const ThetaPolynomial src = ThetaPolynomial::constant(th, with_source ? params.lambda : 0.0);

        const auto& p = s.p_terms[n];
        const auto& i = s.i_terms[n];
        const auto& q = s.q_terms[n];
        ThetaPolynomial rhs_p = src - params.gamma * h - params.d0 * p;
        ThetaPolynomial rhs_i = params.gamma * h - i_outflow * i + params.sigma * q;
        ThetaPolynomial rhs_q = params.eta * i - q_outflow * q;

        s.p_terms.push_back(abc_inverse(rhs_p, th, b_norm));
        s.i_terms.push_back(abc_inverse(rhs_i, th, b_norm));
        s.q_terms.push_back(abc_inverse(rhs_q, th, b_norm));
    }
    return s;
}

State iterate_eval(const SeriesSolution& s, std::size_t n, double t)
{
    return {s.p_terms.at(n)(t), s.i_terms.at(n)(t), s.q_terms.at(n)(t)};
}

State series_eval(const SeriesSolution& s, double t)
{
    State sum;
    for (std::size_t n = 0; n < s.p_terms.size(); ++n) {
        const State term = iterate_eval(s, n, t);
        sum.p += term.p;
        sum.i += term.i;
        sum.q += term.q;
    }
    return sum;
}

double truncation_estimate(const SeriesSolution& s, double t)
{
    if (s.order() < 1) {
        throw IndexError("truncation estimate needs at least one iterate beyond the initial values");
    }
    const State last = iterate_eval(s, s.order(), t);
    return std::max({std::abs(last.p), std::abs(last.i), std::abs(last.q)});
}

} // namespace fracepi
