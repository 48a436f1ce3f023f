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
#ifndef FRACEPI_LADM_H
#define FRACEPI_LADM_H

#include "fracepi/epi_model.h"
#include "fracepi/fractional_order.h"
#include "fracepi/theta_poly.h"

#include <cstddef>
#include <span>
#include <vector>

namespace fracepi
{

/// Where the constant recruitment lambda enters the decomposition.
enum class SourcePlacement
{
    first_term, ///< only in P_1 (standard Adomian placement)
    every_term, ///< in every P_{n+1}, the literal reading of the printed recurrence
};

/// Truncated decomposition series P = sum_n P_n (likewise I, Q); index 0 holds the initial values.
struct SeriesSolution {
    std::vector<ThetaPolynomial> p_terms;
    std::vector<ThetaPolynomial> i_terms;
    std::vector<ThetaPolynomial> q_terms;
    FractionalOrder theta{1.0};
    double b_norm = 1.0;

    std::size_t order() const
    {
        return p_terms.empty() ? 0 : p_terms.size() - 1;
    }
};

/**
 * @brief Adomian polynomial H_n of the product nonlinearity P*I.
 *
 * For a product the n-th derivative formula collapses to the Cauchy convolution
 * H_n = sum_{k=0}^{n} P_k I_{n-k}.
 * @throws IndexError if either list has fewer than n+1 entries.
 */
ThetaPolynomial adomian_product(std::span<const ThetaPolynomial> p_terms, std::span<const ThetaPolynomial> i_terms,
                                std::size_t n);

/**
 * @brief Builds iterates 0..order of the Laplace-Adomian decomposition.
 *
 * P_{n+1} = A[src(n) - gamma H_n - d0 P_n],
 * I_{n+1} = A[gamma H_n - (d0+h+eta) I_n + sigma Q_n],
 * Q_{n+1} = A[eta I_n - (d0+mu+sigma) Q_n],
 * with A = abc_inverse and src(0) = lambda; src(n>=1) is lambda only for SourcePlacement::every_term.
 */
SeriesSolution ladm_expand(const ModelParams& params, const State& init, FractionalOrder theta, double b_norm = 1.0,
                           std::size_t order = 15, SourcePlacement source = SourcePlacement::first_term);

/// Sum of all iterates at t >= 0.
State series_eval(const SeriesSolution& s, double t);

/// Iterate n of each compartment, evaluated at t.
State iterate_eval(const SeriesSolution& s, std::size_t n, double t);

/**
 * @brief Last-term heuristic for the truncation error: max over components of |last iterate(t)|.
 *
 * Not a bound. Requires order() >= 1.
 */
double truncation_estimate(const SeriesSolution& s, double t);

} // namespace fracepi

#endif // FRACEPI_LADM_H
