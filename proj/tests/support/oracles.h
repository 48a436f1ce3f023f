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
#ifndef FRACEPI_TESTS_SUPPORT_ORACLES_H
#define FRACEPI_TESTS_SUPPORT_ORACLES_H

// Test-only reference computations. Nothing here calls into the library's numerics.

#include "fracepi/epi_model.h"
#include "fracepi/theta_poly.h"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <array>
#include <cstddef>
#include <map>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace fracepi::oracle
{

using Rational = boost::multiprecision::cpp_rational;

/// Exact rational value of a decimal literal such as "0.003".
inline Rational decimal(const std::string& text)
{
    using boost::multiprecision::cpp_int;
    const auto dot = text.find('.');
    if (dot == std::string::npos) {
        return Rational(cpp_int(text));
    }
    std::string digits = text.substr(0, dot) + text.substr(dot + 1);
    // a leading zero would select octal parsing
    digits.erase(0, std::min(digits.find_first_not_of('0'), digits.size() - 1));
    cpp_int scale            = 1;
    for (std::size_t k = dot + 1; k < text.size(); ++k) {
        scale *= 10;
    }
    return Rational(cpp_int(digits), scale);
}

/// Rates as decimal strings, in the order lambda, gamma, d0, eta, mu, sigma, h.
using DecimalRates = std::array<std::string, 7>;

inline const DecimalRates simulation_study_rates = {"0.003", "0.009", "0.009", "0.004", "0.004", "0.003", "0.007"};
inline const DecimalRates case_study_rates       = {"0.028", "0.2", "0.011", "0.3", "0.2", "0.04", "0.06"};

/// Exact R0 in rational arithmetic.
inline Rational r0_exact(const DecimalRates& r)
{
    const Rational lambda = decimal(r[0]), gamma = decimal(r[1]), d0 = decimal(r[2]), eta = decimal(r[3]),
                   mu = decimal(r[4]), sigma = decimal(r[5]), h = decimal(r[6]);
    const Rational a = d0 + mu + sigma;
    return gamma * lambda * a / (d0 * a * (d0 + h) + eta * (d0 + mu));
}

inline double to_double(const Rational& x)
{
    return x.convert_to<double>();
}

/// Classical fourth-order Runge-Kutta for the P-I-Q system (theta = 1), fixed step.
inline std::vector<std::array<double, 3>> rk4(const ModelParams& k, std::array<double, 3> x, double t_end,
                                              std::size_t steps)
{
    auto field = [&k](const std::array<double, 3>& s) {
        const double infection = k.gamma * s[0] * s[1];
        return std::array<double, 3>{k.lambda - infection - k.d0 * s[0],
                                     infection - (k.d0 + k.h + k.eta) * s[1] + k.sigma * s[2],
                                     k.eta * s[1] - (k.d0 + k.mu + k.sigma) * s[2]};
    };
    auto axpy = [](const std::array<double, 3>& a, double c, const std::array<double, 3>& b) {
        return std::array<double, 3>{a[0] + c * b[0], a[1] + c * b[1], a[2] + c * b[2]};
    };
    const double h = t_end / static_cast<double>(steps);
    std::vector<std::array<double, 3>> out{x};
    out.reserve(steps + 1);
    for (std::size_t n = 0; n < steps; ++n) {
        const auto k1 = field(x);
        const auto k2 = field(axpy(x, h / 2, k1));
        const auto k3 = field(axpy(x, h / 2, k2));
        const auto k4 = field(axpy(x, h, k3));
        for (int d = 0; d < 3; ++d) {
            x[d] += h / 6 * (k1[d] + 2 * k2[d] + 2 * k3[d] + k4[d]);
        }
        out.push_back(x);
    }
    return out;
}

/// Coefficient of lambda^n in (sum_k lambda^k P_k)(sum_k lambda^k I_k), keyed by (m, n) of t^(m + n theta).
/// Multiplies term by term over the full index square without ThetaPolynomial arithmetic.
inline std::map<std::pair<unsigned, unsigned>, double> lambda_coefficient(const std::vector<ThetaPolynomial>& p,
                                                                          const std::vector<ThetaPolynomial>& i,
                                                                          std::size_t n)
{
    std::map<std::tuple<std::size_t, unsigned, unsigned>, double> expanded;
    for (std::size_t a = 0; a < p.size(); ++a) {
        for (std::size_t b = 0; b < i.size(); ++b) {
            for (const auto& x : p[a].terms()) {
                for (const auto& y : i[b].terms()) {
                    expanded[{a + b, x.m + y.m, x.n + y.n}] += x.coeff * y.coeff;
                }
            }
        }
    }
    std::map<std::pair<unsigned, unsigned>, double> out;
    for (const auto& [key, c] : expanded) {
        if (std::get<0>(key) == n && c != 0.0) {
            out[{std::get<1>(key), std::get<2>(key)}] = c;
        }
    }
    return out;
}

} // namespace fracepi::oracle

#endif // FRACEPI_TESTS_SUPPORT_ORACLES_H
