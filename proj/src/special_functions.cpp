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
#include "fracepi/special_functions.h"
#include "fracepi/errors.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <string>

namespace fracepi
{

namespace
{

// Lanczos approximation with g = 7 and nine coefficients.
constexpr double lanczos_g = 7.0;
constexpr std::array<double, 9> lanczos_coeffs = {
    0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
    771.32342877765313,   -176.61502916214059,   12.507343278686905,
    -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};

// Series part A(z) for z = x - 1, x >= 0.5.
double lanczos_sum(double z)
{
    double a = lanczos_coeffs[0];
    for (std::size_t i = 1; i < lanczos_coeffs.size(); ++i) {
        a += lanczos_coeffs[i] / (z + static_cast<double>(i));
    }
    return a;
}

void check_positive(double x, const char* fn)
{
    if (!(x > 0.0)) {
        throw DomainError(std::string(fn) + " requires a positive argument, got " + std::to_string(x));
    }
}

/// Neumaier's compensated summation.
class CompensatedSum
{
public:
    void add(double v)
    {
        const double t = m_sum + v;
        if (std::abs(m_sum) >= std::abs(v)) {
            m_carry += (m_sum - t) + v;
        }
        else {
            m_carry += (v - t) + m_sum;
        }
        m_sum = t;
    }

    double value() const
    {
        return m_sum + m_carry;
    }

private:
    double m_sum   = 0.0;
    double m_carry = 0.0;
};

} // namespace

double gamma(double x)
{
    check_positive(x, "gamma");
    if (x > gamma_max_argument) {
        throw OverflowError("gamma(" + std::to_string(x) + ") exceeds the double range");
    }
    if (x == std::floor(x)) {
        // factorials: exact through 22!, correctly accumulated beyond
        double f = 1.0;
        for (double k = 2.0; k < x; k += 1.0) {
            f *= k;
        }
        return f;
    }
    if (x < 0.5) {
        // reflection keeps the Lanczos sum in its accurate region
        return std::numbers::pi / (std::sin(std::numbers::pi * x) * gamma(1.0 - x));
    }
    const double z = x - 1.0;
    const double t = z + lanczos_g + 0.5;
    // t^(z+0.5) is split in two halves so that it does not overflow before exp(-t) is applied
    const double half_power = std::pow(t, 0.5 * (z + 0.5));
    const double result =
        std::sqrt(2.0 * std::numbers::pi) * half_power * (half_power * std::exp(-t)) * lanczos_sum(z);
    if (!std::isfinite(result)) {
        throw OverflowError("gamma(" + std::to_string(x) + ") exceeds the double range");
    }
    return result;
}

double log_gamma(double x)
{
    check_positive(x, "log_gamma");
    if (x < 0.5) {
        return std::log(gamma(x));
    }
    const double z = x - 1.0;
    const double t = z + lanczos_g + 0.5;
    return 0.5 * std::log(2.0 * std::numbers::pi) + (z + 0.5) * std::log(t) - t + std::log(lanczos_sum(z));
}

MLParams::MLParams(double alpha, double beta)
    : m_alpha(alpha)
    , m_beta(beta)
{
    if (!(alpha > 0.0) || !(beta > 0.0)) {
        throw DomainError("Mittag-Leffler parameters must be positive");
    }
}

double mittag_leffler(const MLParams& p, double z)
{
    if (!(std::abs(z) <= mittag_leffler_max_abs_z)) {
        throw DomainError("|z| = " + std::to_string(std::abs(z)) + " is outside the series window");
    }
    if (z == 0.0) {
        return p.beta() < gamma_max_argument ? 1.0 / gamma(p.beta()) : std::exp(-log_gamma(p.beta()));
    }

    constexpr int max_terms      = 10000;
    constexpr double rel_tol     = 1e-15;
    constexpr double min_digits  = 1e-6; // accepted relative error after cancellation
    const double log_abs_z       = std::log(std::abs(z));

    CompensatedSum sum;
    double largest_term = 0.0;
    double prev_log_term = -HUGE_VAL;
    for (int k = 0; k < max_terms; ++k) {
        const double log_term = k * log_abs_z - log_gamma(p.alpha() * k + p.beta());
        const double magnitude = std::exp(log_term);
        const double term = (z < 0.0 && (k % 2 == 1)) ? -magnitude : magnitude;
        sum.add(term);
        largest_term = std::max(largest_term, magnitude);

        // only stop once the terms are past their peak
        const double s = sum.value();
        if (k > 0 && log_term < prev_log_term && magnitude <= rel_tol * std::abs(s)) {
            if (largest_term * 0x1p-52 > min_digits * std::abs(s)) {
                throw ConvergenceError("Mittag-Leffler series lost its significant digits to cancellation");
            }
            return s;
        }
        prev_log_term = log_term;
    }
    throw ConvergenceError("Mittag-Leffler series did not converge within " + std::to_string(max_terms) + " terms");
}

} // namespace fracepi
