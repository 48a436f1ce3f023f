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
#ifndef FRACEPI_THETA_POLY_H
#define FRACEPI_THETA_POLY_H

#include <span>
#include <string>
#include <vector>

namespace fracepi
{

/// One term coeff * t^(m + n*theta). The exponent is kept as the integer pair (m, n).
struct ThetaMonomial {
    double coeff;
    unsigned m;
    unsigned n;

    friend bool operator==(const ThetaMonomial&, const ThetaMonomial&) = default;
};

/**
 * @brief Finite sum of monomials c * t^(m + n*theta) for a fixed theta in (0, 1].
 *
 * Terms with equal (m, n) are merged, terms with |coeff| < 1e-300 are dropped and the remaining
 * terms are ordered by exponent value m + n*theta (ties by m, then n).
 * All arithmetic is exact in the coefficients apart from ordinary floating-point rounding.
 */
class ThetaPolynomial
{
public:
    /// Zero polynomial.
    explicit ThetaPolynomial(double theta);
    ThetaPolynomial(double theta, std::vector<ThetaMonomial> terms);

    static ThetaPolynomial constant(double theta, double value);

    double theta() const
    {
        return m_theta;
    }

    std::span<const ThetaMonomial> terms() const
    {
        return m_terms;
    }

    bool empty() const
    {
        return m_terms.empty();
    }

    /// Coefficient of t^(m + n*theta), zero if absent.
    double coefficient(unsigned m, unsigned n) const;

    /// Exponent value m + n*theta of a term.
    double exponent(const ThetaMonomial& term) const
    {
        return term.m + term.n * m_theta;
    }

    /// Largest theta-multiplicity n among the terms (0 for the zero polynomial).
    unsigned max_multiplicity() const;

    /// Value at t >= 0. At t = 0 only (0,0) terms contribute.
    double operator()(double t) const;

    /// Human readable form, e.g. "0.5 + 0.56419*t^(0.5)".
    std::string to_string(int precision = 6) const;

    friend bool operator==(const ThetaPolynomial&, const ThetaPolynomial&) = default;

private:
    double m_theta;
    std::vector<ThetaMonomial> m_terms;
};

// The binary operations throw MismatchedOrderError when the orders differ.
ThetaPolynomial operator+(const ThetaPolynomial& a, const ThetaPolynomial& b);
ThetaPolynomial operator-(const ThetaPolynomial& a, const ThetaPolynomial& b);
ThetaPolynomial operator*(const ThetaPolynomial& a, const ThetaPolynomial& b);
ThetaPolynomial operator*(double c, const ThetaPolynomial& a);
ThetaPolynomial operator*(const ThetaPolynomial& a, double c);

/// Riemann-Liouville integral of order theta, applied term by term:
/// c t^a -> c Gamma(a+1)/Gamma(a+theta+1) t^(a+theta).
ThetaPolynomial fractional_integral(const ThetaPolynomial& g);

/**
 * @brief Inverse of the ABC derivative on functions vanishing at the origin.
 *
 * Returns (1-theta)/b_norm * g + theta/b_norm * I^theta g, i.e. the operator that maps the
 * right-hand side z of D^theta x = z to x - x(0). In the Laplace domain this is multiplication
 * by (s^theta (1-theta) + theta) / (s^theta b_norm).
 *
 * @throws DomainError if theta is outside (0,1] or b_norm <= 0.
 * @throws MismatchedOrderError if g.theta() != theta.
 */
ThetaPolynomial abc_inverse(const ThetaPolynomial& g, double theta, double b_norm = 1.0);

} // namespace fracepi

#endif // FRACEPI_THETA_POLY_H
