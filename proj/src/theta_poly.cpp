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
#include "fracepi/theta_poly.h"
#include "fracepi/errors.h"
#include "fracepi/special_functions.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <tuple>
#include <utility>

namespace fracepi
{

namespace
{

constexpr double prune_threshold = 1e-300;

using Key = std::pair<unsigned, unsigned>;

void check_same_order(const ThetaPolynomial& a, const ThetaPolynomial& b)
{
    if (a.theta() != b.theta()) {
        throw MismatchedOrderError("theta-polynomials of different order cannot be combined");
    }
}

std::vector<ThetaMonomial> collect(const std::map<Key, double>& acc)
{
    std::vector<ThetaMonomial> out;
    out.reserve(acc.size());
    for (const auto& [key, coeff] : acc) {
        out.push_back({coeff, key.first, key.second});
    }
    return out;
}

// Gamma(a+1)/Gamma(a+theta+1), switching to logarithms before gamma() would overflow.
double gamma_ratio(double a, double theta)
{
    if (a + theta + 1.0 < 170.0) {
        return gamma(a + 1.0) / gamma(a + theta + 1.0);
    }
    return std::exp(log_gamma(a + 1.0) - log_gamma(a + theta + 1.0));
}

} // namespace

ThetaPolynomial::ThetaPolynomial(double theta)
    : m_theta(theta)
{
    if (!(theta > 0.0 && theta <= 1.0)) {
        throw DomainError("theta must lie in (0, 1]");
    }
}

ThetaPolynomial::ThetaPolynomial(double theta, std::vector<ThetaMonomial> terms)
    : ThetaPolynomial(theta)
{
    std::map<Key, double> acc;
    for (const auto& term : terms) {
        acc[{term.m, term.n}] += term.coeff;
    }
    for (const auto& [key, coeff] : acc) {
        if (std::abs(coeff) >= prune_threshold) {
            m_terms.push_back({coeff, key.first, key.second});
        }
    }
    std::sort(m_terms.begin(), m_terms.end(), [this](const ThetaMonomial& x, const ThetaMonomial& y) {
        const double ex = exponent(x);
        const double ey = exponent(y);
        if (ex != ey) {
            return ex < ey;
        }
        return std::tie(x.m, x.n) < std::tie(y.m, y.n);
    });
}

ThetaPolynomial ThetaPolynomial::constant(double theta, double value)
{
    return ThetaPolynomial(theta, {{value, 0, 0}});
}

double ThetaPolynomial::coefficient(unsigned m, unsigned n) const
{
    auto it = std::find_if(m_terms.begin(), m_terms.end(), [&](const ThetaMonomial& term) {
        return term.m == m && term.n == n;
    });
    return it == m_terms.end() ? 0.0 : it->coeff;
}

unsigned ThetaPolynomial::max_multiplicity() const
{
    unsigned n = 0;
    for (const auto& term : m_terms) {
        n = std::max(n, term.n);
    }
    return n;
}

double ThetaPolynomial::operator()(double t) const
{
    double sum = 0.0;
    for (const auto& term : m_terms) {
        if (term.m == 0 && term.n == 0) {
            sum += term.coeff;
        }
        else if (t > 0.0) {
            sum += term.coeff * std::pow(t, exponent(term));
        }
    }
    return sum;
}

std::string ThetaPolynomial::to_string(int precision) const
{
    if (m_terms.empty()) {
        return "0";
    }
    std::string out;
    char buf[64];
    for (std::size_t k = 0; k < m_terms.size(); ++k) {
        const auto& term = m_terms[k];
        double c = term.coeff;
        if (k > 0) {
            out += c < 0.0 ? " - " : " + ";
            c = std::abs(c);
        }
        std::snprintf(buf, sizeof(buf), "%.*g", precision, c);
        out += buf;
        if (term.m != 0 || term.n != 0) {
            std::snprintf(buf, sizeof(buf), "*t^(%.*g)", precision, exponent(term));
            out += buf;
        }
    }
    return out;
}

ThetaPolynomial operator+(const ThetaPolynomial& a, const ThetaPolynomial& b)
{
    check_same_order(a, b);
    std::vector<ThetaMonomial> terms(a.terms().begin(), a.terms().end());
    terms.insert(terms.end(), b.terms().begin(), b.terms().end());
    return ThetaPolynomial(a.theta(), std::move(terms));
}

ThetaPolynomial operator-(const ThetaPolynomial& a, const ThetaPolynomial& b)
{
    return a + (-1.0) * b;
}

ThetaPolynomial operator*(const ThetaPolynomial& a, const ThetaPolynomial& b)
{
    check_same_order(a, b);
    std::map<Key, double> acc;
    for (const auto& x : a.terms()) {
        for (const auto& y : b.terms()) {
            acc[{x.m + y.m, x.n + y.n}] += x.coeff * y.coeff;
        }
    }
    return ThetaPolynomial(a.theta(), collect(acc));
}

ThetaPolynomial operator*(double c, const ThetaPolynomial& a)
{
    std::vector<ThetaMonomial> terms(a.terms().begin(), a.terms().end());
    for (auto& term : terms) {
        term.coeff *= c;
    }
    return ThetaPolynomial(a.theta(), std::move(terms));
}

ThetaPolynomial operator*(const ThetaPolynomial& a, double c)
{
    return c * a;
}

ThetaPolynomial fractional_integral(const ThetaPolynomial& g)
{
    const double theta = g.theta();
    std::vector<ThetaMonomial> terms;
    terms.reserve(g.terms().size());
    for (const auto& term : g.terms()) {
        terms.push_back({term.coeff * gamma_ratio(g.exponent(term), theta), term.m, term.n + 1});
    }
    return ThetaPolynomial(theta, std::move(terms));
}

ThetaPolynomial abc_inverse(const ThetaPolynomial& g, double theta, double b_norm)
{
    if (!(theta > 0.0 && theta <= 1.0)) {
        throw DomainError("theta must lie in (0, 1]");
    }
    if (!(b_norm > 0.0)) {
        throw DomainError("normalization ABC(theta) must be positive");
    }
    if (g.theta() != theta) {
        throw MismatchedOrderError("polynomial order differs from the operator order");
    }
    // at theta = 1 the local part has coefficient 0 and is pruned
    return ((1.0 - theta) / b_norm) * g + (theta / b_norm) * fractional_integral(g);
}

} // namespace fracepi
