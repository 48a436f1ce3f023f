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
#ifndef FRACEPI_FRACTIONAL_ORDER_H
#define FRACEPI_FRACTIONAL_ORDER_H

#include "fracepi/errors.h"

#include <cmath>
#include <string>

namespace fracepi
{

/**
 * @brief Order theta of the ABC derivative, restricted to (0, 1].
 *
 * theta = 1 is the classical first-order derivative.
 */
class FractionalOrder
{
public:
    explicit FractionalOrder(double theta)
        : m_theta(theta)
    {
        if (!(theta > 0.0 && theta <= 1.0)) {
            throw RangeError("fractional order must lie in (0, 1], got " + std::to_string(theta));
        }
    }

    double value() const
    {
        return m_theta;
    }

    bool is_classical() const
    {
        return m_theta == 1.0;
    }

    friend bool operator==(FractionalOrder, FractionalOrder) = default;

private:
    double m_theta;
};

} // namespace fracepi

#endif // FRACEPI_FRACTIONAL_ORDER_H
