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
#ifndef FRACEPI_CONFIG_H
#define FRACEPI_CONFIG_H

#include "fracepi/epi_model.h"

#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>

namespace fracepi
{

/**
 * @brief Scenario file contents.
 *
 * Line-oriented "key = value" pairs with "#" comments. Required keys: lambda, gamma, d0, eta, mu,
 * sigma, h, P0, I0, Q0. Optional keys and defaults: theta = 1, b_norm = 1, t_end = 100,
 * steps = 10000, order = 15, source_every_term = false.
 */
struct ScenarioConfig {
    ModelParams params;
    State init;
    double theta           = 1.0;
    double b_norm          = 1.0;
    double t_end           = 100.0;
    std::size_t steps      = 10000;
    std::size_t order      = 15;
    bool source_every_term = false;

    friend bool operator==(const ScenarioConfig&, const ScenarioConfig&) = default;
};

/// @throws ParseError (with line number), UnknownKeyError, MissingKeyError, RangeError.
ScenarioConfig parse_config(std::string_view text);

/// @throws IoError if the file cannot be read, otherwise as parse_config.
ScenarioConfig load_config(const std::filesystem::path& path);

/// Renders every key with 17 significant digits so that parse_config(render_config(c)) == c.
std::string render_config(const ScenarioConfig& config);

} // namespace fracepi

#endif // FRACEPI_CONFIG_H
