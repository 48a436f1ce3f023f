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
#ifndef FRACEPI_CLI_H
#define FRACEPI_CLI_H

#include <ostream>
#include <string>
#include <vector>

namespace fracepi
{

/// Exit codes of the command-line tool.
enum ExitCode : int
{
    exit_ok           = 0,
    exit_usage_error  = 1,
    exit_numeric_error = 2,
};

/**
 * @brief Entry point of the command-line tool.
 *
 * args[0] is the program name, args[1] a subcommand: r0, sensitivity, series, simulate, check, fit, ml.
 */
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace fracepi

#endif // FRACEPI_CLI_H
