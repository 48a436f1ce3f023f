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
#ifndef FRACEPI_CSV_IO_H
#define FRACEPI_CSV_IO_H

#include "fracepi/abc_ivp.h"
#include "fracepi/calibrate.h"
#include "fracepi/ladm.h"

#include <filesystem>
#include <ostream>
#include <string>
#include <string_view>

namespace fracepi
{

/// printf-style "%.<digits>g" in the C locale.
std::string format_number(double value, int digits);

/// Reads whole file contents. @throws IoError.
std::string read_file(const std::filesystem::path& path);

/// Parses a "t,cases" CSV (single header row). @throws ParseError, RangeError.
CaseSeries parse_case_series(std::string_view text, std::string label = {});

/// "t,P,I,Q" rows for every grid node.
void write_trajectory_csv(std::ostream& out, const Trajectory& traj);

/// "t,iterations,negative" rows for every grid node.
void write_diagnostics_csv(std::ostream& out, const Trajectory& traj);

/// "t,P,I,Q" rows of the summed series at t_k = k t_max / samples, k = 0..samples.
void write_series_csv(std::ostream& out, const SeriesSolution& s, double t_max, std::size_t samples);

/// "t,observed,predicted,residual" rows.
void write_residuals_csv(std::ostream& out, const std::vector<Residual>& rows);

} // namespace fracepi

#endif // FRACEPI_CSV_IO_H
