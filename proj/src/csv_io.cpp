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
#include "fracepi/csv_io.h"
#include "fracepi/errors.h"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <system_error>

namespace fracepi
{

namespace
{

constexpr int csv_digits = 12;

std::string_view trim(std::string_view s)
{
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) {
        return {};
    }
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

double parse_field(std::string_view field, std::size_t line)
{
    field          = trim(field);
    double v       = 0.0;
    const auto res = std::from_chars(field.data(), field.data() + field.size(), v);
    if (field.empty() || res.ec != std::errc{} || res.ptr != field.data() + field.size()) {
        throw ParseError("'" + std::string(field) + "' is not a number", line);
    }
    return v;
}

void write_state_row(std::ostream& out, double t, const State& s)
{
    out << format_number(t, csv_digits) << ',' << format_number(s.p, csv_digits) << ','
        << format_number(s.i, csv_digits) << ',' << format_number(s.q, csv_digits) << '\n';
}

} // namespace

std::string format_number(double value, int digits)
{
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*g", digits, value);
    return buf;
}

std::string read_file(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot open '" + path.string() + "'");
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

CaseSeries parse_case_series(std::string_view text, std::string label)
{
    std::vector<Observation> obs;
    std::size_t line_no = 0;
    bool header_seen    = false;
    while (!text.empty()) {
        ++line_no;
        const auto eol = text.find('\n');
        auto line      = trim(text.substr(0, eol));
        text           = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
        if (line.empty()) {
            continue;
        }
        if (!header_seen) {
            if (line != "t,cases") {
                throw ParseError("expected header 't,cases'", line_no);
            }
            header_seen = true;
            continue;
        }
        const auto comma = line.find(',');
        if (comma == std::string_view::npos || line.find(',', comma + 1) != std::string_view::npos) {
            throw ParseError("expected two comma-separated fields", line_no);
        }
        obs.push_back({parse_field(line.substr(0, comma), line_no), parse_field(line.substr(comma + 1), line_no)});
    }
    if (!header_seen) {
        throw ParseError("empty case file", 0);
    }
    return CaseSeries(std::move(obs), std::move(label));
}

void write_trajectory_csv(std::ostream& out, const Trajectory& traj)
{
    out << "t,P,I,Q\n";
    for (std::size_t j = 0; j <= traj.grid.steps(); ++j) {
        write_state_row(out, traj.grid.time(j), traj.states[j]);
    }
}

void write_diagnostics_csv(std::ostream& out, const Trajectory& traj)
{
    out << "t,iterations,negative\n";
    for (std::size_t j = 0; j <= traj.grid.steps(); ++j) {
        out << format_number(traj.grid.time(j), csv_digits) << ',' << traj.diagnostics[j].iterations << ','
            << (traj.diagnostics[j].negative_state ? 1 : 0) << '\n';
    }
}

void write_series_csv(std::ostream& out, const SeriesSolution& s, double t_max, std::size_t samples)
{
    out << "t,P,I,Q\n";
    for (std::size_t k = 0; k <= samples; ++k) {
        const double t = k == samples ? t_max : t_max * static_cast<double>(k) / static_cast<double>(samples);
        write_state_row(out, t, series_eval(s, t));
    }
}

void write_residuals_csv(std::ostream& out, const std::vector<Residual>& rows)
{
    out << "t,observed,predicted,residual\n";
    for (const auto& r : rows) {
        out << format_number(r.t, csv_digits) << ',' << format_number(r.observed, csv_digits) << ','
            << format_number(r.predicted, csv_digits) << ',' << format_number(r.residual, csv_digits) << '\n';
    }
}

} // namespace fracepi
