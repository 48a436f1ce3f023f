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
#include "fracepi/config.h"
#include "fracepi/csv_io.h"
#include "fracepi/errors.h"

#include <array>
#include <charconv>
#include <cmath>
#include <map>
#include <string>
#include <system_error>

namespace fracepi
{

namespace
{

constexpr std::array<std::string_view, 10> required_keys = {"lambda", "gamma", "d0", "eta", "mu",
                                                            "sigma",  "h",     "P0", "I0",  "Q0"};
constexpr std::array<std::string_view, 6> optional_keys  = {"theta", "b_norm", "t_end",
                                                           "steps", "order",  "source_every_term"};

std::string_view trim(std::string_view s)
{
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) {
        return {};
    }
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

bool is_known(std::string_view key)
{
    for (auto k : required_keys) {
        if (k == key) {
            return true;
        }
    }
    for (auto k : optional_keys) {
        if (k == key) {
            return true;
        }
    }
    return false;
}

double to_double(std::string_view value, std::size_t line)
{
    double v       = 0.0;
    const auto res = std::from_chars(value.data(), value.data() + value.size(), v);
    if (res.ec != std::errc{} || res.ptr != value.data() + value.size() || !std::isfinite(v)) {
        throw ParseError("'" + std::string(value) + "' is not a finite number", line);
    }
    return v;
}

std::size_t to_count(std::string_view value, std::size_t line)
{
    std::size_t v  = 0;
    const auto res = std::from_chars(value.data(), value.data() + value.size(), v);
    if (res.ec != std::errc{} || res.ptr != value.data() + value.size()) {
        throw ParseError("'" + std::string(value) + "' is not a non-negative integer", line);
    }
    return v;
}

bool to_flag(std::string_view value, std::size_t line)
{
    if (value == "true" || value == "1") {
        return true;
    }
    if (value == "false" || value == "0") {
        return false;
    }
    throw ParseError("'" + std::string(value) + "' is not a boolean (true/false)", line);
}

void range_error(std::string_view key, std::size_t line, std::string_view requirement)
{
    throw RangeError("line " + std::to_string(line) + ": " + std::string(key) + " " + std::string(requirement));
}

} // namespace

ScenarioConfig parse_config(std::string_view text)
{
    struct Entry {
        std::string_view value;
        std::size_t line;
    };
    std::map<std::string_view, Entry> entries;

    std::size_t line_no = 0;
    while (!text.empty()) {
        ++line_no;
        const auto eol = text.find('\n');
        std::string_view line = text.substr(0, eol);
        text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);

        if (const auto hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        line = trim(line);
        if (line.empty()) {
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string_view::npos) {
            throw ParseError("expected 'key = value'", line_no);
        }
        const auto key   = trim(line.substr(0, eq));
        const auto value = trim(line.substr(eq + 1));
        if (key.empty() || value.empty()) {
            throw ParseError("expected 'key = value'", line_no);
        }
        if (!is_known(key)) {
            throw UnknownKeyError("unknown key '" + std::string(key) + "'", line_no);
        }
        if (!entries.emplace(key, Entry{value, line_no}).second) {
            throw ParseError("duplicate key '" + std::string(key) + "'", line_no);
        }
    }

    std::string missing;
    for (auto key : required_keys) {
        if (!entries.count(key)) {
            missing += missing.empty() ? "" : ", ";
            missing += key;
        }
    }
    if (!missing.empty()) {
        throw MissingKeyError("missing required keys: " + missing);
    }

    ScenarioConfig config;
    for (const auto& field : param_fields) {
        const auto& e = entries.at(field.name);
        const double v = to_double(e.value, e.line);
        if (v < 0.0) {
            range_error(field.name, e.line, "must be non-negative");
        }
        config.params.*field.member = v;
    }
    config.init.p = to_double(entries.at("P0").value, entries.at("P0").line);
    config.init.i = to_double(entries.at("I0").value, entries.at("I0").line);
    config.init.q = to_double(entries.at("Q0").value, entries.at("Q0").line);

    if (auto it = entries.find("theta"); it != entries.end()) {
        config.theta = to_double(it->second.value, it->second.line);
        if (!(config.theta > 0.0 && config.theta <= 1.0)) {
            range_error("theta", it->second.line, "must lie in (0, 1]");
        }
    }
    if (auto it = entries.find("b_norm"); it != entries.end()) {
        config.b_norm = to_double(it->second.value, it->second.line);
        if (!(config.b_norm > 0.0)) {
            range_error("b_norm", it->second.line, "must be positive");
        }
    }
    if (auto it = entries.find("t_end"); it != entries.end()) {
        config.t_end = to_double(it->second.value, it->second.line);
        if (!(config.t_end > 0.0)) {
            range_error("t_end", it->second.line, "must be positive");
        }
    }
    if (auto it = entries.find("steps"); it != entries.end()) {
        config.steps = to_count(it->second.value, it->second.line);
        if (config.steps == 0) {
            range_error("steps", it->second.line, "must be at least 1");
        }
    }
    if (auto it = entries.find("order"); it != entries.end()) {
        config.order = to_count(it->second.value, it->second.line);
    }
    if (auto it = entries.find("source_every_term"); it != entries.end()) {
        config.source_every_term = to_flag(it->second.value, it->second.line);
    }
    return config;
}

ScenarioConfig load_config(const std::filesystem::path& path)
{
    return parse_config(read_file(path));
}

std::string render_config(const ScenarioConfig& c)
{
    std::string out;
    auto line = [&out](std::string_view key, const std::string& value) {
        out += key;
        out += " = ";
        out += value;
        out += '\n';
    };
    for (const auto& field : param_fields) {
        line(field.name, format_number(c.params.*field.member, 17));
    }
    line("P0", format_number(c.init.p, 17));
    line("I0", format_number(c.init.i, 17));
    line("Q0", format_number(c.init.q, 17));
    line("theta", format_number(c.theta, 17));
    line("b_norm", format_number(c.b_norm, 17));
    line("t_end", format_number(c.t_end, 17));
    line("steps", std::to_string(c.steps));
    line("order", std::to_string(c.order));
    line("source_every_term", c.source_every_term ? "true" : "false");
    return out;
}

} // namespace fracepi
