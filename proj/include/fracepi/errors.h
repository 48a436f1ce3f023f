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
#ifndef FRACEPI_ERRORS_H
#define FRACEPI_ERRORS_H

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fracepi
{

/// Base of every error thrown by the library.
class Error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

/// Argument outside the mathematical domain of an operation.
class DomainError : public Error
{
public:
    using Error::Error;
};

class OverflowError : public Error
{
public:
    using Error::Error;
};

/// A truncated series did not reach its tolerance (or lost all significance).
class ConvergenceError : public Error
{
public:
    using Error::Error;
};

/// Two theta-polynomials with different fractional orders were combined.
class MismatchedOrderError : public Error
{
public:
    using Error::Error;
};

/// The reproduction number (or one of its derived quantities) is undefined for these parameters.
class DegenerateModelError : public Error
{
public:
    using Error::Error;
};

class IndexError : public Error
{
public:
    using Error::Error;
};

/// Value out of its admissible range (negative rate, theta outside (0,1], ...).
class RangeError : public Error
{
public:
    using Error::Error;
};

/// Failure inside the Volterra solver.
class SolverError : public Error
{
public:
    using Error::Error;
};

class NonConvergenceError : public SolverError
{
public:
    NonConvergenceError(const std::string& what, std::size_t step)
        : SolverError(what)
        , m_step(step)
    {
    }

    /// Grid index at which the implicit step failed.
    std::size_t step() const
    {
        return m_step;
    }

private:
    std::size_t m_step;
};

class DegenerateGridError : public SolverError
{
public:
    using SolverError::SolverError;
};

/// A file could not be read or written.
class IoError : public Error
{
public:
    using Error::Error;
};

/// Malformed configuration or CSV input. Carries the 1-based line number (0 if unknown).
class ParseError : public Error
{
public:
    ParseError(const std::string& what, std::size_t line)
        : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what)
        , m_line(line)
    {
    }

    std::size_t line() const
    {
        return m_line;
    }

private:
    std::size_t m_line;
};

class UnknownKeyError : public ParseError
{
public:
    using ParseError::ParseError;
};

/// Required configuration keys are absent.
class MissingKeyError : public ParseError
{
public:
    explicit MissingKeyError(const std::string& what)
        : ParseError(what, 0)
    {
    }
};

} // namespace fracepi

#endif // FRACEPI_ERRORS_H
