// Copyright 2026 The qtheta Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qtheta {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A coefficient was requested (or a term constructed) at or beyond the
/// absolute precision of a series.
class PrecisionError : public Error {
public:
    using Error::Error;
};

/// Inversion or division by a series that is zero to its precision.
class DivisionByZeroError : public Error {
public:
    using Error::Error;
};

/// Argument outside the domain of a kernel (e.g. jtheta of zero).
class DomainError : public Error {
public:
    using Error::Error;
};

/// An infinite sum whose term orders cannot be certified to grow.
class DivergenceError : public Error {
public:
    using Error::Error;
};

/// A parameter value makes a required denominator vanish.
class DegenerateParameterError : public Error {
public:
    using Error::Error;
};

/// Gaussian elimination found no usable pivot in a column.
class SingularSystemError : public Error {
public:
    SingularSystemError(const std::string& what, std::size_t column)
        : Error(what), column_(column) {}

    std::size_t column() const noexcept { return column_; }

private:
    std::size_t column_;
};

/// Parameter sampling gave up before finding an admissible binding.
class SamplingError : public Error {
public:
    using Error::Error;
};

/// Problems with the identity corpus (duplicates, undeclared parameters).
class RegistryError : public Error {
public:
    using Error::Error;
};

/// Error raised by the expression language. position is a byte offset into
/// the parsed text; what() already includes it.
class DslError : public Error {
public:
    DslError(const std::string& what, std::size_t position)
        : Error("at " + std::to_string(position) + ": " + what), position_(position), message_(what) {}

    std::size_t position() const noexcept { return position_; }
    const std::string& message() const noexcept { return message_; }

private:
    std::size_t position_;
    std::string message_;
};

class LexError : public DslError {
public:
    using DslError::DslError;
};

class SyntaxError : public DslError {
public:
    using DslError::DslError;
};

class SortError : public DslError {
public:
    using DslError::DslError;
};

class UnknownNameError : public DslError {
public:
    using DslError::DslError;
};

class EvalError : public DslError {
public:
    using DslError::DslError;
};

} // namespace qtheta
