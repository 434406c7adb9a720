// SPDX-License-Identifier: Apache-2.0
//
// nfsteer: near-field beam steering for planar antenna arrays
// Copyright (C) 2026 The nfsteer authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace nfsteer
{

// Base of every exception thrown by the library.
class Error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error
{
public:
    using Error::Error;
};

// Numerical failures map to CLI exit code 3.
class NumericalError : public Error
{
public:
    using Error::Error;
};

class ApexSingularity : public NumericalError
{
public:
    ApexSingularity() : NumericalError("gradient requested at the cone apex") {}
};

class NonConvergence : public NumericalError
{
public:
    NonConvergence(int iterations, double residual)
        : NumericalError("Newton iteration did not converge after " + std::to_string(iterations) +
                         " iterations (residual " + std::to_string(residual) + " m)"),
          iterations_(iterations), residual_(residual)
    {
    }
    int iterations() const { return iterations_; }
    double residual() const { return residual_; }

private:
    int iterations_;
    double residual_;
};

class SolverFailure : public NumericalError
{
public:
    using NumericalError::NumericalError;
};

// Observation point that cannot be evaluated; carries the offending grid index.
class PointError : public Error
{
public:
    PointError(const std::string &what, std::size_t index) : Error(what), index_(index) {}
    std::size_t index() const { return index_; }

private:
    std::size_t index_;
};

class CoincidentPoint : public PointError
{
public:
    explicit CoincidentPoint(std::size_t index = 0)
        : PointError("observation point coincides with an antenna element (point " + std::to_string(index) + ")", index)
    {
    }
};

class NearFieldViolation : public PointError
{
public:
    explicit NearFieldViolation(std::size_t index)
        : PointError("observation point closer than 10 wavelengths to an element (point " + std::to_string(index) + ")",
                     index)
    {
    }
};

class EmptyGrid : public Error
{
public:
    EmptyGrid() : Error("field grid is empty") {}
};

class RadiusOutOfRange : public Error
{
public:
    using Error::Error;
};

class LineOutsideGrid : public Error
{
public:
    using Error::Error;
};

class ConfigError : public Error
{
public:
    using Error::Error;
};

class IoError : public Error
{
public:
    using Error::Error;
};

} // namespace nfsteer
