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

#include "nfsteer/geometry.hpp"

#include <functional>
#include <string_view>

namespace nfsteer
{

struct SurfaceGradient
{
    double dx = 0.0; // df/dx'
    double dz = 0.0; // df/dz'
};

struct SurfaceHessian
{
    double xx = 0.0;
    double xz = 0.0;
    double zz = 0.0;
};

// Canonical (unsteered) phase wavefront y' = f(x', z').
//
// Plane:  f = 0, the flat wavefront of a Gaussian beam.
// Cone:   f = (h/r) sqrt(x'^2 + z'^2), the axicon wavefront of a Bessel beam.
// Custom: user-supplied f with optional analytic derivatives; missing
//         derivatives fall back to central finite differences.
//
// Custom evaluators must be pure; they are called concurrently.
class Wavefront
{
public:
    enum class Kind
    {
        Plane,
        Cone,
        Custom
    };

    using SurfaceFn = std::function<double(double x, double z)>;
    using GradientFn = std::function<SurfaceGradient(double x, double z)>;
    using HessianFn = std::function<SurfaceHessian(double x, double z)>;

    static inline constexpr double default_h_over_r = 0.2;

    static Wavefront plane();
    static Wavefront cone(double h_over_r = default_h_over_r);
    static Wavefront custom(SurfaceFn surface, GradientFn gradient = {}, HessianFn hessian = {});

    Kind kind() const { return kind_; }
    double h_over_r() const { return h_over_r_; }
    bool has_analytic_gradient() const { return kind_ != Kind::Custom || static_cast<bool>(gradient_); }

    double eval(double x, double z) const;
    SurfaceGradient gradient(double x, double z) const;
    SurfaceHessian hessian(double x, double z) const;

private:
    Wavefront() = default;

    Kind kind_ = Kind::Plane;
    double h_over_r_ = 0.0;
    SurfaceFn surface_;
    GradientFn gradient_;
    HessianFn hessian_;
};

std::string_view to_string(Wavefront::Kind kind);

// Canonical surface paired with a steering direction. The rotation is cached
// and always equals steering_rotation(angles).
class SteeredWavefront
{
public:
    explicit SteeredWavefront(Wavefront base, SteeringAngles angles = {});

    const Wavefront &base() const { return base_; }
    const SteeringAngles &angles() const { return angles_; }
    const Mat3 &rotation() const { return rotation_; }

private:
    Wavefront base_;
    SteeringAngles angles_;
    Mat3 rotation_;
};

double surface_eval(const Wavefront &w, double x, double z);

// Throws ApexSingularity for a cone at (0, 0).
SurfaceGradient surface_gradient(const Wavefront &w, double x, double z);

// Tilted plane of a steered flat wavefront written in the original frame:
// y0 = x tan(az) + z tan(el) / cos(az).
double tilted_plane_eval(const SteeringAngles &angles, double x, double z);

} // namespace nfsteer
