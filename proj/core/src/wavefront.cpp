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

#include "nfsteer/wavefront.hpp"

#include "nfsteer/errors.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

namespace nfsteer
{

namespace
{

double fd_step(double x, double z, double relative)
{
    return relative * std::max(1.0, std::hypot(x, z));
}

} // namespace

Wavefront Wavefront::plane()
{
    Wavefront w;
    w.kind_ = Kind::Plane;
    return w;
}

Wavefront Wavefront::cone(double h_over_r)
{
    if (!(h_over_r > 0.0) || !std::isfinite(h_over_r))
        throw InvalidArgument("cone h/r must be a positive finite number");
    Wavefront w;
    w.kind_ = Kind::Cone;
    w.h_over_r_ = h_over_r;
    return w;
}

Wavefront Wavefront::custom(SurfaceFn surface, GradientFn gradient, HessianFn hessian)
{
    if (!surface)
        throw InvalidArgument("custom wavefront requires a surface function");
    Wavefront w;
    w.kind_ = Kind::Custom;
    w.surface_ = std::move(surface);
    w.gradient_ = std::move(gradient);
    w.hessian_ = std::move(hessian);
    return w;
}

double Wavefront::eval(double x, double z) const
{
    switch (kind_)
    {
    case Kind::Plane:
        return 0.0;
    case Kind::Cone:
        return h_over_r_ * std::sqrt(x * x + z * z);
    case Kind::Custom:
        return surface_(x, z);
    }
    return 0.0;
}

SurfaceGradient Wavefront::gradient(double x, double z) const
{
    switch (kind_)
    {
    case Kind::Plane:
        return {};
    case Kind::Cone:
    {
        const double rho = std::sqrt(x * x + z * z);
        if (rho == 0.0)
            throw ApexSingularity();
        return {h_over_r_ * x / rho, h_over_r_ * z / rho};
    }
    case Kind::Custom:
    {
        if (gradient_)
            return gradient_(x, z);
        const double h = fd_step(x, z, 1e-6);
        return {(surface_(x + h, z) - surface_(x - h, z)) / (2.0 * h),
                (surface_(x, z + h) - surface_(x, z - h)) / (2.0 * h)};
    }
    }
    return {};
}

SurfaceHessian Wavefront::hessian(double x, double z) const
{
    switch (kind_)
    {
    case Kind::Plane:
        return {};
    case Kind::Cone:
    {
        const double rho2 = x * x + z * z;
        if (rho2 == 0.0)
            throw ApexSingularity();
        const double scale = h_over_r_ / (rho2 * std::sqrt(rho2));
        return {scale * z * z, -scale * x * z, scale * x * x};
    }
    case Kind::Custom:
    {
        if (hessian_)
            return hessian_(x, z);
        // Central differences of the (possibly numerical) gradient.
        const double h = fd_step(x, z, 1e-4);
        const SurfaceGradient gxp = gradient(x + h, z), gxm = gradient(x - h, z);
        const SurfaceGradient gzp = gradient(x, z + h), gzm = gradient(x, z - h);
        const double xz = 0.5 * ((gxp.dz - gxm.dz) + (gzp.dx - gzm.dx)) / (2.0 * h);
        return {(gxp.dx - gxm.dx) / (2.0 * h), xz, (gzp.dz - gzm.dz) / (2.0 * h)};
    }
    }
    return {};
}

std::string_view to_string(Wavefront::Kind kind)
{
    switch (kind)
    {
    case Wavefront::Kind::Plane:
        return "plane";
    case Wavefront::Kind::Cone:
        return "cone";
    case Wavefront::Kind::Custom:
        return "custom";
    }
    return "unknown";
}

SteeredWavefront::SteeredWavefront(Wavefront base, SteeringAngles angles)
    : base_(std::move(base)), angles_(angles), rotation_(steering_rotation(angles))
{
}

double surface_eval(const Wavefront &w, double x, double z) { return w.eval(x, z); }

SurfaceGradient surface_gradient(const Wavefront &w, double x, double z) { return w.gradient(x, z); }

double tilted_plane_eval(const SteeringAngles &angles, double x, double z)
{
    const double az = angles.azimuth(), el = angles.elevation();
    return x * std::tan(az) + z * std::tan(el) / std::cos(az);
}

} // namespace nfsteer
