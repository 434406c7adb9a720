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

#include "nfsteer/geometry.hpp"

#include "nfsteer/errors.hpp"

#include <algorithm>
#include <string>

namespace nfsteer
{

Mat3 Mat3::transpose() const
{
    Mat3 t;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            t(i, j) = (*this)(j, i);
    return t;
}

double Mat3::determinant() const
{
    const Mat3 &a = *this;
    return a(0, 0) * (a(1, 1) * a(2, 2) - a(1, 2) * a(2, 1)) - a(0, 1) * (a(1, 0) * a(2, 2) - a(1, 2) * a(2, 0)) +
           a(0, 2) * (a(1, 0) * a(2, 1) - a(1, 1) * a(2, 0));
}

Mat3 Mat3::operator*(const Mat3 &o) const
{
    Mat3 r;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            r(i, j) = (*this)(i, 0) * o(0, j) + (*this)(i, 1) * o(1, j) + (*this)(i, 2) * o(2, j);
    return r;
}

Vec3 Mat3::operator*(const Vec3 &v) const
{
    return {m[0] * v.x + m[1] * v.y + m[2] * v.z, m[3] * v.x + m[4] * v.y + m[5] * v.z,
            m[6] * v.x + m[7] * v.y + m[8] * v.z};
}

bool SteeringAngles::valid(double azimuth, double elevation)
{
    const double limit = pi / 2.0;
    return std::isfinite(azimuth) && std::isfinite(elevation) && std::abs(azimuth) < limit &&
           std::abs(elevation) < limit;
}

SteeringAngles::SteeringAngles(double azimuth, double elevation) : azimuth_(azimuth), elevation_(elevation)
{
    if (!valid(azimuth, elevation))
        throw InvalidArgument("steering angles must lie strictly within (-90, 90) degrees, got azimuth " +
                              std::to_string(rad_to_deg(azimuth)) + ", elevation " +
                              std::to_string(rad_to_deg(elevation)));
}

SteeringAngles SteeringAngles::from_degrees(double azimuth_deg, double elevation_deg)
{
    return SteeringAngles(deg_to_rad(azimuth_deg), deg_to_rad(elevation_deg));
}

Mat3 rot_x(double theta_el)
{
    const double c = std::cos(theta_el), s = std::sin(theta_el);
    return Mat3{{1.0, 0.0, 0.0, 0.0, c, -s, 0.0, s, c}};
}

Mat3 rot_z(double theta_az)
{
    const double c = std::cos(theta_az), s = std::sin(theta_az);
    return Mat3{{c, s, 0.0, -s, c, 0.0, 0.0, 0.0, 1.0}};
}

Mat3 steering_rotation(const SteeringAngles &angles)
{
    return rot_x(angles.elevation()) * rot_z(angles.azimuth());
}

Vec3 to_primed(const Mat3 &r, const Vec3 &p) { return r * p; }

Vec3 from_primed(const Mat3 &r, const Vec3 &p_primed)
{
    return {r(0, 0) * p_primed.x + r(1, 0) * p_primed.y + r(2, 0) * p_primed.z,
            r(0, 1) * p_primed.x + r(1, 1) * p_primed.y + r(2, 1) * p_primed.z,
            r(0, 2) * p_primed.x + r(1, 2) * p_primed.y + r(2, 2) * p_primed.z};
}

Vec3 steering_direction(const SteeringAngles &angles)
{
    const double ca = std::cos(angles.azimuth()), sa = std::sin(angles.azimuth());
    const double ce = std::cos(angles.elevation()), se = std::sin(angles.elevation());
    return {-ce * sa, ce * ca, -se};
}

std::array<double, 2> angles_from_direction(const Vec3 &direction)
{
    const double n = norm(direction);
    if (!(n > 0.0))
        throw InvalidArgument("direction must be non-zero");
    const Vec3 u = direction * (1.0 / n);
    const double elevation = std::asin(std::clamp(-u.z, -1.0, 1.0));
    const double azimuth = std::atan2(-u.x, u.y);
    return {azimuth, elevation};
}

} // namespace nfsteer
