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

#include <array>
#include <cmath>
#include <numbers>

namespace nfsteer
{

inline constexpr double pi = std::numbers::pi;
inline constexpr double two_pi = 2.0 * std::numbers::pi;

constexpr double deg_to_rad(double deg) { return deg * (pi / 180.0); }
constexpr double rad_to_deg(double rad) { return rad * (180.0 / pi); }

// Cartesian 3-vector. Meters for positions, dimensionless for directions.
struct Vec3
{
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    constexpr Vec3 operator+(const Vec3 &o) const { return {x + o.x, y + o.y, z + o.z}; }
    constexpr Vec3 operator-(const Vec3 &o) const { return {x - o.x, y - o.y, z - o.z}; }
    constexpr Vec3 operator-() const { return {-x, -y, -z}; }
    constexpr Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
    constexpr bool operator==(const Vec3 &) const = default;
};

constexpr Vec3 operator*(double s, const Vec3 &v) { return v * s; }
constexpr double dot(const Vec3 &a, const Vec3 &b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
constexpr Vec3 cross(const Vec3 &a, const Vec3 &b)
{
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}
inline double norm(const Vec3 &v) { return std::sqrt(dot(v, v)); }
inline bool is_finite(const Vec3 &v) { return std::isfinite(v.x) && std::isfinite(v.y) && std::isfinite(v.z); }

// Row-major 3x3 matrix.
struct Mat3
{
    std::array<double, 9> m{1.0, 0.0, 0.0, 0.0, 1.0, 0.0, 0.0, 0.0, 1.0};

    static constexpr Mat3 identity() { return Mat3{}; }

    constexpr double operator()(int row, int col) const { return m[static_cast<std::size_t>(row * 3 + col)]; }
    constexpr double &operator()(int row, int col) { return m[static_cast<std::size_t>(row * 3 + col)]; }

    Mat3 transpose() const;
    double determinant() const;
    Mat3 operator*(const Mat3 &o) const;
    Vec3 operator*(const Vec3 &v) const;
    bool operator==(const Mat3 &) const = default;
};

// Steering direction in radians. Both angles must lie strictly inside
// (-pi/2, pi/2); beyond that the rotated wavefront folds over the array plane.
class SteeringAngles
{
public:
    SteeringAngles() = default;
    SteeringAngles(double azimuth, double elevation);

    static SteeringAngles from_degrees(double azimuth_deg, double elevation_deg);
    static bool valid(double azimuth, double elevation);

    double azimuth() const { return azimuth_; }
    double elevation() const { return elevation_; }

    bool operator==(const SteeringAngles &) const = default;

private:
    double azimuth_ = 0.0;
    double elevation_ = 0.0;
};

// Rotation about x by the elevation angle.
Mat3 rot_x(double theta_el);

// Rotation about z by the azimuth angle. Note the sign pattern: row 0 is
// (cos, sin, 0) and row 1 is (-sin, cos, 0).
Mat3 rot_z(double theta_az);

// R = rot_x(elevation) * rot_z(azimuth); maps original coordinates to the
// steered frame whose +y' axis is the steering direction.
Mat3 steering_rotation(const SteeringAngles &angles);

// p' = R p
Vec3 to_primed(const Mat3 &r, const Vec3 &p);

// p = R^T p'
Vec3 from_primed(const Mat3 &r, const Vec3 &p_primed);

// Unit vector of the steered +y' axis expressed in the original frame,
// i.e. R^T (0, 1, 0) = (-cos el sin az, cos el cos az, -sin el).
Vec3 steering_direction(const SteeringAngles &angles);

// Inverse of steering_direction for any direction with y > 0.
// Returns {azimuth, elevation} in radians.
std::array<double, 2> angles_from_direction(const Vec3 &direction);

} // namespace nfsteer
