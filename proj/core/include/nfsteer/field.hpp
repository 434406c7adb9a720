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
#include "nfsteer/synthesis.hpp"

#include <complex>
#include <cstddef>
#include <string>
#include <vector>

namespace nfsteer
{

struct ComplexVec3
{
    std::complex<double> x;
    std::complex<double> y;
    std::complex<double> z;

    ComplexVec3 &operator+=(const ComplexVec3 &o)
    {
        x += o.x;
        y += o.y;
        z += o.z;
        return *this;
    }
    bool operator==(const ComplexVec3 &) const = default;
};

// Sqrt(|Ex|^2 + |Ey|^2 + |Ez|^2)
double magnitude(const ComplexVec3 &e);

// Observation points. Planar grids are parameterised by (u, v):
//   XY: x = u, y = v, z = offset
//   YZ: y = u, z = v, x = offset
//   XZ: x = u, z = v, y = offset
// Point (iu, iv) has flat index iu * nv + iv. An axis with a single sample sits
// at its lower bound, which turns the grid into a line.
class ObservationGrid
{
public:
    ObservationGrid() = default; // empty custom grid

    enum class Plane
    {
        XY,
        YZ,
        XZ,
        Custom
    };

    static ObservationGrid planar(Plane plane, double offset, double u_min, double u_max, int nu, double v_min,
                                  double v_max, int nv);
    static ObservationGrid custom(std::vector<Vec3> points);

    Plane plane() const { return plane_; }
    bool is_planar() const { return plane_ != Plane::Custom; }
    double offset() const { return offset_; }
    double u_min() const { return u_min_; }
    double u_max() const { return u_max_; }
    double v_min() const { return v_min_; }
    double v_max() const { return v_max_; }
    int nu() const { return nu_; }
    int nv() const { return nv_; }
    double u_step() const { return nu_ > 1 ? (u_max_ - u_min_) / (nu_ - 1) : 0.0; }
    double v_step() const { return nv_ > 1 ? (v_max_ - v_min_) / (nv_ - 1) : 0.0; }

    std::size_t size() const { return points_.size(); }
    const std::vector<Vec3> &points() const { return points_; }
    const Vec3 &point(std::size_t n) const { return points_[n]; }

    // Maps a world point to (u, v, distance from the grid plane).
    Vec3 to_plane_coords(const Vec3 &p) const;
    Vec3 from_plane_coords(double u, double v) const;

private:
    Plane plane_ = Plane::Custom;
    double offset_ = 0.0;
    double u_min_ = 0.0, u_max_ = 0.0, v_min_ = 0.0, v_max_ = 0.0;
    int nu_ = 0, nv_ = 0;
    std::vector<Vec3> points_;
};

std::string to_string(ObservationGrid::Plane plane);
ObservationGrid::Plane plane_from_string(const std::string &name);

struct FieldMetadata
{
    double frequency_hz = 0.0;
    SteeringAngles angles;
    std::string beam_kind;
};

struct FieldGrid
{
    ObservationGrid grid;
    std::vector<ComplexVec3> field;
    FieldMetadata metadata;
};

struct LocalAngles
{
    double azimuth = 0.0; // Phi_n in (-pi, pi]
    double polar = 0.0;   // theta_n in [0, pi]
};

// Angles of p as seen from an element whose local axes are parallel to the
// global ones. Azimuth is 0 on the element's z-axis. Throws CoincidentPoint.
LocalAngles local_angles(const Vec3 &element_pos, const Vec3 &p);

// Dipole theta-hat polarization (cos Phi cos theta, sin Phi cos theta, -sin theta).
Vec3 polarization_unit_vector(double phi, double theta);

// Single element contribution I e^{-jk r} / r * theta_hat with unit
// proportionality constant. Throws CoincidentPoint.
ComplexVec3 element_field(const Vec3 &element_pos, std::complex<double> current, const Vec3 &p, double k);

// Minimum allowed distance between an observation point and any element.
double min_observation_distance(double wavelength);

// Superposition of all element fields at every grid point. The per-point sum
// runs in element-index order, so results are bit-identical across runs and
// thread counts. Throws CoincidentPoint or NearFieldViolation with the lowest
// offending point index.
FieldGrid total_field(const ArrayGeometry &array, const Excitation &exc, const ObservationGrid &grid,
                      FieldMetadata metadata = {});

} // namespace nfsteer
