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

#include "nfsteer/field.hpp"
#include "nfsteer/geometry.hpp"
#include "nfsteer/synthesis.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace nfsteer
{

// Power split between the Cartesian field components over a grid.
struct PolarizationReport
{
    double power_x = 0.0; // sum |Ex|^2, V^2/m^2
    double power_y = 0.0;
    double power_z = 0.0;
    double fraction_x = 0.0; // fractions sum to 1 unless the field is identically zero
    double fraction_y = 0.0;
    double fraction_z = 0.0;
    // Peak over points of max(|Ex|, |Ey|) / |Ez| and the per-component peaks.
    double peak_cross_pol = 0.0;
    double peak_x_over_z = 0.0;
    double peak_y_over_z = 0.0;
    std::size_t points = 0;
    std::size_t ratio_points = 0; // points that entered the peak ratios
};

struct BeamMetrics
{
    Vec3 peak_point;
    double peak_magnitude = 0.0;
    double estimated_azimuth = 0.0;   // radians
    double estimated_elevation = 0.0; // radians
    std::optional<double> first_null_radius;
    std::optional<double> propagation_range_estimate;
};

struct ProfileSample
{
    double offset = 0.0;    // meters along the cut, 0 at the axis point
    double magnitude = 0.0; // |E|, V/m
};

struct TransverseProfile
{
    std::vector<ProfileSample> samples; // ascending offsets
    std::optional<double> first_null_radius;
    double main_lobe_peak = 0.0;
};

// Points with |Ez| below 1e-15 V/m, or below ez_floor_relative * max |Ez|,
// are left out of the peak ratios. Throws EmptyGrid.
PolarizationReport polarization_report(const FieldGrid &fg, double ez_floor_relative = 0.0);

// Scans |E| over directions at the given radius from the array centre
// (1 degree grid, then 0.1 degree around the peak) and returns the direction of
// the maximum as steering angles. Throws RadiusOutOfRange when the sphere would
// come within 10 wavelengths of an element.
BeamMetrics estimate_direction(const ArrayGeometry &array, const Excitation &exc, double radius);

// |E| sampled along the line axis_point + s * direction, which must lie in the
// grid (plane grids are interpolated bilinearly, custom grids use the points on
// the line). The first null is the first strict local minimum at s >= 0 whose
// prominence exceeds 5% of the main-lobe peak. Throws LineOutsideGrid.
TransverseProfile transverse_profile(const FieldGrid &fg, const Vec3 &axis_point, const Vec3 &direction);

// Geometric Bessel-zone length: half the aperture diagonal divided by h/r.
double propagation_range(const ArrayGeometry &array, double h_over_r);

// First null of the ideal axicon beam, 2.40483 / (k sin(atan(h/r))).
double axicon_first_null_radius(double wavelength, double h_over_r);

} // namespace nfsteer
