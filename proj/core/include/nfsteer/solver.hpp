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
#include "nfsteer/wavefront.hpp"

namespace nfsteer
{

struct SolverConfig
{
    int max_iterations = 50;
    double residual_tol = 1e-12; // meters
    int oracle_grid = 2001;      // samples per axis
    // Half-width of the oracle search box in meters. The default is four times
    // the 0.15 m aperture of a 100x100 half-wavelength array at 100 GHz;
    // synthesize() rescales it to the actual array.
    double oracle_halfwidth = 0.6;
    // Newton starts closer than this to the cone axis are pushed radially
    // outward by apex_perturbation (1e-3 aperture and one element spacing).
    double apex_guard = 1.5e-4;
    double apex_perturbation = 1.5e-3;

    void validate() const;
};

// Foot of the perpendicular from an element to the steered wavefront, all in
// the steered (primed) frame.
struct FootSolution
{
    Vec3 element_primed;
    Vec3 foot;
    double t = 0.0;               // line parameter, foot = element - t n
    double signed_distance = 0.0; // t |n|; positive when the element lies behind the wavefront
    double residual = 0.0;        // norm of the three-equation normal-line system at the foot
    int iterations = 0;
    bool converged = false;
    bool at_apex = false;         // nearest point is the cone apex (no normal exists)
};

// Newton solve of the normal-line system against the canonical surface in the
// primed frame. For cones a second start reflected through the axis and the
// apex itself are also considered, and the nearest candidate is returned.
//
// Throws NonConvergence or ApexSingularity when no Newton start converges.
FootSolution solve_foot(const SteeredWavefront &w, const Vec3 &element_pos, const SolverConfig &cfg = {});

// Brute-force minimum of the squared distance over a dense primed-frame grid
// centred on the element, refined by one golden-section pass per axis.
// Unsigned; accurate to within oracle_cell_diagonal(cfg) for Lipschitz surfaces.
double oracle_min_distance(const SteeredWavefront &w, const Vec3 &element_pos, const SolverConfig &cfg = {});

double oracle_cell_diagonal(const SolverConfig &cfg);

// Signed distance from an element in the xz-plane to the tilted plane wavefront:
// x cos(el) sin(az) + z sin(el).
double plane_distance_closed_form(const SteeringAngles &angles, const Vec3 &element_pos);

// Distance from a primed-frame point to the cone y' = s rho', reduced to the
// (rho, y) half-plane; the apex is used when the perpendicular foot would fall
// on the far side of the axis. Same sign convention as solve_foot.
double cone_distance_closed_form(double h_over_r, const Vec3 &element_primed);

struct ElementDistance
{
    double signed_distance = 0.0;
    bool used_oracle = false;
    int iterations = 0;
};

// solve_foot with the oracle as fallback. The oracle result is signed by the
// side of the surface the element lies on.
ElementDistance element_distance(const SteeredWavefront &w, const Vec3 &element_pos, const SolverConfig &cfg = {});

} // namespace nfsteer
