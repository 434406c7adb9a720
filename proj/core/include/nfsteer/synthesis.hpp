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
#include "nfsteer/solver.hpp"
#include "nfsteer/wavefront.hpp"

#include <complex>
#include <cstddef>
#include <vector>

namespace nfsteer
{

inline constexpr double speed_of_light = 299'792'458.0; // m/s, exact

double wavelength_from_frequency(double frequency_hz);

// Centred rectangular planar array in the xz-plane. Element (i, j) sits at
// x = (i - (n_x - 1)/2) spacing, z = (j - (n_z - 1)/2) spacing, y = 0, and has
// flat index i * n_z + j (x-index outer).
class ArrayGeometry
{
public:
    static ArrayGeometry centered(int n_x, int n_z, double spacing, double wavelength);
    // Spacing given in wavelengths, e.g. 0.5 for the usual half-wavelength grid.
    static ArrayGeometry from_frequency(int n_x, int n_z, double spacing_wavelengths, double frequency_hz);

    int n_x() const { return n_x_; }
    int n_z() const { return n_z_; }
    double spacing() const { return spacing_; }
    double wavelength() const { return wavelength_; }
    double wavenumber() const { return two_pi / wavelength_; }
    std::size_t size() const { return positions_.size(); }
    std::size_t index(int i, int j) const { return static_cast<std::size_t>(i) * n_z_ + j; }

    const std::vector<Vec3> &positions() const { return positions_; }
    const Vec3 &position(std::size_t n) const { return positions_[n]; }

    // Physical extent n * spacing along each axis.
    double aperture_x() const { return n_x_ * spacing_; }
    double aperture_z() const { return n_z_ * spacing_; }
    double aperture_half_diagonal() const;

private:
    ArrayGeometry() = default;

    int n_x_ = 0;
    int n_z_ = 0;
    double spacing_ = 0.0;
    double wavelength_ = 0.0;
    std::vector<Vec3> positions_;
};

// Per-element signed distances and unwrapped phases, laid out like the array.
struct PhaseDistribution
{
    int n_x = 0;
    int n_z = 0;
    double wavelength = 0.0;
    std::vector<Vec3> positions;
    std::vector<double> signed_distance; // meters
    std::vector<double> phase;           // radians
    std::size_t oracle_fallbacks = 0;    // elements solved by the brute-force oracle

    std::size_t size() const { return phase.size(); }
};

struct Excitation
{
    std::vector<std::complex<double>> currents;

    std::size_t size() const { return currents.size(); }
};

struct SynthesisOptions
{
    // Use the closed form for flat wavefronts instead of the Newton solve.
    bool closed_form_plane = true;
    // Rescale the oracle box and apex guard of the solver config to the array.
    bool scale_solver_to_array = true;
};

// 2 pi d / lambda, signed.
double phase_shift(double distance, double wavelength);

SolverConfig solver_config_for(const ArrayGeometry &array, SolverConfig base = {});

PhaseDistribution synthesize(const ArrayGeometry &array, const SteeredWavefront &w, const SolverConfig &cfg = {},
                             const SynthesisOptions &options = {});

// I_n = exp(+j phase_n). Unit magnitude.
Excitation to_excitation(const PhaseDistribution &pd);

// Phases mapped into [0, 2 pi); distances are left untouched.
PhaseDistribution wrap_phase(const PhaseDistribution &pd);

double wrap_angle(double phase);

} // namespace nfsteer
