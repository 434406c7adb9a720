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
#include "nfsteer/wavefront.hpp"

#include <array>
#include <filesystem>
#include <optional>
#include <string>

namespace nfsteer
{

// Simulation description read from a JSON document. Lengths are meters except
// the element spacing, which is given in wavelengths; angles are degrees.
//
// {
//   "frequency_hz": 100e9,
//   "array":       {"n_x": 100, "n_z": 100, "spacing_in_wavelengths": 0.5},
//   "beam":        {"kind": "bessel", "h_over_r": 0.2},
//   "steering":    {"azimuth_deg": 0, "elevation_deg": 0},
//   "observation": {"plane": "yz", "offset_m": 0,
//                   "bounds_m": [u_min, u_max, v_min, v_max], "resolution": [nu, nv]},
//   "outputs":     {"phase_csv": "phase.csv", "field_csv": "field.csv",
//                   "heatmap": "field.pgm", "heatmap_component": "ez",
//                   "phase_heatmap": "phase.pgm", "report": "report.txt",
//                   "report_csv": "report.csv"}
// }
//
// Missing keys keep their defaults; unknown keys are rejected. An empty output
// path disables that output.
struct SimulationConfig
{
    double frequency_hz = 100e9;

    struct Array
    {
        int n_x = 100;
        int n_z = 100;
        double spacing_in_wavelengths = 0.5;
    } array;

    struct Beam
    {
        std::string kind = "bessel"; // gaussian | bessel
        double h_over_r = Wavefront::default_h_over_r;
    } beam;

    struct Steering
    {
        double azimuth_deg = 0.0;
        double elevation_deg = 0.0;
    } steering;

    struct Observation
    {
        std::string plane = "yz";
        double offset_m = 0.0;
        std::array<double, 4> bounds_m{0.05, 0.55, -0.1, 0.1};
        std::array<int, 2> resolution{200, 200};
    } observation;

    struct Outputs
    {
        std::string phase_csv = "phase.csv";
        std::string field_csv = "field.csv";
        std::string heatmap = "field.pgm";
        std::string heatmap_component = "ez";
        std::string phase_heatmap = "phase.pgm";
        std::string report = "report.txt";
        std::string report_csv = "report.csv";
    } outputs;

    // Throws ConfigError naming the first offending key.
    void validate() const;
};

// Command-line overrides applied on top of a loaded configuration.
struct ConfigOverrides
{
    std::optional<double> azimuth_deg;
    std::optional<double> elevation_deg;
    std::optional<std::string> beam;
    std::optional<double> h_over_r;
    std::optional<double> frequency_ghz;
    std::optional<int> n_x;
    std::optional<int> n_z;
};

SimulationConfig parse_config(const std::string &json_text);
SimulationConfig load_config(const std::filesystem::path &path);
void apply_overrides(SimulationConfig &cfg, const ConfigOverrides &o);
std::string config_to_json(const SimulationConfig &cfg);

} // namespace nfsteer
