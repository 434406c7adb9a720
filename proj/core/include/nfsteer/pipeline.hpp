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

#include "nfsteer/analysis.hpp"
#include "nfsteer/config.hpp"
#include "nfsteer/field.hpp"
#include "nfsteer/io.hpp"
#include "nfsteer/synthesis.hpp"

#include <filesystem>
#include <optional>
#include <vector>

namespace nfsteer
{

enum class Stage
{
    Synthesize, // phase distribution only
    Field,      // phase distribution and near field
    Analyze,    // field plus polarization / direction / profile analysis
    Run         // everything, all configured outputs
};

ArrayGeometry make_array(const SimulationConfig &cfg);
SteeredWavefront make_wavefront(const SimulationConfig &cfg);
ObservationGrid make_observation_grid(const SimulationConfig &cfg);

struct PipelineResult
{
    PhaseDistribution phase;
    std::optional<FieldGrid> field;
    std::optional<PolarizationReport> polarization;
    std::optional<BeamMetrics> beam;
    Report report;
    std::vector<std::filesystem::path> written;
};

// Executes the stages up to `stage` and writes the configured outputs that
// belong to them under out_dir (relative output paths are resolved there).
// Output files contain no timing data, so identical configurations produce
// identical bytes.
PipelineResult run_pipeline(const SimulationConfig &cfg, Stage stage, const std::filesystem::path &out_dir);

} // namespace nfsteer
