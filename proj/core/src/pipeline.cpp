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

#include "nfsteer/pipeline.hpp"

#include "nfsteer/errors.hpp"

#include <algorithm>
#include <cmath>

namespace nfsteer
{

ArrayGeometry make_array(const SimulationConfig &cfg)
{
    return ArrayGeometry::from_frequency(cfg.array.n_x, cfg.array.n_z, cfg.array.spacing_in_wavelengths,
                                         cfg.frequency_hz);
}

SteeredWavefront make_wavefront(const SimulationConfig &cfg)
{
    const SteeringAngles angles = SteeringAngles::from_degrees(cfg.steering.azimuth_deg, cfg.steering.elevation_deg);
    const Wavefront base = cfg.beam.kind == "gaussian" ? Wavefront::plane() : Wavefront::cone(cfg.beam.h_over_r);
    return SteeredWavefront(base, angles);
}

ObservationGrid make_observation_grid(const SimulationConfig &cfg)
{
    const auto &o = cfg.observation;
    return ObservationGrid::planar(plane_from_string(o.plane), o.offset_m, o.bounds_m[0], o.bounds_m[1],
                                   o.resolution[0], o.bounds_m[2], o.bounds_m[3], o.resolution[1]);
}

namespace
{

std::filesystem::path resolve(const std::filesystem::path &out_dir, const std::string &name)
{
    const std::filesystem::path p(name);
    return p.is_absolute() ? p : out_dir / p;
}

// Transverse |E| cut through the beam axis at the given distance, along the
// steered x' axis. Spans four ideal null radii on either side.
TransverseProfile axis_profile(const ArrayGeometry &array, const Excitation &exc, const SteeredWavefront &w,
                               double distance)
{
    const Vec3 axis = steering_direction(w.angles()) * distance;
    const Vec3 across = from_primed(w.rotation(), {1.0, 0.0, 0.0});
    const double half_span = 4.0 * axicon_first_null_radius(array.wavelength(), w.base().h_over_r());
    constexpr int samples = 801;
    std::vector<Vec3> pts;
    pts.reserve(samples);
    for (int i = 0; i < samples; ++i)
    {
        const double s = -half_span + 2.0 * half_span * i / (samples - 1);
        pts.push_back(axis + across * s);
    }
    const FieldGrid line = total_field(array, exc, ObservationGrid::custom(std::move(pts)));
    return transverse_profile(line, axis, across);
}

} // namespace

PipelineResult run_pipeline(const SimulationConfig &cfg, Stage stage, const std::filesystem::path &out_dir)
{
    cfg.validate();
    const ArrayGeometry array = make_array(cfg);
    const SteeredWavefront w = make_wavefront(cfg);
    const bool bessel = cfg.beam.kind == "bessel";

    PipelineResult res;
    res.phase = synthesize(array, w);

    Report &rep = res.report;
    rep.add("beam", cfg.beam.kind);
    if (bessel)
        rep.add("h_over_r", cfg.beam.h_over_r);
    rep.add("frequency_hz", cfg.frequency_hz);
    rep.add("wavelength_m", array.wavelength());
    rep.add("n_x", static_cast<long long>(array.n_x()));
    rep.add("n_z", static_cast<long long>(array.n_z()));
    rep.add("spacing_m", array.spacing());
    rep.add("azimuth_deg", cfg.steering.azimuth_deg);
    rep.add("elevation_deg", cfg.steering.elevation_deg);
    rep.add("oracle_fallbacks", static_cast<long long>(res.phase.oracle_fallbacks));

    auto write_if = [&](const std::string &name, auto &&writer) {
        if (name.empty())
            return;
        const std::filesystem::path p = resolve(out_dir, name);
        writer(p);
        res.written.push_back(p);
    };

    if (stage == Stage::Synthesize || stage == Stage::Run)
    {
        write_if(cfg.outputs.phase_csv, [&](const auto &p) { write_phase_csv(p, res.phase); });
        write_if(cfg.outputs.phase_heatmap, [&](const auto &p) { write_heatmap(p, phase_heatmap(res.phase)); });
    }
    if (stage == Stage::Synthesize)
        return res;

    const Excitation exc = to_excitation(res.phase);
    FieldMetadata meta{cfg.frequency_hz, w.angles(), cfg.beam.kind};
    res.field = total_field(array, exc, make_observation_grid(cfg), meta);

    if (stage == Stage::Field || stage == Stage::Run)
    {
        write_if(cfg.outputs.field_csv, [&](const auto &p) { write_field_csv(p, *res.field); });
        write_if(cfg.outputs.heatmap, [&](const auto &p) {
            write_heatmap(p, field_heatmap(*res.field, component_from_string(cfg.outputs.heatmap_component)));
        });
    }
    if (stage == Stage::Field)
        return res;

    res.polarization = polarization_report(*res.field);
    const PolarizationReport &pol = *res.polarization;
    rep.add("observation_plane", cfg.observation.plane);
    rep.add("observation_points", static_cast<long long>(pol.points));
    rep.add("power_fraction_x", pol.fraction_x);
    rep.add("power_fraction_y", pol.fraction_y);
    rep.add("power_fraction_z", pol.fraction_z);
    rep.add("peak_cross_pol_ratio", pol.peak_cross_pol);
    rep.add("peak_x_over_z", pol.peak_x_over_z);
    rep.add("peak_y_over_z", pol.peak_y_over_z);

    const double clearance = array.aperture_half_diagonal() + min_observation_distance(array.wavelength());
    double radius = 2.0 * clearance;
    std::optional<double> range;
    if (bessel)
    {
        range = propagation_range(array, cfg.beam.h_over_r);
        radius = std::max(0.5 * *range, 1.05 * clearance);
    }
    res.beam = estimate_direction(array, exc, radius);
    BeamMetrics &bm = *res.beam;
    bm.propagation_range_estimate = range;
    rep.add("direction_scan_radius_m", radius);
    rep.add("estimated_azimuth_deg", rad_to_deg(bm.estimated_azimuth));
    rep.add("estimated_elevation_deg", rad_to_deg(bm.estimated_elevation));
    rep.add("peak_field_magnitude_v_per_m", bm.peak_magnitude);
    if (bessel)
    {
        rep.add("propagation_range_m", *range);
        const double cut = 0.5 * *range;
        if (cut > clearance)
        {
            const TransverseProfile prof = axis_profile(array, exc, w, cut);
            bm.first_null_radius = prof.first_null_radius;
            rep.add("profile_distance_m", cut);
            rep.add("first_null_radius_m", prof.first_null_radius ? format_double(*prof.first_null_radius) : "none");
            rep.add("axicon_first_null_radius_m", axicon_first_null_radius(array.wavelength(), cfg.beam.h_over_r));
        }
    }

    write_if(cfg.outputs.report, [&](const auto &p) { write_text_file(p, rep.to_text()); });
    write_if(cfg.outputs.report_csv, [&](const auto &p) { write_text_file(p, rep.to_csv()); });
    return res;
}

} // namespace nfsteer
