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

#include "nfsteer/config.hpp"

#include "nfsteer/errors.hpp"
#include "nfsteer/io.hpp"

#include <nlohmann/json.hpp>

#include <cmath>
#include <fstream>
#include <initializer_list>
#include <sstream>

namespace nfsteer
{

using json = nlohmann::json;

namespace
{

void reject_unknown(const json &obj, const std::string &where, std::initializer_list<const char *> allowed)
{
    if (!obj.is_object())
        throw ConfigError(where + " must be an object");
    for (const auto &item : obj.items())
    {
        bool known = false;
        for (const char *a : allowed)
            known = known || item.key() == a;
        if (!known)
            throw ConfigError("unknown configuration key '" + (where.empty() ? "" : where + ".") + item.key() + "'");
    }
}

template <typename T> void read(const json &obj, const char *key, const std::string &where, T &out)
{
    if (!obj.contains(key))
        return;
    const std::string name = (where.empty() ? "" : where + ".") + key;
    try
    {
        const json &v = obj.at(key);
        if constexpr (std::is_same_v<T, std::string>)
        {
            if (!v.is_string())
                throw ConfigError(name + " must be a string");
        }
        else if constexpr (std::is_integral_v<T>)
        {
            if (!v.is_number_integer())
                throw ConfigError(name + " must be an integer");
        }
        else if constexpr (std::is_floating_point_v<T>)
        {
            if (!v.is_number())
                throw ConfigError(name + " must be a number");
        }
        out = v.get<T>();
    }
    catch (const json::exception &e)
    {
        throw ConfigError(name + ": " + e.what());
    }
}

template <typename T, std::size_t N>
void read_array(const json &obj, const char *key, const std::string &where, std::array<T, N> &out)
{
    if (!obj.contains(key))
        return;
    const std::string name = where + "." + key;
    const json &v = obj.at(key);
    if (!v.is_array() || v.size() != N)
        throw ConfigError(name + " must be an array of " + std::to_string(N) + " numbers");
    for (std::size_t i = 0; i < N; ++i)
    {
        if (std::is_integral_v<T> ? !v[i].is_number_integer() : !v[i].is_number())
            throw ConfigError(name + "[" + std::to_string(i) + "] has the wrong type");
        out[i] = v[i].get<T>();
    }
}

bool finite_positive(double v) { return std::isfinite(v) && v > 0.0; }

} // namespace

void SimulationConfig::validate() const
{
    if (!finite_positive(frequency_hz))
        throw ConfigError("frequency_hz must be positive, got " + format_double(frequency_hz));
    if (array.n_x < 1)
        throw ConfigError("array.n_x must be at least 1");
    if (array.n_z < 1)
        throw ConfigError("array.n_z must be at least 1");
    if (!finite_positive(array.spacing_in_wavelengths))
        throw ConfigError("array.spacing_in_wavelengths must be positive");
    if (beam.kind != "gaussian" && beam.kind != "bessel")
        throw ConfigError("beam.kind must be 'gaussian' or 'bessel', got '" + beam.kind + "'");
    if (!finite_positive(beam.h_over_r))
        throw ConfigError("beam.h_over_r must be positive");
    if (!(std::abs(steering.azimuth_deg) < 90.0))
        throw ConfigError("steering.azimuth_deg must lie strictly within (-90, 90), got " +
                          format_double(steering.azimuth_deg));
    if (!(std::abs(steering.elevation_deg) < 90.0))
        throw ConfigError("steering.elevation_deg must lie strictly within (-90, 90), got " +
                          format_double(steering.elevation_deg));
    if (observation.plane != "xy" && observation.plane != "yz" && observation.plane != "xz")
        throw ConfigError("observation.plane must be one of xy, yz, xz");
    if (!std::isfinite(observation.offset_m))
        throw ConfigError("observation.offset_m must be finite");
    const auto &b = observation.bounds_m;
    for (double v : b)
        if (!std::isfinite(v))
            throw ConfigError("observation.bounds_m must be finite");
    if (!(b[1] > b[0]) || !(b[3] > b[2]))
        throw ConfigError("observation.bounds_m must be [u_min, u_max, v_min, v_max] with min < max");
    if (observation.resolution[0] < 2 || observation.resolution[1] < 2)
        throw ConfigError("observation.resolution must be at least 2 per axis");
    try
    {
        component_from_string(outputs.heatmap_component);
    }
    catch (const InvalidArgument &)
    {
        throw ConfigError("outputs.heatmap_component must be one of ex, ey, ez, total");
    }
}

SimulationConfig parse_config(const std::string &json_text)
{
    json doc;
    try
    {
        doc = json::parse(json_text);
    }
    catch (const json::parse_error &e)
    {
        throw ConfigError(std::string("configuration is not valid JSON: ") + e.what());
    }

    SimulationConfig cfg;
    reject_unknown(doc, "", {"frequency_hz", "array", "beam", "steering", "observation", "outputs"});
    read(doc, "frequency_hz", "", cfg.frequency_hz);
    if (doc.contains("array"))
    {
        const json &a = doc["array"];
        reject_unknown(a, "array", {"n_x", "n_z", "spacing_in_wavelengths"});
        read(a, "n_x", "array", cfg.array.n_x);
        read(a, "n_z", "array", cfg.array.n_z);
        read(a, "spacing_in_wavelengths", "array", cfg.array.spacing_in_wavelengths);
    }
    if (doc.contains("beam"))
    {
        const json &b = doc["beam"];
        reject_unknown(b, "beam", {"kind", "h_over_r"});
        read(b, "kind", "beam", cfg.beam.kind);
        read(b, "h_over_r", "beam", cfg.beam.h_over_r);
    }
    if (doc.contains("steering"))
    {
        const json &s = doc["steering"];
        reject_unknown(s, "steering", {"azimuth_deg", "elevation_deg"});
        read(s, "azimuth_deg", "steering", cfg.steering.azimuth_deg);
        read(s, "elevation_deg", "steering", cfg.steering.elevation_deg);
    }
    if (doc.contains("observation"))
    {
        const json &o = doc["observation"];
        reject_unknown(o, "observation", {"plane", "offset_m", "bounds_m", "resolution"});
        read(o, "plane", "observation", cfg.observation.plane);
        read(o, "offset_m", "observation", cfg.observation.offset_m);
        read_array(o, "bounds_m", "observation", cfg.observation.bounds_m);
        read_array(o, "resolution", "observation", cfg.observation.resolution);
    }
    if (doc.contains("outputs"))
    {
        const json &o = doc["outputs"];
        reject_unknown(o, "outputs",
                       {"phase_csv", "field_csv", "heatmap", "heatmap_component", "phase_heatmap", "report",
                        "report_csv"});
        read(o, "phase_csv", "outputs", cfg.outputs.phase_csv);
        read(o, "field_csv", "outputs", cfg.outputs.field_csv);
        read(o, "heatmap", "outputs", cfg.outputs.heatmap);
        read(o, "heatmap_component", "outputs", cfg.outputs.heatmap_component);
        read(o, "phase_heatmap", "outputs", cfg.outputs.phase_heatmap);
        read(o, "report", "outputs", cfg.outputs.report);
        read(o, "report_csv", "outputs", cfg.outputs.report_csv);
    }
    cfg.validate();
    return cfg;
}

SimulationConfig load_config(const std::filesystem::path &path)
{
    std::ifstream is(path);
    if (!is)
        throw ConfigError("cannot read configuration file " + path.string());
    std::stringstream ss;
    ss << is.rdbuf();
    return parse_config(ss.str());
}

void apply_overrides(SimulationConfig &cfg, const ConfigOverrides &o)
{
    if (o.azimuth_deg)
        cfg.steering.azimuth_deg = *o.azimuth_deg;
    if (o.elevation_deg)
        cfg.steering.elevation_deg = *o.elevation_deg;
    if (o.beam)
        cfg.beam.kind = *o.beam;
    if (o.h_over_r)
        cfg.beam.h_over_r = *o.h_over_r;
    if (o.frequency_ghz)
        cfg.frequency_hz = *o.frequency_ghz * 1e9;
    if (o.n_x)
        cfg.array.n_x = *o.n_x;
    if (o.n_z)
        cfg.array.n_z = *o.n_z;
    cfg.validate();
}

std::string config_to_json(const SimulationConfig &cfg)
{
    json doc;
    doc["frequency_hz"] = cfg.frequency_hz;
    doc["array"] = {{"n_x", cfg.array.n_x},
                    {"n_z", cfg.array.n_z},
                    {"spacing_in_wavelengths", cfg.array.spacing_in_wavelengths}};
    doc["beam"] = {{"kind", cfg.beam.kind}, {"h_over_r", cfg.beam.h_over_r}};
    doc["steering"] = {{"azimuth_deg", cfg.steering.azimuth_deg}, {"elevation_deg", cfg.steering.elevation_deg}};
    doc["observation"] = {{"plane", cfg.observation.plane},
                          {"offset_m", cfg.observation.offset_m},
                          {"bounds_m", cfg.observation.bounds_m},
                          {"resolution", cfg.observation.resolution}};
    doc["outputs"] = {{"phase_csv", cfg.outputs.phase_csv},
                      {"field_csv", cfg.outputs.field_csv},
                      {"heatmap", cfg.outputs.heatmap},
                      {"heatmap_component", cfg.outputs.heatmap_component},
                      {"phase_heatmap", cfg.outputs.phase_heatmap},
                      {"report", cfg.outputs.report},
                      {"report_csv", cfg.outputs.report_csv}};
    return doc.dump(2) + "\n";
}

} // namespace nfsteer
