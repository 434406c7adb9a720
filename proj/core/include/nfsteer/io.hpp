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
#include "nfsteer/synthesis.hpp"

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace nfsteer
{

// Locale-independent "%.17g" rendering; round-trips every double.
std::string format_double(double v);

inline constexpr const char *phase_csv_header = "x_m,z_m,phase_rad_wrapped,phase_rad_unwrapped,distance_m";
inline constexpr const char *field_csv_header = "px_m,py_m,pz_m,re_Ex,im_Ex,re_Ey,im_Ey,re_Ez,im_Ez";

// One row per element in element-index order.
void write_phase_csv(std::ostream &os, const PhaseDistribution &pd);
void write_phase_csv(const std::filesystem::path &path, const PhaseDistribution &pd);

// One row per grid point in grid-index order.
void write_field_csv(std::ostream &os, const FieldGrid &fg);
void write_field_csv(const std::filesystem::path &path, const FieldGrid &fg);

// Reads a field CSV back as a custom-point grid.
FieldGrid read_field_csv(std::istream &is);
FieldGrid read_field_csv(const std::filesystem::path &path);

// Scalar image for 16-bit PGM export. values[row * width + col] with row 0 at
// the bottom of the picture.
struct Heatmap
{
    int width = 0;
    int height = 0;
    std::vector<double> values;
    std::string quantity;
    std::string unit;
    std::string horizontal_axis;
    std::string vertical_axis;
};

enum class FieldComponent
{
    X,
    Y,
    Z,
    Total
};

FieldComponent component_from_string(const std::string &name);
std::string to_string(FieldComponent c);

// Wrapped phase over the array: x to the right, z upwards.
Heatmap phase_heatmap(const PhaseDistribution &pd);

// |E| (one component or the total) over a planar grid: u to the right, v upwards.
Heatmap field_heatmap(const FieldGrid &fg, FieldComponent component);

// Binary "P5" graymap, maxval 65535, big-endian samples, top row first, linear
// map of [min, max] onto [0, 65535].
std::string encode_pgm16(const Heatmap &map);

// Writes the PGM and a sidecar "<path>.txt" with the value range and axes.
void write_heatmap(const std::filesystem::path &path, const Heatmap &map);

// Ordered key/value report; rendered either as "key: value" lines or as CSV.
class Report
{
public:
    void add(const std::string &key, const std::string &value);
    void add(const std::string &key, double value);
    void add(const std::string &key, long long value);

    const std::vector<std::pair<std::string, std::string>> &entries() const { return entries_; }
    std::string to_text() const;
    std::string to_csv() const;

private:
    std::vector<std::pair<std::string, std::string>> entries_;
};

void write_text_file(const std::filesystem::path &path, const std::string &content);

} // namespace nfsteer
