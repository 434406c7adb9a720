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

#include "nfsteer/io.hpp"

#include "nfsteer/errors.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <ostream>
#include <sstream>

namespace nfsteer
{

std::string format_double(double v)
{
    std::array<char, 64> buf{};
    const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v, std::chars_format::general, 17);
    return std::string(buf.data(), res.ptr);
}

namespace
{

std::ofstream open_output(const std::filesystem::path &path, bool binary = false)
{
    if (path.has_parent_path())
    {
        std::error_code ec;
        std::filesystem::create_directories(path.parent_path(), ec);
        if (ec)
            throw IoError("cannot create directory " + path.parent_path().string() + ": " + ec.message());
    }
    std::ofstream os(path, binary ? std::ios::binary | std::ios::out : std::ios::out);
    if (!os)
        throw IoError("cannot open " + path.string() + " for writing");
    return os;
}

void finish(std::ofstream &os, const std::filesystem::path &path)
{
    os.flush();
    if (!os)
        throw IoError("failed writing " + path.string());
}

} // namespace

void write_phase_csv(std::ostream &os, const PhaseDistribution &pd)
{
    os << phase_csv_header << '\n';
    for (std::size_t n = 0; n < pd.size(); ++n)
    {
        os << format_double(pd.positions[n].x) << ',' << format_double(pd.positions[n].z) << ','
           << format_double(wrap_angle(pd.phase[n])) << ',' << format_double(pd.phase[n]) << ','
           << format_double(pd.signed_distance[n]) << '\n';
    }
}

void write_phase_csv(const std::filesystem::path &path, const PhaseDistribution &pd)
{
    auto os = open_output(path);
    write_phase_csv(os, pd);
    finish(os, path);
}

void write_field_csv(std::ostream &os, const FieldGrid &fg)
{
    os << field_csv_header << '\n';
    for (std::size_t i = 0; i < fg.field.size(); ++i)
    {
        const Vec3 &p = fg.grid.point(i);
        const ComplexVec3 &e = fg.field[i];
        os << format_double(p.x) << ',' << format_double(p.y) << ',' << format_double(p.z) << ','
           << format_double(e.x.real()) << ',' << format_double(e.x.imag()) << ',' << format_double(e.y.real()) << ','
           << format_double(e.y.imag()) << ',' << format_double(e.z.real()) << ',' << format_double(e.z.imag())
           << '\n';
    }
}

void write_field_csv(const std::filesystem::path &path, const FieldGrid &fg)
{
    auto os = open_output(path);
    write_field_csv(os, fg);
    finish(os, path);
}

FieldGrid read_field_csv(std::istream &is)
{
    std::string line;
    if (!std::getline(is, line) || line != field_csv_header)
        throw IoError("field CSV header mismatch");
    std::vector<Vec3> points;
    std::vector<ComplexVec3> field;
    std::size_t line_no = 1;
    while (std::getline(is, line))
    {
        ++line_no;
        if (line.empty())
            continue;
        std::array<double, 9> v{};
        const char *p = line.data();
        const char *end = line.data() + line.size();
        for (std::size_t c = 0; c < v.size(); ++c)
        {
            const auto res = std::from_chars(p, end, v[c]);
            if (res.ec != std::errc())
                throw IoError("malformed number on field CSV line " + std::to_string(line_no));
            p = res.ptr;
            if (c + 1 < v.size())
            {
                if (p == end || *p != ',')
                    throw IoError("expected 9 columns on field CSV line " + std::to_string(line_no));
                ++p;
            }
        }
        if (p != end)
            throw IoError("trailing data on field CSV line " + std::to_string(line_no));
        points.push_back({v[0], v[1], v[2]});
        field.push_back({{v[3], v[4]}, {v[5], v[6]}, {v[7], v[8]}});
    }
    FieldGrid fg{ObservationGrid::custom(std::move(points)), std::move(field), {}};
    return fg;
}

FieldGrid read_field_csv(const std::filesystem::path &path)
{
    std::ifstream is(path);
    if (!is)
        throw IoError("cannot open " + path.string());
    return read_field_csv(is);
}

FieldComponent component_from_string(const std::string &name)
{
    if (name == "ex")
        return FieldComponent::X;
    if (name == "ey")
        return FieldComponent::Y;
    if (name == "ez")
        return FieldComponent::Z;
    if (name == "total")
        return FieldComponent::Total;
    throw InvalidArgument("unknown field component '" + name + "' (expected ex, ey, ez or total)");
}

std::string to_string(FieldComponent c)
{
    switch (c)
    {
    case FieldComponent::X:
        return "ex";
    case FieldComponent::Y:
        return "ey";
    case FieldComponent::Z:
        return "ez";
    case FieldComponent::Total:
        return "total";
    }
    return "total";
}

Heatmap phase_heatmap(const PhaseDistribution &pd)
{
    Heatmap map;
    map.width = pd.n_x;
    map.height = pd.n_z;
    map.values.resize(pd.size());
    map.quantity = "wrapped excitation phase";
    map.unit = "rad";
    map.horizontal_axis = "x";
    map.vertical_axis = "z";
    for (int i = 0; i < pd.n_x; ++i)
        for (int j = 0; j < pd.n_z; ++j)
            map.values[static_cast<std::size_t>(j) * pd.n_x + i] =
                wrap_angle(pd.phase[static_cast<std::size_t>(i) * pd.n_z + j]);
    return map;
}

Heatmap field_heatmap(const FieldGrid &fg, FieldComponent component)
{
    const ObservationGrid &g = fg.grid;
    if (!g.is_planar())
        throw InvalidArgument("heatmaps need a planar observation grid");
    Heatmap map;
    map.width = g.nu();
    map.height = g.nv();
    map.values.resize(g.size());
    map.quantity = "|E| component " + to_string(component);
    map.unit = "V/m";
    switch (g.plane())
    {
    case ObservationGrid::Plane::XY:
        map.horizontal_axis = "x";
        map.vertical_axis = "y";
        break;
    case ObservationGrid::Plane::YZ:
        map.horizontal_axis = "y";
        map.vertical_axis = "z";
        break;
    default:
        map.horizontal_axis = "x";
        map.vertical_axis = "z";
        break;
    }
    for (int iu = 0; iu < g.nu(); ++iu)
        for (int iv = 0; iv < g.nv(); ++iv)
        {
            const ComplexVec3 &e = fg.field[static_cast<std::size_t>(iu) * g.nv() + iv];
            double v = 0.0;
            switch (component)
            {
            case FieldComponent::X:
                v = std::abs(e.x);
                break;
            case FieldComponent::Y:
                v = std::abs(e.y);
                break;
            case FieldComponent::Z:
                v = std::abs(e.z);
                break;
            case FieldComponent::Total:
                v = magnitude(e);
                break;
            }
            map.values[static_cast<std::size_t>(iv) * g.nu() + iu] = v;
        }
    return map;
}

namespace
{

std::pair<double, double> value_range(const Heatmap &map)
{
    if (map.values.empty())
        return {0.0, 0.0};
    const auto [lo, hi] = std::minmax_element(map.values.begin(), map.values.end());
    return {*lo, *hi};
}

} // namespace

std::string encode_pgm16(const Heatmap &map)
{
    if (map.width <= 0 || map.height <= 0 ||
        map.values.size() != static_cast<std::size_t>(map.width) * static_cast<std::size_t>(map.height))
        throw InvalidArgument("heatmap dimensions do not match its data");
    const auto [lo, hi] = value_range(map);
    const double span = hi - lo;

    std::string out = "P5\n" + std::to_string(map.width) + " " + std::to_string(map.height) + "\n65535\n";
    out.reserve(out.size() + map.values.size() * 2);
    for (int row = map.height - 1; row >= 0; --row)
        for (int col = 0; col < map.width; ++col)
        {
            const double v = map.values[static_cast<std::size_t>(row) * map.width + col];
            std::uint16_t level = 0;
            if (span > 0.0)
                level = static_cast<std::uint16_t>(std::lround(std::clamp((v - lo) / span, 0.0, 1.0) * 65535.0));
            out.push_back(static_cast<char>(level >> 8));
            out.push_back(static_cast<char>(level & 0xff));
        }
    return out;
}

void write_heatmap(const std::filesystem::path &path, const Heatmap &map)
{
    const std::string bytes = encode_pgm16(map);
    {
        auto os = open_output(path, true);
        os.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
        finish(os, path);
    }
    const auto [lo, hi] = value_range(map);
    Report side;
    side.add("format", "pgm P5 16-bit big-endian");
    side.add("width", static_cast<long long>(map.width));
    side.add("height", static_cast<long long>(map.height));
    side.add("quantity", map.quantity);
    side.add("unit", map.unit);
    side.add("mapping", "linear");
    side.add("min", lo);
    side.add("max", hi);
    side.add("gray_min", 0LL);
    side.add("gray_max", 65535LL);
    side.add("horizontal_axis", map.horizontal_axis + " increasing left to right");
    side.add("vertical_axis", map.vertical_axis + " increasing bottom to top");
    std::filesystem::path sidecar = path;
    sidecar += ".txt";
    write_text_file(sidecar, side.to_text());
}

void Report::add(const std::string &key, const std::string &value) { entries_.emplace_back(key, value); }
void Report::add(const std::string &key, double value) { entries_.emplace_back(key, format_double(value)); }
void Report::add(const std::string &key, long long value) { entries_.emplace_back(key, std::to_string(value)); }

std::string Report::to_text() const
{
    std::string out;
    for (const auto &[k, v] : entries_)
        out += k + ": " + v + "\n";
    return out;
}

std::string Report::to_csv() const
{
    std::string out = "key,value\n";
    for (const auto &[k, v] : entries_)
    {
        const bool quote = v.find_first_of(",\"\n") != std::string::npos;
        if (!quote)
        {
            out += k + "," + v + "\n";
            continue;
        }
        std::string escaped;
        for (char ch : v)
        {
            if (ch == '"')
                escaped += '"';
            escaped += ch;
        }
        out += k + ",\"" + escaped + "\"\n";
    }
    return out;
}

void write_text_file(const std::filesystem::path &path, const std::string &content)
{
    auto os = open_output(path);
    os << content;
    finish(os, path);
}

} // namespace nfsteer
