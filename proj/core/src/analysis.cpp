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

#include "nfsteer/analysis.hpp"

#include "nfsteer/errors.hpp"

#include <algorithm>
#include <cmath>

namespace nfsteer
{

PolarizationReport polarization_report(const FieldGrid &fg, double ez_floor_relative)
{
    if (fg.field.empty())
        throw EmptyGrid();

    PolarizationReport rep;
    rep.points = fg.field.size();
    double max_ez = 0.0;
    for (const ComplexVec3 &e : fg.field)
    {
        rep.power_x += std::norm(e.x);
        rep.power_y += std::norm(e.y);
        rep.power_z += std::norm(e.z);
        max_ez = std::max(max_ez, std::abs(e.z));
    }
    const double total = rep.power_x + rep.power_y + rep.power_z;
    if (total > 0.0)
    {
        rep.fraction_x = rep.power_x / total;
        rep.fraction_y = rep.power_y / total;
        rep.fraction_z = rep.power_z / total;
    }

    const double floor = std::max(1e-15, ez_floor_relative * max_ez);
    for (const ComplexVec3 &e : fg.field)
    {
        const double az = std::abs(e.z);
        if (az < floor)
            continue;
        ++rep.ratio_points;
        const double rx = std::abs(e.x) / az, ry = std::abs(e.y) / az;
        rep.peak_x_over_z = std::max(rep.peak_x_over_z, rx);
        rep.peak_y_over_z = std::max(rep.peak_y_over_z, ry);
    }
    rep.peak_cross_pol = std::max(rep.peak_x_over_z, rep.peak_y_over_z);
    return rep;
}

namespace
{

Vec3 direction_point(double radius, double az_deg, double el_deg)
{
    return steering_direction(SteeringAngles::from_degrees(az_deg, el_deg)) * radius;
}

struct ScanPeak
{
    double az_deg = 0.0;
    double el_deg = 0.0;
    double magnitude = -1.0;
};

ScanPeak scan(const ArrayGeometry &array, const Excitation &exc, double radius, double az_lo, double el_lo,
              double step, int n_az, int n_el)
{
    std::vector<Vec3> points;
    std::vector<std::pair<double, double>> angles;
    points.reserve(static_cast<std::size_t>(n_az) * n_el);
    for (int a = 0; a < n_az; ++a)
        for (int e = 0; e < n_el; ++e)
        {
            const double az = az_lo + step * a, el = el_lo + step * e;
            angles.emplace_back(az, el);
            points.push_back(direction_point(radius, az, el));
        }
    const FieldGrid fg = total_field(array, exc, ObservationGrid::custom(std::move(points)));
    ScanPeak best;
    for (std::size_t i = 0; i < fg.field.size(); ++i)
    {
        const double m = magnitude(fg.field[i]);
        if (m > best.magnitude)
            best = {angles[i].first, angles[i].second, m};
    }
    return best;
}

} // namespace

BeamMetrics estimate_direction(const ArrayGeometry &array, const Excitation &exc, double radius)
{
    const double clearance = array.aperture_half_diagonal() + min_observation_distance(array.wavelength());
    if (!std::isfinite(radius) || radius < clearance)
        throw RadiusOutOfRange("scan radius " + std::to_string(radius) + " m must be at least " +
                               std::to_string(clearance) + " m (aperture half-diagonal plus 10 wavelengths)");

    constexpr double limit = 89.0;
    const ScanPeak coarse = scan(array, exc, radius, -limit, -limit, 1.0, 179, 179);

    const double fine_limit = 89.9;
    const double az_lo = std::clamp(coarse.az_deg - 1.0, -fine_limit, fine_limit - 2.0);
    const double el_lo = std::clamp(coarse.el_deg - 1.0, -fine_limit, fine_limit - 2.0);
    ScanPeak fine = scan(array, exc, radius, az_lo, el_lo, 0.1, 21, 21);
    if (coarse.magnitude > fine.magnitude)
        fine = coarse;

    BeamMetrics bm;
    bm.estimated_azimuth = deg_to_rad(fine.az_deg);
    bm.estimated_elevation = deg_to_rad(fine.el_deg);
    bm.peak_point = direction_point(radius, fine.az_deg, fine.el_deg);
    bm.peak_magnitude = fine.magnitude;
    return bm;
}

namespace
{

// Direction components in (u, v, normal) order for a plane grid.
Vec3 direction_in_plane(ObservationGrid::Plane plane, const Vec3 &d)
{
    switch (plane)
    {
    case ObservationGrid::Plane::XY:
        return {d.x, d.y, d.z};
    case ObservationGrid::Plane::YZ:
        return {d.y, d.z, d.x};
    case ObservationGrid::Plane::XZ:
        return {d.x, d.z, d.y};
    case ObservationGrid::Plane::Custom:
        break;
    }
    return d;
}

double interpolate_magnitude(const FieldGrid &fg, const std::vector<double> &mag, double u, double v)
{
    const ObservationGrid &g = fg.grid;
    auto locate = [](double x, double lo, double step, int n, int &i0, double &frac) {
        if (n == 1)
        {
            i0 = 0;
            frac = 0.0;
            return;
        }
        const double t = std::clamp((x - lo) / step, 0.0, static_cast<double>(n - 1));
        i0 = std::min(static_cast<int>(std::floor(t)), n - 2);
        frac = t - i0;
    };
    int iu, iv;
    double fu, fv;
    locate(u, g.u_min(), g.u_step(), g.nu(), iu, fu);
    locate(v, g.v_min(), g.v_step(), g.nv(), iv, fv);
    const int nv = g.nv();
    auto at = [&](int a, int b) { return mag[static_cast<std::size_t>(a) * nv + b]; };
    const int iu1 = g.nu() > 1 ? iu + 1 : iu;
    const int iv1 = nv > 1 ? iv + 1 : iv;
    return (1 - fu) * (1 - fv) * at(iu, iv) + fu * (1 - fv) * at(iu1, iv) + (1 - fu) * fv * at(iu, iv1) +
           fu * fv * at(iu1, iv1);
}

void find_first_null(TransverseProfile &prof)
{
    std::vector<ProfileSample> pos;
    for (const ProfileSample &s : prof.samples)
        if (s.offset >= 0.0)
            pos.push_back(s);
    if (pos.empty())
        return;
    double running_max = pos[0].magnitude;
    prof.main_lobe_peak = running_max;
    for (std::size_t i = 1; i + 1 < pos.size(); ++i)
    {
        running_max = std::max(running_max, pos[i].magnitude);
        prof.main_lobe_peak = running_max;
        const double y0 = pos[i - 1].magnitude, y1 = pos[i].magnitude, y2 = pos[i + 1].magnitude;
        if (!(y1 < y0 && y1 < y2))
            continue;
        double right_peak = y2;
        for (std::size_t j = i + 1; j + 1 < pos.size() && pos[j + 1].magnitude > pos[j].magnitude; ++j)
            right_peak = pos[j + 1].magnitude;
        const double prominence = std::min(running_max, right_peak) - y1;
        if (prominence <= 0.05 * running_max)
            continue;
        // Parabolic vertex through the three samples (uniform spacing).
        const double h = pos[i + 1].offset - pos[i].offset;
        const double denom = y0 - 2.0 * y1 + y2;
        double shift = denom > 0.0 ? 0.5 * h * (y0 - y2) / denom : 0.0;
        shift = std::clamp(shift, -h, h);
        prof.first_null_radius = pos[i].offset + shift;
        return;
    }
}

} // namespace

TransverseProfile transverse_profile(const FieldGrid &fg, const Vec3 &axis_point, const Vec3 &direction)
{
    const ObservationGrid &g = fg.grid;
    if (fg.field.size() != g.size() || g.size() == 0)
        throw LineOutsideGrid("field grid is empty or inconsistent");
    const double dn = norm(direction);
    if (!(dn > 0.0))
        throw LineOutsideGrid("profile direction must be non-zero");
    const Vec3 dir = direction * (1.0 / dn);

    TransverseProfile prof;
    if (g.is_planar())
    {
        const Vec3 c = g.to_plane_coords(axis_point);
        const Vec3 d = direction_in_plane(g.plane(), dir);
        const double scale = std::max({1.0, std::abs(g.u_max() - g.u_min()), std::abs(g.v_max() - g.v_min())});
        if (std::abs(c.z) > 1e-9 * scale || std::abs(d.z) > 1e-9)
            throw LineOutsideGrid("profile line does not lie in the grid plane");

        double h = 0.0;
        if (g.u_step() > 0.0 && std::abs(d.x) > 1e-12)
            h = g.u_step();
        if (g.v_step() > 0.0 && std::abs(d.y) > 1e-12)
            h = h > 0.0 ? std::min(h, g.v_step()) : g.v_step();
        if (!(h > 0.0))
            throw LineOutsideGrid("profile direction runs along a single-sample grid axis");

        const double tol = 1e-9 * h;
        auto inside = [&](double u, double v) {
            return u >= g.u_min() - tol && u <= g.u_max() + tol && v >= g.v_min() - tol && v <= g.v_max() + tol;
        };
        if (!inside(c.x, c.y))
            throw LineOutsideGrid("axis point lies outside the grid bounds");

        std::vector<double> mag(fg.field.size());
        std::transform(fg.field.begin(), fg.field.end(), mag.begin(), [](const ComplexVec3 &e) { return magnitude(e); });

        std::vector<ProfileSample> neg;
        for (int m = 0;; ++m)
        {
            const double s = m * h;
            bool any = false;
            if (inside(c.x + s * d.x, c.y + s * d.y))
            {
                prof.samples.push_back({s, interpolate_magnitude(fg, mag, c.x + s * d.x, c.y + s * d.y)});
                any = true;
            }
            if (m > 0 && inside(c.x - s * d.x, c.y - s * d.y))
            {
                neg.push_back({-s, interpolate_magnitude(fg, mag, c.x - s * d.x, c.y - s * d.y)});
                any = true;
            }
            if (!any)
                break;
        }
        prof.samples.insert(prof.samples.begin(), neg.rbegin(), neg.rend());
    }
    else
    {
        for (std::size_t i = 0; i < g.size(); ++i)
        {
            const Vec3 rel = g.point(i) - axis_point;
            const double s = dot(rel, dir);
            const double perp = norm(rel - dir * s);
            if (perp <= 1e-9 * std::max(1.0, std::abs(s)))
                prof.samples.push_back({s, magnitude(fg.field[i])});
        }
        std::sort(prof.samples.begin(), prof.samples.end(),
                  [](const ProfileSample &a, const ProfileSample &b) { return a.offset < b.offset; });
    }

    if (prof.samples.size() < 2)
        throw LineOutsideGrid("fewer than two grid samples lie on the profile line");
    find_first_null(prof);
    return prof;
}

double propagation_range(const ArrayGeometry &array, double h_over_r)
{
    if (!(h_over_r > 0.0) || !std::isfinite(h_over_r))
        throw InvalidArgument("h/r must be positive");
    return array.aperture_half_diagonal() / h_over_r;
}

double axicon_first_null_radius(double wavelength, double h_over_r)
{
    constexpr double j0_first_zero = 2.404825557695773;
    const double k = two_pi / wavelength;
    return j0_first_zero / (k * std::sin(std::atan(h_over_r)));
}

} // namespace nfsteer
