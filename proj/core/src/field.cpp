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

#include "nfsteer/field.hpp"

#include "nfsteer/errors.hpp"
#include "parallel.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace nfsteer
{

double magnitude(const ComplexVec3 &e) { return std::sqrt(std::norm(e.x) + std::norm(e.y) + std::norm(e.z)); }

ObservationGrid ObservationGrid::planar(Plane plane, double offset, double u_min, double u_max, int nu, double v_min,
                                        double v_max, int nv)
{
    if (plane == Plane::Custom)
        throw InvalidArgument("use ObservationGrid::custom for point lists");
    if (nu < 1 || nv < 1)
        throw InvalidArgument("grid resolution must be at least 1 per axis");
    if (!(u_max >= u_min) || !(v_max >= v_min) || !std::isfinite(u_min) || !std::isfinite(u_max) ||
        !std::isfinite(v_min) || !std::isfinite(v_max) || !std::isfinite(offset))
        throw InvalidArgument("grid bounds must be finite and ordered");

    ObservationGrid g;
    g.plane_ = plane;
    g.offset_ = offset;
    g.u_min_ = u_min;
    g.u_max_ = nu > 1 ? u_max : u_min;
    g.v_min_ = v_min;
    g.v_max_ = nv > 1 ? v_max : v_min;
    g.nu_ = nu;
    g.nv_ = nv;
    g.points_.reserve(static_cast<std::size_t>(nu) * nv);
    const double du = g.u_step(), dv = g.v_step();
    for (int iu = 0; iu < nu; ++iu)
        for (int iv = 0; iv < nv; ++iv)
            g.points_.push_back(g.from_plane_coords(u_min + du * iu, v_min + dv * iv));
    return g;
}

ObservationGrid ObservationGrid::custom(std::vector<Vec3> points)
{
    for (const Vec3 &p : points)
        if (!is_finite(p))
            throw InvalidArgument("observation points must be finite");
    ObservationGrid g;
    g.plane_ = Plane::Custom;
    g.nu_ = static_cast<int>(points.size());
    g.nv_ = 1;
    g.points_ = std::move(points);
    return g;
}

Vec3 ObservationGrid::to_plane_coords(const Vec3 &p) const
{
    switch (plane_)
    {
    case Plane::XY:
        return {p.x, p.y, p.z - offset_};
    case Plane::YZ:
        return {p.y, p.z, p.x - offset_};
    case Plane::XZ:
        return {p.x, p.z, p.y - offset_};
    case Plane::Custom:
        break;
    }
    throw InvalidArgument("custom grids have no plane coordinates");
}

Vec3 ObservationGrid::from_plane_coords(double u, double v) const
{
    switch (plane_)
    {
    case Plane::XY:
        return {u, v, offset_};
    case Plane::YZ:
        return {offset_, u, v};
    case Plane::XZ:
        return {u, offset_, v};
    case Plane::Custom:
        break;
    }
    throw InvalidArgument("custom grids have no plane coordinates");
}

std::string to_string(ObservationGrid::Plane plane)
{
    switch (plane)
    {
    case ObservationGrid::Plane::XY:
        return "xy";
    case ObservationGrid::Plane::YZ:
        return "yz";
    case ObservationGrid::Plane::XZ:
        return "xz";
    case ObservationGrid::Plane::Custom:
        return "custom";
    }
    return "custom";
}

ObservationGrid::Plane plane_from_string(const std::string &name)
{
    if (name == "xy")
        return ObservationGrid::Plane::XY;
    if (name == "yz")
        return ObservationGrid::Plane::YZ;
    if (name == "xz")
        return ObservationGrid::Plane::XZ;
    throw InvalidArgument("unknown observation plane '" + name + "' (expected xy, yz or xz)");
}

LocalAngles local_angles(const Vec3 &element_pos, const Vec3 &p)
{
    const Vec3 r = p - element_pos;
    const double len = norm(r);
    if (len == 0.0)
        throw CoincidentPoint();
    LocalAngles a;
    a.polar = std::acos(std::clamp(r.z / len, -1.0, 1.0));
    a.azimuth = (r.x == 0.0 && r.y == 0.0) ? 0.0 : std::atan2(r.y, r.x);
    return a;
}

Vec3 polarization_unit_vector(double phi, double theta)
{
    const double ct = std::cos(theta);
    return {std::cos(phi) * ct, std::sin(phi) * ct, -std::sin(theta)};
}

namespace
{

struct FieldAccumulator
{
    double ex_re = 0.0, ex_im = 0.0, ey_re = 0.0, ey_im = 0.0, ez_re = 0.0, ez_im = 0.0;

    ComplexVec3 value() const { return {{ex_re, ex_im}, {ey_re, ey_im}, {ez_re, ez_im}}; }
};

// Adds I e^{-jkr}/r theta_hat. theta_hat is formed from the separation vector
// directly: cos(theta) = dz/r, sin(theta) = rho/r, cos(Phi) = dx/rho,
// sin(Phi) = dy/rho. Returns false for a coincident point.
inline bool accumulate(FieldAccumulator &acc, double dx, double dy, double dz, double i_re, double i_im, double k)
{
    const double rho2 = dx * dx + dy * dy;
    const double r = std::sqrt(rho2 + dz * dz);
    if (r == 0.0)
        return false;
    double ux, uy, uz;
    if (rho2 > 0.0)
    {
        const double rho = std::sqrt(rho2);
        const double inv = dz / (rho * r);
        ux = dx * inv;
        uy = dy * inv;
        uz = -rho / r;
    }
    else
    {
        ux = dz > 0.0 ? 1.0 : -1.0;
        uy = 0.0;
        uz = 0.0;
    }
    const double kr = k * r;
    const double c = std::cos(kr), s = std::sin(kr);
    // I * (c - j s) / r
    const double a_re = (i_re * c + i_im * s) / r;
    const double a_im = (i_im * c - i_re * s) / r;
    acc.ex_re += a_re * ux;
    acc.ex_im += a_im * ux;
    acc.ey_re += a_re * uy;
    acc.ey_im += a_im * uy;
    acc.ez_re += a_re * uz;
    acc.ez_im += a_im * uz;
    return true;
}

} // namespace

ComplexVec3 element_field(const Vec3 &element_pos, std::complex<double> current, const Vec3 &p, double k)
{
    FieldAccumulator acc;
    if (!accumulate(acc, p.x - element_pos.x, p.y - element_pos.y, p.z - element_pos.z, current.real(), current.imag(),
                    k))
        throw CoincidentPoint();
    return acc.value();
}

double min_observation_distance(double wavelength) { return 10.0 * wavelength; }

namespace
{

void check_point(const ArrayGeometry &array, const Vec3 &p, std::size_t index)
{
    const double limit = min_observation_distance(array.wavelength());
    // Quick accept against the bounding rectangle of the element positions.
    const Vec3 &first = array.positions().front();
    const Vec3 &last = array.positions().back();
    const double dx = std::max({first.x - p.x, 0.0, p.x - last.x});
    const double dz = std::max({first.z - p.z, 0.0, p.z - last.z});
    if (dx * dx + p.y * p.y + dz * dz >= limit * limit)
        return;

    double min_d2 = std::numeric_limits<double>::infinity();
    for (const Vec3 &e : array.positions())
    {
        const Vec3 d = p - e;
        const double d2 = dot(d, d);
        if (d2 == 0.0)
            throw CoincidentPoint(index);
        min_d2 = std::min(min_d2, d2);
    }
    if (std::sqrt(min_d2) < limit * (1.0 - 1e-12))
        throw NearFieldViolation(index);
}

} // namespace

FieldGrid total_field(const ArrayGeometry &array, const Excitation &exc, const ObservationGrid &grid,
                      FieldMetadata metadata)
{
    if (exc.size() != array.size())
        throw InvalidArgument("excitation size does not match the array");

    const std::size_t m = array.size();
    std::vector<double> ex(m), ey(m), ez(m), i_re(m), i_im(m);
    for (std::size_t n = 0; n < m; ++n)
    {
        ex[n] = array.position(n).x;
        ey[n] = array.position(n).y;
        ez[n] = array.position(n).z;
        i_re[n] = exc.currents[n].real();
        i_im[n] = exc.currents[n].imag();
    }
    const double k = array.wavenumber();

    FieldGrid out;
    out.grid = grid;
    out.metadata = std::move(metadata);
    out.field.assign(grid.size(), ComplexVec3{});

    detail::parallel_for(
        grid.size(),
        [&](std::size_t idx) {
            const Vec3 &p = grid.point(idx);
            check_point(array, p, idx);
            FieldAccumulator acc;
            for (std::size_t n = 0; n < m; ++n)
                if (!accumulate(acc, p.x - ex[n], p.y - ey[n], p.z - ez[n], i_re[n], i_im[n], k))
                    throw CoincidentPoint(idx);
            out.field[idx] = acc.value();
        },
        4);
    return out;
}

} // namespace nfsteer
