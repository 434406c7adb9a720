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

#include "nfsteer/validation.hpp"

#include "nfsteer/errors.hpp"
#include "nfsteer/field.hpp"
#include "nfsteer/geometry.hpp"
#include "nfsteer/io.hpp"
#include "nfsteer/solver.hpp"
#include "nfsteer/synthesis.hpp"
#include "nfsteer/wavefront.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <functional>
#include <random>
#include <sstream>

namespace nfsteer
{

namespace
{

constexpr double reference_frequency = 100e9;

CheckResult finish(std::string name, double max_error, double tolerance, std::string detail = {})
{
    return {std::move(name), max_error <= tolerance, max_error, tolerance, std::move(detail)};
}

CheckResult check_rotation()
{
    double worst = 0.0;
    for (int a = -89; a <= 89; a += 7)
        for (int e = -89; e <= 89; e += 7)
        {
            const Mat3 r = steering_rotation(SteeringAngles::from_degrees(a, e));
            const Mat3 rtr = r.transpose() * r;
            for (int i = 0; i < 3; ++i)
                for (int j = 0; j < 3; ++j)
                    worst = std::max(worst, std::abs(rtr(i, j) - (i == j ? 1.0 : 0.0)));
            worst = std::max(worst, std::abs(r.determinant() - 1.0));
        }
    return finish("rotation_orthonormality", worst, 1e-12, "max |R^T R - I|, |det R - 1| over a 7 degree grid");
}

CheckResult check_gradient(std::mt19937_64 &rng)
{
    std::uniform_real_distribution<double> coord(-0.2, 0.2);
    std::uniform_real_distribution<double> slope(0.05, 0.5);
    double worst = 0.0;
    for (int i = 0; i < 500; ++i)
    {
        const Wavefront w = Wavefront::cone(slope(rng));
        const double x = coord(rng), z = coord(rng);
        if (std::hypot(x, z) < 1e-3)
            continue;
        const SurfaceGradient g = surface_gradient(w, x, z);
        const double h = 1e-6 * std::max(1.0, std::hypot(x, z));
        const double fx = (surface_eval(w, x + h, z) - surface_eval(w, x - h, z)) / (2 * h);
        const double fz = (surface_eval(w, x, z + h) - surface_eval(w, x, z - h)) / (2 * h);
        worst = std::max(worst, std::hypot(g.dx - fx, g.dz - fz) / std::hypot(g.dx, g.dz));
    }
    return finish("gradient_finite_difference", worst, 1e-6, "cone gradient vs central differences, relative");
}

CheckResult check_gaussian(double inject)
{
    const ArrayGeometry array = ArrayGeometry::from_frequency(32, 32, 0.5, reference_frequency);
    const double angles[] = {-40.0, -20.0, 0.0, 20.0, 40.0};
    double worst = 0.0;
    for (double a : angles)
        for (double e : angles)
        {
            const SteeringAngles sa = SteeringAngles::from_degrees(a, e);
            const SteeredWavefront w(Wavefront::plane(), sa);
            const PhaseDistribution pd = synthesize(array, w, {}, {.closed_form_plane = false});
            for (std::size_t n = 0; n < pd.size(); ++n)
            {
                const double numeric = phase_shift(pd.signed_distance[n] + inject, array.wavelength());
                const double closed =
                    phase_shift(plane_distance_closed_form(sa, array.position(n)), array.wavelength());
                worst = std::max(worst, std::abs(numeric - closed));
            }
        }
    return finish("gaussian_regression", worst, 1e-9,
                  "Newton phases vs x cos(el) sin(az) + z sin(el), 32x32 array, 25 directions, rad");
}

CheckResult check_cone(double inject)
{
    const ArrayGeometry array = ArrayGeometry::from_frequency(32, 32, 0.5, reference_frequency);
    const double s = Wavefront::default_h_over_r;
    double worst = 0.0;
    const std::pair<double, double> dirs[] = {{0, 0}, {20, 0}, {0, 20}, {-30, 15}, {40, -40}};
    for (const auto &[a, e] : dirs)
    {
        const SteeredWavefront w(Wavefront::cone(s), SteeringAngles::from_degrees(a, e));
        const PhaseDistribution pd = synthesize(array, w);
        for (std::size_t n = 0; n < pd.size(); ++n)
        {
            const double expected =
                cone_distance_closed_form(s, to_primed(w.rotation(), array.position(n)));
            worst = std::max(worst, std::abs(pd.signed_distance[n] + inject - expected));
        }
    }
    return finish("cone_closed_form", worst, 1e-9, "Newton vs half-plane point-to-ray distance, 32x32, m");
}

CheckResult check_oracle(std::mt19937_64 &rng, int cases, double inject)
{
    const ArrayGeometry array = ArrayGeometry::from_frequency(32, 32, 0.5, reference_frequency);
    const SolverConfig cfg = solver_config_for(array);
    const double half = 0.5 * array.aperture_x();
    std::uniform_real_distribution<double> coord(-half, half);
    std::uniform_real_distribution<double> angle(-60.0, 60.0);
    std::uniform_real_distribution<double> slope(0.05, 0.5);
    const double bound = oracle_cell_diagonal(cfg);
    double worst = 0.0;
    for (int i = 0; i < cases; ++i)
    {
        const Vec3 p{coord(rng), 0.0, coord(rng)};
        const SteeringAngles sa = SteeringAngles::from_degrees(angle(rng), angle(rng));
        const Wavefront base = (i % 2 == 0) ? Wavefront::plane() : Wavefront::cone(slope(rng));
        const SteeredWavefront w(base, sa);
        const double newton = std::abs(element_distance(w, p, cfg).signed_distance + inject);
        const double oracle = oracle_min_distance(w, p, cfg);
        worst = std::max(worst, std::abs(newton - oracle));
    }
    std::ostringstream detail;
    detail << cases << " randomized plane/cone cases, bound = oracle cell diagonal, m";
    return finish("solver_oracle", worst, bound, detail.str());
}

CheckResult check_residual(std::mt19937_64 &rng)
{
    std::uniform_real_distribution<double> coord(-0.075, 0.075);
    std::uniform_real_distribution<double> angle(-60.0, 60.0);
    std::uniform_real_distribution<double> slope(0.05, 0.5);
    double worst = 0.0;
    for (int i = 0; i < 300; ++i)
    {
        const SteeredWavefront w(Wavefront::cone(slope(rng)), SteeringAngles::from_degrees(angle(rng), angle(rng)));
        const Vec3 p{coord(rng), 0.0, coord(rng)};
        FootSolution s;
        try
        {
            s = solve_foot(w, p);
        }
        catch (const NumericalError &)
        {
            continue;
        }
        if (s.at_apex)
            continue;
        worst = std::max(worst, s.residual);
    }
    return finish("residual_certificate", worst, 1e-10, "normal-line system residual at converged feet, m");
}

CheckResult check_linearity()
{
    const ArrayGeometry array = ArrayGeometry::from_frequency(8, 8, 0.5, reference_frequency);
    const SteeredWavefront w(Wavefront::cone(0.2), SteeringAngles::from_degrees(10, -5));
    const Excitation exc = to_excitation(synthesize(array, w));
    const ObservationGrid grid = ObservationGrid::planar(ObservationGrid::Plane::YZ, 0.0, 0.05, 0.2, 12, -0.05, 0.05, 9);
    const std::complex<double> c(0.7, -1.3);
    Excitation scaled = exc;
    for (auto &i : scaled.currents)
        i *= c;
    const FieldGrid f1 = total_field(array, exc, grid);
    const FieldGrid f2 = total_field(array, scaled, grid);
    double worst = 0.0;
    for (std::size_t i = 0; i < grid.size(); ++i)
    {
        const ComplexVec3 &a = f1.field[i];
        const ComplexVec3 &b = f2.field[i];
        const double ref = std::abs(c) * magnitude(a);
        if (ref == 0.0)
            continue;
        const double err = std::sqrt(std::norm(b.x - c * a.x) + std::norm(b.y - c * a.y) + std::norm(b.z - c * a.z));
        worst = std::max(worst, err / ref);
    }
    return finish("linearity", worst, 1e-12, "field of c*I vs c*field of I, relative");
}

CheckResult check_determinism()
{
    const ArrayGeometry array = ArrayGeometry::from_frequency(16, 16, 0.5, reference_frequency);
    const SteeredWavefront w(Wavefront::cone(0.2), SteeringAngles::from_degrees(20, 10));
    const ObservationGrid grid = ObservationGrid::planar(ObservationGrid::Plane::XY, 0.0, -0.05, 0.05, 15, 0.05, 0.15, 15);
    auto render = [&] {
        const PhaseDistribution pd = synthesize(array, w);
        const FieldGrid fg = total_field(array, to_excitation(pd), grid);
        std::ostringstream os;
        write_phase_csv(os, pd);
        write_field_csv(os, fg);
        os << encode_pgm16(field_heatmap(fg, FieldComponent::Total));
        return os.str();
    };
    const std::string a = render(), b = render();
    const double mismatch = a == b ? 0.0 : 1.0;
    return finish("determinism", mismatch, 0.0, "phase CSV, field CSV and heatmap bytes of two identical runs");
}

using CheckFn = std::function<CheckResult(std::mt19937_64 &, const ValidationOptions &)>;

const std::vector<std::pair<std::string, CheckFn>> &registry()
{
    static const std::vector<std::pair<std::string, CheckFn>> checks = {
        {"rotation_orthonormality", [](auto &, const auto &) { return check_rotation(); }},
        {"gradient_finite_difference", [](auto &rng, const auto &) { return check_gradient(rng); }},
        {"gaussian_regression", [](auto &, const auto &o) { return check_gaussian(o.inject_distance_error); }},
        {"cone_closed_form", [](auto &, const auto &o) { return check_cone(o.inject_distance_error); }},
        {"solver_oracle",
         [](auto &rng, const auto &o) { return check_oracle(rng, o.oracle_cases, o.inject_distance_error); }},
        {"residual_certificate", [](auto &rng, const auto &) { return check_residual(rng); }},
        {"linearity", [](auto &, const auto &) { return check_linearity(); }},
        {"determinism", [](auto &, const auto &) { return check_determinism(); }},
    };
    return checks;
}

} // namespace

std::vector<std::string> available_checks()
{
    std::vector<std::string> names;
    for (const auto &[name, fn] : registry())
        names.push_back(name);
    return names;
}

std::vector<CheckResult> run_validation(const ValidationOptions &options)
{
    if (options.checks && options.checks->empty())
        throw InvalidArgument("validation run list is empty");
    if (options.checks)
        for (const std::string &name : *options.checks)
        {
            const auto &reg = registry();
            if (std::none_of(reg.begin(), reg.end(), [&](const auto &item) { return item.first == name; }))
                throw InvalidArgument("unknown validation check '" + name + "'");
        }

    std::vector<CheckResult> results;
    for (const auto &[name, fn] : registry())
    {
        if (options.checks &&
            std::find(options.checks->begin(), options.checks->end(), name) == options.checks->end())
            continue;
        std::mt19937_64 rng(options.seed);
        results.push_back(fn(rng, options));
    }
    return results;
}

} // namespace nfsteer
