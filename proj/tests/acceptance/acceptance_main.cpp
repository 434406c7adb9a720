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

// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit on any
// failure. Tolerances are fixed here and never calibrated at run time.

#include "nfsteer/analysis.hpp"
#include "nfsteer/field.hpp"
#include "nfsteer/geometry.hpp"
#include "nfsteer/solver.hpp"
#include "nfsteer/synthesis.hpp"
#include "nfsteer/validation.hpp"
#include "nfsteer/wavefront.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <functional>
#include <random>
#include <string>
#include <vector>

using namespace nfsteer;

namespace
{

constexpr double frequency = 100e9;

struct Outcome
{
    bool passed = false;
    std::string detail;
};

class Timer
{
public:
    double seconds() const
    {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

std::string fmt(const char *f, auto... args)
{
    char buf[512];
    std::snprintf(buf, sizeof buf, f, args...);
    return buf;
}

// 1. Newton phases for flat wavefronts reproduce k (x cos el sin az + z sin el).
Outcome gaussian_regression()
{
    constexpr double tol_rad = 1e-9;
    constexpr double budget_s = 30.0;
    Timer timer;
    const ArrayGeometry array = ArrayGeometry::from_frequency(100, 100, 0.5, frequency);
    const double k = array.wavenumber();
    const double angles[] = {-40.0, -20.0, 0.0, 20.0, 40.0};
    double worst = 0.0;
    for (double a : angles)
        for (double e : angles)
        {
            const SteeringAngles sa = SteeringAngles::from_degrees(a, e);
            const PhaseDistribution pd =
                synthesize(array, SteeredWavefront(Wavefront::plane(), sa), {}, {.closed_form_plane = false});
            for (std::size_t n = 0; n < pd.size(); ++n)
            {
                const Vec3 &p = array.position(n);
                const double expected =
                    k * (p.x * std::cos(deg_to_rad(e)) * std::sin(deg_to_rad(a)) + p.z * std::sin(deg_to_rad(e)));
                worst = std::max(worst, std::abs(pd.phase[n] - expected));
            }
        }
    const double t = timer.seconds();
    return {worst <= tol_rad && t < budget_s,
            fmt("max phase error %.3e rad (tol %.0e), %.2f s (budget %.0f s)", worst, tol_rad, t, budget_s)};
}

// 2. |Newton distance| agrees with the brute-force minimum within one oracle cell diagonal.
Outcome solver_oracle_equivalence()
{
    constexpr int cases = 200;
    constexpr double budget_s = 60.0;
    Timer timer;
    const ArrayGeometry array = ArrayGeometry::from_frequency(100, 100, 0.5, frequency);
    const SolverConfig cfg = solver_config_for(array);
    const double bound = oracle_cell_diagonal(cfg);
    std::mt19937_64 rng(7);
    const double half = 0.5 * array.aperture_x();
    std::uniform_real_distribution<double> coord(-half, half);
    std::uniform_real_distribution<double> angle(-60.0, 60.0);
    std::uniform_real_distribution<double> slope(0.05, 0.5);
    std::bernoulli_distribution use_cone(0.5);
    double worst = 0.0;
    int failures = 0, cones = 0;
    for (int i = 0; i < cases; ++i)
    {
        const Vec3 p{coord(rng), 0.0, coord(rng)};
        const SteeringAngles sa = SteeringAngles::from_degrees(angle(rng), angle(rng));
        const bool cone = use_cone(rng);
        cones += cone;
        const SteeredWavefront w(cone ? Wavefront::cone(slope(rng)) : Wavefront::plane(), sa);
        double newton = 0.0;
        try
        {
            newton = std::abs(solve_foot(w, p, cfg).signed_distance);
        }
        catch (const std::exception &)
        {
            ++failures;
            continue;
        }
        worst = std::max(worst, std::abs(newton - oracle_min_distance(w, p, cfg)));
    }
    const double t = timer.seconds();
    return {failures == 0 && worst <= bound && t < budget_s,
            fmt("%d cases (%d cone), %d Newton failures, max |diff| %.3e m (bound %.3e m), %.2f s (budget %.0f s)",
                cases, cones, failures, worst, bound, t, budget_s)};
}

// 3. Unsteered cone distances equal rho (h/r) / sqrt(1 + (h/r)^2).
Outcome unsteered_cone_closed_form()
{
    constexpr double tol_m = 1e-9;
    const double s = 0.2;
    const ArrayGeometry array = ArrayGeometry::from_frequency(32, 32, 0.5, frequency);
    const PhaseDistribution pd = synthesize(array, SteeredWavefront(Wavefront::cone(s)), {}, {});
    double worst = 0.0;
    for (std::size_t n = 0; n < pd.size(); ++n)
    {
        const Vec3 &p = array.position(n);
        const double expected = std::hypot(p.x, p.z) * s / std::sqrt(1.0 + s * s);
        worst = std::max(worst, std::abs(pd.signed_distance[n] - expected));
    }
    return {worst <= tol_m, fmt("max distance error %.3e m (tol %.0e m), 32x32 array", worst, tol_m)};
}

double max_cross_ratio(const FieldGrid &fg)
{
    double worst = 0.0;
    for (const ComplexVec3 &e : fg.field)
        worst = std::max(worst, std::max(std::abs(e.x), std::abs(e.y)) / std::abs(e.z));
    return worst;
}

Excitation bessel_excitation(const ArrayGeometry &array, double az_deg, double el_deg, double s = 0.2)
{
    return to_excitation(synthesize(array, SteeredWavefront(Wavefront::cone(s), SteeringAngles::from_degrees(az_deg, el_deg))));
}

// 4. Polarization symmetry and cross-polarization under elevation steering.
Outcome polarization_symmetry()
{
    constexpr double cancel_tol = 1e-10;
    constexpr double cross_floor = 0.05;
    constexpr double budget_s = 120.0;
    Timer timer;
    const ArrayGeometry array = ArrayGeometry::from_frequency(64, 64, 0.5, frequency);
    const double range = propagation_range(array, 0.2);
    const double near = min_observation_distance(array.wavelength()) + 1e-3;

    // (a) unsteered, points on the y-axis.
    const FieldGrid fa = total_field(array, bessel_excitation(array, 0, 0),
                                     ObservationGrid::planar(ObservationGrid::Plane::YZ, 0.0, near, range, 200, 0.0, 0.0, 1));
    const double ra = max_cross_ratio(fa);

    // (b) azimuth-only steering, the whole xy-plane region in front of the array.
    const FieldGrid fb =
        total_field(array, bessel_excitation(array, 20, 0),
                    ObservationGrid::planar(ObservationGrid::Plane::XY, 0.0, -0.15, 0.15, 61, near, range, 60));
    const double rb = max_cross_ratio(fb);

    // (c) elevation steering: yz-plane points within the propagation range.
    const FieldGrid fc =
        total_field(array, bessel_excitation(array, 0, 20),
                    ObservationGrid::planar(ObservationGrid::Plane::YZ, 0.0, near, range, 60, -range, range, 121));
    double rc = 0.0;
    for (std::size_t i = 0; i < fc.field.size(); ++i)
    {
        const Vec3 &p = fc.grid.point(i);
        if (norm(p) > range)
            continue;
        const ComplexVec3 &e = fc.field[i];
        rc = std::max(rc, std::abs(e.y) / std::abs(e.z));
    }
    const double t = timer.seconds();
    const bool ok = ra <= cancel_tol && rb <= cancel_tol && rc > cross_floor && t < budget_s;
    return {ok, fmt("(a) max cross/|Ez| %.2e, (b) %.2e (tol %.0e); (c) max |Ey|/|Ez| %.3f (> %.2f); %.1f s", ra, rb,
                    cancel_tol, rc, cross_floor, t)};
}

// 5. Peak direction of the steered Bessel beam at half the propagation range.
Outcome steering_accuracy()
{
    constexpr double tol_deg = 1.0;
    const ArrayGeometry array = ArrayGeometry::from_frequency(64, 64, 0.5, frequency);
    const double radius = 0.5 * propagation_range(array, 0.2);
    const BeamMetrics az = estimate_direction(array, bessel_excitation(array, 20, 0), radius);
    const BeamMetrics el = estimate_direction(array, bessel_excitation(array, 0, 20), radius);
    const double e1 = std::max(std::abs(rad_to_deg(az.estimated_azimuth) - 20.0), std::abs(rad_to_deg(az.estimated_elevation)));
    const double e2 = std::max(std::abs(rad_to_deg(el.estimated_azimuth)), std::abs(rad_to_deg(el.estimated_elevation) - 20.0));
    return {e1 <= tol_deg && e2 <= tol_deg,
            fmt("(20,0) -> (%.2f, %.2f) deg; (0,20) -> (%.2f, %.2f) deg; tol %.1f deg", rad_to_deg(az.estimated_azimuth),
                rad_to_deg(az.estimated_elevation), rad_to_deg(el.estimated_azimuth), rad_to_deg(el.estimated_elevation),
                tol_deg)};
}

// 6. Transverse first null of the unsteered Bessel beam against the J0 zero.
Outcome bessel_profile()
{
    constexpr double rel_tol = 0.10;
    const double s = 0.2;
    const ArrayGeometry array = ArrayGeometry::from_frequency(100, 100, 0.5, frequency);
    const double y = 0.5 * propagation_range(array, s);
    const double expected = 2.40483 / (array.wavenumber() * std::sin(std::atan(s)));
    const double half_span = 4.0 * expected;
    const FieldGrid fg = total_field(array, bessel_excitation(array, 0, 0, s),
                                     ObservationGrid::planar(ObservationGrid::Plane::XZ, y, -half_span, half_span, 801, 0.0, 0.0, 1));
    const TransverseProfile prof = transverse_profile(fg, {0.0, y, 0.0}, {1.0, 0.0, 0.0});
    if (!prof.first_null_radius)
        return {false, "no first null found"};
    const double rel = std::abs(*prof.first_null_radius - expected) / expected;
    return {rel <= rel_tol, fmt("first null %.4e m vs %.4e m, relative error %.3f (tol %.2f)", *prof.first_null_radius,
                                expected, rel, rel_tol)};
}

// 7. Invariant suites plus the full-size field performance run.
Outcome invariant_suites()
{
    constexpr double budget_s = 120.0;
    const auto results = run_validation();
    std::string failed;
    for (const auto &r : results)
        if (!r.passed)
            failed += " " + r.name;

    Timer timer;
    const ArrayGeometry array = ArrayGeometry::from_frequency(100, 100, 0.5, frequency);
    const Excitation exc = bessel_excitation(array, 0, 0);
    const FieldGrid fg = total_field(array, exc,
                                     ObservationGrid::planar(ObservationGrid::Plane::YZ, 0.0, 0.05, 0.55, 200, -0.1, 0.1, 200));
    const double t = timer.seconds();
    const bool ok = failed.empty() && fg.field.size() == 40000 && t < budget_s;
    return {ok, fmt("%zu validation checks, failed:%s; 100x100 array on 200x200 grid in %.1f s (budget %.0f s)",
                    results.size(), failed.empty() ? " none" : failed.c_str(), t, budget_s)};
}

} // namespace

int main()
{
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"1 Gaussian closed-form regression", gaussian_regression},
        {"2 Solver-oracle equivalence", solver_oracle_equivalence},
        {"3 Unsteered cone closed form", unsteered_cone_closed_form},
        {"4 Polarization symmetry", polarization_symmetry},
        {"5 Steering accuracy", steering_accuracy},
        {"6 Bessel profile", bessel_profile},
        {"7 Invariant suites and performance", invariant_suites},
    };
    int failed = 0;
    for (const auto &[name, fn] : criteria)
    {
        Outcome o;
        try
        {
            o = fn();
        }
        catch (const std::exception &e)
        {
            o = {false, std::string("exception: ") + e.what()};
        }
        failed += !o.passed;
        std::printf("[%s] %s: %s\n", o.passed ? "PASS" : "FAIL", name.c_str(), o.detail.c_str());
        std::fflush(stdout);
    }
    std::printf("%zu/%zu acceptance criteria passed\n", criteria.size() - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
