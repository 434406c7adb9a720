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

#include "nfsteer/errors.hpp"
#include "nfsteer/solver.hpp"
#include "nfsteer/synthesis.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace nfsteer;

namespace
{

// Test-only reference: nearest point on the generator ray y = s r, r >= 0, of
// the (rho, y) half-plane, found by golden-section search on r.
double ray_search_distance(double s, double rho, double y)
{
    auto d2 = [&](double r) { return (r - rho) * (r - rho) + (s * r - y) * (s * r - y); };
    double lo = 0.0, hi = 10.0 * (std::abs(rho) + std::abs(y) + 1.0);
    const double g = 0.5 * (std::sqrt(5.0) - 1.0);
    for (int i = 0; i < 300; ++i)
    {
        const double a = hi - g * (hi - lo), b = lo + g * (hi - lo);
        (d2(a) < d2(b) ? hi : lo) = (d2(a) < d2(b) ? b : a);
    }
    return std::sqrt(d2(0.5 * (lo + hi)));
}

} // namespace

TEST(Solver, UnsteeredConeExamples)
{
    const SteeredWavefront w(Wavefront::cone(0.2));
    const double oracle1 = ray_search_distance(0.2, 1.0, 0.0);
    const double oracle2 = ray_search_distance(0.2, 0.05, 0.0);
    EXPECT_NEAR(oracle1, 0.19611613513818404, 1e-12);
    EXPECT_NEAR(oracle2, 0.009805806756909202, 1e-12);
    EXPECT_NEAR(solve_foot(w, {1.0, 0.0, 0.0}).signed_distance, oracle1, 1e-12);
    EXPECT_NEAR(solve_foot(w, {0.0, 0.0, 0.05}).signed_distance, oracle2, 1e-12);
}

TEST(Solver, ElementOnTheAxisSitsOnTheApex)
{
    const FootSolution s = solve_foot(SteeredWavefront(Wavefront::cone()), {0, 0, 0});
    EXPECT_EQ(s.signed_distance, 0.0);
    EXPECT_TRUE(s.at_apex);
}

TEST(Solver, PlaneHalfWavelengthAtThirtyDegrees)
{
    const double lambda = wavelength_from_frequency(100e9);
    const SteeringAngles sa = SteeringAngles::from_degrees(30, 0);
    const FootSolution s = solve_foot(SteeredWavefront(Wavefront::plane(), sa), {lambda, 0, 0});
    EXPECT_NEAR(s.signed_distance, 0.5 * lambda, 1e-12);
    EXPECT_NEAR(plane_distance_closed_form(sa, {lambda, 0, 0}), 0.5 * lambda, 1e-15);
    EXPECT_NEAR(plane_distance_closed_form(SteeringAngles::from_degrees(0, 30), {0, 0, lambda}), 0.5 * lambda, 1e-15);
}

TEST(Solver, ConeClosedFormMatchesRaySearch)
{
    std::mt19937_64 rng(4);
    std::uniform_real_distribution<double> c(-0.3, 0.3), sl(0.05, 0.5);
    for (int i = 0; i < 300; ++i)
    {
        const double s = sl(rng);
        const Vec3 p{c(rng), c(rng), c(rng)};
        const double rho = std::hypot(p.x, p.z);
        EXPECT_NEAR(std::abs(cone_distance_closed_form(s, p)), ray_search_distance(s, rho, p.y), 1e-10);
        EXPECT_EQ(cone_distance_closed_form(s, p) > 0.0, p.y < s * rho);
    }
}

TEST(Solver, SteeredConeMatchesClosedFormAndOracle)
{
    const ArrayGeometry array = ArrayGeometry::from_frequency(32, 32, 0.5, 100e9);
    const SolverConfig cfg = solver_config_for(array);
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> c(-0.024, 0.024), ang(-60, 60), sl(0.05, 0.5);
    for (int i = 0; i < 20; ++i)
    {
        const SteeredWavefront w(Wavefront::cone(sl(rng)), SteeringAngles::from_degrees(ang(rng), ang(rng)));
        const Vec3 p{c(rng), 0.0, c(rng)};
        const FootSolution s = solve_foot(w, p, cfg);
        EXPECT_NEAR(s.signed_distance, cone_distance_closed_form(w.base().h_over_r(), to_primed(w.rotation(), p)), 1e-9);
        EXPECT_NEAR(std::abs(s.signed_distance), oracle_min_distance(w, p, cfg), oracle_cell_diagonal(cfg));
    }
}

TEST(Solver, OracleExamples)
{
    const SolverConfig cfg;
    EXPECT_NEAR(oracle_cell_diagonal(cfg), std::sqrt(2.0) * 1.2 / 2000.0, 1e-15);
    EXPECT_NEAR(oracle_min_distance(SteeredWavefront(Wavefront::cone()), {1.0, 0, 0}, {.oracle_halfwidth = 1.0}),
                0.19611613513818404, 1e-6);
    EXPECT_NEAR(oracle_min_distance(SteeredWavefront(Wavefront::plane()), {0.1, 0.02, -0.1}, cfg), 0.02, 1e-9);
}

TEST(Solver, RotatingPointAndWavefrontTogetherKeepsTheDistance)
{
    // Steering the wavefront is the same as solving the unsteered problem for the
    // primed element, bit for bit.
    std::mt19937_64 rng(6);
    std::uniform_real_distribution<double> c(-0.07, 0.07), ang(-60, 60);
    for (int i = 0; i < 50; ++i)
    {
        const SteeredWavefront w(Wavefront::cone(0.2), SteeringAngles::from_degrees(ang(rng), ang(rng)));
        const Vec3 p{c(rng), 0.0, c(rng)};
        const FootSolution a = solve_foot(w, p);
        const FootSolution b = solve_foot(SteeredWavefront(Wavefront::cone(0.2)), to_primed(w.rotation(), p));
        EXPECT_EQ(a.signed_distance, b.signed_distance);
    }
}

TEST(Solver, PlaneDistanceInOriginalFrame)
{
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> c(-0.075, 0.075), ang(-70, 70);
    for (int i = 0; i < 200; ++i)
    {
        const SteeringAngles sa = SteeringAngles::from_degrees(ang(rng), ang(rng));
        const Vec3 p{c(rng), 0.0, c(rng)};
        const FootSolution s = solve_foot(SteeredWavefront(Wavefront::plane(), sa), p);
        // Point-to-plane distance with the normal n = steering direction through the origin.
        EXPECT_NEAR(s.signed_distance, -dot(steering_direction(sa), p), 1e-12);
    }
}

TEST(Solver, FootSatisfiesNormalLineCertificate)
{
    std::mt19937_64 rng(8);
    std::uniform_real_distribution<double> c(-0.075, 0.075), ang(-60, 60), sl(0.05, 0.5);
    for (int i = 0; i < 200; ++i)
    {
        const double s = sl(rng);
        const SteeredWavefront w(Wavefront::cone(s), SteeringAngles::from_degrees(ang(rng), ang(rng)));
        const Vec3 p{c(rng), 0.0, c(rng)};
        const FootSolution sol = solve_foot(w, p);
        if (sol.at_apex)
            continue;
        EXPECT_LE(sol.residual, 1e-10);
        EXPECT_NEAR(sol.foot.y, w.base().eval(sol.foot.x, sol.foot.z), 1e-12);
        const Vec3 diff = sol.element_primed - sol.foot;
        if (norm(diff) < 1e-9)
            continue;
        const SurfaceGradient g = w.base().gradient(sol.foot.x, sol.foot.z);
        const Vec3 n{g.dx, -1.0, g.dz};
        const double angle = std::asin(std::min(1.0, norm(cross(diff, n)) / (norm(diff) * norm(n))));
        EXPECT_LE(angle, 1e-8);
    }
}

TEST(Solver, NumericPlaneMatchesClosedFormOnFullArray)
{
    const ArrayGeometry array = ArrayGeometry::from_frequency(32, 32, 0.5, 100e9);
    for (double a : {-40.0, -20.0, 0.0, 20.0, 40.0})
        for (double e : {-40.0, -20.0, 0.0, 20.0, 40.0})
        {
            const SteeringAngles sa = SteeringAngles::from_degrees(a, e);
            const PhaseDistribution pd =
                synthesize(array, SteeredWavefront(Wavefront::plane(), sa), {}, {.closed_form_plane = false});
            for (std::size_t n = 0; n < pd.size(); ++n)
                ASSERT_NEAR(pd.signed_distance[n], plane_distance_closed_form(sa, array.position(n)), 1e-9);
        }
}

TEST(Solver, ConfigValidation)
{
    EXPECT_THROW(SolverConfig{.max_iterations = 0}.validate(), InvalidArgument);
    EXPECT_THROW(SolverConfig{.oracle_grid = 1}.validate(), InvalidArgument);
    EXPECT_NO_THROW(SolverConfig{}.validate());
}

TEST(Solver, CustomWavefrontUsesFiniteDifferences)
{
    // Paraboloid y = 0.5 (x^2 + z^2) seen from a point on its axis below the vertex.
    const SteeredWavefront w(Wavefront::custom([](double x, double z) { return 0.5 * (x * x + z * z); }));
    const FootSolution s = solve_foot(w, {0.0, -0.3, 0.0});
    EXPECT_NEAR(std::abs(s.signed_distance), 0.3, 1e-9);
    EXPECT_NEAR(s.signed_distance, element_distance(w, {0.0, -0.3, 0.0}).signed_distance, 0.0);
}
