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
#include "nfsteer/field.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace nfsteer;

namespace
{

const double lambda3 = 3e-3;
const double k3 = two_pi / lambda3;

double max_diff(const ComplexVec3 &a, const ComplexVec3 &b)
{
    return std::max({std::abs(a.x - b.x), std::abs(a.y - b.y), std::abs(a.z - b.z)});
}

} // namespace

TEST(Field, LocalAngleExamples)
{
    const LocalAngles on_y = local_angles({0, 0, 0}, {0, 1, 0});
    EXPECT_NEAR(on_y.polar, 0.5 * pi, 1e-15);
    EXPECT_NEAR(on_y.azimuth, 0.5 * pi, 1e-15);
    const LocalAngles on_z = local_angles({0, 0, 0}, {0, 0, 2});
    EXPECT_NEAR(on_z.polar, 0.0, 1e-15);
    EXPECT_THROW(local_angles({1, 2, 3}, {1, 2, 3}), CoincidentPoint);
}

TEST(Field, PolarizationUnitVectorExamples)
{
    const Vec3 a = polarization_unit_vector(0.5 * pi, 0.5 * pi);
    EXPECT_NEAR(a.x, 0.0, 1e-15);
    EXPECT_NEAR(a.y, 0.0, 1e-15);
    EXPECT_NEAR(a.z, -1.0, 1e-15);
    const Vec3 b = polarization_unit_vector(0.0, 0.0);
    EXPECT_NEAR(b.x, 1.0, 1e-15);
    EXPECT_NEAR(b.z, 0.0, 1e-15);
}

TEST(Field, ThetaHatIsTransverse)
{
    std::mt19937_64 rng(9);
    std::uniform_real_distribution<double> c(-1, 1);
    for (int i = 0; i < 500; ++i)
    {
        const Vec3 d{c(rng), c(rng), c(rng)};
        const LocalAngles la = local_angles({0, 0, 0}, d);
        const Vec3 t = polarization_unit_vector(la.azimuth, la.polar);
        EXPECT_NEAR(norm(t), 1.0, 1e-14);
        EXPECT_NEAR(dot(t, d) / norm(d), 0.0, 1e-14);
        const ComplexVec3 e = element_field({0, 0, 0}, 1.0, d, k3);
        const double r = norm(d);
        EXPECT_NEAR(std::abs(e.x) * r, std::abs(t.x), 1e-13);
        EXPECT_NEAR(std::abs(e.z) * r, std::abs(t.z), 1e-13);
    }
}

TEST(Field, SingleElementExample)
{
    const ComplexVec3 e = element_field({0, 0, 0}, 1.0, {0, 1, 0}, two_pi / 3e-3);
    const std::complex<double> expected = std::exp(std::complex<double>(0, -two_pi / 3e-3));
    EXPECT_NEAR(std::abs(e.x), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(e.y), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(e.z + expected), 0.0, 1e-12);
}

TEST(Field, InverseDistanceLaw)
{
    const Vec3 dir{0.3, 0.8, -0.2};
    const double u = norm(dir);
    for (double r : {0.1, 0.5, 2.0})
    {
        const ComplexVec3 e = element_field({0, 0, 0}, 1.0, dir * (r / u), k3);
        EXPECT_NEAR(magnitude(e) * r, 1.0, 1e-12);
    }
}

TEST(Field, SuperpositionProperties)
{
    const ArrayGeometry one = ArrayGeometry::centered(1, 1, lambda3 / 2, lambda3);
    const Excitation ex1{{std::complex<double>(0.3, -0.4)}};
    const ObservationGrid grid = ObservationGrid::custom({{0.01, 0.2, 0.03}, {-0.05, 0.1, 0.0}});
    const FieldGrid f = total_field(one, ex1, grid);
    for (std::size_t i = 0; i < grid.size(); ++i)
    {
        const ComplexVec3 e = element_field({0, 0, 0}, ex1.currents[0], grid.point(i), k3);
        EXPECT_EQ(f.field[i], e);
    }

    Excitation neg = ex1;
    neg.currents[0] = -neg.currents[0];
    const FieldGrid fn = total_field(one, neg, grid);
    for (std::size_t i = 0; i < grid.size(); ++i)
    {
        EXPECT_EQ(fn.field[i].x, -f.field[i].x);
        EXPECT_EQ(fn.field[i].z, -f.field[i].z);
    }

    const ArrayGeometry a = ArrayGeometry::centered(4, 4, lambda3 / 2, lambda3);
    const FieldGrid zero = total_field(a, Excitation{std::vector<std::complex<double>>(16)}, grid);
    for (const ComplexVec3 &e : zero.field)
        EXPECT_EQ(magnitude(e), 0.0);
}

TEST(Field, SymmetricQuadCancelsTransverseComponentsOnAxis)
{
    const ArrayGeometry a = ArrayGeometry::centered(2, 2, lambda3 / 2, lambda3);
    const Excitation exc{std::vector<std::complex<double>>(4, 1.0)};
    const FieldGrid f = total_field(a, exc, ObservationGrid::custom({{0, 0.1, 0}, {0, 0.3, 0}}));
    for (const ComplexVec3 &e : f.field)
    {
        EXPECT_LE(std::abs(e.x), 1e-12 * std::abs(e.z));
        EXPECT_LE(std::abs(e.y), 1e-12 * std::abs(e.z));
        EXPECT_GT(std::abs(e.z), 0.0);
    }
}

TEST(Field, LinearAndDeterministic)
{
    const ArrayGeometry a = ArrayGeometry::centered(6, 5, lambda3 / 2, lambda3);
    std::mt19937_64 rng(10);
    std::normal_distribution<double> g;
    Excitation e1, e2, sum;
    for (std::size_t n = 0; n < a.size(); ++n)
    {
        e1.currents.emplace_back(g(rng), g(rng));
        e2.currents.emplace_back(g(rng), g(rng));
        sum.currents.push_back(e1.currents.back() + e2.currents.back());
    }
    const ObservationGrid grid = ObservationGrid::planar(ObservationGrid::Plane::XY, 0.0, -0.05, 0.05, 7, 0.05, 0.1, 5);
    const FieldGrid f1 = total_field(a, e1, grid), f2 = total_field(a, e2, grid), fs = total_field(a, sum, grid);
    for (std::size_t i = 0; i < grid.size(); ++i)
    {
        ComplexVec3 s = f1.field[i];
        s += f2.field[i];
        EXPECT_LE(max_diff(s, fs.field[i]), 1e-12 * magnitude(fs.field[i]));
    }
    const FieldGrid again = total_field(a, e1, grid);
    EXPECT_EQ(again.field, f1.field);
}

TEST(Field, PointErrorsCarryTheOffendingIndex)
{
    const ArrayGeometry a = ArrayGeometry::centered(2, 2, lambda3 / 2, lambda3);
    const Excitation exc{std::vector<std::complex<double>>(4, 1.0)};
    const Vec3 far{0, 1, 0};
    try
    {
        total_field(a, exc, ObservationGrid::custom({far, far, a.position(3)}));
        FAIL() << "expected CoincidentPoint";
    }
    catch (const CoincidentPoint &e)
    {
        EXPECT_EQ(e.index(), 2u);
    }
    try
    {
        total_field(a, exc, ObservationGrid::custom({far, {0, 5 * lambda3, 0}}));
        FAIL() << "expected NearFieldViolation";
    }
    catch (const NearFieldViolation &e)
    {
        EXPECT_EQ(e.index(), 1u);
    }
    EXPECT_NEAR(min_observation_distance(lambda3), 10 * lambda3, 1e-18);
}

TEST(Field, PlanarGridLayout)
{
    const ObservationGrid g = ObservationGrid::planar(ObservationGrid::Plane::YZ, 0.01, 0.1, 0.2, 3, -0.1, 0.1, 5);
    EXPECT_EQ(g.size(), 15u);
    const Vec3 p = g.point(1 * 5 + 4);
    EXPECT_DOUBLE_EQ(p.x, 0.01);
    EXPECT_DOUBLE_EQ(p.y, 0.15);
    EXPECT_DOUBLE_EQ(p.z, 0.1);
    const Vec3 uv = g.to_plane_coords(p);
    EXPECT_DOUBLE_EQ(uv.x, 0.15);
    EXPECT_DOUBLE_EQ(uv.y, 0.1);
    EXPECT_EQ(plane_from_string("xz"), ObservationGrid::Plane::XZ);
    EXPECT_EQ(to_string(ObservationGrid::Plane::XY), "xy");
    EXPECT_THROW(plane_from_string("ab"), InvalidArgument);
    EXPECT_THROW(ObservationGrid::planar(ObservationGrid::Plane::XY, 0, 0, 1, 0, 0, 1, 2), InvalidArgument);
}
