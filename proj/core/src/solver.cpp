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

#include "nfsteer/solver.hpp"

#include "nfsteer/errors.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <limits>
#include <optional>

namespace nfsteer
{

void SolverConfig::validate() const
{
    if (max_iterations <= 0 || !(residual_tol > 0.0) || oracle_grid < 2 || !(oracle_halfwidth > 0.0) ||
        !(apex_guard > 0.0) || !(apex_perturbation > 0.0))
        throw InvalidArgument("solver configuration values must be positive (oracle_grid >= 2)");
}

namespace
{

struct Residual
{
    double f = 0.0;
    SurfaceGradient g;
    double e = 0.0; // f - y_elem
    double r1 = 0.0;
    double r2 = 0.0;
    double norm = 0.0;
};

// Reduced system after eliminating t: the gradient of half the squared
// distance with respect to the foot coordinates (u, v) = (x', z').
Residual residual_at(const Wavefront &w, const Vec3 &q, double u, double v)
{
    Residual r;
    r.f = w.eval(u, v);
    r.g = w.gradient(u, v);
    r.e = r.f - q.y;
    r.r1 = (u - q.x) + r.e * r.g.dx;
    r.r2 = (v - q.z) + r.e * r.g.dz;
    r.norm = std::hypot(r.r1, r.r2);
    return r;
}

double half_sq_distance(const Wavefront &w, const Vec3 &q, double u, double v)
{
    const double du = u - q.x, dy = w.eval(u, v) - q.y, dv = v - q.z;
    return 0.5 * (du * du + dy * dy + dv * dv);
}

FootSolution make_solution(const Vec3 &q, double u, double v, const Residual &r, int iterations)
{
    FootSolution s;
    s.element_primed = q;
    s.foot = {u, r.f, v};
    s.t = r.e;
    const Vec3 n{r.g.dx, -1.0, r.g.dz};
    s.signed_distance = s.t * norm(n);
    const Vec3 line_point = q - s.t * n;
    s.residual = norm(s.foot - line_point);
    s.iterations = iterations;
    s.converged = true;
    return s;
}

FootSolution newton_foot(const Wavefront &w, const Vec3 &q, double u, double v, const SolverConfig &cfg)
{
    Residual r = residual_at(w, q, u, v);
    for (int it = 0; it < cfg.max_iterations; ++it)
    {
        if (r.norm <= cfg.residual_tol)
            return make_solution(q, u, v, r, it);

        const SurfaceHessian h = w.hessian(u, v);
        double j11 = 1.0 + r.g.dx * r.g.dx + r.e * h.xx;
        double j12 = r.g.dx * r.g.dz + r.e * h.xz;
        double j22 = 1.0 + r.g.dz * r.g.dz + r.e * h.zz;

        // Shift to a positive definite matrix so the step is a descent
        // direction for the squared distance (saddles on a cone's far side).
        const double tr = j11 + j22;
        const double det = j11 * j22 - j12 * j12;
        const double lambda_min = 0.5 * (tr - std::sqrt(std::max(0.0, tr * tr - 4.0 * det)));
        if (!(lambda_min > 0.0))
        {
            const double mu = -lambda_min + 1e-3 * std::max(1.0, std::abs(tr));
            j11 += mu;
            j22 += mu;
        }
        const double d = j11 * j22 - j12 * j12;
        const double du = -(j22 * r.r1 - j12 * r.r2) / d;
        const double dv = -(j11 * r.r2 - j12 * r.r1) / d;

        const double g0 = half_sq_distance(w, q, u, v);
        bool accepted = false;
        double alpha = 1.0;
        for (int ls = 0; ls < 40; ++ls, alpha *= 0.5)
        {
            const double un = u + alpha * du, vn = v + alpha * dv;
            Residual rn;
            try
            {
                rn = residual_at(w, q, un, vn);
            }
            catch (const ApexSingularity &)
            {
                continue;
            }
            if (half_sq_distance(w, q, un, vn) <= g0 || rn.norm < r.norm)
            {
                u = un;
                v = vn;
                r = rn;
                accepted = true;
                break;
            }
        }
        if (!accepted)
            break;
    }
    if (r.norm <= cfg.residual_tol)
        return make_solution(q, u, v, r, cfg.max_iterations);
    throw NonConvergence(cfg.max_iterations, r.norm);
}

} // namespace

FootSolution solve_foot(const SteeredWavefront &w, const Vec3 &element_pos, const SolverConfig &cfg)
{
    const Wavefront &base = w.base();
    const Vec3 q = to_primed(w.rotation(), element_pos);
    const bool cone = base.kind() == Wavefront::Kind::Cone;

    double u0 = q.x, v0 = q.z;
    if (cone)
    {
        const double rho = std::hypot(u0, v0);
        if (rho < cfg.apex_guard)
        {
            if (rho == 0.0)
                u0 = cfg.apex_perturbation;
            else
            {
                u0 += cfg.apex_perturbation * u0 / rho;
                v0 += cfg.apex_perturbation * v0 / rho;
            }
        }
    }

    std::optional<FootSolution> best;
    std::exception_ptr failure;
    auto attempt = [&](double u, double v) {
        try
        {
            FootSolution s = newton_foot(base, q, u, v, cfg);
            if (!best || std::abs(s.signed_distance) < std::abs(best->signed_distance))
                best = s;
        }
        catch (const NumericalError &)
        {
            if (!failure)
                failure = std::current_exception();
        }
    };

    attempt(u0, v0);
    if (cone)
        attempt(-u0, -v0);

    if (cone)
    {
        // The apex is the nearest point when the element sits inside the
        // normal cone of the apex (rho + s y <= 0); Newton cannot converge there.
        const double apex_distance = norm(q);
        const bool apex_nearest = std::hypot(q.x, q.z) + base.h_over_r() * q.y <= 0.0;
        if ((best && apex_distance < std::abs(best->signed_distance)) || (!best && apex_nearest))
        {
            FootSolution s;
            s.element_primed = q;
            s.foot = {0.0, 0.0, 0.0};
            s.t = -q.y;
            const bool behind = q.y < base.eval(q.x, q.z);
            s.signed_distance = behind ? apex_distance : -apex_distance;
            s.residual = 0.0;
            s.iterations = best ? best->iterations : cfg.max_iterations;
            s.converged = true;
            s.at_apex = true;
            best = s;
        }
    }

    if (!best)
        std::rethrow_exception(failure);
    return *best;
}

double oracle_cell_diagonal(const SolverConfig &cfg)
{
    return std::sqrt(2.0) * 2.0 * cfg.oracle_halfwidth / static_cast<double>(cfg.oracle_grid - 1);
}

double oracle_min_distance(const SteeredWavefront &w, const Vec3 &element_pos, const SolverConfig &cfg)
{
    cfg.validate();
    const Wavefront &base = w.base();
    const Vec3 q = to_primed(w.rotation(), element_pos);
    auto fd = [&](double u, double v) {
        const double du = u - q.x, dy = base.eval(u, v) - q.y, dv = v - q.z;
        return du * du + dy * dy + dv * dv;
    };

    const int n = cfg.oracle_grid;
    const double hw = cfg.oracle_halfwidth;
    const double step = 2.0 * hw / static_cast<double>(n - 1);
    double best = std::numeric_limits<double>::infinity();
    double best_u = q.x, best_v = q.z;
    for (int i = 0; i < n; ++i)
    {
        const double u = q.x - hw + step * i;
        for (int j = 0; j < n; ++j)
        {
            const double v = q.z - hw + step * j;
            const double value = fd(u, v);
            if (value < best)
            {
                best = value;
                best_u = u;
                best_v = v;
            }
        }
    }

    // One golden-section pass per axis over the neighbouring cells.
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    auto golden = [&](auto &&fn, double lo, double hi) {
        double c = hi - inv_phi * (hi - lo), d = lo + inv_phi * (hi - lo);
        double fc = fn(c), fdd = fn(d);
        for (int k = 0; k < 80 && (hi - lo) > 1e-15 * std::max(1.0, std::abs(lo)); ++k)
        {
            if (fc < fdd)
            {
                hi = d;
                d = c;
                fdd = fc;
                c = hi - inv_phi * (hi - lo);
                fc = fn(c);
            }
            else
            {
                lo = c;
                c = d;
                fc = fdd;
                d = lo + inv_phi * (hi - lo);
                fdd = fn(d);
            }
        }
        return 0.5 * (lo + hi);
    };

    const double u_ref = golden([&](double u) { return fd(u, best_v); }, best_u - step, best_u + step);
    if (const double value = fd(u_ref, best_v); value < best)
    {
        best = value;
        best_u = u_ref;
    }
    const double v_ref = golden([&](double v) { return fd(best_u, v); }, best_v - step, best_v + step);
    if (const double value = fd(best_u, v_ref); value < best)
        best = value;
    return std::sqrt(best);
}

double plane_distance_closed_form(const SteeringAngles &angles, const Vec3 &element_pos)
{
    return element_pos.x * std::cos(angles.elevation()) * std::sin(angles.azimuth()) +
           element_pos.z * std::sin(angles.elevation());
}

double cone_distance_closed_form(double h_over_r, const Vec3 &element_primed)
{
    const double s = h_over_r;
    const double rho = std::hypot(element_primed.x, element_primed.z);
    const double y = element_primed.y;
    const double len = std::sqrt(1.0 + s * s);
    const double along = (rho + s * y) / len;
    const double distance = along <= 0.0 ? std::hypot(rho, y) : std::abs(s * rho - y) / len;
    return y < s * rho ? distance : -distance;
}

ElementDistance element_distance(const SteeredWavefront &w, const Vec3 &element_pos, const SolverConfig &cfg)
{
    try
    {
        const FootSolution s = solve_foot(w, element_pos, cfg);
        return {s.signed_distance, false, s.iterations};
    }
    catch (const NumericalError &)
    {
    }
    const double d = oracle_min_distance(w, element_pos, cfg);
    if (!std::isfinite(d))
        throw SolverFailure("both Newton and oracle failed for element");
    const Vec3 q = to_primed(w.rotation(), element_pos);
    const bool behind = q.y < w.base().eval(q.x, q.z);
    return {behind ? d : -d, true, cfg.max_iterations};
}

} // namespace nfsteer
