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

#include "nfsteer/synthesis.hpp"

#include "nfsteer/errors.hpp"
#include "parallel.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>

namespace nfsteer
{

double wavelength_from_frequency(double frequency_hz)
{
    if (!(frequency_hz > 0.0) || !std::isfinite(frequency_hz))
        throw InvalidArgument("frequency must be positive");
    return speed_of_light / frequency_hz;
}

ArrayGeometry ArrayGeometry::centered(int n_x, int n_z, double spacing, double wavelength)
{
    if (n_x <= 0 || n_z <= 0)
        throw InvalidArgument("array needs at least one element per axis");
    if (!(spacing > 0.0) || !std::isfinite(spacing))
        throw InvalidArgument("element spacing must be positive");
    if (!(wavelength > 0.0) || !std::isfinite(wavelength))
        throw InvalidArgument("wavelength must be positive");

    ArrayGeometry a;
    a.n_x_ = n_x;
    a.n_z_ = n_z;
    a.spacing_ = spacing;
    a.wavelength_ = wavelength;
    a.positions_.reserve(static_cast<std::size_t>(n_x) * n_z);
    const double cx = 0.5 * (n_x - 1), cz = 0.5 * (n_z - 1);
    for (int i = 0; i < n_x; ++i)
        for (int j = 0; j < n_z; ++j)
            a.positions_.push_back({(i - cx) * spacing, 0.0, (j - cz) * spacing});
    return a;
}

ArrayGeometry ArrayGeometry::from_frequency(int n_x, int n_z, double spacing_wavelengths, double frequency_hz)
{
    const double lambda = wavelength_from_frequency(frequency_hz);
    return centered(n_x, n_z, spacing_wavelengths * lambda, lambda);
}

double ArrayGeometry::aperture_half_diagonal() const { return 0.5 * std::hypot(aperture_x(), aperture_z()); }

double phase_shift(double distance, double wavelength) { return two_pi * distance / wavelength; }

SolverConfig solver_config_for(const ArrayGeometry &array, SolverConfig base)
{
    const double aperture = std::max(array.aperture_x(), array.aperture_z());
    base.oracle_halfwidth = 4.0 * aperture;
    base.apex_guard = 1e-3 * aperture;
    base.apex_perturbation = array.spacing();
    return base;
}

PhaseDistribution synthesize(const ArrayGeometry &array, const SteeredWavefront &w, const SolverConfig &cfg,
                             const SynthesisOptions &options)
{
    const SolverConfig solver = options.scale_solver_to_array ? solver_config_for(array, cfg) : cfg;
    solver.validate();

    PhaseDistribution pd;
    pd.n_x = array.n_x();
    pd.n_z = array.n_z();
    pd.wavelength = array.wavelength();
    pd.positions = array.positions();
    pd.signed_distance.assign(array.size(), 0.0);
    pd.phase.assign(array.size(), 0.0);

    const bool closed_form = options.closed_form_plane && w.base().kind() == Wavefront::Kind::Plane;
    std::atomic<std::size_t> fallbacks{0};
    detail::parallel_for(array.size(), [&](std::size_t n) {
        const Vec3 &p = array.position(n);
        double d = 0.0;
        if (closed_form)
            d = plane_distance_closed_form(w.angles(), p);
        else
        {
            const ElementDistance ed = element_distance(w, p, solver);
            if (ed.used_oracle)
                fallbacks.fetch_add(1, std::memory_order_relaxed);
            d = ed.signed_distance;
        }
        pd.signed_distance[n] = d;
        pd.phase[n] = phase_shift(d, array.wavelength());
    });
    pd.oracle_fallbacks = fallbacks.load();
    return pd;
}

Excitation to_excitation(const PhaseDistribution &pd)
{
    Excitation exc;
    exc.currents.reserve(pd.size());
    for (double phi : pd.phase)
        exc.currents.emplace_back(std::cos(phi), std::sin(phi));
    return exc;
}

double wrap_angle(double phase)
{
    double w = phase - two_pi * std::floor(phase / two_pi);
    if (w >= two_pi || w < 0.0)
        w = 0.0;
    return w;
}

PhaseDistribution wrap_phase(const PhaseDistribution &pd)
{
    PhaseDistribution out = pd;
    std::transform(out.phase.begin(), out.phase.end(), out.phase.begin(), wrap_angle);
    return out;
}

} // namespace nfsteer
