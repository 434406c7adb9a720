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

#include "nfsteer/config.hpp"
#include "nfsteer/errors.hpp"
#include "nfsteer/pipeline.hpp"
#include "nfsteer/validation.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace
{

constexpr int exit_ok = 0;
constexpr int exit_io = 1;
constexpr int exit_config = 2;
constexpr int exit_numerical = 3;

struct CommonArgs
{
    std::string config_path;
    std::string out_dir = ".";
    nfsteer::ConfigOverrides overrides;
};

void add_common(CLI::App *cmd, CommonArgs &args)
{
    cmd->add_option("-c,--config", args.config_path, "JSON configuration file (defaults used when omitted)");
    cmd->add_option("--out-dir", args.out_dir, "Directory for relative output paths");
    cmd->add_option("--az-deg", args.overrides.azimuth_deg, "Steering azimuth in degrees");
    cmd->add_option("--el-deg", args.overrides.elevation_deg, "Steering elevation in degrees");
    cmd->add_option("--beam", args.overrides.beam, "Beam kind: gaussian or bessel");
    cmd->add_option("--h-over-r", args.overrides.h_over_r, "Cone slope h/r of the Bessel wavefront");
    cmd->add_option("--freq-ghz", args.overrides.frequency_ghz, "Carrier frequency in GHz");
    cmd->add_option("--nx", args.overrides.n_x, "Elements along x");
    cmd->add_option("--nz", args.overrides.n_z, "Elements along z");
}

nfsteer::SimulationConfig build_config(const CommonArgs &args)
{
    nfsteer::SimulationConfig cfg = args.config_path.empty() ? nfsteer::SimulationConfig{}
                                                              : nfsteer::load_config(args.config_path);
    nfsteer::apply_overrides(cfg, args.overrides);
    return cfg;
}

int run_stage(const CommonArgs &args, nfsteer::Stage stage)
{
    const auto start = std::chrono::steady_clock::now();
    const nfsteer::SimulationConfig cfg = build_config(args);
    const nfsteer::PipelineResult res = nfsteer::run_pipeline(cfg, stage, args.out_dir);
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

    std::cout << "beam: " << cfg.beam.kind << "\n";
    std::cout << "array: " << cfg.array.n_x << " x " << cfg.array.n_z << "\n";
    std::cout << "steering_deg: " << cfg.steering.azimuth_deg << ", " << cfg.steering.elevation_deg << "\n";
    if (res.phase.oracle_fallbacks > 0)
        std::cout << "oracle_fallbacks: " << res.phase.oracle_fallbacks << "\n";
    if (res.beam)
        std::cout << "peak_direction_deg: " << nfsteer::rad_to_deg(res.beam->estimated_azimuth) << ", "
                  << nfsteer::rad_to_deg(res.beam->estimated_elevation) << "\n";
    if (res.polarization)
        std::cout << "power_fractions_xyz: " << res.polarization->fraction_x << ", " << res.polarization->fraction_y
                  << ", " << res.polarization->fraction_z << "\n";
    for (const auto &p : res.written)
        std::cout << "wrote: " << p.string() << "\n";
    std::cout << "runtime_s: " << seconds << "\n";
    return exit_ok;
}

int run_validate(const std::optional<std::string> &checks, double inject, int oracle_cases)
{
    nfsteer::ValidationOptions opt;
    opt.inject_distance_error = inject;
    opt.oracle_cases = oracle_cases;
    if (checks)
    {
        std::vector<std::string> names;
        std::string item;
        for (char ch : *checks + ",")
        {
            if (ch == ',')
            {
                if (!item.empty())
                    names.push_back(item);
                item.clear();
            }
            else if (ch != ' ')
                item += ch;
        }
        opt.checks = names;
    }
    const auto results = nfsteer::run_validation(opt);
    bool all = true;
    for (const auto &r : results)
    {
        all = all && r.passed;
        std::printf("[%s] %-28s max_error=%.3e tol=%.3e  %s\n", r.passed ? "PASS" : "FAIL", r.name.c_str(),
                    r.max_error, r.tolerance, r.detail.c_str());
    }
    std::printf("%zu/%zu checks passed\n",
                static_cast<std::size_t>(std::count_if(results.begin(), results.end(),
                                                       [](const auto &r) { return r.passed; })),
                results.size());
    return all ? exit_ok : exit_numerical;
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"nfsteer: near-field beam steering for planar antenna arrays"};
    app.require_subcommand(1);

    CommonArgs synth_args, field_args, analyze_args, run_args;
    auto *synth = app.add_subcommand("synthesize", "Compute the per-element phase distribution");
    add_common(synth, synth_args);
    auto *field = app.add_subcommand("field", "Synthesize and compute the near field on the observation grid");
    add_common(field, field_args);
    auto *analyze = app.add_subcommand("analyze", "Field plus polarization, direction and profile analysis");
    add_common(analyze, analyze_args);
    auto *run = app.add_subcommand("run", "Full pipeline writing every configured output");
    add_common(run, run_args);

    std::optional<std::string> checks;
    double inject = 0.0;
    int oracle_cases = 200;
    auto *validate = app.add_subcommand("validate", "Run the solver and field invariant suites");
    validate->add_option("--checks", checks, "Comma separated subset of checks");
    validate->add_option("--inject-distance-error", inject, "Add this many meters to every solved distance");
    validate->add_option("--oracle-cases", oracle_cases, "Randomized cases for the solver/oracle check");
    validate->add_flag_callback(
        "--list", [] {
            for (const auto &n : nfsteer::available_checks())
                std::cout << n << "\n";
            std::exit(exit_ok);
        },
        "List available checks");

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError &e)
    {
        const int code = app.exit(e);
        return code == 0 ? exit_ok : exit_config;
    }

    try
    {
        if (*synth)
            return run_stage(synth_args, nfsteer::Stage::Synthesize);
        if (*field)
            return run_stage(field_args, nfsteer::Stage::Field);
        if (*analyze)
            return run_stage(analyze_args, nfsteer::Stage::Analyze);
        if (*run)
            return run_stage(run_args, nfsteer::Stage::Run);
        if (*validate)
            return run_validate(checks, inject, oracle_cases);
    }
    catch (const nfsteer::ConfigError &e)
    {
        std::cerr << "config error: " << e.what() << "\n";
        return exit_config;
    }
    catch (const nfsteer::InvalidArgument &e)
    {
        std::cerr << "invalid argument: " << e.what() << "\n";
        return exit_config;
    }
    catch (const nfsteer::NumericalError &e)
    {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return exit_numerical;
    }
    catch (const nfsteer::PointError &e)
    {
        std::cerr << "observation grid error: " << e.what() << "\n";
        return exit_config;
    }
    catch (const nfsteer::Error &e)
    {
        std::cerr << "error: " << e.what() << "\n";
        return exit_io;
    }
    return exit_ok;
}
