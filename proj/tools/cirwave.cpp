// SPDX-License-Identifier: Apache-2.0
//
// cirwave: two-center scattering in a harmonic waveguide
// Copyright (C) 2026 The cirwave contributors
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

#include <cirwave/cirwave.hpp>

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>

using namespace cirwave;
using io::json;

namespace
{

enum Exit
{
    ok = 0,
    config_error = 1,
    numerical_failure = 2,
    check_failure = 3
};

json complex_json(cplx z) { return json::array({z.real(), z.imag()}); }

json optional_json(const std::optional<double> &v) { return v ? json(*v) : json(nullptr); }

WaveguideParams params_from(double k, double a, std::optional<double> q)
{
    WaveguideParams p{k, a, q ? Coupling::ratio(*q) : Coupling::none()};
    return validate(p);
}

int cmd_amplitudes(double k, double a, std::optional<double> q, double tol)
{
    const SeriesOptions opt{tol};
    const WaveguideParams p = params_from(k, a, q);
    const RegularizedSums s = sums_for(p, opt);
    const AmplitudePair f = amplitudes(p, opt);
    const TransmissionSet t = transmissions(f);
    json out;
    out["ka_perp"] = k;
    out["a_over_aperp"] = a;
    out["aperp_over_a3d"] = q ? json(*q) : json("none");
    out["sums"] = {{"alpha", s.alpha}, {"beta", s.beta}, {"gamma", s.gamma}};
    out["f_e"] = complex_json(f.f_e);
    out["f_o"] = f.odd_defined ? complex_json(f.f_o) : json(nullptr);
    out["T_tot"] = t.t_tot;
    out["T_e"] = t.t_e;
    out["T_o"] = t.t_o;
    out["R"] = t.r;
    try
    {
        const auto g = g1d(p, f);
        out["g_plus"] = complex_json(g.g_plus);
        out["g_minus"] = complex_json(g.g_minus);
    }
    catch (const Error &e)
    {
        if (e.code() != ErrorCode::AtResonance)
            throw;
        out["g_plus"] = nullptr;
        out["g_minus"] = nullptr;
        out["flag"] = "resonance";
    }
    std::cout << out.dump(2) << '\n';
    return ok;
}

int cmd_cir(double k, double a, double tol, bool numeric)
{
    const SeriesOptions opt{tol};
    const WaveguideParams p = params_from(k, a, 1.0);
    const CirSolutions c = cir_solutions(p, opt);
    json out;
    out["ka_perp"] = k;
    out["a_over_aperp"] = a;
    out["total_plus"] = optional_json(c.total_plus);
    out["total_minus"] = optional_json(c.total_minus);
    out["discriminant"] = p.single_center() ? json(nullptr) : json(c.discriminant);
    out["even"] = c.even;
    out["odd"] = optional_json(c.odd);
    out["dual"] = optional_json(c.dual);
    if (numeric && !p.single_center())
    {
        json n;
        for (auto kind : {ExtremumKind::t_tot_min, ExtremumKind::t_e_min, ExtremumKind::t_o_min, ExtremumKind::r_zero})
        {
            try
            {
                n[to_string(kind)] = find_extrema_numeric(p, -10.0, 10.0, kind, opt);
            }
            catch (const Error &e)
            {
                if (e.code() != ErrorCode::NotBracketed)
                    throw;
                n[to_string(kind)] = json::array();
            }
        }
        out["numeric"] = n;
    }
    std::cout << out.dump(2) << '\n';
    return ok;
}

void write_file(const std::filesystem::path &path, const std::string &text)
{
    std::ofstream f(path, std::ios::binary);
    if (!f)
        throw Error(ErrorCode::ConfigError, "cannot write " + path.string());
    f << text;
}

int cmd_sweep(const std::optional<std::string> &config, const io::FlagValues &flags, const std::string &out_path,
              const std::string &manifest_path)
{
    const io::LoadedConfig lc = io::load_config(config, flags);
    for (const auto &w : lc.warnings)
        std::cerr << "warning: " << w << '\n';
    const io::Table t = io::run_sweep(lc.config);
    std::ostringstream body;
    io::write_table(t, lc.config.format, body);
    if (out_path.empty())
        std::cout << body.str();
    else
        write_file(out_path, body.str());
    if (!manifest_path.empty())
        write_file(manifest_path,
                   io::sweep_manifest(lc.config, out_path.empty() ? "-" : out_path).dump(2) + "\n");
    return ok;
}

int cmd_figure(std::string id, const std::string &out_dir, double tol, const std::string &manifest)
{
    if (!manifest.empty())
    {
        const json m = io::read_json_file(manifest);
        if (!m.contains("figure") || !m["figure"].is_string())
            throw Error(ErrorCode::ParseError, manifest + ": manifest has no 'figure' field");
        id = m["figure"].get<std::string>();
        if (m.contains("tolerance") && m["tolerance"].is_number())
            tol = m["tolerance"].get<double>();
    }
    const io::FigureData d = io::figure_data(id, tol);
    std::filesystem::create_directories(out_dir);
    std::ostringstream body;
    io::write_csv(d.table, body);
    write_file(std::filesystem::path(out_dir) / ("fig" + id + ".csv"), body.str());
    write_file(std::filesystem::path(out_dir) / ("fig" + id + ".manifest.json"), d.manifest.dump(2) + "\n");
    std::cout << "wrote " << (std::filesystem::path(out_dir) / ("fig" + id + ".csv")).string() << " ("
              << d.table.rows.size() << " rows)\n";
    return ok;
}

int cmd_verify(std::uint64_t seed)
{
    bool all = true;
    for (const auto &r : check::run_all(seed))
    {
        std::cout << (r.passed ? "PASS " : "FAIL ") << r.name << ": " << r.measured << " (limit " << r.threshold
                  << ")\n";
        all = all && r.passed;
    }
    return all ? ok : check_failure;
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"cirwave: two-center scattering in a harmonic waveguide"};
    app.require_subcommand(1);
    app.set_version_flag("--version", io::artifact_version);

    double k = 0.0707, a = 0.5, tol = 1e-13;
    std::optional<double> q;
    bool no_interaction = false, numeric = false;

    auto *amp = app.add_subcommand("amplitudes", "even/odd amplitudes, transmissions and 1D couplings at one point");
    amp->add_option("--ka-perp", k, "k a_perp in (0, 2)")->required();
    amp->add_option("--a", a, "half separation a/a_perp")->required();
    auto *qopt = amp->add_option("--inv-ratio", q, "a_perp/a_3D");
    amp->add_flag("--no-interaction", no_interaction, "a_3D -> 0")->excludes(qopt);
    amp->add_option("--tolerance", tol, "series tolerance");

    auto *cir = app.add_subcommand("cir", "resonance positions in a_perp/a_3D");
    cir->add_option("--ka-perp", k)->required();
    cir->add_option("--a", a)->required();
    cir->add_option("--tolerance", tol);
    cir->add_flag("--numeric", numeric, "also locate the features numerically on [-10, 10]");

    io::FlagValues flags;
    std::optional<std::string> config;
    std::string out_path, manifest_path;
    auto *sweep = app.add_subcommand("sweep", "parameter sweep over ka, a and a_perp/a_3D");
    sweep->add_option("--config", config, "JSON config (or manifest) file");
    sweep->add_option("--ka-perp", flags.ka_perp, "comma separated list");
    sweep->add_option("--a", flags.a_half_sep, "comma separated list");
    sweep->add_option("--ratio", flags.ratio, "lo:hi:count");
    sweep->add_option("--outputs", flags.outputs, "comma separated subset of t_tot,t_e,t_o,r,f_e,f_o,g1d,cir");
    sweep->add_option("--format", flags.format, "csv or json");
    sweep->add_option("--tolerance", flags.tolerance);
    sweep->add_option("--threads", flags.threads);
    sweep->add_option("--out", out_path, "output file (default stdout)");
    sweep->add_option("--manifest", manifest_path, "write a manifest next to the data");

    std::string fig_id, out_dir = ".", fig_manifest;
    auto *fig = app.add_subcommand("figure", "emit the data behind a figure: 2 3a 3b 4a 4b 5 6 7a 7b");
    fig->add_option("id", fig_id);
    fig->add_option("--out-dir", out_dir);
    fig->add_option("--tolerance", tol);
    fig->add_option("--manifest", fig_manifest, "regenerate from a manifest");

    std::uint64_t seed = 20260101;
    auto *ver = app.add_subcommand("verify", "run the invariant suite and roundtrips");
    ver->add_option("--seed", seed);

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError &e)
    {
        const int code = app.exit(e);
        return code == 0 ? ok : config_error;
    }

    try
    {
        if (*amp)
        {
            if (!q && !no_interaction)
                throw Error(ErrorCode::ConfigError, "amplitudes needs --inv-ratio or --no-interaction");
            return cmd_amplitudes(k, a, q, tol);
        }
        if (*cir)
            return cmd_cir(k, a, tol, numeric);
        if (*sweep)
            return cmd_sweep(config, flags, out_path, manifest_path);
        if (*fig)
        {
            if (fig_id.empty() && fig_manifest.empty())
                throw Error(ErrorCode::ConfigError, "figure needs an id or --manifest");
            return cmd_figure(fig_id, out_dir, tol, fig_manifest);
        }
        if (*ver)
            return cmd_verify(seed);
    }
    catch (const Error &e)
    {
        std::cerr << "error: " << e.what() << '\n';
        return is_numerical(e.code()) ? numerical_failure : config_error;
    }
    catch (const std::exception &e)
    {
        std::cerr << "error: " << e.what() << '\n';
        return config_error;
    }
    return ok;
}
