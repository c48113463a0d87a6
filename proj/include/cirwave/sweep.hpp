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

#ifndef CIRWAVE_SWEEP_HPP
#define CIRWAVE_SWEEP_HPP

#include <cirwave/cir.hpp>
#include <cirwave/effective1d.hpp>
#include <cirwave/error.hpp>
#include <cirwave/params.hpp>
#include <cirwave/regsums.hpp>
#include <cirwave/scattering.hpp>

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <thread>
#include <variant>
#include <vector>

namespace cirwave::io
{

inline constexpr const char *artifact_version = "0.1.0";

using json = nlohmann::ordered_json;

struct RatioRange
{
    double lo = 0.05, hi = 6.0;
    std::size_t count = 500;

    double at(std::size_t i) const
    {
        if (i + 1 == count)
            return hi;
        return lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(count - 1);
    }
};

struct SweepConfig
{
    std::vector<double> ka_perp{0.0707};
    std::vector<double> a_half_sep{0.5};
    RatioRange ratio;
    std::vector<std::string> outputs{"t_tot", "t_e", "t_o", "r"};
    std::string format = "csv";
    double tolerance = 1e-13;
    unsigned threads = 0; // 0: hardware concurrency
};

inline const std::vector<std::string> &known_outputs()
{
    static const std::vector<std::string> v{"t_tot", "t_e", "t_o", "r", "f_e", "f_o", "g1d", "cir"};
    return v;
}

inline bool wants(const SweepConfig &c, const std::string &o)
{
    return std::find(c.outputs.begin(), c.outputs.end(), o) != c.outputs.end();
}

inline void validate_config(const SweepConfig &c)
{
    auto fail = [](const std::string &path, const std::string &msg, double v = std::nan("")) {
        throw Error(ErrorCode::ConfigError, path + ": " + msg, v);
    };
    if (c.ka_perp.empty())
        fail("ka_perp", "at least one value required");
    for (std::size_t i = 0; i < c.ka_perp.size(); ++i)
        if (!std::isfinite(c.ka_perp[i]) || !(c.ka_perp[i] > 0.0 && c.ka_perp[i] < 2.0))
            fail("ka_perp[" + std::to_string(i) + "]", "must lie in (0, 2)", c.ka_perp[i]);
    if (c.a_half_sep.empty())
        fail("a_half_sep", "at least one value required");
    for (std::size_t i = 0; i < c.a_half_sep.size(); ++i)
        if (!std::isfinite(c.a_half_sep[i]) || c.a_half_sep[i] < 0.0)
            fail("a_half_sep[" + std::to_string(i) + "]", "must be finite and >= 0", c.a_half_sep[i]);
    if (c.ratio.count < 2)
        fail("ratio_range.count", "must be >= 2", static_cast<double>(c.ratio.count));
    if (!std::isfinite(c.ratio.lo) || !std::isfinite(c.ratio.hi) || !(c.ratio.lo < c.ratio.hi))
        fail("ratio_range", "needs finite lo < hi");
    for (std::size_t i = 0; i < c.outputs.size(); ++i)
    {
        const auto &k = known_outputs();
        if (std::find(k.begin(), k.end(), c.outputs[i]) == k.end())
            fail("outputs[" + std::to_string(i) + "]", "unknown output '" + c.outputs[i] + "'");
    }
    if (c.format != "csv" && c.format != "json")
        fail("format", "must be csv or json");
    if (!std::isfinite(c.tolerance) || !(c.tolerance > 0.0))
        fail("tolerance", "must be a positive real", c.tolerance);
}

// ---------------------------------------------------------------- parsing

inline double parse_real(const std::string &s, const std::string &path)
{
    double v = 0.0;
    const char *b = s.data(), *e = s.data() + s.size();
    while (b < e && *b == ' ')
        ++b;
    if (b < e && *b == '+')
        ++b;
    auto [ptr, ec] = std::from_chars(b, e, v);
    if (ec != std::errc() || ptr != e)
        throw Error(ErrorCode::ParseError, path + ": not a real number '" + s + "'");
    return v;
}

inline std::vector<std::string> split(const std::string &s, char sep)
{
    std::vector<std::string> out;
    std::string cur;
    std::istringstream in(s);
    while (std::getline(in, cur, sep))
        out.push_back(cur);
    return out;
}

inline std::vector<double> parse_real_list(const std::string &s, const std::string &path)
{
    std::vector<double> v;
    const auto parts = split(s, ',');
    for (std::size_t i = 0; i < parts.size(); ++i)
        v.push_back(parse_real(parts[i], path + "[" + std::to_string(i) + "]"));
    if (v.empty())
        throw Error(ErrorCode::ParseError, path + ": empty list");
    return v;
}

// "lo:hi:count"
inline RatioRange parse_ratio(const std::string &s, const std::string &path = "ratio_range")
{
    const auto parts = split(s, ':');
    if (parts.size() != 3)
        throw Error(ErrorCode::ParseError, path + ": expected lo:hi:count, got '" + s + "'");
    RatioRange r;
    r.lo = parse_real(parts[0], path + ".lo");
    r.hi = parse_real(parts[1], path + ".hi");
    const double n = parse_real(parts[2], path + ".count");
    if (n < 0 || n != std::floor(n))
        throw Error(ErrorCode::ParseError, path + ".count: not a non-negative integer", n);
    r.count = static_cast<std::size_t>(n);
    return r;
}

namespace detail
{
inline std::vector<double> json_reals(const json &j, const std::string &path)
{
    std::vector<double> v;
    if (j.is_number())
        v.push_back(j.get<double>());
    else if (j.is_array())
    {
        for (std::size_t i = 0; i < j.size(); ++i)
        {
            if (!j[i].is_number())
                throw Error(ErrorCode::ParseError, path + "[" + std::to_string(i) + "]: expected a number");
            v.push_back(j[i].get<double>());
        }
    }
    else
        throw Error(ErrorCode::ParseError, path + ": expected a number or a list of numbers");
    return v;
}

inline std::size_t line_of(const std::string &text, std::size_t byte)
{
    return 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + std::min(byte, text.size()), '\n'));
}
} // namespace detail

inline json to_json(const SweepConfig &c)
{
    json j;
    j["ka_perp"] = c.ka_perp;
    j["a_half_sep"] = c.a_half_sep;
    j["ratio_range"] = {c.ratio.lo, c.ratio.hi, c.ratio.count};
    j["outputs"] = c.outputs;
    j["format"] = c.format;
    j["tolerance"] = c.tolerance;
    return j;
}

// Applies the fields present in `j` on top of `c`. A manifest's "config"
// object is accepted in place of a bare config.
inline void apply_json(SweepConfig &c, const json &src)
{
    const json &j = src.contains("config") && src["config"].is_object() ? src["config"] : src;
    if (!j.is_object())
        throw Error(ErrorCode::ParseError, "config: expected a JSON object");
    for (auto it = j.begin(); it != j.end(); ++it)
    {
        const std::string &key = it.key();
        const json &v = it.value();
        if (key == "ka_perp")
            c.ka_perp = detail::json_reals(v, key);
        else if (key == "a_half_sep")
            c.a_half_sep = detail::json_reals(v, key);
        else if (key == "ratio_range")
        {
            if (v.is_string())
                c.ratio = parse_ratio(v.get<std::string>(), key);
            else if (v.is_array() && v.size() == 3 && v[0].is_number() && v[1].is_number() &&
                     v[2].is_number_integer() && v[2].get<long long>() >= 0)
                c.ratio = {v[0].get<double>(), v[1].get<double>(), v[2].get<std::size_t>()};
            else
                throw Error(ErrorCode::ParseError, "ratio_range: expected [lo, hi, count] or \"lo:hi:count\"");
        }
        else if (key == "outputs")
        {
            if (!v.is_array())
                throw Error(ErrorCode::ParseError, "outputs: expected a list of names");
            c.outputs.clear();
            for (std::size_t i = 0; i < v.size(); ++i)
            {
                if (!v[i].is_string())
                    throw Error(ErrorCode::ParseError, "outputs[" + std::to_string(i) + "]: expected a string");
                c.outputs.push_back(v[i].get<std::string>());
            }
        }
        else if (key == "format")
        {
            if (!v.is_string())
                throw Error(ErrorCode::ParseError, "format: expected a string");
            c.format = v.get<std::string>();
        }
        else if (key == "tolerance")
        {
            if (!v.is_number())
                throw Error(ErrorCode::ParseError, "tolerance: expected a number");
            c.tolerance = v.get<double>();
        }
        else if (key == "threads")
        {
            if (!v.is_number_unsigned())
                throw Error(ErrorCode::ParseError, "threads: expected a non-negative integer");
            c.threads = v.get<unsigned>();
        }
        else
            throw Error(ErrorCode::ParseError, "unknown config field '" + key + "'");
    }
}

inline json parse_json_text(const std::string &text, const std::string &origin)
{
    try
    {
        return json::parse(text);
    }
    catch (const json::parse_error &e)
    {
        throw Error(ErrorCode::ParseError,
                    origin + ":" + std::to_string(detail::line_of(text, e.byte)) + ": " + e.what());
    }
}

inline json read_json_file(const std::string &path)
{
    std::ifstream in(path);
    if (!in)
        throw Error(ErrorCode::ParseError, path + ": cannot open file");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_json_text(ss.str(), path);
}

// Command-line values, still as text. Unset fields leave the file value.
struct FlagValues
{
    std::optional<std::string> ka_perp, a_half_sep, ratio, outputs, format, tolerance, threads;
};

struct LoadedConfig
{
    SweepConfig config;
    std::vector<std::string> warnings;
};

inline LoadedConfig load_config(const std::optional<std::string> &path, const FlagValues &flags)
{
    LoadedConfig out;
    SweepConfig &c = out.config;
    json file;
    if (path)
    {
        file = read_json_file(*path);
        apply_json(c, file);
        if (file.contains("config"))
            file = file["config"];
    }
    auto note = [&](const std::optional<std::string> &flag, const char *key) {
        if (flag && file.is_object() && file.contains(key))
            out.warnings.push_back(std::string("flag overrides config field '") + key + "'");
        return bool(flag);
    };
    if (note(flags.ka_perp, "ka_perp"))
        c.ka_perp = parse_real_list(*flags.ka_perp, "ka_perp");
    if (note(flags.a_half_sep, "a_half_sep"))
        c.a_half_sep = parse_real_list(*flags.a_half_sep, "a_half_sep");
    if (note(flags.ratio, "ratio_range"))
        c.ratio = parse_ratio(*flags.ratio);
    if (note(flags.outputs, "outputs"))
        c.outputs = split(*flags.outputs, ',');
    if (note(flags.format, "format"))
        c.format = *flags.format;
    if (note(flags.tolerance, "tolerance"))
        c.tolerance = parse_real(*flags.tolerance, "tolerance");
    if (note(flags.threads, "threads"))
    {
        const double t = parse_real(*flags.threads, "threads");
        if (t < 0 || t != std::floor(t))
            throw Error(ErrorCode::ParseError, "threads: expected a non-negative integer");
        c.threads = static_cast<unsigned>(t);
    }
    validate_config(c);
    return out;
}

// ---------------------------------------------------------------- tables

using Cell = std::variant<double, std::string>;

struct Table
{
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;
};

// Shortest representation that reads back to the same double.
inline std::string format_real(double v)
{
    if (std::isnan(v))
        return "nan";
    if (std::isinf(v))
        return v > 0 ? "inf" : "-inf";
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, ptr);
}

inline void write_csv(const Table &t, std::ostream &os)
{
    for (std::size_t i = 0; i < t.columns.size(); ++i)
        os << (i ? "," : "") << t.columns[i];
    os << '\n';
    for (const auto &row : t.rows)
    {
        for (std::size_t i = 0; i < row.size(); ++i)
        {
            os << (i ? "," : "");
            if (const double *d = std::get_if<double>(&row[i]))
                os << format_real(*d);
            else
                os << std::get<std::string>(row[i]);
        }
        os << '\n';
    }
}

inline json to_json(const Table &t)
{
    json rows = json::array();
    for (const auto &row : t.rows)
    {
        json r;
        for (std::size_t i = 0; i < row.size(); ++i)
        {
            if (const double *d = std::get_if<double>(&row[i]))
                r[t.columns[i]] = std::isfinite(*d) ? json(*d) : json(nullptr);
            else
                r[t.columns[i]] = std::get<std::string>(row[i]);
        }
        rows.push_back(std::move(r));
    }
    return {{"columns", t.columns}, {"rows", rows}};
}

inline void write_table(const Table &t, const std::string &format, std::ostream &os)
{
    if (format == "json")
        os << to_json(t).dump(1) << '\n';
    else
        write_csv(t, os);
}

// ---------------------------------------------------------------- sweep

namespace detail
{

// Evaluates `fn(i)` for i in [0, n) on a fixed pool; results land by index.
template <class Fn>
void parallel_for(std::size_t n, unsigned threads, Fn fn)
{
    unsigned t = threads ? threads : std::max(1u, std::thread::hardware_concurrency());
    t = static_cast<unsigned>(std::min<std::size_t>(t, std::max<std::size_t>(n, 1)));
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i = next++; i < n; i = next++)
            fn(i);
    };
    std::vector<std::thread> pool;
    for (unsigned i = 1; i < t; ++i)
        pool.emplace_back(work);
    work();
    for (auto &th : pool)
        th.join();
}

inline double opt_or_nan(const std::optional<double> &v) { return v ? *v : std::nan(""); }

} // namespace detail

inline std::vector<std::string> sweep_columns(const SweepConfig &c)
{
    std::vector<std::string> cols{"ka_perp", "a_over_aperp", "aperp_over_a3d", "T_tot", "T_e", "T_o", "R", "flag"};
    if (wants(c, "f_e"))
        cols.insert(cols.end(), {"f_e_re", "f_e_im"});
    if (wants(c, "f_o"))
        cols.insert(cols.end(), {"f_o_re", "f_o_im"});
    if (wants(c, "g1d"))
        cols.insert(cols.end(), {"g_plus_re", "g_plus_im", "g_minus_re", "g_minus_im"});
    if (wants(c, "cir"))
        cols.insert(cols.end(), {"cir_total_plus", "cir_total_minus", "cir_even", "cir_odd", "cir_dual"});
    return cols;
}

inline constexpr double sweep_resonance_floor = 1e-12;

inline Table run_sweep(const SweepConfig &c)
{
    validate_config(c);
    const SeriesOptions opt{c.tolerance};
    struct Pair
    {
        double k, a;
        RegularizedSums s;
        CirSolutions cir;
    };
    std::vector<Pair> pairs;
    for (double k : c.ka_perp)
        for (double a : c.a_half_sep)
            pairs.push_back({k, a, {}, {}});
    detail::parallel_for(pairs.size(), c.threads, [&](std::size_t i) {
        Pair &pr = pairs[i];
        const WaveguideParams p = validate(WaveguideParams::make(pr.k, pr.a, 1.0));
        pr.s = sums_for(p, opt);
        if (wants(c, "cir"))
            pr.cir = cir_solutions(p, opt);
    });

    Table t;
    t.columns = sweep_columns(c);
    const std::size_t n = pairs.size() * c.ratio.count;
    t.rows.resize(n);
    const double nan = std::nan("");
    detail::parallel_for(n, c.threads, [&](std::size_t idx) {
        const Pair &pr = pairs[idx / c.ratio.count];
        const double q = c.ratio.at(idx % c.ratio.count);
        const WaveguideParams p = WaveguideParams::make(pr.k, pr.a, q);
        std::string flag = "ok";
        AmplitudePair f{cplx(nan, nan), cplx(nan, nan), cplx(nan, nan), cplx(nan, nan), true};
        TransmissionSet tr{nan, nan, nan, nan};
        Effective1DCouplings g{cplx(nan, nan), cplx(nan, nan)};
        try
        {
            f = p.single_center() ? amplitudes(p, opt) : amplitudes_closed(p, pr.s);
            tr = transmissions(f);
            if (std::abs(1.0 + f.f_e + f.f_o) < sweep_resonance_floor)
                flag = "resonance";
            if (wants(c, "g1d"))
                g = g1d(p, f, sweep_resonance_floor);
        }
        catch (const Error &e)
        {
            if (e.code() == ErrorCode::AtResonance)
                flag = "resonance";
            else if (is_numerical(e.code()))
                flag = "illcond";
            else
                throw;
        }
        std::vector<Cell> row{pr.k, pr.a, q, tr.t_tot, tr.t_e, tr.t_o, tr.r, flag};
        if (wants(c, "f_e"))
            row.insert(row.end(), {f.f_e.real(), f.f_e.imag()});
        if (wants(c, "f_o"))
            row.insert(row.end(), {f.f_o.real(), f.f_o.imag()});
        if (wants(c, "g1d"))
            row.insert(row.end(), {g.g_plus.real(), g.g_plus.imag(), g.g_minus.real(), g.g_minus.imag()});
        if (wants(c, "cir"))
            row.insert(row.end(), {detail::opt_or_nan(pr.cir.total_plus), detail::opt_or_nan(pr.cir.total_minus),
                                   pr.cir.even, detail::opt_or_nan(pr.cir.odd), detail::opt_or_nan(pr.cir.dual)});
        t.rows[idx] = std::move(row);
    });
    return t;
}

inline json sweep_manifest(const SweepConfig &c, const std::string &data_file)
{
    json m;
    m["artifact"] = "cirwave";
    m["version"] = artifact_version;
    m["kind"] = "sweep";
    m["config"] = to_json(c);
    m["columns"] = sweep_columns(c);
    m["data_file"] = data_file;
    return m;
}

// ---------------------------------------------------------------- figures

inline const std::vector<std::string> &figure_ids()
{
    static const std::vector<std::string> v{"2", "3a", "3b", "4a", "4b", "5", "6", "7a", "7b"};
    return v;
}

struct FigureData
{
    std::string id;
    Table table;
    json manifest;
};

namespace detail
{

inline std::vector<double> linspace(double lo, double hi, std::size_t n)
{
    std::vector<double> v(n);
    for (std::size_t i = 0; i < n; ++i)
        v[i] = i + 1 == n ? hi : lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
    return v;
}

inline Table cir_vs_a(double k, const std::vector<double> &as, const std::vector<std::string> &what, double tol)
{
    Table t;
    t.columns = {"ka_perp", "a_over_aperp"};
    t.columns.insert(t.columns.end(), what.begin(), what.end());
    t.rows.resize(as.size());
    const SeriesOptions opt{tol};
    parallel_for(as.size(), 0, [&](std::size_t i) {
        const CirSolutions c = cir_solutions(WaveguideParams::make(k, as[i], 1.0), opt);
        std::vector<Cell> row{k, as[i]};
        for (const auto &w : what)
        {
            if (w == "cir_total_plus")
                row.push_back(opt_or_nan(c.total_plus));
            else if (w == "cir_total_minus")
                row.push_back(opt_or_nan(c.total_minus));
            else if (w == "discriminant")
                row.push_back(as[i] == 0.0 ? std::nan("") : c.discriminant);
            else if (w == "cir_even")
                row.push_back(c.even);
            else if (w == "cir_odd")
                row.push_back(opt_or_nan(c.odd));
            else if (w == "cir_dual")
                row.push_back(opt_or_nan(c.dual));
        }
        t.rows[i] = std::move(row);
    });
    return t;
}

// Keeps the parameter columns of a sweep table plus the named ones.
inline Table project(const Table &src, const std::vector<std::string> &keep)
{
    std::vector<std::size_t> idx;
    for (const auto &k : keep)
        idx.push_back(static_cast<std::size_t>(
            std::find(src.columns.begin(), src.columns.end(), k) - src.columns.begin()));
    Table t;
    t.columns = keep;
    for (const auto &row : src.rows)
    {
        std::vector<Cell> r;
        for (std::size_t i : idx)
            r.push_back(row[i]);
        t.rows.push_back(std::move(r));
    }
    return t;
}

inline Table amplitude_parts(const Table &sweep, bool real_part)
{
    auto col = [&](const char *n) {
        return static_cast<std::size_t>(std::find(sweep.columns.begin(), sweep.columns.end(), n) -
                                        sweep.columns.begin());
    };
    const std::size_t fe = col(real_part ? "f_e_re" : "f_e_im"), fo = col(real_part ? "f_o_re" : "f_o_im");
    Table t;
    if (real_part)
        t.columns = {"ka_perp", "a_over_aperp", "aperp_over_a3d", "one_plus_re_fe", "re_fo", "one_plus_re_fe_fo"};
    else
        t.columns = {"ka_perp", "a_over_aperp", "aperp_over_a3d", "im_fe", "im_fo", "im_fe_fo"};
    const double shift = real_part ? 1.0 : 0.0;
    for (const auto &row : sweep.rows)
    {
        const double e = std::get<double>(row[fe]), o = std::get<double>(row[fo]);
        t.rows.push_back({row[0], row[1], row[2], shift + e, o, shift + e + o});
    }
    return t;
}

} // namespace detail

// The sweep behind each published figure, with a manifest that records
// every parameter needed to regenerate it.
inline FigureData figure_data(const std::string &id, double tolerance = 1e-13)
{
    FigureData d;
    d.id = id;
    json params;
    const double k0 = 0.0707;
    if (id == "2" || id == "4a" || id == "4b" || id == "7a" || id == "7b")
    {
        SweepConfig c;
        c.tolerance = tolerance;
        if (id == "2")
        {
            c.ka_perp = {0.0707, 7.07e-5};
            c.a_half_sep = {0.01, 0.1, 0.5};
            c.ratio = {0.05, 6.0, 1200};
            c.outputs = {"t_tot"};
        }
        else
        {
            c.ka_perp = {k0};
            c.a_half_sep = {0.5};
            c.ratio = {-3.0, 6.0, 1801};
            c.outputs = id[0] == '7' ? std::vector<std::string>{"f_e", "f_o"}
                                     : std::vector<std::string>{"t_tot", "t_e", "t_o"};
        }
        const Table sweep = run_sweep(c);
        if (id == "2")
            d.table = detail::project(sweep, {"ka_perp", "a_over_aperp", "aperp_over_a3d", "T_tot", "flag"});
        else if (id == "4a")
            d.table = detail::project(sweep, {"ka_perp", "a_over_aperp", "aperp_over_a3d", "T_tot", "T_e", "flag"});
        else if (id == "4b")
            d.table = detail::project(sweep, {"ka_perp", "a_over_aperp", "aperp_over_a3d", "T_tot", "T_o", "flag"});
        else
            d.table = detail::amplitude_parts(sweep, id == "7a");
        params = to_json(c);
    }
    else if (id == "3a" || id == "3b" || id == "5" || id == "6")
    {
        const bool from_zero = id == "5";
        const auto as = detail::linspace(from_zero ? 0.0 : 0.01, 1.0, from_zero ? 101 : 100);
        std::vector<std::string> what;
        if (id == "3a")
            what = {"cir_total_plus", "cir_total_minus", "discriminant"};
        else if (id == "3b")
            what = {"cir_dual"};
        else if (id == "5")
            what = {"cir_even"};
        else
            what = {"cir_odd"};
        d.table = detail::cir_vs_a(k0, as, what, tolerance);
        params = {{"ka_perp", {k0}}, {"a_half_sep", as}, {"tolerance", tolerance}};
    }
    else
        throw Error(ErrorCode::UnknownFigure, "no figure with id '" + id + "'");

    d.manifest["artifact"] = "cirwave";
    d.manifest["version"] = artifact_version;
    d.manifest["kind"] = "figure";
    d.manifest["figure"] = id;
    d.manifest["tolerance"] = tolerance;
    d.manifest["parameters"] = params;
    d.manifest["columns"] = d.table.columns;
    d.manifest["data_file"] = "fig" + id + ".csv";
    return d;
}

} // namespace cirwave::io

#endif
