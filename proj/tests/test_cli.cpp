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

// Exit-code contract of the command-line tool: 0 success, 1 bad input,
// 2 numerical failure, 3 failed self-check.

#include <cirwave/sweep.hpp>

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

namespace
{
namespace fs = std::filesystem;

struct Run
{
    int code;
    std::string out;
};

Run run(const std::string &args)
{
    const auto *info = testing::UnitTest::GetInstance()->current_test_info();
    static int counter = 0;
    const fs::path out = fs::path(testing::TempDir()) /
                         ("cli_" + std::string(info->name()) + "_" + std::to_string(counter++) + ".txt");
    const std::string cmd = std::string(CIRWAVE_CLI_PATH) + " " + args + " > " + out.string() + " 2>/dev/null";
    const int status = std::system(cmd.c_str());
    std::ifstream f(out);
    std::stringstream ss;
    ss << f.rdbuf();
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, ss.str()};
}

std::string slurp(const fs::path &p)
{
    std::ifstream f(p, std::ios::binary);
    std::stringstream ss;
    ss << f.rdbuf();
    return ss.str();
}
} // namespace

TEST(Cli, AmplitudesAtOnePoint)
{
    const auto r = run("amplitudes --ka-perp 0.0707 --a 0.5 --inv-ratio 2");
    ASSERT_EQ(r.code, 0);
    const auto j = cirwave::io::json::parse(r.out);
    EXPECT_NEAR(j["f_e"][0].get<double>(), -0.99547758340063206, 1e-13);
    EXPECT_NEAR(j["T_tot"].get<double>() + j["R"].get<double>(), 1.0, 1e-12);
}

TEST(Cli, AmplitudesWithoutInteraction)
{
    const auto r = run("amplitudes --ka-perp 0.3 --a 0.5 --no-interaction");
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(cirwave::io::json::parse(r.out)["T_tot"].get<double>(), 1.0);
}

TEST(Cli, BadInputExitsWithOne)
{
    EXPECT_EQ(run("amplitudes --ka-perp 2.5 --a 0.5 --inv-ratio 1").code, 1);
    EXPECT_EQ(run("amplitudes --ka-perp 0.1 --a 0.5").code, 1);
    EXPECT_EQ(run("sweep --ratio 0.1:5:1").code, 1);
    EXPECT_EQ(run("figure 9").code, 1);
    EXPECT_EQ(run("cir --ka-perp 0.1").code, 1);
    EXPECT_EQ(run("sweep --config /nonexistent/cfg.json").code, 1);
}

TEST(Cli, NumericalFailureExitsWithTwo)
{
    EXPECT_EQ(run("amplitudes --ka-perp 0.0707 --a 0.5 --inv-ratio 2 --tolerance 1e-300").code, 2);
}

TEST(Cli, ResonancePositions)
{
    const auto r = run("cir --ka-perp 0.0707 --a 0.5 --numeric");
    ASSERT_EQ(r.code, 0);
    const auto j = cirwave::io::json::parse(r.out);
    EXPECT_NEAR(j["total_minus"].get<double>(), 0.42, 0.02);
    EXPECT_NEAR(j["total_plus"].get<double>(), 3.04, 0.02);
    EXPECT_GE(j["numeric"]["t_tot_min"].size(), 2u);
}

TEST(Cli, VerifyPasses)
{
    const auto r = run("verify");
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out.find("FAIL"), std::string::npos);
}

TEST(Cli, SweepManifestRegenerates)
{
    const fs::path dir = fs::path(testing::TempDir()) / "cli_sweep";
    fs::create_directories(dir);
    const auto a = dir / "a.csv", b = dir / "b.csv", m = dir / "a.json";
    ASSERT_EQ(run("sweep --ka-perp 0.0707,0.2 --a 0.1,0.5 --ratio -1:4:25 --outputs t_tot,f_e --out " + a.string() +
                  " --manifest " + m.string())
                  .code,
              0);
    ASSERT_EQ(run("sweep --config " + m.string() + " --out " + b.string()).code, 0);
    EXPECT_FALSE(slurp(a).empty());
    EXPECT_EQ(slurp(a), slurp(b));
}

TEST(Cli, FigureManifestRegenerates)
{
    const fs::path d1 = fs::path(testing::TempDir()) / "cli_fig1", d2 = fs::path(testing::TempDir()) / "cli_fig2";
    ASSERT_EQ(run("figure 5 --out-dir " + d1.string()).code, 0);
    ASSERT_EQ(run("figure --manifest " + (d1 / "fig5.manifest.json").string() + " --out-dir " + d2.string()).code, 0);
    EXPECT_EQ(slurp(d1 / "fig5.csv"), slurp(d2 / "fig5.csv"));
}
