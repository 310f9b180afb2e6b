// Copyright 2026 The relspin Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>

#include "gtest/gtest.h"
#include "json.hpp"
#include "relspin/experiments.hpp"
#include "relspin/wigner.hpp"

namespace relspin::cli {
namespace {

struct Invocation {
    int code;
    std::string out;
    std::string err;
};

Invocation invoke(const std::vector<std::string>& args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
    std::vector<std::string> result;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) result.push_back(line);
    return result;
}

std::vector<std::string> split(const std::string& line) {
    std::vector<std::string> cells;
    std::istringstream in(line);
    for (std::string cell; std::getline(in, cell, ',');) cells.push_back(cell);
    return cells;
}

TEST(FormatReal, SeventeenDigits) {
    EXPECT_EQ(format_real(0.0), "0");
    EXPECT_EQ(format_real(-8.0 / 17.0), "-0.47058823529411764");
    EXPECT_EQ(format_real(0.1), "0.10000000000000001");
    EXPECT_EQ(std::stod(format_real(0.999)), 0.999);
}

TEST(Csv, QuotesSpecialFields) {
    std::ostringstream out;
    write_csv(Table{{"a", "b"}, {{std::string("x,y"), 1.5}}}, out);
    EXPECT_EQ(out.str(), "a,b\n\"x,y\",1.5\n");
}

TEST(ScanFig1, ThreeSteps) {
    const Invocation r = invoke({"scan-fig1", "--theta", "0.7853981633974483", "--v-min", "0", "--v-max", "0.999",
                          "--steps", "3"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto rows = lines(r.out);
    ASSERT_EQ(rows.size(), 4u);
    EXPECT_EQ(rows[0], "v,expectation_sg,expectation_pl,closed_form");
    EXPECT_EQ(split(rows[1])[1], "0");
    const ScanResult lib = scan_fig1(std::numbers::pi / 4, uniform_grid(0.0, 0.999, 3));
    for (std::size_t i = 0; i < 3; ++i) {
        const auto cells = split(rows[i + 1]);
        EXPECT_EQ(cells[0], format_real(lib.rows[i].v));
        EXPECT_EQ(cells[1], format_real(lib.rows[i].expectation_sg));
        EXPECT_EQ(cells[2], format_real(lib.rows[i].expectation_pl));
        EXPECT_EQ(cells[3], format_real(lib.rows[i].closed_form));
    }
}

TEST(ScanFig1, DefaultsAndRowCount) {
    const Invocation r = invoke({"scan-fig1"});
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(lines(r.out).size(), 201u);
}

TEST(ScanFig1, JsonMatchesCsv) {
    const Invocation csv = invoke({"scan-fig1", "--steps", "25"});
    const Invocation json = invoke({"--format", "json", "scan-fig1", "--steps", "25"});
    ASSERT_EQ(json.code, 0);
    const nlohmann::json parsed = nlohmann::json::parse(json.out);
    ASSERT_TRUE(parsed.is_array());
    const auto rows = lines(csv.out);
    ASSERT_EQ(parsed.size() + 1, rows.size());
    const auto header = split(rows[0]);
    for (std::size_t i = 0; i < parsed.size(); ++i) {
        const auto cells = split(rows[i + 1]);
        for (std::size_t c = 0; c < header.size(); ++c) {
            EXPECT_EQ(parsed[i].at(header[c]).get<double>(), std::stod(cells[c]));
        }
    }
}

TEST(ScanFig1, FormatFlagAfterSubcommand) {
    const Invocation a = invoke({"--format", "json", "scan-fig1", "--steps", "2"});
    const Invocation b = invoke({"scan-fig1", "--steps", "2", "--format", "json"});
    EXPECT_EQ(a.code, 0);
    EXPECT_EQ(a.out, b.out);
}

TEST(ScanFig1, Errors) {
    EXPECT_EQ(invoke({"scan-fig1", "--steps", "0"}).code, 2);
    EXPECT_EQ(invoke({"scan-fig1", "--steps", "abc"}).code, 2);
    EXPECT_EQ(invoke({"scan-fig1", "--v-max", "1.0"}).code, 3);
}

TEST(Wigner, Identity) {
    const Invocation r = invoke({"wigner", "--velocity", "0.3,0.2,0.1"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto rows = lines(r.out);
    ASSERT_EQ(rows.size(), 2u);
    const auto header = split(rows[0]);
    const auto cells = split(rows[1]);
    ASSERT_EQ(header.size(), cells.size());
    EXPECT_EQ(header[0], "r00");
    EXPECT_EQ(header[12], "angle");
    EXPECT_NEAR(std::stod(cells[0]), 1.0, 1e-12);
    EXPECT_NEAR(std::stod(cells[12]), 0.0, 1e-12);
}

TEST(Wigner, CollinearBoostHasNoRotation) {
    const Invocation r = invoke({"wigner", "--boost", "0.5,0,0", "--velocity", "0.7,0,0"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_LT(std::abs(std::stod(split(lines(r.out)[1])[12])), 1e-12);
}

TEST(Wigner, PerpendicularBoostsMatchLibrary) {
    const Invocation r = invoke({"wigner", "--boost", "0,0.6,0", "--velocity", "0.6,0,0"});
    ASSERT_EQ(r.code, 0) << r.err;
    const WignerRotation w =
        wigner_rotation(boost_from_velocity(ThreeVector(0, 0.6, 0)), momentum_from_velocity(ThreeVector(0.6, 0, 0), 1.0), 1.0);
    EXPECT_EQ(split(lines(r.out)[1])[12], format_real(axis_angle(w.rotation).angle));
    EXPECT_GT(axis_angle(w.rotation).angle, 0.1);
}

TEST(Wigner, MatrixAndRotationSpecs) {
    const Invocation m = invoke({"wigner", "--matrix", "1,0,0,0,0,1,0,0,0,0,1,0,0,0,0,1", "--momentum", "1.25,0.75,0,0"});
    EXPECT_EQ(m.code, 0) << m.err;
    const Invocation rot = invoke({"wigner", "--rotate", "0,0,1", "--angle", "0.5", "--velocity", "0.2,0,0"});
    ASSERT_EQ(rot.code, 0) << rot.err;
    EXPECT_EQ(std::stod(split(lines(rot.out)[1])[12]), std::stod(format_real(0.5)));
}

TEST(Wigner, Errors) {
    EXPECT_EQ(invoke({"wigner"}).code, 2);
    EXPECT_EQ(invoke({"wigner", "--velocity", "0.1,0.2"}).code, 2);
    EXPECT_EQ(invoke({"wigner", "--boost", "0.1,0,0", "--rotate", "0,0,1", "--velocity", "0,0,0"}).code, 2);
    EXPECT_EQ(invoke({"wigner", "--matrix", "1,2,3", "--velocity", "0,0,0"}).code, 2);
    EXPECT_EQ(invoke({"wigner", "--velocity", "1.2,0,0"}).code, 3);
    EXPECT_EQ(invoke({"wigner", "--momentum", "2,0,0,0"}).code, 3);
    const Invocation bent = invoke({"wigner", "--matrix", "1,0,0,0,0,1,0.001,0,0,0,1,0,0,0,0,1", "--velocity", "0,0,0"});
    EXPECT_EQ(bent.code, 3);
    EXPECT_NE(bent.err.find("NotLorentz"), std::string::npos);
}

TEST(Scenario, SgAndPl) {
    const Invocation sg = invoke({"sg-expectation", "--v", "0.8"});
    ASSERT_EQ(sg.code, 0) << sg.err;
    const auto rows = lines(sg.out);
    EXPECT_EQ(rows[0], "v,theta,expectation_sg,closed_form");
    EXPECT_NEAR(std::stod(split(rows[1])[2]), -8.0 / 17.0, 1e-14);

    const Invocation pl = invoke({"pl-expectation", "--v", "0.8", "--theta", "0.7853981633974483"});
    ASSERT_EQ(pl.code, 0) << pl.err;
    EXPECT_NEAR(std::stod(split(lines(pl.out)[1])[2]), 8.0 / 17.0, 1e-14);

    EXPECT_EQ(invoke({"sg-expectation"}).code, 2);
    EXPECT_EQ(invoke({"pl-expectation", "--v", "1"}).code, 3);
}

TEST(Fig2, Geometry) {
    const Invocation r = invoke({"fig2-geometry", "--v", "0.999"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto cells = split(lines(r.out)[1]);
    EXPECT_GT(std::stod(cells[2]), 3.0);
    EXPECT_LT(std::stod(cells[3]), 0.15);
}

TEST(Paradox, TwoMomentumCase) {
    const Invocation r = invoke({"paradox-demo", "--velocity", "0.8,0,0", "--velocity", "0,0.8,0", "--field-b", "1,1,0"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto rows = lines(r.out);
    ASSERT_EQ(rows.size(), 3u);
    EXPECT_EQ(rows[0], "branch,axis_x,axis_y,axis_z,prob_plus_first,purity_before,purity_after,remeasure_prob_plus");
    const auto cells = split(rows[1]);
    EXPECT_NEAR(std::stod(cells[6]), 33.0 / 34.0, 1e-12);
    EXPECT_NEAR(std::stod(cells[7]), 1.0, 1e-12);
}

TEST(Paradox, Errors) {
    EXPECT_EQ(invoke({"paradox-demo", "--velocity", "0.8,0,0"}).code, 2);
    const Invocation parallel = invoke({"paradox-demo", "--velocity", "0.5,0,0", "--velocity", "0.8,0,0", "--field-b", "1,0,0"});
    EXPECT_EQ(parallel.code, 3);
    EXPECT_NE(parallel.err.find("AxesCoincide"), std::string::npos);
}

TEST(FrameCheck, PassesAndIsDeterministic) {
    const Invocation a = invoke({"frame-check", "--seed", "42", "--trials", "1000"});
    const Invocation b = invoke({"frame-check", "--seed", "42", "--trials", "1000"});
    EXPECT_EQ(a.code, 0) << a.out;
    EXPECT_EQ(a.out, b.out);
    EXPECT_EQ(lines(a.out)[0], "check,max_residual,tolerance,passed");
    EXPECT_EQ(invoke({"frame-check", "--trials", "0"}).code, 2);
}

TEST(Global, UsageErrors) {
    EXPECT_EQ(invoke({}).code, 2);
    EXPECT_EQ(invoke({"no-such-command"}).code, 2);
    EXPECT_EQ(invoke({"--format", "xml", "scan-fig1"}).code, 2);
    EXPECT_EQ(invoke({"--help"}).code, 0);
}

TEST(Global, OutputFile) {
    const std::filesystem::path path = std::filesystem::temp_directory_path() / "relspin_cli_output_test.csv";
    const Invocation r = invoke({"--output", path.string(), "scan-fig1", "--steps", "5"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_TRUE(r.out.empty());
    std::ifstream in(path);
    std::stringstream content;
    content << in.rdbuf();
    EXPECT_EQ(content.str(), invoke({"scan-fig1", "--steps", "5"}).out);
    std::filesystem::remove(path);
}

}  // namespace
}  // namespace relspin::cli
