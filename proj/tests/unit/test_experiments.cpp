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

#include "relspin/experiments.hpp"

#include <cmath>
#include <numbers>

#include "gtest/gtest.h"
#include "relspin/sampling.hpp"
#include "relspin/wigner.hpp"
#include "test_util.hpp"

namespace relspin {
namespace {

using testing::code_of;

constexpr double kQuarter = std::numbers::pi / 4;

TEST(ClosedForm, FrozenValues) {
    EXPECT_EQ(closed_form_expectation(0.0, kQuarter), 0.0);
    EXPECT_NEAR(closed_form_expectation(0.8, kQuarter), -8.0 / 17.0, 1e-15);
    EXPECT_NEAR(closed_form_expectation(0.999, kQuarter), -0.99600997605786033719, 1e-14);
    EXPECT_NEAR(closed_form_expectation(0.99999, kQuarter), -0.99996000099997600058, 1e-12);
    EXPECT_EQ(closed_form_expectation(0.9, 0.0), 0.0);
}

TEST(ClosedForm, Errors) {
    EXPECT_EQ(code_of([] { closed_form_expectation(1.0, kQuarter); }), ErrorCode::VelocityOutOfRange);
    EXPECT_EQ(code_of([] { closed_form_expectation(-0.1, kQuarter); }), ErrorCode::VelocityOutOfRange);
}

TEST(TwoApparatus, MatchesClosedFormOnGrid) {
    for (int i = 0; i < 40; ++i) {
        for (int j = 0; j < 25; ++j) {
            const double v = 0.999 * i / 39.0;
            const double theta = 2.0 * std::numbers::pi * j / 25.0;
            const TwoApparatusConfig config{v, theta};
            const double expected = closed_form_expectation(v, theta);
            EXPECT_NEAR(two_apparatus_sg(config), expected, 1e-9) << v << " " << theta;
            EXPECT_NEAR(two_apparatus_pl(config), -expected, 1e-9) << v << " " << theta;
        }
    }
}

TEST(TwoApparatus, MotionAlongOneFieldGivesZero) {
    EXPECT_NEAR(two_apparatus_sg(TwoApparatusConfig{0.9, 0.0}), 0.0, 1e-15);
    EXPECT_NEAR(two_apparatus_pl(TwoApparatusConfig{0.9, 0.0}), 0.0, 1e-15);
}

TEST(TwoApparatus, MassAndMagnitudeIndependence) {
    const TwoApparatusConfig base{0.7, 0.4};
    const double ref = two_apparatus_sg(base);
    EXPECT_NEAR(two_apparatus_sg(base, 3.5), ref, 1e-12);
    EXPECT_NEAR(two_apparatus_pl(base, 0.2), -ref, 1e-12);
    TwoApparatusConfig scaled = base;
    scaled.field1_dir *= 4.0;
    scaled.field2_dir *= 0.25;
    EXPECT_NEAR(two_apparatus_sg(scaled), ref, 1e-12);
    EXPECT_NEAR(two_apparatus_pl(scaled), -ref, 1e-12);
}

TEST(TwoApparatus, Errors) {
    EXPECT_EQ(code_of([] { two_apparatus_sg(TwoApparatusConfig{1.0, 0.0}); }), ErrorCode::VelocityOutOfRange);
    EXPECT_EQ(code_of([] { two_apparatus_sg(TwoApparatusConfig{-0.2, 0.0}); }), ErrorCode::VelocityOutOfRange);
}

TEST(TwoApparatus, WholePipelineFrameInvariance) {
    Sampler rng(61);
    const EMFieldTensor f1 = tensor_from_fields(ThreeVector::Zero(), ThreeVector::UnitX());
    const EMFieldTensor f2 = tensor_from_fields(ThreeVector::Zero(), ThreeVector::UnitY());
    for (int i = 0; i < 200; ++i) {
        const double v = rng.uniform(0.0, 0.99);
        const double theta = rng.uniform(0.0, 2.0 * std::numbers::pi);
        const FourVector p = momentum_from_velocity(v * ThreeVector(std::cos(theta), std::sin(theta), 0), 1.0);
        const LorentzTransform lambda = rng.lorentz(0.95);
        const ThreeVector r = sg_axis(p, 1.0, f1);
        const ThreeVector r_new = wigner_rotation(lambda, p, 1.0).rotation * r;
        const FourVector p_new = lambda * p;
        EXPECT_LT((sg_axis(p_new, 1.0, transform_tensor(lambda, f1)) - r_new).norm(), 1e-8);
        EXPECT_NEAR(sg_expectation(p_new, 1.0, r_new, transform_tensor(lambda, f2)), closed_form_expectation(v, theta), 1e-8);
    }
}

TEST(Grid, Uniform) {
    const std::vector<double> g = uniform_grid(0.0, 0.999, 3);
    ASSERT_EQ(g.size(), 3u);
    EXPECT_EQ(g[0], 0.0);
    EXPECT_EQ(g[1], 0.4995);
    EXPECT_EQ(g[2], 0.999);
    EXPECT_EQ(uniform_grid(0.3, 0.9, 1), std::vector<double>{0.3});
    EXPECT_EQ(code_of([] { uniform_grid(0.0, 1.0, 0); }), ErrorCode::InvalidArgument);

    const std::vector<double> d = default_fig1_grid();
    ASSERT_EQ(d.size(), 200u);
    EXPECT_EQ(d.front(), 0.0);
    EXPECT_EQ(d.back(), 0.999);
}

TEST(ScanFig1, RowsMatchClosedFormAndDecrease) {
    const ScanResult scan = scan_fig1(kQuarter, default_fig1_grid());
    ASSERT_EQ(scan.rows.size(), 200u);
    EXPECT_NEAR(scan.rows.front().expectation_sg, 0.0, 1e-15);
    EXPECT_NEAR(scan.rows.back().expectation_sg, -0.99601, 1e-4);
    for (std::size_t i = 0; i < scan.rows.size(); ++i) {
        const ScanRow& row = scan.rows[i];
        EXPECT_NEAR(row.expectation_sg, row.closed_form, 1e-9);
        EXPECT_NEAR(row.expectation_pl, -row.closed_form, 1e-9);
        if (i > 0) {
            EXPECT_LT(row.expectation_sg, scan.rows[i - 1].expectation_sg);
        }
    }
}

TEST(ScanFig1, PreservesGridOrder) {
    const std::vector<double> grid{0.9, 0.1, 0.5};
    const ScanResult scan = scan_fig1(kQuarter, grid);
    ASSERT_EQ(scan.rows.size(), 3u);
    for (std::size_t i = 0; i < grid.size(); ++i) EXPECT_EQ(scan.rows[i].v, grid[i]);
}

TEST(ScanFig1, PropagatesErrors) {
    EXPECT_EQ(code_of([] { scan_fig1(kQuarter, {0.5, 1.0}); }), ErrorCode::VelocityOutOfRange);
}

TEST(Fig2, LabGeometryAtRest) {
    const Fig2Geometry g = fig2_geometry(0.0, kQuarter);
    EXPECT_NEAR(g.angle_B1B2_rest, std::numbers::pi / 2, 1e-15);
    EXPECT_NEAR(g.angle_G1G2_rest, std::numbers::pi / 2, 1e-15);
}

TEST(Fig2, FrozenNearLightSpeed) {
    const Fig2Geometry g = fig2_geometry(0.999, kQuarter);
    EXPECT_NEAR(g.angle_B1B2_rest, 3.0522318103661052, 1e-12);
    EXPECT_NEAR(g.angle_G1G2_rest, 0.08936084322368694, 1e-12);
    EXPECT_GT(g.angle_B1B2_rest, 3.0);
    EXPECT_LT(g.angle_G1G2_rest, 0.15);
}

TEST(Fig2, CosineIsClosedForm) {
    for (int i = 0; i < 50; ++i) {
        const double v = 0.999 * i / 49.0;
        const Fig2Geometry g = fig2_geometry(v, kQuarter);
        EXPECT_NEAR(std::cos(g.angle_B1B2_rest), closed_form_expectation(v, kQuarter), 1e-12);
        EXPECT_NEAR(std::cos(g.angle_G1G2_rest), -closed_form_expectation(v, kQuarter), 1e-12);
    }
}

std::vector<FourVector> paradox_momenta() {
    return {momentum_from_velocity(ThreeVector(0.8, 0, 0), 1.0), momentum_from_velocity(ThreeVector(0, 0.8, 0), 1.0)};
}

EMFieldTensor diagonal_field() {
    return tensor_from_fields(ThreeVector::Zero(), ThreeVector(1, 1, 0) / std::sqrt(2.0));
}

TEST(Paradox, TwoMomentumExample) {
    const ParadoxResult r = paradox_demo(paradox_momenta(), 1.0, diagonal_field());
    EXPECT_NEAR(r.purity_after, 33.0 / 34.0, 1e-12);
    EXPECT_LT(r.purity_after, 0.99);
    EXPECT_NEAR(r.remeasure_prob_plus, 1.0, 1e-12);
    EXPECT_NEAR(r.purity_before, 1.0, 1e-12);
    EXPECT_GT(r.prob_plus_first, 0.0);
    ASSERT_EQ(r.axes.size(), 2u);
    EXPECT_NEAR(r.axes[0].norm(), 1.0, 1e-12);
    EXPECT_GT((r.axes[0] - r.axes[1]).norm(), 0.1);
}

TEST(Paradox, RandomInputsAlwaysRemeasurePlus) {
    Sampler rng(62);
    for (int i = 0; i < 100; ++i) {
        const std::vector<FourVector> momenta{rng.momentum(1.0, 0.95), rng.momentum(1.0, 0.95),
                                              rng.momentum(1.0, 0.95)};
        const EMFieldTensor f = rng.field();
        const ParadoxResult r = paradox_demo(momenta, 1.0, f, rng.unit_vector());
        EXPECT_NEAR(r.remeasure_prob_plus, 1.0, 1e-12);
        EXPECT_LT(r.purity_after, 1.0);
    }
}

TEST(Paradox, Errors) {
    const FourVector p1 = momentum_from_velocity(ThreeVector(0.5, 0, 0), 1.0);
    const FourVector p2 = momentum_from_velocity(ThreeVector(0.8, 0, 0), 1.0);
    const EMFieldTensor along = tensor_from_fields(ThreeVector::Zero(), ThreeVector::UnitX());
    EXPECT_EQ(code_of([&] { paradox_demo({p1, p2}, 1.0, along); }), ErrorCode::AxesCoincide);
    EXPECT_EQ(code_of([&] { paradox_demo({p1, p1}, 1.0, diagonal_field()); }), ErrorCode::InvalidState);
    EXPECT_EQ(code_of([&] { paradox_demo({p1}, 1.0, diagonal_field()); }), ErrorCode::InvalidArgument);
    // In-plane motion leaves a perpendicular B along the same rest-frame axis.
    const EMFieldTensor zed = tensor_from_fields(ThreeVector::Zero(), ThreeVector::UnitZ());
    EXPECT_EQ(code_of([&] { paradox_demo(paradox_momenta(), 1.0, zed); }), ErrorCode::AxesCoincide);
}

TEST(FrameCheck, PassesAndIsDeterministic) {
    const FrameCheckReport a = frame_check(42, 200);
    const FrameCheckReport b = frame_check(42, 200);
    EXPECT_TRUE(a.passed());
    ASSERT_EQ(a.rows.size(), b.rows.size());
    ASSERT_FALSE(a.rows.empty());
    for (std::size_t i = 0; i < a.rows.size(); ++i) {
        EXPECT_EQ(a.rows[i].check, b.rows[i].check);
        EXPECT_EQ(a.rows[i].max_residual, b.rows[i].max_residual);
        EXPECT_TRUE(a.rows[i].passed()) << a.rows[i].check << " " << a.rows[i].max_residual;
    }
    EXPECT_EQ(code_of([] { frame_check(1, 0); }), ErrorCode::InvalidArgument);
}

}  // namespace
}  // namespace relspin
