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

#include <algorithm>
#include <cmath>
#include <sstream>

#include "relspin/error.hpp"

namespace relspin {

namespace {

// Axes closer than this (|a × b|, same direction) count as one axis.
constexpr double kParallelAxes = 1e-12;

double angle_between(const ThreeVector& a, const ThreeVector& b) { return std::atan2(a.cross(b).norm(), a.dot(b)); }

EMFieldTensor magnetic_apparatus(const ThreeVector& direction) {
    return tensor_from_fields(ThreeVector::Zero(), direction);
}

}  // namespace

void TwoApparatusConfig::validate() const {
    if (!std::isfinite(speed) || speed < 0.0 || speed >= 1.0 - kVelocityGuard) {
        std::ostringstream msg;
        msg << "speed " << speed << " must lie in [0, 1 - " << kVelocityGuard << ")";
        throw Error(ErrorCode::VelocityOutOfRange, msg.str());
    }
    if (!std::isfinite(theta)) throw Error(ErrorCode::InvalidArgument, "theta must be finite");
}

ThreeVector TwoApparatusConfig::velocity() const {
    return speed * ThreeVector(std::cos(theta), std::sin(theta), 0.0);
}

double closed_form_expectation(double v, double theta) {
    if (!std::isfinite(v) || v < 0.0 || v >= 1.0) {
        std::ostringstream msg;
        msg << "speed " << v << " must lie in [0, 1)";
        throw Error(ErrorCode::VelocityOutOfRange, msg.str());
    }
    const double s = std::sin(theta);
    const double c = std::cos(theta);
    const double v2 = v * v;
    return -v2 * s * c / std::sqrt((1.0 - v2 * c * c) * (1.0 - v2 * s * s));
}

double two_apparatus_sg(const TwoApparatusConfig& config, double mass) {
    config.validate();
    const FourVector p = momentum_from_velocity(config.velocity(), mass);
    const ThreeVector prepared = sg_axis(p, mass, magnetic_apparatus(config.field1_dir));
    return sg_expectation(p, mass, prepared, magnetic_apparatus(config.field2_dir));
}

double two_apparatus_pl(const TwoApparatusConfig& config, double mass) {
    config.validate();
    const FourVector p = momentum_from_velocity(config.velocity(), mass);
    const ThreeVector prepared = pl_axis(p, mass, FourVectorCoupling(0.0, config.field1_dir));
    return pl_expectation(p, mass, prepared, FourVectorCoupling(0.0, config.field2_dir));
}

std::vector<double> uniform_grid(double v_min, double v_max, int steps) {
    if (steps < 1) throw Error(ErrorCode::InvalidArgument, "grid needs at least one step");
    std::vector<double> grid(static_cast<std::size_t>(steps));
    for (int i = 0; i < steps; ++i) {
        grid[i] = steps == 1 ? v_min : v_min + (v_max - v_min) * static_cast<double>(i) / (steps - 1);
    }
    if (steps > 1) grid.back() = v_max;
    return grid;
}

std::vector<double> default_fig1_grid() { return uniform_grid(0.0, 0.999, 200); }

ScanResult scan_fig1(double theta, const std::vector<double>& v_grid, double mass) {
    ScanResult out;
    out.rows.reserve(v_grid.size());
    for (double v : v_grid) {
        TwoApparatusConfig config;
        config.speed = v;
        config.theta = theta;
        out.rows.push_back(ScanRow{v, two_apparatus_sg(config, mass), two_apparatus_pl(config, mass),
                                   closed_form_expectation(v, theta)});
    }
    return out;
}

Fig2Geometry fig2_geometry(double v, double theta) {
    TwoApparatusConfig config;
    config.speed = v;
    config.theta = theta;
    config.validate();
    const double mass = 1.0;
    const FourVector p = momentum_from_velocity(config.velocity(), mass);

    Fig2Geometry out;
    out.angle_B1B2_rest = angle_between(sg_axis(p, mass, magnetic_apparatus(config.field1_dir)),
                                        sg_axis(p, mass, magnetic_apparatus(config.field2_dir)));
    out.angle_G1G2_rest = angle_between(pl_axis(p, mass, FourVectorCoupling(0.0, config.field1_dir)),
                                        pl_axis(p, mass, FourVectorCoupling(0.0, config.field2_dir)));
    return out;
}

ParadoxResult paradox_demo(const std::vector<FourVector>& momenta, double mass, const EMFieldTensor& f,
                           std::optional<ThreeVector> initial_bloch) {
    if (momenta.size() < 2) {
        throw Error(ErrorCode::InvalidArgument, "the paradox needs at least two momenta");
    }
    if (!initial_bloch) {
        const ThreeVector b = f.magnetic();
        initial_bloch = b.norm() > kFieldEpsilon ? ThreeVector(b.normalized()) : ThreeVector::UnitZ();
    }
    const ParticleState state =
        ParticleState::equal_superposition(mass, momenta, SpinHalfState::from_bloch(*initial_bloch));

    const double alpha = 1.0;
    const MeasurementResult first = measure(state, f, alpha);

    const ThreeVector& reference = first.axes.front();
    const bool all_parallel = std::all_of(first.axes.begin(), first.axes.end(), [&](const ThreeVector& a) {
        return a.cross(reference).norm() <= kParallelAxes && a.dot(reference) > 0.0;
    });
    if (all_parallel) {
        throw Error(ErrorCode::AxesCoincide,
                    "every branch has the same rest-frame quantization axis, so no spin-momentum correlation arises");
    }
    if (!first.post_plus) {
        throw Error(ErrorCode::InvalidArgument, "outcome + has zero probability for this initial spin");
    }

    ParadoxResult out;
    out.prob_plus_first = first.prob_plus;
    out.purity_before = purity(reduced_spin_density(state));
    out.purity_after = purity(reduced_spin_density(*first.post_plus));
    out.remeasure_prob_plus = measure(*first.post_plus, f, alpha).prob_plus;
    out.axes = first.axes;
    return out;
}

bool FrameCheckReport::passed() const {
    return std::all_of(rows.begin(), rows.end(), [](const FrameCheckRow& r) { return r.passed(); });
}

}  // namespace relspin
