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

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "relspin/electrodynamics.hpp"
#include "relspin/minkowski.hpp"
#include "relspin/spin_measurement.hpp"

namespace relspin {

/// A particle moving with v [cos θ x̂ + sin θ ŷ] passes a preparing apparatus
/// (field along field1_dir) and then a measuring one (field along field2_dir).
struct TwoApparatusConfig {
    double speed = 0.0;
    double theta = 0.0;
    ThreeVector field1_dir = ThreeVector::UnitX();
    ThreeVector field2_dir = ThreeVector::UnitY();

    /// Throws VelocityOutOfRange unless 0 <= speed < 1 - kVelocityGuard.
    void validate() const;
    ThreeVector velocity() const;
};

/// -v² sin θ cos θ / sqrt([1 - v² cos² θ][1 - v² sin² θ]), 0 <= v < 1.
double closed_form_expectation(double v, double theta);

/// Prepare along the rest-frame field of apparatus 1, measure with apparatus 2.
double two_apparatus_sg(const TwoApparatusConfig& config, double mass = 1.0);

/// Same experiment when spin couples to 4-vectors (0, G₁), (0, G₂).
double two_apparatus_pl(const TwoApparatusConfig& config, double mass = 1.0);

struct ScanRow {
    double v = 0.0;
    double expectation_sg = 0.0;
    double expectation_pl = 0.0;
    double closed_form = 0.0;
};

struct ScanResult {
    std::vector<ScanRow> rows;
};

/// `steps` uniform points on [v_min, v_max] (a single point yields v_min).
std::vector<double> uniform_grid(double v_min, double v_max, int steps);

/// 200 points on [0, 0.999].
std::vector<double> default_fig1_grid();

ScanResult scan_fig1(double theta, const std::vector<double>& v_grid, double mass = 1.0);

struct Fig2Geometry {
    double angle_B1B2_rest = 0.0;  // rest-frame angle between the two magnetic fields
    double angle_G1G2_rest = 0.0;  // rest-frame angle between the two coupling 4-vectors
};

/// Apparatus fields along x̂ and ŷ.
Fig2Geometry fig2_geometry(double v, double theta);

struct ParadoxResult {
    double prob_plus_first = 0.0;      // probability of the conditioning outcome
    double purity_before = 0.0;
    double purity_after = 0.0;         // reduced spin purity after conditioning on +
    double remeasure_prob_plus = 0.0;  // + again under the identical apparatus
    std::vector<ThreeVector> axes;     // rest-frame quantization axis per branch
};

/// Equal-amplitude superposition over `momenta`, every branch starting in
/// spin `initial_bloch` (default: the lab magnetic field direction, or ẑ if
/// it vanishes). Measures with F, keeps outcome +, measures again.
/// Throws InvalidArgument for fewer than two momenta or a zero-probability
/// + outcome, InvalidState for repeated momenta, AxesCoincide when every
/// rest-frame axis points the same way.
ParadoxResult paradox_demo(const std::vector<FourVector>& momenta, double mass, const EMFieldTensor& f,
                           std::optional<ThreeVector> initial_bloch = std::nullopt);

struct FrameCheckRow {
    std::string check;
    double max_residual = 0.0;
    double tolerance = 0.0;
    bool passed() const { return max_residual < tolerance; }
};

struct FrameCheckReport {
    std::vector<FrameCheckRow> rows;
    bool passed() const;
};

/// Seeded sweeps over random frames, momenta, fields and spins: Hamiltonian
/// covariance, observable frame invariance (SG and PL), the little-group
/// property of W and dipole tensor covariance. Deterministic in `seed`.
FrameCheckReport frame_check(std::uint64_t seed, int trials);

}  // namespace relspin
