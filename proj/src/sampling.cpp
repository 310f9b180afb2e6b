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

#include "relspin/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace relspin {

ThreeVector Sampler::unit_vector() {
    const double z = uniform(-1.0, 1.0);
    const double phi = uniform(0.0, 2.0 * std::numbers::pi);
    const double rho = std::sqrt(std::max(0.0, 1.0 - z * z));
    return ThreeVector(rho * std::cos(phi), rho * std::sin(phi), z);
}

ThreeVector Sampler::velocity(double max_speed) { return uniform(0.0, max_speed) * unit_vector(); }

LorentzTransform Sampler::lorentz(double max_speed) {
    const ThreeVector v = velocity(max_speed);
    const ThreeVector axis = unit_vector();
    const double angle = uniform(-std::numbers::pi, std::numbers::pi);
    return boost_from_velocity(v) * rotation_about_axis(axis, angle);
}

FourVector Sampler::momentum(double mass, double max_speed) { return momentum_from_velocity(velocity(max_speed), mass); }

EMFieldTensor Sampler::field() {
    // |B| in [0.5, 1] and |E_i| <= 0.25 keep |B_rest| >= 0.25 for any speed.
    const ThreeVector b = uniform(0.5, 1.0) * unit_vector();
    const ThreeVector e(uniform(-0.25, 0.25), uniform(-0.25, 0.25), uniform(-0.25, 0.25));
    return tensor_from_fields(e, b);
}

SpinHalfState Sampler::spin() { return SpinHalfState::from_bloch(unit_vector()); }

}  // namespace relspin
