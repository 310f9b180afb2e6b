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
#include <random>

#include "relspin/electrodynamics.hpp"
#include "relspin/minkowski.hpp"
#include "relspin/wigner.hpp"

namespace relspin {

/// Seeded generator of random physical inputs. Doubles are built from raw
/// mt19937_64 output rather than std distributions, so a seed gives the same
/// stream on every standard library.
class Sampler {
  public:
    explicit Sampler(std::uint64_t seed) : engine_(seed) {}

    /// [0, 1)
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    ThreeVector unit_vector();
    /// Isotropic direction, speed uniform in [0, max_speed].
    ThreeVector velocity(double max_speed);
    /// boost(v) · rotation, |v| <= max_speed.
    LorentzTransform lorentz(double max_speed);
    FourVector momentum(double mass, double max_speed);
    /// E and B with components in [-1, 1]; B is kept away from zero.
    EMFieldTensor field();
    SpinHalfState spin();

  private:
    std::mt19937_64 engine_;
};

}  // namespace relspin
