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

#include <algorithm>
#include <cmath>

#include "relspin/error.hpp"
#include "relspin/experiments.hpp"
#include "relspin/sampling.hpp"

namespace relspin {

namespace {

constexpr double kMaxSpeed = 0.95;
constexpr double kObservableTol = 1e-8;

}  // namespace

FrameCheckReport frame_check(std::uint64_t seed, int trials) {
    if (trials < 1) throw Error(ErrorCode::InvalidArgument, "trials must be at least 1");

    Sampler rng(seed);
    const double mass = 1.0;
    const double alpha = 1.0;
    const double hbar = 1.0;
    const FourVector rest(mass, 0.0, 0.0, 0.0);

    double covariance = 0.0;
    double sg_invariance = 0.0;
    double pl_invariance = 0.0;
    double little_group = 0.0;
    double orthogonality = 0.0;
    double dipole = 0.0;

    for (int i = 0; i < trials; ++i) {
        const LorentzTransform lambda = rng.lorentz(kMaxSpeed);
        const FourVector p = rng.momentum(mass, kMaxSpeed);
        const EMFieldTensor f = rng.field();
        const ThreeVector r = rng.unit_vector();
        const FourVectorCoupling coupling(rng.uniform(-0.25, 0.25), rng.uniform(0.5, 1.0) * rng.unit_vector());

        const FourVector lp = lambda * p;
        const WignerRotation w = wigner_rotation(lambda, p, mass);
        const ThreeVector r_new = w.rotation * r;

        // Residual relative to the frame-invariant scale γ|λ(Ĥ)|.
        const double gamma = lorentz_factor(p.spatial() / p.t());
        const double scale = gamma * eigenvalue_magnitude(sg_hamiltonian(p, mass, f, alpha, hbar));
        covariance = std::max(covariance, covariance_residual(lambda, p, mass, f, r, alpha, hbar) / scale);

        sg_invariance = std::max(sg_invariance, std::abs(sg_expectation(lp, mass, r_new, transform_tensor(lambda, f)) -
                                                         sg_expectation(p, mass, r, f)));
        pl_invariance =
            std::max(pl_invariance, std::abs(pl_expectation(lp, mass, r_new, transform_coupling(lambda, coupling)) -
                                             pl_expectation(p, mass, r, coupling)));

        little_group = std::max(little_group, ((w.transform * rest).components() - rest.components()).cwiseAbs().maxCoeff());
        orthogonality = std::max(orthogonality, w.rotation.orthogonality_residual());

        const ThreeVector spin = 0.5 * hbar * r;
        const Eigen::Matrix4d boosted =
            lambda.matrix() * dipole_tensor(p.spatial() / p.t(), spin, alpha) * lambda.matrix().transpose();
        const Eigen::Matrix4d expected = dipole_tensor(lp.spatial() / lp.t(), ThreeVector(0.5 * hbar * r_new), alpha);
        dipole = std::max(dipole, (boosted - expected).cwiseAbs().maxCoeff());
    }

    FrameCheckReport report;
    report.rows = {
        {"hamiltonian_covariance", covariance, kTolGroup},
        {"sg_frame_invariance", sg_invariance, kObservableTol},
        {"pl_frame_invariance", pl_invariance, kObservableTol},
        {"wigner_little_group", little_group, kTolGroup},
        {"wigner_orthogonality", orthogonality, kTolGroup},
        {"dipole_covariance", dipole, kTolGroup},
    };
    return report;
}

}  // namespace relspin
