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

#include <optional>
#include <vector>

#include "relspin/electrodynamics.hpp"
#include "relspin/minkowski.hpp"
#include "relspin/wigner.hpp"

namespace relspin {

// Outcome convention: +1 means spin aligned with the magnetic field in the
// particle rest frame. For α > 0 that is the lower-energy eigenstate of Ĥ_SG,
// so outcome operators are -Ĥ/|λ| while the normalized Hamiltonian blocks
// Ĥ/|λ| are kept alongside them.

/// Stern-Gerlach interaction Hamiltonian -μ̂·B - d̂·E in the frame where the
/// particle has momentum p. Computed in both the dot-product and the
/// -(1/2γ) Tr(g F g D̂) form; throws NumericalBreakdown if they disagree.
Operator2 sg_hamiltonian(const FourVector& p, double mass, const EMFieldTensor& f, double alpha,
                         double hbar = 1.0);
Operator2 sg_hamiltonian_dot_form(const FourVector& p, double mass, const EMFieldTensor& f, double alpha,
                                  double hbar = 1.0);
Operator2 sg_hamiltonian_trace_form(const FourVector& p, double mass, const EMFieldTensor& f, double alpha,
                                    double hbar = 1.0);

/// Modulus of the eigenvalues of a traceless Hermitian 2×2 operator.
double eigenvalue_magnitude(const Operator2& h);

/// r · b(L⁻¹(p) F L⁻¹(p)ᵀ). `bloch` must be a unit vector.
double sg_expectation(const FourVector& p, double mass, const ThreeVector& bloch, const EMFieldTensor& f);

/// Rest-frame quantization axis of the apparatus for momentum p.
ThreeVector sg_axis(const FourVector& p, double mass, const EMFieldTensor& f);

struct MeasurementBlock {
    FourVector momentum;
    Operator2 normalized_hamiltonian;  // Ĥ_SG(p) / |λ|

    Operator2 outcome() const { return -normalized_hamiltonian; }
};

/// Σ_p |p⟩⟨p| ⊗ Ĥ_SG(p)/|λ(Ĥ_SG(p))| over a discrete set of momenta.
class MeasurementOperator {
  public:
    explicit MeasurementOperator(std::vector<MeasurementBlock> blocks);

    const std::vector<MeasurementBlock>& blocks() const { return blocks_; }

    /// Tr(M ρ) for the pure state ρ = |ψ⟩⟨ψ| with the ±1 outcome convention.
    /// Branch i must carry the momentum of block i.
    double expectation(const ParticleState& state) const;

  private:
    std::vector<MeasurementBlock> blocks_;
};

/// Throws DegenerateBlock naming the momentum whose |λ| vanishes.
MeasurementOperator sg_measurement_operator(const std::vector<FourVector>& momenta, double mass,
                                            const EMFieldTensor& f, double alpha, double hbar = 1.0);

struct MeasurementResult {
    double expectation = 0.0;
    double prob_plus = 0.0;
    double prob_minus = 0.0;
    /// Lüders-projected, renormalized states; empty when the outcome has
    /// probability zero.
    std::optional<ParticleState> post_plus;
    std::optional<ParticleState> post_minus;
    /// Rest-frame axis per branch.
    std::vector<ThreeVector> axes;
};

MeasurementResult measure(const ParticleState& state, const EMFieldTensor& f, double alpha);

/// Σ_i |c_i|² |φ_i⟩⟨φ_i|
Operator2 reduced_spin_density(const ParticleState& state);

/// Tr(ρ²)
double purity(const Operator2& rho);

/// |γ_v ⟨Ĥ_SG(p, F)⟩_r - γ_v' ⟨Ĥ_SG(Λp, ΛFΛᵀ)⟩_{R(W) r}|. Both terms are in
/// units of the frame-invariant scale γ_v |λ(Ĥ_SG)| = |α| ħ |B_rest| / 2.
double covariance_residual(const LorentzTransform& lambda, const FourVector& p, double mass, const EMFieldTensor& f,
                           const ThreeVector& bloch, double alpha, double hbar = 1.0);

/// Hypothetical coupling of the Pauli-Lubanski vector to a 4-vector (G⁰, G).
class FourVectorCoupling {
  public:
    /// Throws InvalidArgument if the coupling is identically zero.
    FourVectorCoupling(double g0, const ThreeVector& g);
    explicit FourVectorCoupling(const FourVector& g) : FourVectorCoupling(g.t(), g.spatial()) {}

    double g0() const { return g_.t(); }
    ThreeVector g() const { return g_.spatial(); }
    const FourVector& four_vector() const { return g_; }

  private:
    FourVector g_;
};

FourVectorCoupling transform_coupling(const LorentzTransform& lambda, const FourVectorCoupling& c);

/// Ŵ⁰G⁰ - Ŵ·G with Ŵ = (Ŝ·p, p⁰Ŝ) and Ŝ = [ŝ + (γ-1) v̂ (v̂·ŝ)] / γ.
Operator2 pl_hamiltonian(const FourVector& p, double mass, const FourVectorCoupling& c, double hbar = 1.0);

/// Normalized spatial part of L⁻¹(p)(G⁰, G). Throws DegenerateCoupling.
ThreeVector pl_axis(const FourVector& p, double mass, const FourVectorCoupling& c);

/// r · pl_axis, cross-checked against ⟨-Ĥ_PL/|λ|⟩.
double pl_expectation(const FourVector& p, double mass, const ThreeVector& bloch, const FourVectorCoupling& c);

}  // namespace relspin
