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

#include <array>
#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "relspin/minkowski.hpp"

namespace relspin {

using Complex = std::complex<double>;
using Operator2 = Eigen::Matrix2cd;
using Spinor = Eigen::Vector2cd;

/// σx, σy, σz.
const std::array<Operator2, 3>& pauli();

/// Element of SO(3). Validated on construction.
class RotationMatrix3 {
  public:
    RotationMatrix3() = default;

    /// Throws NotRotation unless RᵀR = I and det R = +1 within `tol`.
    static RotationMatrix3 from_matrix(const Eigen::Matrix3d& m, double tol = kTolGroup);

    const Eigen::Matrix3d& matrix() const { return m_; }
    ThreeVector operator*(const ThreeVector& v) const { return m_ * v; }

    /// max |(RᵀR - I)_ij|
    double orthogonality_residual() const;

  private:
    explicit RotationMatrix3(const Eigen::Matrix3d& m) : m_(m) {}
    Eigen::Matrix3d m_{Eigen::Matrix3d::Identity()};
};

struct AxisAngle {
    ThreeVector axis{0.0, 0.0, 1.0};  // unit; arbitrary (ẑ) when angle == 0
    double angle = 0.0;               // in [0, π]
};

AxisAngle axis_angle(const RotationMatrix3& r);

/// Element of SU(2) acting on spinors.
class SU2Matrix {
  public:
    SU2Matrix() = default;
    static SU2Matrix from_matrix(const Operator2& m, double tol = kTolGroup);

    const Operator2& matrix() const { return m_; }
    Spinor operator*(const Spinor& s) const { return m_ * s; }

  private:
    explicit SU2Matrix(const Operator2& m) : m_(m) {}
    Operator2 m_{Operator2::Identity()};

    friend SU2Matrix su2_from_rotation(const RotationMatrix3& r);
};

/// cos(θ/2) I - i sin(θ/2) n̂·σ for the axis-angle (n̂, θ) of `r`, θ ∈ [0, π].
/// Satisfies D σ_i D† = Σ_j R_ji σ_j, i.e. Bloch(Dφ) = R Bloch(φ).
SU2Matrix su2_from_rotation(const RotationMatrix3& r);

/// Normalized spin-1/2 state.
class SpinHalfState {
  public:
    /// Spin up along ẑ.
    SpinHalfState() = default;

    /// Throws InvalidState unless |up|² + |down|² = 1 within kTolState.
    SpinHalfState(Complex up, Complex down);
    explicit SpinHalfState(const Spinor& s) : SpinHalfState(s[0], s[1]) {}

    /// The +1 eigenstate of n̂·σ for n̂ = direction / |direction|. The phase
    /// is chosen continuously away from whichever pole is far from n̂.
    static SpinHalfState from_bloch(const ThreeVector& direction);

    Complex up() const { return s_[0]; }
    Complex down() const { return s_[1]; }
    const Spinor& spinor() const { return s_; }

    /// ⟨σ⟩
    ThreeVector bloch() const;
    /// |φ⟩⟨φ|
    Operator2 density_matrix() const { return s_ * s_.adjoint(); }

  private:
    Spinor s_{Complex(1.0), Complex(0.0)};
};

/// One momentum eigenstate of a superposition; spin stays attached per branch.
struct Branch {
    Complex amplitude{1.0};
    FourVector momentum;
    SpinHalfState spin;
    /// Cumulative product of sqrt((Λp)^0 / p^0) over applied transforms.
    /// Diagnostic only; never folded into `amplitude`.
    double density_weight = 1.0;
};

/// Finite superposition of distinct on-shell momentum eigenstates.
class ParticleState {
  public:
    /// Throws InvalidState on: mass <= 0, empty branches, Σ|c|² != 1,
    /// an off-shell or negative-energy momentum, or repeated momenta.
    ParticleState(double mass, std::vector<Branch> branches);

    static ParticleState single(double mass, const FourVector& momentum, const SpinHalfState& spin);
    /// Equal amplitudes 1/sqrt(N), same spin on every branch.
    static ParticleState equal_superposition(double mass, const std::vector<FourVector>& momenta,
                                             const SpinHalfState& spin);

    double mass() const { return mass_; }
    const std::vector<Branch>& branches() const { return branches_; }
    std::size_t size() const { return branches_.size(); }

  private:
    double mass_;
    std::vector<Branch> branches_;
};

/// (γm, γm v).
FourVector momentum_from_velocity(const ThreeVector& velocity, double mass);

/// Throws OffShell / NonpositiveEnergy / InvalidArgument when p is not a
/// valid momentum for a particle of mass `mass`.
void require_on_shell(const FourVector& p, double mass);

/// L(p): the rotationless boost with velocity p/p^0, so L(p)(m,0,0,0) = p.
LorentzTransform standard_boost(const FourVector& p, double mass);

struct WignerRotation {
    LorentzTransform transform;  // W = L⁻¹(Λp) Λ L(p)
    RotationMatrix3 rotation;    // spatial block of W
};

/// Throws NotRotation if W does not fix the time axis within kTolGroup or its
/// spatial block is not in SO(3).
WignerRotation wigner_rotation(const LorentzTransform& lambda, const FourVector& p, double mass);

/// Maps each branch (c, p, φ) to (c, Λp, D(W(Λ,p)) φ).
ParticleState transform_state(const LorentzTransform& lambda, const ParticleState& state);

}  // namespace relspin
