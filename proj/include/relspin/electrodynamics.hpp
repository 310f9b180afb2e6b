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

#include <Eigen/Dense>

#include "relspin/minkowski.hpp"
#include "relspin/wigner.hpp"

namespace relspin {

/// Below this magnitude a magnetic field defines no quantization axis.
inline constexpr double kFieldEpsilon = 1e-12;

/// Antisymmetric field tensor. Encoding (metric +,-,-,-):
///   F^{0i} = -E^i,  F^{ij} = -ε^{ijk} B_k.
/// With this encoding ΛFΛᵀ reproduces the textbook laws for a frame moving
/// with velocity -v when Λ = boost_from_velocity(v).
class EMFieldTensor {
  public:
    EMFieldTensor() = default;

    /// Throws NotAntisymmetric if |F + Fᵀ| exceeds `tol`. The stored matrix
    /// is the antisymmetric part, so the invariant holds exactly.
    static EMFieldTensor from_matrix(const Eigen::Matrix4d& m, double tol = kTolGroup);

    const Eigen::Matrix4d& matrix() const { return m_; }
    ThreeVector electric() const;
    ThreeVector magnetic() const;

  private:
    explicit EMFieldTensor(const Eigen::Matrix4d& m) : m_(m) {}
    Eigen::Matrix4d m_{Eigen::Matrix4d::Zero()};

    friend EMFieldTensor tensor_from_fields(const ThreeVector& e, const ThreeVector& b);
    friend EMFieldTensor transform_tensor(const LorentzTransform& lambda, const EMFieldTensor& f);
};

struct FieldPair {
    ThreeVector electric;
    ThreeVector magnetic;
};

EMFieldTensor tensor_from_fields(const ThreeVector& e, const ThreeVector& b);

FieldPair fields_from_tensor(const EMFieldTensor& f);
/// Raw-matrix form; throws NotAntisymmetric.
FieldPair fields_from_tensor(const Eigen::Matrix4d& f);

/// ΛFΛᵀ
EMFieldTensor transform_tensor(const LorentzTransform& lambda, const EMFieldTensor& f);

/// L⁻¹(p) F L⁻¹(p)ᵀ: the field seen by the particle in its rest frame.
EMFieldTensor rest_frame_field(const FourVector& p, double mass, const EMFieldTensor& f);

/// B / |B|. Throws DegenerateField when |B| <= kFieldEpsilon.
ThreeVector magnetic_axis(const EMFieldTensor& f);

/// ħ/2 σ
std::array<Operator2, 3> spin_operators(double hbar = 1.0);

/// Antisymmetric tensor of 2×2 operators built like EMFieldTensor from
/// E -> γ d̂, B -> -γ μ̂ with
///   μ̂ = α [ŝ - γ/(γ+1) v (v·ŝ)],  d̂ = α (v × ŝ).
class DipoleTensor {
  public:
    using Entries = std::array<std::array<Operator2, 4>, 4>;

    explicit DipoleTensor(const Entries& entries) : entries_(entries) {}

    const Operator2& operator()(int row, int col) const { return entries_[row][col]; }
    const Entries& entries() const { return entries_; }

    /// Σ_ab c_ab D̂^{ab}
    Operator2 contract(const Eigen::Matrix4d& c) const;
    /// Replaces each entry by its expectation value in `spin`.
    Eigen::Matrix4d expectation(const SpinHalfState& spin) const;

  private:
    Entries entries_;
};

DipoleTensor dipole_tensor(const ThreeVector& velocity, const std::array<Operator2, 3>& spin_ops, double alpha);

/// c-number dipole tensor with ŝ replaced by the vector `spin`
/// (e.g. ħ/2 times a Bloch vector).
Eigen::Matrix4d dipole_tensor(const ThreeVector& velocity, const ThreeVector& spin, double alpha);

}  // namespace relspin
