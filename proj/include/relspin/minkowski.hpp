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

#include <Eigen/Dense>

namespace relspin {

/// Absolute tolerance on matrix residuals (group identities, orthogonality).
inline constexpr double kTolGroup = 1e-9;
/// Speeds at or above 1 - kVelocityGuard are rejected (c = 1).
inline constexpr double kVelocityGuard = 1e-9;
/// Normalization and mass-shell tolerance for states.
inline constexpr double kTolState = 1e-9;

using ThreeVector = Eigen::Vector3d;

/// Contravariant four-vector (t, x, y, z) under the metric diag(1,-1,-1,-1).
class FourVector {
  public:
    FourVector() = default;
    FourVector(double t, double x, double y, double z) : c_(t, x, y, z) {}
    FourVector(double t, const ThreeVector& spatial) : c_(t, spatial.x(), spatial.y(), spatial.z()) {}
    explicit FourVector(const Eigen::Vector4d& components) : c_(components) {}

    double t() const { return c_[0]; }
    double x() const { return c_[1]; }
    double y() const { return c_[2]; }
    double z() const { return c_[3]; }
    ThreeVector spatial() const { return c_.tail<3>(); }
    const Eigen::Vector4d& components() const { return c_; }

    friend bool operator==(const FourVector& a, const FourVector& b) { return a.c_ == b.c_; }

  private:
    Eigen::Vector4d c_{Eigen::Vector4d::Zero()};
};

/// The metric g = diag(1,-1,-1,-1).
const Eigen::Matrix4d& metric();

/// a^0 b^0 - a.b
double minkowski_dot(const FourVector& a, const FourVector& b);

/// 1/sqrt(1 - v^2). Throws VelocityOutOfRange when |v| >= 1 - kVelocityGuard.
double lorentz_factor(const ThreeVector& velocity);

struct LorentzDiagnostics {
    double residual = 0.0;     // max |(Λ^T g Λ - g)_ij|
    double determinant = 0.0;
    double time_time = 0.0;    // Λ^0_0

    /// Proper orthochronous within `tol`. Once the residual is small, |det| is
    /// pinned near 1, so only its sign is informative.
    bool passes(double tol = kTolGroup) const {
        return residual <= tol && determinant > 0.0 && time_time >= 1.0 - tol;
    }
};

LorentzDiagnostics validate_lorentz(const Eigen::Matrix4d& m);

/// Proper orthochronous Lorentz transformation. Instances built from raw
/// matrices are validated; those built by formula (boosts, rotations,
/// inverses, products) are trusted.
class LorentzTransform {
  public:
    LorentzTransform() = default;

    /// Throws NotLorentz if the matrix fails validation at `tol`.
    static LorentzTransform from_matrix(const Eigen::Matrix4d& m, double tol = kTolGroup);

    const Eigen::Matrix4d& matrix() const { return m_; }
    double operator()(int row, int col) const { return m_(row, col); }

    LorentzTransform operator*(const LorentzTransform& rhs) const { return LorentzTransform(m_ * rhs.m_); }
    FourVector operator*(const FourVector& v) const { return FourVector(m_ * v.components()); }

  private:
    explicit LorentzTransform(const Eigen::Matrix4d& m) : m_(m) {}

    Eigen::Matrix4d m_{Eigen::Matrix4d::Identity()};

    friend LorentzTransform boost_from_velocity(const ThreeVector& v);
    friend LorentzTransform rotation_about_axis(const ThreeVector& axis, double angle);
    friend LorentzTransform inverse(const LorentzTransform& lt);
};

inline LorentzDiagnostics validate_lorentz(const LorentzTransform& lt) { return validate_lorentz(lt.matrix()); }

/// Rotationless pure boost taking (m,0,0,0) to (γm, γm v).
LorentzTransform boost_from_velocity(const ThreeVector& v);

/// Spatial rotation by `angle` (right-handed) about `axis`. Throws ZeroAxis.
LorentzTransform rotation_about_axis(const ThreeVector& axis, double angle);

/// g Λ^T g.
LorentzTransform inverse(const LorentzTransform& lt);

}  // namespace relspin
