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

#include "relspin/minkowski.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "relspin/error.hpp"

namespace relspin {

const Eigen::Matrix4d& metric() {
    static const Eigen::Matrix4d g = Eigen::Vector4d(1.0, -1.0, -1.0, -1.0).asDiagonal();
    return g;
}

double minkowski_dot(const FourVector& a, const FourVector& b) {
    return a.t() * b.t() - a.spatial().dot(b.spatial());
}

double lorentz_factor(const ThreeVector& velocity) {
    const double speed = velocity.norm();
    if (!std::isfinite(speed) || speed >= 1.0 - kVelocityGuard) {
        std::ostringstream msg;
        msg << "|v| = " << speed << " must be below 1 - " << kVelocityGuard;
        throw Error(ErrorCode::VelocityOutOfRange, msg.str());
    }
    return 1.0 / std::sqrt(1.0 - velocity.squaredNorm());
}

LorentzDiagnostics validate_lorentz(const Eigen::Matrix4d& m) {
    const Eigen::Matrix4d& g = metric();
    LorentzDiagnostics d;
    d.residual = (m.transpose() * g * m - g).cwiseAbs().maxCoeff();
    d.determinant = m.determinant();
    d.time_time = m(0, 0);
    if (!m.allFinite()) d.residual = std::numeric_limits<double>::infinity();
    return d;
}

LorentzTransform LorentzTransform::from_matrix(const Eigen::Matrix4d& m, double tol) {
    const LorentzDiagnostics d = validate_lorentz(m);
    if (!d.passes(tol)) {
        std::ostringstream msg;
        msg << "residual " << d.residual << ", det " << d.determinant << ", L00 " << d.time_time
            << " (tolerance " << tol << ")";
        throw Error(ErrorCode::NotLorentz, msg.str());
    }
    return LorentzTransform(m);
}

LorentzTransform boost_from_velocity(const ThreeVector& v) {
    const double gamma = lorentz_factor(v);
    // (γ-1) v̂v̂ᵀ written as γ²/(γ+1) vvᵀ so that v = 0 needs no special case.
    const double k = gamma * gamma / (gamma + 1.0);
    Eigen::Matrix4d m = Eigen::Matrix4d::Identity();
    m(0, 0) = gamma;
    for (int i = 0; i < 3; ++i) {
        m(0, i + 1) = m(i + 1, 0) = gamma * v[i];
        for (int j = i; j < 3; ++j) {
            const double entry = (i == j ? 1.0 : 0.0) + k * v[i] * v[j];
            m(i + 1, j + 1) = m(j + 1, i + 1) = entry;
        }
    }
    return LorentzTransform(m);
}

LorentzTransform rotation_about_axis(const ThreeVector& axis, double angle) {
    const double norm = axis.norm();
    if (!(norm > 0.0) || !std::isfinite(norm)) {
        throw Error(ErrorCode::ZeroAxis, "rotation axis must be a nonzero finite vector");
    }
    const ThreeVector n = axis / norm;
    Eigen::Matrix3d cross;
    cross << 0.0, -n.z(), n.y(),
             n.z(), 0.0, -n.x(),
             -n.y(), n.x(), 0.0;
    const double c = std::cos(angle);
    const double s = std::sin(angle);
    Eigen::Matrix4d m = Eigen::Matrix4d::Identity();
    m.bottomRightCorner<3, 3>() = c * Eigen::Matrix3d::Identity() + s * cross + (1.0 - c) * n * n.transpose();
    return LorentzTransform(m);
}

LorentzTransform inverse(const LorentzTransform& lt) {
    const Eigen::Matrix4d& g = metric();
    return LorentzTransform(g * lt.matrix().transpose() * g);
}

}  // namespace relspin
