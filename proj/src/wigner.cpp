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

#include "relspin/wigner.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <utility>

#include "relspin/error.hpp"

namespace relspin {

namespace {

const Complex kI{0.0, 1.0};

// Unit quaternion (w, x, y, z) with w >= 0 for a proper rotation matrix,
// using the largest-pivot branch so no branch divides by a small number.
Eigen::Vector4d quaternion_from_rotation(const Eigen::Matrix3d& r) {
    const double tr = r.trace();
    Eigen::Vector4d q;
    if (tr >= r(0, 0) && tr >= r(1, 1) && tr >= r(2, 2)) {
        const double w = 0.5 * std::sqrt(std::max(0.0, 1.0 + tr));
        q << w, (r(2, 1) - r(1, 2)) / (4 * w), (r(0, 2) - r(2, 0)) / (4 * w), (r(1, 0) - r(0, 1)) / (4 * w);
    } else if (r(0, 0) >= r(1, 1) && r(0, 0) >= r(2, 2)) {
        const double x = 0.5 * std::sqrt(std::max(0.0, 1.0 + r(0, 0) - r(1, 1) - r(2, 2)));
        q << (r(2, 1) - r(1, 2)) / (4 * x), x, (r(0, 1) + r(1, 0)) / (4 * x), (r(0, 2) + r(2, 0)) / (4 * x);
    } else if (r(1, 1) >= r(2, 2)) {
        const double y = 0.5 * std::sqrt(std::max(0.0, 1.0 - r(0, 0) + r(1, 1) - r(2, 2)));
        q << (r(0, 2) - r(2, 0)) / (4 * y), (r(0, 1) + r(1, 0)) / (4 * y), y, (r(1, 2) + r(2, 1)) / (4 * y);
    } else {
        const double z = 0.5 * std::sqrt(std::max(0.0, 1.0 - r(0, 0) - r(1, 1) + r(2, 2)));
        q << (r(1, 0) - r(0, 1)) / (4 * z), (r(0, 2) + r(2, 0)) / (4 * z), (r(1, 2) + r(2, 1)) / (4 * z), z;
    }
    if (q[0] < 0.0) q = -q;
    return q.normalized();
}

}  // namespace

const std::array<Operator2, 3>& pauli() {
    static const std::array<Operator2, 3> sigma = [] {
        std::array<Operator2, 3> s;
        s[0] << 0.0, 1.0, 1.0, 0.0;
        s[1] << 0.0, -kI, kI, 0.0;
        s[2] << 1.0, 0.0, 0.0, -1.0;
        return s;
    }();
    return sigma;
}

RotationMatrix3 RotationMatrix3::from_matrix(const Eigen::Matrix3d& m, double tol) {
    const double residual = (m.transpose() * m - Eigen::Matrix3d::Identity()).cwiseAbs().maxCoeff();
    const double det = m.determinant();
    if (!m.allFinite() || residual > tol || std::abs(det - 1.0) > tol) {
        std::ostringstream msg;
        msg << "orthogonality residual " << residual << ", det " << det << " (tolerance " << tol << ")";
        throw Error(ErrorCode::NotRotation, msg.str());
    }
    return RotationMatrix3(m);
}

double RotationMatrix3::orthogonality_residual() const {
    return (m_.transpose() * m_ - Eigen::Matrix3d::Identity()).cwiseAbs().maxCoeff();
}

AxisAngle axis_angle(const RotationMatrix3& r) {
    const Eigen::Vector4d q = quaternion_from_rotation(r.matrix());
    const ThreeVector v = q.tail<3>();
    const double s = v.norm();
    AxisAngle out;
    out.angle = 2.0 * std::atan2(s, q[0]);
    if (s > 0.0) out.axis = v / s;
    return out;
}

SU2Matrix SU2Matrix::from_matrix(const Operator2& m, double tol) {
    const double unitarity = (m.adjoint() * m - Operator2::Identity()).cwiseAbs().maxCoeff();
    const double det_err = std::abs(m.determinant() - Complex(1.0));
    if (!m.allFinite() || unitarity > tol || det_err > tol) {
        std::ostringstream msg;
        msg << "unitarity residual " << unitarity << ", |det - 1| " << det_err;
        throw Error(ErrorCode::NotRotation, msg.str());
    }
    return SU2Matrix(m);
}

SU2Matrix su2_from_rotation(const RotationMatrix3& r) {
    const Eigen::Vector4d q = quaternion_from_rotation(r.matrix());
    const auto& s = pauli();
    Operator2 d = q[0] * Operator2::Identity() - kI * (q[1] * s[0] + q[2] * s[1] + q[3] * s[2]);
    return SU2Matrix(d);
}

SpinHalfState::SpinHalfState(Complex up, Complex down) : s_(up, down) {
    const double norm2 = std::norm(up) + std::norm(down);
    if (!std::isfinite(norm2) || std::abs(norm2 - 1.0) > kTolState) {
        std::ostringstream msg;
        msg << "spinor norm² " << norm2 << " differs from 1";
        throw Error(ErrorCode::InvalidState, msg.str());
    }
}

SpinHalfState SpinHalfState::from_bloch(const ThreeVector& direction) {
    const double norm = direction.norm();
    if (!(norm > 0.0) || !std::isfinite(norm)) {
        throw Error(ErrorCode::InvalidArgument, "Bloch direction must be a nonzero finite vector");
    }
    const ThreeVector n = direction / norm;
    Spinor s;
    if (n.z() >= 0.0) {
        s << 1.0 + n.z(), Complex(n.x(), n.y());
    } else {
        s << Complex(n.x(), -n.y()), 1.0 - n.z();
    }
    return SpinHalfState(s.normalized());
}

ThreeVector SpinHalfState::bloch() const {
    const auto& s = pauli();
    ThreeVector r;
    for (int k = 0; k < 3; ++k) r[k] = (s_.adjoint() * s[k] * s_)(0, 0).real();
    return r;
}

ParticleState::ParticleState(double mass, std::vector<Branch> branches)
    : mass_(mass), branches_(std::move(branches)) {
    if (!(mass_ > 0.0) || !std::isfinite(mass_)) {
        throw Error(ErrorCode::InvalidState, "mass must be positive");
    }
    if (branches_.empty()) throw Error(ErrorCode::InvalidState, "state has no branches");
    double total = 0.0;
    for (const Branch& b : branches_) {
        total += std::norm(b.amplitude);
        try {
            require_on_shell(b.momentum, mass_);
        } catch (const Error& e) {
            throw Error(ErrorCode::InvalidState, e.what());
        }
    }
    if (std::abs(total - 1.0) > kTolState) {
        std::ostringstream msg;
        msg << "sum of |amplitude|² is " << total;
        throw Error(ErrorCode::InvalidState, msg.str());
    }
    for (std::size_t i = 0; i < branches_.size(); ++i) {
        for (std::size_t j = i + 1; j < branches_.size(); ++j) {
            const Eigen::Vector4d& a = branches_[i].momentum.components();
            const Eigen::Vector4d& b = branches_[j].momentum.components();
            const double scale = std::max(a[0], b[0]);
            if ((a - b).cwiseAbs().maxCoeff() <= kTolState * scale) {
                std::ostringstream msg;
                msg << "branches " << i << " and " << j << " carry the same momentum";
                throw Error(ErrorCode::InvalidState, msg.str());
            }
        }
    }
}

ParticleState ParticleState::single(double mass, const FourVector& momentum, const SpinHalfState& spin) {
    return ParticleState(mass, {Branch{Complex(1.0), momentum, spin, 1.0}});
}

ParticleState ParticleState::equal_superposition(double mass, const std::vector<FourVector>& momenta,
                                                 const SpinHalfState& spin) {
    std::vector<Branch> branches;
    branches.reserve(momenta.size());
    const double amp = momenta.empty() ? 0.0 : 1.0 / std::sqrt(static_cast<double>(momenta.size()));
    for (const FourVector& p : momenta) branches.push_back(Branch{Complex(amp), p, spin, 1.0});
    return ParticleState(mass, std::move(branches));
}

FourVector momentum_from_velocity(const ThreeVector& velocity, double mass) {
    const double gamma = lorentz_factor(velocity);
    return FourVector(gamma * mass, gamma * mass * velocity);
}

void require_on_shell(const FourVector& p, double mass) {
    if (!(mass > 0.0) || !std::isfinite(mass)) {
        throw Error(ErrorCode::InvalidArgument, "mass must be positive");
    }
    if (!p.components().allFinite()) throw Error(ErrorCode::OffShell, "momentum has non-finite components");
    if (p.t() <= 0.0) {
        std::ostringstream msg;
        msg << "p^0 = " << p.t() << " must be positive";
        throw Error(ErrorCode::NonpositiveEnergy, msg.str());
    }
    const double shell = minkowski_dot(p, p) - mass * mass;
    if (std::abs(shell) > kTolState * p.t() * p.t()) {
        std::ostringstream msg;
        msg << "p.p - m² = " << shell << " for m = " << mass;
        throw Error(ErrorCode::OffShell, msg.str());
    }
}

LorentzTransform standard_boost(const FourVector& p, double mass) {
    require_on_shell(p, mass);
    return boost_from_velocity(p.spatial() / p.t());
}

WignerRotation wigner_rotation(const LorentzTransform& lambda, const FourVector& p, double mass) {
    const FourVector lp = lambda * p;
    const LorentzTransform w = inverse(standard_boost(lp, mass)) * lambda * standard_boost(p, mass);
    const Eigen::Matrix4d& m = w.matrix();
    const double time_leak = std::max(std::abs(m(0, 0) - 1.0),
                                      std::max(m.row(0).tail<3>().cwiseAbs().maxCoeff(),
                                               m.col(0).tail<3>().cwiseAbs().maxCoeff()));
    if (time_leak > kTolGroup) {
        std::ostringstream msg;
        msg << "W does not fix the rest momentum: time row/column deviates by " << time_leak;
        throw Error(ErrorCode::NotRotation, msg.str());
    }
    return WignerRotation{w, RotationMatrix3::from_matrix(m.bottomRightCorner<3, 3>())};
}

ParticleState transform_state(const LorentzTransform& lambda, const ParticleState& state) {
    std::vector<Branch> out;
    out.reserve(state.size());
    for (const Branch& b : state.branches()) {
        const WignerRotation w = wigner_rotation(lambda, b.momentum, state.mass());
        const FourVector lp = lambda * b.momentum;
        const Spinor rotated = su2_from_rotation(w.rotation) * b.spin.spinor();
        out.push_back(Branch{b.amplitude, lp, SpinHalfState(rotated),
                             b.density_weight * std::sqrt(lp.t() / b.momentum.t())});
    }
    return ParticleState(state.mass(), std::move(out));
}

}  // namespace relspin
