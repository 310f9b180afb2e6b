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

#include "relspin/electrodynamics.hpp"

#include <cmath>
#include <sstream>

#include "relspin/error.hpp"

namespace relspin {

namespace {

Eigen::Matrix4d encode(const ThreeVector& e, const ThreeVector& b) {
    Eigen::Matrix4d f = Eigen::Matrix4d::Zero();
    for (int i = 0; i < 3; ++i) {
        f(0, i + 1) = -e[i];
        f(i + 1, 0) = e[i];
    }
    f(1, 2) = -b.z();
    f(2, 1) = b.z();
    f(2, 3) = -b.x();
    f(3, 2) = b.x();
    f(3, 1) = -b.y();
    f(1, 3) = b.y();
    return f;
}

FieldPair decode(const Eigen::Matrix4d& f) {
    return FieldPair{ThreeVector(f(1, 0), f(2, 0), f(3, 0)), ThreeVector(f(3, 2), f(1, 3), f(2, 1))};
}

// D^{ab} = Σ_j T_j(a,b) s_j
std::array<Eigen::Matrix4d, 3> dipole_coefficients(const ThreeVector& v, double alpha) {
    const double gamma = lorentz_factor(v);
    const Eigen::Matrix3d mu = alpha * (Eigen::Matrix3d::Identity() - gamma / (gamma + 1.0) * v * v.transpose());
    Eigen::Matrix3d cross;
    cross << 0.0, -v.z(), v.y(),
             v.z(), 0.0, -v.x(),
             -v.y(), v.x(), 0.0;
    const Eigen::Matrix3d d = alpha * cross;
    std::array<Eigen::Matrix4d, 3> t;
    for (int j = 0; j < 3; ++j) t[j] = encode(gamma * d.col(j), -gamma * mu.col(j));
    return t;
}

}  // namespace

EMFieldTensor EMFieldTensor::from_matrix(const Eigen::Matrix4d& m, double tol) {
    const double asym = (m + m.transpose()).cwiseAbs().maxCoeff();
    if (!m.allFinite() || asym > tol) {
        std::ostringstream msg;
        msg << "|F + Fᵀ| = " << asym << " exceeds " << tol;
        throw Error(ErrorCode::NotAntisymmetric, msg.str());
    }
    return EMFieldTensor(0.5 * (m - m.transpose()));
}

ThreeVector EMFieldTensor::electric() const { return decode(m_).electric; }
ThreeVector EMFieldTensor::magnetic() const { return decode(m_).magnetic; }

EMFieldTensor tensor_from_fields(const ThreeVector& e, const ThreeVector& b) { return EMFieldTensor(encode(e, b)); }

FieldPair fields_from_tensor(const EMFieldTensor& f) { return decode(f.matrix()); }

FieldPair fields_from_tensor(const Eigen::Matrix4d& f) { return decode(EMFieldTensor::from_matrix(f).matrix()); }

EMFieldTensor transform_tensor(const LorentzTransform& lambda, const EMFieldTensor& f) {
    const Eigen::Matrix4d m = lambda.matrix() * f.matrix() * lambda.matrix().transpose();
    return EMFieldTensor(0.5 * (m - m.transpose()));
}

EMFieldTensor rest_frame_field(const FourVector& p, double mass, const EMFieldTensor& f) {
    return transform_tensor(inverse(standard_boost(p, mass)), f);
}

ThreeVector magnetic_axis(const EMFieldTensor& f) {
    const ThreeVector b = f.magnetic();
    const double norm = b.norm();
    if (!(norm > kFieldEpsilon)) {
        std::ostringstream msg;
        msg << "|B| = " << norm << " leaves the quantization axis undefined";
        throw Error(ErrorCode::DegenerateField, msg.str());
    }
    return b / norm;
}

std::array<Operator2, 3> spin_operators(double hbar) {
    std::array<Operator2, 3> s = pauli();
    for (Operator2& op : s) op *= 0.5 * hbar;
    return s;
}

Operator2 DipoleTensor::contract(const Eigen::Matrix4d& c) const {
    Operator2 out = Operator2::Zero();
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b)
            if (c(a, b) != 0.0) out += c(a, b) * entries_[a][b];
    return out;
}

Eigen::Matrix4d DipoleTensor::expectation(const SpinHalfState& spin) const {
    Eigen::Matrix4d out;
    const Spinor& s = spin.spinor();
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) out(a, b) = (s.adjoint() * entries_[a][b] * s)(0, 0).real();
    return out;
}

DipoleTensor dipole_tensor(const ThreeVector& velocity, const std::array<Operator2, 3>& spin_ops, double alpha) {
    for (const Operator2& op : spin_ops) {
        if ((op - op.adjoint()).cwiseAbs().maxCoeff() > kTolGroup) {
            throw Error(ErrorCode::InvalidArgument, "spin operators must be Hermitian");
        }
    }
    const auto t = dipole_coefficients(velocity, alpha);
    DipoleTensor::Entries entries;
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b)
            entries[a][b] = t[0](a, b) * spin_ops[0] + t[1](a, b) * spin_ops[1] + t[2](a, b) * spin_ops[2];
    return DipoleTensor(entries);
}

Eigen::Matrix4d dipole_tensor(const ThreeVector& velocity, const ThreeVector& spin, double alpha) {
    const auto t = dipole_coefficients(velocity, alpha);
    return t[0] * spin.x() + t[1] * spin.y() + t[2] * spin.z();
}

}  // namespace relspin
