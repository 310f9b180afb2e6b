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

#include "relspin/spin_measurement.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <utility>

#include "relspin/error.hpp"

namespace relspin {

namespace {

// Outcome probabilities below this leave no post-measurement state.
constexpr double kNegligibleProbability = 1e-12;

void require_positive_alpha(double alpha) {
    if (!(alpha > 0.0) || !std::isfinite(alpha)) {
        throw Error(ErrorCode::InvalidArgument, "gyromagnetic ratio must be positive for the +1 = aligned convention");
    }
}

void require_unit(const ThreeVector& r) {
    if (!r.allFinite() || std::abs(r.norm() - 1.0) > kTolState) {
        std::ostringstream msg;
        msg << "Bloch vector must be a unit vector, |r| = " << r.norm();
        throw Error(ErrorCode::InvalidArgument, msg.str());
    }
}

std::string describe(const FourVector& p) {
    std::ostringstream os;
    os.precision(17);
    os << "(" << p.t() << ", " << p.x() << ", " << p.y() << ", " << p.z() << ")";
    return os.str();
}

ThreeVector velocity_of(const FourVector& p, double mass) {
    require_on_shell(p, mass);
    return p.spatial() / p.t();
}

// Re Tr(H (I + r·σ)/2)
double expectation_in(const Operator2& h, const ThreeVector& r) {
    const auto& s = pauli();
    const Operator2 rho = 0.5 * (Operator2::Identity() + r.x() * s[0] + r.y() * s[1] + r.z() * s[2]);
    return (h * rho).trace().real();
}

Operator2 combine(const Eigen::Vector3d& coeffs, const std::array<Operator2, 3>& ops) {
    return coeffs.x() * ops[0] + coeffs.y() * ops[1] + coeffs.z() * ops[2];
}

}  // namespace

Operator2 sg_hamiltonian_dot_form(const FourVector& p, double mass, const EMFieldTensor& f, double alpha,
                                  double hbar) {
    const ThreeVector v = velocity_of(p, mass);
    const double gamma = lorentz_factor(v);
    const FieldPair fields = fields_from_tensor(f);
    const auto s = spin_operators(hbar);

    // -μ̂·B - d̂·E = -α ŝ·[B - γ/(γ+1) v (v·B)] - α ŝ·(E × v)
    const ThreeVector mu_side = fields.magnetic - gamma / (gamma + 1.0) * v * v.dot(fields.magnetic);
    const ThreeVector d_side = fields.electric.cross(v);
    return -alpha * combine(mu_side + d_side, s);
}

Operator2 sg_hamiltonian_trace_form(const FourVector& p, double mass, const EMFieldTensor& f, double alpha,
                                    double hbar) {
    const ThreeVector v = velocity_of(p, mass);
    const double gamma = lorentz_factor(v);
    const DipoleTensor d = dipole_tensor(v, spin_operators(hbar), alpha);
    const Eigen::Matrix4d& g = metric();
    // Tr(g F g D̂) = Σ_ab (gFg)_ab D̂_ba
    const Eigen::Matrix4d gfg = g * f.matrix() * g;
    return -(0.5 / gamma) * d.contract(gfg.transpose());
}

Operator2 sg_hamiltonian(const FourVector& p, double mass, const EMFieldTensor& f, double alpha, double hbar) {
    const Operator2 dot = sg_hamiltonian_dot_form(p, mass, f, alpha, hbar);
    const Operator2 trace = sg_hamiltonian_trace_form(p, mass, f, alpha, hbar);
    const double scale = std::max(1.0, dot.cwiseAbs().maxCoeff());
    const double diff = (dot - trace).cwiseAbs().maxCoeff();
    if (diff > kTolGroup * scale) {
        std::ostringstream msg;
        msg << "dot-product and trace forms of the Hamiltonian differ by " << diff;
        throw Error(ErrorCode::NumericalBreakdown, msg.str());
    }
    return dot;
}

double eigenvalue_magnitude(const Operator2& h) {
    const double half_split = 0.5 * (h(0, 0).real() - h(1, 1).real());
    return std::sqrt(half_split * half_split + std::norm(h(0, 1)));
}

ThreeVector sg_axis(const FourVector& p, double mass, const EMFieldTensor& f) {
    return magnetic_axis(rest_frame_field(p, mass, f));
}

double sg_expectation(const FourVector& p, double mass, const ThreeVector& bloch, const EMFieldTensor& f) {
    require_unit(bloch);
    return std::clamp(bloch.dot(sg_axis(p, mass, f)), -1.0, 1.0);
}

MeasurementOperator::MeasurementOperator(std::vector<MeasurementBlock> blocks) : blocks_(std::move(blocks)) {
    for (const MeasurementBlock& b : blocks_) {
        const Operator2& h = b.normalized_hamiltonian;
        const double trace = std::abs(h.trace());
        const double lam = eigenvalue_magnitude(h);
        if (trace > kTolGroup || std::abs(lam - 1.0) > kTolGroup) {
            std::ostringstream msg;
            msg << "block at " << describe(b.momentum) << " does not have eigenvalues ±1";
            throw Error(ErrorCode::InvalidArgument, msg.str());
        }
    }
}

double MeasurementOperator::expectation(const ParticleState& state) const {
    if (state.size() != blocks_.size()) {
        throw Error(ErrorCode::InvalidArgument, "state and measurement operator have different momentum support");
    }
    double total = 0.0;
    for (std::size_t i = 0; i < blocks_.size(); ++i) {
        const Branch& br = state.branches()[i];
        const Eigen::Vector4d diff = br.momentum.components() - blocks_[i].momentum.components();
        if (diff.cwiseAbs().maxCoeff() > kTolState * br.momentum.t()) {
            throw Error(ErrorCode::InvalidArgument, "branch momentum " + describe(br.momentum) +
                                                        " does not match block " + describe(blocks_[i].momentum));
        }
        const Spinor& s = br.spin.spinor();
        total += std::norm(br.amplitude) * (s.adjoint() * blocks_[i].outcome() * s)(0, 0).real();
    }
    return total;
}

MeasurementOperator sg_measurement_operator(const std::vector<FourVector>& momenta, double mass,
                                            const EMFieldTensor& f, double alpha, double hbar) {
    require_positive_alpha(alpha);
    if (!(hbar > 0.0)) throw Error(ErrorCode::InvalidArgument, "hbar must be positive");
    std::vector<MeasurementBlock> blocks;
    blocks.reserve(momenta.size());
    for (const FourVector& p : momenta) {
        const Operator2 h = sg_hamiltonian(p, mass, f, alpha, hbar);
        const double lam = eigenvalue_magnitude(h);
        // |λ| = α ħ |B_rest| / (2γ)
        const double rest_field = 2.0 * lorentz_factor(p.spatial() / p.t()) * lam / (alpha * hbar);
        if (!(rest_field > kFieldEpsilon)) {
            throw Error(ErrorCode::DegenerateBlock, "no rest-frame magnetic field at momentum " + describe(p));
        }
        blocks.push_back(MeasurementBlock{p, h / lam});
    }
    return MeasurementOperator(std::move(blocks));
}

MeasurementResult measure(const ParticleState& state, const EMFieldTensor& f, double alpha) {
    require_positive_alpha(alpha);
    MeasurementResult out;
    std::vector<Branch> plus;
    std::vector<Branch> minus;
    for (const Branch& br : state.branches()) {
        ThreeVector axis;
        try {
            axis = sg_axis(br.momentum, state.mass(), f);
        } catch (const Error& e) {
            if (e.code() != ErrorCode::DegenerateField) throw;
            throw Error(ErrorCode::DegenerateBlock, "no rest-frame magnetic field at momentum " + describe(br.momentum));
        }
        out.axes.push_back(axis);

        const double weight = std::norm(br.amplitude);
        const SpinHalfState up = SpinHalfState::from_bloch(axis);
        const SpinHalfState down = SpinHalfState::from_bloch(-axis);
        const Complex a_up = up.spinor().dot(br.spin.spinor());
        const Complex a_down = down.spinor().dot(br.spin.spinor());

        out.expectation += weight * br.spin.bloch().dot(axis);
        out.prob_plus += weight * std::norm(a_up);
        out.prob_minus += weight * std::norm(a_down);
        plus.push_back(Branch{br.amplitude * a_up, br.momentum, up, br.density_weight});
        minus.push_back(Branch{br.amplitude * a_down, br.momentum, down, br.density_weight});
    }
    auto renormalize = [&](std::vector<Branch>& branches, double prob) -> std::optional<ParticleState> {
        if (prob <= kNegligibleProbability) return std::nullopt;
        const double k = 1.0 / std::sqrt(prob);
        for (Branch& b : branches) b.amplitude *= k;
        return ParticleState(state.mass(), std::move(branches));
    };
    out.post_plus = renormalize(plus, out.prob_plus);
    out.post_minus = renormalize(minus, out.prob_minus);
    return out;
}

Operator2 reduced_spin_density(const ParticleState& state) {
    Operator2 rho = Operator2::Zero();
    for (const Branch& b : state.branches()) rho += std::norm(b.amplitude) * b.spin.density_matrix();
    return rho;
}

double purity(const Operator2& rho) { return (rho * rho).trace().real(); }

double covariance_residual(const LorentzTransform& lambda, const FourVector& p, double mass, const EMFieldTensor& f,
                           const ThreeVector& bloch, double alpha, double hbar) {
    require_unit(bloch);
    const double gamma = lorentz_factor(velocity_of(p, mass));
    const double before = gamma * expectation_in(sg_hamiltonian(p, mass, f, alpha, hbar), bloch);

    const FourVector lp = lambda * p;
    const WignerRotation w = wigner_rotation(lambda, p, mass);
    const double gamma_new = lorentz_factor(velocity_of(lp, mass));
    const EMFieldTensor f_new = transform_tensor(lambda, f);
    const double after = gamma_new * expectation_in(sg_hamiltonian(lp, mass, f_new, alpha, hbar), w.rotation * bloch);
    return std::abs(after - before);
}

FourVectorCoupling::FourVectorCoupling(double g0, const ThreeVector& g) : g_(g0, g) {
    if (!g_.components().allFinite() || g_.components().isZero(0.0)) {
        throw Error(ErrorCode::InvalidArgument, "coupling 4-vector must be finite and not identically zero");
    }
}

FourVectorCoupling transform_coupling(const LorentzTransform& lambda, const FourVectorCoupling& c) {
    return FourVectorCoupling(lambda * c.four_vector());
}

Operator2 pl_hamiltonian(const FourVector& p, double mass, const FourVectorCoupling& c, double hbar) {
    const ThreeVector v = velocity_of(p, mass);
    const double gamma = lorentz_factor(v);
    const auto s = spin_operators(hbar);
    // Ŝ_k = Σ_j A_kj ŝ_j, A = [I + γ²/(γ+1) v vᵀ] / γ
    const Eigen::Matrix3d a = (Eigen::Matrix3d::Identity() + gamma * gamma / (gamma + 1.0) * v * v.transpose()) / gamma;
    std::array<Operator2, 3> pl_spin;
    for (int k = 0; k < 3; ++k) pl_spin[k] = combine(a.row(k).transpose(), s);

    const Operator2 w0 = combine(p.spatial(), pl_spin);
    Operator2 h = c.g0() * w0;
    for (int k = 0; k < 3; ++k) h -= p.t() * c.g()[k] * pl_spin[k];
    return h;
}

ThreeVector pl_axis(const FourVector& p, double mass, const FourVectorCoupling& c) {
    const FourVector rest = inverse(standard_boost(p, mass)) * c.four_vector();
    const double norm = rest.spatial().norm();
    if (!(norm > kFieldEpsilon)) {
        std::ostringstream msg;
        msg << "rest-frame spatial coupling has norm " << norm;
        throw Error(ErrorCode::DegenerateCoupling, msg.str());
    }
    return rest.spatial() / norm;
}

double pl_expectation(const FourVector& p, double mass, const ThreeVector& bloch, const FourVectorCoupling& c) {
    require_unit(bloch);
    const double by_axis = bloch.dot(pl_axis(p, mass, c));

    const Operator2 h = pl_hamiltonian(p, mass, c);
    const double lam = eigenvalue_magnitude(h);
    const double by_operator = expectation_in(-h / lam, bloch);
    if (std::abs(by_axis - by_operator) > kTolGroup) {
        std::ostringstream msg;
        msg << "axis and operator forms of the Pauli-Lubanski expectation differ: " << by_axis << " vs " << by_operator;
        throw Error(ErrorCode::NumericalBreakdown, msg.str());
    }
    return std::clamp(by_axis, -1.0, 1.0);
}

}  // namespace relspin
