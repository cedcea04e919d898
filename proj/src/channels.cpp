// Copyright 2026 The gpcap Authors
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

#include "gpcap/channels.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <string>

#include "gpcap/errors.hpp"

namespace gpcap {
namespace {

constexpr double kCpTol = 1e-12;

void require_prime_power(int d) {
    if (d < 2 || !prime_power(d)) {
        throw UnsupportedDimension("dimension " + std::to_string(d) +
                                   " is not a prime power; generalized Pauli channels need d+1 MUBs");
    }
}

int int_pow(int base, int exponent) {
    int out = 1;
    for (int i = 0; i < exponent; ++i) out *= base;
    return out;
}

void require_same_dimension(int a, int b, const char* what) {
    if (a != b) {
        throw DimensionMismatch(std::string(what) + ": dimension " + std::to_string(a) + " vs " +
                                std::to_string(b));
    }
}

// Weyl label (k, l) of σ_a: W_00 = I, W_01 = σ1, W_11 ∝ σ2, W_10 = σ3.
std::array<int, 2> pauli_weyl_label(int a) {
    static constexpr std::array<std::array<int, 2>, 4> labels{{{0, 0}, {0, 1}, {1, 1}, {1, 0}}};
    return labels[a];
}

}  // namespace

EigenvalueVector::EigenvalueVector(int d, std::vector<double> lambdas) : d_(d), lambdas_(std::move(lambdas)) {
    require_prime_power(d_);
    if (static_cast<int>(lambdas_.size()) != d_ + 1) {
        throw InputError("expected " + std::to_string(d_ + 1) + " eigenvalues for d = " + std::to_string(d_) +
                         ", got " + std::to_string(lambdas_.size()));
    }
    for (double v : lambdas_) {
        if (!std::isfinite(v)) throw InputError("eigenvalue is not finite");
    }
}

double EigenvalueVector::sum() const { return std::accumulate(lambdas_.begin(), lambdas_.end(), 0.0); }
double EigenvalueVector::min() const { return *std::min_element(lambdas_.begin(), lambdas_.end()); }
double EigenvalueVector::max() const { return *std::max_element(lambdas_.begin(), lambdas_.end()); }

GeneralizedPauliChannel::GeneralizedPauliChannel(int d, ProbabilityVector probabilities)
    : d_(d), p_(std::move(probabilities)) {
    require_prime_power(d_);
    if (static_cast<int>(p_.size()) != d_ + 2) {
        throw InputError("expected " + std::to_string(d_ + 2) + " probabilities for d = " + std::to_string(d_) +
                         ", got " + std::to_string(p_.size()));
    }
}

GeneralizedPauliChannel GeneralizedPauliChannel::identity(int d) {
    std::vector<double> p(static_cast<std::size_t>(d) + 2, 0.0);
    p[0] = 1.0;
    return GeneralizedPauliChannel(d, ProbabilityVector(std::move(p)));
}

WeylChannel::WeylChannel(int local_dimension, int parts, ProbabilityVector probabilities)
    : s_(local_dimension), r_(parts), dimension_(0), p_(std::move(probabilities)) {
    if (!is_prime(s_)) throw UnsupportedDimension("Weyl channel local dimension must be prime");
    if (r_ < 1) throw InputError("Weyl channel needs at least one part");
    dimension_ = int_pow(s_, r_);
    const auto labels = static_cast<std::size_t>(dimension_) * static_cast<std::size_t>(dimension_);
    if (p_.size() != labels) {
        throw InputError("Weyl channel needs " + std::to_string(labels) + " probabilities");
    }
}

std::vector<int> WeylChannel::label(std::size_t index) const {
    std::vector<int> out(2 * static_cast<std::size_t>(r_));
    for (std::size_t i = out.size(); i-- > 0;) {
        out[i] = static_cast<int>(index % s_);
        index /= s_;
    }
    return out;
}

std::size_t WeylChannel::index(std::span<const int> label) const {
    if (label.size() != 2 * static_cast<std::size_t>(r_)) throw InputError("Weyl label has wrong length");
    std::size_t out = 0;
    for (int v : label) out = out * s_ + static_cast<std::size_t>(((v % s_) + s_) % s_);
    return out;
}

Matrix WeylChannel::kraus_operator(std::size_t index) const {
    const auto lbl = label(index);
    Matrix op = weyl_operator(s_, lbl[0], lbl[1]).matrix;
    for (int a = 1; a < r_; ++a) {
        op = kron(op, weyl_operator(s_, lbl[2 * a], lbl[2 * a + 1]).matrix);
    }
    return op;
}

ClassicalMap::ClassicalMap(RealMatrix t) : t_(std::move(t)) {
    if (t_.rows() != t_.cols() || t_.rows() == 0) throw InputError("classical map must be square");
    if (t_.minCoeff() < -kClampSlack || t_.maxCoeff() > 1.0 + kClampSlack) {
        throw InputError("classical map entries must lie in [0, 1]");
    }
    const double row_err = (t_.rowwise().sum().array() - 1.0).abs().maxCoeff();
    const double col_err = (t_.colwise().sum().array() - 1.0).abs().maxCoeff();
    if (row_err > kValidationTol || col_err > kValidationTol) {
        throw InputError("classical map is not bistochastic");
    }
}

std::vector<double> ClassicalMap::row(int k) const {
    std::vector<double> out(t_.cols());
    for (Eigen::Index j = 0; j < t_.cols(); ++j) out[j] = t_(k, j);
    return out;
}

EigenvalueVector eigenvalues_from_probabilities(const GeneralizedPauliChannel& c) {
    const int d = c.dimension();
    std::vector<double> lambdas(d + 1);
    for (int alpha = 1; alpha <= d + 1; ++alpha) {
        lambdas[alpha - 1] = (d * (c.p0() + c.p(alpha)) - 1.0) / (d - 1);
    }
    return EigenvalueVector(d, std::move(lambdas));
}

std::vector<double> signed_probabilities(const EigenvalueVector& e) {
    const int d = e.dimension();
    const double sum = e.sum();
    const double d2 = static_cast<double>(d) * d;
    std::vector<double> p(d + 2);
    p[0] = (1.0 + (d - 1) * sum) / d2;
    for (int alpha = 1; alpha <= d + 1; ++alpha) {
        p[alpha] = (d - 1) * (1.0 + d * e(alpha) - sum) / d2;
    }
    return p;
}

GeneralizedPauliChannel probabilities_from_eigenvalues(const EigenvalueVector& e) {
    auto p = signed_probabilities(e);
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i] < -kClampSlack) {
            std::ostringstream msg;
            msg << "eigenvalues are not completely positive: p_" << i << " = " << p[i];
            throw NotCompletelyPositive(msg.str());
        }
    }
    return GeneralizedPauliChannel(e.dimension(), ProbabilityVector(std::move(p)));
}

bool is_completely_positive(const EigenvalueVector& e) {
    const int d = e.dimension();
    const double sum = e.sum();
    return sum >= -1.0 / (d - 1) - kCpTol && sum <= 1.0 + d * e.min() + kCpTol;
}

void require_completely_positive(const EigenvalueVector& e) {
    if (is_completely_positive(e)) return;
    const int d = e.dimension();
    std::ostringstream msg;
    msg << "channel is not completely positive: need " << -1.0 / (d - 1) << " <= sum(lambda) = " << e.sum()
        << " <= 1 + d*min(lambda) = " << 1.0 + d * e.min();
    throw NotCompletelyPositive(msg.str());
}

std::vector<KrausTerm> kraus_terms(const GeneralizedPauliChannel& c, const MubSet& m) {
    const int d = c.dimension();
    require_same_dimension(d, m.dimension(), "kraus_terms");
    if (!m.is_complete()) throw InputError("generalized Pauli channel needs a complete set of d+1 bases");
    std::vector<KrausTerm> terms;
    terms.reserve(static_cast<std::size_t>(d) * d);
    terms.push_back({c.p0(), Matrix::Identity(d, d)});
    for (int alpha = 1; alpha <= d + 1; ++alpha) {
        for (int k = 1; k <= d - 1; ++k) {
            terms.push_back({c.p(alpha) / (d - 1), unitary_u(m, alpha, k)});
        }
    }
    return terms;
}

Matrix apply_kraus(std::span<const KrausTerm> terms, const Matrix& x) {
    Matrix out = Matrix::Zero(x.rows(), x.cols());
    for (const auto& t : terms) {
        if (t.weight == 0.0) continue;
        out.noalias() += t.weight * (t.op * x * t.op.adjoint());
    }
    return out;
}

Matrix apply_linear(const GeneralizedPauliChannel& c, const MubSet& m, const Matrix& x) {
    require_same_dimension(c.dimension(), static_cast<int>(x.rows()), "apply");
    return apply_kraus(kraus_terms(c, m), x);
}

DensityMatrix apply(const GeneralizedPauliChannel& c, const MubSet& m, const DensityMatrix& rho) {
    return DensityMatrix(apply_linear(c, m, rho.matrix()));
}

Matrix apply_weyl_linear(const WeylChannel& w, const Matrix& x) {
    require_same_dimension(w.dimension(), static_cast<int>(x.rows()), "apply_weyl");
    Matrix out = Matrix::Zero(x.rows(), x.cols());
    const auto p = w.probabilities().entries();
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i] == 0.0) continue;
        const Matrix op = w.kraus_operator(i);
        out.noalias() += p[i] * (op * x * op.adjoint());
    }
    return out;
}

DensityMatrix apply_weyl(const WeylChannel& w, const DensityMatrix& rho) {
    return DensityMatrix(apply_weyl_linear(w, rho.matrix()));
}

WeylChannel gpc_to_weyl(const GeneralizedPauliChannel& c) {
    const int d = c.dimension();
    if (d == 4) {
        std::vector<double> weights(16, 0.0);
        weights[0] = c.p0();
        const auto& triples = two_qubit_commuting_triples();
        for (int alpha = 1; alpha <= 5; ++alpha) {
            for (const auto& pair : triples[alpha - 1]) {
                const auto first = pauli_weyl_label(pair[0]);
                const auto second = pauli_weyl_label(pair[1]);
                const std::size_t idx = ((first[0] * 2 + first[1]) * 2 + second[0]) * 2 + second[1];
                weights[idx] += c.p(alpha) / 3.0;
            }
        }
        return WeylChannel(2, 2, ProbabilityVector(std::move(weights)));
    }
    if (!is_prime(d)) {
        throw UnsupportedDimension("gpc_to_weyl supports prime d and d = 4, got " + std::to_string(d));
    }
    std::vector<double> weights(static_cast<std::size_t>(d) * d, 0.0);
    auto at = [d](long long k, long long l) {
        return static_cast<std::size_t>(((k % d) + d) % d) * d + static_cast<std::size_t>(((l % d) + d) % d);
    };
    weights[0] = c.p0();
    if (d == 2) {
        weights[at(0, 1)] = c.p(1);
        weights[at(1, 1)] = c.p(2);
        weights[at(1, 0)] = c.p(3);
    } else {
        for (int alpha = 1; alpha <= d + 1; ++alpha) {
            for (int k = 1; k <= d - 1; ++k) {
                const std::size_t idx = alpha <= d ? at(k, static_cast<long long>(k) * (alpha - 1)) : at(0, k);
                weights[idx] += c.p(alpha) / (d - 1);
            }
        }
    }
    return WeylChannel(d, 1, ProbabilityVector(std::move(weights)));
}

std::vector<double> kraus_probability_multiset(const GeneralizedPauliChannel& c) {
    const int d = c.dimension();
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(d) * d);
    out.push_back(c.p0());
    for (int alpha = 1; alpha <= d + 1; ++alpha) {
        for (int k = 1; k <= d - 1; ++k) out.push_back(c.p(alpha) / (d - 1));
    }
    return out;
}

WeylChannel tensor(const WeylChannel& a, const WeylChannel& b) {
    if (a.local_dimension() != b.local_dimension()) {
        throw DimensionMismatch("tensor: Weyl channels have different local dimensions");
    }
    const auto pa = a.probabilities().entries();
    const auto pb = b.probabilities().entries();
    std::vector<double> joint;
    joint.reserve(pa.size() * pb.size());
    for (double x : pa) {
        for (double y : pb) joint.push_back(x * y);
    }
    return WeylChannel(a.local_dimension(), a.parts() + b.parts(), ProbabilityVector(std::move(joint)));
}

WeylChannel tensor(const GeneralizedPauliChannel& a, const GeneralizedPauliChannel& b) {
    return tensor(gpc_to_weyl(a), gpc_to_weyl(b));
}

namespace {

template <typename Map>
Matrix choi_from_map(int d, Map&& map) {
    Matrix choi = Matrix::Zero(d * d, d * d);
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) {
            Matrix unit = Matrix::Zero(d, d);
            unit(i, j) = 1.0;
            Matrix ref = Matrix::Zero(d, d);
            ref(i, j) = 1.0;
            choi += kron(map(unit), ref);
        }
    }
    return choi / static_cast<double>(d);
}

}  // namespace

Matrix choi_matrix(const GeneralizedPauliChannel& c, const MubSet& m) {
    const auto terms = kraus_terms(c, m);
    return choi_from_map(c.dimension(), [&](const Matrix& x) { return apply_kraus(terms, x); });
}

Matrix choi_matrix(const GeneralizedPauliChannel& c) { return choi_matrix(c, standard_mubs(c.dimension())); }

Matrix choi_matrix(const WeylChannel& w) {
    return choi_from_map(w.dimension(), [&](const Matrix& x) { return apply_weyl_linear(w, x); });
}

Matrix choi_matrix(const EigenvalueVector& e, const MubSet& m) {
    const int d = e.dimension();
    require_same_dimension(d, m.dimension(), "choi_matrix");
    if (!m.is_complete()) throw InputError("choi_matrix needs a complete set of d+1 bases");
    std::vector<std::pair<double, Matrix>> basis;
    for (int alpha = 1; alpha <= d + 1; ++alpha) {
        for (int k = 1; k <= d - 1; ++k) basis.emplace_back(e(alpha), unitary_u(m, alpha, k));
    }
    const Matrix id = Matrix::Identity(d, d);
    return choi_from_map(d, [&](const Matrix& x) {
        Matrix out = x.trace() / static_cast<double>(d) * id;
        for (const auto& [lambda, u] : basis) {
            out += lambda * (u.adjoint() * x).trace() / static_cast<double>(d) * u;
        }
        return out;
    });
}

ClassicalMap classical_map_t(const EigenvalueVector& e, int alpha) {
    const int d = e.dimension();
    if (alpha < 1 || alpha > d + 1) throw IndexOutOfRange("classical_map_t: alpha out of range");
    const double lambda = e(alpha);
    RealMatrix t = RealMatrix::Constant(d, d, (1.0 - lambda) / d);
    t.diagonal().array() += lambda;
    return ClassicalMap(std::move(t));
}

}  // namespace gpcap
