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

#ifndef GPCAP_CHANNELS_HPP
#define GPCAP_CHANNELS_HPP

#include <span>
#include <vector>

#include "gpcap/mub.hpp"
#include "gpcap/numerics.hpp"

namespace gpcap {

/// Eigenvalues λ_1 … λ_{d+1} of a generalized Pauli map, one per MUB. Values that
/// violate complete positivity are accepted here (trajectories and random sampling
/// need them); every capacity routine checks CP itself.
class EigenvalueVector {
   public:
    /// Throws UnsupportedDimension unless d is a prime power, InputError on a length
    /// other than d+1 or non-finite values.
    EigenvalueVector(int d, std::vector<double> lambdas);

    int dimension() const { return d_; }
    std::span<const double> values() const { return lambdas_; }
    /// 1-based, α = 1 … d+1.
    double operator()(int alpha) const { return lambdas_[alpha - 1]; }
    double sum() const;
    double min() const;
    double max() const;

   private:
    int d_;
    std::vector<double> lambdas_;
};

/// ρ ↦ p_0 ρ + 1/(d−1) Σ_α p_α Σ_k U_α^k ρ U_α^k†, stored by its probabilities
/// (p_0, p_1, …, p_{d+1}).
class GeneralizedPauliChannel {
   public:
    GeneralizedPauliChannel(int d, ProbabilityVector probabilities);

    static GeneralizedPauliChannel identity(int d);

    int dimension() const { return d_; }
    const ProbabilityVector& probabilities() const { return p_; }
    double p0() const { return p_[0]; }
    /// 1-based, α = 1 … d+1.
    double p(int alpha) const { return p_[alpha]; }

   private:
    int d_;
    ProbabilityVector p_;
};

/// Σ_label p_label (⊗_a W_{k_a l_a}) ρ (⊗_a W_{k_a l_a})† on (C^s)^{⊗r}.
/// Labels (k_1, l_1, …, k_r, l_r) are flattened row-major in base s.
class WeylChannel {
   public:
    WeylChannel(int local_dimension, int parts, ProbabilityVector probabilities);

    int local_dimension() const { return s_; }
    int parts() const { return r_; }
    /// Total dimension s^r.
    int dimension() const { return dimension_; }
    const ProbabilityVector& probabilities() const { return p_; }

    std::vector<int> label(std::size_t index) const;
    std::size_t index(std::span<const int> label) const;
    /// ⊗_a W_{k_a l_a} for the label at `index`.
    Matrix kraus_operator(std::size_t index) const;

   private:
    int s_;
    int r_;
    int dimension_;
    ProbabilityVector p_;
};

/// Row-stochastic and column-stochastic d×d matrix with entries in [0, 1].
class ClassicalMap {
   public:
    explicit ClassicalMap(RealMatrix t);

    int dimension() const { return static_cast<int>(t_.rows()); }
    const RealMatrix& matrix() const { return t_; }
    std::vector<double> row(int k) const;

   private:
    RealMatrix t_;
};

struct KrausTerm {
    double weight;
    Matrix op;
};

/// λ_α = [d(p_0 + p_α) − 1]/(d − 1).
EigenvalueVector eigenvalues_from_probabilities(const GeneralizedPauliChannel& c);

/// (p_0, …, p_{d+1}) from λ without any positivity check. Always sums to 1.
std::vector<double> signed_probabilities(const EigenvalueVector& e);

/// Inverse of eigenvalues_from_probabilities. Throws NotCompletelyPositive when
/// some probability is negative beyond kClampSlack.
GeneralizedPauliChannel probabilities_from_eigenvalues(const EigenvalueVector& e);

/// −1/(d−1) ≤ Σλ ≤ 1 + d·min λ, within 1e−12.
bool is_completely_positive(const EigenvalueVector& e);
/// Throws NotCompletelyPositive with the violated inequality in the message.
void require_completely_positive(const EigenvalueVector& e);

/// Weighted unitaries of the channel, identity first, then U_α^k for α = 1 … d+1,
/// k = 1 … d−1 with weight p_α/(d−1).
std::vector<KrausTerm> kraus_terms(const GeneralizedPauliChannel& c, const MubSet& m);
Matrix apply_kraus(std::span<const KrausTerm> terms, const Matrix& x);

/// The channel extended linearly to arbitrary operators.
Matrix apply_linear(const GeneralizedPauliChannel& c, const MubSet& m, const Matrix& x);
DensityMatrix apply(const GeneralizedPauliChannel& c, const MubSet& m, const DensityMatrix& rho);

Matrix apply_weyl_linear(const WeylChannel& w, const Matrix& x);
DensityMatrix apply_weyl(const WeylChannel& w, const DensityMatrix& rho);

/// Weyl form of a generalized Pauli channel. Supported for prime d (labels per
/// build_mubs_prime ordering) and d = 4 (two-qubit Pauli products).
WeylChannel gpc_to_weyl(const GeneralizedPauliChannel& c);

/// {p_0} ∪ {p_α/(d−1), each repeated d−1 times}: the d² Kraus weights.
std::vector<double> kraus_probability_multiset(const GeneralizedPauliChannel& c);

/// Channel on the joint space; labels of `a` come first.
WeylChannel tensor(const WeylChannel& a, const WeylChannel& b);
WeylChannel tensor(const GeneralizedPauliChannel& a, const GeneralizedPauliChannel& b);

/// (Λ ⊗ id)(|Ω⟩⟨Ω|) with |Ω⟩ = Σ_i |ii⟩/√d. Trace 1.
Matrix choi_matrix(const GeneralizedPauliChannel& c, const MubSet& m);
Matrix choi_matrix(const GeneralizedPauliChannel& c);
Matrix choi_matrix(const WeylChannel& w);
/// Choi matrix of the map defined only through its spectrum:
/// X ↦ Tr(X) I/d + Σ_α λ_α Σ_k Tr(U_α^k† X)/d · U_α^k. Works for non-CP λ.
Matrix choi_matrix(const EigenvalueVector& e, const MubSet& m);

/// T_kl = λ_α δ_kl + (1 − λ_α)/d, the classical map induced on basis α.
ClassicalMap classical_map_t(const EigenvalueVector& e, int alpha);

}  // namespace gpcap

#endif
