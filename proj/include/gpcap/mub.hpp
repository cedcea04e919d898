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

// Mutually unbiased bases, the unitaries U_α^k built from them, and Weyl operators.
//
// Index conventions used throughout the library:
//   * bases are labelled α = 1 … N (1-based, matching the channel's p_α);
//   * vectors inside a basis are labelled k = 0 … d−1.

#ifndef GPCAP_MUB_HPP
#define GPCAP_MUB_HPP

#include <array>
#include <optional>
#include <vector>

#include "gpcap/numerics.hpp"

namespace gpcap {

/// ω^j with ω = e^{2πi/d}; j is reduced mod d before the exponential.
Complex root_of_unity(int d, long long j);

bool is_prime(int n);

struct PrimePower {
    int base;
    int exponent;
};
/// n = base^exponent with prime base, or nullopt.
std::optional<PrimePower> prime_power(int n);

/// Orthonormal bases of C^d. Immutable once built. The constructor only checks
/// shapes; use verify_mub for the unbiasedness conditions.
class MubSet {
   public:
    MubSet(int dimension, std::vector<std::vector<Vector>> bases);

    int dimension() const { return dimension_; }
    int size() const { return static_cast<int>(bases_.size()); }
    /// True when the set has the maximal d+1 bases.
    bool is_complete() const { return size() == dimension_ + 1; }

    const std::vector<Vector>& basis(int alpha) const;
    const Vector& vector(int alpha, int k) const;
    Matrix projector(int alpha, int k) const;

   private:
    int dimension_;
    std::vector<std::vector<Vector>> bases_;
};

/// W_kl = Σ_m ω^{mk} |m⟩⟨m+l|.
struct WeylOperator {
    int dimension;
    int k;
    int l;
    Matrix matrix;
};

WeylOperator weyl_operator(int d, long long k, long long l);

/// σ_0 … σ_3.
const Matrix& pauli(int index);

/// Labels (a, b) meaning σ_a ⊗ σ_b.
using PauliPair = std::array<int, 2>;
/// The five commuting triples of two-qubit Pauli products whose joint
/// eigenbases form a complete MUB set in C^4.
const std::array<std::array<PauliPair, 3>, 5>& two_qubit_commuting_triples();

/// Eigenbases of W_{1,0}, W_{1,1}, …, W_{1,d−1}, W_{0,1} for odd prime d, so that
/// U_α^1 is the generating Weyl operator; for d = 2 the eigenbases of σ_1, σ_2, σ_3.
/// Vector k of a basis has eigenvalue ω^k under its generator and is phased so its
/// first non-negligible component is real positive. Throws UnsupportedDimension
/// unless d is prime.
MubSet build_mubs_prime(int d);

/// The five joint eigenbases of two_qubit_commuting_triples(). Vector index
/// l = 2·b₂ + b₁ where b_j = 0 (1) for eigenvalue +1 (−1) of the triple's j-th member.
MubSet build_mubs_dim4();

/// build_mubs_prime for prime d, build_mubs_dim4 for d = 4.
MubSet standard_mubs(int d);

/// Largest violation of orthonormality within bases and of |⟨ψ|φ⟩|² = 1/d across bases.
double mub_deviation(const MubSet& m);
bool verify_mub(const MubSet& m);

/// U_α^k = Σ_l ω^{kl} P_l^{(α)} for k = 1 … d−1.
Matrix unitary_u(const MubSet& m, int alpha, int k);

/// Checks U_α^k = ω^{k(k−1)(α−1)/2} W_{k,k(α−1)} and U_{d+1}^k = W_{0k} for odd
/// prime d, and the table U_1 = W_01, U_2 = −i W_11, U_3 = W_10 for d = 2. Bases may
/// be listed in any order: each basis is first matched to the Weyl family whose
/// generator it diagonalizes.
bool check_weyl_correspondence(const MubSet& m);

}  // namespace gpcap

#endif
