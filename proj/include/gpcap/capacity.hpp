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

// Holevo-capacity bounds and classical capacities of generalized Pauli channels.
// All values are in nats.

#ifndef GPCAP_CAPACITY_HPP
#define GPCAP_CAPACITY_HPP

#include <optional>
#include <utility>
#include <vector>

#include "gpcap/channels.hpp"

namespace gpcap {

/// Bounds closer than this are treated as equal.
inline constexpr double kCoincidenceTol = 1e-9;

struct LowerBound {
    double value;
    int alpha;  // 1-based basis attaining the maximum (lowest index on ties)
};

struct CapacityBounds {
    double chi_low;
    double chi_up;
    bool coincide;
    std::optional<double> exact_capacity;
    int maximizing_alpha;
};

enum class ZetaForm { eigenvalue, probability };

/// Pieces of the grouped Kraus-weight vector ζ for a generalized Pauli channel.
///
/// With the eigenvalues (or the probabilities p_1 … p_{d+1}) sorted non-increasingly
/// and S = Σλ, region r ∈ {1, …, d} is
///   r = 1      if S ≥ λ_2,
///   r = m      if λ_m ≥ S ≥ λ_{m+1}, 2 ≤ m ≤ d−1,
///   r = d      if λ_d ≥ S,
/// and ζ = (before_1 … before_{r−1}, straddling_r, after_{r+1} … after_d). The
/// straddling block is the one holding p_0; at the ends it reduces to paired_1 and
/// paired_{d+1}. Ties go to the lower region.
///
/// Eigenvalue form: after = Z_k, before = z_k, straddling = F_k, paired = f_k.
/// Probability form: after = Q_k, before = q_k, straddling = G_k, paired = g_k.
/// All vectors are 0-based storage of 1-based k.
struct ZetaComponents {
    ZetaForm form;
    int region;
    std::vector<int> order;  // order[i] = original α (1-based) of the i-th largest
    std::vector<double> after;
    std::vector<double> before;
    std::vector<double> straddling;
    std::vector<double> paired;  // length d+1
    std::vector<double> zeta;    // assembled for `region`
};

/// ζ assembled for an arbitrary region, used to compare neighbouring branches.
std::vector<double> assemble_zeta(const ZetaComponents& c, int region);

struct UpperBound {
    double value;
    ZetaComponents components;
};

/// max_α of [1+(d−1)λ_α]/d · ln[1+(d−1)λ_α] + (d−1)(1−λ_α)/d · ln(1−λ_α).
LowerBound holevo_lower_bound(const EigenvalueVector& e);

/// ln d − min_α H(row of T^{(α)}), i.e. the best capacity of the induced classical maps.
double holevo_lower_via_classical(const EigenvalueVector& e);

/// Sorts the D² weights non-increasingly and returns the D consecutive block sums.
ProbabilityVector zeta_vector(std::span<const double> multiset, int block);

/// ln D − H(ζ(p)) for a (multipartite) Weyl channel of total dimension D.
double holevo_upper_bound_weyl(const WeylChannel& w);

/// Closed-form upper bound from the eigenvalues; see ZetaComponents for the regions.
UpperBound holevo_upper_bound(const EigenvalueVector& e);

/// The same components computed from the probabilities.
ZetaComponents zeta_components_p_form(const GeneralizedPauliChannel& c);

CapacityBounds capacity_bounds(const EigenvalueVector& e);

/// Classical capacity when it is known exactly: the closed form for qubits, and
/// otherwise χ_low whenever the two bounds coincide.
std::optional<double> classical_capacity_exact(const EigenvalueVector& e);

enum class SymmetricFamily {
    none,
    /// All λ ≤ 0 and the d largest equal.
    non_positive_degenerate,
    /// All λ ≥ 0 and the d smallest equal.
    non_negative_degenerate,
};

SymmetricFamily symmetric_family(const EigenvalueVector& e, double tol = 1e-12);

/// Closed-form capacity for the two symmetric families (evaluated at λ_min for the
/// non-positive family and at λ_max for the non-negative one). Throws InputError for
/// channels outside both families.
double symmetric_family_capacity(const EigenvalueVector& e);

/// Qubit capacity (1+λ*)/2 ln(1+λ*) + (1−λ*)/2 ln(1−λ*), λ* = max(|λ_min|, λ_max).
double pauli_classical_capacity(const EigenvalueVector& e);

struct FidelityExtremes {
    double f_min;
    double f_max;
};
FidelityExtremes channel_fidelity_extremes(const EigenvalueVector& e);

/// f_min when λ_max ≤ |λ_min|, else f_max.
double selected_fidelity(const EigenvalueVector& e);

/// ln 2 + f ln f + (1−f) ln(1−f).
double capacity_from_fidelity(double f_star);

}  // namespace gpcap

#endif
