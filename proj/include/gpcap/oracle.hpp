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

// Brute-force checks that share no formulas with the capacity module: Choi
// positivity, direct output-entropy minimization and tensor classical maps.

#ifndef GPCAP_ORACLE_HPP
#define GPCAP_ORACLE_HPP

#include <cstdint>

#include "gpcap/channels.hpp"

namespace gpcap {

inline constexpr double kChoiTol = 1e-9;

struct SearchConfig {
    /// θ grid points per half circle (d = 2); φ uses twice as many.
    int resolution = 256;
    /// Random pure states tried for d ≥ 3.
    int samples = 256;
    std::uint64_t seed = 1;
    /// Step halvings in the local pattern search.
    int refinement_iterations = 48;

    /// Throws InputError unless resolution ≥ 8, samples ≥ 0, refinement_iterations ≥ 0.
    void validate() const;
};

bool cp_oracle_choi(const GeneralizedPauliChannel& c);
bool cp_oracle_choi(const WeylChannel& w);
/// Same check for a map given by its spectrum, which need not be CP.
bool cp_oracle_choi(const EigenvalueVector& e, const MubSet& m);

/// S(Λ[|ψ⟩⟨ψ|]) for a (not necessarily normalized) vector ψ.
double output_entropy(const GeneralizedPauliChannel& c, const MubSet& m, const Vector& psi);

/// Smallest output entropy found over pure inputs. d = 2 scans a θ × φ Bloch grid
/// and polishes the best points; d ≥ 3 polishes seeded random states. The result
/// is an upper estimate of the true minimum.
double min_output_entropy(const GeneralizedPauliChannel& c, const MubSet& m, const SearchConfig& cfg);

/// ln d − min_output_entropy, a lower estimate of χ for covariant channels.
double holevo_estimate(const GeneralizedPauliChannel& c, const MubSet& m, const SearchConfig& cfg);

struct AdditivityReport {
    double chi_low;
    /// ln d² − min_α H(row of T^{(α)} ⊗ T^{(α)}), from the tensor classical maps.
    double chi_low_tensor;
    /// chi_low_tensor − 2·chi_low.
    double lower_gap;
    double chi_up;
    /// Grouped-weight bound of the two-copy Weyl channel.
    double chi_up_tensor;
    /// 2·chi_up − chi_up_tensor.
    double upper_gap;
};

/// Throws NotCompletelyPositive on non-CP input.
AdditivityReport additivity_report(const GeneralizedPauliChannel& c);

}  // namespace gpcap

#endif
