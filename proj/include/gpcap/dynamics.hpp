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


// Qubit Pauli dynamical maps generated by
//   L(t)[ρ] = ½ Σ_α γ_α(t) (σ_α ρ σ_α − ρ),
// whose solution has eigenvalues λ_α(t) = exp(−Γ_β(t) − Γ_γ(t)), Γ = ∫₀ᵗ γ.

#ifndef GPCAP_DYNAMICS_HPP
#define GPCAP_DYNAMICS_HPP

#include <array>
#include <optional>
#include <vector>

namespace gpcap {

/// Finite differences above this count as an increase.
inline constexpr double kMonotoneSlack = 1e-10;

/// A constant or a table (strictly increasing times) with linear interpolation,
/// held constant outside the table.
class RateFunction {
   public:
    static RateFunction constant(double value);
    static RateFunction table(std::vector<double> times, std::vector<double> values);

    bool is_constant() const { return times_.empty(); }
    const std::vector<double>& times() const { return times_; }
    const std::vector<double>& values() const { return values_; }

    double operator()(double t) const;
    /// ∫₀ᵗ γ(s) ds by composite Simpson over the pieces between knots, so exact for
    /// piecewise-linear rates.
    double integral(double t) const;

   private:
    RateFunction(std::vector<double> times, std::vector<double> values);

    std::vector<double> times_;
    std::vector<double> values_;
};

struct RateSpec {
    std::array<RateFunction, 3> gamma;

    static RateSpec constant(double g1, double g2, double g3);
    /// Table knots of all three rates, sorted and deduplicated.
    std::vector<double> knots() const;
};

struct PauliTrajectory {
    std::vector<double> times;
    std::vector<std::array<double, 3>> lambdas;
    /// λ̇_α = −(γ_β + γ_γ) λ_α at each time.
    std::vector<std::array<double, 3>> lambda_rates;
    /// Whether every λ_α has been non-increasing on the grid up to this point.
    std::vector<bool> p_divisible_so_far;
    bool p_divisible = true;
    bool cp_everywhere = true;

    // Filled by capacity_trajectory.
    std::vector<double> capacity;
    std::vector<double> capacity_rate_fd;
    /// (λ̇_max/2) ln[(1+λ_max)/(1−λ_max)], present only where λ_max is the unique
    /// maximum, λ_max ≥ |λ_min| and λ_max < 1.
    std::vector<std::optional<double>> capacity_rate_formula;
};

/// Closed-form eigenvalues on the uniform grid of `points` ≥ 2 times in [0, t_max].
PauliTrajectory eigenvalue_trajectory(const RateSpec& r, double t_max, int points);

/// Eigenvalues from RK4 integration of the master equation applied to σ_1, σ_2, σ_3.
/// Steps never straddle a table knot.
std::vector<std::array<double, 3>> eigenvalue_trajectory_ode(const RateSpec& r, double t_max, int points,
                                                             double max_step = 1e-3);

/// Every λ_α non-increasing along the grid, within kMonotoneSlack.
bool p_divisibility_check(const PauliTrajectory& traj);

/// Adds C(t), its finite-difference derivative and the closed-form derivative.
/// Throws NotCompletelyPositive naming the first time slice that is not CP.
PauliTrajectory capacity_trajectory(PauliTrajectory traj);

}  // namespace gpcap

#endif
