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


#include "gpcap/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "gpcap/capacity.hpp"
#include "gpcap/channels.hpp"
#include "gpcap/errors.hpp"
#include "gpcap/mub.hpp"

namespace gpcap {
namespace {

// Indices of the other two rates for each α.
constexpr std::array<std::array<int, 2>, 3> kOthers{{{1, 2}, {0, 2}, {0, 1}}};

std::vector<double> uniform_grid(double t_max, int points) {
    if (points < 2) throw InputError("trajectory needs at least 2 time points");
    if (!(t_max > 0.0) || !std::isfinite(t_max)) throw InputError("t_max must be positive and finite");
    std::vector<double> times(points);
    for (int i = 0; i < points; ++i) times[i] = t_max * i / (points - 1);
    return times;
}

}  // namespace

RateFunction::RateFunction(std::vector<double> times, std::vector<double> values)
    : times_(std::move(times)), values_(std::move(values)) {}

RateFunction RateFunction::constant(double value) {
    if (!std::isfinite(value)) throw InputError("rate must be finite");
    return RateFunction({}, {value});
}

RateFunction RateFunction::table(std::vector<double> times, std::vector<double> values) {
    if (times.empty() || times.size() != values.size()) {
        throw InputError("rate table needs matching, non-empty time and value lists");
    }
    for (std::size_t i = 0; i < times.size(); ++i) {
        if (!std::isfinite(times[i]) || !std::isfinite(values[i])) throw InputError("rate table entries must be finite");
        if (i > 0 && !(times[i] > times[i - 1])) throw InputError("rate table times must be strictly increasing");
    }
    return RateFunction(std::move(times), std::move(values));
}

double RateFunction::operator()(double t) const {
    if (is_constant()) return values_.front();
    if (t <= times_.front()) return values_.front();
    if (t >= times_.back()) return values_.back();
    const auto hi = static_cast<std::size_t>(std::upper_bound(times_.begin(), times_.end(), t) - times_.begin());
    const std::size_t lo = hi - 1;
    const double w = (t - times_[lo]) / (times_[hi] - times_[lo]);
    return (1.0 - w) * values_[lo] + w * values_[hi];
}

double RateFunction::integral(double t) const {
    if (t < 0.0) throw InputError("rate integral needs t >= 0");
    std::vector<double> cuts{0.0};
    for (double k : times_) {
        if (k > 0.0 && k < t) cuts.push_back(k);
    }
    cuts.push_back(t);
    double total = 0.0;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        const double a = cuts[i];
        const double b = cuts[i + 1];
        total += (b - a) / 6.0 * ((*this)(a) + 4.0 * (*this)(0.5 * (a + b)) + (*this)(b));
    }
    return total;
}

RateSpec RateSpec::constant(double g1, double g2, double g3) {
    return {{RateFunction::constant(g1), RateFunction::constant(g2), RateFunction::constant(g3)}};
}

std::vector<double> RateSpec::knots() const {
    std::vector<double> all;
    for (const auto& g : gamma) all.insert(all.end(), g.times().begin(), g.times().end());
    std::sort(all.begin(), all.end());
    all.erase(std::unique(all.begin(), all.end()), all.end());
    return all;
}

PauliTrajectory eigenvalue_trajectory(const RateSpec& r, double t_max, int points) {
    PauliTrajectory traj;
    traj.times = uniform_grid(t_max, points);
    for (double t : traj.times) {
        const std::array<double, 3> big{r.gamma[0].integral(t), r.gamma[1].integral(t), r.gamma[2].integral(t)};
        const std::array<double, 3> rate{r.gamma[0](t), r.gamma[1](t), r.gamma[2](t)};
        std::array<double, 3> lambda{};
        std::array<double, 3> dot{};
        for (int a = 0; a < 3; ++a) {
            const auto [b, c] = kOthers[a];
            lambda[a] = std::exp(-big[b] - big[c]);
            dot[a] = -(rate[b] + rate[c]) * lambda[a];
        }
        traj.lambdas.push_back(lambda);
        traj.lambda_rates.push_back(dot);
    }

    bool monotone = true;
    for (std::size_t i = 0; i < traj.times.size(); ++i) {
        if (i > 0) {
            for (int a = 0; a < 3; ++a) {
                if (traj.lambdas[i][a] - traj.lambdas[i - 1][a] > kMonotoneSlack) monotone = false;
            }
        }
        traj.p_divisible_so_far.push_back(monotone);
        const auto& l = traj.lambdas[i];
        if (!is_completely_positive(EigenvalueVector(2, {l[0], l[1], l[2]}))) traj.cp_everywhere = false;
    }
    traj.p_divisible = monotone;
    return traj;
}

std::vector<std::array<double, 3>> eigenvalue_trajectory_ode(const RateSpec& r, double t_max, int points,
                                                             double max_step) {
    const auto times = uniform_grid(t_max, points);
    if (!(max_step > 0.0)) throw InputError("ODE step must be positive");

    // Breakpoints: grid times plus table knots, so every RK4 step sees a smooth rate.
    std::vector<double> stops = times;
    for (double k : r.knots()) {
        if (k > 0.0 && k < t_max) stops.push_back(k);
    }
    std::sort(stops.begin(), stops.end());
    stops.erase(std::unique(stops.begin(), stops.end()), stops.end());

    const auto generator = [&](double t, const Matrix& x) {
        Matrix out = Matrix::Zero(2, 2);
        for (int a = 0; a < 3; ++a) {
            const Matrix& s = pauli(a + 1);
            out += 0.5 * r.gamma[a](t) * (s * x * s - x);
        }
        return out;
    };

    std::array<Matrix, 3> x{pauli(1), pauli(2), pauli(3)};
    const auto record = [&] {
        std::array<double, 3> l{};
        for (int a = 0; a < 3; ++a) l[a] = 0.5 * (pauli(a + 1) * x[a]).trace().real();
        return l;
    };

    std::vector<std::array<double, 3>> out;
    out.push_back(record());
    std::size_t next_grid = 1;
    for (std::size_t s = 0; s + 1 < stops.size(); ++s) {
        const double a = stops[s];
        const double b = stops[s + 1];
        const int n = std::max(1, static_cast<int>(std::ceil((b - a) / max_step)));
        const double h = (b - a) / n;
        for (int i = 0; i < n; ++i) {
            const double t = a + i * h;
            for (auto& xa : x) {
                const Matrix k1 = generator(t, xa);
                const Matrix k2 = generator(t + 0.5 * h, xa + 0.5 * h * k1);
                const Matrix k3 = generator(t + 0.5 * h, xa + 0.5 * h * k2);
                const Matrix k4 = generator(t + h, xa + h * k3);
                xa += h / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
            }
        }
        if (next_grid < times.size() && b == times[next_grid]) {
            out.push_back(record());
            ++next_grid;
        }
    }
    return out;
}

bool p_divisibility_check(const PauliTrajectory& traj) {
    for (std::size_t i = 1; i < traj.lambdas.size(); ++i) {
        for (int a = 0; a < 3; ++a) {
            if (traj.lambdas[i][a] - traj.lambdas[i - 1][a] > kMonotoneSlack) return false;
        }
    }
    return true;
}

PauliTrajectory capacity_trajectory(PauliTrajectory traj) {
    const std::size_t n = traj.times.size();
    traj.capacity.assign(n, 0.0);
    traj.capacity_rate_fd.assign(n, 0.0);
    traj.capacity_rate_formula.assign(n, std::nullopt);

    for (std::size_t i = 0; i < n; ++i) {
        const auto& l = traj.lambdas[i];
        const EigenvalueVector e(2, {l[0], l[1], l[2]});
        if (!is_completely_positive(e)) {
            std::ostringstream msg;
            msg.precision(12);
            msg << "dynamical map is not completely positive at t = " << traj.times[i];
            throw NotCompletelyPositive(msg.str());
        }
        traj.capacity[i] = pauli_classical_capacity(e);

        const auto top = static_cast<int>(std::max_element(l.begin(), l.end()) - l.begin());
        const double lmax = l[top];
        bool unique = true;
        for (int a = 0; a < 3; ++a) {
            if (a != top && l[a] == lmax) unique = false;
        }
        if (unique && lmax >= std::abs(e.min()) && lmax < 1.0) {
            traj.capacity_rate_formula[i] = 0.5 * traj.lambda_rates[i][top] * std::log((1.0 + lmax) / (1.0 - lmax));
        }
    }

    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t lo = (i == 0) ? 0 : i - 1;
        const std::size_t hi = (i + 1 == n) ? i : i + 1;
        traj.capacity_rate_fd[i] = (traj.capacity[hi] - traj.capacity[lo]) / (traj.times[hi] - traj.times[lo]);
    }
    return traj;
}

}  // namespace gpcap
