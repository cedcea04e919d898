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

#include "gpcap/capacity.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <string>

#include "gpcap/errors.hpp"

namespace gpcap {
namespace {

double xlogx(double x) { return x > 0.0 ? x * std::log(x) : 0.0; }

// Contribution of one eigenvalue to the lower bound.
double lower_bound_term(int d, double lambda) {
    const double a = 1.0 + (d - 1) * lambda;
    const double b = 1.0 - lambda;
    return (xlogx(a) + (d - 1) * xlogx(b)) / d;
}

// Indices 1..n sorted by value, non-increasing, stable.
std::vector<int> descending_order(std::span<const double> values) {
    std::vector<int> order(values.size());
    std::iota(order.begin(), order.end(), 1);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return values[a - 1] > values[b - 1]; });
    return order;
}

// Region from the sorted values (1-based s[1..d+1]) and the pivot: S for the
// eigenvalue form, (d−1)·p_0 for the probability form.
int select_region(int d, const std::vector<double>& s, double pivot) {
    if (pivot >= s[2]) return 1;
    for (int m = 2; m <= d - 1; ++m) {
        if (pivot >= s[m + 1]) return m;
    }
    return d;
}

double entropy_of(std::span<const double> v) {
    return shannon_entropy(ProbabilityVector(std::vector<double>(v.begin(), v.end())));
}

}  // namespace

std::vector<double> assemble_zeta(const ZetaComponents& c, int region) {
    const int d = static_cast<int>(c.after.size());
    if (region < 1 || region > d) throw IndexOutOfRange("zeta region out of range");
    std::vector<double> zeta(d);
    for (int k = 1; k < region; ++k) zeta[k - 1] = c.before[k - 1];
    if (region == 1) {
        zeta[0] = c.paired[0];
    } else if (region == d) {
        zeta[d - 1] = c.paired[d];
    } else {
        zeta[region - 1] = c.straddling[region - 1];
    }
    for (int k = region + 1; k <= d; ++k) zeta[k - 1] = c.after[k - 1];
    return zeta;
}

LowerBound holevo_lower_bound(const EigenvalueVector& e) {
    require_completely_positive(e);
    const int d = e.dimension();
    LowerBound best{-1.0, 0};
    for (int alpha = 1; alpha <= d + 1; ++alpha) {
        const double v = lower_bound_term(d, e(alpha));
        if (v > best.value) best = {v, alpha};
    }
    return best;
}

double holevo_lower_via_classical(const EigenvalueVector& e) {
    require_completely_positive(e);
    const int d = e.dimension();
    double min_entropy = std::log(static_cast<double>(d));
    for (int alpha = 1; alpha <= d + 1; ++alpha) {
        const auto row = classical_map_t(e, alpha).row(0);
        min_entropy = std::min(min_entropy, entropy_of(row));
    }
    return std::log(static_cast<double>(d)) - min_entropy;
}

ProbabilityVector zeta_vector(std::span<const double> multiset, int block) {
    if (block < 1 || multiset.size() != static_cast<std::size_t>(block) * static_cast<std::size_t>(block)) {
        throw InputError("zeta_vector: expected " + std::to_string(block * block) + " weights, got " +
                         std::to_string(multiset.size()));
    }
    std::vector<double> sorted(multiset.begin(), multiset.end());
    ProbabilityVector checked(sorted);  // validates the multiset
    std::sort(sorted.begin(), sorted.end(), std::greater<>());
    std::vector<double> sums(block, 0.0);
    for (std::size_t i = 0; i < sorted.size(); ++i) sums[i / block] += sorted[i];
    return ProbabilityVector(std::move(sums));
}

double holevo_upper_bound_weyl(const WeylChannel& w) {
    const int dim = w.dimension();
    return std::log(static_cast<double>(dim)) - shannon_entropy(zeta_vector(w.probabilities().entries(), dim));
}

UpperBound holevo_upper_bound(const EigenvalueVector& e) {
    require_completely_positive(e);
    const int d = e.dimension();
    const double inv_d = 1.0 / d;

    ZetaComponents c;
    c.form = ZetaForm::eigenvalue;
    c.order = descending_order(e.values());
    std::vector<double> s(d + 2, 0.0);  // s[1..d+1]
    for (int i = 1; i <= d + 1; ++i) s[i] = e(c.order[i - 1]);
    const double sum = e.sum();

    c.after.resize(d);
    c.before.resize(d);
    c.straddling.resize(d);
    c.paired.resize(d + 1);
    for (int k = 1; k <= d; ++k) {
        c.after[k - 1] = inv_d * (1.0 + (d + 1 - k) * s[k] + (k - 1) * s[k + 1] - sum);
        c.before[k - 1] = inv_d * (1.0 + (d - k) * s[k] + k * s[k + 1] - sum);
        c.straddling[k - 1] = inv_d * (1.0 + (k - 1) * s[k + 1] + (d - k) * s[k]);
    }
    for (int k = 1; k <= d + 1; ++k) c.paired[k - 1] = inv_d * (1.0 + (d - 1) * s[k]);

    c.region = select_region(d, s, sum);
    c.zeta = assemble_zeta(c, c.region);
    const double value = std::log(static_cast<double>(d)) - entropy_of(c.zeta);
    return {value, std::move(c)};
}

ZetaComponents zeta_components_p_form(const GeneralizedPauliChannel& c) {
    const int d = c.dimension();
    const auto p = c.probabilities().entries();
    const double p0 = p[0];

    ZetaComponents z;
    z.form = ZetaForm::probability;
    z.order = descending_order(p.subspan(1));
    std::vector<double> s(d + 2, 0.0);
    for (int i = 1; i <= d + 1; ++i) s[i] = p[z.order[i - 1]];

    const double inv = 1.0 / (d - 1);
    z.after.resize(d);
    z.before.resize(d);
    z.straddling.resize(d);
    z.paired.resize(d + 1);
    for (int k = 1; k <= d; ++k) {
        z.after[k - 1] = inv * ((d + 1 - k) * s[k] + (k - 1) * s[k + 1]);
        z.before[k - 1] = inv * ((d - k) * s[k] + k * s[k + 1]);
        z.straddling[k - 1] = inv * ((d - k) * s[k] + (k - 1) * s[k + 1]) + p0;
    }
    for (int k = 1; k <= d + 1; ++k) z.paired[k - 1] = p0 + s[k];

    // p_0 ≥ p_α/(d−1)  ⇔  (d−1)·p_0 ≥ p_α.
    z.region = select_region(d, s, (d - 1) * p0);
    z.zeta = assemble_zeta(z, z.region);
    return z;
}

std::optional<double> classical_capacity_exact(const EigenvalueVector& e) {
    require_completely_positive(e);
    if (e.dimension() == 2) return pauli_classical_capacity(e);
    if (symmetric_family(e) != SymmetricFamily::none) return symmetric_family_capacity(e);
    const double low = holevo_lower_bound(e).value;
    const double up = holevo_upper_bound(e).value;
    if (std::abs(up - low) <= kCoincidenceTol) return low;
    return std::nullopt;
}

CapacityBounds capacity_bounds(const EigenvalueVector& e) {
    const auto low = holevo_lower_bound(e);
    const auto up = holevo_upper_bound(e);
    CapacityBounds b;
    b.chi_low = low.value;
    b.chi_up = up.value;
    b.coincide = std::abs(b.chi_up - b.chi_low) <= kCoincidenceTol;
    b.exact_capacity = classical_capacity_exact(e);
    b.maximizing_alpha = low.alpha;
    return b;
}

SymmetricFamily symmetric_family(const EigenvalueVector& e, double tol) {
    const int d = e.dimension();
    std::vector<double> s(e.values().begin(), e.values().end());
    std::sort(s.begin(), s.end(), std::greater<>());
    if (s.front() <= tol && s[d - 1] - s[d] >= -tol && s.front() - s[d - 1] <= tol) {
        return SymmetricFamily::non_positive_degenerate;
    }
    if (s.back() >= -tol && s[1] - s[d] <= tol) {
        return SymmetricFamily::non_negative_degenerate;
    }
    return SymmetricFamily::none;
}

double symmetric_family_capacity(const EigenvalueVector& e) {
    require_completely_positive(e);
    switch (symmetric_family(e)) {
        case SymmetricFamily::non_positive_degenerate:
            return lower_bound_term(e.dimension(), e.min());
        case SymmetricFamily::non_negative_degenerate:
            return lower_bound_term(e.dimension(), e.max());
        case SymmetricFamily::none:
            break;
    }
    throw InputError("eigenvalues are not in a symmetric family with known capacity");
}

double pauli_classical_capacity(const EigenvalueVector& e) {
    if (e.dimension() != 2) throw UnsupportedDimension("pauli_classical_capacity needs d = 2");
    require_completely_positive(e);
    const double star = std::max(std::abs(e.min()), e.max());
    return 0.5 * (xlogx(1.0 + star) + xlogx(1.0 - star));
}

FidelityExtremes channel_fidelity_extremes(const EigenvalueVector& e) {
    if (e.dimension() != 2) throw UnsupportedDimension("channel fidelities are defined here for d = 2");
    return {0.5 * (1.0 + e.min()), 0.5 * (1.0 + e.max())};
}

double selected_fidelity(const EigenvalueVector& e) {
    const auto f = channel_fidelity_extremes(e);
    return e.max() <= std::abs(e.min()) ? f.f_min : f.f_max;
}

double capacity_from_fidelity(double f_star) {
    if (!(f_star >= 0.0 && f_star <= 1.0)) {
        throw InputError("fidelity must lie in [0, 1]");
    }
    return std::log(2.0) + xlogx(f_star) + xlogx(1.0 - f_star);
}

}  // namespace gpcap
