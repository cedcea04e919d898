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


// Acceptance gate: one line per criterion, non-zero exit if any fails.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "gpcap/capacity.hpp"
#include "gpcap/cli.hpp"
#include "gpcap/dynamics.hpp"
#include "gpcap/errors.hpp"
#include "gpcap/mub.hpp"
#include "gpcap/oracle.hpp"
#include "gpcap/sampling.hpp"
#include "gpcap/serialization.hpp"

using namespace gpcap;

namespace {

const double kSingle = 0.75 * std::log(3.0) - std::log(2.0);
const double kTwoCopies = 15.0 / 16.0 * std::log(5.0) - 11.0 / 8.0 * std::log(2.0);

struct Outcome {
    bool passed;
    std::string detail;
};

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", v);
    return buf;
}

GeneralizedPauliChannel qubit_sample() { return GeneralizedPauliChannel(2, ProbabilityVector({0.25, 0.5, 0.25, 0.0})); }

double entropy(const std::vector<double>& p) {
    double h = 0.0;
    for (double x : p) {
        if (x > 0.0) h -= x * std::log(x);
    }
    return h;
}

Outcome sample_upper_bound() {
    const auto c = qubit_sample();
    const double closed = holevo_upper_bound(eigenvalues_from_probabilities(c)).value;
    const double grouped = holevo_upper_bound_weyl(gpc_to_weyl(c));
    const double err = std::max(std::abs(closed - kSingle), std::abs(grouped - kSingle));
    return {err <= 1e-12, "max error " + fmt(err)};
}

Outcome two_copy_upper_bound() {
    const auto c = qubit_sample();
    const double two = holevo_upper_bound_weyl(tensor(c, c));
    const double err = std::abs(two - kTwoCopies);
    const double gap = std::abs(two - 2.0 * holevo_upper_bound_weyl(gpc_to_weyl(c)));
    return {err <= 1e-12 && gap > 1e-3, "error " + fmt(err) + ", additivity gap " + fmt(gap)};
}

Outcome bound_ordering() {
    Rng rng(101);
    int violations = 0;
    double worst_qubit_gap = 0.0;
    for (int d : {2, 3, 5, 4}) {
        for (int i = 0; i < 1000; ++i) {
            const auto e = random_cp_eigenvalues(d, rng);
            const double low = holevo_lower_bound(e).value;
            const double up = holevo_upper_bound(e).value;
            if (low > up + 1e-9) ++violations;
            if (d == 2) worst_qubit_gap = std::max(worst_qubit_gap, std::abs(up - low));
        }
    }
    return {violations == 0 && worst_qubit_gap <= 1e-9,
            std::to_string(violations) + " violations in 4000, max qubit gap " + fmt(worst_qubit_gap)};
}

Outcome weak_additivity() {
    Rng rng(102);
    double worst = 0.0;
    for (int d : {2, 3}) {
        for (int i = 0; i < 100; ++i) {
            const auto rep = additivity_report(probabilities_from_eigenvalues(random_cp_eigenvalues(d, rng)));
            worst = std::max(worst, std::abs(rep.chi_low_tensor - 2.0 * rep.chi_low));
        }
    }
    return {worst <= 1e-10, "max |gap| " + fmt(worst)};
}

Outcome cp_agreement() {
    Rng rng(103);
    int disagreements = 0, boundary = 0, cp = 0;
    for (int d : {2, 3}) {
        const auto m = standard_mubs(d);
        for (int i = 0; i < 1000; ++i) {
            const auto e = random_box_eigenvalues(d, rng);
            const auto p = signed_probabilities(e);
            const double lowest = *std::min_element(p.begin(), p.end());
            if (std::abs(lowest) <= 1e-9) {
                ++boundary;
                continue;
            }
            bool distribution = true;
            try {
                GeneralizedPauliChannel(d, ProbabilityVector(p));
            } catch (const InvalidDistribution&) {
                distribution = false;
            }
            const bool inequality = is_completely_positive(e);
            const bool choi = cp_oracle_choi(e, m);
            cp += inequality ? 1 : 0;
            if (inequality != distribution || inequality != choi) ++disagreements;
        }
    }
    return {disagreements == 0, std::to_string(disagreements) + " disagreements in 2000 (" + std::to_string(cp) + " CP, " +
                                    std::to_string(boundary) + " boundary cases skipped)"};
}

Outcome oracle_sandwich() {
    SearchConfig cfg;
    cfg.resolution = 256;  // 256 × 512
    const auto m = standard_mubs(2);
    const double sample_estimate = holevo_estimate(qubit_sample(), m, cfg);
    bool ok = std::abs(sample_estimate - kSingle) <= 1e-4;
    const auto check = [&](const EigenvalueVector& e, const GeneralizedPauliChannel& c) {
        const double est = holevo_estimate(c, m, cfg);
        const auto b = capacity_bounds(e);
        return est >= b.chi_low - 1e-4 && est <= b.chi_up + 1e-6;
    };
    int outside = check(eigenvalues_from_probabilities(qubit_sample()), qubit_sample()) ? 0 : 1;
    Rng rng(104);
    for (int i = 0; i < 100; ++i) {
        const auto e = random_cp_eigenvalues(2, rng);
        if (!check(e, probabilities_from_eigenvalues(e))) ++outside;
    }
    ok = ok && outside == 0;
    return {ok, "sample error " + fmt(std::abs(sample_estimate - kSingle)) + ", " + std::to_string(outside) +
                    "/101 outside the bounds"};
}

Outcome cross_form_equality() {
    Rng rng(105);
    double worst_forms = 0.0;
    for (int d : {2, 3, 4, 5}) {
        for (int i = 0; i < 500; ++i) {
            const auto e = random_cp_eigenvalues(d, rng);
            const auto l = holevo_upper_bound(e).components;
            const auto p = zeta_components_p_form(probabilities_from_eigenvalues(e));
            const auto diff = [](const std::vector<double>& a, const std::vector<double>& b) {
                double w = 0.0;
                for (std::size_t k = 0; k < a.size(); ++k) w = std::max(w, std::abs(a[k] - b[k]));
                return w;
            };
            worst_forms = std::max({worst_forms, diff(l.after, p.after), diff(l.before, p.before),
                                    diff(l.straddling, p.straddling), diff(l.paired, p.paired), diff(l.zeta, p.zeta)});
            if (l.region != p.region) worst_forms = INFINITY;
        }
    }

    // Boundary channels Σλ = λ_{m+1}: branches m and m+1 must give the same value.
    double worst_boundary = 0.0;
    int boundaries = 0;
    for (int d : {3, 4, 5}) {
        for (int m = 1; m <= d - 1; ++m) {
            int built = 0;
            for (int attempt = 0; attempt < 20000 && built < 50; ++attempt) {
                std::vector<double> x(d);
                for (auto& v : x) v = uniform(rng, -0.5, 0.5);
                const double mean = std::accumulate(x.begin(), x.end(), 0.0) / d;
                for (auto& v : x) v -= mean;
                std::sort(x.begin(), x.end(), std::greater<>());
                x.push_back(0.5 * (x[m - 1] + x[m]));
                const EigenvalueVector e(d, x);
                if (!is_completely_positive(e)) continue;
                ++built;
                const auto c = holevo_upper_bound(e).components;
                worst_boundary = std::max(worst_boundary,
                                          std::abs(entropy(assemble_zeta(c, m)) - entropy(assemble_zeta(c, m + 1))));
            }
            boundaries += built;
        }
    }
    return {worst_forms <= 1e-12 && worst_boundary <= 1e-10 && boundaries > 0,
            "max form difference " + fmt(worst_forms) + ", max branch difference " + fmt(worst_boundary) + " over " +
                std::to_string(boundaries) + " boundary channels"};
}

Outcome mub_suites() {
    double worst = 0.0;
    for (int d : {2, 3, 5, 7}) worst = std::max(worst, mub_deviation(build_mubs_prime(d)));
    worst = std::max(worst, mub_deviation(build_mubs_dim4()));
    const bool weyl = check_weyl_correspondence(build_mubs_prime(3)) && check_weyl_correspondence(build_mubs_prime(5)) &&
                check_weyl_correspondence(build_mubs_prime(2));
    return {worst <= 1e-9 && weyl, "max overlap deviation " + fmt(worst) + (weyl ? ", Weyl correspondence holds"
                                                                                : ", Weyl correspondence FAILED")};
}

Outcome fidelity_identity() {
    Rng rng(106);
    double worst = 0.0;
    for (int i = 0; i < 1000; ++i) {
        const auto e = random_cp_eigenvalues(2, rng);
        worst = std::max(worst, std::abs(capacity_from_fidelity(selected_fidelity(e)) - pauli_classical_capacity(e)));
    }
    return {worst <= 1e-12, "max difference " + fmt(worst)};
}

Outcome dynamics() {
    std::ifstream in(GPCAP_DATA_DIR "/witness_rates.json");
    const RateSpec witness = rate_spec_from_json(Json::parse(in));
    const double g = 0.7;
    const RateSpec fixtures[] = {RateSpec::constant(g, g, g), RateSpec::constant(g, 0, 0),
                                 RateSpec::constant(0.2, 0.9, 0.4), witness};

    double ode = 0.0;
    for (const auto& r : fixtures) {
        const auto closed = eigenvalue_trajectory(r, 3.0, 61);
        const auto direct = eigenvalue_trajectory_ode(r, 3.0, 61);
        for (std::size_t i = 0; i < direct.size(); ++i) {
            for (int a = 0; a < 3; ++a) ode = std::max(ode, std::abs(direct[i][a] - closed.lambdas[i][a]));
        }
    }

    double closed_form = 0.0;
    const auto equal = eigenvalue_trajectory(fixtures[0], 3.0, 61);
    const auto single = eigenvalue_trajectory(fixtures[1], 3.0, 61);
    for (std::size_t i = 0; i < equal.times.size(); ++i) {
        const double t = equal.times[i];
        for (int a = 0; a < 3; ++a) closed_form = std::max(closed_form, std::abs(equal.lambdas[i][a] - std::exp(-2 * g * t)));
        closed_form = std::max({closed_form, std::abs(single.lambdas[i][0] - 1.0),
                                std::abs(single.lambdas[i][1] - std::exp(-g * t)),
                                std::abs(single.lambdas[i][2] - std::exp(-g * t))});
    }

    const auto non_increasing = [](const PauliTrajectory& t) {
        for (std::size_t i = 1; i < t.capacity.size(); ++i) {
            if (t.capacity[i] - t.capacity[i - 1] > 1e-10) return false;
        }
        return true;
    };
    bool monotone = true;
    for (int k = 0; k < 3; ++k) {
        const auto t = capacity_trajectory(eigenvalue_trajectory(fixtures[k], 3.0, 301));
        monotone = monotone && t.p_divisible && non_increasing(t);
    }
    const auto w = capacity_trajectory(eigenvalue_trajectory(witness, 3.0, 301));
    const bool converse_fails = w.cp_everywhere && !w.p_divisible && non_increasing(w);

    const bool ok = ode <= 1e-6 && closed_form <= 1e-12 && monotone && converse_fails;
    return {ok, "ODE deviation " + fmt(ode) + ", closed-form deviation " + fmt(closed_form) +
                    (monotone ? ", P-divisible C monotone" : ", P-divisible C NOT monotone") +
                    (converse_fails ? ", witness decreasing without P-divisibility" : ", witness FAILED")};
}

Outcome cli_determinism() {
    std::ostringstream out, err;
    const int code = cli::run({"verify", "--suite", "paper"}, out, err);
    std::ostringstream a, b, e1, e2;
    cli::run({"random-sweep", "--d", "3", "--count", "200", "--seed", "2024"}, a, e1);
    cli::run({"random-sweep", "--d", "3", "--count", "200", "--seed", "2024"}, b, e2);
    const bool same = !a.str().empty() && a.str() == b.str();
    return {code == 0 && same, "verify exit " + std::to_string(code) + (same ? ", sweep identical" : ", sweep DIFFERS")};
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        const char* name;
        std::function<Outcome()> run;
    };
    const std::vector<Criterion> criteria{
        {1, "qubit sample channel upper bound, both routes", sample_upper_bound},
        {2, "two-copy upper bound and its non-additivity", two_copy_upper_bound},
        {3, "bound ordering on random channels, d = 2, 3, 5, 4", bound_ordering},
        {4, "weak additivity of the lower bound", weak_additivity},
        {5, "three-way complete-positivity agreement", cp_agreement},
        {6, "grid oracle sandwiched by the bounds", oracle_sandwich},
        {7, "eigenvalue/probability forms and branch continuity", cross_form_equality},
        {8, "MUB construction and Weyl correspondence", mub_suites},
        {9, "fidelity form of the qubit capacity", fidelity_identity},
        {10, "dynamical maps", dynamics},
        {11, "CLI reference suite and sweep determinism", cli_determinism},
    };
    int failed = 0;
    for (const auto& c : criteria) {
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        std::printf("%s  [%2d] %-52s %s\n", o.passed ? "PASS" : "FAIL", c.id, c.name, o.detail.c_str());
        failed += o.passed ? 0 : 1;
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
