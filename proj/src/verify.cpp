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


#include "gpcap/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>

#include "gpcap/errors.hpp"
#include "gpcap/mub.hpp"
#include "gpcap/sampling.hpp"

namespace gpcap {
namespace {

constexpr double kExact = 1e-12;

const double kLn2 = std::log(2.0);
const double kLn3 = std::log(3.0);
const double kLn5 = std::log(5.0);

// The qubit channel with p = (1/4, 1/2, 1/4, 0).
GeneralizedPauliChannel sample_qubit_channel() {
    return GeneralizedPauliChannel(2, ProbabilityVector({0.25, 0.5, 0.25, 0.0}));
}

double single_copy_value() { return 0.75 * kLn3 - kLn2; }
double two_copy_value() { return 15.0 / 16.0 * kLn5 - 11.0 / 8.0 * kLn2; }

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.15g", v);
    return buf;
}

double max_abs_diff(std::span<const double> a, std::span<const double> b) {
    if (a.size() != b.size()) return INFINITY;
    double worst = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
    return worst;
}

double max_abs(const Matrix& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

// Direct evaluation of [1+(d−1)λ]/d ln[1+(d−1)λ] + (d−1)(1−λ)/d ln(1−λ).
double symmetric_capacity_formula(int d, double lambda) {
    const double a = 1.0 + (d - 1) * lambda;
    const double b = 1.0 - lambda;
    double v = 0.0;
    if (a > 0.0) v += a / d * std::log(a);
    if (b > 0.0) v += (d - 1) * b / d * std::log(b);
    return v;
}

void reference_suite(SuiteReport& r) {
    const auto c = sample_qubit_channel();
    const auto e = eigenvalues_from_probabilities(c);
    const std::vector<double> lambdas{0.5, 0.0, -0.5};

    // Two-qubit commuting triples.
    {
        double worst = 0.0;
        for (const auto& triple : two_qubit_commuting_triples()) {
            for (int i = 0; i < 3; ++i) {
                for (int j = i + 1; j < 3; ++j) {
                    const Matrix a = kron(pauli(triple[i][0]), pauli(triple[i][1]));
                    const Matrix b = kron(pauli(triple[j][0]), pauli(triple[j][1]));
                    worst = std::max(worst, max_abs(a * b - b * a));
                }
            }
        }
        r.add_close("mub.dim4_triples_commute", worst, 0.0, kExact);
    }

    r.add_close("channels.sample_lambdas_from_probabilities", max_abs_diff(e.values(), lambdas), 0.0, kExact);
    {
        const auto back = probabilities_from_eigenvalues(EigenvalueVector(2, lambdas));
        const std::vector<double> want{0.25, 0.5, 0.25, 0.0};
        r.add_close("channels.sample_probabilities_from_lambdas",
                    max_abs_diff(back.probabilities().entries(), want), 0.0, kExact);
    }
    r.add("channels.sample_is_completely_positive", is_completely_positive(e));

    // Output on basis projectors and on the unitaries U_α^k, d = 2, 3, 4, 5.
    {
        Rng rng(7);
        double worst_projector = 0.0;
        double worst_unitary = 0.0;
        for (int d : {2, 3, 4, 5}) {
            const auto m = standard_mubs(d);
            const auto lam = random_cp_eigenvalues(d, rng);
            const auto ch = probabilities_from_eigenvalues(lam);
            for (int alpha = 1; alpha <= d + 1; ++alpha) {
                for (int k = 0; k < d; ++k) {
                    Matrix want = (1.0 - lam(alpha)) / d * Matrix::Identity(d, d) + lam(alpha) * m.projector(alpha, k);
                    worst_projector = std::max(worst_projector, max_abs(apply_linear(ch, m, m.projector(alpha, k)) - want));
                }
                for (int k = 1; k <= d - 1; ++k) {
                    const Matrix u = unitary_u(m, alpha, k);
                    worst_unitary = std::max(worst_unitary, max_abs(apply_linear(ch, m, u) - lam(alpha) * u));
                }
            }
        }
        r.add_close("channels.projector_images", worst_projector, 0.0, 1e-12);
        r.add_close("channels.unitary_eigenvectors", worst_unitary, 0.0, 1e-12);
    }

    {
        const auto w = gpc_to_weyl(c);
        const std::array<int, 2> id{0, 0}, s1{0, 1}, s2{1, 1}, s3{1, 0};
        const auto p = w.probabilities();
        const std::vector<double> got{p[w.index(id)], p[w.index(s1)], p[w.index(s2)], p[w.index(s3)]};
        r.add_close("channels.sample_weyl_weights", max_abs_diff(got, std::vector<double>{0.25, 0.5, 0.25, 0.0}), 0.0, kExact);
    }
    {
        const GeneralizedPauliChannel c4(4, ProbabilityVector({0.1, 0.3, 0.05, 0.25, 0.2, 0.1}));
        const auto w = gpc_to_weyl(c4);
        double worst = std::abs(w.probabilities()[0] - 0.1);
        int nonzero = 0;
        const auto& triples = two_qubit_commuting_triples();
        for (std::size_t idx = 1; idx < 16; ++idx) {
            const auto label = w.label(idx);
            // Recover σ_a ⊗ σ_b from Weyl labels and find its triple.
            const auto pauli_of = [](int k, int l) { return k == 0 ? (l == 0 ? 0 : 1) : (l == 0 ? 3 : 2); };
            const PauliPair pair{pauli_of(label[0], label[1]), pauli_of(label[2], label[3])};
            for (int alpha = 1; alpha <= 5; ++alpha) {
                const auto& t = triples[alpha - 1];
                if (std::find(t.begin(), t.end(), pair) != t.end()) {
                    worst = std::max(worst, std::abs(w.probabilities()[idx] - c4.p(alpha) / 3.0));
                    ++nonzero;
                }
            }
        }
        r.add("channels.dim4_weyl_weights", worst <= kExact && nonzero == 15,
              "max deviation " + fmt(worst) + ", covered " + std::to_string(nonzero) + "/15");
    }
    {
        auto got = kraus_probability_multiset(c);
        std::sort(got.begin(), got.end());
        r.add_close("channels.sample_kraus_multiset", max_abs_diff(got, std::vector<double>{0.0, 0.25, 0.25, 0.5}), 0.0, kExact);
    }
    {
        const auto w = tensor(c, c);
        const auto entries = w.probabilities().entries();
        std::vector<double> got(entries.begin(), entries.end());
        std::sort(got.begin(), got.end(), std::greater<>());
        std::vector<double> want{4, 2, 2, 2, 2, 1, 1, 1, 1, 0, 0, 0, 0, 0, 0, 0};
        for (auto& v : want) v /= 16.0;
        r.add_close("channels.sample_two_copy_multiset", max_abs_diff(got, want), 0.0, kExact);
    }
    {
        const auto t = classical_map_t(EigenvalueVector(2, {0.5, 0.5, 0.5}), 1).matrix();
        RealMatrix want(2, 2);
        want << 0.75, 0.25, 0.25, 0.75;
        r.add_close("channels.classical_map_half", (t - want).cwiseAbs().maxCoeff(), 0.0, kExact);
    }

    r.add_close("capacity.sample_lower_bound", holevo_lower_bound(e).value, single_copy_value(), kExact);
    {
        const EigenvalueVector q(2, {0.6, 0.3, 0.1});
        const auto pv = kraus_probability_multiset(probabilities_from_eigenvalues(q));
        const auto z = zeta_vector(pv, 2);
        const std::vector<double> want{0.5 * (1.0 + 0.6), 0.5 * (1.0 - 0.6)};
        r.add_close("capacity.qubit_zeta", max_abs_diff(z.entries(), want), 0.0, kExact);
    }
    r.add_close("capacity.sample_upper_grouped", holevo_upper_bound_weyl(gpc_to_weyl(c)), single_copy_value(), kExact);
    r.add_close("capacity.sample_two_copy_upper", holevo_upper_bound_weyl(tensor(c, c)), two_copy_value(), kExact);
    r.add_close("capacity.sample_upper_closed_form", holevo_upper_bound(e).value, single_copy_value(), kExact);
    {
        Rng rng(11);
        int mismatches = 0;
        for (int d : {2, 3, 4, 5}) {
            for (int i = 0; i < 200; ++i) {
                const auto lam = random_cp_eigenvalues(d, rng);
                const auto ch = probabilities_from_eigenvalues(lam);
                for (int alpha = 1; alpha <= d + 1; ++alpha) {
                    const bool p_side = ch.p0() >= ch.p(alpha) / (d - 1);
                    const bool l_side = lam.sum() >= lam(alpha);
                    const double margin = std::abs(lam.sum() - lam(alpha));
                    if (p_side != l_side && margin > 1e-12) ++mismatches;
                }
            }
        }
        r.add("capacity.region_condition_equivalence", mismatches == 0, std::to_string(mismatches) + " mismatches");
    }
    {
        double worst = 0.0;
        bool present = true;
        for (int d : {2, 3, 4, 5}) {
            for (double lambda : {0.0, 0.2, 0.5, 0.9, 1.0}) {
                const EigenvalueVector dep(d, std::vector<double>(d + 1, lambda));
                const auto cap = classical_capacity_exact(dep);
                if (!cap) {
                    present = false;
                    continue;
                }
                worst = std::max(worst, std::abs(*cap - symmetric_capacity_formula(d, lambda)));
            }
        }
        r.add("capacity.depolarizing_capacity", present && worst <= kExact, "max deviation " + fmt(worst));
    }
    {
        Rng rng(13);
        bool ok = true;
        double worst_gap = 0.0;
        for (int i = 0; i < 1000; ++i) {
            const auto lam = random_cp_eigenvalues(2, rng);
            const auto b = capacity_bounds(lam);
            ok = ok && b.exact_capacity.has_value();
            worst_gap = std::max(worst_gap, std::abs(b.chi_up - b.chi_low));
        }
        r.add("capacity.qubit_bounds_coincide", ok && worst_gap <= kCoincidenceTol, "max gap " + fmt(worst_gap));
    }
    r.add_close("capacity.sample_qubit_capacity", pauli_classical_capacity(e), single_copy_value(), kExact);
    {
        const auto f = channel_fidelity_extremes(e);
        r.add("capacity.sample_fidelities", std::abs(f.f_min - 0.25) <= kExact && std::abs(f.f_max - 0.75) <= kExact,
              "f_min " + fmt(f.f_min) + ", f_max " + fmt(f.f_max));
    }
    {
        const double gap = 2.0 * holevo_upper_bound_weyl(gpc_to_weyl(c)) - holevo_upper_bound_weyl(tensor(c, c));
        r.add_close("capacity.sample_upper_not_additive", gap, 2.0 * single_copy_value() - two_copy_value(), kExact);
    }

    r.add("oracle.sample_choi_positive", cp_oracle_choi(c));
    {
        const auto rep = additivity_report(c);
        r.add("oracle.sample_additivity_report",
              std::abs(rep.lower_gap) <= kExact &&
                  std::abs(rep.upper_gap - (2.0 * single_copy_value() - two_copy_value())) <= kExact,
              "lower gap " + fmt(rep.lower_gap) + ", upper gap " + fmt(rep.upper_gap));
    }

    {
        bool ok = true;
        for (const auto& g : std::vector<std::array<double, 3>>{{0, 0, 0}, {1, 1, 1}, {0.3, 0, 2}, {0.1, 0.5, 0.7}}) {
            ok = ok && eigenvalue_trajectory(RateSpec::constant(g[0], g[1], g[2]), 5.0, 201).p_divisible;
        }
        r.add("dynamics.nonnegative_rates_p_divisible", ok);
    }
}

void properties_suite(SuiteReport& r) {
    Rng rng(20240601);
    for (int d : {2, 3, 4, 5}) {
        int violations = 0;
        double worst_paths = 0.0;
        double worst_forms = 0.0;
        for (int i = 0; i < 200; ++i) {
            const auto lam = random_cp_eigenvalues(d, rng);
            const auto ch = probabilities_from_eigenvalues(lam);
            const auto up = holevo_upper_bound(lam);
            if (holevo_lower_bound(lam).value > up.value + kCoincidenceTol) ++violations;
            worst_paths = std::max(worst_paths, std::abs(up.value - holevo_upper_bound_weyl(gpc_to_weyl(ch))));
            worst_forms = std::max(worst_forms, max_abs_diff(up.components.zeta, zeta_components_p_form(ch).zeta));
        }
        const std::string tag = "d" + std::to_string(d);
        r.add("properties.bound_order_" + tag, violations == 0, std::to_string(violations) + " violations");
        r.add_close("properties.upper_paths_" + tag, worst_paths, 0.0, kExact);
        r.add_close("properties.zeta_forms_" + tag, worst_forms, 0.0, kExact);
    }
    for (int d : {2, 3}) {
        double worst = 0.0;
        int disagreements = 0;
        const auto m = standard_mubs(d);
        for (int i = 0; i < 100; ++i) {
            const auto lam = random_cp_eigenvalues(d, rng);
            worst = std::max(worst, std::abs(additivity_report(probabilities_from_eigenvalues(lam)).lower_gap));
            const auto box = random_box_eigenvalues(d, rng);
            if (is_completely_positive(box) != cp_oracle_choi(box, m)) ++disagreements;
        }
        const std::string tag = "d" + std::to_string(d);
        r.add_close("properties.lower_additive_" + tag, worst, 0.0, 1e-10);
        r.add("properties.cp_agreement_" + tag, disagreements == 0, std::to_string(disagreements) + " disagreements");
    }
}

}  // namespace

bool SuiteReport::all_passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

void SuiteReport::add(std::string name, bool passed, std::string detail) {
    checks.push_back({std::move(name), passed, std::move(detail)});
}

void SuiteReport::add_close(std::string name, double got, double want, double tol) {
    const bool ok = std::abs(got - want) <= tol;
    add(std::move(name), ok, "got " + fmt(got) + ", want " + fmt(want) + ", tol " + fmt(tol));
}

std::vector<std::string> suite_names() { return {"reference", "properties"}; }

SuiteReport run_suite(std::string_view name) {
    SuiteReport r{std::string(name), {}};
    if (name == "reference") {
        reference_suite(r);
    } else if (name == "properties") {
        properties_suite(r);
    } else {
        throw InputError("unknown suite '" + std::string(name) + "'");
    }
    return r;
}

ChannelReport verify_channel(const EigenvalueVector& e, const SearchConfig& cfg) {
    ChannelReport out{{"channel", {}}, to_json(e)};
    auto& r = out.checks;
    auto& v = out.values;
    const int d = e.dimension();

    const bool cp_inequality = is_completely_positive(e);
    const auto p = signed_probabilities(e);
    const bool cp_distribution = std::all_of(p.begin(), p.end(), [](double x) { return x >= -kClampSlack; });
    const bool supported = d == 4 || is_prime(d);
    v["signed_probabilities"] = p;
    v["cp_inequality"] = cp_inequality;
    v["cp_distribution"] = cp_distribution;
    r.add("cp.inequality_vs_distribution", cp_inequality == cp_distribution);
    if (supported) {
        const bool cp_choi = cp_oracle_choi(e, standard_mubs(d));
        v["cp_choi"] = cp_choi;
        r.add("cp.inequality_vs_choi", cp_inequality == cp_choi);
    }
    if (!cp_inequality) return out;

    const auto ch = probabilities_from_eigenvalues(e);
    const auto b = capacity_bounds(e);
    const auto up = holevo_upper_bound(e);
    const double low_classical = holevo_lower_via_classical(e);
    v["chi_low"] = b.chi_low;
    v["chi_low_classical"] = low_classical;
    v["chi_up"] = b.chi_up;
    v["alpha_star"] = b.maximizing_alpha;
    v["region"] = up.components.region;
    v["zeta"] = up.components.zeta;
    v["capacity"] = b.exact_capacity ? Json(*b.exact_capacity) : Json(nullptr);

    r.add("capacity.bound_order", b.chi_low <= b.chi_up + kCoincidenceTol);
    r.add_close("capacity.lower_paths", low_classical, b.chi_low, kExact);
    const auto pz = zeta_components_p_form(ch);
    v["zeta_p_form"] = pz.zeta;
    r.add_close("capacity.zeta_forms", max_abs_diff(up.components.zeta, pz.zeta), 0.0, kExact);
    if (supported) {
        const double grouped = holevo_upper_bound_weyl(gpc_to_weyl(ch));
        v["chi_up_grouped"] = grouped;
        r.add_close("capacity.upper_paths", grouped, b.chi_up, kExact);
        const auto rep = additivity_report(ch);
        v["additivity"] = to_json(rep, false);
        r.add_close("oracle.lower_additive", rep.lower_gap, 0.0, 1e-10);
    }
    if (d == 2) {
        r.add_close("capacity.fidelity_identity", capacity_from_fidelity(selected_fidelity(e)),
                    pauli_classical_capacity(e), kExact);
    }
    if (d == 2 || d == 3) {
        const double estimate = holevo_estimate(ch, standard_mubs(d), cfg);
        v["chi_estimate"] = estimate;
        const double slack = d == 2 ? 1e-4 : 1e-3;
        r.add("oracle.sandwich", estimate >= b.chi_low - slack && estimate <= b.chi_up + 1e-6,
              "estimate " + fmt(estimate));
    }
    return out;
}

std::string format_table(const SuiteReport& r) {
    std::size_t width = 5;
    for (const auto& c : r.checks) width = std::max(width, c.name.size());
    std::ostringstream os;
    int passed = 0;
    for (const auto& c : r.checks) {
        os << (c.passed ? "PASS  " : "FAIL  ") << c.name << std::string(width - c.name.size() + 2, ' ') << c.detail
           << '\n';
        passed += c.passed ? 1 : 0;
    }
    os << passed << '/' << r.checks.size() << " checks passed (" << r.suite << ")\n";
    return os.str();
}

Json to_json(const SuiteReport& r) {
    Json checks = Json::array();
    for (const auto& c : r.checks) checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    return {{"suite", r.suite}, {"passed", r.all_passed()}, {"checks", checks}};
}

}  // namespace gpcap
