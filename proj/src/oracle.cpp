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


#include "gpcap/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <numeric>

#include "gpcap/capacity.hpp"
#include "gpcap/errors.hpp"
#include "gpcap/kernels.hpp"
#include "gpcap/sampling.hpp"

namespace gpcap {
namespace {

// How many of the best starting points get polished.
constexpr int kPolishStarts = 4;
constexpr int kPolishStartsHighDim = 8;
// Moves allowed at one step size before it is halved anyway.
constexpr int kMovesPerStep = 64;

bool choi_is_positive(const Matrix& choi) {
    const auto values = hermitian_eigenvalues(choi);
    return values.back() >= -kChoiTol;
}

double spectrum_entropy(const Matrix& rho) {
    auto values = hermitian_eigenvalues(rho);
    double total = 0.0;
    for (auto& v : values) {
        v = std::max(v, 0.0);
        total += v;
    }
    double h = 0.0;
    for (double v : values) {
        const double p = v / total;
        if (p > 0.0) h -= p * std::log(p);
    }
    return h;
}

// Coordinate pattern search: try ±step on every coordinate, move to the best
// improvement, halve the step when nothing improves.
std::pair<std::vector<double>, double> polish(const std::function<double(const std::vector<double>&)>& f,
                                              std::vector<double> x, double value, double step, int halvings) {
    for (int level = 0; level < halvings; ++level) {
        for (int moves = 0; moves < kMovesPerStep; ++moves) {
            std::vector<double> best_x;
            double best = value;
            for (std::size_t i = 0; i < x.size(); ++i) {
                for (double sign : {1.0, -1.0}) {
                    auto trial = x;
                    trial[i] += sign * step;
                    const double v = f(trial);
                    if (v < best) {
                        best = v;
                        best_x = std::move(trial);
                    }
                }
            }
            if (best_x.empty()) break;
            x = std::move(best_x);
            value = best;
        }
        step *= 0.5;
    }
    return {std::move(x), value};
}

// Indices of the `count` smallest values, ties by index.
std::vector<std::size_t> smallest(std::span<const double> values, std::size_t count) {
    std::vector<std::size_t> idx(values.size());
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    count = std::min(count, idx.size());
    std::partial_sort(idx.begin(), idx.begin() + static_cast<std::ptrdiff_t>(count), idx.end(),
                      [&](std::size_t a, std::size_t b) {
                          return values[a] < values[b] || (values[a] == values[b] && a < b);
                      });
    idx.resize(count);
    return idx;
}

// Affine action n ↦ A n + t of a qubit channel on Bloch vectors.
kernels::BlochMap bloch_map(std::span<const KrausTerm> terms) {
    kernels::BlochMap map{};
    const Matrix image_id = apply_kraus(terms, pauli(0));
    for (int i = 0; i < 3; ++i) {
        map.offset[i] = 0.5 * (pauli(i + 1) * image_id).trace().real();
        const Matrix image = apply_kraus(terms, pauli(i + 1));
        for (int j = 0; j < 3; ++j) {
            map.linear[j * 3 + i] = 0.5 * (pauli(j + 1) * image).trace().real();
        }
    }
    return map;
}

double bloch_point_entropy(const kernels::BlochMap& map, double theta, double phi) {
    const double nx = std::sin(theta) * std::cos(phi);
    const double ny = std::sin(theta) * std::sin(phi);
    const double nz = std::cos(theta);
    double out = 0.0;
    kernels::bloch_entropy(map, {&nx, 1}, {&ny, 1}, {&nz, 1}, {&out, 1});
    return out;
}

double qubit_min_entropy(std::span<const KrausTerm> terms, const SearchConfig& cfg) {
    const auto map = bloch_map(terms);
    const int n_theta = cfg.resolution + 1;
    const int n_phi = 2 * cfg.resolution;
    const double d_theta = std::numbers::pi / cfg.resolution;
    const double d_phi = 2.0 * std::numbers::pi / n_phi;

    const std::size_t n = static_cast<std::size_t>(n_theta) * n_phi;
    std::vector<double> nx(n), ny(n), nz(n), h(n);
    for (int i = 0; i < n_theta; ++i) {
        const double theta = i * d_theta;
        for (int j = 0; j < n_phi; ++j) {
            const double phi = j * d_phi;
            const std::size_t k = static_cast<std::size_t>(i) * n_phi + j;
            nx[k] = std::sin(theta) * std::cos(phi);
            ny[k] = std::sin(theta) * std::sin(phi);
            nz[k] = std::cos(theta);
        }
    }
    kernels::bloch_entropy(map, nx, ny, nz, h);
    double best = kernels::argmin(h).value;

    const auto f = [&](const std::vector<double>& x) { return bloch_point_entropy(map, x[0], x[1]); };
    for (std::size_t k : smallest(h, kPolishStarts)) {
        const double theta = static_cast<double>(k / n_phi) * d_theta;
        const double phi = static_cast<double>(k % n_phi) * d_phi;
        const auto [x, v] = polish(f, {theta, phi}, h[k], 0.5 * d_theta, cfg.refinement_iterations);
        best = std::min(best, v);
    }
    return best;
}

double qudit_min_entropy(int d, std::span<const KrausTerm> terms, const SearchConfig& cfg) {
    const auto entropy_at = [&](const std::vector<double>& x) {
        Vector psi(d);
        for (int i = 0; i < d; ++i) psi(i) = Complex(x[i], x[d + i]);
        const double norm = psi.norm();
        if (norm == 0.0) return std::log(static_cast<double>(d));
        psi /= norm;
        return spectrum_entropy(apply_kraus(terms, psi * psi.adjoint()));
    };

    std::vector<std::vector<double>> starts;
    Rng rng(cfg.seed);
    for (int s = 0; s < cfg.samples; ++s) {
        const Vector psi = random_pure_state(d, rng);
        std::vector<double> x(2 * d);
        for (int i = 0; i < d; ++i) {
            x[i] = psi(i).real();
            x[d + i] = psi(i).imag();
        }
        starts.push_back(std::move(x));
    }
    if (starts.empty()) {
        std::vector<double> x(2 * d, 0.0);
        x[0] = 1.0;
        starts.push_back(std::move(x));
    }

    std::vector<double> values(starts.size());
    for (std::size_t s = 0; s < starts.size(); ++s) values[s] = entropy_at(starts[s]);
    double best = *std::min_element(values.begin(), values.end());
    for (std::size_t s : smallest(values, kPolishStartsHighDim)) {
        const auto [x, v] = polish(entropy_at, starts[s], values[s], 0.25, cfg.refinement_iterations);
        best = std::min(best, v);
    }
    return best;
}

}  // namespace

void SearchConfig::validate() const {
    if (resolution < 8) throw InputError("search resolution must be at least 8");
    if (samples < 0) throw InputError("search samples must be non-negative");
    if (refinement_iterations < 0) throw InputError("refinement iterations must be non-negative");
}

bool cp_oracle_choi(const GeneralizedPauliChannel& c) { return choi_is_positive(choi_matrix(c)); }

bool cp_oracle_choi(const WeylChannel& w) { return choi_is_positive(choi_matrix(w)); }

bool cp_oracle_choi(const EigenvalueVector& e, const MubSet& m) { return choi_is_positive(choi_matrix(e, m)); }

double output_entropy(const GeneralizedPauliChannel& c, const MubSet& m, const Vector& psi) {
    const Vector v = psi / psi.norm();
    return spectrum_entropy(apply_linear(c, m, v * v.adjoint()));
}

double min_output_entropy(const GeneralizedPauliChannel& c, const MubSet& m, const SearchConfig& cfg) {
    cfg.validate();
    const auto terms = kraus_terms(c, m);
    if (c.dimension() == 2) return qubit_min_entropy(terms, cfg);
    return qudit_min_entropy(c.dimension(), terms, cfg);
}

double holevo_estimate(const GeneralizedPauliChannel& c, const MubSet& m, const SearchConfig& cfg) {
    return std::log(static_cast<double>(c.dimension())) - min_output_entropy(c, m, cfg);
}

AdditivityReport additivity_report(const GeneralizedPauliChannel& c) {
    const auto e = eigenvalues_from_probabilities(c);
    require_completely_positive(e);
    const int d = c.dimension();

    AdditivityReport r{};
    r.chi_low = holevo_lower_bound(e).value;

    double min_row_entropy = std::numeric_limits<double>::infinity();
    for (int alpha = 1; alpha <= d + 1; ++alpha) {
        const RealMatrix t = classical_map_t(e, alpha).matrix();
        const ClassicalMap joint(kron(t, t));
        for (int row = 0; row < d * d; ++row) {
            min_row_entropy = std::min(min_row_entropy, shannon_entropy(ProbabilityVector(joint.row(row))));
        }
    }
    r.chi_low_tensor = std::log(static_cast<double>(d * d)) - min_row_entropy;
    r.lower_gap = r.chi_low_tensor - 2.0 * r.chi_low;

    r.chi_up = holevo_upper_bound_weyl(gpc_to_weyl(c));
    r.chi_up_tensor = holevo_upper_bound_weyl(tensor(c, c));
    r.upper_gap = 2.0 * r.chi_up - r.chi_up_tensor;
    return r;
}

}  // namespace gpcap
