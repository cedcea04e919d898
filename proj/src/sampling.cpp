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


#include "gpcap/sampling.hpp"

#include <cmath>
#include <numbers>

namespace gpcap {

double uniform01(Rng& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

double uniform(Rng& rng, double lo, double hi) { return lo + (hi - lo) * uniform01(rng); }

double standard_normal(Rng& rng) {
    const double u1 = 1.0 - uniform01(rng);  // (0, 1]
    const double u2 = uniform01(rng);
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

Vector random_pure_state(int d, Rng& rng) {
    Vector v(d);
    for (int i = 0; i < d; ++i) {
        const double re = standard_normal(rng);
        const double im = standard_normal(rng);
        v(i) = Complex(re, im);
    }
    return v / v.norm();
}

EigenvalueVector random_box_eigenvalues(int d, Rng& rng) {
    const double lo = -1.0 / (d - 1);
    std::vector<double> lambdas(d + 1);
    for (auto& l : lambdas) l = uniform(rng, lo, 1.0);
    return EigenvalueVector(d, std::move(lambdas));
}

EigenvalueVector random_cp_eigenvalues(int d, Rng& rng) {
    for (;;) {
        EigenvalueVector e = random_box_eigenvalues(d, rng);
        if (is_completely_positive(e)) return e;
    }
}

}  // namespace gpcap
