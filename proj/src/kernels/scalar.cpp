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

#include <algorithm>
#include <cmath>
#include <limits>

#include "gpcap/kernels.hpp"

namespace gpcap::kernels::scalar {

double xlogx_sum(std::span<const double> x) {
    double sum = 0.0;
    for (double v : x) {
        if (v > 0.0) {
            sum += v * std::log(v);
        }
    }
    return sum;
}

void bloch_entropy(const BlochMap& map, std::span<const double> nx, std::span<const double> ny,
                   std::span<const double> nz, std::span<double> out) {
    const auto& a = map.linear;
    const auto& t = map.offset;
    for (std::size_t i = 0; i < out.size(); ++i) {
        double rx = t[0] + a[0] * nx[i] + a[1] * ny[i] + a[2] * nz[i];
        double ry = t[1] + a[3] * nx[i] + a[4] * ny[i] + a[5] * nz[i];
        double rz = t[2] + a[6] * nx[i] + a[7] * ny[i] + a[8] * nz[i];
        double r = std::min(1.0, std::sqrt(rx * rx + ry * ry + rz * rz));
        double up = 0.5 * (1.0 + r);
        double down = 0.5 * (1.0 - r);
        double h = 0.0;
        if (up > 0.0) h -= up * std::log(up);
        if (down > 0.0) h -= down * std::log(down);
        out[i] = h;
    }
}

ArgMin argmin(std::span<const double> values) {
    ArgMin best{values.size(), std::numeric_limits<double>::infinity()};
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (values[i] < best.value) {
            best = {i, values[i]};
        }
    }
    if (!values.empty() && best.index == values.size()) {
        best.index = 0;  // all +inf
    }
    return best;
}

}  // namespace gpcap::kernels::scalar
