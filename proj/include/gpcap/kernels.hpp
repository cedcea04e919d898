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

// Data-parallel inner loops. Every kernel has a scalar reference in
// `kernels::scalar` and, on x86-64, an AVX2+FMA variant in `kernels::avx2`.
// The unqualified entry points dispatch at runtime to the best variant the CPU
// supports. Set GPCAP_KERNELS=scalar in the environment to pin the reference path.

#ifndef GPCAP_KERNELS_HPP
#define GPCAP_KERNELS_HPP

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string_view>

namespace gpcap::kernels {

enum class Isa { scalar, avx2 };

/// Affine map n ↦ offset + linear·n taking an input Bloch vector to an output one.
/// `linear` is row-major 3×3.
struct BlochMap {
    std::array<double, 9> linear{};
    std::array<double, 3> offset{};
};

struct ArgMin {
    std::size_t index;
    double value;
};

/// Σ x ln x over the entries; entries ≤ 0 contribute nothing.
double xlogx_sum(std::span<const double> x);

/// out[i] = binary entropy of the qubit state whose Bloch vector is map(n_i),
/// n_i = (nx[i], ny[i], nz[i]). Output Bloch lengths above 1 are clamped to 1.
void bloch_entropy(const BlochMap& map, std::span<const double> nx, std::span<const double> ny,
                   std::span<const double> nz, std::span<double> out);

/// Smallest value and the first index holding it. Empty input gives index = size (0)
/// and value = +inf.
ArgMin argmin(std::span<const double> values);

Isa active_isa();
bool isa_available(Isa isa);
std::string_view isa_name(Isa isa);

/// Overrides runtime selection; std::nullopt restores auto-detection.
/// Throws std::invalid_argument if the requested ISA is unavailable.
void force_isa(std::optional<Isa> isa);

namespace scalar {
double xlogx_sum(std::span<const double> x);
void bloch_entropy(const BlochMap& map, std::span<const double> nx, std::span<const double> ny,
                   std::span<const double> nz, std::span<double> out);
ArgMin argmin(std::span<const double> values);
}  // namespace scalar

#if GPCAP_HAVE_AVX2
namespace avx2 {
double xlogx_sum(std::span<const double> x);
void bloch_entropy(const BlochMap& map, std::span<const double> nx, std::span<const double> ny,
                   std::span<const double> nz, std::span<double> out);
ArgMin argmin(std::span<const double> values);
}  // namespace avx2
#endif

}  // namespace gpcap::kernels

#endif
