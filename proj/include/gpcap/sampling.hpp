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


// Seeded draws built on std::mt19937_64, whose output sequence is fixed by the
// standard. The distributions are written out here because the standard library
// ones are implementation-defined.

#ifndef GPCAP_SAMPLING_HPP
#define GPCAP_SAMPLING_HPP

#include <random>

#include "gpcap/channels.hpp"

namespace gpcap {

using Rng = std::mt19937_64;

/// Uniform on [0, 1) from the top 53 bits of one draw.
double uniform01(Rng& rng);
double uniform(Rng& rng, double lo, double hi);
/// Box–Muller, one normal per two uniforms.
double standard_normal(Rng& rng);

/// Haar-random unit vector in C^d (normalized complex Gaussian).
Vector random_pure_state(int d, Rng& rng);

/// Uniform on the CP polytope: rejection from the box [−1/(d−1), 1]^{d+1}.
EigenvalueVector random_cp_eigenvalues(int d, Rng& rng);
/// Uniform on the box, CP or not.
EigenvalueVector random_box_eigenvalues(int d, Rng& rng);

}  // namespace gpcap

#endif
