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


// JSON forms of channels, MUB sets, rate specifications and results.

#ifndef GPCAP_SERIALIZATION_HPP
#define GPCAP_SERIALIZATION_HPP

#include <json.hpp>

#include "gpcap/capacity.hpp"
#include "gpcap/channels.hpp"
#include "gpcap/dynamics.hpp"
#include "gpcap/oracle.hpp"

namespace gpcap {

using Json = nlohmann::json;

/// {"d": int, "probabilities": [p_0 … p_{d+1}]} or {"d": int, "lambdas": [λ_1 … λ_{d+1}]}.
/// Exactly one of the two lists; other keys are ignored. Throws InputError.
EigenvalueVector eigenvalues_from_json(const Json& j);
Json to_json(const EigenvalueVector& e);
Json to_json(const GeneralizedPauliChannel& c);

/// Array of bases, each an array of vectors, each an array of [re, im] pairs.
MubSet mub_set_from_json(const Json& j);
Json to_json(const MubSet& m);

/// {"gamma": [r1, r2, r3]} where each r is a number or {"times": [...], "values": [...]}.
RateSpec rate_spec_from_json(const Json& j);

/// Entropic fields are divided by ln 2 when `bits` is set.
Json to_json(const EigenvalueVector& e, const CapacityBounds& b, bool bits);
Json to_json(const AdditivityReport& r, bool bits);

}  // namespace gpcap

#endif
