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


// Named self-checks: fixed reference values, property sweeps, and a per-channel
// report comparing every independent route the library has.

#ifndef GPCAP_VERIFY_HPP
#define GPCAP_VERIFY_HPP

#include <string>
#include <string_view>
#include <vector>

#include "gpcap/serialization.hpp"

namespace gpcap {

struct CheckResult {
    std::string name;
    bool passed;
    std::string detail;
};

struct SuiteReport {
    std::string suite;
    std::vector<CheckResult> checks;

    bool all_passed() const;
    void add(std::string name, bool passed, std::string detail = {});
    /// Passes when |got − want| ≤ tol; the detail records all three.
    void add_close(std::string name, double got, double want, double tol);
};

/// "reference": published closed-form values and identities.
/// "properties": seeded random sweeps of the structural invariants.
std::vector<std::string> suite_names();
/// Throws InputError for unknown names.
SuiteReport run_suite(std::string_view name);

/// Every cross-check applicable to one channel. The JSON carries the intermediate values.
struct ChannelReport {
    SuiteReport checks;
    Json values;
};
ChannelReport verify_channel(const EigenvalueVector& e, const SearchConfig& cfg);

/// Fixed-width pass/fail table, one line per check and a summary line.
std::string format_table(const SuiteReport& r);
Json to_json(const SuiteReport& r);

}  // namespace gpcap

#endif
