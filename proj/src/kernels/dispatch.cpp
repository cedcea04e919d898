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

#include <atomic>
#include <cstdlib>
#include <stdexcept>
#include <string>

#include "gpcap/kernels.hpp"

namespace gpcap::kernels {
namespace {

struct Table {
    Isa isa;
    double (*xlogx_sum)(std::span<const double>);
    void (*bloch_entropy)(const BlochMap&, std::span<const double>, std::span<const double>,
                          std::span<const double>, std::span<double>);
    ArgMin (*argmin)(std::span<const double>);
};

constexpr Table kScalarTable{Isa::scalar, &scalar::xlogx_sum, &scalar::bloch_entropy, &scalar::argmin};
#if GPCAP_HAVE_AVX2
constexpr Table kAvx2Table{Isa::avx2, &avx2::xlogx_sum, &avx2::bloch_entropy, &avx2::argmin};
#endif

bool cpu_has_avx2() {
#if GPCAP_HAVE_AVX2 && (defined(__GNUC__) || defined(__clang__))
    __builtin_cpu_init();
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
    return false;
#endif
}

const Table* table_for(Isa isa) {
#if GPCAP_HAVE_AVX2
    if (isa == Isa::avx2) return &kAvx2Table;
#endif
    (void)isa;
    return &kScalarTable;
}

const Table* detect() {
    if (const char* env = std::getenv("GPCAP_KERNELS"); env != nullptr && std::string(env) == "scalar") {
        return &kScalarTable;
    }
    return cpu_has_avx2() ? table_for(Isa::avx2) : &kScalarTable;
}

std::atomic<const Table*> g_override{nullptr};

const Table& table() {
    if (const Table* forced = g_override.load(std::memory_order_acquire)) return *forced;
    static const Table* detected = detect();
    return *detected;
}

}  // namespace

double xlogx_sum(std::span<const double> x) { return table().xlogx_sum(x); }

void bloch_entropy(const BlochMap& map, std::span<const double> nx, std::span<const double> ny,
                   std::span<const double> nz, std::span<double> out) {
    if (nx.size() < out.size() || ny.size() < out.size() || nz.size() < out.size()) {
        throw std::invalid_argument("bloch_entropy: coordinate spans shorter than output");
    }
    table().bloch_entropy(map, nx, ny, nz, out);
}

ArgMin argmin(std::span<const double> values) { return table().argmin(values); }

Isa active_isa() { return table().isa; }

bool isa_available(Isa isa) { return isa == Isa::scalar || cpu_has_avx2(); }

std::string_view isa_name(Isa isa) { return isa == Isa::avx2 ? "avx2" : "scalar"; }

void force_isa(std::optional<Isa> isa) {
    if (!isa) {
        g_override.store(nullptr, std::memory_order_release);
        return;
    }
    if (!isa_available(*isa)) {
        throw std::invalid_argument("kernel ISA not available on this CPU: " + std::string(isa_name(*isa)));
    }
    g_override.store(table_for(*isa), std::memory_order_release);
}

}  // namespace gpcap::kernels
