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


#include <doctest.h>

#include <cfloat>
#include <cmath>
#include <limits>
#include <vector>

#include "gpcap/kernels.hpp"
#include "support/generators.hpp"

using namespace gpcap;
namespace k = gpcap::kernels;

namespace {

long double reference_xlogx_sum(const std::vector<double>& x) {
    long double s = 0.0L;
    for (double v : x) {
        if (v > 0.0) s += static_cast<long double>(v) * std::log(static_cast<long double>(v));
    }
    return s;
}

// Inputs spanning many binades, exact zeros, subnormals and values near 1.
std::vector<double> awkward_values(testing::Gen& gen, std::size_t n) {
    std::vector<double> x(n);
    for (auto& v : x) {
        const double pick = gen.uniform(0.0, 1.0);
        if (pick < 0.1) {
            v = 0.0;
        } else if (pick < 0.15) {
            v = DBL_MIN * gen.uniform(0.0, 1.0);
        } else if (pick < 0.25) {
            v = 1.0 - gen.uniform(0.0, 1e-6);
        } else {
            v = std::exp(gen.uniform(-700.0, 3.0));
        }
    }
    return x;
}

k::BlochMap random_map(testing::Gen& gen) {
    k::BlochMap m{};
    for (auto& a : m.linear) a = gen.uniform(-0.6, 0.6);
    for (auto& t : m.offset) t = gen.uniform(-0.3, 0.3);
    return m;
}

}  // namespace

TEST_CASE("scalar xlogx_sum matches an extended-precision reference") {
    testing::Gen gen(10);
    for (std::size_t n : {0u, 1u, 3u, 4u, 7u, 8u, 9u, 31u, 1000u}) {
        const auto x = awkward_values(gen, n);
        const long double want = reference_xlogx_sum(x);
        CHECK(std::abs(k::scalar::xlogx_sum(x) - static_cast<double>(want)) <= 1e-13 * (1.0 + std::abs(want)));
    }
}

TEST_CASE("scalar argmin returns the first minimum") {
    CHECK(k::scalar::argmin({}).index == 0);
    CHECK(std::isinf(k::scalar::argmin({}).value));
    const std::vector<double> v{3.0, 1.0, 2.0, 1.0};
    CHECK(k::scalar::argmin(v).index == 1);
    CHECK(k::scalar::argmin(v).value == 1.0);
}

TEST_CASE("scalar bloch entropy of the identity map") {
    k::BlochMap id{};
    id.linear = {1, 0, 0, 0, 1, 0, 0, 0, 1};
    const std::vector<double> nx{0.0, 0.0, 0.6}, ny{0.0, 0.0, 0.0}, nz{1.0, 0.0, 0.0};
    std::vector<double> out(3);
    k::scalar::bloch_entropy(id, nx, ny, nz, out);
    CHECK(out[0] == 0.0);
    CHECK(out[1] == doctest::Approx(std::log(2.0)));
    CHECK(out[2] == doctest::Approx(-0.8 * std::log(0.8) - 0.2 * std::log(0.2)));
}

TEST_CASE("dispatch reports a usable ISA and honours overrides") {
    CHECK(k::isa_available(k::Isa::scalar));
    CHECK(k::isa_available(k::active_isa()));
    k::force_isa(k::Isa::scalar);
    CHECK(k::active_isa() == k::Isa::scalar);
    k::force_isa(std::nullopt);
    CHECK(k::isa_name(k::Isa::scalar) == "scalar");
    if (!k::isa_available(k::Isa::avx2)) {
        CHECK_THROWS(k::force_isa(k::Isa::avx2));
    }
}

#if GPCAP_HAVE_AVX2
TEST_CASE("avx2 kernels agree with the scalar reference") {
    if (!k::isa_available(k::Isa::avx2)) {
        MESSAGE("AVX2 not available on this CPU; equivalence test skipped");
        return;
    }
    testing::Gen gen(11);

    SUBCASE("xlogx_sum") {
        for (int trial = 0; trial < 200; ++trial) {
            const auto x = awkward_values(gen, static_cast<std::size_t>(gen.integer(0, 300)));
            const double s = k::scalar::xlogx_sum(x);
            const double v = k::avx2::xlogx_sum(x);
            CHECK(std::abs(s - v) <= 1e-13 * (1.0 + std::abs(s)));
        }
    }
    SUBCASE("bloch_entropy") {
        for (int trial = 0; trial < 100; ++trial) {
            const auto map = random_map(gen);
            const std::size_t n = static_cast<std::size_t>(gen.integer(0, 257));
            std::vector<double> nx(n), ny(n), nz(n), a(n), b(n);
            for (std::size_t i = 0; i < n; ++i) {
                const Vector s = gen.state(2);
                const Complex z0 = s(0), z1 = s(1);
                const Complex off = std::conj(z0) * z1;
                nx[i] = 2.0 * off.real();
                ny[i] = 2.0 * off.imag();
                nz[i] = std::norm(z0) - std::norm(z1);
            }
            k::scalar::bloch_entropy(map, nx, ny, nz, a);
            k::avx2::bloch_entropy(map, nx, ny, nz, b);
            for (std::size_t i = 0; i < n; ++i) CHECK(std::abs(a[i] - b[i]) <= 1e-13);
        }
    }
    SUBCASE("argmin") {
        for (int trial = 0; trial < 200; ++trial) {
            const std::size_t n = static_cast<std::size_t>(gen.integer(0, 100));
            std::vector<double> x(n);
            // Small integer range forces ties.
            for (auto& v : x) v = static_cast<double>(gen.integer(0, 5));
            if (n > 0 && gen.uniform(0.0, 1.0) < 0.2) x[static_cast<std::size_t>(gen.integer(0, static_cast<int>(n) - 1))] = -INFINITY;
            const auto s = k::scalar::argmin(x);
            const auto v = k::avx2::argmin(x);
            CHECK(s.index == v.index);
            CHECK((s.value == v.value || (std::isinf(s.value) && std::isinf(v.value))));
        }
    }
    SUBCASE("saturated Bloch vectors") {
        k::BlochMap stretch{};
        stretch.linear = {1.5, 0, 0, 0, 1.5, 0, 0, 0, 1.5};
        const std::vector<double> nx(9, 0.0), ny(9, 0.0), nz(9, 1.0);
        std::vector<double> a(9), b(9);
        k::scalar::bloch_entropy(stretch, nx, ny, nz, a);
        k::avx2::bloch_entropy(stretch, nx, ny, nz, b);
        for (std::size_t i = 0; i < 9; ++i) {
            CHECK(a[i] == 0.0);
            CHECK(b[i] == doctest::Approx(0.0).epsilon(1e-15));
        }
    }
}
#endif
