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

#include <cmath>

#include "gpcap/errors.hpp"
#include "gpcap/mub.hpp"

using namespace gpcap;

namespace {

double max_abs(const Matrix& m) { return m.cwiseAbs().maxCoeff(); }

}  // namespace

TEST_CASE("roots of unity and prime powers") {
    CHECK(std::abs(root_of_unity(3, 3) - Complex(1.0)) < 1e-15);
    CHECK(std::abs(root_of_unity(4, 1) - Complex(0.0, 1.0)) < 1e-15);
    CHECK(std::abs(root_of_unity(5, -1) - std::conj(root_of_unity(5, 1))) < 1e-15);

    CHECK(is_prime(2));
    CHECK(is_prime(7));
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(9));

    REQUIRE(prime_power(8).has_value());
    CHECK(prime_power(8)->base == 2);
    CHECK(prime_power(8)->exponent == 3);
    CHECK(prime_power(9)->base == 3);
    CHECK_FALSE(prime_power(6).has_value());
    CHECK_FALSE(prime_power(1).has_value());
}

TEST_CASE("Weyl operators are unitary, have order d and satisfy the commutation rule") {
    for (int d : {2, 3, 5}) {
        for (int k = 0; k < d; ++k) {
            for (int l = 0; l < d; ++l) {
                const Matrix w = weyl_operator(d, k, l).matrix;
                CHECK(max_abs(w * w.adjoint() - Matrix::Identity(d, d)) < 1e-12);
            }
        }
        // W_01 W_10 = ω W_10 W_01.
        const Matrix z = weyl_operator(d, 1, 0).matrix;
        const Matrix x = weyl_operator(d, 0, 1).matrix;
        CHECK(max_abs(x * z - root_of_unity(d, 1) * z * x) < 1e-12);
        Matrix power = Matrix::Identity(d, d);
        for (int i = 0; i < d; ++i) power = power * x;
        CHECK(max_abs(power - Matrix::Identity(d, d)) < 1e-12);
    }
    // Labels wrap modulo d.
    CHECK(weyl_operator(3, 4, -1).k == 1);
    CHECK(weyl_operator(3, 4, -1).l == 2);
}

TEST_CASE("Pauli matrices and the two-qubit triples") {
    CHECK(max_abs(pauli(1) * pauli(2) - Complex(0.0, 1.0) * pauli(3)) < 1e-15);
    CHECK_THROWS_AS(pauli(4), IndexOutOfRange);
    // Every non-identity two-qubit Pauli product appears exactly once.
    std::array<int, 16> seen{};
    for (const auto& triple : two_qubit_commuting_triples()) {
        for (const auto& pair : triple) ++seen[pair[0] * 4 + pair[1]];
    }
    CHECK(seen[0] == 0);
    for (int i = 1; i < 16; ++i) CHECK(seen[i] == 1);
}

TEST_CASE("standard MUB sets are mutually unbiased") {
    for (int d : {2, 3, 5, 7}) {
        CAPTURE(d);
        const auto m = build_mubs_prime(d);
        CHECK(m.is_complete());
        CHECK(mub_deviation(m) <= 1e-9);
        CHECK(verify_mub(m));
    }
    const auto m4 = build_mubs_dim4();
    CHECK(m4.is_complete());
    CHECK(mub_deviation(m4) <= 1e-9);
    CHECK_THROWS_AS(build_mubs_prime(4), UnsupportedDimension);
    CHECK_THROWS_AS(standard_mubs(6), UnsupportedDimension);
}

TEST_CASE("a perturbed set fails verification") {
    auto bases = std::vector<std::vector<Vector>>{};
    const auto m = build_mubs_prime(3);
    for (int a = 1; a <= m.size(); ++a) bases.push_back(m.basis(a));
    bases[1][0](0) += 1e-3;
    CHECK_FALSE(verify_mub(MubSet(3, bases)));
}

TEST_CASE("shape checks on MubSet") {
    CHECK_THROWS_AS(MubSet(1, {{Vector::Ones(1)}}), UnsupportedDimension);
    CHECK_THROWS_AS(MubSet(2, {{Vector::Ones(2)}}), DimensionMismatch);
    CHECK_THROWS_AS(MubSet(2, {{Vector::Ones(3), Vector::Ones(3)}}), DimensionMismatch);
    const auto m = build_mubs_prime(2);
    CHECK_THROWS_AS(m.basis(0), IndexOutOfRange);
    CHECK_THROWS_AS(m.basis(4), IndexOutOfRange);
    CHECK_THROWS_AS(m.vector(1, 2), IndexOutOfRange);
}

TEST_CASE("unitaries built from the bases") {
    for (int d : {2, 3, 4, 5}) {
        const auto m = standard_mubs(d);
        for (int a = 1; a <= d + 1; ++a) {
            for (int k = 1; k <= d - 1; ++k) {
                const Matrix u = unitary_u(m, a, k);
                CHECK(max_abs(u * u.adjoint() - Matrix::Identity(d, d)) < 1e-12);
                // U_α^k is the k-th power of U_α^1.
                Matrix power = Matrix::Identity(d, d);
                for (int i = 0; i < k; ++i) power = power * unitary_u(m, a, 1);
                CHECK(max_abs(u - power) < 1e-12);
                // Hilbert–Schmidt orthogonality to the identity.
                CHECK(std::abs(u.trace()) < 1e-12);
            }
        }
        CHECK_THROWS_AS(unitary_u(m, 1, 0), IndexOutOfRange);
        CHECK_THROWS_AS(unitary_u(m, 1, d), IndexOutOfRange);
    }
}

TEST_CASE("Weyl correspondence of the prime constructions") {
    for (int d : {2, 3, 5}) {
        CAPTURE(d);
        CHECK(check_weyl_correspondence(build_mubs_prime(d)));
    }
    // Qubit table: the three bases give σ1, σ2 and σ3, in the Weyl form W_01, −iW_11, W_10.
    const auto m = build_mubs_prime(2);
    CHECK(max_abs(unitary_u(m, 1, 1) - weyl_operator(2, 0, 1).matrix) < 1e-12);
    CHECK(max_abs(unitary_u(m, 2, 1) - Complex(0.0, -1.0) * weyl_operator(2, 1, 1).matrix) < 1e-12);
    CHECK(max_abs(unitary_u(m, 3, 1) - weyl_operator(2, 1, 0).matrix) < 1e-12);
    CHECK(max_abs(unitary_u(m, 2, 1) - pauli(2)) < 1e-12);

    // A set with two bases swapped still corresponds, just with a different labelling.
    std::vector<std::vector<Vector>> swapped;
    const auto m3 = build_mubs_prime(3);
    for (int a = 1; a <= 4; ++a) swapped.push_back(m3.basis(a));
    std::swap(swapped[0], swapped[3]);
    CHECK(check_weyl_correspondence(MubSet(3, swapped)));

    CHECK_FALSE(check_weyl_correspondence(build_mubs_dim4()));
}
