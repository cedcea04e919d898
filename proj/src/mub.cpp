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

#include "gpcap/mub.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "gpcap/errors.hpp"

namespace gpcap {
namespace {

constexpr double kPhaseCutoff = 1e-8;

long long mod(long long a, long long d) { return ((a % d) + d) % d; }

Vector normalized_with_phase(const Vector& v) {
    Vector out = v / v.norm();
    for (Eigen::Index i = 0; i < out.size(); ++i) {
        if (std::abs(out(i)) > kPhaseCutoff) {
            out *= std::conj(out(i)) / std::abs(out(i));
            out(i) = Complex(out(i).real(), 0.0);
            break;
        }
    }
    return out;
}

// Rank-1 projector -> unit vector, taken from its largest column.
Vector vector_from_projector(const Matrix& p) {
    Eigen::Index best = 0;
    p.colwise().norm().maxCoeff(&best);
    return normalized_with_phase(p.col(best));
}

// Eigenbasis of a unitary G with G^d = I and spectrum {ω^l}, ordered by l.
// P_l = (1/d) Σ_j ω^{-lj} G^j.
std::vector<Vector> eigenbasis_by_root(const Matrix& g) {
    const int d = static_cast<int>(g.rows());
    std::vector<Matrix> powers;
    powers.reserve(d);
    powers.push_back(Matrix::Identity(d, d));
    for (int j = 1; j < d; ++j) powers.push_back(powers.back() * g);

    std::vector<Vector> basis;
    for (int l = 0; l < d; ++l) {
        Matrix p = Matrix::Zero(d, d);
        for (int j = 0; j < d; ++j) {
            p += root_of_unity(d, -static_cast<long long>(l) * j) * powers[j];
        }
        p /= static_cast<double>(d);
        basis.push_back(vector_from_projector(p));
    }
    return basis;
}

// Generator of Weyl family f (1-based), whose eigenbasis is MUB number f.
Matrix family_generator(int d, int f) {
    if (d == 2) {
        return pauli(f);
    }
    if (f <= d) return weyl_operator(d, 1, f - 1).matrix;
    return weyl_operator(d, 0, 1).matrix;
}

// Expected U_f^k for Weyl family f.
Matrix expected_u(int d, int f, int k) {
    if (d == 2) {
        // k = 1 only.
        switch (f) {
            case 1:
                return weyl_operator(2, 0, 1).matrix;
            case 2:
                return Complex(0.0, -1.0) * weyl_operator(2, 1, 1).matrix;
            default:
                return weyl_operator(2, 1, 0).matrix;
        }
    }
    if (f == d + 1) return weyl_operator(d, 0, k).matrix;
    const long long phase = static_cast<long long>(k) * (k - 1) / 2 * (f - 1);
    return root_of_unity(d, phase) * weyl_operator(d, k, static_cast<long long>(k) * (f - 1)).matrix;
}

bool diagonalizes(const std::vector<Vector>& basis, const Matrix& g) {
    for (const auto& v : basis) {
        const Complex diag = v.dot(g * v);
        if (std::abs(std::abs(diag) - 1.0) > kValidationTol) return false;
    }
    return true;
}

}  // namespace

Complex root_of_unity(int d, long long j) {
    const long long r = mod(j, d);
    if (r == 0) return {1.0, 0.0};
    return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(r) / d);
}

bool is_prime(int n) {
    if (n < 2) return false;
    for (int f = 2; f * f <= n; ++f) {
        if (n % f == 0) return false;
    }
    return true;
}

std::optional<PrimePower> prime_power(int n) {
    if (n < 2) return std::nullopt;
    int base = 2;
    while (n % base != 0) ++base;
    int exponent = 0;
    int rest = n;
    while (rest % base == 0) {
        rest /= base;
        ++exponent;
    }
    if (rest != 1) return std::nullopt;
    return PrimePower{base, exponent};
}

MubSet::MubSet(int dimension, std::vector<std::vector<Vector>> bases)
    : dimension_(dimension), bases_(std::move(bases)) {
    if (dimension_ < 2) throw UnsupportedDimension("MUB dimension must be at least 2");
    if (bases_.empty()) throw InputError("MUB set has no bases");
    for (const auto& b : bases_) {
        if (static_cast<int>(b.size()) != dimension_) {
            throw DimensionMismatch("basis does not have d vectors");
        }
        for (const auto& v : b) {
            if (v.size() != dimension_) throw DimensionMismatch("basis vector has wrong length");
        }
    }
}

const std::vector<Vector>& MubSet::basis(int alpha) const {
    if (alpha < 1 || alpha > size()) {
        throw IndexOutOfRange("basis index " + std::to_string(alpha) + " out of range");
    }
    return bases_[alpha - 1];
}

const Vector& MubSet::vector(int alpha, int k) const {
    const auto& b = basis(alpha);
    if (k < 0 || k >= dimension_) {
        throw IndexOutOfRange("vector index " + std::to_string(k) + " out of range");
    }
    return b[k];
}

Matrix MubSet::projector(int alpha, int k) const {
    const Vector& v = vector(alpha, k);
    return v * v.adjoint();
}

WeylOperator weyl_operator(int d, long long k, long long l) {
    if (d < 2) throw UnsupportedDimension("Weyl operators need d >= 2");
    const int kk = static_cast<int>(mod(k, d));
    const int ll = static_cast<int>(mod(l, d));
    Matrix w = Matrix::Zero(d, d);
    for (int m = 0; m < d; ++m) {
        w(m, (m + ll) % d) = root_of_unity(d, static_cast<long long>(m) * kk);
    }
    return {d, kk, ll, std::move(w)};
}

const Matrix& pauli(int index) {
    static const std::array<Matrix, 4> sigma = [] {
        std::array<Matrix, 4> s;
        const Complex i(0.0, 1.0);
        s[0] = Matrix::Identity(2, 2);
        s[1] = Matrix(2, 2);
        s[1] << 0.0, 1.0, 1.0, 0.0;
        s[2] = Matrix(2, 2);
        s[2] << 0.0, -i, i, 0.0;
        s[3] = Matrix(2, 2);
        s[3] << 1.0, 0.0, 0.0, -1.0;
        return s;
    }();
    if (index < 0 || index > 3) throw IndexOutOfRange("Pauli index must be 0..3");
    return sigma[index];
}

const std::array<std::array<PauliPair, 3>, 5>& two_qubit_commuting_triples() {
    static const std::array<std::array<PauliPair, 3>, 5> triples{{
        {{{0, 1}, {1, 0}, {1, 1}}},
        {{{0, 2}, {2, 0}, {2, 2}}},
        {{{0, 3}, {3, 0}, {3, 3}}},
        {{{1, 2}, {2, 3}, {3, 1}}},
        {{{2, 1}, {1, 3}, {3, 2}}},
    }};
    return triples;
}

MubSet build_mubs_prime(int d) {
    if (!is_prime(d)) {
        throw UnsupportedDimension("build_mubs_prime: " + std::to_string(d) + " is not prime");
    }
    std::vector<std::vector<Vector>> bases;
    bases.reserve(d + 1);
    for (int f = 1; f <= d + 1; ++f) {
        bases.push_back(eigenbasis_by_root(family_generator(d, f)));
    }
    return MubSet(d, std::move(bases));
}

MubSet build_mubs_dim4() {
    std::vector<std::vector<Vector>> bases;
    const Matrix id = Matrix::Identity(4, 4);
    for (const auto& triple : two_qubit_commuting_triples()) {
        const Matrix first = kron(pauli(triple[0][0]), pauli(triple[0][1]));
        const Matrix second = kron(pauli(triple[1][0]), pauli(triple[1][1]));
        std::vector<Vector> basis;
        for (int l = 0; l < 4; ++l) {
            const double s1 = (l & 1) ? -1.0 : 1.0;
            const double s2 = (l & 2) ? -1.0 : 1.0;
            const Matrix p = 0.25 * (id + s1 * first) * (id + s2 * second);
            basis.push_back(vector_from_projector(p));
        }
        bases.push_back(std::move(basis));
    }
    return MubSet(4, std::move(bases));
}

MubSet standard_mubs(int d) {
    if (d == 4) return build_mubs_dim4();
    if (is_prime(d)) return build_mubs_prime(d);
    throw UnsupportedDimension("no MUB construction for d = " + std::to_string(d) +
                               " (supported: primes and 4)");
}

double mub_deviation(const MubSet& m) {
    const int d = m.dimension();
    double worst = 0.0;
    for (int a = 1; a <= m.size(); ++a) {
        for (int b = a; b <= m.size(); ++b) {
            for (int k = 0; k < d; ++k) {
                for (int l = 0; l < d; ++l) {
                    const Complex overlap = m.vector(a, k).dot(m.vector(b, l));
                    double dev;
                    if (a == b) {
                        dev = std::abs(overlap - Complex(k == l ? 1.0 : 0.0));
                    } else {
                        dev = std::abs(std::norm(overlap) - 1.0 / d);
                    }
                    worst = std::max(worst, dev);
                }
            }
        }
    }
    return worst;
}

bool verify_mub(const MubSet& m) { return mub_deviation(m) <= kValidationTol; }

Matrix unitary_u(const MubSet& m, int alpha, int k) {
    const int d = m.dimension();
    if (k < 1 || k > d - 1) {
        throw IndexOutOfRange("unitary_u: k must be in 1..d-1, got " + std::to_string(k));
    }
    Matrix u = Matrix::Zero(d, d);
    for (int l = 0; l < d; ++l) {
        const Vector& v = m.vector(alpha, l);
        u += root_of_unity(d, static_cast<long long>(k) * l) * (v * v.adjoint());
    }
    return u;
}

bool check_weyl_correspondence(const MubSet& m) {
    const int d = m.dimension();
    if (!is_prime(d) || !m.is_complete()) return false;

    std::vector<bool> family_used(d + 2, false);
    for (int alpha = 1; alpha <= m.size(); ++alpha) {
        int family = 0;
        for (int f = 1; f <= d + 1; ++f) {
            if (!family_used[f] && diagonalizes(m.basis(alpha), family_generator(d, f))) {
                family = f;
                break;
            }
        }
        if (family == 0) return false;
        family_used[family] = true;

        const int max_k = (d == 2) ? 1 : d - 1;
        for (int k = 1; k <= max_k; ++k) {
            const Matrix diff = unitary_u(m, alpha, k) - expected_u(d, family, k);
            if (diff.cwiseAbs().maxCoeff() > kValidationTol) return false;
        }
    }
    return true;
}

}  // namespace gpcap
