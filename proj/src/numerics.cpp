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

#include "gpcap/numerics.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <string>

#include "gpcap/errors.hpp"
#include "gpcap/kernels.hpp"

namespace gpcap {

ProbabilityVector::ProbabilityVector(std::vector<double> entries) : entries_(std::move(entries)) {
    if (entries_.empty()) {
        throw InvalidDistribution("probability vector is empty");
    }
    double sum = 0.0;
    for (double& p : entries_) {
        if (!std::isfinite(p)) {
            throw InvalidDistribution("probability entry is not finite");
        }
        if (p < -kClampSlack) {
            throw InvalidDistribution("probability entry " + std::to_string(p) + " is negative");
        }
        p = std::max(p, 0.0);
        sum += p;
    }
    if (std::abs(sum - 1.0) > kValidationTol) {
        throw InvalidDistribution("probabilities sum to " + std::to_string(sum) + ", not 1");
    }
}

ProbabilityVector ProbabilityVector::uniform(std::size_t n) {
    return ProbabilityVector(std::vector<double>(n, 1.0 / static_cast<double>(n)));
}

DensityMatrix::DensityMatrix(Matrix m) : m_(std::move(m)) {
    if (m_.rows() != m_.cols() || m_.rows() == 0) {
        throw InvalidState("density matrix must be square and non-empty");
    }
    if (!is_hermitian(m_)) {
        throw InvalidState("density matrix is not Hermitian");
    }
    if (std::abs(m_.trace() - Complex(1.0)) > kValidationTol) {
        throw InvalidState("density matrix trace is not 1");
    }
    auto spectrum = hermitian_eigenvalues(m_);
    if (spectrum.back() < -kValidationTol) {
        throw InvalidState("density matrix has a negative eigenvalue");
    }
}

DensityMatrix DensityMatrix::pure(const Vector& psi) {
    const double norm = psi.norm();
    if (norm == 0.0) throw InvalidState("zero state vector");
    Vector unit = psi / norm;
    return DensityMatrix(unit * unit.adjoint());
}

DensityMatrix DensityMatrix::maximally_mixed(int d) {
    return DensityMatrix(Matrix::Identity(d, d) / static_cast<double>(d));
}

bool is_hermitian(const Matrix& m, double tol) {
    if (m.rows() != m.cols()) return false;
    return (m - m.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

HermitianSpectrum hermitian_eigensystem(const Matrix& m) {
    if (!is_hermitian(m)) {
        throw InvalidState("matrix is not Hermitian");
    }
    // Symmetrize so the solver sees an exactly Hermitian input.
    Matrix h = 0.5 * (m + m.adjoint());
    Eigen::SelfAdjointEigenSolver<Matrix> solver(h);
    if (solver.info() != Eigen::Success) {
        throw std::runtime_error("Hermitian eigensolver did not converge");
    }
    const auto n = static_cast<int>(h.rows());
    HermitianSpectrum out;
    out.values.resize(n);
    out.vectors.resize(n, n);
    // Eigen returns ascending order.
    for (int i = 0; i < n; ++i) {
        out.values[i] = solver.eigenvalues()(n - 1 - i);
        out.vectors.col(i) = solver.eigenvectors().col(n - 1 - i);
    }
    return out;
}

std::vector<double> hermitian_eigenvalues(const Matrix& m) { return hermitian_eigensystem(m).values; }

double shannon_entropy(const ProbabilityVector& p) { return -kernels::xlogx_sum(p.entries()); }

double von_neumann_entropy(const DensityMatrix& rho) {
    auto spectrum = hermitian_eigenvalues(rho.matrix());
    double total = 0.0;
    for (double& v : spectrum) {
        v = std::max(v, 0.0);
        total += v;
    }
    for (double& v : spectrum) v /= total;
    return -kernels::xlogx_sum(spectrum);
}

bool majorizes(std::span<const double> a, std::span<const double> b) {
    if (a.size() != b.size()) {
        throw DimensionMismatch("majorizes: vectors differ in length");
    }
    std::vector<double> sa(a.begin(), a.end());
    std::vector<double> sb(b.begin(), b.end());
    std::sort(sa.begin(), sa.end(), std::greater<>());
    std::sort(sb.begin(), sb.end(), std::greater<>());
    double partial_a = 0.0;
    double partial_b = 0.0;
    for (std::size_t m = 0; m < sa.size(); ++m) {
        partial_a += sa[m];
        partial_b += sb[m];
        if (partial_a < partial_b - kValidationTol) return false;
    }
    return true;
}

bool majorizes(const ProbabilityVector& a, const ProbabilityVector& b) {
    return majorizes(a.entries(), b.entries());
}

Matrix kron(const Matrix& a, const Matrix& b) {
    Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

RealMatrix kron(const RealMatrix& a, const RealMatrix& b) {
    RealMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

}  // namespace gpcap
