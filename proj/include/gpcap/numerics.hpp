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

#ifndef GPCAP_NUMERICS_HPP
#define GPCAP_NUMERICS_HPP

#include <Eigen/Dense>
#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace gpcap {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;

/// Negative entries down to this size are treated as rounding noise and clamped to zero.
inline constexpr double kClampSlack = 1e-12;
/// Tolerance for structural checks: normalization, hermiticity, trace, spectra.
inline constexpr double kValidationTol = 1e-9;
/// Bound on ‖M − VΛV†‖ for the Hermitian eigensolver.
inline constexpr double kReconstructionTol = 1e-8;

/// A finite probability distribution. Construction validates the entries and
/// clamps tiny negatives to zero; the object is immutable afterwards.
class ProbabilityVector {
   public:
    explicit ProbabilityVector(std::vector<double> entries);

    static ProbabilityVector uniform(std::size_t n);

    std::span<const double> entries() const { return entries_; }
    std::size_t size() const { return entries_.size(); }
    double operator[](std::size_t i) const { return entries_[i]; }

   private:
    std::vector<double> entries_;
};

/// Hermitian, unit-trace, positive semidefinite matrix.
class DensityMatrix {
   public:
    explicit DensityMatrix(Matrix m);

    /// |ψ⟩⟨ψ| for the normalized input vector.
    static DensityMatrix pure(const Vector& psi);
    static DensityMatrix maximally_mixed(int d);

    const Matrix& matrix() const { return m_; }
    int dimension() const { return static_cast<int>(m_.rows()); }

   private:
    Matrix m_;
};

struct HermitianSpectrum {
    std::vector<double> values;  // non-increasing
    Matrix vectors;              // column i belongs to values[i]
};

bool is_hermitian(const Matrix& m, double tol = kValidationTol);

/// Throws InvalidState when `m` is not Hermitian within kValidationTol.
HermitianSpectrum hermitian_eigensystem(const Matrix& m);
std::vector<double> hermitian_eigenvalues(const Matrix& m);

/// −Σ p ln p in nats, 0·ln 0 = 0.
double shannon_entropy(const ProbabilityVector& p);

/// Entropy of the spectrum of ρ. Eigenvalues that come out slightly negative are
/// clamped and the spectrum renormalized.
double von_neumann_entropy(const DensityMatrix& rho);

/// Whether `a` majorizes `b`: every partial sum of the m largest entries of `a` is at
/// least the corresponding one of `b` (within kValidationTol).
bool majorizes(std::span<const double> a, std::span<const double> b);
bool majorizes(const ProbabilityVector& a, const ProbabilityVector& b);

Matrix kron(const Matrix& a, const Matrix& b);
RealMatrix kron(const RealMatrix& a, const RealMatrix& b);

}  // namespace gpcap

#endif
