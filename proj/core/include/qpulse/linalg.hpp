/* Copyright 2026 The qpulse Authors. All Rights Reserved.
Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at
    http://www.apache.org/licenses/LICENSE-2.0
Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#pragma once

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace qpulse {

using Complex = std::complex<double>;

// Dense square complex matrix, row-major. Carries Hamiltonians, propagators,
// gates, density matrices and superoperators; dimensions here never exceed 16.
using CMatrix = Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

// Real table indexed [control][interval]; used for pulse amplitudes and gradients.
using RealTable = Eigen::MatrixXd;

class DimensionError : public std::invalid_argument {
 public:
  explicit DimensionError(const std::string& what) : std::invalid_argument(what) {}
};

class NumericInputError : public std::domain_error {
 public:
  explicit NumericInputError(const std::string& what) : std::domain_error(what) {}
};

CMatrix identity(Eigen::Index dim);

bool is_square(const CMatrix& a);
bool all_finite(const CMatrix& a);
bool is_hermitian(const CMatrix& a, double tol);
bool is_unitary(const CMatrix& a, double tol);

/// Matrix exponential e^A.
///
/// 2x2 anti-Hermitian inputs take a closed-form Pauli-rotation path; all other
/// inputs use scaling and squaring with a degree-13 Pade approximant.
/// Throws DimensionError for non-square input and NumericInputError when any
/// entry is NaN or infinite.
CMatrix expm(const CMatrix& a);

/// Kronecker product: result(i*dim_b + k, j*dim_b + l) = a(i, j) * b(k, l).
CMatrix kron(const CMatrix& a, const CMatrix& b);

/// Hilbert-Schmidt inner product tr(a^dagger b).
Complex hs_inner(const CMatrix& a, const CMatrix& b);

}  // namespace qpulse
