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

#include <cmath>
#include <random>

#include "qpulse/linalg.hpp"

namespace qpulse::testing {

inline CMatrix random_complex(Eigen::Index d, std::mt19937_64& rng, double scale = 1.0) {
  std::normal_distribution<double> n(0.0, scale);
  CMatrix m(d, d);
  for (Eigen::Index i = 0; i < d; ++i)
    for (Eigen::Index j = 0; j < d; ++j) m(i, j) = Complex(n(rng), n(rng));
  return m;
}

inline CMatrix random_hermitian(Eigen::Index d, std::mt19937_64& rng, double scale = 1.0) {
  const CMatrix m = random_complex(d, rng, scale);
  return 0.5 * (m + m.adjoint());
}

// Haar-ish unitary from the QR factor of a Gaussian matrix.
inline CMatrix random_unitary(Eigen::Index d, std::mt19937_64& rng) {
  const CMatrix m = random_complex(d, rng);
  Eigen::HouseholderQR<CMatrix> qr(m);
  return qr.householderQ() * CMatrix::Identity(d, d);
}

inline CMatrix random_density(Eigen::Index d, std::mt19937_64& rng) {
  const CMatrix m = random_complex(d, rng);
  const CMatrix rho = m * m.adjoint();
  return rho / rho.trace();
}

// Independent exp: scale to norm < 1/2, 30-term Taylor series, square back.
inline CMatrix taylor_expm(const CMatrix& a) {
  const double norm = a.norm();
  int s = 0;
  while (norm / std::ldexp(1.0, s) > 0.5) ++s;
  const CMatrix x = a / std::ldexp(1.0, s);
  CMatrix term = CMatrix::Identity(a.rows(), a.cols());
  CMatrix sum = term;
  for (int k = 1; k <= 30; ++k) {
    term = term * x / static_cast<double>(k);
    sum += term;
  }
  for (int k = 0; k < s; ++k) sum = sum * sum;
  return sum;
}

// exp(-i K) for Hermitian K via its eigendecomposition.
inline CMatrix eigen_expm_hermitian(const CMatrix& k, double t = 1.0) {
  Eigen::SelfAdjointEigenSolver<CMatrix> es(k);
  const auto& v = es.eigenvectors();
  Eigen::VectorXcd phases(v.cols());
  for (Eigen::Index i = 0; i < v.cols(); ++i) phases(i) = std::polar(1.0, -t * es.eigenvalues()(i));
  return v * phases.asDiagonal() * v.adjoint();
}

}  // namespace qpulse::testing
