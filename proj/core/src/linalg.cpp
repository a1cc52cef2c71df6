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

#include "qpulse/linalg.hpp"

#include <array>
#include <cmath>

namespace qpulse {
namespace {

void require_square(const CMatrix& a, const char* op) {
  if (!is_square(a) || a.rows() == 0) {
    throw DimensionError(std::string(op) + ": expected a non-empty square matrix, got " +
                         std::to_string(a.rows()) + "x" + std::to_string(a.cols()));
  }
}

bool is_anti_hermitian_2x2(const CMatrix& a) {
  const double scale = 1.0 + a.cwiseAbs().maxCoeff();
  return (a + a.adjoint()).cwiseAbs().maxCoeff() <= 1e-14 * scale;
}

// e^{-iK} for Hermitian 2x2 K = k0 I + r (n . sigma):
// e^{-i k0} (cos r I - i sin(r)/r (K - k0 I)).
CMatrix expm_pauli_rotation(const CMatrix& a) {
  const CMatrix k = Complex(0.0, 1.0) * a;
  const double k0 = 0.5 * (k(0, 0).real() + k(1, 1).real());
  const double kz = 0.5 * (k(0, 0).real() - k(1, 1).real());
  const Complex off = 0.5 * (k(0, 1) + std::conj(k(1, 0)));
  const double r = std::sqrt(kz * kz + std::norm(off));
  const double sinc = r < 1e-8 ? 1.0 - r * r / 6.0 : std::sin(r) / r;
  const double c = std::cos(r);
  const Complex phase = std::polar(1.0, -k0);
  const Complex mis(0.0, -sinc);
  CMatrix out(2, 2);
  out(0, 0) = phase * (c + mis * kz);
  out(1, 1) = phase * (c - mis * kz);
  out(0, 1) = phase * mis * off;
  out(1, 0) = phase * mis * std::conj(off);
  return out;
}

double one_norm(const CMatrix& a) { return a.cwiseAbs().colwise().sum().maxCoeff(); }

// Pade coefficients and 1-norm thresholds from Higham (2005).
constexpr std::array<double, 4> kPade3 = {120.0, 60.0, 12.0, 1.0};
constexpr std::array<double, 6> kPade5 = {30240.0, 15120.0, 3360.0, 420.0, 30.0, 1.0};
constexpr std::array<double, 8> kPade7 = {17297280.0, 8648640.0, 1995840.0, 277200.0,
                                          25200.0,    1512.0,    56.0,      1.0};
constexpr std::array<double, 10> kPade9 = {17643225600.0, 8821612800.0, 2075673600.0,
                                           302702400.0,   30270240.0,   2162160.0,
                                           110880.0,      3960.0,       90.0,
                                           1.0};
constexpr std::array<double, 14> kPade13 = {
    64764752532480000.0, 32382376266240000.0, 7771770303897600.0, 1187353796428800.0,
    129060195264000.0,   10559470521600.0,    670442572800.0,     33522128640.0,
    1323241920.0,        40840800.0,          960960.0,           16380.0,
    182.0,               1.0};

constexpr double kTheta3 = 1.495585217958292e-2;
constexpr double kTheta5 = 2.539398330063230e-1;
constexpr double kTheta7 = 9.504178996162932e-1;
constexpr double kTheta9 = 2.097847961257068e0;
constexpr double kTheta13 = 5.371920351148152e0;

template <std::size_t N>
CMatrix pade_low(const CMatrix& a, const std::array<double, N>& b) {
  const Eigen::Index n = a.rows();
  const CMatrix id = identity(n);
  const CMatrix a2 = a * a;
  CMatrix power = id;
  CMatrix u_even = CMatrix::Zero(n, n);
  CMatrix v = CMatrix::Zero(n, n);
  for (std::size_t k = 0; k + 1 < N; k += 2) {
    v += b[k] * power;
    u_even += b[k + 1] * power;
    power = power * a2;
  }
  const CMatrix u = a * u_even;
  return (v - u).partialPivLu().solve(v + u);
}

CMatrix pade13(const CMatrix& a) {
  const auto& b = kPade13;
  const Eigen::Index n = a.rows();
  const CMatrix id = identity(n);
  const CMatrix a2 = a * a;
  const CMatrix a4 = a2 * a2;
  const CMatrix a6 = a4 * a2;
  const CMatrix u =
      a * (a6 * (b[13] * a6 + b[11] * a4 + b[9] * a2) + b[7] * a6 + b[5] * a4 + b[3] * a2 +
           b[1] * id);
  const CMatrix v =
      a6 * (b[12] * a6 + b[10] * a4 + b[8] * a2) + b[6] * a6 + b[4] * a4 + b[2] * a2 + b[0] * id;
  return (v - u).partialPivLu().solve(v + u);
}

}  // namespace

CMatrix identity(Eigen::Index dim) { return CMatrix::Identity(dim, dim); }

bool is_square(const CMatrix& a) { return a.rows() == a.cols(); }

bool all_finite(const CMatrix& a) { return a.allFinite(); }

bool is_hermitian(const CMatrix& a, double tol) {
  return is_square(a) && (a - a.adjoint()).norm() <= tol;
}

bool is_unitary(const CMatrix& a, double tol) {
  return is_square(a) && (a.adjoint() * a - identity(a.rows())).norm() <= tol;
}

CMatrix expm(const CMatrix& a) {
  require_square(a, "expm");
  if (!all_finite(a)) {
    throw NumericInputError("expm: input contains non-finite entries");
  }
  if (a.rows() == 2 && is_anti_hermitian_2x2(a)) {
    return expm_pauli_rotation(a);
  }

  const double norm = one_norm(a);
  if (norm <= kTheta3) return pade_low(a, kPade3);
  if (norm <= kTheta5) return pade_low(a, kPade5);
  if (norm <= kTheta7) return pade_low(a, kPade7);
  if (norm <= kTheta9) return pade_low(a, kPade9);

  int squarings = 0;
  if (norm > kTheta13) {
    squarings = static_cast<int>(std::ceil(std::log2(norm / kTheta13)));
  }
  CMatrix result = pade13(a / std::ldexp(1.0, squarings));
  for (int s = 0; s < squarings; ++s) {
    result = result * result;
  }
  return result;
}

CMatrix kron(const CMatrix& a, const CMatrix& b) {
  require_square(a, "kron");
  require_square(b, "kron");
  const Eigen::Index na = a.rows();
  const Eigen::Index nb = b.rows();
  CMatrix out(na * nb, na * nb);
  for (Eigen::Index i = 0; i < na; ++i) {
    for (Eigen::Index j = 0; j < na; ++j) {
      out.block(i * nb, j * nb, nb, nb) = a(i, j) * b;
    }
  }
  return out;
}

Complex hs_inner(const CMatrix& a, const CMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionError("hs_inner: dimension mismatch " + std::to_string(a.rows()) + "x" +
                         std::to_string(a.cols()) + " vs " + std::to_string(b.rows()) + "x" +
                         std::to_string(b.cols()));
  }
  // tr(a^dagger b) = sum_ij conj(a_ij) b_ij
  return (a.conjugate().cwiseProduct(b)).sum();
}

}  // namespace qpulse
