// Copyright 2026 The qdistill developers.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Test-only reference computations, kept independent of the library code
// they check.

#pragma once

#include <cmath>
#include <random>

#include "qdistill/linalg.hpp"

namespace qdistill::testing {

/// Closed-form concurrence of an X-shaped state (nonzero entries only on the
/// diagonal and the two anti-diagonal blocks):
///   2 max{0, |m03| - sqrt(m11 m22), |m12| - sqrt(m00 m33)}.
/// Populations below the library's eigenvalue floor are cancellation residue
/// of exact zeros; the square root would amplify them to ~1e-8.
inline double x_state_concurrence(const Matrix4& m) {
  const auto population = [](const Complex& z) {
    return z.real() < tol::kEigenvalueFloor ? 0.0 : z.real();
  };
  const double inner = std::abs(m(1, 2)) -
                       std::sqrt(population(m(0, 0)) * population(m(3, 3)));
  const double outer = std::abs(m(0, 3)) -
                       std::sqrt(population(m(1, 1)) * population(m(2, 2)));
  return 2.0 * std::max({0.0, inner, outer});
}

/// Kronecker product by the raw index formula, written independently of
/// qdistill::tensor.
inline MatrixX naive_kron(const MatrixX& a, const MatrixX& b) {
  MatrixX out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < out.rows(); ++i) {
    for (Eigen::Index j = 0; j < out.cols(); ++j) {
      out(i, j) = a(i / b.rows(), j / b.cols()) * b(i % b.rows(), j % b.cols());
    }
  }
  return out;
}

/// Four-factor 16x16 product straight from the index decomposition
/// i = 8 i_a + 4 i_b + 2 i_c + i_d over 2x2 factors.
inline MatrixX direct_kron4(const Matrix2& a, const Matrix2& b,
                            const Matrix2& c, const Matrix2& d) {
  MatrixX out(16, 16);
  for (int i = 0; i < 16; ++i) {
    for (int j = 0; j < 16; ++j) {
      out(i, j) = a((i >> 3) & 1, (j >> 3) & 1) * b((i >> 2) & 1, (j >> 2) & 1) *
                  c((i >> 1) & 1, (j >> 1) & 1) * d(i & 1, j & 1);
    }
  }
  return out;
}

inline Complex random_complex(std::mt19937& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  return Complex(gauss(rng), gauss(rng));
}

inline MatrixX random_matrix(std::mt19937& rng, int dim) {
  MatrixX m(dim, dim);
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) {
      m(i, j) = random_complex(rng);
    }
  }
  return m;
}

inline MatrixX random_hermitian(std::mt19937& rng, int dim) {
  const MatrixX m = random_matrix(rng, dim);
  return (m + m.adjoint()) / 2.0;
}

/// Random full-rank density matrix via A A^dag / tr(A A^dag).
inline Matrix4 random_density(std::mt19937& rng) {
  const MatrixX a = random_matrix(rng, 4);
  MatrixX m = a * a.adjoint();
  m /= m.trace().real();
  return Matrix4(m);
}

inline Vector4 random_pure(std::mt19937& rng) {
  Vector4 v;
  for (int i = 0; i < 4; ++i) v(i) = random_complex(rng);
  v.normalize();
  return v;
}

/// Haar-ish random unitary from the QR of a Gaussian matrix.
inline Matrix2 random_unitary2(std::mt19937& rng) {
  const MatrixX g = random_matrix(rng, 2);
  Eigen::HouseholderQR<MatrixX> qr(g);
  return Matrix2(qr.householderQ());
}

/// Random valid X state: Dirichlet-ish diagonal, coherences drawn inside the
/// positivity disks |m03| <= sqrt(m00 m33), |m12| <= sqrt(m11 m22).
inline Matrix4 random_x_state(std::mt19937& rng) {
  std::uniform_real_distribution<double> uniform(0.0, 1.0);
  double p[4];
  double total = 0.0;
  for (double& v : p) {
    v = uniform(rng) + 1e-6;
    total += v;
  }
  for (double& v : p) v /= total;

  Matrix4 m = Matrix4::Zero();
  for (int i = 0; i < 4; ++i) m(i, i) = p[i];
  const double phase_outer = 2.0 * M_PI * uniform(rng);
  const double phase_inner = 2.0 * M_PI * uniform(rng);
  const Complex outer = uniform(rng) * std::sqrt(p[0] * p[3]) *
                        std::exp(Complex(0.0, phase_outer));
  const Complex inner = uniform(rng) * std::sqrt(p[1] * p[2]) *
                        std::exp(Complex(0.0, phase_inner));
  m(0, 3) = outer;
  m(3, 0) = std::conj(outer);
  m(1, 2) = inner;
  m(2, 1) = std::conj(inner);
  return m;
}

}  // namespace qdistill::testing
