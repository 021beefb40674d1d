// Copyright 2026 The dimerent Authors
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

#pragma once

/** @file
 * Dense 2x2 / 4x4 real linear algebra used throughout the library:
 * Kronecker products of single-spin operators, a cyclic Jacobi eigensolver
 * for real symmetric 4x4 matrices, spectral matrix functions and the
 * Hilbert-Schmidt norm.
 *
 * Everything is real. The only imaginary single-spin operator, sigma^y,
 * enters the two-spin problem solely through sigma^y (x) sigma^y, which is
 * real; see sigma_yy().
 */

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <functional>
#include <sstream>
#include <stdexcept>
#include <string>

#include "dimerent/errors.hpp"

namespace dimerent {

using Matrix2 = std::array<std::array<double, 2>, 2>;
using Matrix4 = std::array<std::array<double, 4>, 4>;
using Vector4 = std::array<double, 4>;

// ---------------------------------------------------------------------------
// Plain 4x4 helpers
// ---------------------------------------------------------------------------

inline Matrix4 zero4() { return Matrix4{}; }

inline Matrix4 identity4() {
  Matrix4 m{};
  for (std::size_t i = 0; i < 4; ++i) m[i][i] = 1.0;
  return m;
}

inline Matrix4 add(const Matrix4& a, const Matrix4& b) {
  Matrix4 r{};
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) r[i][j] = a[i][j] + b[i][j];
  return r;
}

inline Matrix4 subtract(const Matrix4& a, const Matrix4& b) {
  Matrix4 r{};
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) r[i][j] = a[i][j] - b[i][j];
  return r;
}

inline Matrix4 scaled(const Matrix4& a, double s) {
  Matrix4 r{};
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) r[i][j] = s * a[i][j];
  return r;
}

inline Matrix4 matmul(const Matrix4& a, const Matrix4& b) {
  Matrix4 r{};
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t k = 0; k < 4; ++k)
      for (std::size_t j = 0; j < 4; ++j) r[i][j] += a[i][k] * b[k][j];
  return r;
}

inline Matrix4 transpose(const Matrix4& a) {
  Matrix4 r{};
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) r[i][j] = a[j][i];
  return r;
}

inline double trace(const Matrix4& a) { return a[0][0] + a[1][1] + a[2][2] + a[3][3]; }

inline double max_abs(const Matrix4& a) {
  double m = 0.0;
  for (const auto& row : a)
    for (double v : row) m = std::max(m, std::abs(v));
  return m;
}

/// Largest componentwise |a - b|.
inline double max_abs_diff(const Matrix4& a, const Matrix4& b) { return max_abs(subtract(a, b)); }

// ---------------------------------------------------------------------------
// SymMatrix4
// ---------------------------------------------------------------------------

/// Real symmetric 4x4 matrix with finite entries. Symmetry is checked on
/// construction and then stored exactly (upper triangle mirrored).
class SymMatrix4 {
 public:
  SymMatrix4() = default;

  explicit SymMatrix4(const Matrix4& m) {
    const double scale = std::max(1.0, max_abs(m));
    for (std::size_t i = 0; i < 4; ++i) {
      for (std::size_t j = 0; j < 4; ++j) {
        if (!std::isfinite(m[i][j])) {
          throw std::invalid_argument("SymMatrix4: non-finite entry at (" + std::to_string(i) +
                                      "," + std::to_string(j) + ")");
        }
        if (j > i && std::abs(m[i][j] - m[j][i]) > 1e-12 * scale) {
          throw std::invalid_argument("SymMatrix4: matrix is not symmetric at (" +
                                      std::to_string(i) + "," + std::to_string(j) + ")");
        }
      }
    }
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = i; j < 4; ++j) m_[i][j] = m_[j][i] = m[i][j];
  }

  static SymMatrix4 identity() { return SymMatrix4(identity4()); }

  static SymMatrix4 diagonal(const Vector4& d) {
    Matrix4 m{};
    for (std::size_t i = 0; i < 4; ++i) m[i][i] = d[i];
    return SymMatrix4(m);
  }

  double operator()(std::size_t i, std::size_t j) const { return m_[i][j]; }

  /// Sets (i,j) and (j,i) together.
  void set(std::size_t i, std::size_t j, double v) {
    if (!std::isfinite(v)) throw std::invalid_argument("SymMatrix4: non-finite entry");
    m_[i][j] = v;
    m_[j][i] = v;
  }

  const Matrix4& matrix() const { return m_; }
  double trace() const { return dimerent::trace(m_); }

  friend SymMatrix4 operator+(const SymMatrix4& a, const SymMatrix4& b) {
    return SymMatrix4(add(a.m_, b.m_));
  }
  friend SymMatrix4 operator-(const SymMatrix4& a, const SymMatrix4& b) {
    return SymMatrix4(subtract(a.m_, b.m_));
  }
  friend SymMatrix4 operator*(double s, const SymMatrix4& a) { return SymMatrix4(scaled(a.m_, s)); }
  friend bool operator==(const SymMatrix4&, const SymMatrix4&) = default;

 private:
  Matrix4 m_{};
};

// ---------------------------------------------------------------------------
// Single-spin operators and the Kronecker product
// ---------------------------------------------------------------------------

inline Matrix2 identity2() { return {{{1.0, 0.0}, {0.0, 1.0}}}; }
inline Matrix2 pauli_x() { return {{{0.0, 1.0}, {1.0, 0.0}}}; }
inline Matrix2 pauli_z() { return {{{1.0, 0.0}, {0.0, -1.0}}}; }

/// Real matrix A with sigma^y = i A.
inline Matrix2 pauli_y_over_i() { return {{{0.0, -1.0}, {1.0, 0.0}}}; }

/// Kronecker product, row-major blocks: result[2i+k][2j+l] = a[i][j] * b[k][l].
inline Matrix4 kron(const Matrix2& a, const Matrix2& b) {
  Matrix4 r{};
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      for (std::size_t k = 0; k < 2; ++k)
        for (std::size_t l = 0; l < 2; ++l) r[2 * i + k][2 * j + l] = a[i][j] * b[k][l];
  return r;
}

/// sigma^y (x) sigma^y = (iA) (x) (iA) = -(A (x) A).
inline Matrix4 sigma_yy() { return scaled(kron(pauli_y_over_i(), pauli_y_over_i()), -1.0); }

// ---------------------------------------------------------------------------
// Symmetric eigendecomposition
// ---------------------------------------------------------------------------

/// Eigenvalues ascending; eigenvectors[k] is the unit eigenvector of eigenvalues[k].
struct Spectrum4 {
  Vector4 eigenvalues{};
  std::array<Vector4, 4> eigenvectors{};
};

namespace detail {

inline double off_diagonal_norm(const Matrix4& a) {
  double s = 0.0;
  for (std::size_t p = 0; p < 4; ++p)
    for (std::size_t q = p + 1; q < 4; ++q) s += 2.0 * a[p][q] * a[p][q];
  return std::sqrt(s);
}

inline double frobenius(const Matrix4& a) {
  double s = 0.0;
  for (const auto& row : a)
    for (double v : row) s += v * v;
  return std::sqrt(s);
}

// Flip sign so the first component with |v_i| > 1e-12 is positive.
inline void canonical_sign(Vector4& v) {
  for (double c : v) {
    if (std::abs(c) > 1e-12) {
      if (c < 0.0)
        for (double& x : v) x = -x;
      return;
    }
  }
}

}  // namespace detail

/// Cyclic Jacobi eigensolver. Stops once the off-diagonal Frobenius mass
/// drops below 1e-14 * ||m||_F; throws ConvergenceError after max_sweeps.
inline Spectrum4 eig_sym(const SymMatrix4& m, int max_sweeps = 64) {
  Matrix4 a = m.matrix();
  Matrix4 v = identity4();
  const double threshold = 1e-14 * detail::frobenius(a);

  int sweep = 0;
  while (detail::off_diagonal_norm(a) > threshold) {
    if (sweep++ >= max_sweeps) {
      std::ostringstream msg;
      msg << "eig_sym: no convergence after " << max_sweeps << " sweeps (off-diagonal norm "
          << detail::off_diagonal_norm(a) << ")";
      throw ConvergenceError(msg.str());
    }
    for (std::size_t p = 0; p < 4; ++p) {
      for (std::size_t q = p + 1; q < 4; ++q) {
        const double apq = a[p][q];
        if (apq == 0.0) continue;
        const double theta = 0.5 * (a[q][q] - a[p][p]) / apq;
        double t = 1.0 / (std::abs(theta) + std::sqrt(1.0 + theta * theta));
        if (theta < 0.0) t = -t;
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        const double tau = s / (1.0 + c);

        a[p][p] -= t * apq;
        a[q][q] += t * apq;
        a[p][q] = a[q][p] = 0.0;
        for (std::size_t r = 0; r < 4; ++r) {
          if (r == p || r == q) continue;
          const double arp = a[r][p];
          const double arq = a[r][q];
          a[r][p] = a[p][r] = arp - s * (arq + tau * arp);
          a[r][q] = a[q][r] = arq + s * (arp - tau * arq);
        }
        for (std::size_t r = 0; r < 4; ++r) {
          const double vrp = v[r][p];
          const double vrq = v[r][q];
          v[r][p] = vrp - s * (vrq + tau * vrp);
          v[r][q] = vrq + s * (vrp - tau * vrq);
        }
      }
    }
  }

  std::array<std::pair<double, Vector4>, 4> pairs{};
  for (std::size_t k = 0; k < 4; ++k) {
    Vector4 col{v[0][k], v[1][k], v[2][k], v[3][k]};
    detail::canonical_sign(col);
    pairs[k] = {a[k][k], col};
  }
  std::sort(pairs.begin(), pairs.end());

  Spectrum4 out;
  for (std::size_t k = 0; k < 4; ++k) {
    out.eigenvalues[k] = pairs[k].first;
    out.eigenvectors[k] = pairs[k].second;
  }
  return out;
}

/// V diag(f(lambda)) V^T for the eigendecomposition of m.
inline SymMatrix4 func_sym(const SymMatrix4& m, const std::function<double(double)>& f) {
  const Spectrum4 spec = eig_sym(m);
  Vector4 fl{};
  for (std::size_t k = 0; k < 4; ++k) fl[k] = f(spec.eigenvalues[k]);
  Matrix4 r{};
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = i; j < 4; ++j) {
      double s = 0.0;
      for (std::size_t k = 0; k < 4; ++k)
        s += spec.eigenvectors[k][i] * fl[k] * spec.eigenvectors[k][j];
      r[i][j] = r[j][i] = s;
    }
  }
  return SymMatrix4(r);
}

/// Hilbert-Schmidt norm sqrt(Tr(m^T m)).
inline double hs_norm(const Matrix4& m) { return detail::frobenius(m); }
inline double hs_norm(const SymMatrix4& m) { return hs_norm(m.matrix()); }

}  // namespace dimerent
