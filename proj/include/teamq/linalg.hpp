// Copyright 2026 The teamq Authors.
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

#ifndef TEAMQ_LINALG_HPP_
#define TEAMQ_LINALG_HPP_

// Fixed-size complex matrices for qubit (2x2) and two-qubit (4x4) operators,
// with a Hermitian eigensolver: closed form for 2x2, cyclic Jacobi built on
// the 2x2 solver for larger sizes.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <numeric>

namespace teamq {

using Complex = std::complex<double>;

template <std::size_t N>
class SquareMatrix {
 public:
  static constexpr std::size_t kDim = N;

  SquareMatrix() : a_{} {}

  static SquareMatrix identity() {
    SquareMatrix m;
    for (std::size_t i = 0; i < N; ++i) m(i, i) = 1.0;
    return m;
  }

  Complex& operator()(std::size_t r, std::size_t c) { return a_[r * N + c]; }
  const Complex& operator()(std::size_t r, std::size_t c) const {
    return a_[r * N + c];
  }

  const std::array<Complex, N * N>& data() const { return a_; }

  SquareMatrix& operator+=(const SquareMatrix& o) {
    for (std::size_t k = 0; k < N * N; ++k) a_[k] += o.a_[k];
    return *this;
  }
  SquareMatrix& operator-=(const SquareMatrix& o) {
    for (std::size_t k = 0; k < N * N; ++k) a_[k] -= o.a_[k];
    return *this;
  }
  SquareMatrix& operator*=(Complex s) {
    for (auto& v : a_) v *= s;
    return *this;
  }

  friend SquareMatrix operator+(SquareMatrix a, const SquareMatrix& b) {
    return a += b;
  }
  friend SquareMatrix operator-(SquareMatrix a, const SquareMatrix& b) {
    return a -= b;
  }
  friend SquareMatrix operator*(SquareMatrix a, Complex s) { return a *= s; }
  friend SquareMatrix operator*(Complex s, SquareMatrix a) { return a *= s; }

  friend SquareMatrix operator*(const SquareMatrix& a, const SquareMatrix& b) {
    SquareMatrix m;
    for (std::size_t i = 0; i < N; ++i) {
      for (std::size_t k = 0; k < N; ++k) {
        const Complex aik = a(i, k);
        if (aik == Complex{}) continue;
        for (std::size_t j = 0; j < N; ++j) m(i, j) += aik * b(k, j);
      }
    }
    return m;
  }

  SquareMatrix adjoint() const {
    SquareMatrix m;
    for (std::size_t i = 0; i < N; ++i) {
      for (std::size_t j = 0; j < N; ++j) m(i, j) = std::conj((*this)(j, i));
    }
    return m;
  }

  Complex trace() const {
    Complex t{};
    for (std::size_t i = 0; i < N; ++i) t += (*this)(i, i);
    return t;
  }

  // Largest entry modulus.
  double max_abs() const {
    double m = 0.0;
    for (const auto& v : a_) m = std::max(m, std::abs(v));
    return m;
  }

  bool is_finite() const {
    return std::all_of(a_.begin(), a_.end(), [](const Complex& v) {
      return std::isfinite(v.real()) && std::isfinite(v.imag());
    });
  }

 private:
  std::array<Complex, N * N> a_;
};

using Matrix2c = SquareMatrix<2>;
using Matrix4c = SquareMatrix<4>;

inline Matrix4c kron(const Matrix2c& a, const Matrix2c& b) {
  Matrix4c m;
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = 0; j < 2; ++j) {
      for (std::size_t k = 0; k < 2; ++k) {
        for (std::size_t l = 0; l < 2; ++l) m(2 * i + k, 2 * j + l) = a(i, j) * b(k, l);
      }
    }
  }
  return m;
}

// Traces out the second (B) factor.
inline Matrix2c partial_trace_b(const Matrix4c& m) {
  Matrix2c r;
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = 0; j < 2; ++j) r(i, j) = m(2 * i, 2 * j) + m(2 * i + 1, 2 * j + 1);
  }
  return r;
}

// Traces out the first (A) factor.
inline Matrix2c partial_trace_a(const Matrix4c& m) {
  Matrix2c r;
  for (std::size_t k = 0; k < 2; ++k) {
    for (std::size_t l = 0; l < 2; ++l) r(k, l) = m(k, l) + m(2 + k, 2 + l);
  }
  return r;
}

// Exchanges the two tensor factors: S (A (x) B) S = B (x) A.
inline Matrix4c swap_factors(const Matrix4c& m) {
  constexpr std::array<std::size_t, 4> perm = {0, 2, 1, 3};
  Matrix4c r;
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) r(i, j) = m(perm[i], perm[j]);
  }
  return r;
}

template <std::size_t N>
bool is_hermitian(const SquareMatrix<N>& m, double tol) {
  return (m - m.adjoint()).max_abs() <= tol;
}

template <std::size_t N>
struct HermitianEigen {
  std::array<double, N> values{};  // ascending
  SquareMatrix<N> vectors;         // column k pairs with values[k]
};

inline HermitianEigen<2> eigen_hermitian(const SquareMatrix<2>& h) {
  const double a = h(0, 0).real();
  const double d = h(1, 1).real();
  const Complex b = 0.5 * (h(0, 1) + std::conj(h(1, 0)));
  const double mean = 0.5 * (a + d);
  const double half_gap = 0.5 * (a - d);
  const double radius = std::hypot(half_gap, std::abs(b));

  HermitianEigen<2> result;
  result.values = {mean - radius, mean + radius};
  if (std::abs(b) == 0.0) {
    if (a <= d) {
      result.vectors = SquareMatrix<2>::identity();
    } else {
      result.vectors(0, 1) = 1.0;
      result.vectors(1, 0) = 1.0;
    }
    result.values = {std::min(a, d), std::max(a, d)};
    return result;
  }
  const double low = result.values[0];
  // Two algebraically equivalent null vectors of (H - low I); keep the one
  // with the larger norm.
  Complex v0 = b, v1 = low - a;
  Complex w0 = low - d, w1 = std::conj(b);
  if (std::norm(w0) + std::norm(w1) > std::norm(v0) + std::norm(v1)) {
    v0 = w0;
    v1 = w1;
  }
  const double norm = std::sqrt(std::norm(v0) + std::norm(v1));
  v0 /= norm;
  v1 /= norm;
  result.vectors(0, 0) = v0;
  result.vectors(1, 0) = v1;
  result.vectors(0, 1) = -std::conj(v1);
  result.vectors(1, 1) = std::conj(v0);
  return result;
}

template <std::size_t N>
HermitianEigen<N> eigen_hermitian(const SquareMatrix<N>& h) {
  SquareMatrix<N> a = h;
  SquareMatrix<N> v = SquareMatrix<N>::identity();
  const double scale = std::max(h.max_abs(), 1e-300);

  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (std::size_t p = 0; p < N; ++p) {
      for (std::size_t q = p + 1; q < N; ++q) off = std::max(off, std::abs(a(p, q)));
    }
    if (off <= 1e-16 * scale) break;

    for (std::size_t p = 0; p < N; ++p) {
      for (std::size_t q = p + 1; q < N; ++q) {
        if (std::abs(a(p, q)) <= 1e-300) continue;
        SquareMatrix<2> block;
        block(0, 0) = a(p, p);
        block(0, 1) = a(p, q);
        block(1, 0) = a(q, p);
        block(1, 1) = a(q, q);
        auto rot = eigen_hermitian(block).vectors;
        // a <- G^H a G, v <- v G, where G embeds rot on rows/cols p, q.
        for (std::size_t k = 0; k < N; ++k) {
          Complex akp = a(k, p), akq = a(k, q);
          a(k, p) = akp * rot(0, 0) + akq * rot(1, 0);
          a(k, q) = akp * rot(0, 1) + akq * rot(1, 1);
          Complex vkp = v(k, p), vkq = v(k, q);
          v(k, p) = vkp * rot(0, 0) + vkq * rot(1, 0);
          v(k, q) = vkp * rot(0, 1) + vkq * rot(1, 1);
        }
        for (std::size_t k = 0; k < N; ++k) {
          Complex apk = a(p, k), aqk = a(q, k);
          a(p, k) = std::conj(rot(0, 0)) * apk + std::conj(rot(1, 0)) * aqk;
          a(q, k) = std::conj(rot(0, 1)) * apk + std::conj(rot(1, 1)) * aqk;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
      }
    }
  }

  std::array<std::size_t, N> order;
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    return a(x, x).real() < a(y, y).real();
  });
  HermitianEigen<N> result;
  for (std::size_t k = 0; k < N; ++k) {
    result.values[k] = a(order[k], order[k]).real();
    for (std::size_t r = 0; r < N; ++r) result.vectors(r, k) = v(r, order[k]);
  }
  return result;
}

// |v><v| for column k of `vectors`.
template <std::size_t N>
SquareMatrix<N> outer_column(const SquareMatrix<N>& vectors, std::size_t k) {
  SquareMatrix<N> m;
  for (std::size_t i = 0; i < N; ++i) {
    for (std::size_t j = 0; j < N; ++j) m(i, j) = vectors(i, k) * std::conj(vectors(j, k));
  }
  return m;
}

}  // namespace teamq

#endif  // TEAMQ_LINALG_HPP_
