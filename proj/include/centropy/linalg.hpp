#pragma once

// Fixed-size dense complex matrices for one and two qubits.
//
// Basis order for 4x4 operators is |00>, |01>, |10>, |11> (subsystem A is the
// high index bit), row-major.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>

#include "centropy/simd.hpp"

namespace centropy {

using cplx = std::complex<double>;

inline constexpr double kHermitianTol = 1e-9;

template <std::size_t N>
class Matrix {
  static_assert(N == 2 || N == 4, "only one- and two-qubit operators are supported");

 public:
  static constexpr std::size_t dim = N;

  Matrix() = default;

  Matrix(std::initializer_list<std::initializer_list<cplx>> rows) {
    std::size_t r = 0;
    for (const auto& row : rows) {
      std::size_t c = 0;
      for (const auto& v : row) {
        if (r < N && c < N) e_[r * N + c] = v;
        ++c;
      }
      ++r;
    }
  }

  static Matrix identity() {
    Matrix m;
    for (std::size_t i = 0; i < N; ++i) m(i, i) = 1.0;
    return m;
  }

  static Matrix diagonal(const std::array<double, N>& d) {
    Matrix m;
    for (std::size_t i = 0; i < N; ++i) m(i, i) = d[i];
    return m;
  }

  cplx& operator()(std::size_t r, std::size_t c) { return e_[r * N + c]; }
  const cplx& operator()(std::size_t r, std::size_t c) const { return e_[r * N + c]; }

  // std::complex<double> is layout-compatible with double[2].
  double* raw() { return reinterpret_cast<double*>(e_.data()); }
  const double* raw() const { return reinterpret_cast<const double*>(e_.data()); }
  static constexpr std::size_t raw_size() { return 2 * N * N; }

  std::span<const cplx, N * N> entries() const { return e_; }

  Matrix adjoint() const {
    Matrix m;
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t j = 0; j < N; ++j) m(i, j) = std::conj((*this)(j, i));
    return m;
  }

  Matrix transpose() const {
    Matrix m;
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t j = 0; j < N; ++j) m(i, j) = (*this)(j, i);
    return m;
  }

  cplx trace() const {
    cplx t = 0.0;
    for (std::size_t i = 0; i < N; ++i) t += (*this)(i, i);
    return t;
  }

  Matrix& operator+=(const Matrix& o) {
    for (std::size_t i = 0; i < N * N; ++i) e_[i] += o.e_[i];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    for (std::size_t i = 0; i < N * N; ++i) e_[i] -= o.e_[i];
    return *this;
  }
  Matrix& operator*=(cplx s) {
    for (auto& v : e_) v *= s;
    return *this;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, cplx s) { return a *= s; }
  friend Matrix operator*(cplx s, Matrix a) { return a *= s; }
  friend Matrix operator*(Matrix a, double s) { return a *= cplx(s, 0.0); }
  friend Matrix operator*(double s, Matrix a) { return a *= cplx(s, 0.0); }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    Matrix c;
    simd::active().gemm(a.raw(), b.raw(), c.raw(), N);
    return c;
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::array<cplx, N * N> e_{};
};

using Mat2 = Matrix<2>;
using Mat4 = Matrix<4>;
using Vec4 = std::array<cplx, 4>;

/// a * b^dagger.
template <std::size_t N>
Matrix<N> mul_adj(const Matrix<N>& a, const Matrix<N>& b) {
  Matrix<N> c;
  simd::active().gemm_adj(a.raw(), b.raw(), c.raw(), N);
  return c;
}

/// u * m * u^dagger.
template <std::size_t N>
Matrix<N> conjugate(const Matrix<N>& u, const Matrix<N>& m) {
  return mul_adj(u * m, u);
}

/// Re Tr(a h) for Hermitian h.
template <std::size_t N>
double real_trace_product(const Matrix<N>& a, const Matrix<N>& h) {
  return simd::active().dot(a.raw(), h.raw(), Matrix<N>::raw_size());
}

template <std::size_t N>
double max_abs_diff(const Matrix<N>& a, const Matrix<N>& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) m = std::max(m, std::abs(a(i, j) - b(i, j)));
  return m;
}

template <std::size_t N>
bool is_hermitian(const Matrix<N>& m, double tol = kHermitianTol) {
  return max_abs_diff(m, m.adjoint()) <= tol;
}

/// (m + m^dagger) / 2.
template <std::size_t N>
Matrix<N> hermitian_part(const Matrix<N>& m) {
  Matrix<N> h;
  for (std::size_t i = 0; i < N; ++i) {
    h(i, i) = m(i, i).real();
    for (std::size_t j = i + 1; j < N; ++j) {
      h(i, j) = 0.5 * (m(i, j) + std::conj(m(j, i)));
      h(j, i) = std::conj(h(i, j));
    }
  }
  return h;
}

template <std::size_t N>
double frobenius_norm(const Matrix<N>& m) {
  return std::sqrt(simd::active().dot(m.raw(), m.raw(), Matrix<N>::raw_size()));
}

template <std::size_t N>
bool is_unitary(const Matrix<N>& u, double tol) {
  return max_abs_diff(u.adjoint() * u, Matrix<N>::identity()) <= tol;
}

/// Eigenpairs of a Hermitian matrix. Eigenvalues ascending; column k of
/// `vectors` belongs to values[k].
template <std::size_t N>
struct EigenSystem {
  std::array<double, N> values{};
  Matrix<N> vectors;

  std::array<cplx, N> vector(std::size_t k) const {
    std::array<cplx, N> v;
    for (std::size_t i = 0; i < N; ++i) v[i] = vectors(i, k);
    return v;
  }
};

inline constexpr int kJacobiMaxSweeps = 50;
inline constexpr double kJacobiOffDiagonalTol = 1e-14;

/// Cyclic complex Jacobi. Throws NotHermitian when `m` is further than
/// `hermitian_tol` from its adjoint and NoConvergence when the sweep budget
/// runs out. The input is symmetrized before iterating.
template <std::size_t N>
EigenSystem<N> eigh(const Matrix<N>& m, double hermitian_tol = kHermitianTol);

template <std::size_t N>
std::array<double, N> eigvalsh(const Matrix<N>& m, double hermitian_tol = kHermitianTol) {
  return eigh(m, hermitian_tol).values;
}

/// V f(L) V^dagger for Hermitian m.
template <std::size_t N, class F>
Matrix<N> hermitian_function(const Matrix<N>& m, F&& f) {
  const EigenSystem<N> es = eigh(m);
  Matrix<N> scaled = es.vectors;
  for (std::size_t k = 0; k < N; ++k) {
    const double fk = f(es.values[k]);
    for (std::size_t i = 0; i < N; ++i) scaled(i, k) *= fk;
  }
  return mul_adj(scaled, es.vectors);
}

enum class Subsystem { A, B };

inline Subsystem other(Subsystem s) { return s == Subsystem::A ? Subsystem::B : Subsystem::A; }

Mat4 kron(const Mat2& a, const Mat2& b);
Vec4 kron(const std::array<cplx, 2>& a, const std::array<cplx, 2>& b);

/// |a><b|
Mat4 outer(const Vec4& a, const Vec4& b);

cplx inner(const Vec4& a, const Vec4& b);

/// Traces out `traced`; the result lives on the other subsystem.
Mat2 partial_trace(const Mat4& rho, Subsystem traced);

/// Transposes the indices of `side` only.
Mat4 partial_transpose(const Mat4& rho, Subsystem side);

/// Pauli matrices; index 0 is the identity, 1..3 are x, y, z.
const Mat2& pauli(int index);

}  // namespace centropy
