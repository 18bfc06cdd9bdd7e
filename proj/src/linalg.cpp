#include "centropy/linalg.hpp"

#include <numeric>
#include <string>

#include "centropy/error.hpp"

namespace centropy {

template <std::size_t N>
EigenSystem<N> eigh(const Matrix<N>& m, double hermitian_tol) {
  const double asym = max_abs_diff(m, m.adjoint());
  if (!(asym <= hermitian_tol)) {
    throw Error(ErrorCode::NotHermitian,
                "max |M - M^dagger| = " + std::to_string(asym) + " exceeds " + std::to_string(hermitian_tol));
  }

  Matrix<N> a = hermitian_part(m);
  // Rows of vt are the eigenvectors, so every update is a contiguous row mix.
  Matrix<N> vt = Matrix<N>::identity();
  const auto& kern = simd::active();
  auto row = [](Matrix<N>& x, std::size_t r) { return x.raw() + 2 * N * r; };

  const double scale = frobenius_norm(a);
  const double thresh = kJacobiOffDiagonalTol * scale;

  bool converged = false;
  for (int sweep = 0; sweep <= kJacobiMaxSweeps; ++sweep) {
    double off = 0.0;
    for (std::size_t p = 0; p < N; ++p)
      for (std::size_t q = p + 1; q < N; ++q) off = std::max(off, std::abs(a(p, q)));
    if (off <= thresh) {
      converged = true;
      break;
    }
    if (sweep == kJacobiMaxSweeps) break;

    for (std::size_t p = 0; p < N; ++p) {
      for (std::size_t q = p + 1; q < N; ++q) {
        const cplx b = a(p, q);
        const double mag = std::abs(b);
        if (mag == 0.0) continue;
        const cplx phase = b / mag;
        const double theta = (a(q, q).real() - a(p, p).real()) / (2.0 * mag);
        double t = 1.0 / (std::abs(theta) + std::hypot(theta, 1.0));
        if (theta < 0.0) t = -t;
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;

        // J = [[c, s e], [-s e*, c]] on (p, q). A <- J^dagger A J is done as
        // J^dagger (J^dagger A)^dagger, which only needs row mixes.
        const cplx se = s * phase;
        const double jd[8] = {c, 0.0, -se.real(), -se.imag(), se.real(), -se.imag(), c, 0.0};
        kern.rot_rows(row(a, p), row(a, q), N, jd);
        a = a.adjoint();
        kern.rot_rows(row(a, p), row(a, q), N, jd);
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        a(p, p) = a(p, p).real();
        a(q, q) = a(q, q).real();

        // V <- V J  <=>  V^T <- J^T V^T, J^T = [[c, -s e*], [s e, c]].
        const double jt[8] = {c, 0.0, -se.real(), se.imag(), se.real(), se.imag(), c, 0.0};
        kern.rot_rows(row(vt, p), row(vt, q), N, jt);
      }
    }
  }
  if (!converged) {
    throw Error(ErrorCode::NoConvergence,
                "Jacobi eigensolver exceeded " + std::to_string(kJacobiMaxSweeps) + " sweeps");
  }

  std::array<std::size_t, N> order;
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return a(i, i).real() < a(j, j).real(); });

  EigenSystem<N> out;
  for (std::size_t k = 0; k < N; ++k) {
    out.values[k] = a(order[k], order[k]).real();
    for (std::size_t i = 0; i < N; ++i) out.vectors(i, k) = vt(order[k], i);
  }
  return out;
}

template EigenSystem<2> eigh<2>(const Matrix<2>&, double);
template EigenSystem<4> eigh<4>(const Matrix<4>&, double);

Mat4 kron(const Mat2& a, const Mat2& b) {
  Mat4 out;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      for (std::size_t k = 0; k < 2; ++k)
        for (std::size_t l = 0; l < 2; ++l) out(2 * i + k, 2 * j + l) = a(i, j) * b(k, l);
  return out;
}

Vec4 kron(const std::array<cplx, 2>& a, const std::array<cplx, 2>& b) {
  return {a[0] * b[0], a[0] * b[1], a[1] * b[0], a[1] * b[1]};
}

Mat4 outer(const Vec4& a, const Vec4& b) {
  Mat4 out;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) out(i, j) = a[i] * std::conj(b[j]);
  return out;
}

cplx inner(const Vec4& a, const Vec4& b) {
  cplx s = 0.0;
  for (std::size_t i = 0; i < 4; ++i) s += std::conj(a[i]) * b[i];
  return s;
}

Mat2 partial_trace(const Mat4& rho, Subsystem traced) {
  Mat2 out;
  for (std::size_t x = 0; x < 2; ++x) {
    for (std::size_t y = 0; y < 2; ++y) {
      cplx s = 0.0;
      for (std::size_t k = 0; k < 2; ++k) {
        s += traced == Subsystem::B ? rho(2 * x + k, 2 * y + k) : rho(2 * k + x, 2 * k + y);
      }
      out(x, y) = s;
    }
  }
  return out;
}

Mat4 partial_transpose(const Mat4& rho, Subsystem side) {
  Mat4 out;
  for (std::size_t a = 0; a < 2; ++a)
    for (std::size_t b = 0; b < 2; ++b)
      for (std::size_t a2 = 0; a2 < 2; ++a2)
        for (std::size_t b2 = 0; b2 < 2; ++b2) {
          out(2 * a + b, 2 * a2 + b2) =
              side == Subsystem::A ? rho(2 * a2 + b, 2 * a + b2) : rho(2 * a + b2, 2 * a2 + b);
        }
  return out;
}

const Mat2& pauli(int index) {
  static const std::array<Mat2, 4> kPauli{
      Mat2{{1.0, 0.0}, {0.0, 1.0}},
      Mat2{{0.0, 1.0}, {1.0, 0.0}},
      Mat2{{0.0, cplx(0.0, -1.0)}, {cplx(0.0, 1.0), 0.0}},
      Mat2{{1.0, 0.0}, {0.0, -1.0}},
  };
  if (index < 0 || index > 3) throw Error(ErrorCode::OutOfRange, "Pauli index must be 0..3");
  return kPauli[static_cast<std::size_t>(index)];
}

}  // namespace centropy
