#include "kernels.hpp"

namespace centropy::simd::detail {
namespace {

// The operand order in these products matches the vector kernels so both
// tables round identically.
inline void cmul_acc(double ar, double ai, double br, double bi, double& cr, double& ci) {
  const double re = ar * br - ai * bi;
  const double im = ar * bi + ai * br;
  cr += re;
  ci += im;
}

void gemm_scalar(const double* a, const double* b, double* c, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      double cr = 0.0;
      double ci = 0.0;
      for (std::size_t k = 0; k < n; ++k) {
        const double* aik = a + 2 * (i * n + k);
        const double* bkj = b + 2 * (k * n + j);
        cmul_acc(aik[0], aik[1], bkj[0], bkj[1], cr, ci);
      }
      c[2 * (i * n + j)] = cr;
      c[2 * (i * n + j) + 1] = ci;
    }
  }
}

void gemm_adj_scalar(const double* a, const double* b, double* c, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      double cr = 0.0;
      double ci = 0.0;
      for (std::size_t k = 0; k < n; ++k) {
        const double* aik = a + 2 * (i * n + k);
        const double* bjk = b + 2 * (j * n + k);
        cmul_acc(aik[0], aik[1], bjk[0], -bjk[1], cr, ci);
      }
      c[2 * (i * n + j)] = cr;
      c[2 * (i * n + j) + 1] = ci;
    }
  }
}

double dot_scalar(const double* a, const double* b, std::size_t len) {
  double s = 0.0;
  for (std::size_t i = 0; i < len; ++i) s += a[i] * b[i];
  return s;
}

void rot_rows_scalar(double* p, double* q, std::size_t n, const double* m) {
  for (std::size_t k = 0; k < n; ++k) {
    const double pr = p[2 * k], pi = p[2 * k + 1];
    const double qr = q[2 * k], qi = q[2 * k + 1];
    double npr = 0.0, npi = 0.0, nqr = 0.0, nqi = 0.0;
    cmul_acc(m[0], m[1], pr, pi, npr, npi);
    cmul_acc(m[2], m[3], qr, qi, npr, npi);
    cmul_acc(m[4], m[5], pr, pi, nqr, nqi);
    cmul_acc(m[6], m[7], qr, qi, nqr, nqi);
    p[2 * k] = npr;
    p[2 * k + 1] = npi;
    q[2 * k] = nqr;
    q[2 * k + 1] = nqi;
  }
}

}  // namespace

const Kernels kScalarKernels{Isa::Scalar, gemm_scalar, gemm_adj_scalar, dot_scalar, rot_rows_scalar};

}  // namespace centropy::simd::detail
