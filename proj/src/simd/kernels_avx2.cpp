// Compiled with -mavx2 only; nothing here may run before dispatch has checked
// the CPU.

#include <immintrin.h>

#include "kernels.hpp"

namespace centropy::simd::detail {
namespace {

// Two complex doubles per register: [re0, im0, re1, im1].
inline __m256d cmul(__m256d a_re, __m256d a_im, __m256d b) {
  const __m256d b_swap = _mm256_permute_pd(b, 0b0101);
  return _mm256_addsub_pd(_mm256_mul_pd(a_re, b), _mm256_mul_pd(a_im, b_swap));
}

inline __m256d conj(__m256d v) {
  const __m256d sign = _mm256_set_pd(-0.0, 0.0, -0.0, 0.0);
  return _mm256_xor_pd(v, sign);
}

void gemm_avx2(const double* a, const double* b, double* c, std::size_t n) {
  if (n % 2 != 0) {
    kScalarKernels.gemm(a, b, c, n);
    return;
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; j += 2) {
      __m256d acc = _mm256_setzero_pd();
      for (std::size_t k = 0; k < n; ++k) {
        const double* aik = a + 2 * (i * n + k);
        const __m256d bkj = _mm256_loadu_pd(b + 2 * (k * n + j));
        acc = _mm256_add_pd(acc, cmul(_mm256_set1_pd(aik[0]), _mm256_set1_pd(aik[1]), bkj));
      }
      _mm256_storeu_pd(c + 2 * (i * n + j), acc);
    }
  }
}

void gemm_adj_avx2(const double* a, const double* b, double* c, std::size_t n) {
  if (n % 2 != 0) {
    kScalarKernels.gemm_adj(a, b, c, n);
    return;
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; j += 2) {
      __m256d acc = _mm256_setzero_pd();
      for (std::size_t k = 0; k < n; ++k) {
        const double* aik = a + 2 * (i * n + k);
        const __m128d lo = _mm_loadu_pd(b + 2 * (j * n + k));
        const __m128d hi = _mm_loadu_pd(b + 2 * ((j + 1) * n + k));
        const __m256d bjk = conj(_mm256_set_m128d(hi, lo));
        acc = _mm256_add_pd(acc, cmul(_mm256_set1_pd(aik[0]), _mm256_set1_pd(aik[1]), bjk));
      }
      _mm256_storeu_pd(c + 2 * (i * n + j), acc);
    }
  }
}

double dot_avx2(const double* a, const double* b, std::size_t len) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= len; i += 4) {
    acc = _mm256_add_pd(acc, _mm256_mul_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i)));
  }
  alignas(32) double lanes[4];
  _mm256_store_pd(lanes, acc);
  double s = (lanes[0] + lanes[1]) + (lanes[2] + lanes[3]);
  for (; i < len; ++i) s += a[i] * b[i];
  return s;
}

void rot_rows_avx2(double* p, double* q, std::size_t n, const double* m) {
  if (n % 2 != 0) {
    kScalarKernels.rot_rows(p, q, n, m);
    return;
  }
  const __m256d m0r = _mm256_set1_pd(m[0]), m0i = _mm256_set1_pd(m[1]);
  const __m256d m1r = _mm256_set1_pd(m[2]), m1i = _mm256_set1_pd(m[3]);
  const __m256d m2r = _mm256_set1_pd(m[4]), m2i = _mm256_set1_pd(m[5]);
  const __m256d m3r = _mm256_set1_pd(m[6]), m3i = _mm256_set1_pd(m[7]);
  for (std::size_t k = 0; k < n; k += 2) {
    const __m256d pv = _mm256_loadu_pd(p + 2 * k);
    const __m256d qv = _mm256_loadu_pd(q + 2 * k);
    __m256d np = _mm256_add_pd(_mm256_setzero_pd(), cmul(m0r, m0i, pv));
    np = _mm256_add_pd(np, cmul(m1r, m1i, qv));
    __m256d nq = _mm256_add_pd(_mm256_setzero_pd(), cmul(m2r, m2i, pv));
    nq = _mm256_add_pd(nq, cmul(m3r, m3i, qv));
    _mm256_storeu_pd(p + 2 * k, np);
    _mm256_storeu_pd(q + 2 * k, nq);
  }
}

}  // namespace

const Kernels kAvx2Kernels{Isa::Avx2, gemm_avx2, gemm_adj_avx2, dot_avx2, rot_rows_avx2};

}  // namespace centropy::simd::detail
