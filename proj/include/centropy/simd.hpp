#pragma once

// Data-parallel inner loops behind the 2x2 / 4x4 complex kernels.
//
// Matrices are row-major arrays of interleaved (re, im) doubles, i.e. the
// storage layout of std::array<std::complex<double>, n*n>. Each table provides
// the same operations; the scalar table is the reference and the vector
// tables must agree with it (gemm / gemm_adj / rot_rows bit-for-bit, dot up to
// summation order).

#include <cstddef>
#include <string_view>
#include <vector>

namespace centropy::simd {

enum class Isa { Scalar, Avx2 };

std::string_view to_string(Isa isa);

struct Kernels {
  Isa isa;

  /// c = a * b, all n x n.
  void (*gemm)(const double* a, const double* b, double* c, std::size_t n);

  /// c = a * b^dagger, all n x n.
  void (*gemm_adj)(const double* a, const double* b, double* c, std::size_t n);

  /// Sum of a[i] * b[i] over len doubles. For Hermitian b this is Re Tr(a b).
  double (*dot)(const double* a, const double* b, std::size_t len);

  /// Mixes two complex rows of length n in place:
  ///   p' = m[0] p + m[1] q,  q' = m[2] p + m[3] q
  /// with m given as four interleaved complex coefficients.
  void (*rot_rows)(double* p, double* q, std::size_t n, const double* m);
};

const Kernels& scalar_kernels();

/// nullptr when the table was not compiled in.
const Kernels* avx2_kernels();

bool cpu_supports(Isa isa);

/// Every ISA that is both compiled in and supported by this CPU.
std::vector<Isa> available_isas();

/// The table in use. Chosen on first call: CENTROPY_ISA=scalar|avx2 if set and
/// usable, otherwise the widest available table.
const Kernels& active();

/// Force a table; throws std::invalid_argument when it is unavailable.
void select(Isa isa);

const Kernels& kernels_for(Isa isa);

}  // namespace centropy::simd
