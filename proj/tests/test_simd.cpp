#include <cstring>
#include <vector>

#include "centropy/linalg.hpp"
#include "centropy/simd.hpp"
#include "support.hpp"

using namespace centropy;
using simd::Isa;

namespace {

std::vector<double> random_doubles(Philox4x64& rng, std::size_t len) {
  std::vector<double> v(len);
  for (double& x : v) x = rng.normal();
  return v;
}

bool bit_equal(const std::vector<double>& a, const std::vector<double>& b) {
  return a.size() == b.size() && std::memcmp(a.data(), b.data(), a.size() * sizeof(double)) == 0;
}

}  // namespace

TEST_CASE("scalar table is always available and first") {
  const auto isas = simd::available_isas();
  REQUIRE(!isas.empty());
  for (Isa isa : isas) MESSAGE("available: " << simd::to_string(isa));
  CHECK(isas.front() == Isa::Scalar);
  CHECK(simd::kernels_for(Isa::Scalar).isa == Isa::Scalar);
}

TEST_CASE("scalar gemm matches a naive complex product") {
  Philox4x64 rng(1);
  for (std::size_t n : {2u, 4u}) {
    const auto a = random_doubles(rng, 2 * n * n);
    const auto b = random_doubles(rng, 2 * n * n);
    std::vector<double> c(2 * n * n);
    simd::scalar_kernels().gemm(a.data(), b.data(), c.data(), n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        cplx s = 0.0;
        for (std::size_t k = 0; k < n; ++k) {
          s += cplx(a[2 * (i * n + k)], a[2 * (i * n + k) + 1]) * cplx(b[2 * (k * n + j)], b[2 * (k * n + j) + 1]);
        }
        CHECK(c[2 * (i * n + j)] == doctest::Approx(s.real()).epsilon(1e-14));
        CHECK(c[2 * (i * n + j) + 1] == doctest::Approx(s.imag()).epsilon(1e-14));
      }
  }
}

TEST_CASE("vector tables agree with the scalar reference") {
  const auto& ref = simd::scalar_kernels();
  for (Isa isa : simd::available_isas()) {
    if (isa == Isa::Scalar) continue;
    CAPTURE(simd::to_string(isa));
    const auto& k = simd::kernels_for(isa);
    Philox4x64 rng(2, static_cast<std::uint64_t>(isa));
    for (int trial = 0; trial < 500; ++trial) {
      for (std::size_t n : {2u, 4u}) {
        const auto a = random_doubles(rng, 2 * n * n);
        const auto b = random_doubles(rng, 2 * n * n);
        std::vector<double> c_ref(2 * n * n), c_vec(2 * n * n);

        ref.gemm(a.data(), b.data(), c_ref.data(), n);
        k.gemm(a.data(), b.data(), c_vec.data(), n);
        CHECK(bit_equal(c_ref, c_vec));

        ref.gemm_adj(a.data(), b.data(), c_ref.data(), n);
        k.gemm_adj(a.data(), b.data(), c_vec.data(), n);
        CHECK(bit_equal(c_ref, c_vec));

        const double d_ref = ref.dot(a.data(), b.data(), a.size());
        const double d_vec = k.dot(a.data(), b.data(), a.size());
        CHECK(d_vec == doctest::Approx(d_ref).epsilon(1e-13).scale(1.0));

        const auto m = random_doubles(rng, 8);
        auto p_ref = random_doubles(rng, 2 * n);
        auto q_ref = random_doubles(rng, 2 * n);
        auto p_vec = p_ref;
        auto q_vec = q_ref;
        ref.rot_rows(p_ref.data(), q_ref.data(), n, m.data());
        k.rot_rows(p_vec.data(), q_vec.data(), n, m.data());
        CHECK(bit_equal(p_ref, p_vec));
        CHECK(bit_equal(q_ref, q_vec));
      }
    }
  }
}

TEST_CASE("eigh agrees across tables") {
  const auto isas = simd::available_isas();
  const Isa original = simd::active().isa;
  Philox4x64 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    const Mat4 h = testing::random_hermitian(rng);
    simd::select(Isa::Scalar);
    const auto ref = eigvalsh(h);
    for (Isa isa : isas) {
      simd::select(isa);
      const auto got = eigvalsh(h);
      for (std::size_t i = 0; i < 4; ++i) CHECK(got[i] == doctest::Approx(ref[i]).epsilon(1e-12).scale(1.0));
    }
  }
  simd::select(original);
}

TEST_CASE("selecting an unavailable table throws") {
  if (!simd::cpu_supports(Isa::Avx2) || simd::avx2_kernels() == nullptr) {
    CHECK_THROWS_AS(simd::select(Isa::Avx2), std::invalid_argument);
  } else {
    CHECK_NOTHROW(simd::select(Isa::Avx2));
    simd::select(Isa::Scalar);
    CHECK(simd::active().isa == Isa::Scalar);
  }
}
