#include <cmath>

#include "centropy/entropy.hpp"
#include "centropy/error.hpp"
#include "centropy/mc.hpp"
#include "centropy/orbit.hpp"
#include "support.hpp"

using namespace centropy;

TEST_CASE("Haar unitaries are unitary with Haar moments") {
  Philox4x64 rng(41);
  const int n = 20000;
  double mean_abs2 = 0.0;
  double mean_trace2 = 0.0;
  cplx mean_entry = 0.0;
  for (int i = 0; i < n; ++i) {
    const Unitary u = haar_unitary(rng);
    CHECK(is_unitary(u.matrix(), 1e-12));
    mean_abs2 += std::norm(u.matrix()(0, 0));
    mean_trace2 += std::norm(u.matrix().trace());
    mean_entry += u.matrix()(1, 2);
  }
  CHECK(mean_abs2 / n == doctest::Approx(0.25).epsilon(0.02));
  CHECK(mean_trace2 / n == doctest::Approx(1.0).epsilon(0.05));  // E|Tr U|^2 = 1 on U(4)
  CHECK(std::abs(mean_entry / static_cast<double>(n)) < 0.01);
}

TEST_CASE("Unitary validation") {
  CHECK_THROWS_AS(Unitary::from_matrix(2.0 * Mat4::identity()), Error);
  try {
    Unitary::from_matrix(Mat4::diagonal({1.0, 1.0, 1.0, 0.5}));
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotUnitary);
  }
  CHECK(max_abs_diff(bell_rotation_unitary().matrix() * bell_rotation_unitary().adjoint().matrix(),
                     Mat4::identity()) < 1e-15);
}

TEST_CASE("rotation unitary maps the computational corners to Bell vectors") {
  const Mat4 u = bell_rotation_unitary().matrix();
  const double h = std::sqrt(0.5);
  CHECK(std::abs(u(0, 0) - h) < 1e-16);
  CHECK(std::abs(u(3, 0) + h) < 1e-16);
  CHECK(std::abs(u(0, 3) - h) < 1e-16);
  CHECK(std::abs(u(3, 3) - h) < 1e-16);
}

TEST_CASE("Bell-diagonalizer reaches S - 1 with maximally mixed marginals") {
  Philox4x64 rng(42);
  for (int trial = 0; trial < 300; ++trial) {
    const DensityMatrix rho = sample_hs_state(rng);
    const Unitary u = bell_diagonalizing_unitary(rho);
    const DensityMatrix moved = apply(u, rho);
    const Mat2 half = Mat2::diagonal({0.5, 0.5});
    CHECK(max_abs_diff(moved.reduced(Subsystem::A), half) < 1e-12);
    CHECK(max_abs_diff(moved.reduced(Subsystem::B), half) < 1e-12);
    CHECK(std::abs(merging_cost(moved, Subsystem::A) - (von_neumann(rho) - 1.0)) < 1e-9);
  }
}

TEST_CASE("orbit report for the merging example") {
  const OrbitReport r = min_conditional_entropy(merging_example_state());
  CHECK(r.S_total == doctest::Approx(0.8112781244591328).epsilon(1e-13));
  CHECK(r.min_cond_entropy == doctest::Approx(-0.18872187554086706).epsilon(1e-12));
  CHECK(r.negativity_reachable);
  const DensityMatrix moved = apply(r.achieving_unitary, merging_example_state());
  CHECK(merging_cost(moved, Subsystem::A) == doctest::Approx(-0.18872187554086706).epsilon(1e-10));
}

TEST_CASE("no negating unitary inside the class") {
  CHECK_FALSE(min_conditional_entropy(maximally_mixed()).negativity_reachable);
  CHECK_FALSE(negating_unitary(maximally_mixed()).has_value());
  CHECK_FALSE(negating_unitary(werner(0.5)).has_value());
  const auto u = negating_unitary(werner(0.9));
  REQUIRE(u.has_value());
  CHECK(merging_cost(apply(*u, werner(0.9)), Subsystem::A) < 0.0);
}

TEST_CASE("random unitaries never push an S >= 1 state negative") {
  Philox4x64 rng(43);
  int members = 0;
  while (members < 40) {
    const DensityMatrix rho = sample_hs_state(rng);
    if (von_neumann(rho) < 1.0) continue;
    ++members;
    const ProbeResult p = haar_probe(rho, 50, rng);
    CHECK(p.probes == 50);
    CHECK(p.min_cond_entropy >= -1e-8);
    CHECK(p.min_cond_entropy >= von_neumann(rho) - 1.0 - 1e-9);
  }
}

TEST_CASE("ordered eigenvectors are deterministic under degeneracy") {
  const auto a = ordered_eigenvectors(maximally_mixed());
  const auto b = ordered_eigenvectors(DensityMatrix::from_matrix(0.25 * Mat4::identity()));
  CHECK(a == b);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) CHECK(std::abs(inner(a[i], a[j]) - (i == j ? 1.0 : 0.0)) < 1e-12);
  const auto w = ordered_eigenvectors(werner(0.6));
  CHECK(std::abs(std::abs(inner(w[0], bell_basis()[0])) - 1.0) < 1e-12);
}

TEST_CASE("global unitaries preserve the spectrum") {
  Philox4x64 rng(44);
  for (int trial = 0; trial < 1000; ++trial) {
    const DensityMatrix rho = sample_hs_state(rng);
    const DensityMatrix moved = apply(haar_unitary(rng), rho);
    for (std::size_t k = 0; k < 4; ++k) CHECK(std::abs(moved.spectrum()[k] - rho.spectrum()[k]) <= 1e-10);
  }
}

TEST_CASE("members never go negative across many unitaries") {
  Philox4x64 rng(45);
  int members = 0;
  while (members < 3) {
    const DensityMatrix rho = sample_hs_state(rng);
    if (von_neumann(rho) < 1.0) continue;
    ++members;
    CHECK(haar_probe(rho, 1000, rng).min_cond_entropy >= -1e-9);
  }
}

TEST_CASE("negating unitary certificates reach S - 1") {
  Philox4x64 rng(46);
  int outsiders = 0;
  while (outsiders < 100) {
    // Mix toward a pure state so S < 1 is common.
    const DensityMatrix rho = DensityMatrix::from_matrix(
        0.4 * sample_hs_state(rng).matrix() + 0.6 * pure_state(bell_basis()[1]).matrix());
    const DensityMatrix moved = apply(haar_unitary(rng), rho);
    if (von_neumann(moved) >= 1.0) continue;
    ++outsiders;
    const auto u = negating_unitary(moved);
    REQUIRE(u.has_value());
    const double cond = merging_cost(apply(*u, moved), Subsystem::A);
    CHECK(cond < 0.0);
    CHECK(std::abs(cond - (von_neumann(moved) - 1.0)) <= 1e-9);
  }
}
