#include <cmath>
#include <vector>

#include "centropy/entropy.hpp"
#include "centropy/mc.hpp"
#include "centropy/orbit.hpp"
#include "support.hpp"

using namespace centropy;

TEST_CASE("Shannon entropy in bits") {
  const std::vector<double> uniform{0.25, 0.25, 0.25, 0.25};
  CHECK(shannon_bits(uniform) == doctest::Approx(2.0).epsilon(1e-15));
  const std::vector<double> with_zero{0.5, 0.5, 0.0, 1e-17};
  CHECK(shannon_bits(with_zero) == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("reference entropies") {
  CHECK(von_neumann(Spectrum::from_values({0.5, 0.3, 0.2, 0.0})) ==
        doctest::Approx(1.4854752972273344).epsilon(1e-13));
  CHECK(von_neumann(werner(0.9)) == doctest::Approx(0.5031837316805838).epsilon(1e-12));
  CHECK(von_neumann(maximally_mixed()) == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(von_neumann(merging_example_state()) == doctest::Approx(0.8112781244591328).epsilon(1e-14));
}

TEST_CASE("Bell state: pure, maximally entangled") {
  const EntropyReport r = entropy_report(pure_state(bell_basis()[0]));
  CHECK(std::abs(r.S_total) < 1e-12);
  CHECK(r.S_A == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(r.cond_given_A == doctest::Approx(-1.0).epsilon(1e-12));
  CHECK(dense_coding_capacity(pure_state(bell_basis()[0]), Subsystem::A) == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("one-qubit entropy") {
  CHECK(von_neumann(Mat2::diagonal({0.5, 0.5})) == doctest::Approx(1.0));
  CHECK(von_neumann(Mat2::diagonal({1.0, 0.0})) == 0.0);
  const Mat2 plus{{cplx(0.5), cplx(0.5)}, {cplx(0.5), cplx(0.5)}};
  CHECK(std::abs(von_neumann(plus)) < 1e-12);
}

TEST_CASE("dense-coding capacity before and after the rotation") {
  const DensityMatrix before = dense_coding_example_state(0.5, 0.4);
  CHECK(von_neumann(before) == doctest::Approx(0.4689955935892811).epsilon(1e-12));
  CHECK(dense_coding_capacity(before, Subsystem::A) == 1.0);
  const DensityMatrix after = apply(bell_rotation_unitary(), before);
  CHECK(marginal_entropy(after, Subsystem::A) == doctest::Approx(0.5365281128958362).epsilon(1e-12));
  CHECK(dense_coding_capacity(after, Subsystem::A) == doctest::Approx(1.0675325193065552).epsilon(1e-12));
}

TEST_CASE("merging cost and regimes") {
  const DensityMatrix initial = merging_example_state();
  CHECK(std::abs(merging_cost(initial, Subsystem::A)) < 1e-12);
  CHECK(merging_regime(merging_cost(initial, Subsystem::A)) == MergingRegime::Zero);
  const DensityMatrix final_state = apply(bell_rotation_unitary().adjoint(), initial);
  const double cost = merging_cost(final_state, Subsystem::A);
  CHECK(cost == doctest::Approx(-0.18872187554086706).epsilon(1e-12));
  CHECK(merging_regime(cost) == MergingRegime::Negative);
  CHECK(merging_regime(0.3) == MergingRegime::Positive);
  CHECK(std::string(to_string(MergingRegime::Negative)) == "negative");
}

TEST_CASE("entropy inequalities on random states") {
  Philox4x64 rng(21);
  for (int trial = 0; trial < 300; ++trial) {
    const DensityMatrix rho = sample_hs_state(rng);
    const EntropyReport r = entropy_report(rho);
    CHECK(r.S_total >= 0.0);
    CHECK(r.S_total <= 2.0 + 1e-12);
    CHECK(r.S_total <= r.S_A + r.S_B + 1e-10);                // subadditivity
    CHECK(std::abs(r.S_A - r.S_B) <= r.S_total + 1e-10);      // Araki-Lieb
    CHECK(r.cond_given_A >= -1.0 - 1e-10);
    const DensityMatrix moved = apply(haar_unitary(rng), rho);
    CHECK(von_neumann(moved) == doctest::Approx(r.S_total).epsilon(1e-10).scale(1.0));
  }
}

TEST_CASE("concavity of the von Neumann entropy") {
  Philox4x64 rng(22);
  for (int trial = 0; trial < 200; ++trial) {
    const DensityMatrix a = sample_hs_state(rng);
    const DensityMatrix b = sample_hs_state(rng);
    for (int k = 0; k <= 10; ++k) {
      const double l = k / 10.0;
      const DensityMatrix mix = DensityMatrix::from_matrix(l * a.matrix() + (1.0 - l) * b.matrix());
      CHECK(von_neumann(mix) >= l * von_neumann(a) + (1.0 - l) * von_neumann(b) - 1e-9);
    }
  }
}

TEST_CASE("conditional entropies are bounded below by S - 1") {
  Philox4x64 rng(23);
  for (int trial = 0; trial < 300; ++trial) {
    const DensityMatrix rho = apply(haar_unitary(rng), sample_hs_state(rng));
    const EntropyReport r = entropy_report(rho);
    CHECK(r.cond_given_A >= r.S_total - 1.0 - 1e-12);
    CHECK(r.cond_given_B >= r.S_total - 1.0 - 1e-12);
  }
}

TEST_CASE("capacity exceeds 1 exactly when the conditional entropy is negative") {
  Philox4x64 rng(24);
  int advantaged = 0;
  for (int trial = 0; trial < 300; ++trial) {
    // Low-entropy states, so both outcomes occur.
    const DensityMatrix rho =
        DensityMatrix::from_matrix(0.3 * sample_hs_state(rng).matrix() +
                                   0.7 * pure_state(bell_basis()[trial % 4]).matrix());
    const DensityMatrix moved = apply(haar_unitary(rng), rho);
    for (Subsystem m : {Subsystem::A, Subsystem::B}) {
      const bool useful = dense_coding_capacity(moved, m) > 1.0;
      CHECK(useful == (merging_cost(moved, m) < 0.0));
      advantaged += useful;
    }
  }
  CHECK(advantaged > 0);
  CHECK(advantaged < 600);
  CHECK(dense_coding_capacity(maximally_mixed(), Subsystem::A) == 1.0);
  CHECK(merging_cost(pure_state(Vec4{1.0, 0.0, 0.0, 0.0}), Subsystem::A) == 0.0);
}
