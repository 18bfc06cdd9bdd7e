#pragma once

#include <array>

#include "centropy/linalg.hpp"

namespace centropy {

inline constexpr double kPsdTol = 1e-9;
inline constexpr double kTraceTol = 1e-10;

/// Four eigenvalues of a two-qubit state, stored descending.
class Spectrum {
 public:
  /// The maximally mixed spectrum.
  Spectrum() = default;

  /// Sorts `values` descending. Throws NotPSD for entries outside [0, 1]
  /// (beyond `tol`) and NotUnitTrace when the sum misses 1 by more than `tol`.
  static Spectrum from_values(std::array<double, 4> values, double tol = kTraceTol);

  /// Clips negatives to zero and divides by the sum. For eigenvalue lists
  /// that were rounded before being written down.
  static Spectrum normalized(std::array<double, 4> values);

  const std::array<double, 4>& values() const { return v_; }
  double operator[](std::size_t i) const { return v_[i]; }

  /// Sum of squared eigenvalues, Tr(rho^2).
  double purity() const;

 private:
  explicit Spectrum(const std::array<double, 4>& v) : v_(v) {}
  std::array<double, 4> v_{0.25, 0.25, 0.25, 0.25};
};

/// A validated 4x4 density matrix together with its eigensystem.
class DensityMatrix {
 public:
  /// Throws NotHermitian, NotUnitTrace (|Tr - 1| > 1e-10) or NotPSD (an
  /// eigenvalue below -psd_tol). Eigenvalues in (-psd_tol, 0) are clipped and
  /// the spectrum renormalized.
  static DensityMatrix from_matrix(const Mat4& m, double psd_tol = kPsdTol);

  const Mat4& matrix() const { return mat_; }
  const Spectrum& spectrum() const { return spectrum_; }
  /// Raw eigensystem of matrix(), ascending, before clipping.
  const EigenSystem<4>& eigen() const { return eigen_; }
  double psd_tol() const { return psd_tol_; }

  /// Reduced state on `kept`.
  Mat2 reduced(Subsystem kept) const { return partial_trace(mat_, other(kept)); }

 private:
  DensityMatrix(const Mat4& m, const EigenSystem<4>& es, const Spectrum& sp, double tol)
      : mat_(m), eigen_(es), spectrum_(sp), psd_tol_(tol) {}

  Mat4 mat_;
  EigenSystem<4> eigen_;
  Spectrum spectrum_;
  double psd_tol_;
};

/// Local Bloch vectors r, s and correlation matrix T of
/// rho = 1/4 [I + r.sigma x I + I x s.sigma + sum t_ij sigma_i x sigma_j].
struct BlochForm {
  std::array<double, 3> r{};
  std::array<double, 3> s{};
  std::array<std::array<double, 3>, 3> t{};
};

BlochForm bloch_decompose(const DensityMatrix& rho);

/// Unvalidated Bloch sum.
Mat4 bloch_matrix(const BlochForm& b);

/// Throws NotPSD when the parameters leave the state space.
DensityMatrix bloch_compose(const BlochForm& b, double psd_tol = kPsdTol);

/// Correlation diagonal (c1, c2, c3) of a Bell-diagonal state.
struct BellDiagonalParams {
  double c1 = 0.0;
  double c2 = 0.0;
  double c3 = 0.0;

  double chi() const { return 1.0 + c1 + c2 + c3; }

  /// (chi - 2c1)/4, (chi - 2c2)/4, (chi - 2c3)/4, (2 - chi)/4.
  std::array<double, 4> eigenvalues() const;

  /// All four eigenvalues >= -tol.
  bool inside_tetrahedron(double tol = 0.0) const;
};

/// (1 - p) I/4 + p |Phi+><Phi+|. Throws OutOfRange unless p in [0, 1].
DensityMatrix werner(double p);

/// r = s = 0, T = diag(c1, c2, c3). Throws NotPSD outside the tetrahedron.
DensityMatrix bell_diagonal(const BellDiagonalParams& params, double psd_tol = kPsdTol);

/// diag(a1, a2, a3, a4) on |00>, |01>, |10>, |11>.
DensityMatrix comp_diagonal(const Spectrum& spec);

/// 3/4 |00><00| + 1/4 |11><11|.
DensityMatrix merging_example_state();

/// The separable family with a on |00><00|, 1-a on |10><10| and coherence b
/// between them. Throws NotPSD when sqrt(1 - 4a + 4a^2 + 4b^2) > 1.
DensityMatrix dense_coding_example_state(double a, double b);

/// Phi+, Psi+, Psi-, Phi- in that order.
const std::array<Vec4, 4>& bell_basis();

DensityMatrix maximally_mixed();

DensityMatrix pure_state(const Vec4& psi);

}  // namespace centropy
