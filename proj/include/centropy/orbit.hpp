#pragma once

// Global-unitary orbit of a two-qubit state: the spectrum (hence S) is fixed
// along the orbit while the marginals move. The conditional entropy
// S(rho) - S(rho_A) is smallest where rho_A = I/2, i.e. on the Bell-diagonal
// representative, so the orbit minimum is S(rho) - 1 in closed form.

#include <cstdint>
#include <optional>

#include "centropy/classes.hpp"
#include "centropy/rng.hpp"
#include "centropy/states.hpp"

namespace centropy {

inline constexpr double kUnitaryTol = 1e-10;

class Unitary {
 public:
  /// Throws NotUnitary when max |U^dagger U - I| > tol.
  static Unitary from_matrix(const Mat4& m, double tol = kUnitaryTol);

  static Unitary identity() { return Unitary(Mat4::identity()); }

  const Mat4& matrix() const { return mat_; }
  Unitary adjoint() const { return Unitary(mat_.adjoint()); }

 private:
  explicit Unitary(const Mat4& m) : mat_(m) {}
  Mat4 mat_;
};

/// Haar-distributed unitary: Gram-Schmidt QR of a complex Ginibre matrix.
/// Gram-Schmidt leaves R with a positive real diagonal, which is the phase
/// convention that makes Q exactly Haar.
Unitary haar_unitary(Philox4x64& rng);

/// U rho U^dagger, revalidated with rho's psd_tol.
DensityMatrix apply(const Unitary& u, const DensityMatrix& rho);

/// The illustration unitary
///   1/sqrt2 [[1,0,0,1],[0,sqrt2,0,0],[0,0,sqrt2,0],[-1,0,0,1]]
/// which maps |00> to (|00> - |11>)/sqrt2 and |11> to (|00> + |11>)/sqrt2.
Unitary bell_rotation_unitary();

/// Eigenvectors of rho ordered by descending eigenvalue. Within a degenerate
/// eigenvalue (gap <= 1e-12) vectors are phase-fixed (first entry with
/// modulus > 1e-12 made real positive) and sorted lexicographically by
/// (re, im) of their entries.
std::array<Vec4, 4> ordered_eigenvectors(const DensityMatrix& rho);

/// U with U e_k = m_k: the k-th descending eigenvector goes to the k-th Bell
/// vector, so U rho U^dagger is Bell-diagonal with both marginals I/2.
Unitary bell_diagonalizing_unitary(const DensityMatrix& rho);

struct OrbitReport {
  double S_total = 0.0;
  double min_cond_entropy = 0.0;
  Unitary achieving_unitary = Unitary::identity();
  bool negativity_reachable = false;
};

OrbitReport min_conditional_entropy(const DensityMatrix& rho, double tol = kClassTol);

/// A unitary driving S(rho) - S(rho_A) below zero, or nullopt when none exists
/// (rho has S >= 1 - tol).
std::optional<Unitary> negating_unitary(const DensityMatrix& rho, double tol = kClassTol);

struct ProbeResult {
  double min_cond_entropy = 0.0;
  std::uint64_t probes = 0;
};

/// Falsification harness: smallest S(U rho U^dagger) - S((U rho U^dagger)_A)
/// over `probes` Haar draws from `rng`.
ProbeResult haar_probe(const DensityMatrix& rho, std::uint64_t probes, Philox4x64& rng);

}  // namespace centropy
