#pragma once

// Membership tests for the state classes that are invariant (or not) under
// global unitaries: CVENN / ACVENN (non-negative conditional entropy, now and
// under every global unitary), PPT separability, absolute separability,
// Bell-CHSH locality, and absolute locality of Werner states.
//
// Boundary states count as members; every comparison is inclusive up to tol.

#include <array>

#include "centropy/states.hpp"

namespace centropy {

inline constexpr double kClassTol = 1e-9;

struct ClassReport {
  double S_total = 0.0;
  double cond_given_A = 0.0;
  double cond_given_B = 0.0;
  double M_value = 0.0;
  bool is_cvenn = false;
  bool is_acvenn = false;
  bool is_ppt_separable = false;
  bool is_abs_separable = false;
  bool is_bell_local = false;
  double distance_from_I4 = 0.0;
};

/// S(rho) - S(rho_A) >= -tol.
bool is_cvenn(const DensityMatrix& rho, double tol = kClassTol);

/// S(rho) >= 1 - tol. Depends on the spectrum only.
bool is_acvenn(const Spectrum& spec, double tol = kClassTol);
bool is_acvenn(const DensityMatrix& rho, double tol = kClassTol);

double min_partial_transpose_eigenvalue(const DensityMatrix& rho);

/// Smallest eigenvalue of rho^{T_B} >= -rho.psd_tol().
bool is_ppt_separable(const DensityMatrix& rho);

/// a1 <= a3 + 2 sqrt(a2 a4) + tol on the descending spectrum.
bool is_abs_separable(const Spectrum& spec, double tol = kClassTol);

/// Correlation matrix T with t_ij = Tr[rho (sigma_i x sigma_j)].
std::array<std::array<double, 3>, 3> correlation_matrix(const DensityMatrix& rho);

/// Sum of the two largest eigenvalues of T^t T.
double chsh_M(const DensityMatrix& rho);

/// M(rho) <= 1 + tol.
bool is_bell_local(const DensityMatrix& rho, double tol = kClassTol);

/// Werner states are absolutely local iff p <= 1/sqrt(2). Throws OutOfRange
/// unless p in [0, 1].
bool is_al_werner(double p, double tol = kClassTol);

/// Left-hand side of the Bell-diagonal membership inequality (base-2 logs);
/// membership iff it is <= 4. Throws DegenerateSpectrum unless all four
/// eigenvalues are strictly positive.
double bd_closed_form_lhs(const BellDiagonalParams& params);

/// bd_closed_form_lhs(params) <= 4 + tol.
bool bd_acvenn_closed_form(const BellDiagonalParams& params, double tol = kClassTol);

/// Root of 3(1-p)log2(1-p) + (1+3p)log2(1+3p) = 4 on (0, 1), by bisection.
double werner_acvenn_threshold();

ClassReport classify(const DensityMatrix& rho, double tol = kClassTol);

}  // namespace centropy
