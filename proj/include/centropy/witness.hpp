#pragma once

// Explicit separating hyperplane for the set {rho : S(rho) >= 1}.
//
// For a target chi with S(chi) < 1, walk the segment from I/4 (S = 2) to chi
// and stop where S = 1; call that point sigma0. The operator
//
//   W = -log2(sigma0) - I
//
// satisfies Tr(W rho) >= S(rho) - 1 for every state rho (Klein's inequality,
// S(rho) <= -Tr[rho log2 sigma0]), so it is non-negative on the whole class,
// vanishes at sigma0, and is negative on chi because S is strictly concave
// along the segment.

#include "centropy/states.hpp"

namespace centropy {

inline constexpr int kBoundaryMaxIterations = 200;
inline constexpr double kBoundaryTol = 1e-10;

struct BoundaryPoint {
  DensityMatrix sigma0;
  double t0 = 0.0;  // sigma0 = (1 - t0) I/4 + t0 chi
};

/// Bisection on t in [0, 1]. Throws TargetInsideClass when S(chi) >= 1 - tol.
BoundaryPoint boundary_point(const DensityMatrix& chi, double tol = 1e-9);

struct WitnessOperator {
  Mat4 W;
  DensityMatrix tangent_point;
  double t0 = 0.0;
  DensityMatrix target;
};

WitnessOperator build_witness(const DensityMatrix& chi, double tol = 1e-9);

/// Tr(W rho).
double eval_witness(const WitnessOperator& w, const DensityMatrix& rho);

}  // namespace centropy
