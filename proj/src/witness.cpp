#include "centropy/witness.hpp"

#include <cmath>
#include <string>

#include "centropy/entropy.hpp"
#include "centropy/error.hpp"

namespace centropy {
namespace {

Mat4 on_segment(const DensityMatrix& chi, double t) {
  return (1.0 - t) * (0.25 * Mat4::identity()) + t * chi.matrix();
}

}  // namespace

BoundaryPoint boundary_point(const DensityMatrix& chi, double tol) {
  const double s_target = von_neumann(chi);
  if (s_target >= 1.0 - tol) {
    throw Error(ErrorCode::TargetInsideClass,
                "target has S = " + std::to_string(s_target) + " >= 1, no separating witness exists");
  }

  double lo = 0.0;  // S > 1
  double hi = 1.0;  // S < 1
  double t = 0.5;
  for (int i = 0; i < kBoundaryMaxIterations; ++i) {
    t = 0.5 * (lo + hi);
    const double gap = von_neumann(DensityMatrix::from_matrix(on_segment(chi, t))) - 1.0;
    if (std::abs(gap) <= kBoundaryTol) break;
    (gap > 0.0 ? lo : hi) = t;
  }
  return BoundaryPoint{DensityMatrix::from_matrix(on_segment(chi, t)), t};
}

WitnessOperator build_witness(const DensityMatrix& chi, double tol) {
  BoundaryPoint bp = boundary_point(chi, tol);
  // sigma0 has every eigenvalue >= (1 - t0)/4 > 0, so the log is finite.
  Mat4 w = hermitian_function(bp.sigma0.matrix(), [](double x) { return -std::log2(x); });
  w -= Mat4::identity();
  return WitnessOperator{hermitian_part(w), bp.sigma0, bp.t0, chi};
}

double eval_witness(const WitnessOperator& w, const DensityMatrix& rho) {
  return real_trace_product(rho.matrix(), w.W);
}

}  // namespace centropy
