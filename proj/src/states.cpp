#include "centropy/states.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <string>

#include "centropy/error.hpp"

namespace centropy {

Spectrum Spectrum::from_values(std::array<double, 4> values, double tol) {
  double sum = 0.0;
  for (double v : values) {
    if (!(v >= -tol && v <= 1.0 + tol)) {
      throw Error(ErrorCode::NotPSD, "spectrum entry " + std::to_string(v) + " outside [0, 1]");
    }
    sum += v;
  }
  if (!(std::abs(sum - 1.0) <= tol)) {
    throw Error(ErrorCode::NotUnitTrace, "spectrum sums to " + std::to_string(sum));
  }
  std::sort(values.begin(), values.end(), std::greater<>());
  return Spectrum(values);
}

Spectrum Spectrum::normalized(std::array<double, 4> values) {
  double sum = 0.0;
  for (double& v : values) {
    v = std::max(v, 0.0);
    sum += v;
  }
  if (!(sum > 0.0)) throw Error(ErrorCode::NotUnitTrace, "spectrum has no positive weight");
  for (double& v : values) v /= sum;
  std::sort(values.begin(), values.end(), std::greater<>());
  return Spectrum(values);
}

double Spectrum::purity() const {
  double s = 0.0;
  for (double v : v_) s += v * v;
  return s;
}

DensityMatrix DensityMatrix::from_matrix(const Mat4& m, double psd_tol) {
  const double asym = max_abs_diff(m, m.adjoint());
  if (!(asym <= psd_tol)) {
    throw Error(ErrorCode::NotHermitian, "max |M - M^dagger| = " + std::to_string(asym));
  }
  const double tr = m.trace().real();
  if (!(std::abs(tr - 1.0) <= kTraceTol)) {
    throw Error(ErrorCode::NotUnitTrace, "trace = " + std::to_string(tr));
  }
  const Mat4 h = hermitian_part(m);
  const EigenSystem<4> es = eigh(h);
  if (es.values[0] < -psd_tol) {
    throw Error(ErrorCode::NotPSD, "minimum eigenvalue " + std::to_string(es.values[0]));
  }
  return DensityMatrix(h, es, Spectrum::normalized(es.values), psd_tol);
}

BlochForm bloch_decompose(const DensityMatrix& rho) {
  BlochForm b;
  const Mat2& id = pauli(0);
  for (int i = 1; i <= 3; ++i) {
    b.r[i - 1] = real_trace_product(rho.matrix(), kron(pauli(i), id));
    b.s[i - 1] = real_trace_product(rho.matrix(), kron(id, pauli(i)));
    for (int j = 1; j <= 3; ++j) {
      b.t[i - 1][j - 1] = real_trace_product(rho.matrix(), kron(pauli(i), pauli(j)));
    }
  }
  return b;
}

Mat4 bloch_matrix(const BlochForm& b) {
  const Mat2& id = pauli(0);
  Mat4 m = Mat4::identity();
  for (int i = 1; i <= 3; ++i) {
    m += b.r[i - 1] * kron(pauli(i), id);
    m += b.s[i - 1] * kron(id, pauli(i));
    for (int j = 1; j <= 3; ++j) m += b.t[i - 1][j - 1] * kron(pauli(i), pauli(j));
  }
  return 0.25 * m;
}

DensityMatrix bloch_compose(const BlochForm& b, double psd_tol) {
  return DensityMatrix::from_matrix(bloch_matrix(b), psd_tol);
}

std::array<double, 4> BellDiagonalParams::eigenvalues() const {
  const double x = chi();
  return {(x - 2.0 * c1) / 4.0, (x - 2.0 * c2) / 4.0, (x - 2.0 * c3) / 4.0, (2.0 - x) / 4.0};
}

bool BellDiagonalParams::inside_tetrahedron(double tol) const {
  const auto ev = eigenvalues();
  return std::all_of(ev.begin(), ev.end(), [tol](double v) { return v >= -tol; });
}

DensityMatrix werner(double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw Error(ErrorCode::OutOfRange, "Werner p must lie in [0, 1]");
  const double corner = (1.0 + p) / 4.0;
  const double middle = (1.0 - p) / 4.0;
  Mat4 m = Mat4::diagonal({corner, middle, middle, corner});
  m(0, 3) = p / 2.0;
  m(3, 0) = p / 2.0;
  return DensityMatrix::from_matrix(m);
}

DensityMatrix bell_diagonal(const BellDiagonalParams& params, double psd_tol) {
  for (double c : {params.c1, params.c2, params.c3}) {
    if (!(c >= -1.0 && c <= 1.0)) throw Error(ErrorCode::OutOfRange, "Bell-diagonal c_i must lie in [-1, 1]");
  }
  BlochForm b;
  b.t[0][0] = params.c1;
  b.t[1][1] = params.c2;
  b.t[2][2] = params.c3;
  return bloch_compose(b, psd_tol);
}

DensityMatrix comp_diagonal(const Spectrum& spec) {
  return DensityMatrix::from_matrix(Mat4::diagonal(spec.values()));
}

DensityMatrix merging_example_state() {
  return DensityMatrix::from_matrix(Mat4::diagonal({0.75, 0.0, 0.0, 0.25}));
}

DensityMatrix dense_coding_example_state(double a, double b) {
  Mat4 m;
  m(0, 0) = a;
  m(0, 2) = b;
  m(2, 0) = b;
  m(2, 2) = 1.0 - a;
  return DensityMatrix::from_matrix(m);
}

const std::array<Vec4, 4>& bell_basis() {
  static const std::array<Vec4, 4> kBasis = [] {
    const double h = std::numbers::sqrt2 / 2.0;
    return std::array<Vec4, 4>{
        Vec4{h, 0.0, 0.0, h},   // Phi+
        Vec4{0.0, h, h, 0.0},   // Psi+
        Vec4{0.0, h, -h, 0.0},  // Psi-
        Vec4{h, 0.0, 0.0, -h},  // Phi-
    };
  }();
  return kBasis;
}

DensityMatrix maximally_mixed() { return DensityMatrix::from_matrix(0.25 * Mat4::identity()); }

DensityMatrix pure_state(const Vec4& psi) { return DensityMatrix::from_matrix(outer(psi, psi)); }

}  // namespace centropy
