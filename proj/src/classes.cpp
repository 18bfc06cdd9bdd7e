#include "centropy/classes.hpp"

#include <cmath>
#include <numbers>

#include "centropy/entropy.hpp"
#include "centropy/error.hpp"
#include "centropy/mc.hpp"

namespace centropy {

bool is_cvenn(const DensityMatrix& rho, double tol) { return merging_cost(rho, Subsystem::A) >= -tol; }

bool is_acvenn(const Spectrum& spec, double tol) { return von_neumann(spec) >= 1.0 - tol; }

bool is_acvenn(const DensityMatrix& rho, double tol) { return is_acvenn(rho.spectrum(), tol); }

double min_partial_transpose_eigenvalue(const DensityMatrix& rho) {
  return eigvalsh(partial_transpose(rho.matrix(), Subsystem::B))[0];
}

bool is_ppt_separable(const DensityMatrix& rho) { return min_partial_transpose_eigenvalue(rho) >= -rho.psd_tol(); }

bool is_abs_separable(const Spectrum& spec, double tol) {
  return spec[0] <= spec[2] + 2.0 * std::sqrt(spec[1] * spec[3]) + tol;
}

std::array<std::array<double, 3>, 3> correlation_matrix(const DensityMatrix& rho) { return bloch_decompose(rho).t; }

double chsh_M(const DensityMatrix& rho) {
  const auto t = correlation_matrix(rho);
  // T^t T is real symmetric PSD; pad it to 4x4 with a zero row and column so
  // the Hermitian solver applies. The extra eigenvalue is 0, which is never
  // above either of the two largest.
  Mat4 g;
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      double s = 0.0;
      for (std::size_t k = 0; k < 3; ++k) s += t[k][i] * t[k][j];
      g(i, j) = s;
    }
  }
  const auto ev = eigvalsh(g);
  return ev[3] + ev[2];
}

bool is_bell_local(const DensityMatrix& rho, double tol) { return chsh_M(rho) <= 1.0 + tol; }

bool is_al_werner(double p, double tol) {
  if (!(p >= 0.0 && p <= 1.0)) throw Error(ErrorCode::OutOfRange, "Werner p must lie in [0, 1]");
  return p <= 1.0 / std::numbers::sqrt2 + tol;
}

double bd_closed_form_lhs(const BellDiagonalParams& params) {
  const double chi = params.chi();
  const double x1 = chi - 2.0 * params.c1;
  const double x2 = chi - 2.0 * params.c2;
  const double x3 = chi - 2.0 * params.c3;
  const double x4 = 2.0 - chi;
  if (!(x1 > 0.0 && x2 > 0.0 && x3 > 0.0 && x4 > 0.0)) {
    throw Error(ErrorCode::DegenerateSpectrum, "closed form needs a strictly interior Bell-diagonal point");
  }
  return std::log2(x2 * x3 * x4 * x1) + params.c1 * std::log2((x2 * x3) / (x4 * x1)) +
         params.c2 * std::log2((x3 * x1) / (x2 * x4)) + params.c3 * std::log2((x2 * x1) / (x3 * x4));
}

bool bd_acvenn_closed_form(const BellDiagonalParams& params, double tol) {
  return bd_closed_form_lhs(params) <= 4.0 + tol;
}

double werner_acvenn_threshold() {
  auto g = [](double p) {
    return 3.0 * (1.0 - p) * std::log2(1.0 - p) + (1.0 + 3.0 * p) * std::log2(1.0 + 3.0 * p) - 4.0;
  };
  // g(1/2) < 0 < g(0.99); g is increasing in between.
  double lo = 0.5;
  double hi = 0.99;
  for (int i = 0; i < 200 && hi - lo > 1e-15; ++i) {
    const double mid = 0.5 * (lo + hi);
    (g(mid) < 0.0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

ClassReport classify(const DensityMatrix& rho, double tol) {
  const EntropyReport e = entropy_report(rho);
  ClassReport r;
  r.S_total = e.S_total;
  r.cond_given_A = e.cond_given_A;
  r.cond_given_B = e.cond_given_B;
  r.M_value = chsh_M(rho);
  r.is_cvenn = e.cond_given_A >= -tol;
  r.is_acvenn = e.S_total >= 1.0 - tol;
  r.is_ppt_separable = is_ppt_separable(rho);
  r.is_abs_separable = is_abs_separable(rho.spectrum(), tol);
  r.is_bell_local = r.M_value <= 1.0 + tol;
  r.distance_from_I4 = distance_from_I4(rho);
  return r;
}

}  // namespace centropy
