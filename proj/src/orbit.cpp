#include "centropy/orbit.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <string>

#include "centropy/entropy.hpp"
#include "centropy/error.hpp"

namespace centropy {

Unitary Unitary::from_matrix(const Mat4& m, double tol) {
  const double err = max_abs_diff(m.adjoint() * m, Mat4::identity());
  if (!(err <= tol)) {
    throw Error(ErrorCode::NotUnitary, "max |U^dagger U - I| = " + std::to_string(err));
  }
  return Unitary(m);
}

Unitary haar_unitary(Philox4x64& rng) {
  std::array<Vec4, 4> cols;
  for (auto& col : cols)
    for (auto& z : col) {
      const double re = rng.normal();
      const double im = rng.normal();
      z = cplx(re, im);
    }

  // Modified Gram-Schmidt, two passes.
  for (std::size_t j = 0; j < 4; ++j) {
    for (int pass = 0; pass < 2; ++pass) {
      for (std::size_t k = 0; k < j; ++k) {
        const cplx proj = inner(cols[k], cols[j]);
        for (std::size_t i = 0; i < 4; ++i) cols[j][i] -= proj * cols[k][i];
      }
    }
    const double norm = std::sqrt(std::real(inner(cols[j], cols[j])));
    for (auto& z : cols[j]) z /= norm;
  }

  Mat4 q;
  for (std::size_t j = 0; j < 4; ++j)
    for (std::size_t i = 0; i < 4; ++i) q(i, j) = cols[j][i];
  return Unitary::from_matrix(q);
}

DensityMatrix apply(const Unitary& u, const DensityMatrix& rho) {
  return DensityMatrix::from_matrix(hermitian_part(conjugate(u.matrix(), rho.matrix())), rho.psd_tol());
}

Unitary bell_rotation_unitary() {
  const double h = std::numbers::sqrt2 / 2.0;
  return Unitary::from_matrix(Mat4{
      {h, 0.0, 0.0, h},
      {0.0, 1.0, 0.0, 0.0},
      {0.0, 0.0, 1.0, 0.0},
      {-h, 0.0, 0.0, h},
  });
}

namespace {

constexpr double kDegenerateGap = 1e-12;

Vec4 fix_phase(Vec4 v) {
  for (const cplx& z : v) {
    if (std::abs(z) > kDegenerateGap) {
      const cplx rot = std::conj(z) / std::abs(z);
      for (auto& w : v) w *= rot;
      break;
    }
  }
  return v;
}

bool lex_less(const Vec4& a, const Vec4& b) {
  for (std::size_t i = 0; i < 4; ++i) {
    if (a[i].real() != b[i].real()) return a[i].real() < b[i].real();
    if (a[i].imag() != b[i].imag()) return a[i].imag() < b[i].imag();
  }
  return false;
}

}  // namespace

std::array<Vec4, 4> ordered_eigenvectors(const DensityMatrix& rho) {
  const EigenSystem<4>& es = rho.eigen();
  std::array<std::size_t, 4> order{3, 2, 1, 0};  // eigh is ascending
  std::array<Vec4, 4> vecs;
  std::array<double, 4> vals;
  for (std::size_t k = 0; k < 4; ++k) {
    vecs[k] = fix_phase(es.vector(order[k]));
    vals[k] = es.values[order[k]];
  }
  // Runs of near-equal eigenvalues get the lexicographic tie-break.
  std::size_t start = 0;
  while (start < 4) {
    std::size_t end = start + 1;
    while (end < 4 && vals[end - 1] - vals[end] <= kDegenerateGap) ++end;
    std::sort(vecs.begin() + static_cast<std::ptrdiff_t>(start), vecs.begin() + static_cast<std::ptrdiff_t>(end),
              lex_less);
    start = end;
  }
  return vecs;
}

Unitary bell_diagonalizing_unitary(const DensityMatrix& rho) {
  const auto eig = ordered_eigenvectors(rho);
  const auto& bell = bell_basis();
  Mat4 u;
  for (std::size_t k = 0; k < 4; ++k) u += outer(bell[k], eig[k]);
  return Unitary::from_matrix(u);
}

OrbitReport min_conditional_entropy(const DensityMatrix& rho, double tol) {
  OrbitReport r;
  r.S_total = von_neumann(rho);
  r.min_cond_entropy = r.S_total - 1.0;
  r.achieving_unitary = bell_diagonalizing_unitary(rho);
  r.negativity_reachable = !is_acvenn(rho, tol);
  return r;
}

std::optional<Unitary> negating_unitary(const DensityMatrix& rho, double tol) {
  if (is_acvenn(rho, tol)) return std::nullopt;
  return bell_diagonalizing_unitary(rho);
}

ProbeResult haar_probe(const DensityMatrix& rho, std::uint64_t probes, Philox4x64& rng) {
  ProbeResult r;
  r.min_cond_entropy = std::numeric_limits<double>::infinity();
  for (std::uint64_t i = 0; i < probes; ++i) {
    const DensityMatrix moved = apply(haar_unitary(rng), rho);
    r.min_cond_entropy = std::min(r.min_cond_entropy, merging_cost(moved, Subsystem::A));
    ++r.probes;
  }
  return r;
}

}  // namespace centropy
