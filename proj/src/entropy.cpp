#include "centropy/entropy.hpp"

#include <algorithm>
#include <cmath>

namespace centropy {

double shannon_bits(std::span<const double> p) {
  double s = 0.0;
  for (double x : p) {
    if (x > kEntropyZero) s -= x * std::log2(x);
  }
  return s;
}

double von_neumann(const Spectrum& spec) { return shannon_bits(spec.values()); }

double von_neumann(const DensityMatrix& rho) { return von_neumann(rho.spectrum()); }

double von_neumann(const Mat2& rho) {
  auto ev = eigvalsh(rho);
  double sum = 0.0;
  for (double& v : ev) {
    v = std::max(v, 0.0);
    sum += v;
  }
  if (sum > 0.0) {
    for (double& v : ev) v /= sum;
  }
  return shannon_bits(ev);
}

double marginal_entropy(const DensityMatrix& rho, Subsystem kept) { return von_neumann(rho.reduced(kept)); }

EntropyReport entropy_report(const DensityMatrix& rho) {
  EntropyReport r;
  r.S_total = von_neumann(rho);
  r.S_A = marginal_entropy(rho, Subsystem::A);
  r.S_B = marginal_entropy(rho, Subsystem::B);
  r.cond_given_A = r.S_total - r.S_A;
  r.cond_given_B = r.S_total - r.S_B;
  return r;
}

double dense_coding_capacity(const DensityMatrix& rho, Subsystem marginal) {
  return std::max(1.0, 1.0 + marginal_entropy(rho, marginal) - von_neumann(rho));
}

double merging_cost(const DensityMatrix& rho, Subsystem sender) {
  return von_neumann(rho) - marginal_entropy(rho, sender);
}

MergingRegime merging_regime(double cost, double tol) {
  if (cost > tol) return MergingRegime::Positive;
  if (cost < -tol) return MergingRegime::Negative;
  return MergingRegime::Zero;
}

const char* to_string(MergingRegime r) {
  switch (r) {
    case MergingRegime::Positive: return "positive";
    case MergingRegime::Zero: return "zero";
    case MergingRegime::Negative: return "negative";
  }
  return "unknown";
}

}  // namespace centropy
