#pragma once

#include <span>

#include "centropy/states.hpp"

namespace centropy {

/// Probabilities at or below this are exact zeros in entropy sums.
inline constexpr double kEntropyZero = 1e-15;

/// -sum p log2 p.
double shannon_bits(std::span<const double> p);

double von_neumann(const Spectrum& spec);
double von_neumann(const DensityMatrix& rho);

/// Entropy of a one-qubit density matrix (clipped and renormalized).
double von_neumann(const Mat2& rho);

/// S(rho_kept).
double marginal_entropy(const DensityMatrix& rho, Subsystem kept);

struct EntropyReport {
  double S_total = 0.0;
  double S_A = 0.0;
  double S_B = 0.0;
  double cond_given_A = 0.0;  // S_total - S_A
  double cond_given_B = 0.0;  // S_total - S_B
};

EntropyReport entropy_report(const DensityMatrix& rho);

/// max{1, 1 + S(rho_marginal) - S(rho)} bits for d = 2. Values above 1 mean a
/// quantum advantage.
double dense_coding_capacity(const DensityMatrix& rho, Subsystem marginal);

/// S(rho) - S(rho_sender): for sender A this is S(rho_AB) - S(rho_A).
double merging_cost(const DensityMatrix& rho, Subsystem sender);

enum class MergingRegime { Positive, Zero, Negative };

MergingRegime merging_regime(double cost, double tol = 1e-9);

const char* to_string(MergingRegime r);

}  // namespace centropy
