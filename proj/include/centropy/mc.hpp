#pragma once

// Monte Carlo extremes over state classes.
//
// Sample i always draws from the stream Philox4x64(seed, i), so a run is a
// pure function of (objective, n, seed): the worker count only changes how
// indices are split, and a run with larger n extends a run with smaller n.

#include <cstdint>
#include <functional>
#include <optional>
#include <string_view>

#include "centropy/rng.hpp"
#include "centropy/states.hpp"

namespace centropy {

/// G G^dagger / Tr(G G^dagger) for a complex Ginibre G (Hilbert-Schmidt measure).
DensityMatrix sample_hs_state(Philox4x64& rng);

/// Simplex-uniform spectrum (sorted uniform spacings), resampled until it is
/// absolutely separable. `proposals`, if given, is incremented per draw.
Spectrum sample_as_spectrum(Philox4x64& rng, std::uint64_t* proposals = nullptr);

/// comp_diagonal(sample_as_spectrum) conjugated by a Haar unitary.
DensityMatrix sample_as_state(Philox4x64& rng, std::uint64_t* proposals = nullptr);

/// ||rho - I/4||_F = sqrt(Tr rho^2 - 1/4).
double distance_from_I4(const DensityMatrix& rho);
double distance_from_I4(const Spectrum& spec);

/// sqrt(sum l^2 - 1/4) on raw eigenvalues, without normalizing them.
double distance_from_I4(const std::array<double, 4>& eigenvalues);

enum class Objective {
  MaxDistanceInAcvenn,       // max ||rho - I/4|| over S >= 1
  MinDistanceOutsideAcvenn,  // min ||rho - I/4|| over S < 1
  MinEntropyInAs,            // min S over absolutely separable states
};

std::string_view to_string(Objective o);
std::optional<Objective> objective_from_string(std::string_view s);

struct SampleStats {
  Objective objective = Objective::MaxDistanceInAcvenn;
  std::uint64_t n_samples = 0;   // proposals drawn
  std::uint64_t n_accepted = 0;  // class members visited (= n requested)
  double extreme_value = 0.0;
  Spectrum extreme_state_spectrum;
  std::uint64_t extreme_index = 0;
  std::uint64_t seed = 0;
};

/// Per-sample record for plotting dumps.
struct SampleRecord {
  std::uint64_t index = 0;
  double distance = 0.0;
  double entropy = 0.0;
  bool is_acvenn = false;
  bool is_abs_separable = false;
};

/// Visits `n` members of the objective's class (each sample index rejects
/// until it lands inside) and keeps the extreme. Ties go to the lower index.
/// `on_sample`, if set, is called once per accepted sample in index order
/// after the run.
SampleStats estimate_extreme(Objective objective, std::uint64_t n, std::uint64_t seed, unsigned workers = 1,
                             const std::function<void(const SampleRecord&)>& on_sample = {});

}  // namespace centropy
