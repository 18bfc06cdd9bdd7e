#pragma once

#include <array>
#include <cstdint>
#include <limits>

namespace centropy {

/// Philox4x64-10 counter-based generator (Salmon et al., Random123).
///
/// The key is (seed, stream); block b of the output stream is the cipher of
/// counter (b, 0, 0, 0). Distinct (seed, stream) pairs give independent
/// streams, so a sample index can serve directly as the stream id.
class Philox4x64 {
 public:
  using result_type = std::uint64_t;
  using Block = std::array<std::uint64_t, 4>;
  using Key = std::array<std::uint64_t, 2>;

  explicit Philox4x64(std::uint64_t seed, std::uint64_t stream = 0) : key_{seed, stream} {}

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

  result_type operator()();

  /// Uniform in [0, 1) with 53 random bits.
  double uniform();

  /// Standard normal via Box-Muller. Uses libm log/cos/sin, so bit-identical
  /// output is guaranteed per platform, not across libm implementations.
  double normal();

  static Block encrypt(Block counter, Key key);

 private:
  Key key_;
  std::uint64_t block_ = 0;
  Block buffer_{};
  unsigned pos_ = 4;
  double spare_normal_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace centropy
