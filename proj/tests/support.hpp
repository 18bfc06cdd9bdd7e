#pragma once

#include <doctest.h>

#include "centropy/linalg.hpp"
#include "centropy/rng.hpp"

namespace centropy::testing {

inline Mat4 random_matrix(Philox4x64& rng) {
  Mat4 m;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) m(i, j) = cplx(rng.normal(), rng.normal());
  return m;
}

inline Mat4 random_hermitian(Philox4x64& rng) {
  const Mat4 g = random_matrix(rng);
  return hermitian_part(g + g.adjoint());
}

}  // namespace centropy::testing
