#include <atomic>
#include <cstdlib>
#include <stdexcept>
#include <string>

#include "kernels.hpp"

namespace centropy::simd {

std::string_view to_string(Isa isa) {
  switch (isa) {
    case Isa::Scalar: return "scalar";
    case Isa::Avx2: return "avx2";
  }
  return "unknown";
}

const Kernels& scalar_kernels() { return detail::kScalarKernels; }

const Kernels* avx2_kernels() {
#if defined(CENTROPY_HAVE_AVX2)
  return &detail::kAvx2Kernels;
#else
  return nullptr;
#endif
}

bool cpu_supports(Isa isa) {
  switch (isa) {
    case Isa::Scalar: return true;
    case Isa::Avx2:
#if defined(CENTROPY_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
      return __builtin_cpu_supports("avx2");
#else
      return false;
#endif
  }
  return false;
}

std::vector<Isa> available_isas() {
  std::vector<Isa> out{Isa::Scalar};
  if (avx2_kernels() != nullptr && cpu_supports(Isa::Avx2)) out.push_back(Isa::Avx2);
  return out;
}

const Kernels& kernels_for(Isa isa) {
  switch (isa) {
    case Isa::Scalar: return scalar_kernels();
    case Isa::Avx2:
      if (avx2_kernels() != nullptr && cpu_supports(Isa::Avx2)) return *avx2_kernels();
      break;
  }
  throw std::invalid_argument("kernel table unavailable: " + std::string(to_string(isa)));
}

namespace {

const Kernels* choose_default() {
  if (const char* env = std::getenv("CENTROPY_ISA")) {
    const std::string want(env);
    for (Isa isa : available_isas()) {
      if (want == to_string(isa)) return &kernels_for(isa);
    }
  }
  return &kernels_for(available_isas().back());
}

std::atomic<const Kernels*> g_active{nullptr};

}  // namespace

const Kernels& active() {
  const Kernels* k = g_active.load(std::memory_order_acquire);
  if (k == nullptr) {
    const Kernels* chosen = choose_default();
    g_active.compare_exchange_strong(k, chosen, std::memory_order_acq_rel);
    k = g_active.load(std::memory_order_acquire);
  }
  return *k;
}

void select(Isa isa) { g_active.store(&kernels_for(isa), std::memory_order_release); }

}  // namespace centropy::simd
