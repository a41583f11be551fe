#include <atomic>
#include <cstdlib>
#include <string>

#include "toric/kernels.hpp"

namespace toric::kernels {
namespace {

Isa probe() {
#if defined(TORIC_HAVE_AVX2_KERNELS)
  __builtin_cpu_init();
  if (__builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma")) return Isa::kAvx2;
#endif
  return Isa::kScalar;
}

Isa initial_isa() {
  const Isa best = probe();
  if (const char* env = std::getenv("TORIC_ISA")) {
    if (std::string(env) == "scalar") return Isa::kScalar;
  }
  return best;
}

std::atomic<Isa>& current() {
  static std::atomic<Isa> isa{initial_isa()};
  return isa;
}

}  // namespace

std::string_view isa_name(Isa isa) {
  switch (isa) {
    case Isa::kAvx2:
      return "avx2";
    case Isa::kScalar:
      break;
  }
  return "scalar";
}

Isa detected_isa() {
  static const Isa isa = probe();
  return isa;
}

Isa active_isa() { return current().load(std::memory_order_relaxed); }

void set_active_isa(Isa isa) {
  if (isa == Isa::kAvx2 && detected_isa() != Isa::kAvx2) isa = Isa::kScalar;
  current().store(isa, std::memory_order_relaxed);
}

void xor_words(std::span<std::uint64_t> dst, std::span<const std::uint64_t> src) {
#if defined(TORIC_HAVE_AVX2_KERNELS)
  if (active_isa() == Isa::kAvx2) return avx2::xor_words(dst, src);
#endif
  scalar::xor_words(dst, src);
}

void axpy_mod(std::span<std::uint32_t> dst, std::span<const std::uint32_t> src,
              std::uint32_t factor, std::uint32_t p) {
#if defined(TORIC_HAVE_AVX2_KERNELS)
  if (active_isa() == Isa::kAvx2) return avx2::axpy_mod(dst, src, factor, p);
#endif
  scalar::axpy_mod(dst, src, factor, p);
}

bool is_subset(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b) {
#if defined(TORIC_HAVE_AVX2_KERNELS)
  if (active_isa() == Isa::kAvx2) return avx2::is_subset(a, b);
#endif
  return scalar::is_subset(a, b);
}

}  // namespace toric::kernels
