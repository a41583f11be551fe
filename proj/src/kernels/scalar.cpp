#include "toric/kernels.hpp"

#include <cstddef>

namespace toric::kernels::scalar {

void xor_words(std::span<std::uint64_t> dst, std::span<const std::uint64_t> src) {
  for (std::size_t i = 0; i < dst.size(); ++i) dst[i] ^= src[i];
}

void axpy_mod(std::span<std::uint32_t> dst, std::span<const std::uint32_t> src,
              std::uint32_t factor, std::uint32_t p) {
  const std::uint64_t f = factor;
  for (std::size_t i = 0; i < dst.size(); ++i) {
    dst[i] = static_cast<std::uint32_t>((dst[i] + f * src[i]) % p);
  }
}

bool is_subset(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if ((a[i] & ~b[i]) != 0) return false;
  }
  return true;
}

}  // namespace toric::kernels::scalar
