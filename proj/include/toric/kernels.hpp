#pragma once

// Data-parallel inner loops of the exact elimination and facet filtering.
//
// Every kernel has a portable scalar reference in `toric::kernels::scalar`.
// On x86-64 an AVX2 variant lives in `toric::kernels::avx2`; the unqualified
// entry points pick one at runtime from CPUID (override with TORIC_ISA=scalar).

#include <cstdint>
#include <span>
#include <string_view>

namespace toric::kernels {

enum class Isa { kScalar, kAvx2 };

std::string_view isa_name(Isa isa);

/// Best instruction set the running CPU and this build both support.
Isa detected_isa();
/// Instruction set currently used by the dispatching entry points.
Isa active_isa();
/// Forces an instruction set; requests the CPU cannot honour fall back to scalar.
void set_active_isa(Isa isa);

/// Largest modulus for which the AVX2 axpy path is exact (products fit a double mantissa).
inline constexpr std::uint32_t kAvx2MaxModulus = 1u << 26;

// dst[i] ^= src[i]
void xor_words(std::span<std::uint64_t> dst, std::span<const std::uint64_t> src);

// dst[i] = (dst[i] + factor * src[i]) mod p, with all inputs already reduced mod p.
void axpy_mod(std::span<std::uint32_t> dst, std::span<const std::uint32_t> src,
              std::uint32_t factor, std::uint32_t p);

// True iff every bit set in `a` is also set in `b`.
bool is_subset(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b);

namespace scalar {
void xor_words(std::span<std::uint64_t> dst, std::span<const std::uint64_t> src);
void axpy_mod(std::span<std::uint32_t> dst, std::span<const std::uint32_t> src,
              std::uint32_t factor, std::uint32_t p);
bool is_subset(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b);
}  // namespace scalar

#if defined(__x86_64__) || defined(_M_X64)
namespace avx2 {
void xor_words(std::span<std::uint64_t> dst, std::span<const std::uint64_t> src);
void axpy_mod(std::span<std::uint32_t> dst, std::span<const std::uint32_t> src,
              std::uint32_t factor, std::uint32_t p);
bool is_subset(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b);
}  // namespace avx2
#endif

}  // namespace toric::kernels
