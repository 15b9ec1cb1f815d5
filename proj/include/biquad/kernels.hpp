#pragma once

// Inner loop of the triad enumeration. For a fixed prefix (x1, x2) and a run
// of consecutive third entries x3 = first, first+1, ..., the row kernel
// writes
//
//   sum4[i] = base_sum + pow4[first + i]      (x1^4 + x2^4 + x3^4)
//   prod[i] = base_prod * (first + i)         (x1 * x2 * x3)
//
// All arithmetic is exact in 64 bits as long as the caller keeps
// 3 * N^4 < 2^64 and base_prod < 2^32 (see search.hpp for the bound).
//
// The scalar variant is the reference; the AVX2 variant must agree bit for
// bit and is only called when the CPU reports AVX2 support.

#include <cstdint>
#include <span>
#include <string_view>

namespace biquad::kernels {

enum class Isa { scalar, avx2 };

std::string_view to_string(Isa isa);

struct RowArgs {
  std::uint64_t base_sum = 0;
  std::uint64_t base_prod = 0;
  std::uint32_t first = 0;              // x3 of element 0
  std::span<const std::uint64_t> pow4;  // pow4[v] = v^4, indexed by value
};

using RowKernel = void (*)(const RowArgs& args, std::span<std::uint64_t> sum4, std::span<std::uint64_t> prod);

void triad_row_scalar(const RowArgs& args, std::span<std::uint64_t> sum4, std::span<std::uint64_t> prod);

#if defined(BIQUAD_HAVE_AVX2_KERNEL)
void triad_row_avx2(const RowArgs& args, std::span<std::uint64_t> sum4, std::span<std::uint64_t> prod);
#endif

/// True when `isa` is compiled in and supported by the running CPU.
bool isa_available(Isa isa);

/// The widest available variant.
Isa best_isa();

/// Throws DomainError when `isa` is not available.
RowKernel select_row_kernel(Isa isa);

}  // namespace biquad::kernels
