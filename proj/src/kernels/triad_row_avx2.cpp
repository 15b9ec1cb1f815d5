// Compiled with -mavx2. Must only be reached through dispatch.cpp after a
// runtime CPU check.

#include <immintrin.h>

#include "biquad/kernels.hpp"

namespace biquad::kernels {

void triad_row_avx2(const RowArgs& args, std::span<std::uint64_t> sum4, std::span<std::uint64_t> prod) {
  const std::size_t n = sum4.size();
  const std::uint64_t* pow4 = args.pow4.data() + args.first;

  const __m256i base_sum = _mm256_set1_epi64x(static_cast<long long>(args.base_sum));
  // _mm256_mul_epu32 multiplies the low 32 bits of each lane; base_prod and
  // x3 both fit there under the caller's bound.
  const __m256i base_prod = _mm256_set1_epi64x(static_cast<long long>(args.base_prod));
  const __m256i step = _mm256_set1_epi64x(4);
  const long long f = args.first;
  __m256i x3 = _mm256_setr_epi64x(f, f + 1, f + 2, f + 3);

  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256i p4 = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(pow4 + i));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(sum4.data() + i), _mm256_add_epi64(base_sum, p4));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(prod.data() + i), _mm256_mul_epu32(base_prod, x3));
    x3 = _mm256_add_epi64(x3, step);
  }
  for (; i < n; ++i) {
    sum4[i] = args.base_sum + pow4[i];
    prod[i] = args.base_prod * (args.first + i);
  }
}

}  // namespace biquad::kernels
