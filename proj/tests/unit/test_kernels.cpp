#include <doctest.h>

#include <random>
#include <vector>

#include "biquad/errors.hpp"
#include "biquad/kernels.hpp"

using namespace biquad::kernels;

namespace {

std::vector<std::uint64_t> fourth_powers(std::uint32_t n) {
  std::vector<std::uint64_t> out(n + 1);
  for (std::uint64_t v = 0; v <= n; ++v) out[v] = v * v * v * v;
  return out;
}

}  // namespace

TEST_CASE("scalar row kernel") {
  const auto pow4 = fourth_powers(20);
  RowArgs args{1 + 16, 1 * 2, 2, pow4};
  std::vector<std::uint64_t> sum4(5), prod(5);
  triad_row_scalar(args, sum4, prod);
  CHECK(sum4 == std::vector<std::uint64_t>{33, 98, 273, 642, 1313});
  CHECK(prod == std::vector<std::uint64_t>{4, 6, 8, 10, 12});
}

TEST_CASE("kernel selection") {
  CHECK(isa_available(Isa::scalar));
  CHECK(select_row_kernel(Isa::scalar) == &triad_row_scalar);
  CHECK(isa_available(best_isa()));
  CHECK(to_string(Isa::avx2) == "avx2");
  if (!isa_available(Isa::avx2)) CHECK_THROWS_AS(select_row_kernel(Isa::avx2), biquad::DomainError);
}

#if defined(BIQUAD_HAVE_AVX2_KERNEL)
TEST_CASE("avx2 row kernel matches scalar bit for bit") {
  if (!isa_available(Isa::avx2)) {
    MESSAGE("CPU lacks AVX2; equivalence test skipped");
    return;
  }
  constexpr std::uint32_t kBound = 49'000;
  const auto pow4 = fourth_powers(kBound);
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<std::uint32_t> value(1, kBound);
  for (int i = 0; i < 2000; ++i) {
    std::uint32_t x1 = value(rng), x2 = value(rng);
    if (x1 > x2) std::swap(x1, x2);
    // Lengths 0..40 cover every tail length modulo the vector width.
    const std::uint32_t len = std::min<std::uint32_t>(static_cast<std::uint32_t>(i % 41), kBound - x2 + 1);
    const RowArgs args{pow4[x1] + pow4[x2], std::uint64_t{x1} * x2, x2, pow4};
    std::vector<std::uint64_t> s_ref(len), p_ref(len), s_vec(len), p_vec(len);
    triad_row_scalar(args, s_ref, p_ref);
    triad_row_avx2(args, s_vec, p_vec);
    CHECK(s_ref == s_vec);
    CHECK(p_ref == p_vec);
  }
  // Full row at the top of the range, where the keys are largest.
  const RowArgs top{pow4[kBound] * 2, std::uint64_t{kBound} * kBound, kBound - 1000, pow4};
  std::vector<std::uint64_t> s_ref(1001), p_ref(1001), s_vec(1001), p_vec(1001);
  triad_row_scalar(top, s_ref, p_ref);
  triad_row_avx2(top, s_vec, p_vec);
  CHECK(s_ref == s_vec);
  CHECK(p_ref == p_vec);
}
#endif
