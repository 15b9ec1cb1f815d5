#include "biquad/kernels.hpp"

namespace biquad::kernels {

void triad_row_scalar(const RowArgs& args, std::span<std::uint64_t> sum4, std::span<std::uint64_t> prod) {
  const std::size_t n = sum4.size();
  for (std::size_t i = 0; i < n; ++i) {
    const std::uint64_t x3 = args.first + i;
    sum4[i] = args.base_sum + args.pow4[x3];
    prod[i] = args.base_prod * x3;
  }
}

}  // namespace biquad::kernels
