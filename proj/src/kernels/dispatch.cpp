#include "biquad/errors.hpp"
#include "biquad/kernels.hpp"

#include <string>

namespace biquad::kernels {

std::string_view to_string(Isa isa) {
  switch (isa) {
    case Isa::scalar:
      return "scalar";
    case Isa::avx2:
      return "avx2";
  }
  return "unknown";
}

bool isa_available(Isa isa) {
  switch (isa) {
    case Isa::scalar:
      return true;
    case Isa::avx2:
#if defined(BIQUAD_HAVE_AVX2_KERNEL)
      return __builtin_cpu_supports("avx2") != 0;
#else
      return false;
#endif
  }
  return false;
}

Isa best_isa() { return isa_available(Isa::avx2) ? Isa::avx2 : Isa::scalar; }

RowKernel select_row_kernel(Isa isa) {
  if (!isa_available(isa)) throw DomainError("kernel variant '" + std::string(to_string(isa)) + "' is not available");
  switch (isa) {
    case Isa::scalar:
      return &triad_row_scalar;
    case Isa::avx2:
#if defined(BIQUAD_HAVE_AVX2_KERNEL)
      return &triad_row_avx2;
#else
      break;
#endif
  }
  return &triad_row_scalar;
}

}  // namespace biquad::kernels
