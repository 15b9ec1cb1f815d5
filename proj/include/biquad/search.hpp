#pragma once

// Brute-force oracle: every pair of triads with entries in [1, N], equal sums
// of fourth powers and equal products.
//
// Each multiset {x1 <= x2 <= x3} becomes one record keyed by the exact pair
// (x1^4 + x2^4 + x3^4, x1*x2*x3). Records are produced in partitions split by
// x3, sorted by (key, triad) and scanned for runs of equal keys; every pair
// inside a run is a hit. The final listing depends only on the bound and the
// primitive filter, never on the partition count or thread scheduling.

#include <chrono>
#include <cstdint>
#include <optional>
#include <vector>

#include "biquad/family.hpp"
#include "biquad/kernels.hpp"

namespace biquad {

/// Largest bound for which 3 N^4 fits in 64 bits, so the record keys are exact.
inline constexpr std::uint32_t kMaxSearchBound = 49'000;

struct SearchConfig {
  std::uint32_t bound = 1;
  bool primitive_only = false;
  unsigned partitions = 1;
  /// Kernel variant; empty picks the widest one the CPU supports.
  std::optional<kernels::Isa> isa;
};

struct SearchReport {
  std::vector<TriadPair> pairs;  // sorted by (sum4, left, right)
  std::uint64_t triads_enumerated = 0;
  std::chrono::nanoseconds elapsed{0};
  kernels::Isa isa = kernels::Isa::scalar;
};

/// N (N + 1) (N + 2) / 6.
std::uint64_t triad_count(std::uint32_t bound);

/// Throws DomainError when bound is 0 or exceeds kMaxSearchBound, or
/// partitions is 0.
SearchReport enumerate_pairs(const SearchConfig& cfg);

struct CrossValidationReport {
  std::uint32_t bound = 0;
  std::size_t grid_points = 0;
  std::vector<TriadPair> family_pairs;  // nondegenerate, nontrivial, max <= bound
  std::vector<TriadPair> misses;        // family pairs absent from the search
  std::size_t search_pairs = 0;
  bool passed() const { return misses.empty(); }
};

/// Checks that every in-bound family pair over the (a, b) grid is found by the
/// search at that bound.
CrossValidationReport cross_validate(const BigInt& a_min, const BigInt& a_max, const BigInt& b_min,
                                     const BigInt& b_max, std::uint32_t bound, unsigned partitions = 1);

}  // namespace biquad
