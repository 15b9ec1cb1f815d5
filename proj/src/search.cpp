#include "biquad/search.hpp"

#include <algorithm>
#include <exception>
#include <numeric>
#include <span>
#include <thread>
#include <tuple>

#include "biquad/errors.hpp"

namespace biquad {

namespace {

constexpr unsigned kFieldBits = 21;
constexpr std::uint64_t kFieldMask = (std::uint64_t{1} << kFieldBits) - 1;
static_assert(kMaxSearchBound <= kFieldMask);

struct Record {
  std::uint64_t sum4;
  std::uint64_t prod;
  std::uint64_t triad;  // x1, x2, x3 packed high to low, so the order matches lexicographic order

  friend bool operator<(const Record& l, const Record& r) {
    return std::tie(l.sum4, l.prod, l.triad) < std::tie(r.sum4, r.prod, r.triad);
  }
};

constexpr std::uint64_t pack(std::uint64_t x1, std::uint64_t x2, std::uint64_t x3) {
  return (x1 << (2 * kFieldBits)) | (x2 << kFieldBits) | x3;
}

std::array<std::uint64_t, 3> unpack(std::uint64_t code) {
  return {code >> (2 * kFieldBits), (code >> kFieldBits) & kFieldMask, code & kFieldMask};
}

// Records with x3 < c.
std::uint64_t triads_below(std::uint64_t c) { return c == 0 ? 0 : (c - 1) * c * (c + 1) / 6; }

// Splits [1, bound] into contiguous x3 ranges of roughly equal record counts.
std::vector<std::uint32_t> partition_bounds(std::uint32_t bound, unsigned partitions) {
  const std::uint64_t total = triad_count(bound);
  std::vector<std::uint32_t> cuts{1};
  std::uint32_t c = 1;
  for (unsigned k = 1; k < partitions; ++k) {
    const std::uint64_t target = total * k / partitions;
    while (c <= bound && triads_below(c) < target) ++c;
    cuts.push_back(std::max(c, cuts.back()));
  }
  cuts.push_back(bound + 1);
  return cuts;
}

void fill_partition(std::uint32_t x3_lo, std::uint32_t x3_hi, std::span<const std::uint64_t> pow4,
                    kernels::RowKernel row, std::span<Record> out) {
  std::vector<std::uint64_t> sums(x3_hi);
  std::vector<std::uint64_t> prods(x3_hi);
  std::size_t cursor = 0;
  for (std::uint32_t x1 = 1; x1 < x3_hi; ++x1) {
    for (std::uint32_t x2 = x1; x2 < x3_hi; ++x2) {
      const std::uint32_t first = std::max(x2, x3_lo);
      if (first >= x3_hi) continue;
      const std::size_t n = x3_hi - first;
      const kernels::RowArgs args{pow4[x1] + pow4[x2], std::uint64_t{x1} * x2, first, pow4};
      row(args, std::span(sums).first(n), std::span(prods).first(n));
      const std::uint64_t prefix = pack(x1, x2, 0);
      for (std::size_t i = 0; i < n; ++i) out[cursor + i] = Record{sums[i], prods[i], prefix | (first + i)};
      cursor += n;
    }
  }
  if (cursor != out.size()) throw ConsistencyError("partition produced an unexpected number of triads");
}

Triad to_triad(std::uint64_t code) {
  const auto v = unpack(code);
  return Triad({BigInt(v[0]), BigInt(v[1]), BigInt(v[2])});
}

std::uint64_t gcd6(std::uint64_t a, std::uint64_t b) {
  std::uint64_t g = 0;
  for (auto v : unpack(a)) g = std::gcd(g, v);
  for (auto v : unpack(b)) g = std::gcd(g, v);
  return g;
}

}  // namespace

std::uint64_t triad_count(std::uint32_t bound) {
  const std::uint64_t n = bound;
  return n * (n + 1) * (n + 2) / 6;
}

SearchReport enumerate_pairs(const SearchConfig& cfg) {
  if (cfg.bound < 1) throw DomainError("search bound must be at least 1");
  if (cfg.bound > kMaxSearchBound) {
    throw DomainError("search bound " + std::to_string(cfg.bound) + " exceeds the exact-key limit " +
                      std::to_string(kMaxSearchBound));
  }
  if (cfg.partitions < 1) throw DomainError("partitions must be at least 1");

  const auto start = std::chrono::steady_clock::now();
  SearchReport rep;
  rep.isa = cfg.isa.value_or(kernels::best_isa());
  const kernels::RowKernel row = kernels::select_row_kernel(rep.isa);

  std::vector<std::uint64_t> pow4(cfg.bound + 1);
  for (std::uint64_t v = 0; v <= cfg.bound; ++v) pow4[v] = v * v * v * v;

  const std::uint64_t total = triad_count(cfg.bound);
  std::vector<Record> records(total);
  const auto cuts = partition_bounds(cfg.bound, cfg.partitions);

  // Each partition owns the disjoint slice of records with x3 in its range.
  std::vector<std::exception_ptr> failures(cuts.size() - 1);
  {
    std::vector<std::jthread> workers;
    for (std::size_t k = 0; k + 1 < cuts.size(); ++k) {
      const std::uint32_t lo = cuts[k];
      const std::uint32_t hi = cuts[k + 1];
      if (lo >= hi) continue;
      std::span<Record> slice(records.data() + triads_below(lo), triads_below(hi) - triads_below(lo));
      auto task = [=, &pow4, &failure = failures[k]] {
        try {
          fill_partition(lo, hi, pow4, row, slice);
        } catch (...) {
          failure = std::current_exception();
        }
      };
      if (cuts.size() == 2) {
        task();
      } else {
        workers.emplace_back(task);
      }
    }
  }
  for (const auto& f : failures) {
    if (f) std::rethrow_exception(f);
  }
  rep.triads_enumerated = records.size();

  std::sort(records.begin(), records.end());

  for (std::size_t i = 0; i < records.size();) {
    std::size_t j = i + 1;
    while (j < records.size() && records[j].sum4 == records[i].sum4 && records[j].prod == records[i].prod) ++j;
    for (std::size_t u = i; u < j; ++u) {
      for (std::size_t v = u + 1; v < j; ++v) {
        if (cfg.primitive_only && gcd6(records[u].triad, records[v].triad) != 1) continue;
        rep.pairs.push_back(TriadPair::make(to_triad(records[u].triad), to_triad(records[v].triad)));
      }
    }
    i = j;
  }
  std::sort(rep.pairs.begin(), rep.pairs.end());
  rep.elapsed = std::chrono::steady_clock::now() - start;
  return rep;
}

CrossValidationReport cross_validate(const BigInt& a_min, const BigInt& a_max, const BigInt& b_min,
                                     const BigInt& b_max, std::uint32_t bound, unsigned partitions) {
  CrossValidationReport rep;
  rep.bound = bound;
  const RangeReport family = generate_range({a_min, a_max, b_min, b_max, BigInt(bound)});
  rep.grid_points = family.points;
  rep.family_pairs = family.pairs;
  if (rep.family_pairs.empty()) return rep;

  SearchConfig cfg;
  cfg.bound = bound;
  cfg.primitive_only = true;
  cfg.partitions = partitions;
  const SearchReport found = enumerate_pairs(cfg);
  rep.search_pairs = found.pairs.size();
  for (const auto& pair : rep.family_pairs) {
    if (!std::binary_search(found.pairs.begin(), found.pairs.end(), pair)) rep.misses.push_back(pair);
  }
  return rep;
}

}  // namespace biquad
