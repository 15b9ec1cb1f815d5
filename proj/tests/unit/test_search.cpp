#include <doctest.h>

#include <map>

#include "biquad/errors.hpp"
#include "biquad/search.hpp"

using namespace biquad;

namespace {

Triad T(long long a, long long b, long long c) { return Triad({BigInt(a), BigInt(b), BigInt(c)}); }

const TriadPair kWorked = TriadPair::make(T(7, 133, 153), T(17, 49, 171));

bool contains(const std::vector<TriadPair>& v, const TriadPair& p) {
  return std::find(v.begin(), v.end(), p) != v.end();
}

SearchReport run(std::uint32_t n, bool primitive = false, unsigned partitions = 1,
                 std::optional<kernels::Isa> isa = std::nullopt) {
  SearchConfig cfg;
  cfg.bound = n;
  cfg.primitive_only = primitive;
  cfg.partitions = partitions;
  cfg.isa = isa;
  return enumerate_pairs(cfg);
}

// Straightforward nested loops over a std::map; shares no code with the
// partitioned sort-join.
std::vector<TriadPair> naive(std::uint32_t n) {
  std::map<std::pair<std::uint64_t, std::uint64_t>, std::vector<Triad>> groups;
  for (std::uint64_t a = 1; a <= n; ++a) {
    for (std::uint64_t b = a; b <= n; ++b) {
      for (std::uint64_t c = b; c <= n; ++c) {
        groups[{a * a * a * a + b * b * b * b + c * c * c * c, a * b * c}].push_back(
            Triad({BigInt(a), BigInt(b), BigInt(c)}));
      }
    }
  }
  std::vector<TriadPair> out;
  for (const auto& [key, triads] : groups) {
    for (std::size_t i = 0; i < triads.size(); ++i) {
      for (std::size_t j = i + 1; j < triads.size(); ++j) out.push_back(TriadPair::make(triads[i], triads[j]));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("triad counts") {
  CHECK(triad_count(1) == 1);
  CHECK(triad_count(6) == 56);
  CHECK(triad_count(175) == 908600);
  CHECK(triad_count(400) == 10'746'800);
  CHECK(run(1).triads_enumerated == 1);
  CHECK(run(37, false, 3).triads_enumerated == triad_count(37));
}

TEST_CASE("small bounds have no pairs") {
  CHECK(run(1).pairs.empty());
  CHECK(run(6).pairs.empty());  // regression snapshot of the brute force
  CHECK(run(100).pairs.empty());
}

TEST_CASE("snapshot at N = 200") {
  const auto rep = run(200);
  REQUIRE(rep.pairs.size() == 3);
  CHECK(rep.pairs[0] == TriadPair::make(T(22, 93, 116), T(29, 66, 124)));
  CHECK(rep.pairs[1] == kWorked);
  CHECK(rep.pairs[2] == TriadPair::make(T(28, 122, 189), T(54, 61, 196)));
  CHECK(rep.pairs[0].sum4() == BigInt(256103393));
  CHECK(rep.pairs[2].prod() == BigInt(645624));
}

TEST_CASE("bound logic around the worked example") {
  CHECK(contains(run(171).pairs, kWorked));
  CHECK_FALSE(contains(run(170).pairs, kWorked));
}

TEST_CASE("agrees with naive nested loops") {
  for (std::uint32_t n : {20U, 125U, 160U}) {
    CAPTURE(n);
    CHECK(run(n, false, 4).pairs == naive(n));
  }
}

TEST_CASE("output is independent of partitions and kernel") {
  const auto ref = run(180, false, 1, kernels::Isa::scalar);
  for (unsigned parts : {1U, 2U, 3U, 7U, 64U}) {
    CAPTURE(parts);
    CHECK(run(180, false, parts).pairs == ref.pairs);
    if (kernels::isa_available(kernels::Isa::avx2)) CHECK(run(180, false, parts, kernels::Isa::avx2).pairs == ref.pairs);
  }
  // More partitions than values of x3.
  CHECK(run(3, false, 16).triads_enumerated == triad_count(3));
}

TEST_CASE("scaling closure and the primitive filter") {
  const auto prim = run(250, true);
  const auto all = run(250, false);
  CHECK(prim.pairs.size() == 3);
  for (const auto& p : prim.pairs) {
    CHECK(p.primitive());
    for (long long d = 2; d <= 10; ++d) {
      const BigInt s(d);
      if (p.right().max() * s > BigInt(250) || p.left().max() * s > BigInt(250)) continue;
      const auto scaled = TriadPair::make(Triad({p.left()[0] * s, p.left()[1] * s, p.left()[2] * s}),
                                          Triad({p.right()[0] * s, p.right()[1] * s, p.right()[2] * s}));
      CHECK(contains(all.pairs, scaled));
      CHECK_FALSE(contains(prim.pairs, scaled));
    }
  }
  CHECK(contains(all.pairs, TriadPair::make(T(44, 186, 232), T(58, 132, 248))));
}

TEST_CASE("every reported pair is verified and sorted") {
  const auto rep = run(250);
  CHECK(std::is_sorted(rep.pairs.begin(), rep.pairs.end()));
  for (const auto& p : rep.pairs) {
    CHECK(check_triads(p.left(), p.right()).ok());
    CHECK(p.left() < p.right());
  }
}

TEST_CASE("invalid configurations") {
  CHECK_THROWS_AS(run(0), DomainError);
  CHECK_THROWS_AS(run(kMaxSearchBound + 1), DomainError);
  CHECK_THROWS_AS(run(10, false, 0), DomainError);
}

TEST_CASE("cross validation") {
  const auto rep = cross_validate(BigInt(-2), BigInt(2), BigInt(-2), BigInt(2), 400);
  CHECK(rep.passed());
  CHECK(contains(rep.family_pairs, kWorked));

  const auto empty = cross_validate(BigInt(1), BigInt(0), BigInt(1), BigInt(0), 50);
  CHECK(empty.passed());
  CHECK(empty.family_pairs.empty());

  const auto line = cross_validate(BigInt(-3), BigInt(3), BigInt(0), BigInt(0), 50);
  CHECK(line.passed());
  CHECK(line.family_pairs.empty());
}
