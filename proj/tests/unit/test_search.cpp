#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>
#include <vector>

#include "practium/practical.hpp"
#include "practium/report.hpp"
#include "practium/search.hpp"

using namespace practium;

namespace {

// The displayed membership rule: c in 1..100 with c mod 12 outside
// {r1, r2} and c not an exceptional exclusion.
std::vector<std::uint64_t> displayed_set(std::uint64_t r1, std::uint64_t r2,
                                         std::set<std::uint64_t> exceptions) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t c = 1; c <= 100; ++c) {
    if (c % 12 == r1 || c % 12 == r2) continue;
    if (exceptions.contains(c)) continue;
    out.push_back(c);
  }
  return out;
}

}  // namespace

TEST_CASE("S_0, S_12, S_16 match the displayed sets") {
  CHECK(s_table(0).members == displayed_set(1, 10, {43, 67, 93}));
  CHECK(s_table(12).members == displayed_set(1, 10, {79}));
  CHECK(s_table(16).members == displayed_set(2, 5, {}));
}

TEST_CASE("witnesses are genuine and minimal") {
  const STableResult table = s_table(6, 100, 20000);
  for (const auto& [c, n] : table.witnesses) {
    CAPTURE(c);
    CAPTURE(n);
    REQUIRE(n >= 2);
    const std::uint64_t value = n * n + 6 * n + c;
    REQUIRE(is_practical_u64(value));
    // Minimality: nothing smaller works.
    for (std::uint64_t m = 2; m < n; ++m) {
      REQUIRE_FALSE(is_practical_u64(m * m + 6 * m + c));
    }
    // Oracle re-check within its range.
    if (value <= 10'000'000) {
      REQUIRE(is_practical_oracle(Natural(value)).practical);
    }
  }
}

TEST_CASE("obstructed residues never appear among members") {
  for (std::uint64_t b = 0; b <= 20; b += 2) {
    const STableResult table = s_table(b, 100, 2000);
    for (std::uint64_t c = 1; c <= 100; ++c) {
      if (residue_obstruction(Natural(b), Natural(c))) {
        CAPTURE(b);
        CAPTURE(c);
        REQUIRE(!table.witnesses.contains(c));
      }
    }
  }
}

TEST_CASE("membership grows with the witness range") {
  const auto small = s_table(0, 100, 1000).members;
  const auto large = s_table(0, 100, 20000).members;
  CHECK(std::includes(large.begin(), large.end(), small.begin(), small.end()));
}

TEST_CASE("goldbach decompositions exist to 10^4") {
  CHECK(goldbach_practical(10'000).empty());
}

TEST_CASE("twin practical numbers") {
  const auto twins = twin_practical(100'000);
  REQUIRE_FALSE(twins.empty());
  CHECK(twins.front() == 4);  // 2, 4, 6
  for (const auto m : twins) {
    CHECK(m % 2 == 0);
    CHECK(is_practical_u64(m - 2));
    CHECK(is_practical_u64(m));
    CHECK(is_practical_u64(m + 2));
  }
}

TEST_CASE("sun chains q, q+2, q^2+2") {
  const auto chain = sun_chain_search(10'000);
  REQUIRE_FALSE(chain.empty());
  CHECK(chain.front() == 2);                            // 2, 4, 6
  CHECK(std::find(chain.begin(), chain.end(), 4) != chain.end());  // 4, 6, 18
  for (const auto q : chain) {
    CHECK(q % 2 == 0);
    CHECK(is_practical_u64(q * q + 2));
  }
}

TEST_CASE("odd numbers decompose as prime + practical to 10^4") {
  CHECK(odd_prime_plus_practical(10'000).empty());
}

TEST_CASE("density points") {
  const DensityPoint p20 = count_practical(20);
  CHECK(p20.count == 9);
  const DensityPoint p2 = count_practical(2);
  CHECK(p2.count == 2);
  CHECK(count_practical(1000).ratio_text.find('.') != std::string::npos);
}

TEST_CASE("checkpoints fire every 10^4 candidates") {
  std::vector<std::uint64_t> seen;
  twin_practical(50'000, 1, [&seen](const ScanCheckpoint& cp) { seen.push_back(cp.current); });
  REQUIRE_FALSE(seen.empty());
  CHECK(seen.front() == 10'000);
  CHECK(seen.back() == 50'000);
  for (const auto v : seen) CHECK(v % 10'000 == 0);
}

TEST_CASE("csv export") {
  const STableResult table = s_table(20, 12, 100);
  const std::string csv = stable_csv(table);
  CHECK(csv.starts_with("c,member,witness_n\n"));
  // c = 2 is obstructed for b = 20, so row 2 is a non-member.
  CHECK(csv.find("\n2,0,\n") != std::string::npos);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 13);  // header + 12 rows
}
