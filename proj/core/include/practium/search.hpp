#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "practium/sieve.hpp"

namespace practium {

// Progress pulse emitted every 10^4 candidates during long scans, so a run
// can be checkpointed and restarted from `current`.
struct ScanCheckpoint {
  std::uint64_t current = 0;  // candidate just processed
  std::uint64_t found = 0;    // hits (or counterexamples) so far
};
using CheckpointFn = std::function<void(const ScanCheckpoint&)>;

struct STableResult {
  std::uint64_t b = 0;
  std::uint64_t c_max = 100;
  std::uint64_t n_max = 20000;
  std::vector<std::uint64_t> members;                // ascending
  std::map<std::uint64_t, std::uint64_t> witnesses;  // member c -> least n >= 2
};

// S_b = {1 <= c <= c_max : n^2 + bn + c practical for some n = 2..n_max}.
// A c killed by the mod-12 obstruction is recorded as a non-member without
// scanning (the obstruction is the proof); every other c scans n ascending
// and stops at its first witness. Work is split over c values; the merged
// result does not depend on scheduling.
STableResult s_table(std::uint64_t b, std::uint64_t c_max = 100,
                     std::uint64_t n_max = 20000, unsigned workers = 0);

// Even m <= limit with no decomposition m = p + q, p and q practical.
// Expected empty (Margenstern's conjecture, confirmed by Melfi at scale).
std::vector<std::uint64_t> goldbach_practical(std::uint64_t limit, unsigned workers = 0,
                                              const CheckpointFn& checkpoint = {});

// Practical m <= limit with m - 2 and m + 2 practical as well.
std::vector<std::uint64_t> twin_practical(std::uint64_t limit, unsigned workers = 0,
                                          const CheckpointFn& checkpoint = {});

// q <= limit with q, q + 2 and q^2 + 2 all practical.
std::vector<std::uint64_t> sun_chain_search(std::uint64_t limit, unsigned workers = 0,
                                            const CheckpointFn& checkpoint = {});

// Odd 3 <= m <= limit with no decomposition m = prime + practical.
// Expected empty (Sun's conjecture); the scan reports, it does not assume.
std::vector<std::uint64_t> odd_prime_plus_practical(std::uint64_t limit, unsigned workers = 0,
                                                    const CheckpointFn& checkpoint = {});

struct DensityPoint {
  std::uint64_t x = 0;
  std::uint64_t count = 0;     // practical numbers <= x
  double ratio = 0.0;          // count * ln(x) / x
  std::string ratio_text;      // fixed six decimals, for reporting
};

// Exact count by sieve plus the empirical density ratio count*ln(x)/x
// (natural log). The literature pins no constant, so none is asserted.
DensityPoint count_practical(std::uint64_t x, unsigned workers = 0);

}  // namespace practium
