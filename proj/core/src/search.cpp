#include "practium/search.hpp"

#include <cmath>
#include <cstdio>

#include "practium/errors.hpp"
#include "practium/practical.hpp"
#include "parallel.hpp"
#include "primes.hpp"

namespace practium {

namespace {

using u64 = std::uint64_t;

constexpr u64 kCheckpointStride = 10'000;

void pulse(const CheckpointFn& checkpoint, u64 current, u64 found) {
  if (checkpoint && current % kCheckpointStride == 0) {
    checkpoint({current, found});
  }
}

}  // namespace

STableResult s_table(u64 b, u64 c_max, u64 n_max, unsigned workers) {
  if (b > 1'000'000'000ull || n_max > 1'000'000'000ull || c_max > 1'000'000ull) {
    throw LimitExceeded("s_table parameters exceed the 64-bit scan range");
  }
  STableResult result;
  result.b = b;
  result.c_max = c_max;
  result.n_max = n_max;

  std::vector<u64> witness_of(c_max + 1, 0);
  detail::parallel_for(c_max, workers, [&](u64 i) {
    const u64 c = i + 1;
    if (residue_obstruction(Natural(b), Natural(c))) return;  // proven non-member
    for (u64 n = 2; n <= n_max; ++n) {
      if (is_practical_u64(n * n + b * n + c)) {
        witness_of[c] = n;
        return;
      }
    }
  });

  for (u64 c = 1; c <= c_max; ++c) {
    if (witness_of[c] != 0) {
      result.members.push_back(c);
      result.witnesses.emplace(c, witness_of[c]);
    }
  }
  return result;
}

std::vector<u64> goldbach_practical(u64 limit, unsigned workers,
                                    const CheckpointFn& checkpoint) {
  if (limit < 2) throw std::invalid_argument("goldbach_practical: limit must be >= 2");
  const PracticalSet set = PracticalSet::build(limit, workers);
  const std::vector<u64> practicals = set.to_vector();
  std::vector<u64> failures;
  for (u64 m = 2; m <= limit; m += 2) {
    bool found = false;
    for (const u64 p : practicals) {
      if (p > m / 2) break;
      if (set.contains(m - p)) {
        found = true;
        break;
      }
    }
    if (!found) failures.push_back(m);
    pulse(checkpoint, m, failures.size());
  }
  return failures;
}

std::vector<u64> twin_practical(u64 limit, unsigned workers, const CheckpointFn& checkpoint) {
  if (limit < 4) throw std::invalid_argument("twin_practical: limit must be >= 4");
  const PracticalSet set = PracticalSet::build(limit + 2, workers);
  std::vector<u64> hits;
  for (u64 m = 4; m <= limit; m += 2) {
    if (set.contains(m - 2) && set.contains(m) && set.contains(m + 2)) {
      hits.push_back(m);
    }
    pulse(checkpoint, m, hits.size());
  }
  return hits;
}

std::vector<u64> sun_chain_search(u64 limit, unsigned workers, const CheckpointFn& checkpoint) {
  if (limit < 2) throw std::invalid_argument("sun_chain_search: limit must be >= 2");
  if (limit > 100'000'000ull) {
    throw LimitExceeded("sun_chain_search capped at limit <= 10^8 (q^2 + 2 must stay 64-bit)");
  }
  const PracticalSet set = PracticalSet::build(limit + 2, workers);
  std::vector<u64> hits;
  for (u64 q = 2; q <= limit; q += 2) {
    if (set.contains(q) && set.contains(q + 2) && is_practical_u64(q * q + 2)) {
      hits.push_back(q);
    }
    pulse(checkpoint, q, hits.size());
  }
  return hits;
}

std::vector<u64> odd_prime_plus_practical(u64 limit, unsigned workers,
                                          const CheckpointFn& checkpoint) {
  if (limit < 3) throw std::invalid_argument("odd_prime_plus_practical: limit must be >= 3");
  if (limit > 4'000'000'000ull) {
    throw LimitExceeded("odd_prime_plus_practical capped at limit <= 4*10^9");
  }
  const PracticalSet set = PracticalSet::build(limit, workers);
  const std::vector<std::uint32_t> primes =
      detail::primes_below(static_cast<std::uint32_t>(limit + 1));
  std::vector<u64> failures;
  for (u64 m = 3; m <= limit; m += 2) {
    bool found = false;
    for (const std::uint32_t p : primes) {
      if (p >= m) break;
      if (set.contains(m - p)) {
        found = true;
        break;
      }
    }
    if (!found) failures.push_back(m);
    pulse(checkpoint, m, failures.size());
  }
  return failures;
}

DensityPoint count_practical(u64 x, unsigned workers) {
  if (x < 2) throw std::invalid_argument("count_practical: x must be >= 2");
  const PracticalSet set = PracticalSet::build(x, workers);
  DensityPoint point;
  point.x = x;
  point.count = set.count();
  point.ratio = static_cast<double>(point.count) * std::log(static_cast<double>(x)) /
                static_cast<double>(x);
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.6f", point.ratio);
  point.ratio_text = buffer;
  return point;
}

}  // namespace practium
