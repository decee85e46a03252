#include "practium/sieve.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>

#include "practium/errors.hpp"
#include "parallel.hpp"
#include "primes.hpp"

namespace practium {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

constexpr u64 kSegmentWidth = 1ull << 22;
constexpr u64 kMaxLimit = 1ull << 34;

// Saturating at UINT64_MAX keeps every comparison sound: the true sigma can
// only be larger, and it is only ever compared against values below 2^64.
u64 sat_mul(u64 a, u64 b) {
  const u128 p = u128(a) * b;
  return p > std::numeric_limits<u64>::max() ? std::numeric_limits<u64>::max()
                                             : static_cast<u64>(p);
}

u64 sigma_prime_power(u64 p, unsigned e) {
  u128 sum = 1, power = 1;
  for (unsigned i = 0; i < e; ++i) {
    power *= p;
    sum += power;
    if (sum > std::numeric_limits<u64>::max()) return std::numeric_limits<u64>::max();
  }
  return static_cast<u64>(sum);
}

void process_segment(u64 lo, u64 hi, const std::vector<std::uint32_t>& base_primes,
                     std::vector<u64>& rem, std::vector<u64>& sig,
                     std::vector<u64>& bits) {
  const u64 width = hi - lo;
  rem.assign(width, 0);
  sig.assign(width, 0);

  for (u64 i = 0; i < width; ++i) {
    const u64 n = lo + i;
    if (n <= 2 || (n & 1)) continue;  // sig stays 0: dead (1 and 2 set below)
    const unsigned twos = static_cast<unsigned>(std::countr_zero(n));
    if (twos == 1 && n % 3 != 0) continue;  // divisible by neither 4 nor 6
    rem[i] = n >> twos;
    sig[i] = (u64(1) << (twos + 1)) - 1;  // sigma(2^twos); twos <= 33 under the cap
  }

  for (const std::uint32_t p32 : base_primes) {
    const u64 p = p32;
    if (p * p >= hi) break;
    // Odd candidates are already dead, so only even multiples matter.
    const u64 step = 2 * p;
    u64 m = ((std::max(lo, step) + step - 1) / step) * step;
    for (; m < hi; m += step) {
      const u64 i = m - lo;
      if (sig[i] == 0) continue;
      if (p - 1 > sig[i]) {
        sig[i] = 0;
        continue;
      }
      unsigned e = 0;
      do {
        rem[i] /= p;
        ++e;
      } while (rem[i] % p == 0);
      sig[i] = sat_mul(sig[i], sigma_prime_power(p, e));
    }
  }

  for (u64 i = 0; i < width; ++i) {
    const u64 n = lo + i;
    if (n == 1 || n == 2) {
      bits[n / 64] |= u64(1) << (n % 64);
      continue;
    }
    if (sig[i] == 0) continue;
    if (rem[i] > 1 && rem[i] - 1 > sig[i]) continue;
    bits[n / 64] |= u64(1) << (n % 64);
  }
}

}  // namespace

PracticalSet PracticalSet::build(u64 limit, unsigned workers) {
  if (limit > kMaxLimit) {
    throw LimitExceeded("practical sieve capped at limit <= 2^34");
  }
  PracticalSet set;
  set.limit_ = limit;
  set.bits_.assign(limit / 64 + 1, 0);
  if (limit == 0) return set;

  const auto sqrt_limit =
      static_cast<std::uint32_t>(std::sqrt(static_cast<double>(limit))) + 2;
  std::vector<std::uint32_t> base_primes = detail::primes_below(sqrt_limit);
  if (!base_primes.empty() && base_primes.front() == 2) {
    base_primes.erase(base_primes.begin());
  }

  const u64 segments = (limit + kSegmentWidth) / kSegmentWidth;
  workers = detail::resolve_workers(workers);

  // Per-worker scratch, reused across the segments a worker picks up.
  // Segments are word-aligned in the shared bitmap, so writes never overlap.
  struct Scratch {
    std::vector<u64> rem, sig;
  };
  std::vector<Scratch> scratch(workers);

  detail::parallel_for_indexed(segments, workers, [&](unsigned worker, u64 s) {
    const u64 lo = s * kSegmentWidth;
    const u64 hi = std::min(lo + kSegmentWidth, limit + 1);
    process_segment(lo, hi, base_primes, scratch[worker].rem, scratch[worker].sig,
                    set.bits_);
  });
  return set;
}

std::uint64_t PracticalSet::count_up_to(u64 x) const {
  if (x > limit_) x = limit_;
  u64 total = 0;
  const u64 full_words = (x + 1) / 64;
  for (u64 w = 0; w < full_words; ++w) total += std::popcount(bits_[w]);
  const unsigned rest = (x + 1) % 64;
  if (rest != 0) {
    total += std::popcount(bits_[full_words] & ((u64(1) << rest) - 1));
  }
  return total;
}

void PracticalSet::for_each(const std::function<void(u64)>& fn) const {
  for (u64 w = 0; w < bits_.size(); ++w) {
    u64 word = bits_[w];
    while (word) {
      const unsigned bit = std::countr_zero(word);
      fn(w * 64 + bit);
      word &= word - 1;
    }
  }
}

std::vector<std::uint64_t> PracticalSet::to_vector() const {
  std::vector<u64> out;
  out.reserve(count());
  for_each([&out](u64 n) { out.push_back(n); });
  return out;
}

}  // namespace practium
