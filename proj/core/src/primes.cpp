#include "primes.hpp"

#include <vector>

namespace practium::detail {

std::vector<std::uint32_t> primes_below(std::uint32_t bound) {
  std::vector<std::uint32_t> primes;
  if (bound <= 2) return primes;
  std::vector<bool> composite(bound, false);
  for (std::uint32_t p = 2; p < bound; ++p) {
    if (composite[p]) continue;
    primes.push_back(p);
    for (std::uint64_t m = std::uint64_t(p) * p; m < bound; m += p) {
      composite[m] = true;
    }
  }
  return primes;
}

const std::vector<std::uint32_t>& small_primes() {
  static const std::vector<std::uint32_t> table = primes_below(kTrialDivisionBound);
  return table;
}

}  // namespace practium::detail
