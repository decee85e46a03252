#pragma once

#include <cstdint>
#include <vector>

namespace practium::detail {

// Trial-division bound shared by the factoring pipeline and the fast
// practicality test.
inline constexpr std::uint32_t kTrialDivisionBound = 100'000;

// All primes below kTrialDivisionBound, built once on first use.
const std::vector<std::uint32_t>& small_primes();

// Primes below `bound` via a plain sieve of Eratosthenes.
std::vector<std::uint32_t> primes_below(std::uint32_t bound);

}  // namespace practium::detail
