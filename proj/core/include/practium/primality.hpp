#pragma once

#include <cstdint>

#include "practium/natural.hpp"

namespace practium {

// Deterministic primality for machine words: trial division by a handful of
// small primes, then Miller-Rabin with the fixed witness set
// {2,3,5,7,11,13,17,19,23,29,31,37}, which decides every n < 2^64.
bool is_prime_u64(std::uint64_t n);

// Primality for arbitrary naturals. Below 2^64 this is the deterministic
// test above. Above it: trial division, 64 strong-probable-prime rounds to
// the first 64 prime bases, then a strong Lucas test with Selfridge
// parameters. "Composite" answers are always exact; "prime" answers above
// 2^64 are probabilistic with error below 4^-64 (no composite is known to
// pass even one strong base-2 round combined with the Lucas test).
bool is_prime(const Natural& n);

}  // namespace practium
