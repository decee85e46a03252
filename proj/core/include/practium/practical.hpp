#pragma once

#include <cstdint>
#include <optional>

#include "practium/factorization.hpp"
#include "practium/natural.hpp"

namespace practium {

enum class Method { stewart, oracle, sieve, certificate };

struct PracticalVerdict {
  Natural value;
  bool practical = false;
  Method method = Method::stewart;
  // Stewart rejection: 1-based index j of the first prime with
  // p_j - 1 > sigma(p_1^a_1 ... p_{j-1}^a_{j-1}); j = 1 when p_1 != 2.
  std::optional<std::size_t> failing_index;
  // Oracle rejection: smallest target in 1..n that is not a sum of distinct
  // divisors.
  std::optional<Natural> unreachable_target;

  explicit operator bool() const { return practical; }
};

// Stewart's structure test: m = p_1^a_1 ... p_k^a_k (p_1 < ... < p_k) is
// practical iff m = 1, or p_1 = 2 and p_j - 1 <= sigma(prefix) for every
// 1 < j <= k. Prefix sigmas are accumulated incrementally. Requires a
// complete factorization (IncompleteFactorization otherwise).
PracticalVerdict is_practical(const Factorization& f);

// Machine-word fast path of the same test; factors n on the fly by trial
// division, aborting as soon as the Stewart condition fails.
bool is_practical_u64(std::uint64_t n);

// Definition-level oracle, independent of the structure theorem: builds the
// set of subset sums of the divisors of n with a reachability bit vector of
// length n+1 (sums are clamped at n) and accepts iff every target 1..n is
// reachable. The definition reads "distinct divisors of m" for each target
// n = 1..m, the standard reading consistent with the structure theorem.
// Raises LimitExceeded when n > limit.
PracticalVerdict is_practical_oracle(const Natural& n, std::uint64_t limit = 10'000'000);

// Mod-12 obstruction for f(n) = n^2 + bn + c: true iff every residue class
// f(r) mod 12, r = 0..11, is divisible by neither 4 nor 6, which forces every
// value f(n) > 2 to be non-practical. Since f(n) >= 5 for n >= 2, b >= 0,
// c >= 1, a true return proves c is not a member of the S_b table.
bool residue_obstruction(const Natural& b, const Natural& c);

}  // namespace practium
