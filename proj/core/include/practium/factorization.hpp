#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "practium/natural.hpp"

namespace practium {

struct PrimePower {
  Natural prime;
  unsigned exponent = 1;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

// A (possibly partial) prime factorization. `factors` holds prime powers with
// strictly increasing primes; `unfactored` holds composite cofactors the
// budget could not split, ascending. value == prod(factors) * prod(unfactored)
// always; the factorization is complete iff `unfactored` is empty.
struct Factorization {
  Natural value = 1;
  std::vector<PrimePower> factors;
  std::vector<Natural> unfactored;

  bool complete() const { return unfactored.empty(); }

  friend bool operator==(const Factorization&, const Factorization&) = default;
};

inline constexpr std::uint64_t kDefaultRhoBudget = 1ull << 26;

struct FactorOptions {
  // Claimed nontrivial divisors of the target. Each is verified by division
  // before use; a hint that does not divide the target raises InvalidHint.
  std::vector<Natural> hints;
  // Pollard-rho iteration cap per composite cofactor.
  std::uint64_t rho_budget = kDefaultRhoBudget;
};

// Factors n >= 1. Pipeline: trial division by all primes below 10^5, hint
// splitting, then Pollard rho with Brent cycle detection on the remaining
// composite cofactors, recursing until every cofactor passes is_prime.
// Runs out of budget -> the partial split comes back with the stubborn
// cofactors in `unfactored`; no exception is thrown for that.
// Rho is deterministic: its polynomial increments are derived from n, so
// factor() is a pure function of (n, hints, budget).
Factorization factor(const Natural& n, const FactorOptions& opts = {});

// Machine-word fast path of the same pipeline (never runs out of budget for
// 64-bit inputs in practice; still honors the cap).
Factorization factor_u64(std::uint64_t n, std::uint64_t rho_budget = kDefaultRhoBudget);

// Factorization of a.value * b.value by merging exponents.
Factorization multiply(const Factorization& a, const Factorization& b);

// Sum of divisors, prod (p^(a+1) - 1)/(p - 1). Requires a complete
// factorization (IncompleteFactorization otherwise).
Natural sigma(const Factorization& f);

// All positive divisors, ascending. Requires a complete factorization;
// raises TooManyDivisors when d(value) exceeds `cap`.
std::vector<Natural> divisors(const Factorization& f, std::uint64_t cap = 1u << 22);

// Hints file: one decimal integer per line, blank lines and lines starting
// with '#' ignored.
std::vector<Natural> load_hints(const std::string& path);

// The subset of `pool` that nontrivially divides n, each at most once.
// Hint files may carry factors for several targets; this selects the ones
// that apply to n so factor() never sees a non-divisor.
std::vector<Natural> applicable_hints(const std::vector<Natural>& pool, const Natural& n);

}  // namespace practium
