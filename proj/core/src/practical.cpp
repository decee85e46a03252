#include "practium/practical.hpp"

#include <bit>
#include <vector>

#include "practium/errors.hpp"
#include "practium/primality.hpp"
#include "primes.hpp"

namespace practium {

namespace {

using u64 = std::uint64_t;

// sigma(p^e) in machine words; safe for p^(e+1) < 2^64.
u64 sigma_prime_power_u64(u64 p, unsigned e) {
  u64 sum = 1, power = 1;
  for (unsigned i = 0; i < e; ++i) {
    power *= p;
    sum += power;
  }
  return sum;
}

}  // namespace

PracticalVerdict is_practical(const Factorization& f) {
  if (!f.complete()) throw IncompleteFactorization();
  PracticalVerdict v;
  v.value = f.value;
  v.method = Method::stewart;
  if (f.value == 1) {
    v.practical = true;
    return v;
  }
  if (f.factors.front().prime != 2) {
    v.practical = false;
    v.failing_index = 1;
    return v;
  }
  Natural prefix_sigma = pow2(f.factors.front().exponent + 1) - 1;
  for (std::size_t j = 1; j < f.factors.size(); ++j) {
    const auto& pp = f.factors[j];
    if (pp.prime - 1 > prefix_sigma) {
      v.practical = false;
      v.failing_index = j + 1;
      return v;
    }
    const Natural top = pow_nat(pp.prime, pp.exponent + 1) - 1;
    prefix_sigma *= top / (pp.prime - 1);
  }
  v.practical = true;
  return v;
}

bool is_practical_u64(u64 n) {
  if (n == 0) return false;
  if (n == 1) return true;
  if (n & 1) return false;  // p_1 must be 2
  const unsigned twos = static_cast<unsigned>(std::countr_zero(n));
  u64 rem = n >> twos;
  u64 sig = (u64(1) << (twos + 1)) - 1;

  const auto& primes = detail::small_primes();
  for (std::size_t i = 1; i < primes.size(); ++i) {
    const u64 p = primes[i];
    if (rem == 1) return true;
    if (p * p > rem) break;
    // Unextracted factors of rem are all >= p; once p exceeds sigma+1 the
    // next prime factor violates the Stewart condition no matter what it is.
    if (p > sig + 1) return false;
    if (rem % p == 0) {
      unsigned e = 0;
      do {
        rem /= p;
        ++e;
      } while (rem % p == 0);
      sig *= sigma_prime_power_u64(p, e);
    }
  }
  if (rem == 1) return true;
  constexpr u64 bound = detail::kTrialDivisionBound;
  if (rem < bound * bound || is_prime_u64(rem)) {
    return rem - 1 <= sig;
  }
  // Composite tail beyond the trial table: fall back to the full pipeline.
  if (sig + 1 < bound) return false;  // its factors exceed the bound, hence sigma+1
  const Factorization tail = factor_u64(rem);
  if (!tail.complete()) throw IncompleteFactorization();
  Natural big_sig = sig;
  for (const auto& pp : tail.factors) {
    if (pp.prime - 1 > big_sig) return false;
    big_sig *= (pow_nat(pp.prime, pp.exponent + 1) - 1) / (pp.prime - 1);
  }
  return true;
}

PracticalVerdict is_practical_oracle(const Natural& n, std::uint64_t limit) {
  if (sgn(n) <= 0) throw std::invalid_argument("is_practical_oracle: n must be >= 1");
  if (n > Natural(limit)) {
    throw LimitExceeded("oracle limit " + std::to_string(limit) + " exceeded by n = " + to_string(n));
  }
  if (limit > (u64(1) << 32)) {
    throw LimitExceeded("oracle reachability vector capped at n <= 2^32");
  }
  const u64 target = to_u64(n);
  PracticalVerdict v;
  v.value = n;
  v.method = Method::oracle;

  const Factorization f = factor_u64(target);
  std::vector<Natural> divs = divisors(f);

  // reach[t] == 1 iff t is a sum of distinct divisors; sums above `target`
  // are clamped so the vector stays at n+1 bits.
  const std::size_t words = (target + 1 + 63) / 64;
  std::vector<u64> reach(words, 0);
  reach[0] = 1;
  for (const auto& dv : divs) {
    const u64 d = to_u64(dv);
    if (d > target) break;
    const std::size_t word_shift = d / 64;
    const unsigned bit_shift = d % 64;
    // In-place shifted OR, top word down so each source word is read before
    // it is overwritten (each divisor participates at most once).
    if (bit_shift == 0) {
      for (std::size_t i = words; i-- > word_shift;) {
        reach[i] |= reach[i - word_shift];
      }
    } else {
      for (std::size_t i = words; i-- > word_shift;) {
        u64 lo = reach[i - word_shift] << bit_shift;
        if (i > word_shift) lo |= reach[i - word_shift - 1] >> (64 - bit_shift);
        reach[i] |= lo;
      }
    }
  }

  for (u64 t = 1; t <= target; ++t) {
    if (!((reach[t / 64] >> (t % 64)) & 1)) {
      v.practical = false;
      v.unreachable_target = Natural(t);
      return v;
    }
  }
  v.practical = true;
  return v;
}

bool residue_obstruction(const Natural& b, const Natural& c) {
  if (sgn(b) < 0 || sgn(c) < 0) throw std::invalid_argument("residue_obstruction: negative input");
  const u64 br = mpz_fdiv_ui(b.get_mpz_t(), 12);
  const u64 cr = mpz_fdiv_ui(c.get_mpz_t(), 12);
  for (u64 r = 0; r < 12; ++r) {
    const u64 fr = (r * r + br * r + cr) % 12;
    // Divisible by 4 or by 6 mod 12: residues 0, 4, 6, 8.
    if (fr == 0 || fr == 4 || fr == 6 || fr == 8) return false;
  }
  return true;
}

}  // namespace practium
