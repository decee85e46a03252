#include "practium/factorization.hpp"

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <set>
#include <stdexcept>

#include "practium/errors.hpp"
#include "practium/primality.hpp"
#include "primes.hpp"

namespace practium {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(u128(a) * b % m); }

u64 gcd_u64(u64 a, u64 b) {
  while (b) {
    a %= b;
    std::swap(a, b);
  }
  return a;
}

// Brent-cycle Pollard rho on a machine word. n odd, composite, free of small
// factors. Returns a nontrivial factor, or 0 when the budget runs out.
u64 rho_brent_u64(u64 n, u64& budget) {
  for (u64 c = 1; budget > 0; ++c) {
    u64 y = 2, r = 1, q = 1, g = 1, x = 0, ys = 0;
    const u64 batch = 128;
    while (g == 1 && budget > 0) {
      x = y;
      for (u64 i = 0; i < r && budget > 0; ++i, --budget) {
        y = mulmod(y, y, n) + c;
        if (y >= n) y -= n;
      }
      u64 k = 0;
      while (k < r && g == 1 && budget > 0) {
        ys = y;
        const u64 lim = std::min(batch, r - k);
        for (u64 i = 0; i < lim && budget > 0; ++i, --budget) {
          y = mulmod(y, y, n) + c;
          if (y >= n) y -= n;
          q = mulmod(q, x > y ? x - y : y - x, n);
        }
        g = gcd_u64(q, n);
        k += lim;
      }
      r <<= 1;
    }
    if (g == 1 || budget == 0) return 0;
    if (g == n) {
      // Backtrack one step at a time from the last batch start.
      do {
        ys = mulmod(ys, ys, n) + c;
        if (ys >= n) ys -= n;
        g = gcd_u64(x > ys ? x - ys : ys - x, n);
      } while (g == 1);
      if (g == n) continue;  // cycle degenerate for this c, try the next
    }
    return g;
  }
  return 0;
}

// Same algorithm over bignums.
Natural rho_brent_mpz(const Natural& n, u64& budget) {
  Natural y, x, ys, q, g, diff;
  for (u64 c = 1; budget > 0; ++c) {
    y = 2;
    q = 1;
    g = 1;
    u64 r = 1;
    const u64 batch = 128;
    while (g == 1 && budget > 0) {
      x = y;
      for (u64 i = 0; i < r && budget > 0; ++i, --budget) {
        y = y * y + c;
        mpz_mod(y.get_mpz_t(), y.get_mpz_t(), n.get_mpz_t());
      }
      u64 k = 0;
      while (k < r && g == 1 && budget > 0) {
        ys = y;
        const u64 lim = std::min(batch, r - k);
        for (u64 i = 0; i < lim && budget > 0; ++i, --budget) {
          y = y * y + c;
          mpz_mod(y.get_mpz_t(), y.get_mpz_t(), n.get_mpz_t());
          diff = x > y ? x - y : y - x;
          q *= diff;
          mpz_mod(q.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        }
        mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        k += lim;
      }
      r <<= 1;
    }
    if (g == 1 || budget == 0) return 0;
    if (g == n) {
      do {
        ys = ys * ys + c;
        mpz_mod(ys.get_mpz_t(), ys.get_mpz_t(), n.get_mpz_t());
        diff = x > ys ? x - ys : ys - x;
        mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
      } while (g == 1);
      if (g == n) continue;
    }
    return g;
  }
  return 0;
}

// Splits `piece` (free of primes below the trial bound) into primes, spending
// at most `budget` rho iterations per composite cofactor encountered.
void resolve_u64(u64 piece, u64 budget, std::vector<Natural>& primes_out,
                 std::vector<Natural>& unfactored_out) {
  if (piece == 1) return;
  if (is_prime_u64(piece)) {
    primes_out.emplace_back(piece);
    return;
  }
  u64 local = budget;
  const u64 g = rho_brent_u64(piece, local);
  if (g == 0) {
    unfactored_out.emplace_back(piece);
    return;
  }
  resolve_u64(g, budget, primes_out, unfactored_out);
  resolve_u64(piece / g, budget, primes_out, unfactored_out);
}

void resolve_mpz(const Natural& piece, u64 budget, std::vector<Natural>& primes_out,
                 std::vector<Natural>& unfactored_out) {
  if (piece == 1) return;
  if (fits_u64(piece)) {
    resolve_u64(to_u64(piece), budget, primes_out, unfactored_out);
    return;
  }
  if (is_prime(piece)) {
    primes_out.push_back(piece);
    return;
  }
  // Perfect powers stall rho longer than necessary; peel them first.
  if (mpz_perfect_power_p(piece.get_mpz_t())) {
    for (unsigned long k = 2; k <= bit_length(piece); ++k) {
      Natural root;
      if (mpz_root(root.get_mpz_t(), piece.get_mpz_t(), k) != 0) {
        std::vector<Natural> base_primes, base_unf;
        resolve_mpz(root, budget, base_primes, base_unf);
        for (unsigned long i = 0; i < k; ++i) {
          primes_out.insert(primes_out.end(), base_primes.begin(), base_primes.end());
          unfactored_out.insert(unfactored_out.end(), base_unf.begin(), base_unf.end());
        }
        return;
      }
    }
  }
  u64 local = budget;
  const Natural g = rho_brent_mpz(piece, local);
  if (sgn(g) == 0) {
    unfactored_out.push_back(piece);
    return;
  }
  resolve_mpz(g, budget, primes_out, unfactored_out);
  resolve_mpz(piece / g, budget, primes_out, unfactored_out);
}

// Collapses a multiset of primes into sorted prime powers and appends them.
void append_prime_powers(std::vector<Natural> primes, std::vector<PrimePower>& out) {
  std::sort(primes.begin(), primes.end());
  for (std::size_t i = 0; i < primes.size();) {
    std::size_t j = i;
    while (j < primes.size() && primes[j] == primes[i]) ++j;
    out.push_back({primes[i], static_cast<unsigned>(j - i)});
    i = j;
  }
}

void check_invariants(const Factorization& f) {
  Natural prod = 1;
  const Natural* prev = nullptr;
  for (const auto& pp : f.factors) {
    if (pp.exponent == 0 || (prev && !(*prev < pp.prime))) {
      throw Error("internal: malformed factorization");
    }
    prev = &pp.prime;
    prod *= pow_nat(pp.prime, pp.exponent);
  }
  for (const auto& c : f.unfactored) prod *= c;
  if (prod != f.value) throw Error("internal: factorization product mismatch");
}

}  // namespace

Factorization factor_u64(u64 n, u64 rho_budget) {
  if (n == 0) throw std::invalid_argument("factor: n must be >= 1");
  Factorization out;
  out.value = Natural(n);
  if (n == 1) return out;

  u64 rem = n;
  for (u64 p : detail::small_primes()) {
    if (p * p > rem) break;
    if (rem % p == 0) {
      unsigned e = 0;
      do {
        rem /= p;
        ++e;
      } while (rem % p == 0);
      out.factors.push_back({Natural(p), e});
    }
  }
  if (rem > 1) {
    const u64 bound = detail::kTrialDivisionBound;
    if (rem < bound * bound || is_prime_u64(rem)) {
      // No factor below the trial bound remains, so a small cofactor is prime.
      out.factors.push_back({Natural(rem), 1});
    } else {
      std::vector<Natural> primes, unf;
      resolve_u64(rem, rho_budget, primes, unf);
      append_prime_powers(std::move(primes), out.factors);
      out.unfactored = std::move(unf);
    }
  }
  std::sort(out.factors.begin(), out.factors.end(),
            [](const PrimePower& a, const PrimePower& b) { return a.prime < b.prime; });
  std::sort(out.unfactored.begin(), out.unfactored.end());
  check_invariants(out);
  return out;
}

Factorization factor(const Natural& n, const FactorOptions& opts) {
  if (sgn(n) <= 0) throw std::invalid_argument("factor: n must be >= 1");
  if (fits_u64(n) && opts.hints.empty()) return factor_u64(to_u64(n), opts.rho_budget);

  Factorization out;
  out.value = n;
  if (n == 1) return out;

  // Hints are validated against the original n before any splitting.
  for (const auto& h : opts.hints) {
    if (h <= 1 || h >= n || !mpz_divisible_p(n.get_mpz_t(), h.get_mpz_t())) {
      throw InvalidHint(to_string(h));
    }
  }

  Natural rem = n;
  // Powers of two via bit scan, then odd trial primes.
  const unsigned long twos = mpz_scan1(rem.get_mpz_t(), 0);
  if (twos > 0) {
    out.factors.push_back({Natural(2), static_cast<unsigned>(twos)});
    mpz_fdiv_q_2exp(rem.get_mpz_t(), rem.get_mpz_t(), twos);
  }
  const auto& primes = detail::small_primes();
  for (std::size_t i = 1; i < primes.size() && rem > 1; ++i) {
    const u64 p = primes[i];
    if (mpz_cmp_ui(rem.get_mpz_t(), p * p) < 0) break;
    if (mpz_divisible_ui_p(rem.get_mpz_t(), p)) {
      unsigned e = 0;
      do {
        mpz_divexact_ui(rem.get_mpz_t(), rem.get_mpz_t(), p);
        ++e;
      } while (mpz_divisible_ui_p(rem.get_mpz_t(), p));
      out.factors.push_back({Natural(p), e});
    }
  }

  std::vector<Natural> pieces;
  if (rem > 1) {
    if (fits_u64(rem) && to_u64(rem) < u64(detail::kTrialDivisionBound) * detail::kTrialDivisionBound) {
      out.factors.push_back({rem, 1});
    } else {
      pieces.push_back(rem);
    }
  }

  // Hint splitting: each hint may cut any current piece along a common factor.
  for (const auto& h : opts.hints) {
    std::vector<Natural> next;
    for (const auto& piece : pieces) {
      Natural g;
      mpz_gcd(g.get_mpz_t(), piece.get_mpz_t(), h.get_mpz_t());
      if (g > 1 && g < piece) {
        next.push_back(g);
        next.push_back(piece / g);
      } else {
        next.push_back(piece);
      }
    }
    pieces = std::move(next);
  }

  std::vector<Natural> loose_primes, unf;
  for (const auto& piece : pieces) {
    resolve_mpz(piece, opts.rho_budget, loose_primes, unf);
  }
  append_prime_powers(std::move(loose_primes), out.factors);
  out.unfactored = std::move(unf);

  std::sort(out.factors.begin(), out.factors.end(),
            [](const PrimePower& a, const PrimePower& b) { return a.prime < b.prime; });
  // Equal primes can surface from different pieces; merge them.
  std::vector<PrimePower> merged;
  for (auto& pp : out.factors) {
    if (!merged.empty() && merged.back().prime == pp.prime) {
      merged.back().exponent += pp.exponent;
    } else {
      merged.push_back(std::move(pp));
    }
  }
  out.factors = std::move(merged);
  std::sort(out.unfactored.begin(), out.unfactored.end());
  check_invariants(out);
  return out;
}

Factorization multiply(const Factorization& a, const Factorization& b) {
  Factorization out;
  out.value = a.value * b.value;
  auto ia = a.factors.begin(), ib = b.factors.begin();
  while (ia != a.factors.end() || ib != b.factors.end()) {
    if (ib == b.factors.end() || (ia != a.factors.end() && ia->prime < ib->prime)) {
      out.factors.push_back(*ia++);
    } else if (ia == a.factors.end() || ib->prime < ia->prime) {
      out.factors.push_back(*ib++);
    } else {
      out.factors.push_back({ia->prime, ia->exponent + ib->exponent});
      ++ia;
      ++ib;
    }
  }
  out.unfactored = a.unfactored;
  out.unfactored.insert(out.unfactored.end(), b.unfactored.begin(), b.unfactored.end());
  std::sort(out.unfactored.begin(), out.unfactored.end());
  check_invariants(out);
  return out;
}

Natural sigma(const Factorization& f) {
  if (!f.complete()) throw IncompleteFactorization();
  Natural result = 1;
  for (const auto& pp : f.factors) {
    // (p^(a+1) - 1) / (p - 1)
    const Natural top = pow_nat(pp.prime, pp.exponent + 1) - 1;
    result *= top / (pp.prime - 1);
  }
  return result;
}

std::vector<Natural> divisors(const Factorization& f, std::uint64_t cap) {
  if (!f.complete()) throw IncompleteFactorization();
  Natural count = 1;
  for (const auto& pp : f.factors) count *= pp.exponent + 1;
  if (count > Natural(cap)) {
    throw TooManyDivisors(to_string(count), std::to_string(cap));
  }
  std::vector<Natural> divs{Natural(1)};
  for (const auto& pp : f.factors) {
    const std::size_t before = divs.size();
    Natural power = 1;
    for (unsigned e = 1; e <= pp.exponent; ++e) {
      power *= pp.prime;
      for (std::size_t i = 0; i < before; ++i) divs.push_back(divs[i] * power);
    }
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

std::vector<Natural> load_hints(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open hints file: " + path);
  std::vector<Natural> hints;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    const auto last = line.find_last_not_of(" \t\r");
    const std::string token = line.substr(first, last - first + 1);
    try {
      hints.emplace_back(token, 10);
    } catch (const std::invalid_argument&) {
      throw ParseError("hints file " + path + ", line " + std::to_string(lineno) +
                       ": not a decimal integer: " + token);
    }
  }
  return hints;
}

std::vector<Natural> applicable_hints(const std::vector<Natural>& pool, const Natural& n) {
  std::set<Natural> seen;
  std::vector<Natural> out;
  for (const auto& h : pool) {
    if (h <= 1 || h >= n) continue;
    if (!mpz_divisible_p(n.get_mpz_t(), h.get_mpz_t())) continue;
    if (seen.insert(h).second) out.push_back(h);
  }
  return out;
}

}  // namespace practium
