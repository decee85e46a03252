#include "practium/primality.hpp"

#include <array>
#include <cstdint>

#include "practium/errors.hpp"
#include "primes.hpp"

namespace practium {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(u128(a) * b % m); }

u64 powmod(u64 base, u64 exp, u64 m) {
  u64 result = 1 % m;
  base %= m;
  while (exp) {
    if (exp & 1) result = mulmod(result, base, m);
    base = mulmod(base, base, m);
    exp >>= 1;
  }
  return result;
}

// One strong-probable-prime round; n odd, n > 3, n - 1 = d * 2^s.
bool sprp_u64(u64 n, u64 base, u64 d, int s) {
  u64 x = powmod(base, d, n);
  if (x == 1 || x == n - 1) return true;
  for (int i = 1; i < s; ++i) {
    x = mulmod(x, x, n);
    if (x == n - 1) return true;
  }
  return false;
}

constexpr std::array<u64, 12> kWitnesses = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};

// Reduce into [0, n).
void mod_into(Integer& v, const Natural& n) {
  mpz_mod(v.get_mpz_t(), v.get_mpz_t(), n.get_mpz_t());
}

bool sprp_mpz(const Natural& n, const Natural& base, const Natural& d, unsigned long s) {
  Natural x;
  mpz_powm(x.get_mpz_t(), base.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
  Natural nm1 = n - 1;
  if (x == 1 || x == nm1) return true;
  for (unsigned long i = 1; i < s; ++i) {
    x = x * x;
    mod_into(x, n);
    if (x == nm1) return true;
    if (x == 1) return false;
  }
  return false;
}

// Strong Lucas probable-prime test, Selfridge method A parameters.
// Assumes n odd, n > 3, not a perfect square, gcd checks done by caller's
// trial division.
bool strong_lucas_mpz(const Natural& n) {
  // Pick D in 5, -7, 9, -11, ... with (D|n) = -1.
  long d_abs = 5;
  int sign = 1;
  Integer d;
  for (;;) {
    d = Integer(sign * d_abs);
    const int jac = mpz_jacobi(d.get_mpz_t(), n.get_mpz_t());
    if (jac == -1) break;
    if (jac == 0) return false;  // shares a factor with n (n > |d| here)
    d_abs += 2;
    sign = -sign;
    if (d_abs > 1000) return false;  // unreachable for non-squares
  }
  // P = 1, Q = (1 - D) / 4.
  const Integer q = (1 - d) / 4;

  // n + 1 = k * 2^s with k odd.
  Natural np1 = n + 1;
  const unsigned long s = mpz_scan1(np1.get_mpz_t(), 0);
  Natural k;
  mpz_fdiv_q_2exp(k.get_mpz_t(), np1.get_mpz_t(), s);

  // Compute U_k, V_k, Q^k (mod n) by a left-to-right binary chain.
  Integer u = 1, v = 1, qk = q;  // U_1, V_1, Q^1
  mod_into(qk, n);
  const std::size_t bits = mpz_sizeinbase(k.get_mpz_t(), 2);
  auto halve = [&n](Integer& x) {
    // x/2 mod n for odd n.
    if (mpz_odd_p(x.get_mpz_t())) x += n;
    mpz_fdiv_q_2exp(x.get_mpz_t(), x.get_mpz_t(), 1);
  };
  for (std::size_t i = bits - 1; i-- > 0;) {
    // Double: (U, V, Q^m) -> (U*V, V^2 - 2Q^m, Q^2m).
    u = u * v;
    mod_into(u, n);
    v = v * v - 2 * qk;
    mod_into(v, n);
    qk = qk * qk;
    mod_into(qk, n);
    if (mpz_tstbit(k.get_mpz_t(), i)) {
      // Increment: U' = (P*U + V)/2, V' = (D*U + P*V)/2, with P = 1.
      Integer u2 = u + v;
      Integer v2 = d * u + v;
      halve(u2);
      halve(v2);
      mod_into(u2, n);
      mod_into(v2, n);
      u = u2;
      v = v2;
      qk = qk * q;
      mod_into(qk, n);
    }
  }

  if (sgn(u) == 0) return true;  // U_k == 0
  if (sgn(v) == 0) return true;  // V_k == 0 (r = 0 case)
  for (unsigned long r = 1; r < s; ++r) {
    v = v * v - 2 * qk;
    mod_into(v, n);
    if (sgn(v) == 0) return true;
    qk = qk * qk;
    mod_into(qk, n);
  }
  return false;
}

}  // namespace

bool is_prime_u64(u64 n) {
  if (n < 2) return false;
  for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n == p) return true;
    if (n % p == 0) return false;
  }
  if (n < 41 * 41) return true;
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (u64 w : kWitnesses) {
    if (!sprp_u64(n, w, d, s)) return false;
  }
  return true;
}

bool is_prime(const Natural& n) {
  if (sgn(n) < 0) throw std::invalid_argument("is_prime: negative input");
  if (fits_u64(n)) return is_prime_u64(to_u64(n));

  // n > 2^64 here. Cheap trial division first.
  const auto& primes = detail::small_primes();
  for (std::size_t i = 0; i < 512 && i < primes.size(); ++i) {
    if (mpz_divisible_ui_p(n.get_mpz_t(), primes[i])) return false;
  }
  if (mpz_perfect_square_p(n.get_mpz_t())) return false;

  Natural nm1 = n - 1;
  const unsigned long s = mpz_scan1(nm1.get_mpz_t(), 0);
  Natural d;
  mpz_fdiv_q_2exp(d.get_mpz_t(), nm1.get_mpz_t(), s);

  // 64 strong-probable-prime rounds to the first 64 prime bases.
  for (std::size_t i = 0; i < 64; ++i) {
    if (!sprp_mpz(n, Natural(primes[i]), d, s)) return false;
  }
  return strong_lucas_mpz(n);
}

}  // namespace practium
