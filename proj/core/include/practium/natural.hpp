#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace practium {

// Arbitrary-precision nonnegative integer. GMP keeps the canonical form
// (no redundant leading limbs, unique zero), so the alias carries the
// invariant for free; nonnegativity is an API contract checked at entry
// points that require it.
using Natural = mpz_class;

// Same representation, used where a value may be negative (polynomial
// evaluation, intermediate differences).
using Integer = mpz_class;

inline bool fits_u64(const Natural& n) { return n.fits_ulong_p(); }

inline std::uint64_t to_u64(const Natural& n) { return n.get_ui(); }

// base^exp with an exact bignum result.
inline Natural pow_nat(const Natural& base, unsigned long exp) {
  Natural r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

inline Natural pow2(unsigned long exp) {
  Natural r = 1;
  mpz_mul_2exp(r.get_mpz_t(), r.get_mpz_t(), exp);
  return r;
}

inline std::string to_string(const Natural& n) { return n.get_str(); }

// Number of significant bits (0 for 0).
inline std::size_t bit_length(const Natural& n) {
  return sgn(n) == 0 ? 0 : mpz_sizeinbase(n.get_mpz_t(), 2);
}

}  // namespace practium
