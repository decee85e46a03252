#pragma once

#include <cstdint>
#include <vector>

#include "practium/natural.hpp"

namespace practium {

// Exact integer coefficients of the m-th cyclotomic polynomial, ascending
// degree. degree == Euler totient phi(m); for m >= 2 the leading and
// constant coefficients are both 1.
struct CyclotomicPoly {
  unsigned long index = 1;
  std::vector<long long> coefficients;

  std::size_t degree() const { return coefficients.size() - 1; }
};

// Computes Phi_m by iterated exact division of x^m - 1 by Phi_d over the
// proper divisors d of m. Results are memoized for the process lifetime
// (thread-safe; concurrent callers may duplicate work but always agree).
// m is capped at 10^6 (IndexTooLarge above); coefficient arithmetic is
// overflow-checked 64-bit, which covers every index the cap admits in
// practice and fails loudly rather than wrap.
const CyclotomicPoly& cyclotomic_poly(unsigned long m);

// Exact Horner evaluation at a (possibly huge) integer point.
Integer eval(const CyclotomicPoly& p, const Integer& x);

enum class QuotientSign { minus, plus };

// The cyclotomic values making up the quotient (x^n -+ 1) / (x^n0 -+ 1):
//   minus: Phi_d(x) for d | n, d not| n0          (requires n0 | n)
//   plus:  Phi_d(x) for d | 2n, d not| n, d not| 2n0
//          (requires n0 | n and n/n0 odd)
// sorted ascending by numeric value. The product of the returned values
// times (x^n0 -+ 1) is checked to equal (x^n -+ 1) exactly.
// InvalidDivisibility when the index preconditions fail.
std::vector<Natural> ratio_factors(const Natural& x, unsigned long n, unsigned long n0,
                                   QuotientSign sign);

// The inequality battery used by the power-of-two family induction,
// evaluated exactly at x:
//   x^2/2 < Phi_6(x) < x^2
//   x^8 < Phi_30(x) < 2x^8
//   x^12 < Phi_42(x) < 2x^12
//   Phi_210(x) < x^48
//   x^22/2 < Phi_6(x)Phi_30(x)Phi_42(x) < 4x^22
// Requires x >= 512 (HypothesisViolated below).
struct PaperBoundsReport {
  bool phi6_lower = false, phi6_upper = false;
  bool phi30_lower = false, phi30_upper = false;
  bool phi42_lower = false, phi42_upper = false;
  bool phi210_upper = false;
  bool product_lower = false, product_upper = false;

  bool all() const {
    return phi6_lower && phi6_upper && phi30_lower && phi30_upper && phi42_lower &&
           phi42_upper && phi210_upper && product_lower && product_upper;
  }
};

PaperBoundsReport verify_paper_bounds(const Natural& x);

}  // namespace practium
