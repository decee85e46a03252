#pragma once

#include <cstdint>

#include "practium/certificate.hpp"
#include "practium/factorization.hpp"
#include "practium/natural.hpp"

namespace practium {

// f(n) = n^2 + bn + c.
struct QuadraticFamily {
  Natural b;  // >= 0
  Natural c;  // >= 1

  Natural eval(const Natural& n) const { return n * n + b * n + c; }
};

// One self-reproducing step: f(n + f(n)) = f(n) * (f(n) + 2n + b + 1), and
// the multiplier never exceeds 2 f(n) once n >= 2, so practicality of f(n)
// carries to f(next_n). Both facts are asserted exactly.
struct QuadraticStep {
  Natural next_n;
  Natural multiplier;
};
QuadraticStep quadratic_step(const QuadraticFamily& fam, const Natural& n);

// The infinite practical sequence grown from one practical value f(seed).
// Element 0 carries a trivial certificate (the Stewart-verified
// factorization of f(seed)); each advance() extends the chain by one
// quadratic_step multiplier. SeedNotPractical when f(seed) fails the
// Stewart test; FactoringRequired when f(seed) cannot be factored in budget.
class QuadraticFamilyStream {
 public:
  struct Element {
    Natural n;
    PracticalCertificate certificate;  // for f(n)
  };

  QuadraticFamilyStream(QuadraticFamily fam, Natural seed, const FactorOptions& opts = {});

  const Element& current() const { return element_; }
  const Element& advance();

 private:
  QuadraticFamily fam_;
  Element element_;
};

// m_k = 2^(35*3^k + 1) + 2. For k <= 2 the certificate is the direct
// Stewart factorization (m_2 usually needs a hints file); for k > 2 it
// extends the k = 2 certificate with two multipliers per induction step,
// Phi_6(x)Phi_30(x)Phi_42(x) and Phi_210(x) at x = 2^(3^(j-1)). For even k
// the q^4 + 2 shape (q a power of two) is asserted. Capped at k <= 14
// (values beyond that have hundreds of millions of bits).
struct PowerTwoMember {
  unsigned k = 0;
  Natural value;
  PracticalCertificate certificate;
};
PowerTwoMember power_two_member(unsigned k, const FactorOptions& opts = {});

// A Pythagorean triple with all three entries certified practical and
// gcd(a, b, c) equal to the tag d.
struct PythagoreanTriple {
  Natural a, b, c;
  unsigned d = 4;  // gcd tag, 4 or 6
  unsigned k = 0;  // generation index
  PracticalCertificate cert_a, cert_b, cert_c;
};

// Generation k of the d = 4 or d = 6 family built on y = 3^(35*3^k),
// Y = y^2:
//   d = 4: (2(Y-1), 4y, 2(Y+1))      d = 6: (3(Y-1), 6y, 3(Y+1))
// The middle leg is certified from base d by a chain of 3-power steps; the
// k = 0 outer legs by direct factorization (split into cyclotomic values
// first); outer legs for k > 0 by the induction chains
//   minus leg: (U - u + 1)(U + u + 1) at u = 3^(35*3^(j-1)), U = u^2
//   plus leg:  Phi_12 Phi_60 Phi_84 Phi_420 at 3^(3^(j-1))
// The Pythagorean identity, the gcd, and every certificate are checked
// exactly. Capped at k <= 12.
PythagoreanTriple pythagorean_family(unsigned d, unsigned k, const FactorOptions& opts = {});

}  // namespace practium
