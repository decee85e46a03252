#include "practium/families.hpp"

#include <utility>

#include "practium/cyclotomic.hpp"
#include "practium/errors.hpp"
#include "practium/practical.hpp"

namespace practium {

namespace {

using u64 = std::uint64_t;

FactorOptions filtered(const FactorOptions& opts, const Natural& n) {
  FactorOptions out = opts;
  out.hints = applicable_hints(opts.hints, n);
  return out;
}

// Complete factorization of x^n -+ 1 by splitting into cyclotomic values
// first, then factoring each small piece. Turns one large factoring problem
// into several much smaller ones.
Factorization factor_power_pm_one(const Natural& x, unsigned long n, QuotientSign sign,
                                  const FactorOptions& opts) {
  unsigned long n0 = 1;
  if (sign == QuotientSign::plus) {
    while (n / n0 % 2 == 0) n0 *= 2;  // largest power of two in n
  }
  const Natural head =
      sign == QuotientSign::minus ? Natural(pow_nat(x, n0) - 1) : Natural(pow_nat(x, n0) + 1);
  Factorization acc = factor(head, filtered(opts, head));
  for (const auto& piece : ratio_factors(x, n, n0, sign)) {
    acc = multiply(acc, factor(piece, filtered(opts, piece)));
  }
  return acc;
}

void require_complete(const Factorization& f, const char* what) {
  if (!f.complete()) {
    throw FactoringRequired(std::string(what) + ": factoring budget exhausted; supply hints");
  }
}

PracticalCertificate stewart_certificate(Factorization f, const char* what) {
  require_complete(f, what);
  if (!is_practical(f).practical) {
    throw Error(std::string("internal: ") + what + " failed the Stewart test");
  }
  PracticalCertificate cert;
  cert.target = f.value;
  cert.base = std::move(f);
  return cert;
}

void require_verified(const PracticalCertificate& cert, const char* what) {
  if (!verify(cert, VerifyMode::weak)) {
    throw Error(std::string("internal: ") + what + " certificate failed verification");
  }
}

// 35 * 3^k (+1 when bump) without overflow surprises.
u64 power_two_exponent(unsigned k) {
  u64 e = 35;
  for (unsigned i = 0; i < k; ++i) e *= 3;
  return e;
}

// Chain of 3-power multipliers taking `base` (4 or 6) to base * 3^exp, each
// step the largest power of three the weak bound allows.
std::vector<Natural> three_power_chain(const Natural& base, u64 exp) {
  std::vector<Natural> chain;
  Natural acc = base;
  while (exp > 0) {
    Natural step = 3;
    u64 taken = 1;
    while (taken < exp && step * 3 <= 2 * acc) {
      step *= 3;
      ++taken;
    }
    chain.push_back(step);
    acc *= step;
    exp -= taken;
  }
  return chain;
}

}  // namespace

QuadraticStep quadratic_step(const QuadraticFamily& fam, const Natural& n) {
  if (n < 2) throw SeedTooSmall();
  const Natural f = fam.eval(n);
  QuadraticStep step;
  step.next_n = n + f;
  step.multiplier = f + 2 * n + fam.b + 1;
  if (fam.eval(step.next_n) != f * step.multiplier) {
    throw Error("internal: quadratic reproduction identity failed");
  }
  if (step.multiplier > 2 * f) {
    throw Error("internal: quadratic multiplier exceeds the weak bound");
  }
  return step;
}

QuadraticFamilyStream::QuadraticFamilyStream(QuadraticFamily fam, Natural seed,
                                             const FactorOptions& opts)
    : fam_(std::move(fam)) {
  if (seed < 2) throw SeedTooSmall();
  const Natural f0 = fam_.eval(seed);
  Factorization fct = factor(f0, filtered(opts, f0));
  require_complete(fct, "quadratic seed value");
  if (!is_practical(fct).practical) {
    throw SeedNotPractical("f(" + to_string(seed) + ") = " + to_string(f0) +
                           " is not practical");
  }
  element_.n = std::move(seed);
  element_.certificate.target = f0;
  element_.certificate.base = std::move(fct);
}

const QuadraticFamilyStream::Element& QuadraticFamilyStream::advance() {
  const QuadraticStep step = quadratic_step(fam_, element_.n);
  element_.certificate.chain.push_back(step.multiplier);
  element_.certificate.target *= step.multiplier;
  element_.n = step.next_n;
  return element_;
}

PowerTwoMember power_two_member(unsigned k, const FactorOptions& opts) {
  if (k > 14) throw LimitExceeded("power_two_member capped at k <= 14");
  const u64 exponent = power_two_exponent(k) + 1;
  PowerTwoMember member;
  member.k = k;
  member.value = pow2(exponent) + 2;

  if (k <= 2) {
    member.certificate =
        stewart_certificate(factor(member.value, filtered(opts, member.value)), "m_k base case");
  } else {
    // Extend the k = 2 certificate, two multipliers per induction step.
    PracticalCertificate cert = power_two_member(2, opts).certificate;
    for (unsigned j = 3; j <= k; ++j) {
      const Natural x = pow2(power_two_exponent(j - 1) / 35);  // 2^(3^(j-1))
      const auto phis = ratio_factors(x, 105, 35, QuotientSign::plus);
      // phis is ascending: Phi_6, Phi_30, Phi_42, Phi_210 at x. The first
      // three travel together, bounded by 4(x^35 + 1) = 2 m_(j-1).
      cert.chain.push_back(phis[0] * phis[1] * phis[2]);
      cert.chain.push_back(phis[3]);
      cert.target *= cert.chain[cert.chain.size() - 2];
      cert.target *= cert.chain.back();
    }
    if (cert.target != member.value) {
      throw Error("internal: power-of-two induction product mismatch");
    }
    member.certificate = std::move(cert);
  }
  require_verified(member.certificate, "power-of-two member");

  if (k % 2 == 0) {
    // m_k = q^4 + 2 with q = 2^((35*3^k + 1)/4) a power of two.
    if (exponent % 4 != 0) throw Error("internal: even-k exponent not divisible by 4");
    const Natural q = pow2(exponent / 4);
    if (pow_nat(q, 4) + 2 != member.value) {
      throw Error("internal: q^4 + 2 shape check failed");
    }
  }
  return member;
}

PythagoreanTriple pythagorean_family(unsigned d, unsigned k, const FactorOptions& opts) {
  if (d != 4 && d != 6) {
    throw std::invalid_argument("pythagorean_family: d must be 4 or 6");
  }
  if (k > 12) throw LimitExceeded("pythagorean_family capped at k <= 12");

  const u64 half_exp = power_two_exponent(k);  // 35 * 3^k
  const Natural y = pow_nat(3, half_exp);
  const Natural Y = y * y;
  const Natural scale = d / 2;  // 2 or 3

  PythagoreanTriple triple;
  triple.d = d;
  triple.k = k;
  triple.a = scale * (Y - 1);
  triple.b = Natural(d) * y;
  triple.c = scale * (Y + 1);

  if (triple.a * triple.a + triple.b * triple.b != triple.c * triple.c) {
    throw Error("internal: Pythagorean identity failed");
  }
  Natural g;
  mpz_gcd(g.get_mpz_t(), triple.a.get_mpz_t(), triple.b.get_mpz_t());
  mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), triple.c.get_mpz_t());
  if (g != d) throw Error("internal: triple gcd is not the tag");

  // Middle leg: base d, then 3-power steps up to d * 3^(35*3^k).
  {
    PracticalCertificate cert;
    cert.base = factor(Natural(d));
    cert.chain = three_power_chain(Natural(d), half_exp);
    cert.target = triple.b;
    require_verified(cert, "triple middle leg");
    triple.cert_b = std::move(cert);
  }

  // Outer legs: k = 0 bases by direct (pre-split) factorization.
  const Natural base_minus_val = scale * (pow_nat(3, 70) - 1);
  const Natural base_plus_val = scale * (pow_nat(3, 70) + 1);
  Factorization base_minus =
      multiply(factor(scale), factor_power_pm_one(3, 70, QuotientSign::minus, opts));
  Factorization base_plus =
      multiply(factor(scale), factor_power_pm_one(3, 70, QuotientSign::plus, opts));

  PracticalCertificate cert_minus = stewart_certificate(std::move(base_minus), "triple minus leg");
  PracticalCertificate cert_plus = stewart_certificate(std::move(base_plus), "triple plus leg");
  if (cert_minus.target != base_minus_val || cert_plus.target != base_plus_val) {
    throw Error("internal: outer-leg base value mismatch");
  }

  for (unsigned j = 1; j <= k; ++j) {
    const Natural u = pow_nat(3, power_two_exponent(j - 1));  // 3^(35*3^(j-1))
    const Natural U = u * u;
    cert_minus.chain.push_back(U - u + 1);
    cert_minus.chain.push_back(U + u + 1);
    cert_minus.target *= (U - u + 1) * (U + u + 1);

    const Natural t = pow_nat(3, power_two_exponent(j - 1) / 35);  // 3^(3^(j-1))
    for (const auto& phi : ratio_factors(t, 210, 70, QuotientSign::plus)) {
      cert_plus.chain.push_back(phi);
      cert_plus.target *= phi;
    }
  }
  if (cert_minus.target != triple.a || cert_plus.target != triple.c) {
    throw Error("internal: outer-leg induction product mismatch");
  }
  require_verified(cert_minus, "triple minus leg");
  require_verified(cert_plus, "triple plus leg");
  triple.cert_a = std::move(cert_minus);
  triple.cert_c = std::move(cert_plus);
  return triple;
}

}  // namespace practium
