#include "practium/cyclotomic.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>

#include "practium/errors.hpp"

namespace practium {

namespace {

constexpr unsigned long kIndexCap = 1'000'000;

std::vector<unsigned long> divisors_of(unsigned long n) {
  std::vector<unsigned long> divs;
  for (unsigned long d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      divs.push_back(d);
      if (d != n / d) divs.push_back(n / d);
    }
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

long long checked_sub(long long a, long long b) {
  long long r;
  if (__builtin_ssubll_overflow(a, b, &r)) {
    throw Error("cyclotomic coefficient overflow");
  }
  return r;
}

long long checked_mul(long long a, long long b) {
  long long r;
  if (__builtin_smulll_overflow(a, b, &r)) {
    throw Error("cyclotomic coefficient overflow");
  }
  return r;
}

// Exact division of p by the monic divisor d; throws if a nonzero remainder
// survives (it never does for x^m - 1 divided by its cyclotomic factors).
std::vector<long long> exact_divide(std::vector<long long> p,
                                    const std::vector<long long>& d) {
  const std::size_t dp = p.size() - 1;
  const std::size_t dd = d.size() - 1;
  std::vector<long long> q(dp - dd + 1, 0);
  for (std::size_t i = dp - dd + 1; i-- > 0;) {
    const long long coef = p[i + dd];
    if (coef == 0) continue;
    q[i] = coef;
    for (std::size_t j = 0; j <= dd; ++j) {
      p[i + j] = checked_sub(p[i + j], checked_mul(coef, d[j]));
    }
  }
  for (const long long r : p) {
    if (r != 0) throw Error("cyclotomic division left a remainder");
  }
  return q;
}

class Memo {
 public:
  const CyclotomicPoly& get(unsigned long m) {
    {
      std::lock_guard<std::mutex> lock(mutex_);
      if (const auto it = table_.find(m); it != table_.end()) return *it->second;
    }
    auto poly = std::make_unique<CyclotomicPoly>(build(m));
    std::lock_guard<std::mutex> lock(mutex_);
    auto [it, inserted] = table_.try_emplace(m, std::move(poly));
    return *it->second;  // another thread may have won the race; either copy agrees
  }

 private:
  CyclotomicPoly build(unsigned long m) {
    CyclotomicPoly result;
    result.index = m;
    if (m == 1) {
      result.coefficients = {-1, 1};  // x - 1
      return result;
    }
    std::vector<long long> p(m + 1, 0);
    p[0] = -1;
    p[m] = 1;
    for (const unsigned long d : divisors_of(m)) {
      if (d == m) continue;
      p = exact_divide(std::move(p), get(d).coefficients);
    }
    result.coefficients = std::move(p);
    return result;
  }

  std::mutex mutex_;
  std::map<unsigned long, std::unique_ptr<CyclotomicPoly>> table_;
};

Memo& memo() {
  static Memo instance;
  return instance;
}

Natural pow_sub_one(const Natural& x, unsigned long n) { return pow_nat(x, n) - 1; }

}  // namespace

const CyclotomicPoly& cyclotomic_poly(unsigned long m) {
  if (m == 0) throw std::invalid_argument("cyclotomic_poly: index must be >= 1");
  if (m > kIndexCap) {
    throw IndexTooLarge("cyclotomic index cap is " + std::to_string(kIndexCap));
  }
  return memo().get(m);
}

Integer eval(const CyclotomicPoly& p, const Integer& x) {
  Integer acc = 0;
  for (std::size_t i = p.coefficients.size(); i-- > 0;) {
    acc *= x;
    acc += static_cast<long>(p.coefficients[i]);
  }
  return acc;
}

std::vector<Natural> ratio_factors(const Natural& x, unsigned long n, unsigned long n0,
                                   QuotientSign sign) {
  if (n == 0 || n0 == 0) throw std::invalid_argument("ratio_factors: indices must be >= 1");
  if (n % n0 != 0) {
    throw InvalidDivisibility("ratio_factors: n0 must divide n");
  }
  if (sign == QuotientSign::plus && (n / n0) % 2 == 0) {
    throw InvalidDivisibility("ratio_factors: n/n0 must be odd in the plus case");
  }

  std::vector<unsigned long> indices;
  if (sign == QuotientSign::minus) {
    for (const unsigned long d : divisors_of(n)) {
      if (n0 % d != 0) indices.push_back(d);
    }
  } else {
    for (const unsigned long d : divisors_of(2 * n)) {
      if (n % d != 0 && (2 * n0) % d != 0) indices.push_back(d);
    }
  }

  std::vector<Natural> values;
  values.reserve(indices.size());
  for (const unsigned long d : indices) {
    values.push_back(eval(cyclotomic_poly(d), x));
  }
  std::sort(values.begin(), values.end());

  // The quotient identity is what certificates lean on; check it exactly.
  Integer product = sign == QuotientSign::minus ? pow_sub_one(x, n0) : pow_nat(x, n0) + 1;
  for (const auto& v : values) product *= v;
  const Integer whole = sign == QuotientSign::minus ? pow_sub_one(x, n) : pow_nat(x, n) + 1;
  if (product != whole) throw Error("internal: cyclotomic quotient identity failed");
  return values;
}

PaperBoundsReport verify_paper_bounds(const Natural& x) {
  if (x < 512) throw HypothesisViolated("verify_paper_bounds requires x >= 512");
  PaperBoundsReport report;
  const Natural phi6 = eval(cyclotomic_poly(6), x);
  const Natural phi30 = eval(cyclotomic_poly(30), x);
  const Natural phi42 = eval(cyclotomic_poly(42), x);
  const Natural phi210 = eval(cyclotomic_poly(210), x);

  const Natural x2 = x * x;
  const Natural x8 = pow_nat(x, 8);
  const Natural x12 = pow_nat(x, 12);
  const Natural x22 = pow_nat(x, 22);
  const Natural x48 = pow_nat(x, 48);

  report.phi6_lower = x2 < 2 * phi6;  // x^2/2 < phi6 without rounding
  report.phi6_upper = phi6 < x2;
  report.phi30_lower = x8 < phi30;
  report.phi30_upper = phi30 < 2 * x8;
  report.phi42_lower = x12 < phi42;
  report.phi42_upper = phi42 < 2 * x12;
  report.phi210_upper = phi210 < x48;
  const Natural product = phi6 * phi30 * phi42;
  report.product_lower = x22 < 2 * product;
  report.product_upper = product < 4 * x22;
  return report;
}

}  // namespace practium
