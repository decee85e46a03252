#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "practium/factorization.hpp"
#include "practium/natural.hpp"

namespace practium {

// A multiplier-chain proof of practicality: the base is practical by the
// Stewart test, and each chain step multiplies by some n small enough that
// practicality is preserved (n <= sigma(acc) + 1; in particular n <= 2*acc).
// A verified certificate proves the target practical using nothing but
// comparisons and multiplications, no matter how large the target is.
struct PracticalCertificate {
  Factorization base;          // must pass the Stewart test
  std::vector<Natural> chain;  // multipliers, each >= 1, applied in order
  Natural target;              // base.value * prod(chain)
};

enum class VerifyMode {
  weak,    // each multiplier <= 2 * accumulator; needs no factoring
  strong,  // each multiplier <= sigma(accumulator) + 1; factors intermediates
};

struct VerifyReport {
  enum class Failure {
    none,
    base_not_practical,
    chain_product_mismatch,
    bound_violated,
  };
  bool ok = false;
  Failure failure = Failure::none;
  std::size_t step = 0;  // offending chain position when bound_violated

  explicit operator bool() const { return ok; }
};

// Walks the chain and reports whether the certificate proves its target
// practical. Strong mode factors every intermediate accumulator and raises
// FactoringRequired when the budget cannot complete one; weak mode never
// factors anything past the base.
VerifyReport verify(const PracticalCertificate& cert, VerifyMode mode = VerifyMode::weak,
                    const FactorOptions& opts = {});

// Sorts the multipliers ascending (optimal for the weak bound), builds the
// certificate and verifies it in weak mode. NotCertifiable when some prefix
// violates the bound -- definitive, since no other ordering can do better.
PracticalCertificate certify_product(const Factorization& base,
                                     std::vector<Natural> multipliers);

// Canonical text form:
//   base <decimal>
//   target <decimal>
//   mul <decimal>     (one line per chain step, in order)
// Values may also be written as products of powers ("3^35 * 2") when
// authored by hand; serialization always emits plain decimals.
std::string to_text(const PracticalCertificate& cert);

// Parses the text form. The base arrives as a bare value, so it is factored
// here (hence the options); verification is a separate step.
PracticalCertificate parse_certificate(std::string_view text, const FactorOptions& opts = {});
PracticalCertificate load_certificate(const std::string& path, const FactorOptions& opts = {});

}  // namespace practium
