#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace practium {

// Base class for every error this library raises on purpose. Anything not
// derived from Error (bad_alloc, logic_error from misuse of gmpxx, ...) is a
// bug, not a reportable condition.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A supplied factor hint does not divide the number being factored.
class InvalidHint : public Error {
 public:
  explicit InvalidHint(const std::string& hint)
      : Error("hint does not divide the target: " + hint) {}
};

// An operation that needs a complete factorization was given a partial one.
class IncompleteFactorization : public Error {
 public:
  IncompleteFactorization() : Error("factorization is incomplete") {}
};

// d(n) exceeds the requested cap in divisors().
class TooManyDivisors : public Error {
 public:
  TooManyDivisors(const std::string& count, const std::string& cap)
      : Error("divisor count " + count + " exceeds cap " + cap) {}
};

// Input magnitude exceeds a documented operating limit.
class LimitExceeded : public Error {
 public:
  using Error::Error;
};

// No ordering of the given multipliers satisfies the weak chain bound.
class NotCertifiable : public Error {
 public:
  explicit NotCertifiable(std::size_t step)
      : Error("multiplier at position " + std::to_string(step) +
              " exceeds twice the accumulated product"),
        step(step) {}
  std::size_t step;
};

// An intermediate value had to be factored (strong verification, family base
// case) and the factoring budget ran out.
class FactoringRequired : public Error {
 public:
  using Error::Error;
};

// cyclotomic_poly index above the documented cap.
class IndexTooLarge : public Error {
 public:
  using Error::Error;
};

// ratio_factors called with indices that do not satisfy its divisibility
// preconditions.
class InvalidDivisibility : public Error {
 public:
  using Error::Error;
};

// verify_paper_bounds called below the x >= 512 hypothesis.
class HypothesisViolated : public Error {
 public:
  using Error::Error;
};

// quadratic_step needs n >= 2.
class SeedTooSmall : public Error {
 public:
  SeedTooSmall() : Error("quadratic_step requires n >= 2") {}
};

// quadratic_family_stream seed value f(seed) failed the Stewart test.
class SeedNotPractical : public Error {
 public:
  using Error::Error;
};

// Malformed expression, certificate file, or hints file.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace practium
