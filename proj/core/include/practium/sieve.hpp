#pragma once

#include <cstdint>
#include <functional>
#include <vector>

namespace practium {

// Practicality bitmap for every n <= limit. Built by a segmented sweep that
// extracts prime factors in ascending order (the segment acts as a
// smallest-prime-factor sieve) and applies the Stewart condition
// incrementally; odd n > 1, and n > 2 divisible by neither 4 nor 6, are
// rejected up front. Segments are 2^22 wide, cache-resident, and processed
// in parallel; output is merged in order and independent of scheduling.
class PracticalSet {
 public:
  // workers == 0 means hardware concurrency. The documented cap is
  // limit <= 2^34 (bitmap limit/8 bytes, plus ~64 MiB transient state per
  // worker); LimitExceeded above that.
  static PracticalSet build(std::uint64_t limit, unsigned workers = 0);

  std::uint64_t limit() const { return limit_; }
  bool contains(std::uint64_t n) const {
    return n <= limit_ && ((bits_[n / 64] >> (n % 64)) & 1);
  }
  std::uint64_t count() const { return count_up_to(limit_); }
  std::uint64_t count_up_to(std::uint64_t x) const;
  // Visits the practical numbers <= limit in ascending order.
  void for_each(const std::function<void(std::uint64_t)>& fn) const;
  std::vector<std::uint64_t> to_vector() const;

 private:
  std::uint64_t limit_ = 0;
  std::vector<std::uint64_t> bits_;
};

}  // namespace practium
