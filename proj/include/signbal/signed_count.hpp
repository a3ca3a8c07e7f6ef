#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>

namespace signbal {

/// Even/odd tally over a set of permutations.
struct SignedCount {
  std::uint64_t even = 0;
  std::uint64_t odd = 0;

  std::uint64_t total() const noexcept { return even + odd; }

  /// even - odd; throws std::overflow_error outside the int64 range.
  std::int64_t imbalance() const {
    constexpr auto limit = static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max());
    if (even > limit || odd > limit) throw std::overflow_error("signed count exceeds int64 range");
    return static_cast<std::int64_t>(even) - static_cast<std::int64_t>(odd);
  }

  SignedCount& operator+=(const SignedCount& other) noexcept {
    even += other.even;
    odd += other.odd;
    return *this;
  }

  friend SignedCount operator+(SignedCount a, const SignedCount& b) noexcept { return a += b; }
  friend bool operator==(const SignedCount&, const SignedCount&) = default;
};

}  // namespace signbal
