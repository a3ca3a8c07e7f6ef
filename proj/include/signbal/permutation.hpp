#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace signbal {

enum class Parity { Even, Odd };

std::string_view to_string(Parity parity);

/// A permutation of {1, ..., n} in one-line notation.
///
/// Positions and values are 1-indexed in every public accessor. The empty
/// permutation (n = 0) is valid; it is even and is the identity of both
/// direct and skew sums. Instances are immutable once constructed.
class Permutation {
 public:
  using value_type = int;

  Permutation() = default;

  static Permutation identity(std::size_t n);

  /// Validates that `word` is a bijection on {1..n}. Throws
  /// std::invalid_argument naming the first offending value.
  static Permutation from_word(std::span<const int> word);
  static Permutation from_word(std::initializer_list<int> word) {
    return from_word(std::span<const int>(word.begin(), word.size()));
  }

  /// Parses "24153" (one digit per entry) or "10,2,1,...". The comma form is
  /// chosen whenever the text contains a comma.
  static Permutation parse(std::string_view text);

  std::size_t size() const noexcept { return entries_.size(); }
  bool empty() const noexcept { return entries_.empty(); }

  /// Entry at 1-indexed `position`; throws std::out_of_range.
  int at(std::size_t position) const;

  std::span<const int> entries() const noexcept { return entries_; }
  auto begin() const noexcept { return entries_.begin(); }
  auto end() const noexcept { return entries_.end(); }

  /// Digit string for n <= 9, comma-separated otherwise.
  std::string to_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  struct Unchecked {};
  Permutation(std::vector<int> entries, Unchecked) : entries_(std::move(entries)) {}

  friend Permutation make_unchecked(std::vector<int> entries);

  std::vector<int> entries_;
};

/// Builds a permutation without validation. Callers guarantee bijectivity.
Permutation make_unchecked(std::vector<int> entries);

struct InversionStats {
  std::uint64_t tau = 0;
  std::uint64_t theta = 0;
  std::uint64_t pairs_total = 0;
};

std::uint64_t inversions(const Permutation& p);
std::uint64_t noninversions(const Permutation& p);
InversionStats inversion_stats(const Permutation& p);
Parity parity(const Permutation& p);

/// n(n-1)/2
constexpr std::uint64_t pair_count(std::size_t n) {
  return static_cast<std::uint64_t>(n) * (n == 0 ? 0 : n - 1) / 2;
}

Permutation reverse(const Permutation& p);
Permutation complement(const Permutation& p);
Permutation invert(const Permutation& p);

Permutation direct_sum(const Permutation& lower, const Permutation& upper);
Permutation skew_sum(const Permutation& upper, const Permutation& lower);

/// Exchanges the entries at 1-indexed positions i < j.
Permutation swap_positions(const Permutation& p, std::size_t i, std::size_t j);

/// Inserts n+1 after position `after` (0 places it first).
Permutation insert_max(const Permutation& p, std::size_t after);

struct MonotoneLengths {
  std::size_t lis = 0;
  std::size_t lds = 0;
};

/// Longest increasing / decreasing subsequence lengths. Rejects n = 0.
MonotoneLengths lis_lds(const Permutation& p);

}  // namespace signbal
