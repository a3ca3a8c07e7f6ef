#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "signbal/permutation.hpp"

namespace signbal {

/// A finite set of patterns, deduplicated and kept in canonical order:
/// shorter patterns first, then lexicographic by entries.
class PatternSet {
 public:
  PatternSet() = default;
  explicit PatternSet(std::vector<Permutation> patterns);
  PatternSet(std::initializer_list<Permutation> patterns)
      : PatternSet(std::vector<Permutation>(patterns)) {}

  /// "1324,2143"; whitespace around tokens is ignored. Entries of a single
  /// token are digits, so tokens describe patterns of length <= 9.
  static PatternSet parse(std::string_view text);

  std::span<const Permutation> patterns() const noexcept { return patterns_; }
  auto begin() const noexcept { return patterns_.begin(); }
  auto end() const noexcept { return patterns_.end(); }
  std::size_t size() const noexcept { return patterns_.size(); }
  bool empty() const noexcept { return patterns_.empty(); }
  bool contains(const Permutation& p) const;

  /// Tokens joined by ','; patterns longer than 9 use ';' between tokens
  /// since their own entries are comma-separated.
  std::string to_string() const;

  friend bool operator==(const PatternSet&, const PatternSet&) = default;
  friend std::strong_ordering operator<=>(const PatternSet& a, const PatternSet& b);

 private:
  std::vector<Permutation> patterns_;
};

/// Canonical order used inside PatternSet.
bool canonical_less(const Permutation& a, const Permutation& b);

/// Strictly increasing 1-indexed host positions.
struct OccurrenceWitness {
  std::vector<std::size_t> indices;
  friend bool operator==(const OccurrenceWitness&, const OccurrenceWitness&) = default;
};

/// The permutation with the same relative order as `word`. Throws on
/// duplicates.
Permutation standardize(std::span<const int> word);

/// Pattern precompiled for repeated matching against hosts.
///
/// Pattern positions are matched left to right. For each position the
/// nearest smaller and nearest larger values among earlier pattern positions
/// bound the admissible host value, so any partial assignment that survives
/// is order-isomorphic to the matching pattern prefix.
class CompiledPattern {
 public:
  explicit CompiledPattern(const Permutation& pattern);

  std::size_t length() const noexcept { return steps_.size(); }
  const Permutation& pattern() const noexcept { return pattern_; }

  /// Lexicographically least occurrence in `host` (any word of distinct
  /// values), as 0-indexed positions.
  std::optional<std::vector<std::size_t>> find_first(std::span<const int> host) const;

  /// True iff some occurrence places the final pattern entry on the final
  /// host position.
  bool matches_ending_at_last(std::span<const int> host) const;

  std::uint64_t count(std::span<const int> host) const;

 private:
  struct Step {
    int below = -1;  // earlier pattern position holding the nearest smaller value
    int above = -1;  // earlier pattern position holding the nearest larger value
  };

  template <class OnMatch>
  bool search(std::span<const int> host, std::size_t step, std::size_t start,
              std::size_t host_end, bool anchored, std::vector<std::size_t>& chosen,
              OnMatch& on_match) const;

  Permutation pattern_;
  std::vector<Step> steps_;
};

std::optional<OccurrenceWitness> find_occurrence(const Permutation& host,
                                                 const Permutation& pattern);
bool contains_pattern(const Permutation& host, const Permutation& pattern);
bool avoids_all(const Permutation& host, const PatternSet& patterns);
std::uint64_t count_occurrences(const Permutation& host, const Permutation& pattern);

/// Whether the standardization of `prefix` contains some member of
/// `patterns`. With `last_position_only`, only occurrences that use the
/// final prefix entry are considered; callers use it when the prefix without
/// its last entry is already known to avoid every pattern.
bool extends_containment(std::span<const int> prefix, const PatternSet& patterns,
                         bool last_position_only = false);

enum class Symmetry { Reverse, Complement, Inverse };

std::string_view to_string(Symmetry symmetry);
Permutation apply(Symmetry symmetry, const Permutation& p);
PatternSet transform_set(const PatternSet& patterns, Symmetry symmetry);

}  // namespace signbal
