#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "signbal/patterns.hpp"
#include "signbal/permutation.hpp"
#include "signbal/signed_count.hpp"

namespace signbal {

/// Largest n accepted by the brute-force oracle unless overridden.
inline constexpr std::size_t kDefaultOracleGuard = 10;
/// Largest n accepted by the pruned search (bitmask width).
inline constexpr std::size_t kMaxSearchLength = 63;
inline constexpr std::uint64_t kDefaultEmitCap = 100'000'000;

/// A request exceeded a configured size guard (oracle n, emit cap).
class GuardError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The pruned search produced more members than the configured cap.
class EnumerationOverflow : public GuardError {
 public:
  using GuardError::GuardError;
};

/// S_n(R): the length-n permutations avoiding every pattern of R.
struct AvoidanceClassQuery {
  std::size_t n = 1;
  PatternSet patterns;
};

struct EnumerationOptions {
  std::uint64_t cap = kDefaultEmitCap;
  /// Worker threads; subtrees are split by first entry. 0 means 1.
  unsigned parallelism = 1;
  /// Route counting and listing through the brute-force filter instead.
  bool use_oracle = false;
  std::size_t oracle_guard = kDefaultOracleGuard;
};

struct EnumerationStats {
  std::uint64_t emitted = 0;
  std::uint64_t nodes_visited = 0;
  std::uint64_t pruned = 0;

  EnumerationStats& operator+=(const EnumerationStats& other) noexcept {
    emitted += other.emitted;
    nodes_visited += other.nodes_visited;
    pruned += other.pruned;
    return *this;
  }
  friend bool operator==(const EnumerationStats&, const EnumerationStats&) = default;
};

/// Receives each member (one-line entries) with its inversion count, in
/// lexicographic order.
using MemberVisitor = std::function<void(std::span<const int> entries, std::uint64_t inversions)>;

/// Filters all of S_n through avoids_all. Lexicographic order.
/// Throws GuardError when n exceeds `guard`.
std::vector<Permutation> enumerate_oracle(const AvoidanceClassQuery& query,
                                          std::size_t guard = kDefaultOracleGuard);

/// Sequential streaming prefix search. Each prefix is extended by unused
/// values in ascending order and cut as soon as an occurrence appears that
/// uses its newest entry.
EnumerationStats for_each_member(const AvoidanceClassQuery& query, const MemberVisitor& visit,
                                 std::uint64_t cap = kDefaultEmitCap);

/// Same members and order as enumerate_oracle. Honors `parallelism`;
/// `use_oracle` is ignored here.
std::vector<Permutation> enumerate_pruned(const AvoidanceClassQuery& query,
                                          const EnumerationOptions& options = {},
                                          EnumerationStats* stats = nullptr);

/// Even/odd tally of S_n(R); inversions are tracked incrementally during
/// the search (or recomputed per member when `use_oracle` is set).
SignedCount signed_count(const AvoidanceClassQuery& query, const EnumerationOptions& options = {});

std::uint64_t class_cardinality(const AvoidanceClassQuery& query,
                                const EnumerationOptions& options = {});

/// Members whose maximum entry sits at 1-indexed `position`.
std::vector<Permutation> slice_by_max_position(std::span<const Permutation> members,
                                               std::size_t position);

/// Either the pruned search or the oracle, as selected by `options`.
std::vector<Permutation> enumerate_class(const AvoidanceClassQuery& query,
                                         const EnumerationOptions& options = {});

}  // namespace signbal
