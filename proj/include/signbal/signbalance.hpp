#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "signbal/enumeration.hpp"
#include "signbal/patterns.hpp"
#include "signbal/signed_count.hpp"

namespace signbal {

/// Largest Catalan index whose value fits the exact 64-bit computation.
inline constexpr std::size_t kMaxCatalanIndex = 30;

/// even == odd. The empty tally (0, 0) is balanced.
bool is_sign_balanced(const SignedCount& count) noexcept;

SignedCount tally(std::span<const Permutation> permutations);

/// Whether R itself holds equally many even and odd patterns.
bool pattern_set_is_sign_balanced(const PatternSet& patterns);

struct BalanceRow {
  std::size_t n = 0;
  SignedCount count;

  std::int64_t imbalance() const { return count.imbalance(); }
  bool balanced() const noexcept { return is_sign_balanced(count); }
};

/// Per-n tallies of S_n(R) over the contiguous range [n_lo, n_hi]. Claims
/// never extend past n_hi.
struct BalanceReport {
  PatternSet patterns;
  std::size_t n_lo = 0;
  std::size_t n_hi = 0;
  std::vector<BalanceRow> rows;

  bool all_balanced() const noexcept { return !first_unbalanced(); }
  std::optional<std::size_t> first_unbalanced() const noexcept;
};

/// Requires 2 <= n_lo <= n_hi. Rows are computed one per n and assembled in
/// order; the pruned search inside each row honors options.parallelism.
BalanceReport balance_over_range(const PatternSet& patterns, std::size_t n_lo, std::size_t n_hi,
                                 const EnumerationOptions& options = {});

/// C_m via the product recurrence. Throws std::out_of_range for m > 30.
std::uint64_t catalan(std::size_t m);

/// imbalance(S_n(321)) is 0 for even n and C_{(n-1)/2} for odd n.
bool check_catalan_excess_321(std::size_t n, const EnumerationOptions& options = {});

/// Fixed header "n,even,odd,imbalance,balanced"; one line per row.
std::string to_csv(const BalanceReport& report);
/// Single-line JSON object with a schema_version field.
std::string to_json(const BalanceReport& report);
std::string to_table(const BalanceReport& report);

}  // namespace signbal
