#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "signbal/enumeration.hpp"
#include "signbal/patterns.hpp"

namespace signbal {

/// Upper bound on n for every verification driver.
inline constexpr std::size_t kMaxExperimentN = 12;
inline constexpr std::size_t kWitnessCap = 20;

struct FailureWitness {
  std::string subject;  // pattern set or claim component
  std::size_t n = 0;
  std::string expected;
  std::string actual;
  friend bool operator==(const FailureWitness&, const FailureWitness&) = default;
};

/// Outcome of one machine-checked claim. `passed` holds iff no failure was
/// recorded; at most kWitnessCap witnesses are kept and the rest counted.
struct VerificationVerdict {
  std::string name;
  std::string claim;
  bool passed = true;
  std::size_t n_lo = 0;
  std::size_t n_hi = 0;
  std::uint64_t cases = 0;
  std::vector<std::pair<std::string, std::int64_t>> tallies;
  std::vector<FailureWitness> witnesses;
  std::uint64_t suppressed_witnesses = 0;
  double elapsed_ms = 0.0;

  void record_failure(FailureWitness witness);
  void set_tally(std::string key, std::int64_t value);
  std::optional<std::int64_t> tally(std::string_view key) const;
};

/// Every nonempty R ⊆ S_3: S_n(R) is balanced for all 2 <= n <= n_max iff R
/// is sign-balanced and R != {132,213,231,312}; every failing R must fail by
/// n = 4. Requires 4 <= n_max <= kMaxExperimentN.
VerificationVerdict verify_s3_classification(std::size_t n_max,
                                             const EnumerationOptions& options = {});

/// The twelve length-4 pattern pairs with balanced classes.
std::vector<PatternSet> balanced_length4_pairs();

/// imbalance(S_n(pair)) = 0 for every listed pair and 2 <= n <= n_max.
VerificationVerdict verify_length4_pairs(std::size_t n_max,
                                         const EnumerationOptions& options = {});

/// S_n(1324,2143) is balanced for n <= 4 and unbalanced at n = 5, with the
/// expected max-position slices; S_5(4231,3412) is unbalanced too.
VerificationVerdict verify_1324_2143_counterexample(const EnumerationOptions& options = {});

/// Class sizes for every 4-element R ⊆ S_3. Requires 5 <= n_max.
VerificationVerdict verify_four_pattern_counts(std::size_t n_max,
                                               const EnumerationOptions& options = {});

/// The even and odd parts of S_4(123,321), and emptiness from n = 5 on.
VerificationVerdict verify_123_321_class(const EnumerationOptions& options = {});

/// check_catalan_excess_321 for 2 <= n <= n_max <= 12.
VerificationVerdict verify_catalan_excess(std::size_t n_max,
                                          const EnumerationOptions& options = {});

struct VerificationTarget {
  std::string_view id;
  std::string_view description;
  std::optional<std::size_t> default_n_max;  // absent for fixed-range checks
};

/// Stable alias table: thm1.2, thm1.3, ex3.9, ss-counts, prop3.5, catalan321.
std::span<const VerificationTarget> verification_targets();

/// Runs one target by id, using its default range when n_max is absent.
/// Throws std::invalid_argument for unknown ids.
VerificationVerdict run_verification(std::string_view id, std::optional<std::size_t> n_max,
                                     const EnumerationOptions& options = {});

/// Closure of {patterns} under reverse, complement, and inverse.
std::set<PatternSet> symmetry_orbit(const PatternSet& patterns);

struct PairScanRow {
  PatternSet pair;
  bool set_balanced = false;
  /// Greatest n with imbalance zero at every 2 <= m <= n (1 if n = 2 fails).
  std::size_t balanced_through = 0;
  std::optional<std::size_t> first_failure;
  std::size_t orbit_id = 0;
  std::vector<std::int64_t> imbalances;  // n = 2 .. n_max
};

struct PairScan {
  std::size_t n_max = 0;
  std::vector<PairScanRow> rows;  // canonical pair order
  std::vector<std::vector<PatternSet>> orbits;  // indexed by orbit id
  /// Orbits whose members disagree on their balance outcome.
  std::vector<std::string> inconsistencies;
};

/// Every unordered pair of distinct length-4 patterns (276 rows), each
/// tallied for 2 <= n <= n_max and annotated with its symmetry orbit.
/// Requires 5 <= n_max <= 10.
PairScan scan_pairs_length4(std::size_t n_max, const EnumerationOptions& options = {});

struct ReportFormat {
  bool include_timing = true;
};

std::string to_json(const VerificationVerdict& verdict, ReportFormat format = {});
std::string to_json(const std::vector<VerificationVerdict>& verdicts, ReportFormat format = {});
std::string to_table(const VerificationVerdict& verdict, ReportFormat format = {});

/// Header "pattern_a,pattern_b,set_balanced,balanced_through,first_failing_n,orbit_id".
std::string to_csv(const PairScan& scan);
/// Orbit id -> members sidecar.
std::string orbits_to_json(const PairScan& scan);
std::string to_table(const PairScan& scan);

}  // namespace signbal
