#include "signbal/signbalance.hpp"

#include <iomanip>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace signbal {

bool is_sign_balanced(const SignedCount& count) noexcept { return count.even == count.odd; }

SignedCount tally(std::span<const Permutation> permutations) {
  SignedCount out;
  for (const auto& p : permutations) (parity(p) == Parity::Even ? out.even : out.odd) += 1;
  return out;
}

bool pattern_set_is_sign_balanced(const PatternSet& patterns) {
  return is_sign_balanced(tally(patterns.patterns()));
}

std::optional<std::size_t> BalanceReport::first_unbalanced() const noexcept {
  for (const auto& row : rows) {
    if (!row.balanced()) return row.n;
  }
  return std::nullopt;
}

BalanceReport balance_over_range(const PatternSet& patterns, std::size_t n_lo, std::size_t n_hi,
                                 const EnumerationOptions& options) {
  if (n_lo < 2 || n_lo > n_hi) {
    throw std::invalid_argument("balance range must satisfy 2 <= n_lo <= n_hi (got " +
                                std::to_string(n_lo) + ".." + std::to_string(n_hi) + ")");
  }
  BalanceReport report{patterns, n_lo, n_hi, {}};
  for (std::size_t n = n_lo; n <= n_hi; ++n) {
    report.rows.push_back({n, signed_count({n, patterns}, options)});
  }
  return report;
}

std::uint64_t catalan(std::size_t m) {
  if (m > kMaxCatalanIndex) {
    throw std::out_of_range("catalan index limited to m <= " + std::to_string(kMaxCatalanIndex));
  }
  // C_{k+1} = C_k * 2(2k+1) / (k+2); the division is exact and the product
  // stays below 2^63 for k < 30.
  std::uint64_t c = 1;
  for (std::uint64_t k = 0; k < m; ++k) c = c * 2 * (2 * k + 1) / (k + 2);
  return c;
}

bool check_catalan_excess_321(std::size_t n, const EnumerationOptions& options) {
  if (n < 2) throw std::invalid_argument("catalan excess check requires n >= 2");
  const auto count = signed_count({n, PatternSet{Permutation::from_word({3, 2, 1})}}, options);
  const std::int64_t expected = n % 2 == 0 ? 0 : static_cast<std::int64_t>(catalan((n - 1) / 2));
  return count.imbalance() == expected;
}

std::string to_csv(const BalanceReport& report) {
  std::ostringstream out;
  out << "n,even,odd,imbalance,balanced\n";
  for (const auto& row : report.rows) {
    out << row.n << ',' << row.count.even << ',' << row.count.odd << ',' << row.imbalance() << ','
        << (row.balanced() ? "true" : "false") << '\n';
  }
  return out.str();
}

std::string to_json(const BalanceReport& report) {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const auto& row : report.rows) {
    rows.push_back({{"n", row.n},
                    {"even", row.count.even},
                    {"odd", row.count.odd},
                    {"imbalance", row.imbalance()},
                    {"balanced", row.balanced()}});
  }
  const auto first = report.first_unbalanced();
  nlohmann::ordered_json doc = {
      {"schema_version", 1},
      {"kind", "balance_report"},
      {"patterns", report.patterns.to_string()},
      {"range", {report.n_lo, report.n_hi}},
      {"first_unbalanced_n", first ? nlohmann::ordered_json(*first) : nlohmann::ordered_json()},
      {"rows", rows},
  };
  return doc.dump();
}

std::string to_table(const BalanceReport& report) {
  std::ostringstream out;
  out << "patterns: " << (report.patterns.empty() ? "(none)" : report.patterns.to_string())
      << "\n";
  out << std::setw(4) << "n" << std::setw(14) << "even" << std::setw(14) << "odd" << std::setw(12)
      << "imbalance"
      << "  balanced\n";
  for (const auto& row : report.rows) {
    out << std::setw(4) << row.n << std::setw(14) << row.count.even << std::setw(14)
        << row.count.odd << std::setw(12) << row.imbalance() << "  "
        << (row.balanced() ? "yes" : "no") << "\n";
  }
  if (const auto first = report.first_unbalanced()) {
    out << "first unbalanced n: " << *first << "\n";
  } else {
    out << "balanced for " << report.n_lo << " <= n <= " << report.n_hi << "\n";
  }
  return out.str();
}

}  // namespace signbal
