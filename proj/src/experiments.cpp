#include "signbal/experiments.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <chrono>
#include <cmath>
#include <deque>
#include <iomanip>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "signbal/detail/parallel.hpp"
#include "signbal/signbalance.hpp"

namespace signbal {

namespace {

using Clock = std::chrono::steady_clock;

class Stopwatch {
 public:
  double elapsed_ms() const {
    return std::chrono::duration<double, std::milli>(Clock::now() - start_).count();
  }

 private:
  Clock::time_point start_ = Clock::now();
};

PatternSet patterns_of(std::initializer_list<std::string_view> words) {
  std::vector<Permutation> out;
  for (auto w : words) out.push_back(Permutation::parse(w));
  return PatternSet(std::move(out));
}

std::vector<Permutation> all_permutations(std::size_t n) {
  std::vector<Permutation> out;
  std::vector<int> word(n);
  std::iota(word.begin(), word.end(), 1);
  do {
    out.push_back(make_unchecked(word));
  } while (std::next_permutation(word.begin(), word.end()));
  return out;
}

// Outer loops parallelize over cases; each class count then runs alone.
EnumerationOptions single_threaded(EnumerationOptions options) {
  options.parallelism = 1;
  return options;
}

std::string describe(const SignedCount& c) {
  return "even=" + std::to_string(c.even) + " odd=" + std::to_string(c.odd);
}

std::string join_words(const std::vector<Permutation>& perms) {
  std::string out = "{";
  for (std::size_t i = 0; i < perms.size(); ++i) {
    if (i > 0) out += ',';
    out += perms[i].to_string();
  }
  return out + "}";
}

void require_range(std::string_view name, std::size_t n_max, std::size_t lo, std::size_t hi) {
  if (n_max < lo || n_max > hi) {
    throw std::invalid_argument(std::string(name) + " requires " + std::to_string(lo) +
                                " <= n_max <= " + std::to_string(hi) + " (got " +
                                std::to_string(n_max) + ")");
  }
}

// Per-n tallies for n = n_lo..n_hi, one pattern set per work item.
std::vector<std::vector<SignedCount>> tally_families(const std::vector<PatternSet>& families,
                                                     std::size_t n_lo, std::size_t n_hi,
                                                     const EnumerationOptions& options) {
  std::vector<std::vector<SignedCount>> out(families.size());
  const auto inner = single_threaded(options);
  detail::parallel_for(families.size(), options.parallelism, [&](std::size_t i) {
    for (std::size_t n = n_lo; n <= n_hi; ++n) {
      out[i].push_back(signed_count({n, families[i]}, inner));
    }
  });
  return out;
}

std::vector<Permutation> sorted_words(std::initializer_list<std::string_view> words) {
  std::vector<Permutation> out;
  for (auto w : words) out.push_back(Permutation::parse(w));
  std::sort(out.begin(), out.end());
  return out;
}

// Expected max-position slices of S_5(1324,2143), split by parity.
struct ExpectedSlice {
  std::size_t position;
  std::vector<Permutation> even;
  std::vector<Permutation> odd;
};

std::vector<ExpectedSlice> expected_1324_2143_slices() {
  return {
      {3,
       sorted_words({"12534", "13542", "14523", "23514", "24531", "34512", "41532", "42513",
                     "43521"}),
       sorted_words({"12543", "14532", "23541", "24513", "34521", "41523", "42531", "43512"})},
      {4, sorted_words({"12453", "23451", "31452", "34251", "41253", "42351", "43152"}),
       sorted_words({"12354", "13452", "32451", "34152", "41352", "43251"})},
      {5, sorted_words({"12345", "23145", "31245", "32415", "34125", "42135", "43215"}),
       sorted_words({"21345", "23415", "32145", "34215", "41235", "42315", "43125"})},
  };
}

// Closure of {identity, 23..n1, n(n-1)..312} under reversal and complement.
std::set<Permutation> two_member_candidates(std::size_t n) {
  std::vector<int> rotated(n);
  std::iota(rotated.begin(), rotated.end(), 2);
  rotated.back() = 1;
  std::vector<int> tail;
  for (int v = static_cast<int>(n); v >= 3; --v) tail.push_back(v);
  tail.push_back(1);
  tail.push_back(2);
  std::set<Permutation> out;
  std::deque<Permutation> frontier{Permutation::identity(n), Permutation::from_word(rotated),
                                   Permutation::from_word(tail)};
  while (!frontier.empty()) {
    auto p = frontier.front();
    frontier.pop_front();
    if (!out.insert(p).second) continue;
    frontier.push_back(reverse(p));
    frontier.push_back(complement(p));
  }
  return out;
}

template <class Body>
VerificationVerdict timed(std::string name, std::string claim, std::size_t n_lo, std::size_t n_hi,
                          Body&& body) {
  Stopwatch watch;
  VerificationVerdict verdict;
  verdict.name = std::move(name);
  verdict.claim = std::move(claim);
  verdict.n_lo = n_lo;
  verdict.n_hi = n_hi;
  body(verdict);
  verdict.elapsed_ms = watch.elapsed_ms();
  return verdict;
}

}  // namespace

void VerificationVerdict::record_failure(FailureWitness witness) {
  passed = false;
  if (witnesses.size() < kWitnessCap) {
    witnesses.push_back(std::move(witness));
  } else {
    ++suppressed_witnesses;
  }
}

void VerificationVerdict::set_tally(std::string key, std::int64_t value) {
  for (auto& [k, v] : tallies) {
    if (k == key) {
      v = value;
      return;
    }
  }
  tallies.emplace_back(std::move(key), value);
}

std::optional<std::int64_t> VerificationVerdict::tally(std::string_view key) const {
  for (const auto& [k, v] : tallies) {
    if (k == key) return v;
  }
  return std::nullopt;
}

VerificationVerdict verify_s3_classification(std::size_t n_max, const EnumerationOptions& options) {
  require_range("thm1.2", n_max, 4, kMaxExperimentN);
  return timed(
      "thm1.2",
      "for nonempty R in S3: S_n(R) balanced for all n iff R balanced and R != {132,213,231,312}",
      2, n_max, [&](VerificationVerdict& v) {
        const auto s3 = all_permutations(3);
        const PatternSet excluded = patterns_of({"132", "213", "231", "312"});
        std::vector<PatternSet> families;
        for (unsigned mask = 1; mask < (1U << s3.size()); ++mask) {
          std::vector<Permutation> members;
          for (std::size_t b = 0; b < s3.size(); ++b) {
            if (mask & (1U << b)) members.push_back(s3[b]);
          }
          families.emplace_back(std::move(members));
        }
        std::sort(families.begin(), families.end());
        const auto counts = tally_families(families, 2, n_max, options);

        std::int64_t set_balanced = 0, asserted_balanced = 0, asserted_failing = 0;
        for (std::size_t i = 0; i < families.size(); ++i) {
          const auto& family = families[i];
          const bool balanced_set = pattern_set_is_sign_balanced(family);
          set_balanced += balanced_set ? 1 : 0;
          const bool expect_balanced = balanced_set && family != excluded;
          std::optional<std::size_t> first_failure;
          for (std::size_t j = 0; j < counts[i].size(); ++j) {
            if (!is_sign_balanced(counts[i][j])) {
              first_failure = j + 2;
              break;
            }
          }
          if (expect_balanced) {
            ++asserted_balanced;
            if (first_failure) {
              v.record_failure({family.to_string(), *first_failure, "balanced",
                                describe(counts[i][*first_failure - 2])});
            }
          } else {
            ++asserted_failing;
            if (!first_failure) {
              v.record_failure({family.to_string(), n_max, "unbalanced for some n <= 4",
                                "balanced for all checked n"});
            } else if (*first_failure > 4) {
              v.record_failure({family.to_string(), *first_failure, "unbalanced for some n <= 4",
                                "first unbalanced at n = " + std::to_string(*first_failure)});
            }
          }
        }
        v.cases = families.size();
        v.set_tally("subsets", static_cast<std::int64_t>(families.size()));
        v.set_tally("sign_balanced_sets", set_balanced);
        v.set_tally("asserted_balanced", asserted_balanced);
        v.set_tally("asserted_failing", asserted_failing);
      });
}

std::vector<PatternSet> balanced_length4_pairs() {
  return {
      patterns_of({"1234", "3214"}), patterns_of({"4321", "4123"}), patterns_of({"4321", "2341"}),
      patterns_of({"1234", "1432"}), patterns_of({"1243", "2143"}), patterns_of({"3421", "3412"}),
      patterns_of({"4312", "3412"}), patterns_of({"2134", "2143"}), patterns_of({"1423", "1432"}),
      patterns_of({"3241", "2341"}), patterns_of({"4132", "4123"}), patterns_of({"2314", "3214"}),
  };
}

VerificationVerdict verify_length4_pairs(std::size_t n_max, const EnumerationOptions& options) {
  require_range("thm1.3", n_max, 2, kMaxExperimentN);
  return timed("thm1.3", "the twelve listed length-4 pairs give balanced classes for every n", 2,
               n_max, [&](VerificationVerdict& v) {
                 const auto pairs = balanced_length4_pairs();
                 const auto counts = tally_families(pairs, 2, n_max, options);
                 for (std::size_t i = 0; i < pairs.size(); ++i) {
                   for (std::size_t j = 0; j < counts[i].size(); ++j) {
                     if (!is_sign_balanced(counts[i][j])) {
                       v.record_failure(
                           {pairs[i].to_string(), j + 2, "balanced", describe(counts[i][j])});
                     }
                   }
                 }
                 v.cases = pairs.size() * (n_max - 1);
                 v.set_tally("pairs", static_cast<std::int64_t>(pairs.size()));
               });
}

VerificationVerdict verify_1324_2143_counterexample(const EnumerationOptions& options) {
  return timed(
      "ex3.9", "S_n(1324,2143) and S_n(4231,3412) are unbalanced for some n > 1", 2, 5,
      [&](VerificationVerdict& v) {
        const PatternSet base = patterns_of({"1324", "2143"});
        for (std::size_t n = 2; n <= 4; ++n) {
          const auto c = signed_count({n, base}, options);
          if (!is_sign_balanced(c)) v.record_failure({base.to_string(), n, "balanced", describe(c)});
          ++v.cases;
        }

        const auto members = enumerate_class({5, base}, options);
        const auto total = tally(members);
        ++v.cases;
        if (total.imbalance() != 2) {
          v.record_failure({base.to_string(), 5, "imbalance 2", describe(total)});
        }
        v.set_tally("imbalance_n5", total.imbalance());

        for (std::size_t i = 1; i <= 2; ++i) {
          const auto slice = slice_by_max_position(members, i);
          const auto c = tally(slice);
          ++v.cases;
          if (!is_sign_balanced(c)) {
            v.record_failure({"slice " + std::to_string(i), 5, "balanced", describe(c)});
          }
        }
        for (const auto& expected : expected_1324_2143_slices()) {
          const auto slice = slice_by_max_position(members, expected.position);
          std::vector<Permutation> even, odd;
          for (const auto& p : slice) (parity(p) == Parity::Even ? even : odd).push_back(p);
          const std::string label = "slice " + std::to_string(expected.position);
          ++v.cases;
          if (even != expected.even) {
            v.record_failure({label + " even part", 5, join_words(expected.even), join_words(even)});
          }
          if (odd != expected.odd) {
            v.record_failure({label + " odd part", 5, join_words(expected.odd), join_words(odd)});
          }
          v.set_tally("slice" + std::to_string(expected.position) + "_size",
                      static_cast<std::int64_t>(slice.size()));
          v.set_tally("slice" + std::to_string(expected.position) + "_excess",
                      tally(slice).imbalance());
        }

        const PatternSet mirrored = patterns_of({"4231", "3412"});
        ++v.cases;
        if (transform_set(base, Symmetry::Reverse) != mirrored) {
          v.record_failure({mirrored.to_string(), 5, "reversal of " + base.to_string(),
                            transform_set(base, Symmetry::Reverse).to_string()});
        }
        const auto mirrored_count = signed_count({5, mirrored}, options);
        ++v.cases;
        if (is_sign_balanced(mirrored_count)) {
          v.record_failure({mirrored.to_string(), 5, "unbalanced", describe(mirrored_count)});
        }
        v.set_tally("mirrored_imbalance_n5", mirrored_count.imbalance());
      });
}

VerificationVerdict verify_four_pattern_counts(std::size_t n_max,
                                               const EnumerationOptions& options) {
  require_range("ss-counts", n_max, 5, kMaxExperimentN);
  return timed(
      "ss-counts", "class sizes of S_n(R) for every 4-element R in S3", 1, n_max,
      [&](VerificationVerdict& v) {
        const auto s3 = all_permutations(3);
        const auto id3 = Permutation::identity(3);
        const auto rev3 = reverse(id3);
        const std::array<PatternSet, 2> exceptional{patterns_of({"123", "321", "132", "213"}),
                                                    patterns_of({"123", "321", "231", "312"})};
        const auto inner = single_threaded(options);
        std::vector<PatternSet> families;
        for (unsigned mask = 0; mask < (1U << 6); ++mask) {
          if (std::popcount(mask) != 4) continue;
          std::vector<Permutation> members;
          for (std::size_t b = 0; b < 6; ++b) {
            if (mask & (1U << b)) members.push_back(s3[b]);
          }
          families.emplace_back(std::move(members));
        }
        std::sort(families.begin(), families.end());

        std::vector<std::vector<FailureWitness>> failures(families.size());
        std::vector<std::uint64_t> cases(families.size(), 0);
        detail::parallel_for(families.size(), options.parallelism, [&](std::size_t i) {
          const auto& family = families[i];
          const std::string subject = family.to_string();
          auto expect_size = [&](std::size_t n, std::size_t expected) {
            const auto members = enumerate_class({n, family}, inner);
            ++cases[i];
            if (members.size() != expected) {
              failures[i].push_back({subject, n, "size " + std::to_string(expected),
                                     "size " + std::to_string(members.size()) + " " +
                                         join_words(members)});
            }
            return members;
          };
          if (family.contains(id3) && family.contains(rev3)) {
            expect_size(1, 1);
            expect_size(2, 2);
            const bool special = family == exceptional[0] || family == exceptional[1];
            expect_size(4, special ? 1 : 0);
            for (std::size_t n = 5; n <= n_max; ++n) expect_size(n, 0);
          } else {
            for (std::size_t n = 2; n <= n_max; ++n) {
              const auto members = expect_size(n, 2);
              const auto candidates = two_member_candidates(n);
              for (const auto& m : members) {
                if (!candidates.contains(m)) {
                  failures[i].push_back({subject, n, "member among the listed candidates",
                                         m.to_string()});
                }
              }
            }
          }
        });
        for (std::size_t i = 0; i < families.size(); ++i) {
          v.cases += cases[i];
          for (auto& f : failures[i]) v.record_failure(std::move(f));
        }
        v.set_tally("families", static_cast<std::int64_t>(families.size()));
      });
}

VerificationVerdict verify_123_321_class(const EnumerationOptions& options) {
  return timed("prop3.5", "S_4(123,321) splits as {2143,3412} even and {3142,2413} odd; empty from n=5",
               4, 5, [&](VerificationVerdict& v) {
                 const PatternSet r = patterns_of({"123", "321"});
                 const auto members = enumerate_class({4, r}, options);
                 std::vector<Permutation> even, odd;
                 for (const auto& p : members) (parity(p) == Parity::Even ? even : odd).push_back(p);
                 const auto expected_even = sorted_words({"2143", "3412"});
                 const auto expected_odd = sorted_words({"3142", "2413"});
                 v.cases = 3;
                 if (even != expected_even) {
                   v.record_failure({"even part", 4, join_words(expected_even), join_words(even)});
                 }
                 if (odd != expected_odd) {
                   v.record_failure({"odd part", 4, join_words(expected_odd), join_words(odd)});
                 }
                 const auto size5 = class_cardinality({5, r}, options);
                 if (size5 != 0) {
                   v.record_failure({r.to_string(), 5, "empty", "size " + std::to_string(size5)});
                 }
               });
}

VerificationVerdict verify_catalan_excess(std::size_t n_max, const EnumerationOptions& options) {
  require_range("catalan321", n_max, 2, 12);
  return timed("catalan321",
               "imbalance(S_n(321)) is 0 for even n and C_((n-1)/2) for odd n", 2, n_max,
               [&](VerificationVerdict& v) {
                 const PatternSet r{Permutation::from_word({3, 2, 1})};
                 std::vector<SignedCount> counts(n_max + 1);
                 const auto inner = single_threaded(options);
                 detail::parallel_for(n_max - 1, options.parallelism, [&](std::size_t i) {
                   counts[i + 2] = signed_count({i + 2, r}, inner);
                 });
                 for (std::size_t n = 2; n <= n_max; ++n) {
                   const std::int64_t expected =
                       n % 2 == 0 ? 0 : static_cast<std::int64_t>(catalan((n - 1) / 2));
                   ++v.cases;
                   if (counts[n].imbalance() != expected) {
                     v.record_failure({r.to_string(), n, "imbalance " + std::to_string(expected),
                                       describe(counts[n])});
                   }
                 }
                 v.set_tally("size_at_n_max", static_cast<std::int64_t>(counts[n_max].total()));
               });
}

std::span<const VerificationTarget> verification_targets() {
  static const std::array<VerificationTarget, 6> targets{{
      {"thm1.2", "sign-balance classification of pattern sets inside S3", 9},
      {"thm1.3", "twelve balanced pairs of length-4 patterns", 9},
      {"ex3.9", "S_5(1324,2143) counterexample with max-position slices", std::nullopt},
      {"ss-counts", "class sizes for 4-element subsets of S3", 9},
      {"prop3.5", "even/odd parts of S_4(123,321)", std::nullopt},
      {"catalan321", "Catalan excess of S_n(321)", 11},
  }};
  return targets;
}

VerificationVerdict run_verification(std::string_view id, std::optional<std::size_t> n_max,
                                     const EnumerationOptions& options) {
  const auto targets = verification_targets();
  const auto it = std::find_if(targets.begin(), targets.end(),
                               [&](const VerificationTarget& t) { return t.id == id; });
  if (it == targets.end()) {
    throw std::invalid_argument("unknown verification target '" + std::string(id) + "'");
  }
  const std::size_t range = n_max.value_or(it->default_n_max.value_or(0));
  if (id == "thm1.2") return verify_s3_classification(range, options);
  if (id == "thm1.3") return verify_length4_pairs(range, options);
  if (id == "ex3.9") return verify_1324_2143_counterexample(options);
  if (id == "ss-counts") return verify_four_pattern_counts(range, options);
  if (id == "prop3.5") return verify_123_321_class(options);
  return verify_catalan_excess(range, options);
}

std::set<PatternSet> symmetry_orbit(const PatternSet& patterns) {
  std::set<PatternSet> orbit;
  std::deque<PatternSet> frontier{patterns};
  while (!frontier.empty()) {
    auto current = std::move(frontier.front());
    frontier.pop_front();
    if (orbit.contains(current)) continue;
    for (auto s : {Symmetry::Reverse, Symmetry::Complement, Symmetry::Inverse}) {
      frontier.push_back(transform_set(current, s));
    }
    orbit.insert(std::move(current));
  }
  return orbit;
}

PairScan scan_pairs_length4(std::size_t n_max, const EnumerationOptions& options) {
  require_range("scan", n_max, 5, 10);
  const auto s4 = all_permutations(4);
  PairScan scan;
  scan.n_max = n_max;
  for (std::size_t a = 0; a < s4.size(); ++a) {
    for (std::size_t b = a + 1; b < s4.size(); ++b) {
      auto& row = scan.rows.emplace_back();
      row.pair = PatternSet{s4[a], s4[b]};
    }
  }
  std::sort(scan.rows.begin(), scan.rows.end(),
            [](const PairScanRow& x, const PairScanRow& y) { return x.pair < y.pair; });

  std::map<PatternSet, std::size_t> orbit_of;
  for (auto& row : scan.rows) {
    if (const auto it = orbit_of.find(row.pair); it != orbit_of.end()) {
      row.orbit_id = it->second;
      continue;
    }
    const auto orbit = symmetry_orbit(row.pair);
    row.orbit_id = scan.orbits.size();
    for (const auto& member : orbit) orbit_of.emplace(member, row.orbit_id);
    scan.orbits.emplace_back(orbit.begin(), orbit.end());
  }

  std::vector<PatternSet> pairs;
  for (const auto& row : scan.rows) pairs.push_back(row.pair);
  const auto counts = tally_families(pairs, 2, n_max, options);
  for (std::size_t i = 0; i < scan.rows.size(); ++i) {
    auto& row = scan.rows[i];
    row.set_balanced = pattern_set_is_sign_balanced(row.pair);
    row.balanced_through = n_max;
    for (std::size_t j = 0; j < counts[i].size(); ++j) {
      row.imbalances.push_back(counts[i][j].imbalance());
      if (!row.first_failure && !is_sign_balanced(counts[i][j])) {
        row.first_failure = j + 2;
        row.balanced_through = j + 1;
      }
    }
  }

  // Each orbit member's class is the image of the representative's class
  // under a symmetry, so the first failing n must agree across the orbit.
  std::vector<const PairScanRow*> representative(scan.orbits.size(), nullptr);
  for (const auto& row : scan.rows) {
    auto& rep = representative[row.orbit_id];
    if (!rep) {
      rep = &row;
    } else if (rep->first_failure != row.first_failure) {
      scan.inconsistencies.push_back("orbit " + std::to_string(row.orbit_id) + ": " +
                                     rep->pair.to_string() + " vs " + row.pair.to_string());
    }
  }
  return scan;
}

std::string to_json(const VerificationVerdict& verdict, ReportFormat format) {
  nlohmann::ordered_json witnesses = nlohmann::ordered_json::array();
  for (const auto& w : verdict.witnesses) {
    witnesses.push_back(
        {{"subject", w.subject}, {"n", w.n}, {"expected", w.expected}, {"actual", w.actual}});
  }
  nlohmann::ordered_json tallies = nlohmann::ordered_json::object();
  for (const auto& [k, v] : verdict.tallies) tallies[k] = v;
  nlohmann::ordered_json doc = {
      {"schema_version", 1},
      {"kind", "verdict"},
      {"name", verdict.name},
      {"claim", verdict.claim},
      {"passed", verdict.passed},
      {"range", {verdict.n_lo, verdict.n_hi}},
      {"cases", verdict.cases},
      {"tallies", tallies},
      {"witnesses", witnesses},
      {"suppressed_witnesses", verdict.suppressed_witnesses},
  };
  if (format.include_timing) doc["elapsed_ms"] = std::llround(verdict.elapsed_ms);
  return doc.dump();
}

std::string to_json(const std::vector<VerificationVerdict>& verdicts, ReportFormat format) {
  nlohmann::ordered_json list = nlohmann::ordered_json::array();
  bool passed = true;
  for (const auto& v : verdicts) {
    list.push_back(nlohmann::ordered_json::parse(to_json(v, format)));
    passed = passed && v.passed;
  }
  nlohmann::ordered_json doc = {
      {"schema_version", 1}, {"kind", "verdicts"}, {"passed", passed}, {"verdicts", list}};
  return doc.dump();
}

std::string to_table(const VerificationVerdict& verdict, ReportFormat format) {
  std::ostringstream out;
  out << (verdict.passed ? "PASS" : "FAIL") << "  " << verdict.name << "  n=" << verdict.n_lo
      << ".." << verdict.n_hi << "  cases=" << verdict.cases;
  if (format.include_timing) {
    out << "  " << std::fixed << std::setprecision(1) << verdict.elapsed_ms << " ms";
  }
  out << "\n  " << verdict.claim << "\n";
  for (const auto& [k, v] : verdict.tallies) out << "  " << k << " = " << v << "\n";
  for (const auto& w : verdict.witnesses) {
    out << "  witness: " << w.subject << " at n=" << w.n << ": expected " << w.expected
        << ", got " << w.actual << "\n";
  }
  if (verdict.suppressed_witnesses > 0) {
    out << "  (" << verdict.suppressed_witnesses << " further witnesses suppressed)\n";
  }
  return out.str();
}

std::string to_csv(const PairScan& scan) {
  std::ostringstream out;
  out << "pattern_a,pattern_b,set_balanced,balanced_through,first_failing_n,orbit_id\n";
  for (const auto& row : scan.rows) {
    const auto words = row.pair.patterns();
    out << words[0].to_string() << ',' << words[1].to_string() << ','
        << (row.set_balanced ? "true" : "false") << ',' << row.balanced_through << ',';
    if (row.first_failure) out << *row.first_failure;
    out << ',' << row.orbit_id << '\n';
  }
  return out.str();
}

std::string orbits_to_json(const PairScan& scan) {
  nlohmann::ordered_json orbits = nlohmann::ordered_json::array();
  for (std::size_t id = 0; id < scan.orbits.size(); ++id) {
    nlohmann::ordered_json members = nlohmann::ordered_json::array();
    for (const auto& m : scan.orbits[id]) members.push_back(m.to_string());
    orbits.push_back({{"id", id}, {"size", scan.orbits[id].size()}, {"members", members}});
  }
  nlohmann::ordered_json doc = {{"schema_version", 1},
                                {"kind", "pair_scan_orbits"},
                                {"n_max", scan.n_max},
                                {"orbits", orbits},
                                {"inconsistencies", scan.inconsistencies}};
  return doc.dump();
}

std::string to_table(const PairScan& scan) {
  std::ostringstream out;
  std::size_t balanced = 0;
  for (const auto& row : scan.rows) balanced += row.first_failure ? 0 : 1;
  out << scan.rows.size() << " pairs, " << scan.orbits.size() << " orbits, " << balanced
      << " balanced through n=" << scan.n_max << "\n";
  for (const auto& row : scan.rows) {
    if (row.first_failure) continue;
    out << "  " << row.pair.to_string() << "  orbit " << row.orbit_id
        << (row.set_balanced ? "" : "  (pattern set unbalanced)") << "\n";
  }
  for (const auto& issue : scan.inconsistencies) out << "  inconsistent " << issue << "\n";
  return out.str();
}

}  // namespace signbal
