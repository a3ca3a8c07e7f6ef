// Acceptance suite: one PASS/FAIL line per criterion, exact equality only.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "signbal/enumeration.hpp"
#include "signbal/experiments.hpp"
#include "signbal/signbalance.hpp"

using namespace signbal;

namespace {

struct Check {
  bool ok = true;
  std::string detail;

  void expect(bool cond, const std::string& what) {
    if (!cond && ok) detail = what;
    ok = ok && cond;
  }
};

PatternSet R(const char* s) { return PatternSet::parse(s); }

std::set<Permutation> perms(std::initializer_list<const char*> words) {
  std::set<Permutation> out;
  for (auto w : words) out.insert(Permutation::parse(w));
  return out;
}

EnumerationOptions sequential() { return {}; }

EnumerationOptions parallel4() {
  EnumerationOptions o;
  o.parallelism = 4;
  return o;
}

PatternSet subset_of_s3(unsigned mask) {
  const auto s3 = oracle::all_words(3);
  std::vector<Permutation> ps;
  for (unsigned i = 0; i < 6; ++i)
    if (mask >> i & 1U) ps.push_back(Permutation::from_word(s3[i]));
  return PatternSet(ps);
}

std::vector<PatternSet> listed_pairs() {
  return {R("1234,3214"), R("4321,4123"), R("4321,2341"), R("1234,1432"),
          R("1243,2143"), R("3421,3412"), R("4312,3412"), R("2134,2143"),
          R("1423,1432"), R("3241,2341"), R("4132,4123"), R("2314,3214")};
}

Check criterion_1() {
  Check c;
  std::set<Permutation> even;
  std::set<Permutation> odd;
  for (const auto& p : enumerate_pruned({4, R("123,321")}))
    (parity(p) == Parity::Even ? even : odd).insert(p);
  c.expect(even == perms({"2143", "3412"}), "even part of S_4(123,321)");
  c.expect(odd == perms({"3142", "2413"}), "odd part of S_4(123,321)");
  c.expect(enumerate_pruned({5, R("123,321")}).empty(), "S_5(123,321) nonempty");
  c.expect(verify_123_321_class().passed, "verdict failed");
  return c;
}

Check criterion_2() {
  Check c;
  const auto v = verify_s3_classification(9, sequential());
  c.expect(v.passed, "verdict failed");
  c.expect(v.n_lo == 2 && v.n_hi == 9, "range");
  c.expect(v.tally("subsets") == 63, "subset count");
  c.expect(v.tally("sign_balanced_sets") == 19, "sign-balanced set count");
  c.expect(v.tally("asserted_balanced") == 18, "asserted balanced count");
  c.expect(v.tally("asserted_failing") == 45, "asserted failing count");
  return c;
}

Check criterion_3() {
  Check c;
  const auto listed = listed_pairs();
  const auto lib = balanced_length4_pairs();
  c.expect(std::set<PatternSet>(listed.begin(), listed.end()) ==
               std::set<PatternSet>(lib.begin(), lib.end()),
           "pair list differs");
  for (const auto& r : listed)
    for (std::size_t n = 2; n <= 9; ++n)
      c.expect(signed_count({n, r}).imbalance() == 0, r.to_string() + " at n=" + std::to_string(n));
  return c;
}

Check criterion_4() {
  Check c;
  const auto r = R("1324,2143");
  for (std::size_t n = 2; n <= 4; ++n)
    c.expect(is_sign_balanced(signed_count({n, r})), "unbalanced at n=" + std::to_string(n));
  const auto members = enumerate_pruned({5, r});
  struct Golden {
    std::size_t i;
    std::set<Permutation> even;
    std::set<Permutation> odd;
  };
  const Golden golden[] = {
      {3, perms({"12534", "13542", "14523", "23514", "24531", "34512", "41532", "42513", "43521"}),
       perms({"12543", "14532", "23541", "24513", "34521", "41523", "42531", "43512"})},
      {4, perms({"12453", "23451", "31452", "34251", "41253", "42351", "43152"}),
       perms({"12354", "13452", "32451", "34152", "41352", "43251"})},
      {5, perms({"12345", "23145", "31245", "32415", "34125", "42135", "43215"}),
       perms({"21345", "23415", "32145", "34215", "41235", "42315", "43125"})},
  };
  for (const auto& g : golden) {
    std::set<Permutation> even;
    std::set<Permutation> odd;
    for (const auto& p : slice_by_max_position(members, g.i))
      (parity(p) == Parity::Even ? even : odd).insert(p);
    c.expect(even == g.even && odd == g.odd, "slice " + std::to_string(g.i));
  }
  c.expect(signed_count({5, r}).imbalance() == 2, "imbalance at n=5");
  c.expect(!is_sign_balanced(signed_count({5, R("4231,3412")})), "S_5(4231,3412) balanced");
  c.expect(verify_1324_2143_counterexample().passed, "verdict failed");
  return c;
}

Check criterion_5() {
  Check c;
  const auto v = verify_four_pattern_counts(9, sequential());
  c.expect(v.passed, "verdict failed");
  c.expect(v.tally("families") == 15, "family count");
  c.expect(class_cardinality({4, R("123,321,132,213")}) == 1, "S_4(123,321,132,213)");
  c.expect(class_cardinality({4, R("123,321,231,312")}) == 1, "S_4(123,321,231,312)");
  return c;
}

Check criterion_6() {
  Check c;
  const std::uint64_t expected[] = {1, 2, 5, 14, 42};
  for (std::size_t m = 1; m <= 5; ++m) {
    c.expect(oracle::catalan_binomial(m) == expected[m - 1], "binomial Catalan");
    c.expect(oracle::catalan_convolution(m) == expected[m - 1], "convolution Catalan");
    c.expect(catalan(m) == expected[m - 1], "library Catalan");
  }
  for (std::size_t n = 2; n <= 11; ++n) {
    const std::int64_t want = n % 2 == 0 ? 0 : static_cast<std::int64_t>(expected[(n - 1) / 2 - 1]);
    c.expect(signed_count({n, R("321")}).imbalance() == want, "n=" + std::to_string(n));
  }
  c.expect(verify_catalan_excess(11).passed, "verdict failed");
  return c;
}

Check criterion_7() {
  Check c;
  for (unsigned mask = 0; mask < 64; ++mask) {
    const auto r = subset_of_s3(mask);
    for (std::size_t n = 1; n <= 8; ++n)
      c.expect(enumerate_pruned({n, r}) == enumerate_oracle({n, r}),
               r.to_string() + " at n=" + std::to_string(n));
  }
  std::mt19937_64 rng(50);
  const auto s4 = oracle::all_words(4);
  for (int k = 0; k < 50; ++k) {
    const auto a = rng() % 24;
    auto b = rng() % 23;
    if (b >= a) ++b;
    const PatternSet r{Permutation::from_word(s4[a]), Permutation::from_word(s4[b])};
    for (std::size_t n = 1; n <= 7; ++n)
      c.expect(enumerate_pruned({n, r}) == enumerate_oracle({n, r}),
               r.to_string() + " at n=" + std::to_string(n));
  }
  return c;
}

Check criterion_8() {
  Check c;
  std::uint64_t trials = 0;
  auto identities = [&](const oracle::Word& w, std::mt19937_64* rng) {
    const auto p = Permutation::from_word(w);
    const std::size_t n = w.size();
    const auto tau = oracle::inversions(w);
    const auto pairs = n * (n - 1) / 2;
    c.expect(inversions(p) == tau, "inversion count");
    c.expect(noninversions(p) + inversions(p) == pairs, "theta + tau");
    const bool flip = pairs % 2 == 1;
    c.expect((parity(complement(p)) != parity(p)) == flip, "complement parity");
    c.expect((parity(reverse(p)) != parity(p)) == flip, "reverse parity");
    c.expect(parity(invert(p)) == parity(p), "inverse parity");
    for (std::size_t i = 1; i <= n; ++i)
      for (std::size_t j = i + 1; j <= n; ++j) {
        if (rng && (*rng)() % 8 != 0) continue;
        c.expect(parity(swap_positions(p, i, j)) != parity(p), "swap parity");
      }
    for (std::size_t i = 0; i <= n; ++i)
      c.expect(inversions(insert_max(p, i)) == tau + n - i, "max insertion");
    for (std::size_t l = 0; l <= 3; ++l)
      for (const auto& q : oracle::all_words(l))
        c.expect(inversions(skew_sum(p, Permutation::from_word(q))) ==
                     tau + oracle::inversions(q) + n * l,
                 "skew sum");
    if (n > 0) {
      const auto m = lis_lds(p);
      c.expect(m.lis == oracle::lis(w), "lis");
      for (std::size_t a = 1; a < n; ++a)
        for (std::size_t b = 1; a * b < n; ++b)
          c.expect(m.lis >= a + 1 || m.lds >= b + 1, "monotone subsequence bound");
    }
    ++trials;
  };
  for (std::size_t n = 0; n <= 7; ++n)
    for (const auto& w : oracle::all_words(n)) identities(w, nullptr);
  std::mt19937_64 rng(8);
  for (int k = 0; k < 10000; ++k) identities(oracle::random_word(8 + k % 13, rng), &rng);

  for (unsigned mask = 1; mask < 64; ++mask) {
    const auto r = subset_of_s3(mask);
    const std::pair<Symmetry, Permutation (*)(const Permutation&)> maps[] = {
        {Symmetry::Reverse, &reverse}, {Symmetry::Complement, &complement}, {Symmetry::Inverse, &invert}};
    for (std::size_t n = 1; n <= 7; ++n) {
      const auto base = enumerate_pruned({n, r});
      for (const auto& [sym, f] : maps) {
        std::set<Permutation> image;
        for (const auto& p : base) image.insert(f(p));
        const auto other = enumerate_pruned({n, transform_set(r, sym)});
        c.expect(image == std::set<Permutation>(other.begin(), other.end()),
                 "class identity for " + r.to_string());
      }
    }
  }
  c.expect(trials >= 10000, "too few trials");
  if (c.ok) c.detail = std::to_string(trials) + " permutations";
  return c;
}

Check criterion_9() {
  Check c;
  for (const auto& r : listed_pairs()) {
    for (std::size_t n = 2; n <= 9; ++n) {
      c.expect(signed_count({n, r}, sequential()) == signed_count({n, r}, parallel4()),
               r.to_string() + " at n=" + std::to_string(n));
    }
    c.expect(to_json(balance_over_range(r, 2, 9, sequential())) ==
                 to_json(balance_over_range(r, 2, 9, parallel4())),
             "balance report for " + r.to_string());
  }
  const ReportFormat no_timing{false};
  c.expect(to_json(verify_length4_pairs(9, sequential()), no_timing) ==
               to_json(verify_length4_pairs(9, parallel4()), no_timing),
           "verdict JSON");
  return c;
}

Check criterion_10() {
  Check c;
  const auto scan = scan_pairs_length4(7, parallel4());
  c.expect(scan.rows.size() == 276, "row count");
  const auto listed = listed_pairs();
  const std::set<PatternSet> twelve(listed.begin(), listed.end());
  std::size_t seen = 0;
  for (const auto& row : scan.rows) {
    if (twelve.count(row.pair)) {
      ++seen;
      c.expect(row.balanced_through == 7 && !row.first_failure, row.pair.to_string());
    }
    if (row.pair == R("1324,2143")) c.expect(row.first_failure == 5, "1324,2143 failure point");
  }
  c.expect(seen == 12, "listed pairs missing from scan");
  c.expect(scan.inconsistencies.empty(), "orbit inconsistency");
  std::vector<std::optional<std::size_t>> verdict(scan.orbits.size());
  std::vector<bool> assigned(scan.orbits.size(), false);
  std::size_t members = 0;
  for (const auto& orbit : scan.orbits) {
    c.expect(8 % orbit.size() == 0, "orbit size");
    members += orbit.size();
  }
  c.expect(members == 276, "orbits do not partition the pairs");
  for (const auto& row : scan.rows) {
    if (!assigned[row.orbit_id]) {
      verdict[row.orbit_id] = row.first_failure;
      assigned[row.orbit_id] = true;
    }
    c.expect(verdict[row.orbit_id] == row.first_failure, "verdict varies within orbit");
  }
  return c;
}

struct Criterion {
  int id;
  const char* title;
  double limit_ms;
  std::function<Check()> run;
};

}  // namespace

int main() {
  const Criterion criteria[] = {
      {1, "S_4(123,321) parity split and empty S_5(123,321)", 1e3, criterion_1},
      {2, "S3 classification over all 63 families, n <= 9", 30e3, criterion_2},
      {3, "twelve balanced length-4 pairs, n <= 9", 120e3, criterion_3},
      {4, "S_5(1324,2143) slices and imbalance", 1e3, criterion_4},
      {5, "four-pattern class sizes", 10e3, criterion_5},
      {6, "Catalan excess of S_n(321), n <= 11", 60e3, criterion_6},
      {7, "pruned search equals brute force", 60e3, criterion_7},
      {8, "permutation identities", 600e3, criterion_8},
      {9, "determinism at parallelism 1 and 4", 600e3, criterion_9},
      {10, "pair scan at n_max = 7", 180e3, criterion_10},
  };
  int failed = 0;
  for (const auto& cr : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Check check;
    try {
      check = cr.run();
    } catch (const std::exception& e) {
      check.ok = false;
      check.detail = std::string("exception: ") + e.what();
    }
    const double ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = ms < cr.limit_ms;
    if (!in_time && check.ok) check.detail = "over time limit";
    const bool pass = check.ok && in_time;
    if (!pass) ++failed;
    char timing[64];
    std::snprintf(timing, sizeof timing, "%.0f ms / limit %.0f ms", ms, cr.limit_ms);
    std::cout << (pass ? "[PASS]" : "[FAIL]") << " criterion " << cr.id << ": " << cr.title << " ("
              << timing << ")";
    if (!check.detail.empty()) std::cout << " - " << check.detail;
    std::cout << '\n';
  }
  std::cout << (10 - failed) << "/10 criteria passed\n";
  return failed == 0 ? 0 : 1;
}
