#include <algorithm>
#include <map>
#include <stdexcept>

#include "doctest.h"
#include "oracles.hpp"
#include "signbal/experiments.hpp"
#include "signbal/signbalance.hpp"

using signbal::PatternSet;
using signbal::ReportFormat;

namespace {

PatternSet R(const char* s) { return PatternSet::parse(s); }

}  // namespace

TEST_CASE("S3 classification") {
  const auto v = signbal::verify_s3_classification(6);
  CHECK(v.passed);
  CHECK(v.cases == 63);
  CHECK(v.tally("subsets") == 63);
  CHECK(v.tally("sign_balanced_sets") == 19);
  CHECK(v.tally("asserted_balanced") == 18);
  CHECK(v.tally("asserted_failing") == 45);
  CHECK(v.witnesses.empty());
  CHECK_THROWS_AS(signbal::verify_s3_classification(3), std::invalid_argument);
  CHECK_THROWS_AS(signbal::verify_s3_classification(13), std::invalid_argument);
}

TEST_CASE("balanced length-4 pairs") {
  const auto pairs = signbal::balanced_length4_pairs();
  CHECK(pairs.size() == 12);
  CHECK(std::find(pairs.begin(), pairs.end(), R("1243,2143")) != pairs.end());
  CHECK(std::find(pairs.begin(), pairs.end(), R("1324,2143")) == pairs.end());
  for (const auto& p : pairs) CHECK(signbal::pattern_set_is_sign_balanced(p));
  const auto v = signbal::verify_length4_pairs(7);
  CHECK(v.passed);
  CHECK(v.cases == 72);
}

TEST_CASE("1324,2143 counterexample") {
  const auto v = signbal::verify_1324_2143_counterexample();
  CHECK(v.passed);
  CHECK(v.tally("imbalance_n5") == 2);
  CHECK(v.tally("slice3_size") == 17);
  CHECK(v.tally("slice4_size") == 13);
  CHECK(v.tally("slice5_size") == 14);
  CHECK(v.tally("slice3_excess") == 1);
  CHECK(v.tally("slice4_excess") == 1);
  CHECK(v.tally("slice5_excess") == 0);
  CHECK(v.tally("mirrored_imbalance_n5") == 2);
  CHECK_FALSE(v.tally("missing"));
}

TEST_CASE("four-pattern counts, 123-321 class, Catalan excess") {
  CHECK(signbal::verify_four_pattern_counts(7).passed);
  CHECK(signbal::verify_four_pattern_counts(7).tally("families") == 15);
  CHECK_THROWS_AS(signbal::verify_four_pattern_counts(4), std::invalid_argument);
  CHECK(signbal::verify_123_321_class().passed);
  CHECK(signbal::verify_catalan_excess(9).passed);
  CHECK(signbal::verify_catalan_excess(9).cases == 8);
}

TEST_CASE("verification targets") {
  std::vector<std::string_view> ids;
  for (const auto& t : signbal::verification_targets()) ids.push_back(t.id);
  CHECK(ids == std::vector<std::string_view>{"thm1.2", "thm1.3", "ex3.9", "ss-counts", "prop3.5",
                                             "catalan321"});
  CHECK(signbal::run_verification("thm1.3", 6).n_hi == 6);
  CHECK(signbal::run_verification("ex3.9", std::nullopt).passed);
  CHECK_THROWS_AS(signbal::run_verification("nope", std::nullopt), std::invalid_argument);
}

TEST_CASE("witness capping") {
  signbal::VerificationVerdict v;
  for (int i = 0; i < 25; ++i) v.record_failure({"x", 5, "a", "b"});
  CHECK_FALSE(v.passed);
  CHECK(v.witnesses.size() == signbal::kWitnessCap);
  CHECK(v.suppressed_witnesses == 5);
  v.set_tally("k", 1);
  v.set_tally("k", 2);
  CHECK(v.tally("k") == 2);
  CHECK(v.tallies.size() == 1);
}

TEST_CASE("verdict serialization is reproducible") {
  const ReportFormat no_timing{false};
  const auto a = signbal::to_json(signbal::verify_catalan_excess(7), no_timing);
  const auto b = signbal::to_json(signbal::verify_catalan_excess(7), no_timing);
  CHECK(a == b);
  CHECK(a ==
        R"({"schema_version":1,"kind":"verdict","name":"catalan321","claim":"imbalance(S_n(321)) is 0 )"
        R"(for even n and C_((n-1)/2) for odd n","passed":true,"range":[2,7],"cases":6,)"
        R"("tallies":{"size_at_n_max":429},"witnesses":[],"suppressed_witnesses":0})");
  CHECK(signbal::to_json(signbal::verify_catalan_excess(7)).find("elapsed_ms") != std::string::npos);
  CHECK(signbal::to_table(signbal::verify_catalan_excess(7), no_timing).rfind("PASS  catalan321", 0) == 0);
}

TEST_CASE("symmetry orbits") {
  const auto o = signbal::symmetry_orbit(R("1234,3214"));
  CHECK(o.count(R("4321,4123")));
  CHECK(o.count(R("4321,2341")));
  CHECK(o.count(R("1234,1432")));
  const auto p = signbal::symmetry_orbit(R("1423,1432"));
  CHECK(p.count(R("3241,2341")));
  CHECK(p.count(R("4132,4123")));
  CHECK(p.count(R("2314,3214")));

  // closure of {123} by repeated application until nothing new appears
  std::set<PatternSet> seen{R("123")};
  bool grew = true;
  while (grew) {
    grew = false;
    for (const auto& s : std::set<PatternSet>(seen))
      for (auto m : {signbal::Symmetry::Reverse, signbal::Symmetry::Complement, signbal::Symmetry::Inverse})
        grew |= seen.insert(signbal::transform_set(s, m)).second;
  }
  CHECK(signbal::symmetry_orbit(R("123")) == seen);
  CHECK(seen.size() == 2);
  CHECK(8 % signbal::symmetry_orbit(R("1342")).size() == 0);
}

TEST_CASE("pair scan") {
  const auto scan = signbal::scan_pairs_length4(6);
  CHECK(scan.rows.size() == 276);
  CHECK(scan.inconsistencies.empty());
  std::size_t covered = 0;
  for (const auto& orbit : scan.orbits) {
    CHECK(8 % orbit.size() == 0);
    covered += orbit.size();
  }
  CHECK(covered == 276);
  std::map<std::string, const signbal::PairScanRow*> by_pair;
  for (const auto& row : scan.rows) {
    by_pair[row.pair.to_string()] = &row;
    CHECK(row.imbalances.size() == 5);
  }
  CHECK(by_pair.at("1324,2143")->first_failure == 5);
  CHECK(by_pair.at("1324,2143")->balanced_through == 4);
  CHECK(by_pair.at("1243,2143")->balanced_through == 6);
  CHECK_FALSE(by_pair.at("1243,2143")->first_failure);
  CHECK(signbal::to_csv(scan).rfind("pattern_a,pattern_b,set_balanced,balanced_through,first_failing_n,orbit_id\n", 0) == 0);
  CHECK(signbal::to_csv(scan).find("\n1324,2143,true,4,5,") != std::string::npos);
  CHECK(signbal::orbits_to_json(scan).rfind(R"({"schema_version":1,"kind":"pair_scan_orbits")", 0) == 0);
  CHECK_THROWS_AS(signbal::scan_pairs_length4(4), std::invalid_argument);
  CHECK_THROWS_AS(signbal::scan_pairs_length4(11), std::invalid_argument);
}
