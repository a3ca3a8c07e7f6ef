#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "signbal/enumeration.hpp"
#include "signbal/experiments.hpp"
#include "signbal/patterns.hpp"
#include "signbal/permutation.hpp"
#include "signbal/signbalance.hpp"

namespace py = pybind11;

namespace {

using Word = std::vector<int>;
using PatternsArg = std::variant<std::string, std::vector<Word>>;

signbal::Permutation perm(const Word& word) { return signbal::Permutation::from_word(word); }

Word word(const signbal::Permutation& p) { return Word(p.begin(), p.end()); }

std::vector<Word> words(const std::vector<signbal::Permutation>& perms) {
  std::vector<Word> out;
  out.reserve(perms.size());
  for (const auto& p : perms) out.push_back(word(p));
  return out;
}

signbal::PatternSet pattern_set(const PatternsArg& arg) {
  if (const auto* text = std::get_if<std::string>(&arg)) return signbal::PatternSet::parse(*text);
  std::vector<signbal::Permutation> out;
  for (const auto& w : std::get<std::vector<Word>>(arg)) out.push_back(perm(w));
  return signbal::PatternSet(std::move(out));
}

std::vector<Word> pattern_words(const signbal::PatternSet& set) {
  std::vector<Word> out;
  for (const auto& p : set) out.push_back(word(p));
  return out;
}

signbal::Symmetry symmetry(const std::string& name) {
  if (name == "reverse") return signbal::Symmetry::Reverse;
  if (name == "complement") return signbal::Symmetry::Complement;
  if (name == "inverse" || name == "invert") return signbal::Symmetry::Inverse;
  throw std::invalid_argument("unknown symmetry '" + name + "'");
}

signbal::EnumerationOptions options(bool oracle, unsigned parallelism) {
  signbal::EnumerationOptions o;
  o.use_oracle = oracle;
  o.parallelism = parallelism;
  return o;
}

py::object json_loads(const std::string& text) {
  return py::module_::import("json").attr("loads")(text);
}

}  // namespace

PYBIND11_MODULE(_signbal, m) {
  m.doc() = "Pattern containment, avoidance-class enumeration, and sign balance";

  py::register_exception<signbal::GuardError>(m, "GuardError", PyExc_RuntimeError);

  m.def("from_word", [](const Word& w) { return word(perm(w)); }, py::arg("word"));
  m.def("parse", [](const std::string& text) { return word(signbal::Permutation::parse(text)); });
  m.def("to_string", [](const Word& w) { return perm(w).to_string(); });
  m.def("identity", [](std::size_t n) { return word(signbal::Permutation::identity(n)); });
  m.def("inversions", [](const Word& w) { return signbal::inversions(perm(w)); });
  m.def("noninversions", [](const Word& w) { return signbal::noninversions(perm(w)); });
  m.def("parity", [](const Word& w) { return std::string(to_string(signbal::parity(perm(w)))); });
  m.def("reverse", [](const Word& w) { return word(signbal::reverse(perm(w))); });
  m.def("complement", [](const Word& w) { return word(signbal::complement(perm(w))); });
  m.def("invert", [](const Word& w) { return word(signbal::invert(perm(w))); });
  m.def("direct_sum",
        [](const Word& a, const Word& b) { return word(signbal::direct_sum(perm(a), perm(b))); });
  m.def("skew_sum",
        [](const Word& a, const Word& b) { return word(signbal::skew_sum(perm(a), perm(b))); });
  m.def("swap_positions", [](const Word& w, std::size_t i, std::size_t j) {
    return word(signbal::swap_positions(perm(w), i, j));
  });
  m.def("insert_max",
        [](const Word& w, std::size_t after) { return word(signbal::insert_max(perm(w), after)); });
  m.def("lis_lds", [](const Word& w) {
    const auto r = signbal::lis_lds(perm(w));
    return py::make_tuple(r.lis, r.lds);
  });

  m.def("standardize", [](const Word& w) { return word(signbal::standardize(w)); });
  m.def(
      "find_occurrence",
      [](const Word& host, const Word& pattern) -> std::optional<std::vector<std::size_t>> {
        auto w = signbal::find_occurrence(perm(host), perm(pattern));
        if (!w) return std::nullopt;
        return w->indices;
      },
      "1-indexed lexicographically least occurrence, or None");
  m.def("count_occurrences", [](const Word& host, const Word& pattern) {
    return signbal::count_occurrences(perm(host), perm(pattern));
  });
  m.def("avoids_all", [](const Word& host, const PatternsArg& patterns) {
    return signbal::avoids_all(perm(host), pattern_set(patterns));
  });
  m.def("transform_set", [](const PatternsArg& patterns, const std::string& op) {
    return pattern_words(signbal::transform_set(pattern_set(patterns), symmetry(op)));
  });

  m.def(
      "enumerate",
      [](std::size_t n, const PatternsArg& patterns, bool oracle, unsigned parallelism) {
        return words(signbal::enumerate_class({n, pattern_set(patterns)},
                                              options(oracle, parallelism)));
      },
      py::arg("n"), py::arg("patterns") = std::string(), py::arg("oracle") = false,
      py::arg("parallelism") = 1U);
  m.def(
      "signed_count",
      [](std::size_t n, const PatternsArg& patterns, bool oracle, unsigned parallelism) {
        const auto c = signbal::signed_count({n, pattern_set(patterns)}, options(oracle, parallelism));
        return py::make_tuple(c.even, c.odd);
      },
      py::arg("n"), py::arg("patterns") = std::string(), py::arg("oracle") = false,
      py::arg("parallelism") = 1U);
  m.def(
      "class_cardinality",
      [](std::size_t n, const PatternsArg& patterns) {
        return signbal::class_cardinality({n, pattern_set(patterns)});
      },
      py::arg("n"), py::arg("patterns") = std::string());
  m.def("slice_by_max_position", [](const std::vector<Word>& members, std::size_t position) {
    std::vector<signbal::Permutation> perms;
    for (const auto& w : members) perms.push_back(perm(w));
    return words(signbal::slice_by_max_position(perms, position));
  });

  m.def("catalan", &signbal::catalan, py::arg("m"));
  m.def("check_catalan_excess_321",
        [](std::size_t n) { return signbal::check_catalan_excess_321(n); });
  m.def("pattern_set_is_sign_balanced",
        [](const PatternsArg& patterns) {
          return signbal::pattern_set_is_sign_balanced(pattern_set(patterns));
        });
  m.def(
      "balance_over_range",
      [](const PatternsArg& patterns, std::size_t n_lo, std::size_t n_hi, unsigned parallelism) {
        return json_loads(signbal::to_json(
            signbal::balance_over_range(pattern_set(patterns), n_lo, n_hi, options(false, parallelism))));
      },
      py::arg("patterns"), py::arg("n_lo"), py::arg("n_hi"), py::arg("parallelism") = 1U);
  m.def(
      "verify",
      [](const std::string& target, std::optional<std::size_t> n_max, unsigned parallelism,
         bool timing) {
        const auto verdict = signbal::run_verification(target, n_max, options(false, parallelism));
        return json_loads(signbal::to_json(verdict, {timing}));
      },
      py::arg("target"), py::arg("n_max") = py::none(), py::arg("parallelism") = 1U,
      py::arg("timing") = true);
  m.def("verification_targets", [] {
    std::vector<std::string> ids;
    for (const auto& t : signbal::verification_targets()) ids.emplace_back(t.id);
    return ids;
  });
  m.def("symmetry_orbit", [](const PatternsArg& patterns) {
    std::vector<std::vector<Word>> out;
    for (const auto& set : signbal::symmetry_orbit(pattern_set(patterns))) {
      out.push_back(pattern_words(set));
    }
    return out;
  });
  m.def(
      "scan_pairs_length4",
      [](std::size_t n_max, unsigned parallelism) {
        const auto scan = signbal::scan_pairs_length4(n_max, options(false, parallelism));
        py::list rows;
        for (const auto& row : scan.rows) {
          py::dict d;
          d["pair"] = row.pair.to_string();
          d["set_balanced"] = row.set_balanced;
          d["balanced_through"] = row.balanced_through;
          d["first_failing_n"] = row.first_failure ? py::cast(*row.first_failure) : py::none();
          d["orbit_id"] = row.orbit_id;
          d["imbalances"] = row.imbalances;
          rows.append(d);
        }
        py::dict out;
        out["n_max"] = scan.n_max;
        out["rows"] = rows;
        out["orbits"] = json_loads(signbal::orbits_to_json(scan))["orbits"];
        out["inconsistencies"] = scan.inconsistencies;
        return out;
      },
      py::arg("n_max") = 8, py::arg("parallelism") = 1U);
}
