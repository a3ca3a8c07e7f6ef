#include "signbal/enumeration.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <numeric>

#include "signbal/detail/parallel.hpp"

namespace signbal {

namespace {

void validate(const AvoidanceClassQuery& query) {
  if (query.n == 0) throw std::invalid_argument("class length n must be positive");
  if (query.n > kMaxSearchLength) {
    throw GuardError("prefix search supports n <= " + std::to_string(kMaxSearchLength) +
                     " (got " + std::to_string(query.n) + ")");
  }
}

// Depth-first search over prefixes of S_n. A prefix that avoids every
// pattern stays clean until its newest entry completes an occurrence, so
// each node only tests occurrences ending at the last position.
class PrefixSearch {
 public:
  PrefixSearch(const AvoidanceClassQuery& query, std::uint64_t cap,
               std::atomic<std::uint64_t>& emitted_total)
      : n_(static_cast<int>(query.n)), cap_(cap), emitted_total_(emitted_total) {
    for (const auto& p : query.patterns) {
      if (p.empty()) blocked_ = true;
      if (p.size() <= query.n) patterns_.emplace_back(p);
    }
    prefix_.reserve(query.n);
  }

  /// Explores the subtree rooted at first entry `first`.
  template <class Emit>
  EnumerationStats run_subtree(int first, Emit& emit) {
    stats_ = {};
    place(first, 0, emit);
    return stats_;
  }

 private:
  template <class Emit>
  void place(int value, std::uint64_t tau, Emit& emit) {
    // Entries already placed above `value` each form one new inversion.
    tau += static_cast<std::uint64_t>(std::popcount(used_ >> (value + 1)));
    prefix_.push_back(value);
    used_ |= std::uint64_t{1} << value;
    ++stats_.nodes_visited;
    if (cut()) {
      ++stats_.pruned;
    } else if (static_cast<int>(prefix_.size()) == n_) {
      ++stats_.emitted;
      if (emitted_total_.fetch_add(1, std::memory_order_relaxed) + 1 > cap_) {
        throw EnumerationOverflow("enumeration exceeded cap of " + std::to_string(cap_) +
                                  " members");
      }
      emit(std::span<const int>(prefix_), tau);
    } else {
      for (int v = 1; v <= n_; ++v) {
        if ((used_ >> v) & 1U) continue;
        place(v, tau, emit);
      }
    }
    used_ &= ~(std::uint64_t{1} << value);
    prefix_.pop_back();
  }

  bool cut() const {
    if (blocked_) return true;
    return std::any_of(patterns_.begin(), patterns_.end(), [this](const CompiledPattern& p) {
      return p.matches_ending_at_last(prefix_);
    });
  }

  int n_;
  std::uint64_t cap_;
  std::atomic<std::uint64_t>& emitted_total_;
  std::vector<CompiledPattern> patterns_;
  bool blocked_ = false;
  std::vector<int> prefix_;
  std::uint64_t used_ = 0;
  EnumerationStats stats_;
};

// Runs one independent search per first entry and hands each subtree's
// results to `collect(first_index, ...)`.
template <class PerSubtree>
EnumerationStats run_partitioned(const AvoidanceClassQuery& query, const EnumerationOptions& options,
                                 PerSubtree&& per_subtree) {
  validate(query);
  std::atomic<std::uint64_t> emitted_total{0};
  std::vector<EnumerationStats> stats(query.n);
  detail::parallel_for(query.n, options.parallelism, [&](std::size_t i) {
    PrefixSearch search(query, options.cap, emitted_total);
    stats[i] = per_subtree(i, search);
  });
  EnumerationStats total;
  for (const auto& s : stats) total += s;
  return total;
}

}  // namespace

std::vector<Permutation> enumerate_oracle(const AvoidanceClassQuery& query, std::size_t guard) {
  validate(query);
  if (query.n > guard) {
    throw GuardError("oracle enumeration is limited to n <= " + std::to_string(guard) + " (got " +
                     std::to_string(query.n) + ")");
  }
  std::vector<CompiledPattern> compiled;
  for (const auto& p : query.patterns) compiled.emplace_back(p);
  std::vector<Permutation> out;
  std::vector<int> word(query.n);
  std::iota(word.begin(), word.end(), 1);
  do {
    const bool avoids = std::none_of(compiled.begin(), compiled.end(), [&](const auto& c) {
      return c.find_first(word).has_value();
    });
    if (avoids) out.push_back(make_unchecked(word));
  } while (std::next_permutation(word.begin(), word.end()));
  return out;
}

EnumerationStats for_each_member(const AvoidanceClassQuery& query, const MemberVisitor& visit,
                                 std::uint64_t cap) {
  validate(query);
  std::atomic<std::uint64_t> emitted_total{0};
  PrefixSearch search(query, cap, emitted_total);
  EnumerationStats total;
  auto emit = [&](std::span<const int> entries, std::uint64_t tau) { visit(entries, tau); };
  for (int first = 1; first <= static_cast<int>(query.n); ++first) {
    total += search.run_subtree(first, emit);
  }
  return total;
}

std::vector<Permutation> enumerate_pruned(const AvoidanceClassQuery& query,
                                          const EnumerationOptions& options,
                                          EnumerationStats* stats) {
  std::vector<std::vector<Permutation>> parts(query.n);
  const auto total = run_partitioned(query, options, [&](std::size_t i, PrefixSearch& search) {
    auto emit = [&](std::span<const int> entries, std::uint64_t) {
      parts[i].push_back(make_unchecked(std::vector<int>(entries.begin(), entries.end())));
    };
    return search.run_subtree(static_cast<int>(i + 1), emit);
  });
  if (stats) *stats = total;
  std::vector<Permutation> out;
  out.reserve(total.emitted);
  for (auto& part : parts) std::move(part.begin(), part.end(), std::back_inserter(out));
  return out;
}

SignedCount signed_count(const AvoidanceClassQuery& query, const EnumerationOptions& options) {
  SignedCount total;
  if (options.use_oracle) {
    for (const auto& p : enumerate_oracle(query, options.oracle_guard)) {
      (parity(p) == Parity::Even ? total.even : total.odd) += 1;
    }
    return total;
  }
  std::vector<SignedCount> parts(query.n);
  run_partitioned(query, options, [&](std::size_t i, PrefixSearch& search) {
    auto emit = [&](std::span<const int>, std::uint64_t tau) {
      (tau % 2 == 0 ? parts[i].even : parts[i].odd) += 1;
    };
    return search.run_subtree(static_cast<int>(i + 1), emit);
  });
  for (const auto& part : parts) total += part;
  return total;
}

std::uint64_t class_cardinality(const AvoidanceClassQuery& query,
                                const EnumerationOptions& options) {
  return signed_count(query, options).total();
}

std::vector<Permutation> slice_by_max_position(std::span<const Permutation> members,
                                               std::size_t position) {
  std::vector<Permutation> out;
  if (members.empty()) return out;
  const std::size_t n = members.front().size();
  if (position == 0 || position > n) {
    throw std::out_of_range("slice position " + std::to_string(position) + " outside 1.." +
                            std::to_string(n));
  }
  for (const auto& p : members) {
    if (p.size() != n) throw std::invalid_argument("slice members must share one length");
  }
  for (const auto& p : members) {
    if (p.at(position) == static_cast<int>(n)) out.push_back(p);
  }
  return out;
}

std::vector<Permutation> enumerate_class(const AvoidanceClassQuery& query,
                                         const EnumerationOptions& options) {
  return options.use_oracle ? enumerate_oracle(query, options.oracle_guard)
                            : enumerate_pruned(query, options);
}

}  // namespace signbal
