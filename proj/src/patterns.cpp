#include "signbal/patterns.hpp"

#include <algorithm>
#include <climits>
#include <numeric>
#include <stdexcept>

namespace signbal {

bool canonical_less(const Permutation& a, const Permutation& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

PatternSet::PatternSet(std::vector<Permutation> patterns) : patterns_(std::move(patterns)) {
  std::sort(patterns_.begin(), patterns_.end(), canonical_less);
  patterns_.erase(std::unique(patterns_.begin(), patterns_.end()), patterns_.end());
}

PatternSet PatternSet::parse(std::string_view text) {
  const char separator = text.find(';') != std::string_view::npos ? ';' : ',';
  std::vector<Permutation> patterns;
  if (text.find_first_not_of(" \t") == std::string_view::npos) return PatternSet{};
  while (true) {
    const auto cut = text.find(separator);
    const auto raw = text.substr(0, cut);
    const auto first = raw.find_first_not_of(" \t");
    const auto token =
        first == std::string_view::npos ? std::string_view{}
                                        : raw.substr(first, raw.find_last_not_of(" \t") - first + 1);
    if (token.empty()) throw std::invalid_argument("empty pattern token");
    try {
      patterns.push_back(Permutation::parse(token));
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument(std::string(token) + " is not a permutation word (" + e.what() +
                                  ")");
    }
    if (cut == std::string_view::npos) break;
    text.remove_prefix(cut + 1);
  }
  return PatternSet(std::move(patterns));
}

bool PatternSet::contains(const Permutation& p) const {
  return std::binary_search(patterns_.begin(), patterns_.end(), p, canonical_less);
}

std::string PatternSet::to_string() const {
  const bool long_form = std::any_of(patterns_.begin(), patterns_.end(),
                                     [](const Permutation& p) { return p.size() > 9; });
  std::string out;
  for (std::size_t i = 0; i < patterns_.size(); ++i) {
    if (i > 0) out += long_form ? ';' : ',';
    out += patterns_[i].to_string();
  }
  return out;
}

std::strong_ordering operator<=>(const PatternSet& a, const PatternSet& b) {
  const std::size_t common = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < common; ++i) {
    if (a.patterns_[i] == b.patterns_[i]) continue;
    return canonical_less(a.patterns_[i], b.patterns_[i]) ? std::strong_ordering::less
                                                         : std::strong_ordering::greater;
  }
  return a.size() <=> b.size();
}

Permutation standardize(std::span<const int> word) {
  std::vector<std::size_t> order(word.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(),
            [&](std::size_t x, std::size_t y) { return word[x] < word[y]; });
  std::vector<int> ranks(word.size());
  for (std::size_t r = 0; r < order.size(); ++r) {
    if (r > 0 && word[order[r]] == word[order[r - 1]]) {
      throw std::invalid_argument("duplicate entry " + std::to_string(word[order[r]]));
    }
    ranks[order[r]] = static_cast<int>(r + 1);
  }
  return make_unchecked(std::move(ranks));
}

CompiledPattern::CompiledPattern(const Permutation& pattern)
    : pattern_(pattern), steps_(pattern.size()) {
  const auto values = pattern.entries();
  for (std::size_t t = 0; t < values.size(); ++t) {
    for (std::size_t s = 0; s < t; ++s) {
      if (values[s] < values[t] &&
          (steps_[t].below < 0 || values[s] > values[static_cast<std::size_t>(steps_[t].below)])) {
        steps_[t].below = static_cast<int>(s);
      }
      if (values[s] > values[t] &&
          (steps_[t].above < 0 || values[s] < values[static_cast<std::size_t>(steps_[t].above)])) {
        steps_[t].above = static_cast<int>(s);
      }
    }
  }
}

// Assigns pattern position `step` to a host index in [start, host_end) and
// recurses. When `anchored`, the final pattern position is forced onto
// host_end - 1. Returns true once on_match asks to stop.
template <class OnMatch>
bool CompiledPattern::search(std::span<const int> host, std::size_t step, std::size_t start,
                             std::size_t host_end, bool anchored,
                             std::vector<std::size_t>& chosen, OnMatch& on_match) const {
  const std::size_t k = steps_.size();
  if (step == k) return on_match(chosen);
  const Step& s = steps_[step];
  const int lo = s.below >= 0 ? host[chosen[static_cast<std::size_t>(s.below)]] : INT_MIN;
  const int hi = s.above >= 0 ? host[chosen[static_cast<std::size_t>(s.above)]] : INT_MAX;
  const std::size_t remaining = k - step;
  if (host_end < start + remaining) return false;
  const std::size_t last = host_end - remaining;
  const std::size_t first = anchored && remaining == 1 ? last : start;
  for (std::size_t h = first; h <= last; ++h) {
    const int v = host[h];
    if (v <= lo || v >= hi) continue;
    chosen[step] = h;
    if (search(host, step + 1, h + 1, host_end, anchored, chosen, on_match)) return true;
  }
  return false;
}

std::optional<std::vector<std::size_t>> CompiledPattern::find_first(
    std::span<const int> host) const {
  std::vector<std::size_t> chosen(steps_.size());
  std::optional<std::vector<std::size_t>> found;
  auto on_match = [&](const std::vector<std::size_t>& c) {
    found = c;
    return true;
  };
  search(host, 0, 0, host.size(), false, chosen, on_match);
  return found;
}

bool CompiledPattern::matches_ending_at_last(std::span<const int> host) const {
  if (steps_.empty()) return false;
  std::vector<std::size_t> chosen(steps_.size());
  auto on_match = [](const std::vector<std::size_t>&) { return true; };
  return search(host, 0, 0, host.size(), true, chosen, on_match);
}

std::uint64_t CompiledPattern::count(std::span<const int> host) const {
  std::vector<std::size_t> chosen(steps_.size());
  std::uint64_t total = 0;
  auto on_match = [&](const std::vector<std::size_t>&) {
    ++total;
    return false;
  };
  search(host, 0, 0, host.size(), false, chosen, on_match);
  return total;
}

std::optional<OccurrenceWitness> find_occurrence(const Permutation& host,
                                                 const Permutation& pattern) {
  auto found = CompiledPattern(pattern).find_first(host.entries());
  if (!found) return std::nullopt;
  OccurrenceWitness witness;
  witness.indices.reserve(found->size());
  for (std::size_t i : *found) witness.indices.push_back(i + 1);
  return witness;
}

bool contains_pattern(const Permutation& host, const Permutation& pattern) {
  return CompiledPattern(pattern).find_first(host.entries()).has_value();
}

bool avoids_all(const Permutation& host, const PatternSet& patterns) {
  return std::none_of(patterns.begin(), patterns.end(),
                      [&](const Permutation& p) { return contains_pattern(host, p); });
}

std::uint64_t count_occurrences(const Permutation& host, const Permutation& pattern) {
  return CompiledPattern(pattern).count(host.entries());
}

bool extends_containment(std::span<const int> prefix, const PatternSet& patterns,
                         bool last_position_only) {
  // Validates distinctness; containment is invariant under standardization.
  const Permutation standard = standardize(prefix);
  for (const auto& pattern : patterns) {
    if (pattern.empty()) return true;
    const CompiledPattern compiled(pattern);
    const bool hit = last_position_only ? compiled.matches_ending_at_last(standard.entries())
                                        : compiled.find_first(standard.entries()).has_value();
    if (hit) return true;
  }
  return false;
}

std::string_view to_string(Symmetry symmetry) {
  switch (symmetry) {
    case Symmetry::Reverse:
      return "reverse";
    case Symmetry::Complement:
      return "complement";
    case Symmetry::Inverse:
      return "inverse";
  }
  return "?";
}

Permutation apply(Symmetry symmetry, const Permutation& p) {
  switch (symmetry) {
    case Symmetry::Reverse:
      return reverse(p);
    case Symmetry::Complement:
      return complement(p);
    case Symmetry::Inverse:
      return invert(p);
  }
  return p;
}

PatternSet transform_set(const PatternSet& patterns, Symmetry symmetry) {
  std::vector<Permutation> out;
  out.reserve(patterns.size());
  for (const auto& p : patterns) out.push_back(apply(symmetry, p));
  return PatternSet(std::move(out));
}

}  // namespace signbal
