#include "signbal/permutation.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <stdexcept>

namespace signbal {

namespace {

// Counts inversions of v[lo, hi) while merge-sorting it in place.
std::uint64_t merge_count(std::vector<int>& v, std::vector<int>& scratch, std::size_t lo,
                          std::size_t hi) {
  if (hi - lo < 2) return 0;
  const std::size_t mid = lo + (hi - lo) / 2;
  std::uint64_t count = merge_count(v, scratch, lo, mid) + merge_count(v, scratch, mid, hi);
  std::size_t a = lo, b = mid, out = lo;
  while (a < mid && b < hi) {
    if (v[a] < v[b]) {
      scratch[out++] = v[a++];
    } else {
      count += mid - a;
      scratch[out++] = v[b++];
    }
  }
  while (a < mid) scratch[out++] = v[a++];
  while (b < hi) scratch[out++] = v[b++];
  std::copy(scratch.begin() + static_cast<std::ptrdiff_t>(lo),
            scratch.begin() + static_cast<std::ptrdiff_t>(hi),
            v.begin() + static_cast<std::ptrdiff_t>(lo));
  return count;
}

std::size_t longest_increasing(std::span<const int> values) {
  std::vector<int> tails;
  for (int v : values) {
    auto it = std::lower_bound(tails.begin(), tails.end(), v);
    if (it == tails.end()) {
      tails.push_back(v);
    } else {
      *it = v;
    }
  }
  return tails.size();
}

}  // namespace

std::string_view to_string(Parity parity) {
  return parity == Parity::Even ? "even" : "odd";
}

Permutation make_unchecked(std::vector<int> entries) {
  return Permutation(std::move(entries), Permutation::Unchecked{});
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<int> entries(n);
  std::iota(entries.begin(), entries.end(), 1);
  return make_unchecked(std::move(entries));
}

Permutation Permutation::from_word(std::span<const int> word) {
  const auto n = static_cast<long long>(word.size());
  std::vector<bool> seen(word.size() + 1, false);
  for (int v : word) {
    if (v <= 0) {
      throw std::invalid_argument("non-positive value " + std::to_string(v));
    }
    if (v > n) {
      throw std::invalid_argument("value " + std::to_string(v) + " exceeds length " +
                                  std::to_string(n));
    }
    if (seen[static_cast<std::size_t>(v)]) {
      throw std::invalid_argument("duplicate value " + std::to_string(v));
    }
    seen[static_cast<std::size_t>(v)] = true;
  }
  return make_unchecked(std::vector<int>(word.begin(), word.end()));
}

Permutation Permutation::parse(std::string_view text) {
  auto trim = [](std::string_view s) {
    const auto first = s.find_first_not_of(" \t");
    if (first == std::string_view::npos) return std::string_view{};
    const auto last = s.find_last_not_of(" \t");
    return s.substr(first, last - first + 1);
  };
  text = trim(text);
  std::vector<int> word;
  if (text.find(',') != std::string_view::npos) {
    while (true) {
      const auto comma = text.find(',');
      const auto token = trim(text.substr(0, comma));
      int value = 0;
      const auto* end = token.data() + token.size();
      auto [ptr, ec] = std::from_chars(token.data(), end, value);
      if (token.empty() || ec != std::errc{} || ptr != end) {
        throw std::invalid_argument("malformed entry '" + std::string(token) + "'");
      }
      word.push_back(value);
      if (comma == std::string_view::npos) break;
      text.remove_prefix(comma + 1);
    }
  } else {
    for (char c : text) {
      if (c < '0' || c > '9') {
        throw std::invalid_argument("unexpected character '" + std::string(1, c) + "'");
      }
      word.push_back(c - '0');
    }
  }
  return from_word(word);
}

int Permutation::at(std::size_t position) const {
  if (position == 0 || position > entries_.size()) {
    throw std::out_of_range("position " + std::to_string(position) + " outside 1.." +
                            std::to_string(entries_.size()));
  }
  return entries_[position - 1];
}

std::string Permutation::to_string() const {
  std::string out;
  const bool digits = entries_.size() <= 9;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (!digits && i > 0) out += ',';
    out += std::to_string(entries_[i]);
  }
  return out;
}

std::uint64_t inversions(const Permutation& p) {
  std::vector<int> work(p.begin(), p.end());
  std::vector<int> scratch(work.size());
  return merge_count(work, scratch, 0, work.size());
}

std::uint64_t noninversions(const Permutation& p) {
  return pair_count(p.size()) - inversions(p);
}

InversionStats inversion_stats(const Permutation& p) {
  const auto tau = inversions(p);
  const auto total = pair_count(p.size());
  return {tau, total - tau, total};
}

Parity parity(const Permutation& p) {
  return inversions(p) % 2 == 0 ? Parity::Even : Parity::Odd;
}

Permutation reverse(const Permutation& p) {
  return make_unchecked(std::vector<int>(p.entries().rbegin(), p.entries().rend()));
}

Permutation complement(const Permutation& p) {
  const int top = static_cast<int>(p.size()) + 1;
  std::vector<int> out;
  out.reserve(p.size());
  for (int v : p) out.push_back(top - v);
  return make_unchecked(std::move(out));
}

Permutation invert(const Permutation& p) {
  std::vector<int> out(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    out[static_cast<std::size_t>(p.entries()[i] - 1)] = static_cast<int>(i + 1);
  }
  return make_unchecked(std::move(out));
}

Permutation direct_sum(const Permutation& lower, const Permutation& upper) {
  const int shift = static_cast<int>(lower.size());
  std::vector<int> out(lower.begin(), lower.end());
  for (int v : upper) out.push_back(v + shift);
  return make_unchecked(std::move(out));
}

Permutation skew_sum(const Permutation& upper, const Permutation& lower) {
  const int shift = static_cast<int>(lower.size());
  std::vector<int> out;
  out.reserve(upper.size() + lower.size());
  for (int v : upper) out.push_back(v + shift);
  out.insert(out.end(), lower.begin(), lower.end());
  return make_unchecked(std::move(out));
}

Permutation swap_positions(const Permutation& p, std::size_t i, std::size_t j) {
  if (i == 0 || j > p.size() || i >= j) {
    throw std::out_of_range("swap positions must satisfy 1 <= i < j <= " +
                            std::to_string(p.size()) + ", got (" + std::to_string(i) + ", " +
                            std::to_string(j) + ")");
  }
  std::vector<int> out(p.begin(), p.end());
  std::swap(out[i - 1], out[j - 1]);
  return make_unchecked(std::move(out));
}

Permutation insert_max(const Permutation& p, std::size_t after) {
  if (after > p.size()) {
    throw std::out_of_range("insertion index " + std::to_string(after) + " outside 0.." +
                            std::to_string(p.size()));
  }
  std::vector<int> out(p.begin(), p.end());
  out.insert(out.begin() + static_cast<std::ptrdiff_t>(after), static_cast<int>(p.size()) + 1);
  return make_unchecked(std::move(out));
}

MonotoneLengths lis_lds(const Permutation& p) {
  if (p.empty()) throw std::invalid_argument("lis_lds requires a nonempty permutation");
  std::vector<int> negated;
  negated.reserve(p.size());
  for (int v : p) negated.push_back(-v);
  return {longest_increasing(p.entries()), longest_increasing(negated)};
}

}  // namespace signbal
