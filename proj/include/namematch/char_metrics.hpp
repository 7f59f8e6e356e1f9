// Copyright 2026 The Namematch Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef NAMEMATCH_CHAR_METRICS_HPP_
#define NAMEMATCH_CHAR_METRICS_HPP_

#include <algorithm>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "namematch/errors.hpp"
#include "namematch/unicode.hpp"

namespace namematch {

// Unit-cost Levenshtein distance (insert, delete, substitute) over any two
// random-access sequences whose elements compare with `eq`. Two-row DP.
template <class SeqA, class SeqB, class Eq = std::equal_to<>>
std::size_t edit_distance(const SeqA& a, const SeqB& b, Eq eq = {}) {
  const std::size_t m = std::size(a);
  const std::size_t n = std::size(b);
  if (m == 0) return n;
  if (n == 0) return m;
  // Per-thread scratch row, reused across calls.
  thread_local std::vector<std::size_t> row;
  row.resize(n + 1);
  for (std::size_t j = 0; j <= n; ++j) row[j] = j;
  for (std::size_t i = 1; i <= m; ++i) {
    std::size_t diag = row[0];
    row[0] = i;
    for (std::size_t j = 1; j <= n; ++j) {
      const std::size_t up = row[j];
      if (eq(a[i - 1], b[j - 1])) {
        row[j] = diag;
      } else {
        row[j] = 1 + std::min({up, row[j - 1], diag});
      }
      diag = up;
    }
  }
  return row[n];
}

// Character edit distance counted in Unicode scalar values.
inline std::size_t char_levenshtein(std::u32string_view a,
                                    std::u32string_view b) {
  return edit_distance(a, b);
}

inline std::size_t char_levenshtein(std::string_view a, std::string_view b) {
  return char_levenshtein(unicode::to_u32(a), unicode::to_u32(b));
}

// Edit distance over the longer length; 0 means identical. Two empty
// strings are identical (0), although the ratio itself is undefined there.
inline double normalized_char_distance(std::u32string_view a,
                                       std::u32string_view b) {
  const std::size_t longest = std::max(a.size(), b.size());
  if (longest == 0) return 0.0;
  return static_cast<double>(char_levenshtein(a, b)) /
         static_cast<double>(longest);
}

inline double normalized_char_distance(std::string_view a, std::string_view b) {
  return normalized_char_distance(unicode::to_u32(a), unicode::to_u32(b));
}

// Jaro similarity. Characters match when equal and no further apart than
// max(m, n) / 2 - 1; transpositions are half the out-of-order matches.
inline double jaro(std::u32string_view a, std::u32string_view b) {
  if (a == b) return 1.0;
  const std::size_t m = a.size();
  const std::size_t n = b.size();
  if (m == 0 || n == 0) return 0.0;
  const std::size_t half = std::max(m, n) / 2;
  const std::size_t window = half > 0 ? half - 1 : 0;

  thread_local std::vector<char> a_matched, b_matched;
  a_matched.assign(m, 0);
  b_matched.assign(n, 0);
  std::size_t matches = 0;
  for (std::size_t i = 0; i < m; ++i) {
    const std::size_t lo = i > window ? i - window : 0;
    const std::size_t hi = std::min(n, i + window + 1);
    for (std::size_t j = lo; j < hi; ++j) {
      if (b_matched[j] || a[i] != b[j]) continue;
      a_matched[i] = b_matched[j] = 1;
      ++matches;
      break;
    }
  }
  if (matches == 0) return 0.0;

  std::size_t out_of_order = 0;
  for (std::size_t i = 0, j = 0; i < m; ++i) {
    if (!a_matched[i]) continue;
    while (!b_matched[j]) ++j;
    if (a[i] != b[j]) ++out_of_order;
    ++j;
  }
  const double c = static_cast<double>(matches);
  const double t = static_cast<double>(out_of_order) / 2.0;
  return (c / static_cast<double>(m) + c / static_cast<double>(n) +
          (c - t) / c) /
         3.0;
}

inline double jaro(std::string_view a, std::string_view b) {
  return jaro(unicode::to_u32(a), unicode::to_u32(b));
}

inline constexpr double kDefaultPrefixScale = 0.1;
inline constexpr std::size_t kJaroWinklerPrefixCap = 4;

inline double jaro_winkler(std::u32string_view a, std::u32string_view b,
                           double prefix_scale = kDefaultPrefixScale) {
  if (!(prefix_scale >= 0.0 && prefix_scale <= 0.25)) {
    throw ParameterError("jaro_winkler: prefix_scale must lie in [0, 0.25]");
  }
  const double j = jaro(a, b);
  std::size_t prefix = 0;
  const std::size_t cap = std::min({a.size(), b.size(), kJaroWinklerPrefixCap});
  while (prefix < cap && a[prefix] == b[prefix]) ++prefix;
  return j + static_cast<double>(prefix) * prefix_scale * (1.0 - j);
}

inline double jaro_winkler(std::string_view a, std::string_view b,
                           double prefix_scale = kDefaultPrefixScale) {
  return jaro_winkler(unicode::to_u32(a), unicode::to_u32(b), prefix_scale);
}

}  // namespace namematch

#endif  // NAMEMATCH_CHAR_METRICS_HPP_
