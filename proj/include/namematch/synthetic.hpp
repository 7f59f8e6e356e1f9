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

#ifndef NAMEMATCH_SYNTHETIC_HPP_
#define NAMEMATCH_SYNTHETIC_HPP_

#include <algorithm>
#include <array>
#include <cstdint>
#include <string>
#include <unordered_set>
#include <vector>

#include "namematch/dataset.hpp"
#include "namematch/errors.hpp"
#include "namematch/frequency.hpp"
#include "namematch/normalizer.hpp"
#include "namematch/unicode.hpp"

namespace namematch {

// Stand-in for a private reference corpus: `n` distinct names of 4 to 6
// tokens. Common tokens come from `freq` in proportion to their shares, so
// they make up about sum(freq) of all token occurrences; first and last
// positions draw common tokens at half that rate. Other tokens are drawn
// uniformly from a pool of `token_pool_size` name-like words built from
// triliteral roots and name patterns (so the pool has near neighbours such
// as حامد / حميد / محمود, as real name lists do). Identifiers are 1..n.
struct SyntheticOptions {
  // Probability that a new person is a sibling, father, or child of a
  // person already generated, sharing part of the lineage.
  double kinship_rate = 0.0;
  // Relative weights of 4-, 5- and 6-token names.
  std::array<double, 3> length_weights = {1.0, 1.0, 1.0};
};

inline BaseSet generate_synthetic_base(std::size_t n,
                                       std::size_t token_pool_size,
                                       const FrequencyTable& freq,
                                       std::uint64_t seed,
                                       const SyntheticOptions& options = {},
                                       const NormalizationRules& rules =
                                           default_rules()) {
  if (n < 1) throw ParameterError("synthetic base needs n >= 1");
  if (token_pool_size < 20) {
    throw ParameterError("synthetic base needs a token pool of >= 20");
  }
  Rng rng(seed);

  static const std::u32string kConsonants =
      U"بتثجحخدذرزسشصضطظعغفقكلمنه";
  // Digits stand for the root letters.
  static const std::vector<std::u32string> kPatterns = {
      U"123",  U"1ا23", U"12ي3", U"م12و3", U"123ان", U"12ا3",
      U"ا123", U"م123", U"123ى",  U"1ا2ي3", U"م1ا23"};

  std::vector<std::string> common;
  std::vector<double> common_cdf;
  double common_share = 0.0;
  for (const auto& [token, p] : freq.entries()) {
    common.push_back(token);
    common_share += p;
    common_cdf.push_back(common_share);
  }
  std::unordered_set<std::string> reserved(common.begin(), common.end());
  reserved.insert(rules.prefix_particles.begin(), rules.prefix_particles.end());
  reserved.insert(rules.suffix_particles.begin(), rules.suffix_particles.end());

  std::vector<std::string> pool;
  std::unordered_set<std::string> in_pool;
  const std::size_t max_attempts = 200 * token_pool_size;
  for (std::size_t attempt = 0;
       pool.size() < token_pool_size && attempt < max_attempts; ++attempt) {
    std::u32string root;
    for (int i = 0; i < 3; ++i) {
      root.push_back(kConsonants[rng.below(kConsonants.size())]);
    }
    // Each root yields a small family of related names.
    const std::size_t family = 2 + rng.below(3);
    for (std::size_t f = 0; f < family && pool.size() < token_pool_size;
         ++f) {
      std::u32string word;
      for (char32_t c : kPatterns[rng.below(kPatterns.size())]) {
        word.push_back(c >= U'1' && c <= U'3' ? root[c - U'1'] : c);
      }
      const std::string token = unicode::to_utf8(word);
      if (reserved.contains(token) || in_pool.contains(token)) continue;
      const auto norm = normalize_name(token, rules);
      if (norm.size() != 1 || norm.tokens[0] != token) continue;
      in_pool.insert(token);
      pool.push_back(token);
    }
  }
  if (pool.size() < token_pool_size) {
    throw ParameterError("cannot build a rare-token pool of the requested size");
  }

  // Token slot rates: the first slot and the slots that can end a name
  // (4th onwards) draw common tokens at half the overall share; the 2nd and
  // 3rd slots make up the difference (mean name length 5).
  const double edge_rate = common_share / 2.0;
  const double middle_rate =
      std::min(0.95, (5.0 * common_share - 3.0 * edge_rate) / 2.0);
  const auto draw_token = [&](bool edge) -> std::string {
    const double rate = edge ? edge_rate : middle_rate;
    if (!common.empty() && rng.unit() < rate) {
      const double u = rng.unit() * common_share;
      const auto it = std::upper_bound(common_cdf.begin(), common_cdf.end(), u);
      const std::size_t idx = std::min<std::size_t>(
          static_cast<std::size_t>(it - common_cdf.begin()), common.size() - 1);
      return common[idx];
    }
    return pool[rng.below(pool.size())];
  };

  const double weight_sum = options.length_weights[0] +
                            options.length_weights[1] +
                            options.length_weights[2];
  if (!(weight_sum > 0.0) || *std::min_element(options.length_weights.begin(),
                                               options.length_weights.end()) <
                                 0.0) {
    throw ParameterError("name length weights must be non-negative");
  }
  const auto draw_length = [&]() -> std::size_t {
    double u = rng.unit() * weight_sum;
    for (std::size_t i = 0; i < 2; ++i) {
      if (u < options.length_weights[i]) return i;
      u -= options.length_weights[i];
    }
    return 2;
  };

  // Each person carries a lineage: own given name, father's, grandfather's
  // and so on. A record shows the first 4 to 6 lineage entries.
  constexpr std::size_t kLineage = 8;
  struct Person {
    std::vector<std::string> lineage;
    std::size_t shown;
  };
  std::vector<Person> people;
  std::vector<NameRecord> rows;
  std::unordered_set<std::string> seen;
  const std::size_t max_names = 100 * n + 1000;
  for (std::size_t attempt = 0; rows.size() < n && attempt < max_names;
       ++attempt) {
    Person p;
    p.shown = 4 + draw_length();
    if (!people.empty() && rng.unit() < options.kinship_rate) {
      const Person& rel = people[rng.below(people.size())];
      switch (rng.below(4)) {
        case 0:  // sibling: same father
          p.lineage = rel.lineage;
          p.lineage[0] = draw_token(true);
          break;
        case 1:  // father
          p.lineage.assign(rel.lineage.begin() + 1, rel.lineage.end());
          p.lineage.push_back(draw_token(true));
          break;
        default:  // child
          p.lineage.push_back(draw_token(true));
          p.lineage.insert(p.lineage.end(), rel.lineage.begin(),
                           rel.lineage.end() - 1);
          break;
      }
    } else {
      for (std::size_t i = 0; i < kLineage; ++i) {
        p.lineage.push_back(draw_token(i == 0 || i >= 3));
      }
    }
    std::vector<std::string> shown(p.lineage.begin(),
                                   p.lineage.begin() + p.shown);
    std::string text = join_tokens(shown);
    // A common token can double as a title and vanish when it leads.
    if (normalize_name(text, rules).tokens != shown) continue;
    if (!seen.insert(text).second) continue;
    rows.push_back({std::to_string(rows.size() + 1), std::move(text)});
    people.push_back(std::move(p));
  }
  if (rows.size() < n) {
    throw ParameterError("token pool too small to produce " +
                         std::to_string(n) + " distinct names");
  }
  return make_base_set(std::move(rows), rules, "synthetic");
}

}  // namespace namematch

#endif  // NAMEMATCH_SYNTHETIC_HPP_
