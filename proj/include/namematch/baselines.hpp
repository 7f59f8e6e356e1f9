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

#ifndef NAMEMATCH_BASELINES_HPP_
#define NAMEMATCH_BASELINES_HPP_

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "namematch/char_metrics.hpp"
#include "namematch/errors.hpp"
#include "namematch/name.hpp"
#include "namematch/unicode.hpp"

namespace namematch {

// |A ∩ B| / |A ∪ B| over token sets; two empty names score 1.
inline double jaccard(const TokenizedName& a, const TokenizedName& b) {
  const std::set<std::string> sa(a.tokens.begin(), a.tokens.end());
  const std::set<std::string> sb(b.tokens.begin(), b.tokens.end());
  if (sa.empty() && sb.empty()) return 1.0;
  std::size_t common = 0;
  for (const auto& t : sa) common += sb.count(t);
  return static_cast<double>(common) /
         static_cast<double>(sa.size() + sb.size() - common);
}

// Jaccard over two sorted, duplicate-free token lists.
inline double jaccard_sorted(std::span<const std::string> a,
                             std::span<const std::string> b) {
  if (a.empty() && b.empty()) return 1.0;
  std::size_t common = 0;
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() && ib != b.end()) {
    if (*ia < *ib) {
      ++ia;
    } else if (*ib < *ia) {
      ++ib;
    } else {
      ++common;
      ++ia;
      ++ib;
    }
  }
  return static_cast<double>(common) /
         static_cast<double>(a.size() + b.size() - common);
}

// Unit-cost edit distance over whole tokens.
inline std::size_t token_levenshtein(const TokenizedName& a,
                                     const TokenizedName& b) {
  return edit_distance(a.tokens, b.tokens);
}

inline double token_levenshtein_similarity(const TokenizedName& a,
                                           const TokenizedName& b) {
  const std::size_t longest = std::max(a.size(), b.size());
  if (longest == 0) return 1.0;
  return 1.0 - static_cast<double>(token_levenshtein(a, b)) /
                   static_cast<double>(longest);
}

struct TfidfEntry {
  std::string token;
  std::u32string chars;
  double weight = 0.0;
};

// L2-normalized TF-IDF vector, entries sorted by token. All weights are
// zero when no token carries inverse document frequency.
using TfidfVector = std::vector<TfidfEntry>;

// Corpus statistics for TF-IDF weighting with idf = log(N / df). Tokens
// unseen in the corpus are treated as df = 1.
class TfidfModel {
 public:
  TfidfModel(std::size_t documents,
             std::unordered_map<std::string, std::size_t> df)
      : documents_(documents), df_(std::move(df)) {}

  std::size_t documents() const { return documents_; }

  std::size_t document_frequency(const std::string& token) const {
    const auto it = df_.find(token);
    return it == df_.end() ? 0 : it->second;
  }

  double idf(const std::string& token) const {
    const std::size_t df = std::max<std::size_t>(1, document_frequency(token));
    return std::log(static_cast<double>(documents_) / static_cast<double>(df));
  }

  TfidfVector vectorize(const TokenizedName& name) const {
    std::map<std::string, double> counts;
    for (const auto& t : name.tokens) counts[t] += 1.0;
    TfidfVector v;
    v.reserve(counts.size());
    double norm2 = 0.0;
    for (const auto& [token, tf] : counts) {
      const double w = tf * idf(token);
      norm2 += w * w;
      v.push_back({token, unicode::to_u32(token), w});
    }
    if (norm2 > 0.0) {
      const double norm = std::sqrt(norm2);
      for (auto& e : v) e.weight /= norm;
    }
    return v;
  }

 private:
  std::size_t documents_;
  std::unordered_map<std::string, std::size_t> df_;
};

inline TfidfModel build_tfidf(std::span<const TokenizedName> corpus) {
  if (corpus.empty()) {
    throw InputError("cannot build TF-IDF statistics from an empty corpus");
  }
  std::unordered_map<std::string, std::size_t> df;
  for (const auto& name : corpus) {
    const std::set<std::string> distinct(name.tokens.begin(),
                                         name.tokens.end());
    for (const auto& t : distinct) ++df[t];
  }
  return TfidfModel(corpus.size(), std::move(df));
}

// Sum over shared tokens of the weight products.
inline double tfidf_cosine(const TfidfVector& a, const TfidfVector& b) {
  double sum = 0.0;
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() && ib != b.end()) {
    if (ia->token < ib->token) {
      ++ia;
    } else if (ib->token < ia->token) {
      ++ib;
    } else {
      sum += ia->weight * ib->weight;
      ++ia;
      ++ib;
    }
  }
  return sum;
}

inline double tfidf_cosine(const TokenizedName& a, const TokenizedName& b,
                           const TfidfModel& model) {
  return tfidf_cosine(model.vectorize(a), model.vectorize(b));
}

struct JaroWinklerInner {
  double operator()(std::u32string_view x, std::u32string_view y) const {
    return jaro_winkler(x, y);
  }
};

struct ExactInner {
  double operator()(std::u32string_view x, std::u32string_view y) const {
    return x == y ? 1.0 : 0.0;
  }
};

// Soft TF-IDF: every token w of `a` whose best inner similarity D against
// the tokens of `b` reaches theta contributes V(w, a) * V(w*, b) * D, with
// w* the first best-matching token of `b`. Double matching onto the same
// w* is not prevented.
template <class Inner = JaroWinklerInner>
double soft_tfidf(const TfidfVector& a, const TfidfVector& b, double theta,
                  Inner inner = {}) {
  if (!(theta >= 0.0 && theta <= 1.0)) {
    throw ParameterError("soft_tfidf: theta must lie in [0, 1]");
  }
  double sum = 0.0;
  for (const auto& w : a) {
    const TfidfEntry* best = nullptr;
    double best_sim = -1.0;
    for (const auto& v : b) {
      const double s = inner(w.chars, v.chars);
      if (s > best_sim) {
        best_sim = s;
        best = &v;
      }
    }
    if (best && best_sim >= theta) sum += w.weight * best->weight * best_sim;
  }
  return sum;
}

template <class Inner = JaroWinklerInner>
double soft_tfidf(const TokenizedName& a, const TokenizedName& b,
                  const TfidfModel& model, double theta, Inner inner = {}) {
  return soft_tfidf(model.vectorize(a), model.vectorize(b), theta, inner);
}

// Mean over tokens of `a` of the best inner similarity against `b`.
template <class Inner = JaroWinklerInner>
double monge_elkan(std::span<const std::u32string> a,
                   std::span<const std::u32string> b, Inner inner = {}) {
  if (a.empty()) throw InputError("monge_elkan: first name is empty");
  double sum = 0.0;
  for (const auto& x : a) {
    double best = 0.0;
    for (const auto& y : b) best = std::max(best, inner(x, y));
    sum += best;
  }
  return sum / static_cast<double>(a.size());
}

template <class Inner = JaroWinklerInner>
double monge_elkan(const TokenizedName& a, const TokenizedName& b,
                   Inner inner = {}) {
  std::vector<std::u32string> ua, ub;
  for (const auto& t : a.tokens) ua.push_back(unicode::to_u32(t));
  for (const auto& t : b.tokens) ub.push_back(unicode::to_u32(t));
  return monge_elkan(std::span<const std::u32string>(ua),
                     std::span<const std::u32string>(ub), inner);
}

}  // namespace namematch

#endif  // NAMEMATCH_BASELINES_HPP_
