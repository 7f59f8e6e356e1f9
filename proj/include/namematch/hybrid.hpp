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

#ifndef NAMEMATCH_HYBRID_HPP_
#define NAMEMATCH_HYBRID_HPP_

#include <algorithm>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "namematch/char_metrics.hpp"
#include "namematch/errors.hpp"
#include "namematch/frequency.hpp"
#include "namematch/name.hpp"
#include "namematch/unicode.hpp"

namespace namematch {

// Tuning knobs of the hybrid token-level edit distance.
struct MatchParams {
  double alpha = 1.0;  // frequency weighting factor
  double beta = 0.7;   // cost multiplier for edits at middle positions
  double theta = 0.1;  // token pairs further apart than this cost 1
  double freq_floor = 0.0;
  // When false, border cells (pure insertion/deletion runs) use position
  // weights only.
  bool frequency_on_borders = true;

  void validate() const {
    const auto unit = [](double v) { return v >= 0.0 && v <= 1.0; };
    if (!unit(alpha)) throw ParameterError("alpha must lie in [0, 1]");
    if (!unit(beta)) throw ParameterError("beta must lie in [0, 1]");
    if (!unit(theta)) throw ParameterError("theta must lie in [0, 1]");
    if (!(freq_floor >= 0.0 && freq_floor < 1.0)) {
      throw ParameterError("freq_floor must lie in [0, 1)");
    }
  }
};

// Accumulated weighted edit cost H[K, L] for names of k_len and l_len tokens.
struct HybridCost {
  double h = 0.0;
  std::size_t k_len = 0;
  std::size_t l_len = 0;

  double similarity() const {
    const double longest = static_cast<double>(std::max(k_len, l_len));
    return std::clamp(1.0 - h / longest, 0.0, 1.0);
  }
};

// Character-level cost of pairing two tokens: their normalized edit
// distance when it is within theta, otherwise a full edit (1).
inline double token_cost(std::u32string_view a, std::u32string_view b,
                         double theta) {
  if (a == b) return 0.0;
  const std::size_t longest = std::max(a.size(), b.size());
  const std::size_t diff =
      a.size() > b.size() ? a.size() - b.size() : b.size() - a.size();
  // The length difference bounds the distance from below.
  if (static_cast<double>(diff) / static_cast<double>(longest) > theta) {
    return 1.0;
  }
  const double d = normalized_char_distance(a, b);
  return d <= theta ? d : 1.0;
}

inline double token_cost(std::string_view a, std::string_view b,
                         double theta) {
  return token_cost(unicode::to_u32(a), unicode::to_u32(b), theta);
}

// 1-based indices. Full cost when pairing the two first or the two last
// tokens, beta anywhere else.
inline double position_weight(std::size_t k, std::size_t l, std::size_t K,
                              std::size_t L, double beta) {
  return ((k == 1 && l == 1) || (k == K && l == L)) ? 1.0 : beta;
}

// Border cells index a single name: its first and last tokens cost 1.
inline double border_position_weight(std::size_t index, std::size_t count,
                                     double beta) {
  return (index == 1 || index == count) ? 1.0 : beta;
}

enum class EditOp { kDelete, kInsert, kSubstitute };

// Position x frequency multiplier of one edit. Deletions and
// substitutions weight the token of `a`, insertions the token of `b`.
inline double edit_cost(EditOp op, std::size_t k, std::size_t l,
                        std::size_t K, std::size_t L, std::string_view a_k,
                        std::string_view b_l, const MatchParams& params,
                        const FrequencyTable& table) {
  const std::string_view w = op == EditOp::kInsert ? b_l : a_k;
  return position_weight(k, l, K, L, params.beta) *
         frequency_weight(w, table, params.alpha, params.freq_floor);
}

// Tokens decoded once together with tf / mtf per token, for repeated
// scoring against many candidates.
struct PreparedTokens {
  std::vector<std::u32string> tokens;
  std::vector<double> relative_tf;

  std::size_t size() const { return tokens.size(); }
};

inline PreparedTokens prepare_tokens(const TokenizedName& name,
                                     const FrequencyTable& table) {
  PreparedTokens out;
  out.tokens.reserve(name.size());
  out.relative_tf.reserve(name.size());
  for (const auto& t : name.tokens) {
    out.tokens.push_back(unicode::to_u32(t));
    out.relative_tf.push_back(table.relative(t));
  }
  return out;
}

// Full DP table plus the operation chosen at each cell, for inspection.
struct HybridMatrix {
  std::size_t k_len = 0;
  std::size_t l_len = 0;
  std::vector<double> cells;  // (k_len + 1) x (l_len + 1), row-major
  std::vector<EditOp> ops;    // same layout; unused at [0, 0]

  double at(std::size_t k, std::size_t l) const {
    return cells[k * (l_len + 1) + l];
  }
  EditOp op_at(std::size_t k, std::size_t l) const {
    return ops[k * (l_len + 1) + l];
  }
};

struct AlignmentStep {
  EditOp op;
  std::size_t k;  // 1-based token index in a (0 for insertions at border)
  std::size_t l;  // 1-based token index in b
  double cost;
};

namespace detail {

// H[k,l] = min(H[k-1,l] + C_del, H[k,l-1] + C_ins, H[k-1,l-1] + tc * C_sub).
// Minimum taken in the order delete, insert, substitute; first wins.
template <class TokenCostFn, class WeightA, class WeightB>
double hybrid_fill(std::size_t K, std::size_t L, const MatchParams& p,
                   TokenCostFn&& tc, WeightA&& fa, WeightB&& fb,
                   std::vector<double>& H, std::vector<EditOp>* ops) {
  const std::size_t stride = L + 1;
  H.assign((K + 1) * stride, 0.0);
  if (ops) ops->assign((K + 1) * stride, EditOp::kSubstitute);
  for (std::size_t k = 1; k <= K; ++k) {
    const double f = p.frequency_on_borders ? fa(k - 1) : 1.0;
    H[k * stride] =
        H[(k - 1) * stride] + border_position_weight(k, K, p.beta) * f;
    if (ops) (*ops)[k * stride] = EditOp::kDelete;
  }
  for (std::size_t l = 1; l <= L; ++l) {
    const double f = p.frequency_on_borders ? fb(l - 1) : 1.0;
    H[l] = H[l - 1] + border_position_weight(l, L, p.beta) * f;
    if (ops) (*ops)[l] = EditOp::kInsert;
  }
  for (std::size_t k = 1; k <= K; ++k) {
    const double f_a = fa(k - 1);
    for (std::size_t l = 1; l <= L; ++l) {
      const double pos = position_weight(k, l, K, L, p.beta);
      const double c_del = pos * f_a;
      const double c_ins = pos * fb(l - 1);
      const double del = H[(k - 1) * stride + l] + c_del;
      const double ins = H[k * stride + l - 1] + c_ins;
      // An exact token match is free whatever its position or frequency.
      const double t = tc(k - 1, l - 1);
      const double sub = H[(k - 1) * stride + l - 1] + t * c_del;
      double best = del;
      EditOp op = EditOp::kDelete;
      if (ins < best) {
        best = ins;
        op = EditOp::kInsert;
      }
      if (sub < best) {
        best = sub;
        op = EditOp::kSubstitute;
      }
      H[k * stride + l] = best;
      if (ops) (*ops)[k * stride + l] = op;
    }
  }
  return H[K * stride + L];
}

inline void require_non_empty(std::size_t K, std::size_t L) {
  if (K == 0 || L == 0) {
    throw InputError("hybrid distance is undefined for an empty name");
  }
}

inline double hybrid_run(const PreparedTokens& a, const PreparedTokens& b,
                         const MatchParams& p, std::vector<double>& H,
                         std::vector<EditOp>* ops) {
  const auto fa = [&](std::size_t i) {
    return frequency_weight(a.relative_tf[i], p.alpha, p.freq_floor);
  };
  const auto fb = [&](std::size_t j) {
    return frequency_weight(b.relative_tf[j], p.alpha, p.freq_floor);
  };
  const auto tc = [&](std::size_t i, std::size_t j) {
    return token_cost(a.tokens[i], b.tokens[j], p.theta);
  };
  return hybrid_fill(a.size(), b.size(), p, tc, fa, fb, H, ops);
}

}  // namespace detail

// Weighted token-level edit distance between two prepared names.
inline HybridCost hybrid_distance(const PreparedTokens& a,
                                  const PreparedTokens& b,
                                  const MatchParams& params) {
  params.validate();
  detail::require_non_empty(a.size(), b.size());
  thread_local std::vector<double> scratch;
  const double h = detail::hybrid_run(a, b, params, scratch, nullptr);
  return {h, a.size(), b.size()};
}

inline HybridCost hybrid_distance(const TokenizedName& a,
                                  const TokenizedName& b,
                                  const MatchParams& params,
                                  const FrequencyTable& table) {
  return hybrid_distance(prepare_tokens(a, table), prepare_tokens(b, table),
                         params);
}

inline double hybrid_similarity(const PreparedTokens& a,
                                const PreparedTokens& b,
                                const MatchParams& params) {
  return hybrid_distance(a, b, params).similarity();
}

inline double hybrid_similarity(const TokenizedName& a, const TokenizedName& b,
                                const MatchParams& params,
                                const FrequencyTable& table) {
  return hybrid_distance(a, b, params, table).similarity();
}

inline HybridMatrix hybrid_matrix(const TokenizedName& a,
                                  const TokenizedName& b,
                                  const MatchParams& params,
                                  const FrequencyTable& table) {
  params.validate();
  detail::require_non_empty(a.size(), b.size());
  HybridMatrix m;
  m.k_len = a.size();
  m.l_len = b.size();
  detail::hybrid_run(prepare_tokens(a, table), prepare_tokens(b, table),
                     params, m.cells, &m.ops);
  return m;
}

// Backtrace of the chosen operations from [K, L] to [0, 0], in forward
// order. Zero-cost substitutions (exact matches) are included.
inline std::vector<AlignmentStep> hybrid_alignment(const HybridMatrix& m) {
  std::vector<AlignmentStep> steps;
  std::size_t k = m.k_len;
  std::size_t l = m.l_len;
  while (k > 0 || l > 0) {
    const EditOp op = m.op_at(k, l);
    const double here = m.at(k, l);
    switch (op) {
      case EditOp::kDelete:
        steps.push_back({op, k, l, here - m.at(k - 1, l)});
        --k;
        break;
      case EditOp::kInsert:
        steps.push_back({op, k, l, here - m.at(k, l - 1)});
        --l;
        break;
      case EditOp::kSubstitute:
        steps.push_back({op, k, l, here - m.at(k - 1, l - 1)});
        --k;
        --l;
        break;
    }
  }
  std::reverse(steps.begin(), steps.end());
  return steps;
}

}  // namespace namematch

#endif  // NAMEMATCH_HYBRID_HPP_
