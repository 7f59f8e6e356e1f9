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

#ifndef NAMEMATCH_EVALUATION_HPP_
#define NAMEMATCH_EVALUATION_HPP_

#include <algorithm>
#include <array>
#include <cstdio>
#include <exception>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "namematch/baselines.hpp"
#include "namematch/char_metrics.hpp"
#include "namematch/dataset.hpp"
#include "namematch/errors.hpp"
#include "namematch/frequency.hpp"
#include "namematch/hybrid.hpp"
#include "namematch/name.hpp"
#include "namematch/normalizer.hpp"

namespace namematch {

enum class Algorithm {
  kHybrid,
  kBasicLevenshtein,
  kTokenLevenshtein,
  kJaccard,
  kTfidf,
  kSoftTfidf,
  kJaroWinkler,
  kMongeElkan,
};

inline constexpr std::array<Algorithm, 8> kAllAlgorithms = {
    Algorithm::kHybrid,      Algorithm::kBasicLevenshtein,
    Algorithm::kTokenLevenshtein, Algorithm::kJaccard,
    Algorithm::kTfidf,       Algorithm::kSoftTfidf,
    Algorithm::kJaroWinkler, Algorithm::kMongeElkan};

inline std::string_view to_string(Algorithm a) {
  switch (a) {
    case Algorithm::kHybrid: return "hybrid";
    case Algorithm::kBasicLevenshtein: return "basic-levenshtein";
    case Algorithm::kTokenLevenshtein: return "token-levenshtein";
    case Algorithm::kJaccard: return "jaccard";
    case Algorithm::kTfidf: return "tfidf";
    case Algorithm::kSoftTfidf: return "soft-tfidf";
    case Algorithm::kJaroWinkler: return "jaro-winkler";
    case Algorithm::kMongeElkan: return "monge-elkan";
  }
  return "unknown";
}

inline Algorithm parse_algorithm(std::string_view s) {
  for (Algorithm a : kAllAlgorithms) {
    if (to_string(a) == s) return a;
  }
  throw ParameterError("unknown algorithm '" + std::string(s) + "'");
}

// An algorithm plus its settings. `hybrid` is used by the hybrid matcher;
// `soft_theta` is the CLOSE threshold of soft TF-IDF.
struct MatcherSpec {
  Algorithm algorithm = Algorithm::kHybrid;
  MatchParams hybrid;
  double soft_theta = 0.9;
  // Whole-name Levenshtein ranks by raw edit count unless this is set, in
  // which case the count is divided by the longer name's length.
  bool levenshtein_normalized = false;

  void validate() const {
    if (algorithm == Algorithm::kHybrid) hybrid.validate();
    if (algorithm == Algorithm::kSoftTfidf &&
        !(soft_theta >= 0.0 && soft_theta <= 1.0)) {
      throw ParameterError("soft-tfidf theta must lie in [0, 1]");
    }
  }
};

// The five configurations compared in the reference results: hybrid at
// alpha 1, beta 0.7, theta 0.1; whole-name Levenshtein; Monge-Elkan;
// Jaro-Winkler; soft TF-IDF with Jaro-Winkler at theta 0.9.
inline std::vector<MatcherSpec> reference_comparison_specs() {
  MatcherSpec hybrid;
  hybrid.hybrid = {1.0, 0.7, 0.1};
  MatcherSpec lev{Algorithm::kBasicLevenshtein};
  MatcherSpec me{Algorithm::kMongeElkan};
  MatcherSpec jw{Algorithm::kJaroWinkler};
  MatcherSpec soft{Algorithm::kSoftTfidf};
  soft.soft_theta = 0.9;
  return {hybrid, lev, me, jw, soft};
}

// A name decoded once into every representation the scorers need.
struct PreparedName {
  TokenizedName name;
  PreparedTokens tokens;
  std::u32string joined;
  std::vector<std::string> token_set;  // sorted, unique
  TfidfVector tfidf;
};

// Read-only state shared by all evaluations against one base set: the
// prepared base names, frequency table, and TF-IDF statistics of the base.
class MatchContext {
 public:
  MatchContext(const BaseSet& base, FrequencyTable table,
               NormalizationRules rules = default_rules())
      : base_(&base),
        table_(std::move(table)),
        rules_(std::move(rules)),
        tfidf_(build_tfidf(base.normalized)) {
    prepared_.reserve(base.size());
    for (const auto& n : base.normalized) prepared_.push_back(prepare(n));
  }
  // The context keeps a reference to the base set.
  MatchContext(BaseSet&&, FrequencyTable, NormalizationRules = {}) = delete;

  PreparedName prepare(const TokenizedName& name) const {
    PreparedName p;
    p.name = name;
    p.tokens = prepare_tokens(name, table_);
    p.joined = unicode::to_u32(join_tokens(name));
    p.token_set = name.tokens;
    std::sort(p.token_set.begin(), p.token_set.end());
    p.token_set.erase(std::unique(p.token_set.begin(), p.token_set.end()),
                      p.token_set.end());
    p.tfidf = tfidf_.vectorize(name);
    return p;
  }

  PreparedName prepare_raw(std::string_view raw) const {
    return prepare(normalize_name(raw, rules_));
  }

  const BaseSet& base() const { return *base_; }
  const std::vector<PreparedName>& prepared_base() const { return prepared_; }
  const FrequencyTable& table() const { return table_; }
  const NormalizationRules& rules() const { return rules_; }
  const TfidfModel& tfidf() const { return tfidf_; }

 private:
  const BaseSet* base_;
  FrequencyTable table_;
  NormalizationRules rules_;
  TfidfModel tfidf_;
  std::vector<PreparedName> prepared_;
};

inline double ratio_similarity(std::size_t distance, std::size_t longest) {
  if (longest == 0) return 1.0;
  return 1.0 - static_cast<double>(distance) / static_cast<double>(longest);
}

// Similarity in which larger is better; identical names score highest
// under every algorithm. Empty queries score 0.
inline double score(const MatcherSpec& spec, const PreparedName& q,
                    const PreparedName& c) {
  if (q.name.empty() || c.name.empty()) return 0.0;
  switch (spec.algorithm) {
    case Algorithm::kHybrid:
      return hybrid_similarity(q.tokens, c.tokens, spec.hybrid);
    case Algorithm::kBasicLevenshtein:
      if (spec.levenshtein_normalized) {
        return ratio_similarity(char_levenshtein(q.joined, c.joined),
                                std::max(q.joined.size(), c.joined.size()));
      }
      return 1.0 / (1.0 + static_cast<double>(
                              char_levenshtein(q.joined, c.joined)));
    case Algorithm::kTokenLevenshtein:
      return ratio_similarity(edit_distance(q.name.tokens, c.name.tokens),
                              std::max(q.name.size(), c.name.size()));
    case Algorithm::kJaccard:
      return jaccard_sorted(q.token_set, c.token_set);
    case Algorithm::kTfidf:
      return tfidf_cosine(q.tfidf, c.tfidf);
    case Algorithm::kSoftTfidf:
      return soft_tfidf(q.tfidf, c.tfidf, spec.soft_theta);
    case Algorithm::kJaroWinkler:
      return jaro_winkler(q.joined, c.joined);
    case Algorithm::kMongeElkan:
      return monge_elkan(std::span<const std::u32string>(q.tokens.tokens),
                         std::span<const std::u32string>(c.tokens.tokens));
  }
  return 0.0;
}

// Index of the best-scoring base record. The running maximum starts at 0
// and only a strictly greater score replaces it, so the earliest record
// wins ties and a query scoring 0 everywhere has no winner.
inline std::optional<std::size_t> best_match(const MatcherSpec& spec,
                                             const PreparedName& query,
                                             const MatchContext& ctx) {
  double running_max = 0.0;
  std::optional<std::size_t> winner;
  const auto& base = ctx.prepared_base();
  for (std::size_t j = 0; j < base.size(); ++j) {
    const double s = score(spec, query, base[j]);
    if (s > running_max) {
      running_max = s;
      winner = j;
    }
  }
  return winner;
}

struct RankedMatch {
  std::size_t index;
  double similarity;
};

// All base records sorted by descending similarity, ties by base position;
// truncated to k.
inline std::vector<RankedMatch> top_matches(const MatcherSpec& spec,
                                            const PreparedName& query,
                                            const MatchContext& ctx,
                                            std::size_t k) {
  std::vector<RankedMatch> all;
  const auto& base = ctx.prepared_base();
  all.reserve(base.size());
  for (std::size_t j = 0; j < base.size(); ++j) {
    all.push_back({j, score(spec, query, base[j])});
  }
  std::stable_sort(all.begin(), all.end(), [](const auto& x, const auto& y) {
    return x.similarity > y.similarity;
  });
  if (all.size() > k) all.resize(k);
  return all;
}

inline std::size_t default_workers() {
  return std::max(1u, std::thread::hardware_concurrency());
}

// Runs fn(i) for i in [0, n) on up to `workers` threads, in contiguous
// chunks. fn must only write to its own slot.
template <class Fn>
void parallel_for(std::size_t n, std::size_t workers, Fn&& fn) {
  workers = std::clamp<std::size_t>(workers, 1, std::max<std::size_t>(n, 1));
  if (workers == 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::vector<std::thread> threads;
  std::vector<std::exception_ptr> errors(workers);
  const std::size_t chunk = (n + workers - 1) / workers;
  for (std::size_t w = 0; w < workers; ++w) {
    threads.emplace_back([&, w] {
      try {
        const std::size_t end = std::min(n, (w + 1) * chunk);
        for (std::size_t i = w * chunk; i < end; ++i) fn(i);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : threads) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

// One cell of a report: a matcher configuration on one test set.
struct ReportEntry {
  MatcherSpec spec;
  ErrorType error_type = ErrorType::kOneChar;
  std::size_t n = 0;
  std::size_t true_matches = 0;

  double success() const {
    return n == 0 ? 0.0
                  : static_cast<double>(true_matches) / static_cast<double>(n);
  }
};

struct SuccessBounds {
  double min = 0.0;
  double max = 0.0;
};

struct EvaluationReport {
  std::vector<ReportEntry> entries;
  std::string base_checksum;
  std::map<std::string, std::uint64_t> seeds;  // error type -> test seed
  double wall_seconds = 0.0;

  // Lowest and highest success of an algorithm label across error types.
  std::map<std::string, SuccessBounds> bounds() const;
};

// Checks every test reference against the base before any scanning.
inline void check_test_against_base(const TestSet& test, const BaseSet& base) {
  for (const auto& row : test.rows) {
    if (!base.index_of(row.ref_b_id)) {
      throw InputError("test row " + row.t_id + " references unknown B_ID '" +
                       row.ref_b_id + "'");
    }
  }
}

// Top-1 success: the fraction of test rows whose best-scoring base record
// is their reference record.
inline ReportEntry success_match_percentage(const TestSet& test,
                                            const MatchContext& ctx,
                                            const MatcherSpec& spec,
                                            std::size_t workers = 1) {
  spec.validate();
  check_test_against_base(test, ctx.base());
  std::vector<PreparedName> queries;
  queries.reserve(test.size());
  for (const auto& row : test.rows) queries.push_back(ctx.prepare_raw(row.dname));

  std::vector<char> hit(test.size(), 0);
  parallel_for(test.size(), workers, [&](std::size_t i) {
    const auto winner = best_match(spec, queries[i], ctx);
    hit[i] = winner && ctx.base().records[*winner].id == test.rows[i].ref_b_id;
  });
  ReportEntry e;
  e.spec = spec;
  e.error_type = test.error_type;
  e.n = test.size();
  e.true_matches = static_cast<std::size_t>(std::count(hit.begin(), hit.end(), 1));
  return e;
}

// Hybrid success for every (theta, beta) cell, theta-major.
inline EvaluationReport parameter_sweep(const TestSet& test,
                                        const MatchContext& ctx,
                                        const std::vector<double>& beta_grid,
                                        const std::vector<double>& theta_grid,
                                        const MatchParams& base_params,
                                        std::size_t workers = 1) {
  if (beta_grid.empty() || theta_grid.empty()) {
    throw ParameterError("sweep grids must be non-empty");
  }
  EvaluationReport report;
  report.base_checksum = ctx.base().checksum;
  report.seeds[std::string(to_string(test.error_type))] = test.seed;
  for (double theta : theta_grid) {
    for (double beta : beta_grid) {
      MatcherSpec spec;
      spec.hybrid = base_params;
      spec.hybrid.beta = beta;
      spec.hybrid.theta = theta;
      report.entries.push_back(
          success_match_percentage(test, ctx, spec, workers));
    }
  }
  return report;
}

// Success of every spec on every test set, spec-major.
inline EvaluationReport compare_algorithms(const std::vector<TestSet>& tests,
                                           const MatchContext& ctx,
                                           const std::vector<MatcherSpec>& specs,
                                           std::size_t workers = 1) {
  if (tests.empty() || specs.empty()) {
    throw ParameterError("comparison needs at least one test set and spec");
  }
  EvaluationReport report;
  report.base_checksum = ctx.base().checksum;
  for (const auto& t : tests) {
    report.seeds[std::string(to_string(t.error_type))] = t.seed;
  }
  for (const auto& spec : specs) {
    for (const auto& t : tests) {
      report.entries.push_back(success_match_percentage(t, ctx, spec, workers));
    }
  }
  return report;
}

namespace detail {

inline std::string format_number(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", v);
  return buf;
}

inline std::string format_fixed(double v, int digits) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

}  // namespace detail

// Human-readable label: the algorithm, with its parameters where they
// matter ("hybrid(a=1,b=0.7,t=0.1)", "soft-tfidf(t=0.9)").
inline std::string label(const MatcherSpec& spec) {
  std::string out(to_string(spec.algorithm));
  if (spec.algorithm == Algorithm::kHybrid) {
    out += "(a=" + detail::format_number(spec.hybrid.alpha) +
           ",b=" + detail::format_number(spec.hybrid.beta) +
           ",t=" + detail::format_number(spec.hybrid.theta) + ")";
  } else if (spec.algorithm == Algorithm::kSoftTfidf) {
    out += "(t=" + detail::format_number(spec.soft_theta) + ")";
  } else if (spec.algorithm == Algorithm::kBasicLevenshtein &&
             spec.levenshtein_normalized) {
    out += "(normalized)";
  }
  return out;
}

inline std::map<std::string, SuccessBounds> EvaluationReport::bounds() const {
  std::map<std::string, SuccessBounds> out;
  for (const auto& e : entries) {
    const auto key = label(e.spec);
    const double s = e.success();
    auto [it, inserted] = out.try_emplace(key, SuccessBounds{s, s});
    if (!inserted) {
      it->second.min = std::min(it->second.min, s);
      it->second.max = std::max(it->second.max, s);
    }
  }
  return out;
}

// Machine-readable rows
// `algorithm,error_type,alpha,beta,theta,n,true_matches,success`; fields
// that do not apply to an algorithm are left empty. Provenance goes in
// leading '#' comments; timing is never written, so the bytes depend only
// on the inputs.
inline void write_report_csv(std::ostream& os, const EvaluationReport& r) {
  os << "# base_checksum=" << r.base_checksum << '\n';
  for (const auto& [type, seed] : r.seeds) {
    os << "# seed[" << type << "]=" << seed << '\n';
  }
  os << "algorithm,error_type,alpha,beta,theta,n,true_matches,success\n";
  for (const auto& e : r.entries) {
    std::string alpha, beta, theta;
    if (e.spec.algorithm == Algorithm::kHybrid) {
      alpha = detail::format_number(e.spec.hybrid.alpha);
      beta = detail::format_number(e.spec.hybrid.beta);
      theta = detail::format_number(e.spec.hybrid.theta);
    } else if (e.spec.algorithm == Algorithm::kSoftTfidf) {
      theta = detail::format_number(e.spec.soft_theta);
    }
    const std::string name = e.spec.algorithm == Algorithm::kBasicLevenshtein
                                 ? label(e.spec)
                                 : std::string(to_string(e.spec.algorithm));
    os << name << ',' << to_string(e.error_type) << ','
       << alpha << ',' << beta << ',' << theta << ',' << e.n << ','
       << e.true_matches << ',' << detail::format_fixed(e.success(), 6)
       << '\n';
  }
}

// Sweep grid: theta rows, beta columns, success percentages.
inline void render_sweep_grid(std::ostream& os, const EvaluationReport& r,
                              const std::vector<double>& beta_grid,
                              const std::vector<double>& theta_grid) {
  os << "theta\\beta";
  for (double b : beta_grid) os << '\t' << detail::format_number(b);
  os << '\n';
  std::size_t i = 0;
  for (double t : theta_grid) {
    os << detail::format_number(t);
    for (std::size_t j = 0; j < beta_grid.size(); ++j, ++i) {
      os << '\t' << detail::format_fixed(100.0 * r.entries.at(i).success(), 2)
         << '%';
    }
    os << '\n';
  }
}

// Comparison grid: error-type rows, one column per algorithm, then the
// per-algorithm min and max rows.
inline void render_comparison_grid(std::ostream& os,
                                   const EvaluationReport& r) {
  std::vector<std::string> labels;
  std::vector<ErrorType> types;
  for (const auto& e : r.entries) {
    const auto l = label(e.spec);
    if (std::find(labels.begin(), labels.end(), l) == labels.end()) {
      labels.push_back(l);
    }
    if (std::find(types.begin(), types.end(), e.error_type) == types.end()) {
      types.push_back(e.error_type);
    }
  }
  os << "error_type";
  for (const auto& l : labels) os << '\t' << l;
  os << '\n';
  const auto cell = [&](const std::string& l, ErrorType t) -> std::string {
    for (const auto& e : r.entries) {
      if (e.error_type == t && label(e.spec) == l) {
        return detail::format_fixed(100.0 * e.success(), 2) + "%";
      }
    }
    return "-";
  };
  for (ErrorType t : types) {
    os << to_string(t);
    for (const auto& l : labels) os << '\t' << cell(l, t);
    os << '\n';
  }
  const auto b = r.bounds();
  os << "min";
  for (const auto& l : labels) {
    os << '\t' << detail::format_fixed(100.0 * b.at(l).min, 2) << '%';
  }
  os << "\nmax";
  for (const auto& l : labels) {
    os << '\t' << detail::format_fixed(100.0 * b.at(l).max, 2) << '%';
  }
  os << '\n';
}

}  // namespace namematch

#endif  // NAMEMATCH_EVALUATION_HPP_
