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

// End-to-end acceptance checks. Prints one PASS/FAIL line per criterion and
// exits non-zero if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "namematch.hpp"
#include "oracles.hpp"

namespace nm = namematch;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

using Check = std::function<Outcome()>;

nm::MatchParams params(double alpha, double beta, double theta) {
  nm::MatchParams p;
  p.alpha = alpha;
  p.beta = beta;
  p.theta = theta;
  return p;
}

std::string fmt(const char* f, double a, double b = 0, double c = 0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, a, b, c);
  return buf;
}

nm::TokenizedName as_name(const std::string& letters) {
  nm::TokenizedName n;
  for (char c : letters) n.tokens.push_back(std::string(1, c));
  return n;
}

// 1. Position-only worked table.
Outcome worked_table() {
  const nm::TokenizedName a{"w1", "w2", "w3", "w4", "w5"};
  const nm::TokenizedName b{"w1", "w3", "w4", "w6"};
  const nm::FrequencyTable none;
  Outcome o;
  for (double beta : {0.0, 0.1, 0.3, 0.5, 0.7, 1.0}) {
    const auto c = nm::hybrid_distance(a, b, params(0, beta, 0), none);
    if (std::abs(c.h - (1 + beta)) > 1e-9 ||
        std::abs(c.similarity() - (1 - (1 + beta) / 5)) > 1e-9) {
      o.pass = false;
      o.detail += fmt("beta=%g H=%.12g; ", beta, c.h);
    }
  }
  if (o.pass) o.detail = "H = 1 + beta for six beta values";
  return o;
}

// 2. Token-level distance example.
Outcome token_example() {
  const nm::TokenizedName a{"Mohamed", "Ahmed", "Hassan", "Ali"};
  const nm::TokenizedName b{"Mohamed", "Hassan", "Ali", "Ibrahim"};
  const auto c = nm::hybrid_distance(a, b, params(0, 1, 0), {});
  return {c.h == 2.0 && c.similarity() == 0.5,
          fmt("H=%g similarity=%g", c.h, c.similarity())};
}

// 3. Unit-parameter hybrid equals unit-cost token edit distance.
Outcome token_oracle() {
  const auto p = params(0, 1, 0);
  std::size_t checked = 0, bad = 0;
  const auto words = oracle::all_strings(std::string("xyz"), 4);
  for (const auto& s : words) {
    for (const auto& t : words) {
      if (s.empty() || t.empty()) continue;  // distance needs tokens
      ++checked;
      const auto h = nm::hybrid_distance(as_name(s), as_name(t), p, {}).h;
      bad += h != static_cast<double>(oracle::edit_distance(s, t));
    }
  }
  std::mt19937_64 rng(3);
  for (int i = 0; i < 1000; ++i) {
    std::string s(1 + rng() % 6, 'x'), t(1 + rng() % 6, 'x');
    for (auto& c : s) c = "xyz"[rng() % 3];
    for (auto& c : t) c = "xyz"[rng() % 3];
    ++checked;
    const auto h = nm::hybrid_distance(as_name(s), as_name(t), p, {}).h;
    bad += h != static_cast<double>(oracle::edit_distance(s, t));
  }
  return {bad == 0, fmt("%g pairs, %g mismatches", double(checked), double(bad))};
}

// 4. Character Levenshtein against the recursive oracle.
Outcome char_oracle() {
  std::size_t checked = 0, bad = 0;
  const auto words = oracle::all_strings(std::u32string(U"abc"), 4);
  for (const auto& s : words) {
    for (const auto& t : words) {
      ++checked;
      bad += nm::char_levenshtein(s, t) != oracle::edit_distance(s, t);
    }
  }
  return {bad == 0, fmt("%g pairs, %g mismatches", double(checked), double(bad))};
}

// 5. Monotonicity in theta, beta and alpha.
Outcome monotonicity() {
  const std::vector<std::string> vocab = {
      "محمد", "محمود", "احمد", "حامد", "حميد", "على",  "علاء",
      "حسن",  "حسين",  "فوزى", "فوزية", "ابراهيم", "ابراهم", "سيد"};
  const std::vector<double> grid = {0, 0.1, 0.3, 0.5, 0.7, 1.0};
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> share(0.001, 0.2);
  std::size_t violations = 0;
  for (int i = 0; i < 500; ++i) {
    nm::TokenizedName a, b;
    for (int j = 0, n = 1 + static_cast<int>(rng() % 6); j < n; ++j) {
      a.tokens.push_back(vocab[rng() % vocab.size()]);
    }
    for (int j = 0, n = 1 + static_cast<int>(rng() % 6); j < n; ++j) {
      b.tokens.push_back(vocab[rng() % vocab.size()]);
    }
    std::unordered_map<std::string, double> tf;
    for (const auto& t : vocab) {
      if (rng() % 2) tf[t] = share(rng);
    }
    const nm::FrequencyTable table(tf);
    double s[6][6][6];
    for (int x = 0; x < 6; ++x) {
      for (int y = 0; y < 6; ++y) {
        for (int z = 0; z < 6; ++z) {
          s[x][y][z] = nm::hybrid_similarity(
              a, b, params(grid[x], grid[y], grid[z]), table);
        }
      }
    }
    for (int x = 0; x < 6; ++x) {
      for (int y = 0; y < 6; ++y) {
        for (int z = 1; z < 6; ++z) {
          violations += s[x][y][z] < s[x][y][z - 1] - 1e-12;  // theta up
          violations += s[x][z][y] > s[x][z - 1][y] + 1e-12;  // beta down
          violations += s[z][x][y] < s[z - 1][x][y] - 1e-12;  // alpha up
        }
      }
    }
  }
  return {violations == 0, fmt("%g violations", double(violations))};
}

// 6. Behavioural preferences on four-token names.
Outcome preferences() {
  const nm::FrequencyTable none;
  const nm::TokenizedName full{"حامد", "فوزى", "سالم", "ابراهيم"};
  const double middle = nm::hybrid_similarity(
      {"حامد", "سالم", "ابراهيم"}, full, params(0, 0.7, 0.1), none);
  const double first = nm::hybrid_similarity(
      {"فوزى", "سالم", "ابراهيم"}, full, params(0, 0.7, 0.1), none);

  const auto table = nm::default_frequency_table();
  const nm::TokenizedName with_common{"حامد", "محمد", "فوزى", "ابراهيم"};
  // The full name goes first: substitution is weighted by the first
  // argument's token, so a common token there could absorb a rare one.
  const double common = nm::hybrid_similarity(
      with_common, {"حامد", "فوزى", "ابراهيم"}, params(1, 0.7, 0.1), table);
  const double rare = nm::hybrid_similarity(
      with_common, {"حامد", "محمد", "ابراهيم"}, params(1, 0.7, 0.1), table);

  const double swapped = nm::hybrid_distance(
      {"حامد", "سالم", "فوزى", "ابراهيم"}, full, params(0, 1, 0), none).h;
  const double omitted = nm::hybrid_distance(
      {"حامد", "سالم", "ابراهيم"}, full, params(0, 1, 0), none).h;
  return {middle > first && common > rare && swapped > omitted,
          fmt("middle %.3f > first %.3f; common %.3f", middle, first, common) +
              fmt(" > rare %.3f; transposition %g > omission %g", rare,
                  swapped, omitted)};
}

// 7. Frequency weights from the default table.
Outcome frequency_arithmetic() {
  const auto t = nm::default_frequency_table();
  const double top = nm::frequency_weight("محمد", t, 1.0, 0.0);
  const double second = nm::frequency_weight("احمد", t, 1.0, 0.0);
  return {top == 0.0 && std::abs(second - (1 - 0.0598 / 0.1138)) <= 1e-9,
          fmt("F(most common)=%g F(second)=%.12f", top, second)};
}

// 8. Normalization: directed rewrites and idempotence.
Outcome normalization() {
  const auto rules = nm::default_rules();
  const auto norm = [&](const std::string& s) {
    return nm::join_tokens(nm::normalize_name(s, rules));
  };
  const std::vector<std::pair<std::string, std::string>> directed = {
      {"أحمد", "احمد"},          {"إبراهيم", "ابراهيم"},
      {"آمال", "امال"},          {"علي", "على"},
      {"  محمد    على ", "محمد على"}, {"د. محمد على", "محمد على"},
      {"عبد الله", "عبدالله"},   {"نور الدين", "نورالدين"}};
  Outcome o;
  for (const auto& [in, want] : directed) {
    if (norm(in) != want) {
      o.pass = false;
      o.detail += in + " -> " + norm(in) + "; ";
    }
  }
  const std::vector<std::string> pieces = {
      "محمد", "أحمد", "إبراهيم", "آمال", "علي", "عبد", "الدين", "الله",
      "نور",  "د.",   "السيد",   "/د",   "مُحَمَّد", "حسـن", "،",    "-"};
  std::mt19937_64 rng(8);
  int unstable = 0;
  for (int i = 0; i < 200; ++i) {
    std::string raw;
    for (int j = 0, n = 1 + static_cast<int>(rng() % 7); j < n; ++j) {
      raw += (rng() % 3 ? " " : "  ") + pieces[rng() % pieces.size()];
    }
    const auto once = nm::normalize_name(raw, rules);
    unstable += nm::normalize_name(nm::join_tokens(once), rules) != once;
  }
  if (unstable) o.pass = false;
  o.detail += fmt("%g directed rewrites, %g/200 fuzz names not idempotent",
                  double(directed.size()), double(unstable));
  return o;
}

// 9. Directional trends on the synthetic base.
Outcome synthetic_trends() {
  const auto base = nm::generate_synthetic_base(
      2000, 400, nm::default_frequency_table(), 7);
  const nm::MatchContext ctx(base, nm::default_frequency_table());
  std::vector<nm::TestSet> tests;
  for (auto e : nm::kAllErrorTypes) {
    tests.push_back(nm::generate_test_set(base, e, 300, 11));
  }
  const auto workers = nm::default_workers();
  const auto by_type = [&](nm::ErrorType e) -> const nm::TestSet& {
    for (const auto& t : tests) {
      if (t.error_type == e) return t;
    }
    throw nm::Error("missing test set");
  };
  const auto success = [&](nm::ErrorType e, double beta, double theta) {
    nm::MatcherSpec spec;
    spec.hybrid = params(1, beta, theta);
    return nm::success_match_percentage(by_type(e), ctx, spec, workers)
        .success();
  };

  nm::MatcherSpec hybrid;
  hybrid.hybrid = params(1, 0.7, 0.1);
  const nm::MatcherSpec lev{nm::Algorithm::kBasicLevenshtein};
  const auto report = nm::compare_algorithms(tests, ctx, {hybrid, lev}, workers);
  const auto bounds = report.bounds();
  const double hybrid_min = bounds.at(nm::label(hybrid)).min;
  const double lev_min = bounds.at(nm::label(lev)).min;
  double omit_second = 0;
  for (const auto& e : report.entries) {
    if (e.spec.algorithm == nm::Algorithm::kHybrid &&
        e.error_type == nm::ErrorType::kOmitSecond) {
      omit_second = e.success();
    }
  }
  const double one_tolerant = success(nm::ErrorType::kOneChar, 0.7, 0.5);
  const double one_strict = success(nm::ErrorType::kOneChar, 0.0, 0.0);
  const double pair_tight = success(nm::ErrorType::kOmitSecondAndThird, 0.7, 0.1);
  const double pair_loose = success(nm::ErrorType::kOmitSecondAndThird, 0.7, 1.0);

  const bool i = omit_second >= 0.95;
  const bool ii = hybrid_min - lev_min >= 0.20;
  const bool iii = one_tolerant > one_strict;
  const bool iv = pair_tight > pair_loose;
  return {i && ii && iii && iv,
          fmt("(i) omit-second %.3f; ", omit_second) +
              fmt("(ii) hybrid min %.3f vs levenshtein min %.3f; ", hybrid_min,
                  lev_min) +
              fmt("(iii) %.3f > %.3f; ", one_tolerant, one_strict) +
              fmt("(iv) %.3f > %.3f", pair_tight, pair_loose)};
}

// 10. Full pass on a base of 8140 names, timed on one worker.
Outcome performance() {
  const auto base = nm::generate_synthetic_base(
      8140, 1000, nm::default_frequency_table(), 10);
  const nm::MatchContext ctx(base, nm::default_frequency_table());
  const std::vector<nm::TestSet> tests = {nm::generate_test_set(
      base, nm::ErrorType::kOmitSecondAndThird, 300, 12)};
  const std::vector<nm::MatcherSpec> specs = {nm::MatcherSpec{}};
  const auto start = std::chrono::steady_clock::now();
  const auto single = nm::compare_algorithms(tests, ctx, specs, 1);
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  const auto bytes = [](const nm::EvaluationReport& r) {
    std::ostringstream os;
    nm::write_report_csv(os, r);
    return os.str();
  };
  const auto reference = bytes(single);
  bool identical = true;
  for (std::size_t w : {2u, 4u, 7u}) {
    identical &= bytes(nm::compare_algorithms(tests, ctx, specs, w)) == reference;
  }
  return {seconds < 60.0 && identical,
          fmt("%.2fs single worker; reports for 1/2/4/7 workers ", seconds) +
              (identical ? "identical" : "DIFFER")};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, Check>> criteria = {
      {"position-only worked table", worked_table},
      {"token-level distance example", token_example},
      {"hybrid vs token edit-distance oracle", token_oracle},
      {"character Levenshtein vs recursive oracle", char_oracle},
      {"monotonicity in theta, beta, alpha", monotonicity},
      {"behavioural preferences", preferences},
      {"frequency weight arithmetic", frequency_arithmetic},
      {"normalization rewrites and idempotence", normalization},
      {"synthetic end-to-end trends", synthetic_trends},
      {"full-pass performance and determinism", performance},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double s =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    std::printf("%s criterion %zu: %s [%s] (%.1fs)\n", o.pass ? "PASS" : "FAIL",
                i + 1, criteria[i].first, o.detail.c_str(), s);
    std::fflush(stdout);
    failed += !o.pass;
  }
  std::printf("%d/%zu criteria passed\n",
              static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
