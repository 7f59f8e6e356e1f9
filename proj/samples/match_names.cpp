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

// Ranks a few distorted names against a small staff list with the hybrid
// matcher and with whole-name Levenshtein.
//
//   match_names [base.csv]

#include <iostream>
#include <string>

#include "namematch.hpp"

int main(int argc, char** argv) {
  using namespace namematch;
  const std::string path =
      argc > 1 ? argv[1] : NAMEMATCH_SAMPLE_DIR "/staff.csv";
  try {
    const auto rules = default_rules();
    const auto base = load_base_set(path, rules);
    const MatchContext ctx(base, default_frequency_table(), rules);

    MatcherSpec hybrid;  // alpha 1, beta 0.7, theta 0.1
    MatcherSpec lev{Algorithm::kBasicLevenshtein};

    for (const char* query : {"حامد فوزى ابراهيم", "احمد عبدالحميد حس على",
                              "ياسر عبدالله مصطفى", "ايمان حسن محمود"}) {
      const auto q = ctx.prepare_raw(query);
      std::cout << query << '\n';
      for (const auto& spec : {hybrid, lev}) {
        const auto top = top_matches(spec, q, ctx, 1).front();
        std::cout << "  " << label(spec) << ": " << base.records[top.index].raw
                  << " (" << top.similarity << ")\n";
      }
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
