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

#ifndef NAMEMATCH_NAME_HPP_
#define NAMEMATCH_NAME_HPP_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace namematch {

// An ordered sequence of standardized name tokens (UTF-8). Produced by
// normalize_name; no token is empty or contains whitespace.
struct TokenizedName {
  std::vector<std::string> tokens;

  TokenizedName() = default;
  explicit TokenizedName(std::vector<std::string> t) : tokens(std::move(t)) {}
  TokenizedName(std::initializer_list<std::string> t) : tokens(t) {}

  std::size_t size() const { return tokens.size(); }
  bool empty() const { return tokens.empty(); }
  const std::string& operator[](std::size_t i) const { return tokens[i]; }

  friend bool operator==(const TokenizedName&, const TokenizedName&) = default;
};

inline std::string join_tokens(const std::vector<std::string>& tokens,
                               std::string_view sep = " ") {
  std::string out;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (i) out.append(sep);
    out.append(tokens[i]);
  }
  return out;
}

inline std::string join_tokens(const TokenizedName& name,
                               std::string_view sep = " ") {
  return join_tokens(name.tokens, sep);
}

}  // namespace namematch

#endif  // NAMEMATCH_NAME_HPP_
