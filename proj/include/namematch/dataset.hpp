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

#ifndef NAMEMATCH_DATASET_HPP_
#define NAMEMATCH_DATASET_HPP_

#include <algorithm>
#include <array>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "namematch/errors.hpp"
#include "namematch/name.hpp"
#include "namematch/normalizer.hpp"
#include "namematch/text_util.hpp"
#include "namematch/unicode.hpp"

namespace namematch {

// Seeded generator with a platform-independent sequence: mt19937_64 output
// reduced to a range by rejection sampling, never through the
// implementation-defined std:: distributions.
class Rng {
 public:
  static constexpr std::string_view kAlgorithm = "mt19937_64";

  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  // Uniform integer in [0, n); n must be positive.
  std::uint64_t below(std::uint64_t n) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t x;
    do {
      x = engine_();
    } while (x >= limit);
    return x % n;
  }

  // Uniform real in [0, 1) with 53 random bits.
  double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

 private:
  std::mt19937_64 engine_;
};

// 64-bit FNV-1a over raw bytes, rendered as "fnv1a64:<16 hex digits>".
inline std::string checksum(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[32];
  std::snprintf(buf, sizeof buf, "fnv1a64:%016llx",
                static_cast<unsigned long long>(h));
  return buf;
}

struct NameRecord {
  std::string id;
  std::string raw;
};

// Reference names in file order; the order defines the scan order used when
// evaluating (earliest record wins ties).
struct BaseSet {
  std::vector<NameRecord> records;
  std::vector<TokenizedName> normalized;
  std::string checksum;

  std::size_t size() const { return records.size(); }

  std::optional<std::size_t> index_of(const std::string& id) const {
    if (index_.size() == records.size()) {
      const auto it = index_.find(id);
      if (it == index_.end()) return std::nullopt;
      return it->second;
    }
    for (std::size_t i = 0; i < records.size(); ++i) {
      if (records[i].id == id) return i;
    }
    return std::nullopt;
  }

  // Rebuilds the identifier index after editing `records` directly.
  void reindex() {
    index_.clear();
    for (std::size_t i = 0; i < records.size(); ++i) {
      index_.emplace(records[i].id, i);
    }
  }

 private:
  std::unordered_map<std::string, std::size_t> index_;
};

// Builds a base set from (id, raw name) rows. Rejects duplicate or empty
// identifiers and names that normalize to no tokens.
inline BaseSet make_base_set(std::vector<NameRecord> rows,
                             const NormalizationRules& rules,
                             const std::string& source = "base") {
  BaseSet base;
  std::unordered_map<std::string, std::size_t> seen;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    auto& row = rows[i];
    const auto where = source + ": record " + std::to_string(i + 1);
    if (row.id.empty()) throw LoadError(where + ": empty identifier");
    if (!seen.emplace(row.id, i).second) {
      throw LoadError(where + ": duplicate identifier '" + row.id + "'");
    }
    TokenizedName name;
    try {
      name = normalize_name(row.raw, rules);
    } catch (const InputError& e) {
      throw LoadError(where + ": " + e.what());
    }
    if (name.empty()) {
      throw LoadError(where + ": name normalizes to no tokens");
    }
    base.normalized.push_back(std::move(name));
    base.records.push_back(std::move(row));
  }
  std::string ids;
  for (const auto& r : base.records) {
    ids += r.id;
    ids += ',';
    ids += r.raw;
    ids += '\n';
  }
  base.checksum = checksum(ids);
  base.reindex();
  return base;
}

namespace detail {

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open file: " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw IoError("read error: " + path);
  return buf.str();
}

inline std::string_view strip_cr(std::string_view line) {
  if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
  return line;
}

inline std::vector<std::string_view> lines_of(std::string_view text) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (start < text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    out.push_back(strip_cr(text.substr(start, end - start)));
    start = end + 1;
  }
  return out;
}

inline bool skippable(std::string_view line) {
  const auto first = line.find_first_not_of(" \t");
  return first == std::string_view::npos || line[first] == '#';
}

}  // namespace detail

// Parses `B_ID,BName` rows (split at the first comma). An optional header
// row `B_ID,BName`, blank lines, and '#' comments are skipped. The base
// checksum covers the raw file bytes.
inline BaseSet parse_base_set(std::string_view text,
                              const NormalizationRules& rules,
                              const std::string& source = "base") {
  std::vector<NameRecord> rows;
  std::vector<std::size_t> line_numbers;
  const auto lines = detail::lines_of(text);
  bool header_allowed = true;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const auto line = lines[i];
    const auto where = source + ":" + std::to_string(i + 1);
    if (!unicode::is_valid_utf8(line)) {
      throw LoadError(where + ": invalid UTF-8");
    }
    if (detail::skippable(line)) continue;
    if (header_allowed && detail::trim(line) == "B_ID,BName") {
      header_allowed = false;
      continue;
    }
    header_allowed = false;
    const auto comma = line.find(',');
    if (comma == std::string_view::npos) {
      throw LoadError(where + ": expected 'B_ID,BName'");
    }
    rows.push_back({std::string(detail::trim(line.substr(0, comma))),
                    std::string(line.substr(comma + 1))});
    line_numbers.push_back(i + 1);
  }
  // Re-run validation with file line numbers in the diagnostics.
  std::unordered_map<std::string, std::size_t> seen;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const auto where = source + ":" + std::to_string(line_numbers[r]);
    if (rows[r].id.empty()) throw LoadError(where + ": empty identifier");
    if (!seen.emplace(rows[r].id, r).second) {
      throw LoadError(where + ": duplicate identifier '" + rows[r].id + "'");
    }
    if (normalize_name(rows[r].raw, rules).empty()) {
      throw LoadError(where + ": name normalizes to no tokens");
    }
  }
  BaseSet base = make_base_set(std::move(rows), rules, source);
  base.checksum = checksum(text);
  return base;
}

inline BaseSet load_base_set(const std::string& path,
                             const NormalizationRules& rules) {
  return parse_base_set(detail::read_file(path), rules, path);
}

// Rows `B_ID,BName` with the raw names, readable by parse_base_set.
inline void write_base_set(std::ostream& os, const BaseSet& base) {
  os << "B_ID,BName\n";
  for (const auto& r : base.records) os << r.id << ',' << r.raw << '\n';
}

enum class ErrorType {
  kOneChar,
  kTwoChar,
  kOmitFirst,
  kOmitSecond,
  kOmitThird,
  kOmitSecondAndThird,
};

inline constexpr std::array<ErrorType, 6> kAllErrorTypes = {
    ErrorType::kOneChar,    ErrorType::kTwoChar,   ErrorType::kOmitFirst,
    ErrorType::kOmitSecond, ErrorType::kOmitThird, ErrorType::kOmitSecondAndThird};

inline std::string_view to_string(ErrorType e) {
  switch (e) {
    case ErrorType::kOneChar: return "one-char";
    case ErrorType::kTwoChar: return "two-char";
    case ErrorType::kOmitFirst: return "omit-first";
    case ErrorType::kOmitSecond: return "omit-second";
    case ErrorType::kOmitThird: return "omit-third";
    case ErrorType::kOmitSecondAndThird: return "omit-second-and-third";
  }
  return "unknown";
}

inline ErrorType parse_error_type(std::string_view s) {
  for (ErrorType e : kAllErrorTypes) {
    if (to_string(e) == s) return e;
  }
  throw ParameterError("unknown error type '" + std::string(s) + "'");
}

inline bool is_char_deletion(ErrorType e) {
  return e == ErrorType::kOneChar || e == ErrorType::kTwoChar;
}

// Minimum token count for the token-omission errors.
inline constexpr std::size_t kMinTokensForOmission = 4;

// Structural precondition of inject_error.
inline bool is_eligible(const TokenizedName& name, ErrorType e) {
  if (!is_char_deletion(e)) return name.size() >= kMinTokensForOmission;
  std::size_t removable = 0;
  for (const auto& t : name.tokens) {
    const std::size_t len = unicode::length(t);
    if (len >= 2) removable += len - 1;
  }
  return removable >= (e == ErrorType::kOneChar ? 1u : 2u);
}

namespace detail {

struct CharPos {
  std::size_t token;
  std::size_t offset;
};

inline TokenizedName delete_chars(const std::vector<std::u32string>& tokens,
                                  std::vector<CharPos> positions) {
  auto copy = tokens;
  // Erase right to left so earlier offsets stay valid.
  std::sort(positions.begin(), positions.end(), [](auto x, auto y) {
    return x.token != y.token ? x.token > y.token : x.offset > y.offset;
  });
  for (const auto& p : positions) copy[p.token].erase(p.offset, 1);
  TokenizedName out;
  for (const auto& t : copy) out.tokens.push_back(unicode::to_utf8(t));
  return out;
}

// A distortion is kept only if re-normalizing its text reproduces it, so the
// written test row carries exactly the declared error.
inline bool stable(const TokenizedName& d, const NormalizationRules& rules) {
  return !d.empty() && normalize_name(join_tokens(d), rules) == d;
}

}  // namespace detail

// Applies one distortion. Character deletions never remove a space and never
// empty a token. Returns nullopt when the name is ineligible.
inline std::optional<TokenizedName> inject_error(
    const TokenizedName& name, ErrorType e, Rng& rng,
    const NormalizationRules& rules = default_rules()) {
  if (!is_eligible(name, e)) return std::nullopt;
  if (!is_char_deletion(e)) {
    std::vector<std::size_t> drop;
    switch (e) {
      case ErrorType::kOmitFirst: drop = {0}; break;
      case ErrorType::kOmitSecond: drop = {1}; break;
      case ErrorType::kOmitThird: drop = {2}; break;
      default: drop = {1, 2}; break;
    }
    TokenizedName out;
    for (std::size_t i = 0; i < name.size(); ++i) {
      if (std::find(drop.begin(), drop.end(), i) == drop.end()) {
        out.tokens.push_back(name.tokens[i]);
      }
    }
    if (!detail::stable(out, rules)) return std::nullopt;
    return out;
  }

  std::vector<std::u32string> tokens;
  std::vector<detail::CharPos> flat;
  for (std::size_t t = 0; t < name.size(); ++t) {
    tokens.push_back(unicode::to_u32(name.tokens[t]));
    for (std::size_t o = 0; o < tokens.back().size(); ++o) {
      flat.push_back({t, o});
    }
  }
  std::vector<std::vector<detail::CharPos>> candidates;
  if (e == ErrorType::kOneChar) {
    for (const auto& p : flat) {
      if (tokens[p.token].size() >= 2) candidates.push_back({p});
    }
  } else {
    for (std::size_t i = 0; i < flat.size(); ++i) {
      for (std::size_t j = i + 1; j < flat.size(); ++j) {
        const auto& p = flat[i];
        const auto& q = flat[j];
        const std::size_t need_p = p.token == q.token ? 3 : 2;
        if (tokens[p.token].size() < need_p || tokens[q.token].size() < 2) {
          continue;
        }
        candidates.push_back({p, q});
      }
    }
  }
  while (!candidates.empty()) {
    const std::size_t pick = rng.below(candidates.size());
    auto out = detail::delete_chars(tokens, candidates[pick]);
    if (detail::stable(out, rules)) return out;
    candidates.erase(candidates.begin() + static_cast<std::ptrdiff_t>(pick));
  }
  return std::nullopt;
}

struct TestRow {
  std::string t_id;
  std::string dname;
  std::string ref_b_id;
};

struct TestSet {
  ErrorType error_type = ErrorType::kOneChar;
  std::uint64_t seed = 0;
  std::string source_checksum;
  std::vector<TestRow> rows;

  std::size_t size() const { return rows.size(); }
};

// Samples n distinct eligible base names (without replacement, seeded) and
// distorts each with error type e. T_IDs are 1..n.
inline TestSet generate_test_set(const BaseSet& base, ErrorType e,
                                 std::size_t n, std::uint64_t seed,
                                 const NormalizationRules& rules =
                                     default_rules()) {
  std::vector<std::size_t> eligible;
  for (std::size_t i = 0; i < base.size(); ++i) {
    if (is_eligible(base.normalized[i], e)) eligible.push_back(i);
  }
  const auto shortfall = [&](std::size_t usable) {
    return InputError("insufficient eligible names for " +
                      std::string(to_string(e)) + ": " +
                      std::to_string(usable) + " eligible, " +
                      std::to_string(n) + " requested");
  };
  if (eligible.size() < n) throw shortfall(eligible.size());

  Rng rng(seed);
  TestSet out;
  out.error_type = e;
  out.seed = seed;
  out.source_checksum = base.checksum;
  std::size_t rejected = 0;
  for (std::size_t i = 0; i < eligible.size() && out.rows.size() < n; ++i) {
    // Partial Fisher-Yates: draw the next source among the remaining ones.
    const std::size_t j = i + rng.below(eligible.size() - i);
    std::swap(eligible[i], eligible[j]);
    const std::size_t src = eligible[i];
    auto distorted = inject_error(base.normalized[src], e, rng, rules);
    if (!distorted) {
      ++rejected;
      continue;
    }
    out.rows.push_back({std::to_string(out.rows.size() + 1),
                        join_tokens(*distorted), base.records[src].id});
  }
  if (out.rows.size() < n) throw shortfall(eligible.size() - rejected);
  return out;
}

inline void write_test_set(std::ostream& os, const TestSet& t) {
  os << "# namematch test set\n"
     << "# error_type=" << to_string(t.error_type) << '\n'
     << "# seed=" << t.seed << '\n'
     << "# n=" << t.rows.size() << '\n'
     << "# rng=" << Rng::kAlgorithm << '\n'
     << "# source_checksum=" << t.source_checksum << '\n'
     << "T_ID,DName,Ref_B_ID\n";
  for (const auto& r : t.rows) {
    os << r.t_id << ',' << r.dname << ',' << r.ref_b_id << '\n';
  }
}

// Rows `T_ID,DName,Ref_B_ID`, split at the first and last comma. Header
// comments `# key=value` restore the provenance fields.
inline TestSet parse_test_set(std::string_view text,
                              const std::string& source = "test") {
  TestSet t;
  bool header_allowed = true;
  const auto lines = detail::lines_of(text);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const auto line = lines[i];
    const auto where = source + ":" + std::to_string(i + 1);
    if (!unicode::is_valid_utf8(line)) {
      throw LoadError(where + ": invalid UTF-8");
    }
    if (detail::skippable(line)) {
      auto body = detail::trim(line);
      if (body.starts_with('#')) body = detail::trim(body.substr(1));
      const auto eq = body.find('=');
      if (eq == std::string_view::npos) continue;
      const auto key = body.substr(0, eq);
      const auto value = std::string(body.substr(eq + 1));
      try {
        if (key == "error_type") t.error_type = parse_error_type(value);
        if (key == "seed") t.seed = std::stoull(value);
        if (key == "source_checksum") t.source_checksum = value;
      } catch (const std::exception&) {
        throw LoadError(where + ": bad header value for '" +
                        std::string(key) + "'");
      }
      continue;
    }
    if (header_allowed && detail::trim(line) == "T_ID,DName,Ref_B_ID") {
      header_allowed = false;
      continue;
    }
    header_allowed = false;
    const auto first = line.find(',');
    const auto last = line.rfind(',');
    if (first == std::string_view::npos || first == last) {
      throw LoadError(where + ": expected 'T_ID,DName,Ref_B_ID'");
    }
    TestRow row{std::string(detail::trim(line.substr(0, first))),
                std::string(line.substr(first + 1, last - first - 1)),
                std::string(detail::trim(line.substr(last + 1)))};
    if (row.t_id.empty() || row.ref_b_id.empty()) {
      throw LoadError(where + ": empty identifier");
    }
    t.rows.push_back(std::move(row));
  }
  return t;
}

inline TestSet load_test_set(const std::string& path) {
  return parse_test_set(detail::read_file(path), path);
}

}  // namespace namematch

#endif  // NAMEMATCH_DATASET_HPP_
