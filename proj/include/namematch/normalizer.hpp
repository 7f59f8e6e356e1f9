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

#ifndef NAMEMATCH_NORMALIZER_HPP_
#define NAMEMATCH_NORMALIZER_HPP_

#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "namematch/errors.hpp"
#include "namematch/name.hpp"
#include "namematch/unicode.hpp"

namespace namematch {

// Configuration for Arabic name standardization. All entries are UTF-8;
// loaded entries are brought to NFC before use.
struct NormalizationRules {
  // Leading titles, stripped repeatedly. A title may span several words.
  std::vector<std::string> title_prefixes;
  // Tokens merged with the following token (عبد + الرحمن).
  std::set<std::string> prefix_particles;
  // Tokens merged with the preceding token (نور + الدين).
  std::set<std::string> suffix_particles;
  // Substring rewrites applied until fixpoint. An empty target deletes.
  std::vector<std::pair<std::string, std::string>> character_map;
  // Rewrites of a word's final characters, applied per word.
  std::vector<std::pair<std::string, std::string>> word_final_map;
};

// Shipped defaults: alef variants unified, final yeh to alef maksura,
// punctuation (comma, period, slash, hyphen; ASCII and Arabic) removed,
// harakat and tatweel removed.
inline NormalizationRules default_rules() {
  NormalizationRules r;
  r.title_prefixes = {"دكتور",  "د.",      "أ.د.",   "م.",      "السيد",
                      "/د",     "الدكتور", "المهندس", "مهندس",  "الأستاذ",
                      "أستاذ",  "السيدة"};
  r.prefix_particles = {"عبد"};
  r.suffix_particles = {"الدين"};
  r.character_map = {{"أ", "ا"}, {"إ", "ا"}, {"آ", "ا"}};
  for (const char* p : {".", ",", "/", "-", "،", "۔", "‐",
                        "‑", "−"}) {
    r.character_map.emplace_back(p, "");
  }
  // Harakat U+064B..U+0652, superscript alef, tatweel.
  for (char32_t cp = 0x064B; cp <= 0x0652; ++cp) {
    r.character_map.emplace_back(unicode::to_utf8(std::u32string(1, cp)), "");
  }
  r.character_map.emplace_back("ٰ", "");
  r.character_map.emplace_back("ـ", "");
  r.word_final_map = {{"ي", "ى"}};
  return r;
}

namespace detail {

struct CompiledMap {
  std::vector<std::pair<std::u32string, std::u32string>> rules;
};

inline CompiledMap compile_map(
    const std::vector<std::pair<std::string, std::string>>& map) {
  CompiledMap out;
  for (const auto& [from, to] : map) {
    auto f = unicode::to_u32(unicode::nfc(from));
    if (f.empty()) continue;
    out.rules.emplace_back(std::move(f), unicode::to_u32(unicode::nfc(to)));
  }
  return out;
}

// One left-to-right rewrite pass; returns true when anything changed.
inline bool rewrite_pass(const CompiledMap& map, std::u32string* text) {
  bool changed = false;
  std::u32string out;
  out.reserve(text->size());
  std::size_t i = 0;
  while (i < text->size()) {
    bool matched = false;
    for (const auto& [from, to] : map.rules) {
      if (text->compare(i, from.size(), from) == 0) {
        out += to;
        i += from.size();
        matched = true;
        changed = true;
        break;
      }
    }
    if (!matched) out.push_back((*text)[i++]);
  }
  text->swap(out);
  return changed;
}

inline constexpr int kMaxRewritePasses = 64;

inline void rewrite_to_fixpoint(const CompiledMap& map, std::u32string* text) {
  for (int pass = 0; pass < kMaxRewritePasses; ++pass) {
    if (!rewrite_pass(map, text)) return;
  }
  throw ParameterError("character_map does not reach a fixpoint");
}

inline void rewrite_word_final(const CompiledMap& map, std::u32string* word) {
  for (int pass = 0; pass < kMaxRewritePasses; ++pass) {
    bool changed = false;
    for (const auto& [from, to] : map.rules) {
      if (word->size() >= from.size() &&
          word->compare(word->size() - from.size(), from.size(), from) == 0) {
        word->replace(word->size() - from.size(), from.size(), to);
        changed = true;
        break;
      }
    }
    if (!changed) return;
  }
  throw ParameterError("word_final_map does not reach a fixpoint");
}

inline std::vector<std::u32string> split_words(std::u32string_view text) {
  std::vector<std::u32string> words;
  std::u32string cur;
  for (char32_t cp : text) {
    if (unicode::is_space(cp)) {
      if (!cur.empty()) words.push_back(std::move(cur));
      cur.clear();
    } else {
      cur.push_back(cp);
    }
  }
  if (!cur.empty()) words.push_back(std::move(cur));
  return words;
}

inline std::string join_words(const std::vector<std::u32string>& words) {
  std::string out;
  for (std::size_t i = 0; i < words.size(); ++i) {
    if (i) out.push_back(' ');
    out += unicode::to_utf8(words[i]);
  }
  return out;
}

}  // namespace detail

// NFC, character rewrites, whitespace collapsing, then word-final rewrites.
// Output words are separated by a single ASCII space.
inline std::string unify_characters(std::string_view text,
                                    const NormalizationRules& rules) {
  std::u32string u = unicode::to_u32(unicode::nfc(text));
  detail::rewrite_to_fixpoint(detail::compile_map(rules.character_map), &u);
  auto words = detail::split_words(u);
  const auto finals = detail::compile_map(rules.word_final_map);
  for (auto& w : words) detail::rewrite_word_final(finals, &w);
  // A word made only of removed characters may vanish.
  std::erase_if(words, [](const std::u32string& w) { return w.empty(); });
  return detail::join_words(words);
}

// Drops leading titles until none matches. Words are compared after
// character unification, so "أ.د." and "اد" are the same title.
inline std::string strip_titles(std::string_view text,
                                const NormalizationRules& rules) {
  const auto words = detail::split_words(unicode::to_u32(text));
  std::vector<std::string> keys;
  keys.reserve(words.size());
  for (const auto& w : words) {
    keys.push_back(unify_characters(unicode::to_utf8(w), rules));
  }
  std::vector<std::vector<std::string>> titles;
  for (const auto& t : rules.title_prefixes) {
    std::vector<std::string> seq;
    for (const auto& w : detail::split_words(unicode::to_u32(t))) {
      std::string key = unify_characters(unicode::to_utf8(w), rules);
      if (!key.empty()) seq.push_back(std::move(key));
    }
    if (!seq.empty()) titles.push_back(std::move(seq));
  }

  std::size_t start = 0;
  bool stripped = true;
  while (stripped) {
    stripped = false;
    // Words that unify to nothing (bare punctuation) belong to the title.
    while (start < keys.size() && keys[start].empty()) ++start;
    for (const auto& title : titles) {
      if (start + title.size() > keys.size()) continue;
      if (std::equal(title.begin(), title.end(), keys.begin() + start)) {
        start += title.size();
        stripped = true;
        break;
      }
    }
  }
  return detail::join_words(
      std::vector<std::u32string>(words.begin() + start, words.end()));
}

// Single left-to-right pass; a prefix particle in final position or a
// suffix particle in first position stays unmerged.
inline TokenizedName join_composites(const TokenizedName& name,
                                     const NormalizationRules& rules) {
  TokenizedName out;
  bool pending_prefix = false;
  for (const auto& t : name.tokens) {
    if (pending_prefix) {
      out.tokens.back() += t;
      pending_prefix = false;
      continue;
    }
    if (rules.suffix_particles.contains(t) && !out.tokens.empty()) {
      out.tokens.back() += t;
      continue;
    }
    out.tokens.push_back(t);
    pending_prefix = rules.prefix_particles.contains(t);
  }
  return out;
}

inline TokenizedName split_tokens(std::string_view text) {
  TokenizedName out;
  for (auto& w : detail::split_words(unicode::to_u32(text))) {
    out.tokens.push_back(unicode::to_utf8(w));
  }
  return out;
}

// unify_characters -> strip_titles -> whitespace split -> join_composites.
inline TokenizedName normalize_name(std::string_view raw,
                                    const NormalizationRules& rules) {
  const std::string unified = unify_characters(raw, rules);
  const std::string untitled = strip_titles(unified, rules);
  return join_composites(split_tokens(untitled), rules);
}

namespace detail {

inline std::vector<std::string> json_string_list(const nlohmann::json& j,
                                                 const char* key) {
  std::vector<std::string> out;
  if (!j.contains(key)) return out;
  if (!j.at(key).is_array()) {
    throw LoadError(std::string("rules: '") + key + "' must be an array");
  }
  for (const auto& v : j.at(key)) {
    if (!v.is_string()) {
      throw LoadError(std::string("rules: '") + key + "' must hold strings");
    }
    out.push_back(unicode::nfc(v.get<std::string>()));
  }
  return out;
}

inline std::vector<std::pair<std::string, std::string>> json_pair_list(
    const nlohmann::json& j, const char* key) {
  std::vector<std::pair<std::string, std::string>> out;
  if (!j.contains(key)) return out;
  if (!j.at(key).is_array()) {
    throw LoadError(std::string("rules: '") + key + "' must be an array");
  }
  for (const auto& v : j.at(key)) {
    if (!v.is_array() || v.size() != 2 || !v[0].is_string() ||
        !v[1].is_string()) {
      throw LoadError(std::string("rules: '") + key +
                      "' entries must be [from, to] string pairs");
    }
    out.emplace_back(unicode::nfc(v[0].get<std::string>()),
                     unicode::nfc(v[1].get<std::string>()));
  }
  return out;
}

}  // namespace detail

// Rules file: a JSON object with optional keys title_prefixes,
// prefix_particles, suffix_particles (string arrays) and character_map,
// word_final_map (arrays of [from, to] pairs). Missing keys are empty.
inline NormalizationRules parse_rules(std::string_view json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw LoadError(std::string("rules: ") + e.what());
  }
  if (!j.is_object()) throw LoadError("rules: top level must be an object");
  NormalizationRules r;
  r.title_prefixes = detail::json_string_list(j, "title_prefixes");
  for (auto& p : detail::json_string_list(j, "prefix_particles")) {
    r.prefix_particles.insert(std::move(p));
  }
  for (auto& p : detail::json_string_list(j, "suffix_particles")) {
    r.suffix_particles.insert(std::move(p));
  }
  r.character_map = detail::json_pair_list(j, "character_map");
  r.word_final_map = detail::json_pair_list(j, "word_final_map");
  return r;
}

inline NormalizationRules load_rules(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open rules file: " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return parse_rules(buf.str());
  } catch (const InputError& e) {
    throw LoadError(path + ": " + e.what());
  }
}

inline nlohmann::json rules_to_json(const NormalizationRules& r) {
  nlohmann::json j;
  j["title_prefixes"] = r.title_prefixes;
  j["prefix_particles"] = std::vector<std::string>(r.prefix_particles.begin(),
                                                   r.prefix_particles.end());
  j["suffix_particles"] = std::vector<std::string>(r.suffix_particles.begin(),
                                                   r.suffix_particles.end());
  j["character_map"] = nlohmann::json::array();
  for (const auto& [from, to] : r.character_map) {
    j["character_map"].push_back({from, to});
  }
  j["word_final_map"] = nlohmann::json::array();
  for (const auto& [from, to] : r.word_final_map) {
    j["word_final_map"].push_back({from, to});
  }
  return j;
}

// Rules from `path` when non-empty, else from $NAMEMATCH_RULES, else the
// built-in defaults.
inline NormalizationRules resolve_rules(const std::string& path) {
  if (!path.empty()) return load_rules(path);
  if (const char* env = std::getenv("NAMEMATCH_RULES"); env && *env) {
    return load_rules(env);
  }
  return default_rules();
}

}  // namespace namematch

#endif  // NAMEMATCH_NORMALIZER_HPP_
