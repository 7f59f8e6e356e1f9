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

#ifndef NAMEMATCH_UNICODE_HPP_
#define NAMEMATCH_UNICODE_HPP_

#include <cstdint>
#include <string>
#include <string_view>

#include <unicode/normalizer2.h>
#include <unicode/uchar.h>
#include <unicode/unistr.h>

#include "namematch/errors.hpp"

namespace namematch::unicode {

// Returns false on overlong forms, surrogates, truncated sequences and
// code points above U+10FFFF.
inline bool decode_utf8(std::string_view in, std::u32string* out) {
  out->clear();
  out->reserve(in.size());
  std::size_t i = 0;
  const auto byte = [&](std::size_t k) {
    return static_cast<std::uint8_t>(in[k]);
  };
  while (i < in.size()) {
    const std::uint8_t lead = byte(i);
    char32_t cp = 0;
    std::size_t len = 0;
    if (lead < 0x80) {
      cp = lead;
      len = 1;
    } else if ((lead & 0xE0) == 0xC0) {
      cp = lead & 0x1F;
      len = 2;
    } else if ((lead & 0xF0) == 0xE0) {
      cp = lead & 0x0F;
      len = 3;
    } else if ((lead & 0xF8) == 0xF0) {
      cp = lead & 0x07;
      len = 4;
    } else {
      return false;
    }
    if (i + len > in.size()) return false;
    for (std::size_t k = 1; k < len; ++k) {
      const std::uint8_t cont = byte(i + k);
      if ((cont & 0xC0) != 0x80) return false;
      cp = (cp << 6) | (cont & 0x3F);
    }
    static constexpr char32_t kMinForLength[] = {0, 0, 0x80, 0x800, 0x10000};
    if (cp < kMinForLength[len] || cp > 0x10FFFF ||
        (cp >= 0xD800 && cp <= 0xDFFF)) {
      return false;
    }
    out->push_back(cp);
    i += len;
  }
  return true;
}

inline bool is_valid_utf8(std::string_view in) {
  std::u32string scratch;
  return decode_utf8(in, &scratch);
}

// Throws InputError on malformed input.
inline std::u32string to_u32(std::string_view in) {
  std::u32string out;
  if (!decode_utf8(in, &out)) throw InputError("invalid UTF-8 sequence");
  return out;
}

inline void append_utf8(char32_t cp, std::string* out) {
  if (cp < 0x80) {
    out->push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out->push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out->push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp < 0x10000) {
    out->push_back(static_cast<char>(0xE0 | (cp >> 12)));
    out->push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out->push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else {
    out->push_back(static_cast<char>(0xF0 | (cp >> 18)));
    out->push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
    out->push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out->push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
}

inline std::string to_utf8(std::u32string_view in) {
  std::string out;
  out.reserve(in.size() * 2);
  for (char32_t cp : in) append_utf8(cp, &out);
  return out;
}

// Number of Unicode scalar values; throws InputError on malformed input.
inline std::size_t length(std::string_view utf8) { return to_u32(utf8).size(); }

// Canonical composition (NFC), backed by ICU.
inline std::string nfc(std::string_view utf8) {
  if (!is_valid_utf8(utf8)) throw InputError("invalid UTF-8 sequence");
  UErrorCode status = U_ZERO_ERROR;
  const icu::Normalizer2* normalizer = icu::Normalizer2::getNFCInstance(status);
  if (U_FAILURE(status)) throw Error("ICU NFC normalizer unavailable");
  const icu::UnicodeString source = icu::UnicodeString::fromUTF8(
      icu::StringPiece(utf8.data(), static_cast<int32_t>(utf8.size())));
  if (normalizer->isNormalized(source, status) && U_SUCCESS(status)) {
    return std::string(utf8);
  }
  status = U_ZERO_ERROR;
  const icu::UnicodeString composed = normalizer->normalize(source, status);
  if (U_FAILURE(status)) throw Error("ICU NFC normalization failed");
  std::string out;
  composed.toUTF8String(out);
  return out;
}

inline bool is_space(char32_t cp) {
  return u_isUWhiteSpace(static_cast<UChar32>(cp)) != 0;
}

}  // namespace namematch::unicode

#endif  // NAMEMATCH_UNICODE_HPP_
