// Copyright 2026 The bitext Authors
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

#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bitext/common.hpp"

// Self-contained Unicode support sized for bitext engineering: UTF-8
// codec, letter/script classification over the scripts the toolkit
// filters on, case mapping for common European ranges, and a canonical
// composition table for the combining sequences that occur in practice
// in translation corpora. Not a general Unicode library.

namespace bitext {

using CodePoint = char32_t;

enum class Script {
  Latin,
  Cyrillic,
  Greek,
  Arabic,
  Hebrew,
  Han,
  Kana,
  Hangul,
  Devanagari,
  Thai,
  Mixed,
  Unknown,
};

inline const char* script_name(Script s) {
  switch (s) {
    case Script::Latin: return "Latin";
    case Script::Cyrillic: return "Cyrillic";
    case Script::Greek: return "Greek";
    case Script::Arabic: return "Arabic";
    case Script::Hebrew: return "Hebrew";
    case Script::Han: return "Han";
    case Script::Kana: return "Kana";
    case Script::Hangul: return "Hangul";
    case Script::Devanagari: return "Devanagari";
    case Script::Thai: return "Thai";
    case Script::Mixed: return "Mixed";
    case Script::Unknown: return "Unknown";
  }
  return "Unknown";
}

inline std::optional<Script> script_from_name(const std::string& name) {
  for (Script s : {Script::Latin, Script::Cyrillic, Script::Greek,
                   Script::Arabic, Script::Hebrew, Script::Han, Script::Kana,
                   Script::Hangul, Script::Devanagari, Script::Thai,
                   Script::Mixed, Script::Unknown}) {
    if (name == script_name(s)) return s;
  }
  return std::nullopt;
}

namespace detail {

struct ScriptRange {
  CodePoint lo;
  CodePoint hi;
  Script script;
};

// Letter ranges only; combining marks, digits and punctuation inside a
// block are deliberately absent so they do not count as letters.
inline constexpr std::array<ScriptRange, 34> kScriptRanges = {{
    {0x0041, 0x005A, Script::Latin},
    {0x0061, 0x007A, Script::Latin},
    {0x00C0, 0x00D6, Script::Latin},
    {0x00D8, 0x00F6, Script::Latin},
    {0x00F8, 0x024F, Script::Latin},
    {0x1E00, 0x1EFF, Script::Latin},
    {0x2C60, 0x2C7F, Script::Latin},
    {0xA720, 0xA7FF, Script::Latin},
    {0x0370, 0x0373, Script::Greek},
    {0x0376, 0x0377, Script::Greek},
    {0x037B, 0x037D, Script::Greek},
    {0x0386, 0x0386, Script::Greek},
    {0x0388, 0x03FF, Script::Greek},
    {0x1F00, 0x1FFF, Script::Greek},
    {0x0400, 0x04FF, Script::Cyrillic},
    {0x0500, 0x052F, Script::Cyrillic},
    {0x0590, 0x05FF, Script::Hebrew},
    {0x0600, 0x06FF, Script::Arabic},
    {0x0750, 0x077F, Script::Arabic},
    {0x08A0, 0x08FF, Script::Arabic},
    {0xFB50, 0xFDFF, Script::Arabic},
    {0xFE70, 0xFEFF, Script::Arabic},
    {0x0900, 0x097F, Script::Devanagari},
    {0x0E00, 0x0E7F, Script::Thai},
    {0x1100, 0x11FF, Script::Hangul},
    {0x3130, 0x318F, Script::Hangul},
    {0xAC00, 0xD7AF, Script::Hangul},
    {0x3040, 0x309F, Script::Kana},
    {0x30A0, 0x30FF, Script::Kana},
    {0x31F0, 0x31FF, Script::Kana},
    {0x3400, 0x4DBF, Script::Han},
    {0x4E00, 0x9FFF, Script::Han},
    {0xF900, 0xFAFF, Script::Han},
    {0x20000, 0x2A6DF, Script::Han},
}};

}  // namespace detail

// Script of a single code point, or nullopt when it is not a letter of
// a supported script.
inline std::optional<Script> letter_script(CodePoint cp) {
  for (const auto& r : detail::kScriptRanges) {
    if (cp >= r.lo && cp <= r.hi) return r.script;
  }
  return std::nullopt;
}

inline bool is_letter(CodePoint cp) { return letter_script(cp).has_value(); }

inline bool is_ascii_digit(CodePoint cp) { return cp >= '0' && cp <= '9'; }

inline bool is_ascii_letter(CodePoint cp) {
  return (cp >= 'A' && cp <= 'Z') || (cp >= 'a' && cp <= 'z');
}

// Whitespace as produced by real corpora, including the Unicode space
// block and the NBSP variants that character cleaning folds to ASCII.
inline bool is_space(CodePoint cp) {
  switch (cp) {
    case ' ': case '\t': case '\n': case '\r': case 0x0B: case 0x0C:
    case 0x00A0: case 0x1680: case 0x2028: case 0x2029: case 0x202F:
    case 0x205F: case 0x3000:
      return true;
    default:
      return cp >= 0x2000 && cp <= 0x200A;
  }
}

// C0 (minus tab/newline handled by callers) and C1 controls.
inline bool is_control(CodePoint cp) {
  return cp < 0x20 || cp == 0x7F || (cp >= 0x80 && cp <= 0x9F);
}

// Zero-width and bidi formatting characters dropped by cleaning.
inline bool is_format_noise(CodePoint cp) {
  switch (cp) {
    case 0x00AD:  // soft hyphen
    case 0x200B: case 0x200C: case 0x200D:  // zero width
    case 0x200E: case 0x200F:               // bidi marks
    case 0x2060:                            // word joiner
    case 0xFEFF:                            // BOM / ZWNBSP
      return true;
    default:
      return (cp >= 0x202A && cp <= 0x202E) || (cp >= 0x2066 && cp <= 0x2069);
  }
}

// ---------------------------------------------------------------------------
// UTF-8 codec
// ---------------------------------------------------------------------------

// Decodes one code point at byte offset i; advances i. Returns nullopt
// on malformed input (i is left at the bad byte).
inline std::optional<CodePoint> decode_utf8_at(const std::string& s,
                                               std::size_t& i) {
  const auto b = [&](std::size_t k) {
    return static_cast<unsigned char>(s[k]);
  };
  unsigned char c = b(i);
  if (c < 0x80) {
    ++i;
    return c;
  }
  int len;
  CodePoint cp;
  if ((c & 0xE0) == 0xC0) {
    len = 2;
    cp = c & 0x1F;
  } else if ((c & 0xF0) == 0xE0) {
    len = 3;
    cp = c & 0x0F;
  } else if ((c & 0xF8) == 0xF0) {
    len = 4;
    cp = c & 0x07;
  } else {
    return std::nullopt;
  }
  if (i + static_cast<std::size_t>(len) > s.size()) return std::nullopt;
  for (int k = 1; k < len; ++k) {
    unsigned char cc = b(i + static_cast<std::size_t>(k));
    if ((cc & 0xC0) != 0x80) return std::nullopt;
    cp = (cp << 6) | (cc & 0x3F);
  }
  // Overlongs, surrogates and out-of-range values are invalid.
  if ((len == 2 && cp < 0x80) || (len == 3 && cp < 0x800) ||
      (len == 4 && cp < 0x10000) || cp > 0x10FFFF ||
      (cp >= 0xD800 && cp <= 0xDFFF)) {
    return std::nullopt;
  }
  i += static_cast<std::size_t>(len);
  return cp;
}

// Byte offset of the first invalid UTF-8 sequence, or nullopt if valid.
inline std::optional<std::size_t> utf8_invalid_at(const std::string& s) {
  std::size_t i = 0;
  while (i < s.size()) {
    std::size_t at = i;
    if (!decode_utf8_at(s, i)) return at;
  }
  return std::nullopt;
}

inline std::vector<CodePoint> decode_utf8(const std::string& s) {
  std::vector<CodePoint> out;
  out.reserve(s.size());
  std::size_t i = 0;
  while (i < s.size()) {
    std::size_t at = i;
    auto cp = decode_utf8_at(s, i);
    if (!cp) fail("invalid UTF-8 at byte offset ", at);
    out.push_back(*cp);
  }
  return out;
}

inline void append_utf8(std::string& out, CodePoint cp) {
  if (cp < 0x80) {
    out.push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp < 0x10000) {
    out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
}

inline std::string encode_utf8(const std::vector<CodePoint>& cps) {
  std::string out;
  out.reserve(cps.size());
  for (CodePoint cp : cps) append_utf8(out, cp);
  return out;
}

inline std::size_t count_codepoints(const std::string& s) {
  std::size_t n = 0;
  for (char c : s) {
    if ((static_cast<unsigned char>(c) & 0xC0) != 0x80) ++n;
  }
  return n;
}

// ---------------------------------------------------------------------------
// Case mapping (ASCII, Latin-1, Latin Extended-A, Greek, Cyrillic)
// ---------------------------------------------------------------------------

inline CodePoint to_lower(CodePoint cp) {
  if (cp >= 'A' && cp <= 'Z') return cp + 0x20;
  if ((cp >= 0xC0 && cp <= 0xD6) || (cp >= 0xD8 && cp <= 0xDE)) return cp + 0x20;
  if (cp == 0x130) return 'i';     // İ
  if (cp == 0x178) return 0xFF;    // Ÿ -> ÿ
  if ((cp >= 0x100 && cp <= 0x137) || (cp >= 0x14A && cp <= 0x177)) {
    return (cp % 2 == 0) ? cp + 1 : cp;
  }
  if ((cp >= 0x139 && cp <= 0x148) || (cp >= 0x179 && cp <= 0x17E)) {
    return (cp % 2 == 1) ? cp + 1 : cp;
  }
  if (cp >= 0x391 && cp <= 0x3A1) return cp + 0x20;
  if (cp >= 0x3A3 && cp <= 0x3AB) return cp + 0x20;
  switch (cp) {
    case 0x386: return 0x3AC;
    case 0x388: return 0x3AD;
    case 0x389: return 0x3AE;
    case 0x38A: return 0x3AF;
    case 0x38C: return 0x3CC;
    case 0x38E: return 0x3CD;
    case 0x38F: return 0x3CE;
  }
  if (cp >= 0x410 && cp <= 0x42F) return cp + 0x20;
  if (cp >= 0x400 && cp <= 0x40F) return cp + 0x50;
  return cp;
}

inline CodePoint to_upper(CodePoint cp) {
  if (cp >= 'a' && cp <= 'z') return cp - 0x20;
  if ((cp >= 0xE0 && cp <= 0xF6) || (cp >= 0xF8 && cp <= 0xFE)) return cp - 0x20;
  if (cp == 0xFF) return 0x178;
  if (cp == 0x131) return 'I';  // ı
  if ((cp >= 0x101 && cp <= 0x138) || (cp >= 0x14B && cp <= 0x178)) {
    return (cp % 2 == 1) ? cp - 1 : cp;
  }
  if ((cp >= 0x13A && cp <= 0x148) || (cp >= 0x17A && cp <= 0x17E)) {
    return (cp % 2 == 0) ? cp - 1 : cp;
  }
  if (cp == 0x3C2) return 0x3A3;  // final sigma
  if (cp >= 0x3B1 && cp <= 0x3C1) return cp - 0x20;
  if (cp >= 0x3C3 && cp <= 0x3CB) return cp - 0x20;
  switch (cp) {
    case 0x3AC: return 0x386;
    case 0x3AD: return 0x388;
    case 0x3AE: return 0x389;
    case 0x3AF: return 0x38A;
    case 0x3CC: return 0x38C;
    case 0x3CD: return 0x38E;
    case 0x3CE: return 0x38F;
  }
  if (cp >= 0x430 && cp <= 0x44F) return cp - 0x20;
  if (cp >= 0x450 && cp <= 0x45F) return cp - 0x50;
  return cp;
}

inline std::string lowercase_utf8(const std::string& s) {
  auto cps = decode_utf8(s);
  for (auto& cp : cps) cp = to_lower(cp);
  return encode_utf8(cps);
}

// ---------------------------------------------------------------------------
// Canonical composition (NFC for the sequences corpora actually contain)
// ---------------------------------------------------------------------------

namespace detail {

struct Composition {
  std::uint32_t key;  // (base << 8) | mark_index
  CodePoint composed;
};

// Combining marks supported by the composition table.
inline constexpr std::array<CodePoint, 13> kMarks = {
    0x0300, 0x0301, 0x0302, 0x0303, 0x0304, 0x0306, 0x0307,
    0x0308, 0x030A, 0x030B, 0x030C, 0x0327, 0x0328};

inline int mark_index(CodePoint mark) {
  for (std::size_t i = 0; i < kMarks.size(); ++i) {
    if (kMarks[i] == mark) return static_cast<int>(i);
  }
  return -1;
}

constexpr std::uint32_t ck(CodePoint base, int mark) {
  return (static_cast<std::uint32_t>(base) << 8) |
         static_cast<std::uint32_t>(mark);
}

// Index meanings: 0 grave, 1 acute, 2 circumflex, 3 tilde, 4 macron,
// 5 breve, 6 dot above, 7 diaeresis, 8 ring, 9 double acute, 10 caron,
// 11 cedilla, 12 ogonek.
inline constexpr std::array<Composition, 188> kCompositions = {{
    {ck('A', 0), 0x00C0}, {ck('E', 0), 0x00C8}, {ck('I', 0), 0x00CC},
    {ck('O', 0), 0x00D2}, {ck('U', 0), 0x00D9},
    {ck('a', 0), 0x00E0}, {ck('e', 0), 0x00E8}, {ck('i', 0), 0x00EC},
    {ck('o', 0), 0x00F2}, {ck('u', 0), 0x00F9},
    {ck('A', 1), 0x00C1}, {ck('C', 1), 0x0106}, {ck('E', 1), 0x00C9},
    {ck('I', 1), 0x00CD}, {ck('L', 1), 0x0139}, {ck('N', 1), 0x0143},
    {ck('O', 1), 0x00D3}, {ck('R', 1), 0x0154}, {ck('S', 1), 0x015A},
    {ck('U', 1), 0x00DA}, {ck('Y', 1), 0x00DD}, {ck('Z', 1), 0x0179},
    {ck('a', 1), 0x00E1}, {ck('c', 1), 0x0107}, {ck('e', 1), 0x00E9},
    {ck('i', 1), 0x00ED}, {ck('l', 1), 0x013A}, {ck('n', 1), 0x0144},
    {ck('o', 1), 0x00F3}, {ck('r', 1), 0x0155}, {ck('s', 1), 0x015B},
    {ck('u', 1), 0x00FA}, {ck('y', 1), 0x00FD}, {ck('z', 1), 0x017A},
    {ck('A', 2), 0x00C2}, {ck('C', 2), 0x0108}, {ck('E', 2), 0x00CA},
    {ck('G', 2), 0x011C}, {ck('H', 2), 0x0124}, {ck('I', 2), 0x00CE},
    {ck('J', 2), 0x0134}, {ck('O', 2), 0x00D4}, {ck('S', 2), 0x015C},
    {ck('U', 2), 0x00DB}, {ck('W', 2), 0x0174}, {ck('Y', 2), 0x0176},
    {ck('a', 2), 0x00E2}, {ck('c', 2), 0x0109}, {ck('e', 2), 0x00EA},
    {ck('g', 2), 0x011D}, {ck('h', 2), 0x0125}, {ck('i', 2), 0x00EE},
    {ck('j', 2), 0x0135}, {ck('o', 2), 0x00F4}, {ck('s', 2), 0x015D},
    {ck('u', 2), 0x00FB}, {ck('w', 2), 0x0175}, {ck('y', 2), 0x0177},
    {ck('A', 3), 0x00C3}, {ck('I', 3), 0x0128}, {ck('N', 3), 0x00D1},
    {ck('O', 3), 0x00D5}, {ck('U', 3), 0x0168},
    {ck('a', 3), 0x00E3}, {ck('i', 3), 0x0129}, {ck('n', 3), 0x00F1},
    {ck('o', 3), 0x00F5}, {ck('u', 3), 0x0169},
    {ck('A', 4), 0x0100}, {ck('E', 4), 0x0112}, {ck('I', 4), 0x012A},
    {ck('O', 4), 0x014C}, {ck('U', 4), 0x016A},
    {ck('a', 4), 0x0101}, {ck('e', 4), 0x0113}, {ck('i', 4), 0x012B},
    {ck('o', 4), 0x014D}, {ck('u', 4), 0x016B},
    {ck('A', 5), 0x0102}, {ck('G', 5), 0x011E}, {ck('U', 5), 0x016C},
    {ck('a', 5), 0x0103}, {ck('g', 5), 0x011F}, {ck('u', 5), 0x016D},
    {ck(0x0418, 5), 0x0419}, {ck(0x0438, 5), 0x0439},  // И и
    {ck(0x0423, 5), 0x040E}, {ck(0x0443, 5), 0x045E},  // У у
    {ck('C', 6), 0x010A}, {ck('E', 6), 0x0116}, {ck('G', 6), 0x0120},
    {ck('I', 6), 0x0130}, {ck('Z', 6), 0x017B},
    {ck('c', 6), 0x010B}, {ck('e', 6), 0x0117}, {ck('g', 6), 0x0121},
    {ck('z', 6), 0x017C},
    {ck('A', 7), 0x00C4}, {ck('E', 7), 0x00CB}, {ck('I', 7), 0x00CF},
    {ck('O', 7), 0x00D6}, {ck('U', 7), 0x00DC}, {ck('Y', 7), 0x0178},
    {ck('a', 7), 0x00E4}, {ck('e', 7), 0x00EB}, {ck('i', 7), 0x00EF},
    {ck('o', 7), 0x00F6}, {ck('u', 7), 0x00FC}, {ck('y', 7), 0x00FF},
    {ck(0x0415, 7), 0x0401}, {ck(0x0435, 7), 0x0451},  // Е е
    {ck(0x0399, 7), 0x03AA}, {ck(0x03B9, 7), 0x03CA},  // Ι ι
    {ck(0x03A5, 7), 0x03AB}, {ck(0x03C5, 7), 0x03CB},  // Υ υ
    {ck('A', 8), 0x00C5}, {ck('U', 8), 0x016E},
    {ck('a', 8), 0x00E5}, {ck('u', 8), 0x016F},
    {ck('O', 9), 0x0150}, {ck('U', 9), 0x0170},
    {ck('o', 9), 0x0151}, {ck('u', 9), 0x0171},
    {ck('C', 10), 0x010C}, {ck('D', 10), 0x010E}, {ck('E', 10), 0x011A},
    {ck('L', 10), 0x013D}, {ck('N', 10), 0x0147}, {ck('R', 10), 0x0158},
    {ck('S', 10), 0x0160}, {ck('T', 10), 0x0164}, {ck('Z', 10), 0x017D},
    {ck('c', 10), 0x010D}, {ck('d', 10), 0x010F}, {ck('e', 10), 0x011B},
    {ck('l', 10), 0x013E}, {ck('n', 10), 0x0148}, {ck('r', 10), 0x0159},
    {ck('s', 10), 0x0161}, {ck('t', 10), 0x0165}, {ck('z', 10), 0x017E},
    {ck('C', 11), 0x00C7}, {ck('G', 11), 0x0122}, {ck('K', 11), 0x0136},
    {ck('L', 11), 0x013B}, {ck('N', 11), 0x0145}, {ck('R', 11), 0x0156},
    {ck('S', 11), 0x015E}, {ck('T', 11), 0x0162},
    {ck('c', 11), 0x00E7}, {ck('g', 11), 0x0123}, {ck('k', 11), 0x0137},
    {ck('l', 11), 0x013C}, {ck('n', 11), 0x0146}, {ck('r', 11), 0x0157},
    {ck('s', 11), 0x015F}, {ck('t', 11), 0x0163},
    {ck('A', 12), 0x0104}, {ck('E', 12), 0x0118}, {ck('I', 12), 0x012E},
    {ck('U', 12), 0x0172},
    {ck('a', 12), 0x0105}, {ck('e', 12), 0x0119}, {ck('i', 12), 0x012F},
    {ck('u', 12), 0x0173},
    {ck(0x03B1, 1), 0x03AC}, {ck(0x03B5, 1), 0x03AD},
    {ck(0x03B7, 1), 0x03AE}, {ck(0x03B9, 1), 0x03AF},
    {ck(0x03BF, 1), 0x03CC}, {ck(0x03C5, 1), 0x03CD},
    {ck(0x03C9, 1), 0x03CE},
    {ck(0x0391, 1), 0x0386}, {ck(0x0395, 1), 0x0388},
    {ck(0x0397, 1), 0x0389}, {ck(0x0399, 1), 0x038A},
    {ck(0x039F, 1), 0x038C}, {ck(0x03A5, 1), 0x038E},
    {ck(0x03A9, 1), 0x038F},
}};

inline std::optional<CodePoint> compose_pair(CodePoint base, CodePoint mark) {
  int mi = mark_index(mark);
  if (mi < 0) return std::nullopt;
  std::uint32_t key = ck(base, mi);
  for (const auto& c : kCompositions) {
    if (c.key == key) return c.composed;
  }
  return std::nullopt;
}

}  // namespace detail

// Composes base + combining-mark pairs left to right. Sequences outside
// the table are left untouched, so the function is idempotent.
inline std::vector<CodePoint> compose_canonical(std::vector<CodePoint> cps) {
  std::vector<CodePoint> out;
  out.reserve(cps.size());
  for (CodePoint cp : cps) {
    if (!out.empty()) {
      if (auto composed = detail::compose_pair(out.back(), cp)) {
        out.back() = *composed;
        continue;
      }
    }
    out.push_back(cp);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Windows-1252 (superset of Latin-1 in the 0x80..0x9F row)
// ---------------------------------------------------------------------------

namespace detail {

inline constexpr std::array<CodePoint, 32> kCp1252High = {
    0x20AC, 0x0081, 0x201A, 0x0192, 0x201E, 0x2026, 0x2020, 0x2021,
    0x02C6, 0x2030, 0x0160, 0x2039, 0x0152, 0x008D, 0x017D, 0x008F,
    0x0090, 0x2018, 0x2019, 0x201C, 0x201D, 0x2022, 0x2013, 0x2014,
    0x02DC, 0x2122, 0x0161, 0x203A, 0x0153, 0x009D, 0x017E, 0x0178};

}  // namespace detail

inline CodePoint cp1252_to_unicode(unsigned char byte) {
  if (byte >= 0x80 && byte <= 0x9F) {
    return detail::kCp1252High[byte - 0x80];
  }
  return byte;
}

// Inverse mapping; nullopt when the code point has no cp1252 byte.
inline std::optional<unsigned char> unicode_to_cp1252(CodePoint cp) {
  if (cp < 0x80) return static_cast<unsigned char>(cp);
  if (cp >= 0xA0 && cp <= 0xFF) return static_cast<unsigned char>(cp);
  for (std::size_t i = 0; i < detail::kCp1252High.size(); ++i) {
    if (detail::kCp1252High[i] == cp) {
      return static_cast<unsigned char>(0x80 + i);
    }
  }
  // Latin-1 identity for C1 code points not claimed by cp1252, so that
  // mojibake introduced by a plain latin-1 decode still round-trips.
  if (cp >= 0x80 && cp <= 0x9F) return static_cast<unsigned char>(cp);
  return std::nullopt;
}

}  // namespace bitext
