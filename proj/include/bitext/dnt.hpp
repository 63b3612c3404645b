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

// Do-not-translate masking. Detects copy-through terms (emails, URLs,
// numbers, alphanumeric codes, file paths, XML tags, foreign-script runs),
// replaces them with positional placeholder tokens DNTID1..n, and restores
// the surfaces in translations.
//
// Every emitted span has non-alphanumeric neighbors on both sides. This is
// deliberately conservative: a placeholder glued to a word would not
// survive tokenization, truecasing, and restoration as a unit, so spans
// hugging letters or digits are not masked at all.

#include <algorithm>
#include <map>
#include <optional>
#include <regex>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "bitext/cleaning.hpp"
#include "bitext/common.hpp"
#include "bitext/corpusio.hpp"
#include "bitext/textproc.hpp"
#include "bitext/types.hpp"
#include "bitext/unicode.hpp"

namespace bitext {

// ---------------------------------------------------------------------------
// Types and rules
// ---------------------------------------------------------------------------

enum class DntKind {
  Email,
  Url,
  Number,
  AlnumMix,
  FilePath,
  XmlTag,
  ForeignScript,
};

inline constexpr DntKind kDntKinds[] = {
    DntKind::Email,    DntKind::Url,    DntKind::Number,       DntKind::AlnumMix,
    DntKind::FilePath, DntKind::XmlTag, DntKind::ForeignScript,
};

inline const char* dnt_kind_name(DntKind k) {
  switch (k) {
    case DntKind::Email: return "email";
    case DntKind::Url: return "url";
    case DntKind::Number: return "number";
    case DntKind::AlnumMix: return "alnum_mix";
    case DntKind::FilePath: return "file_path";
    case DntKind::XmlTag: return "xml_tag";
    case DntKind::ForeignScript: return "foreign_script";
  }
  return "?";
}

inline std::optional<DntKind> dnt_kind_from_name(const std::string& name) {
  for (DntKind k : kDntKinds)
    if (name == dnt_kind_name(k)) return k;
  return std::nullopt;
}

// Placeholder prefix per kind when typed placeholders are enabled. No
// prefix is a prefix of another, so restoration can scan greedily.
inline const char* dnt_typed_prefix(DntKind k) {
  switch (k) {
    case DntKind::Email: return "EMAILID";
    case DntKind::Url: return "URLID";
    case DntKind::Number: return "NUMID";
    case DntKind::AlnumMix: return "MIXID";
    case DntKind::FilePath: return "FILEID";
    case DntKind::XmlTag: return "TAGID";
    case DntKind::ForeignScript: return "FRGNID";
  }
  return "DNTID";
}

inline constexpr const char* kDntPrefix = "DNTID";

// start/end are code point offsets into the source sentence.
struct DntSpan {
  std::size_t start = 0;
  std::size_t end = 0;
  DntKind kind = DntKind::Number;
  std::string surface;

  std::size_t length() const { return end - start; }
  friend bool operator==(const DntSpan& a, const DntSpan& b) {
    return a.start == b.start && a.end == b.end && a.kind == b.kind &&
           a.surface == b.surface;
  }
};

struct DntRules {
  std::set<DntKind> enabled{kDntKinds, kDntKinds + 7};
  std::size_t min_number_digits = 2;
  std::size_t min_mix_digits = 2;
  std::size_t min_latin_run = 2;
  bool typed_placeholders = false;
  std::set<std::string> extensions;

  static const std::set<std::string>& default_extensions() {
    static const std::set<std::string> exts = {
        "7z",   "avi",  "bat",  "bmp",  "c",    "cc",   "cfg",  "conf",
        "cpp",  "css",  "csv",  "doc",  "docx", "exe",  "gif",  "gz",
        "h",    "hpp",  "htm",  "html", "ini",  "jpeg", "jpg",  "js",
        "json", "log",  "md",   "mov",  "mp3",  "mp4",  "odt",  "pdf",
        "php",  "png",  "ppt",  "pptx", "py",   "rar",  "sh",   "svg",
        "tar",  "tgz",  "tsv",  "txt",  "wav",  "xls",  "xlsx", "xml",
        "yaml", "yml",  "zip"};
    return exts;
  }

  static DntRules defaults() {
    DntRules r;
    r.extensions = default_extensions();
    return r;
  }

  // Plain-text rules file: '#' comments; directives
  //   disable <kind>...          categories to turn off
  //   min_number_digits <n>      shortest maskable digit run
  //   min_mix_digits <n>         digits required in an alphanumeric mix
  //   min_latin_run <n>          shortest foreign-script Latin run
  //   typed_placeholders on|off  per-kind placeholder labels
  //   extensions <ext>...        replaces the file-extension whitelist
  static DntRules parse(const std::string& text) {
    DntRules r = defaults();
    std::size_t line_no = 0;
    for (const auto& raw : split_str(text, '\n')) {
      ++line_no;
      std::string line = raw.substr(0, raw.find('#'));
      auto fields = split_ws(line);
      if (fields.empty()) continue;
      const std::string& key = fields[0];
      auto rest = std::vector<std::string>(fields.begin() + 1, fields.end());
      auto parse_count = [&](const char* what) -> std::size_t {
        if (rest.size() != 1) fail("rules line ", line_no, ": ", what,
                                   " takes exactly one number");
        std::size_t v = 0;
        for (char c : rest[0]) {
          if (c < '0' || c > '9')
            fail("rules line ", line_no, ": bad number '", rest[0], "'");
          v = v * 10 + static_cast<std::size_t>(c - '0');
        }
        return v;
      };
      if (key == "disable") {
        for (const auto& name : rest) {
          auto k = dnt_kind_from_name(name);
          if (!k) fail("rules line ", line_no, ": unknown category '", name,
                       "'");
          r.enabled.erase(*k);
        }
      } else if (key == "min_number_digits") {
        r.min_number_digits = parse_count(key.c_str());
      } else if (key == "min_mix_digits") {
        r.min_mix_digits = parse_count(key.c_str());
      } else if (key == "min_latin_run") {
        r.min_latin_run = parse_count(key.c_str());
      } else if (key == "typed_placeholders") {
        if (rest.size() != 1 || (rest[0] != "on" && rest[0] != "off"))
          fail("rules line ", line_no, ": typed_placeholders takes on|off");
        r.typed_placeholders = rest[0] == "on";
      } else if (key == "extensions") {
        r.extensions.clear();
        for (const auto& e : rest) r.extensions.insert(lowercase_utf8(e));
      } else {
        fail("rules line ", line_no, ": unknown directive '", key, "'");
      }
    }
    return r;
  }

  std::string serialize() const {
    std::string out;
    std::string disabled;
    for (DntKind k : kDntKinds)
      if (enabled.count(k) == 0) disabled += strcat_(" ", dnt_kind_name(k));
    if (!disabled.empty()) out += strcat_("disable", disabled, "\n");
    out += strcat_("min_number_digits ", min_number_digits, "\n");
    out += strcat_("min_mix_digits ", min_mix_digits, "\n");
    out += strcat_("min_latin_run ", min_latin_run, "\n");
    out += strcat_("typed_placeholders ", typed_placeholders ? "on" : "off",
                   "\n");
    out += "extensions";
    for (const auto& e : extensions) out += strcat_(" ", e);
    out += "\n";
    return out;
  }
};

struct PlaceholderEntry {
  std::string label;
  std::string surface;
  friend bool operator==(const PlaceholderEntry& a, const PlaceholderEntry& b) {
    return a.label == b.label && a.surface == b.surface;
  }
};

struct PlaceholderMap {
  std::vector<PlaceholderEntry> entries;

  bool empty() const { return entries.empty(); }
  std::size_t size() const { return entries.size(); }

  std::optional<std::string> surface_of(const std::string& label) const {
    for (const auto& e : entries)
      if (e.label == label) return e.surface;
    return std::nullopt;
  }
};

// ---------------------------------------------------------------------------
// Detection
// ---------------------------------------------------------------------------

namespace detail {

inline bool is_alnum_cp(CodePoint cp) {
  return is_letter(cp) || is_ascii_digit(cp);
}

struct TextIndex {
  std::vector<CodePoint> cps;
  std::vector<std::size_t> cp_byte;  // byte offset of each code point

  explicit TextIndex(const std::string& text) {
    std::size_t i = 0;
    while (i < text.size()) {
      cp_byte.push_back(i);
      auto cp = decode_utf8_at(text, i);
      if (!cp) fail("invalid UTF-8 in DNT detection input");
      cps.push_back(*cp);
    }
    cp_byte.push_back(text.size());
  }

  std::size_t cp_of_byte(std::size_t byte) const {
    auto it = std::lower_bound(cp_byte.begin(), cp_byte.end(), byte);
    return static_cast<std::size_t>(it - cp_byte.begin());
  }

  std::string slice(std::size_t cp_start, std::size_t cp_end,
                    const std::string& text) const {
    return text.substr(cp_byte[cp_start], cp_byte[cp_end] - cp_byte[cp_start]);
  }
};

// Code point ranges of placeholder-shaped tokens already present in the
// text. Those ranges are never re-detected, so masking is a fixpoint.
inline std::vector<std::pair<std::size_t, std::size_t>> placeholder_ranges(
    const TextIndex& ix) {
  const auto& prefixes = placeholder_prefixes();
  std::vector<std::pair<std::size_t, std::size_t>> out;
  const auto& cps = ix.cps;
  for (std::size_t i = 0; i < cps.size(); ++i) {
    if (i > 0 && is_alnum_cp(cps[i - 1])) continue;
    for (const auto& p : prefixes) {
      if (i + p.size() >= cps.size() + 1) continue;
      bool match = true;
      for (std::size_t k = 0; k < p.size(); ++k) {
        if (i + k >= cps.size() ||
            cps[i + k] != static_cast<CodePoint>(p[k])) {
          match = false;
          break;
        }
      }
      if (!match) continue;
      std::size_t j = i + p.size();
      std::size_t digits = 0;
      while (j < cps.size() && is_ascii_digit(cps[j])) {
        ++j;
        ++digits;
      }
      if (digits == 0) continue;
      if (j < cps.size() && is_alnum_cp(cps[j])) continue;
      out.push_back({i, j});
      break;
    }
  }
  return out;
}

struct Candidate {
  std::size_t start;
  std::size_t end;
  DntKind kind;
};

inline void detect_with_regex(const std::string& text, const TextIndex& ix,
                              const std::regex& re, DntKind kind,
                              std::vector<Candidate>& out) {
  auto begin = std::sregex_iterator(text.begin(), text.end(), re);
  for (auto it = begin; it != std::sregex_iterator(); ++it) {
    std::size_t b = static_cast<std::size_t>(it->position());
    std::size_t e = b + static_cast<std::size_t>(it->length());
    out.push_back({ix.cp_of_byte(b), ix.cp_of_byte(e), kind});
  }
}

inline void detect_numbers(const TextIndex& ix, std::size_t min_digits,
                           std::vector<Candidate>& out) {
  const auto& cps = ix.cps;
  std::size_t i = 0;
  while (i < cps.size()) {
    if (!is_ascii_digit(cps[i])) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < cps.size() && is_ascii_digit(cps[j])) ++j;
    // A '.' or ',' immediately joining another digit marks a formatted
    // number (decimal or thousands), which is not maskable.
    bool fmt_left = i >= 2 && (cps[i - 1] == U'.' || cps[i - 1] == U',') &&
                    is_ascii_digit(cps[i - 2]);
    bool fmt_right = j + 1 < cps.size() &&
                     (cps[j] == U'.' || cps[j] == U',') &&
                     is_ascii_digit(cps[j + 1]);
    bool letter_left = i > 0 && is_letter(cps[i - 1]);
    bool letter_right = j < cps.size() && is_letter(cps[j]);
    if (j - i >= min_digits && !fmt_left && !fmt_right && !letter_left &&
        !letter_right) {
      out.push_back({i, j, DntKind::Number});
    }
    i = j;
  }
}

inline void detect_alnum_mix(const TextIndex& ix, std::size_t min_digits,
                             std::vector<Candidate>& out) {
  const auto& cps = ix.cps;
  auto ascii_alnum = [](CodePoint cp) {
    return is_ascii_letter(cp) || is_ascii_digit(cp);
  };
  std::size_t i = 0;
  while (i < cps.size()) {
    if (!ascii_alnum(cps[i])) {
      ++i;
      continue;
    }
    std::size_t j = i;
    std::size_t digits = 0, letters = 0;
    while (j < cps.size() && ascii_alnum(cps[j])) {
      if (is_ascii_digit(cps[j]))
        ++digits;
      else
        ++letters;
      ++j;
    }
    bool clean_left = i == 0 || !is_alnum_cp(cps[i - 1]);
    bool clean_right = j == cps.size() || !is_alnum_cp(cps[j]);
    if (digits >= min_digits && letters >= 1 && clean_left && clean_right) {
      out.push_back({i, j, DntKind::AlnumMix});
    }
    i = j;
  }
}

inline void detect_file_paths(const TextIndex& ix,
                              const std::set<std::string>& extensions,
                              std::vector<Candidate>& out) {
  const auto& cps = ix.cps;
  auto path_char = [](CodePoint cp) {
    return is_ascii_letter(cp) || is_ascii_digit(cp) || cp == U'_' ||
           cp == U'.' || cp == U'/' || cp == U'\\' || cp == U':' ||
           cp == U'~' || cp == U'-';
  };
  std::size_t i = 0;
  while (i < cps.size()) {
    if (!path_char(cps[i])) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < cps.size() && path_char(cps[j])) ++j;
    std::size_t next = j;
    // Trailing punctuation belongs to the sentence, not the path.
    while (j > i && (cps[j - 1] == U'.' || cps[j - 1] == U':' ||
                     cps[j - 1] == U'-' || cps[j - 1] == U'~' ||
                     cps[j - 1] == U'/' || cps[j - 1] == U'\\'))
      --j;
    // Find the extension after the last dot.
    std::size_t dot = j;
    while (dot > i && cps[dot - 1] != U'.') --dot;
    if (dot > i && dot < j) {
      std::string ext;
      bool ext_ok = true;
      for (std::size_t k = dot; k < j; ++k) {
        if (!is_ascii_letter(cps[k]) && !is_ascii_digit(cps[k])) {
          ext_ok = false;
          break;
        }
        ext.push_back(static_cast<char>(
            to_lower(cps[k]) & 0x7F));
      }
      // Single-letter extensions match case-sensitively so abbreviations
      // like "U.S.C" are not mistaken for file names.
      if (ext_ok && ext.size() == 1 &&
          cps[dot] != static_cast<CodePoint>(ext[0]))
        ext_ok = false;
      bool has_stem = false;
      for (std::size_t k = i; k + 1 < dot; ++k) {
        if (is_ascii_letter(cps[k]) || is_ascii_digit(cps[k])) {
          has_stem = true;
          break;
        }
      }
      if (ext_ok && has_stem && extensions.count(ext) != 0) {
        out.push_back({i, j, DntKind::FilePath});
      }
    }
    i = next;
  }
}

inline void detect_foreign_script(const TextIndex& ix, std::size_t min_run,
                                  std::vector<Candidate>& out) {
  const auto& cps = ix.cps;
  std::size_t i = 0;
  while (i < cps.size()) {
    if (letter_script(cps[i]) != Script::Latin) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < cps.size() && letter_script(cps[j]) == Script::Latin) ++j;
    if (j - i >= min_run) out.push_back({i, j, DntKind::ForeignScript});
    i = j;
  }
}

inline bool ranges_intersect(std::size_t a1, std::size_t a2, std::size_t b1,
                             std::size_t b2) {
  return a1 < b2 && b1 < a2;
}

}  // namespace detail

// Detects do-not-translate spans in a character-cleaned source sentence.
// Scripts gate the foreign-script rule: it fires only when the source
// script is non-Latin and the target script is Latin. Pass
// Script::Unknown to compute the source script here or to leave the
// target side ungated off.
inline std::vector<DntSpan> detect_dnts(
    const std::string& src, const DntRules& rules = DntRules::defaults(),
    Script src_script = Script::Unknown, Script tgt_script = Script::Unknown) {
  detail::TextIndex ix(src);
  std::vector<detail::Candidate> candidates;

  auto on = [&](DntKind k) { return rules.enabled.count(k) != 0; };

  if (on(DntKind::Email)) {
    static const std::regex email_re(
        R"([A-Za-z0-9._%+-]+@[A-Za-z0-9.-]+\.[A-Za-z]{2,})");
    detail::detect_with_regex(src, ix, email_re, DntKind::Email, candidates);
  }
  if (on(DntKind::Url)) {
    static const std::regex url_re(
        R"((?:https?://|www\.)[^ \t"',;!()<>]*[^ \t"',;!?()<>.:])");
    detail::detect_with_regex(src, ix, url_re, DntKind::Url, candidates);
  }
  if (on(DntKind::XmlTag)) {
    static const std::regex tag_re(R"(<[A-Za-z!/][^<>]*>)");
    detail::detect_with_regex(src, ix, tag_re, DntKind::XmlTag, candidates);
  }
  if (on(DntKind::Number))
    detail::detect_numbers(ix, rules.min_number_digits, candidates);
  if (on(DntKind::AlnumMix))
    detail::detect_alnum_mix(ix, rules.min_mix_digits, candidates);
  if (on(DntKind::FilePath))
    detail::detect_file_paths(ix, rules.extensions, candidates);
  if (on(DntKind::ForeignScript)) {
    if (src_script == Script::Unknown) src_script = detect_script(src);
    bool non_latin_src = src_script != Script::Latin &&
                         src_script != Script::Unknown &&
                         src_script != Script::Mixed;
    if (non_latin_src && tgt_script == Script::Latin)
      detail::detect_foreign_script(ix, rules.min_latin_run, candidates);
  }

  // Boundary guard: spans glued to letters or digits are unmaskable.
  auto excluded = detail::placeholder_ranges(ix);
  std::vector<detail::Candidate> valid;
  for (const auto& c : candidates) {
    bool clean_left = c.start == 0 || !detail::is_alnum_cp(ix.cps[c.start - 1]);
    bool clean_right =
        c.end == ix.cps.size() || !detail::is_alnum_cp(ix.cps[c.end]);
    if (!clean_left || !clean_right) continue;
    bool hits_placeholder = false;
    for (const auto& [b, e] : excluded) {
      if (detail::ranges_intersect(c.start, c.end, b, e)) {
        hits_placeholder = true;
        break;
      }
    }
    if (!hits_placeholder) valid.push_back(c);
  }

  // Longest match first, then leftmost, then category order.
  std::sort(valid.begin(), valid.end(),
            [](const detail::Candidate& a, const detail::Candidate& b) {
              std::size_t la = a.end - a.start, lb = b.end - b.start;
              if (la != lb) return la > lb;
              if (a.start != b.start) return a.start < b.start;
              return static_cast<int>(a.kind) < static_cast<int>(b.kind);
            });
  std::vector<detail::Candidate> chosen;
  for (const auto& c : valid) {
    bool clash = false;
    for (const auto& k : chosen) {
      if (detail::ranges_intersect(c.start, c.end, k.start, k.end)) {
        clash = true;
        break;
      }
    }
    if (!clash) chosen.push_back(c);
  }
  std::sort(chosen.begin(), chosen.end(),
            [](const detail::Candidate& a, const detail::Candidate& b) {
              return a.start < b.start;
            });

  std::vector<DntSpan> spans;
  for (const auto& c : chosen) {
    spans.push_back({c.start, c.end, c.kind, ix.slice(c.start, c.end, src)});
  }
  return spans;
}

// ---------------------------------------------------------------------------
// Masking
// ---------------------------------------------------------------------------

struct MaskOutcome {
  SentencePair masked;
  PlaceholderMap map;
  std::vector<DntSpan> skipped;  // training mode: spans absent from target
};

namespace detail {

// Finds `needle` in `hay` starting at cp offset `from`, requiring
// non-alphanumeric neighbors. Returns the cp offset or npos.
inline std::size_t find_verbatim(const std::vector<CodePoint>& hay,
                                 const std::vector<CodePoint>& needle,
                                 std::size_t from) {
  if (needle.empty() || needle.size() > hay.size()) return std::string::npos;
  for (std::size_t i = from; i + needle.size() <= hay.size(); ++i) {
    bool match = true;
    for (std::size_t k = 0; k < needle.size(); ++k) {
      if (hay[i + k] != needle[k]) {
        match = false;
        break;
      }
    }
    if (!match) continue;
    bool clean_left = i == 0 || !is_alnum_cp(hay[i - 1]);
    bool clean_right =
        i + needle.size() == hay.size() || !is_alnum_cp(hay[i + needle.size()]);
    if (clean_left && clean_right) return i;
  }
  return std::string::npos;
}

inline std::string make_label(const DntRules& rules, DntKind kind,
                              std::size_t n) {
  const char* prefix =
      rules.typed_placeholders ? dnt_typed_prefix(kind) : kDntPrefix;
  return strcat_(prefix, n);
}

}  // namespace detail

// Replaces detected spans with positional placeholders. In training mode
// (a target side is present and consulted) a span is masked only when its
// surface also occurs verbatim in the target; both sides are rewritten.
// In inference mode every span is masked and only the source is
// rewritten. Labels number the masked spans 1..n in source order.
inline MaskOutcome mask_pair(const SentencePair& pair,
                             const std::vector<DntSpan>& spans, bool training,
                             const DntRules& rules = DntRules::defaults()) {
  MaskOutcome out;
  out.masked = pair;
  if (spans.empty()) return out;

  std::vector<CodePoint> src_cps = decode_utf8(pair.src);
  std::vector<CodePoint> tgt_cps = decode_utf8(pair.tgt);

  struct Claim {
    std::size_t start, end;
    std::string label;
  };
  std::vector<Claim> src_claims, tgt_claims;
  std::map<std::string, std::size_t> tgt_cursor;  // per-surface resume point
  std::size_t next_label = 1;

  for (const auto& span : spans) {
    std::string label;
    if (training) {
      std::vector<CodePoint> needle = decode_utf8(span.surface);
      std::size_t from = tgt_cursor.count(span.surface)
                             ? tgt_cursor[span.surface]
                             : 0;
      std::size_t hit;
      bool placed = false;
      while ((hit = detail::find_verbatim(tgt_cps, needle, from)) !=
             std::string::npos) {
        bool clash = false;
        for (const auto& c : tgt_claims) {
          if (detail::ranges_intersect(hit, hit + needle.size(), c.start,
                                       c.end)) {
            clash = true;
            break;
          }
        }
        if (!clash) {
          label = detail::make_label(rules, span.kind, next_label);
          tgt_claims.push_back({hit, hit + needle.size(), label});
          tgt_cursor[span.surface] = hit + needle.size();
          placed = true;
          break;
        }
        from = hit + 1;
      }
      if (!placed) {
        out.skipped.push_back(span);
        continue;
      }
    } else {
      label = detail::make_label(rules, span.kind, next_label);
    }
    ++next_label;
    src_claims.push_back({span.start, span.end, label});
    out.map.entries.push_back({label, span.surface});
  }

  auto rewrite = [](const std::vector<CodePoint>& cps,
                    std::vector<Claim> claims) {
    std::sort(claims.begin(), claims.end(),
              [](const Claim& a, const Claim& b) { return a.start < b.start; });
    std::vector<CodePoint> out_cps;
    std::size_t pos = 0;
    for (const auto& c : claims) {
      out_cps.insert(out_cps.end(), cps.begin() + pos, cps.begin() + c.start);
      for (char ch : c.label) out_cps.push_back(static_cast<CodePoint>(ch));
      pos = c.end;
    }
    out_cps.insert(out_cps.end(), cps.begin() + pos, cps.end());
    return encode_utf8(out_cps);
  };

  out.masked.src = rewrite(src_cps, src_claims);
  if (training) out.masked.tgt = rewrite(tgt_cps, tgt_claims);
  return out;
}

// Detection plus masking in one call. Training mode is inferred from the
// presence of a target side.
inline MaskOutcome mask_pair(const SentencePair& pair,
                             const DntRules& rules = DntRules::defaults()) {
  bool training = !pair.tgt.empty();
  Script src_script = detect_script(pair.src);
  Script tgt_script =
      pair.tgt.empty() ? Script::Latin : detect_script(pair.tgt);
  auto spans = detect_dnts(pair.src, rules, src_script, tgt_script);
  return mask_pair(pair, spans, training, rules);
}

// ---------------------------------------------------------------------------
// Restoration
// ---------------------------------------------------------------------------

enum class DntWarningKind { Missing, Orphan };

struct DntWarning {
  DntWarningKind kind = DntWarningKind::Missing;
  std::string label;

  std::string to_string() const {
    return strcat_(kind == DntWarningKind::Missing ? "missing " : "orphan ",
                   label);
  }
  friend bool operator==(const DntWarning& a, const DntWarning& b) {
    return a.kind == b.kind && a.label == b.label;
  }
};

struct RestoreResult {
  std::string text;
  std::vector<DntWarning> warnings;
};

// Replaces placeholder tokens with their stored surfaces, wherever they
// appear. Placeholders in the map but absent from the translation yield a
// `missing` warning; placeholder-shaped tokens not in the map yield an
// `orphan` warning and are deleted. Never fails.
inline RestoreResult restore(const std::string& translation,
                             const PlaceholderMap& map) {
  const auto& prefixes = placeholder_prefixes();
  RestoreResult out;
  std::set<std::string> used;
  const std::string& in = translation;
  std::string& text = out.text;
  std::size_t i = 0;
  while (i < in.size()) {
    const std::string* hit = nullptr;
    for (const auto& p : prefixes) {
      if (in.compare(i, p.size(), p) == 0 && i + p.size() < in.size() &&
          in[i + p.size()] >= '0' && in[i + p.size()] <= '9') {
        hit = &p;
        break;
      }
    }
    if (!hit) {
      text.push_back(in[i]);
      ++i;
      continue;
    }
    std::size_t j = i + hit->size();
    while (j < in.size() && in[j] >= '0' && in[j] <= '9') ++j;
    std::string label = in.substr(i, j - i);
    auto surface = map.surface_of(label);
    if (surface) {
      text += *surface;
      used.insert(label);
    } else {
      out.warnings.push_back({DntWarningKind::Orphan, label});
      // Drop the token along with one neighboring space.
      if (j < in.size() && in[j] == ' ')
        ++j;
      else if (!text.empty() && text.back() == ' ')
        text.pop_back();
    }
    i = j;
  }
  for (const auto& e : map.entries) {
    if (used.count(e.label) == 0)
      out.warnings.push_back({DntWarningKind::Missing, e.label});
  }
  return out;
}

// ---------------------------------------------------------------------------
// Sidecar file format
// ---------------------------------------------------------------------------

// One sentence per line: tab-separated label=surface entries; an empty
// line means no placeholders.
inline std::string format_placeholder_line(const PlaceholderMap& map) {
  std::string out;
  for (std::size_t i = 0; i < map.entries.size(); ++i) {
    if (i) out += '\t';
    out += map.entries[i].label;
    out += '=';
    out += map.entries[i].surface;
  }
  return out;
}

inline PlaceholderMap parse_placeholder_line(const std::string& line) {
  PlaceholderMap map;
  if (line.empty()) return map;
  for (const auto& field : split_str(line, '\t')) {
    auto eq = field.find('=');
    if (eq == std::string::npos || eq == 0)
      fail("malformed placeholder entry: '", field, "'");
    map.entries.push_back({field.substr(0, eq), field.substr(eq + 1)});
  }
  return map;
}

inline void write_placeholder_file(const std::string& path,
                                   const std::vector<PlaceholderMap>& maps) {
  std::vector<std::string> lines;
  lines.reserve(maps.size());
  for (const auto& m : maps) lines.push_back(format_placeholder_line(m));
  write_lines(path, lines);
}

inline std::vector<PlaceholderMap> read_placeholder_file(
    const std::string& path) {
  std::vector<PlaceholderMap> out;
  for (const auto& line : read_lines(path))
    out.push_back(parse_placeholder_line(line));
  return out;
}

}  // namespace bitext
