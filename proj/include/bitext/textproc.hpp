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
#include <cstdio>
#include <map>
#include <string>
#include <vector>

#include "bitext/common.hpp"
#include "bitext/unicode.hpp"

// Tokenization, detokenization, truecasing and detruecasing. The
// tokenizer is aggressive and language agnostic: punctuation is split
// from words, digit-internal '.'/',' and letter-internal hyphens are
// kept, and DNTID placeholders always survive as single tokens.

namespace bitext {

// Placeholder label prefixes: the default positional scheme plus the
// per-category typed scheme.
inline const std::vector<std::string>& placeholder_prefixes() {
  static const std::vector<std::string> prefixes = {
      "DNTID", "EMAILID", "URLID", "NUMID", "MIXID", "FILEID", "TAGID",
      "FRGNID"};
  return prefixes;
}

inline bool is_placeholder_token(const std::string& token) {
  for (const auto& prefix : placeholder_prefixes()) {
    if (token.size() <= prefix.size() ||
        token.compare(0, prefix.size(), prefix) != 0)
      continue;
    bool all_digits = true;
    for (std::size_t i = prefix.size(); i < token.size(); ++i) {
      if (token[i] < '0' || token[i] > '9') {
        all_digits = false;
        break;
      }
    }
    if (all_digits) return true;
  }
  return false;
}

// Splits character-cleaned text into tokens. Deterministic; see the
// rule table in docs/formats.md.
inline std::vector<std::string> tokenize(const std::string& text) {
  auto cps = decode_utf8(text);
  std::vector<std::string> tokens;
  std::string current;
  auto flush = [&] {
    if (!current.empty()) {
      tokens.push_back(current);
      current.clear();
    }
  };
  auto word_char = [](CodePoint cp) {
    return is_letter(cp) || is_ascii_digit(cp);
  };
  for (std::size_t i = 0; i < cps.size(); ++i) {
    CodePoint cp = cps[i];
    if (is_space(cp)) {
      flush();
      continue;
    }
    if (word_char(cp)) {
      append_utf8(current, cp);
      continue;
    }
    bool prev_word = !current.empty() && word_char(cps[i - 1]);
    bool next_word = i + 1 < cps.size() && word_char(cps[i + 1]);
    bool prev_digit = !current.empty() && is_ascii_digit(cps[i - 1]);
    bool next_digit = i + 1 < cps.size() && is_ascii_digit(cps[i + 1]);
    if (cp == '-' && prev_word && next_word) {
      current.push_back('-');
      continue;
    }
    if ((cp == '.' || cp == ',') && prev_digit && next_digit) {
      current.push_back(static_cast<char>(cp));
      continue;
    }
    flush();
    std::string punct;
    append_utf8(punct, cp);
    tokens.push_back(punct);
  }
  flush();
  return tokens;
}

namespace detail {

inline bool left_attach(const std::string& tok) {
  static const std::vector<std::string> kSet = {
      ".", ",", ";", ":", "!", "?", "%", ")", "]", "}", "»", "…"};
  return std::find(kSet.begin(), kSet.end(), tok) != kSet.end();
}

inline bool right_attach(const std::string& tok) {
  static const std::vector<std::string> kSet = {"(", "[", "{", "«", "¿", "¡"};
  return std::find(kSet.begin(), kSet.end(), tok) != kSet.end();
}

inline bool starts_word_char(const std::string& tok) {
  if (tok.empty()) return false;
  std::size_t i = 0;
  auto cp = decode_utf8_at(tok, i);
  return cp && (is_letter(*cp) || is_ascii_digit(*cp));
}

inline bool ends_word_char(const std::string& tok) {
  if (tok.empty()) return false;
  std::size_t i = 0, last = 0;
  while (i < tok.size()) {
    last = i;
    if (!decode_utf8_at(tok, i)) return false;
  }
  std::size_t j = last;
  auto cp = decode_utf8_at(tok, j);
  return cp && (is_letter(*cp) || is_ascii_digit(*cp));
}

}  // namespace detail

// Inverse of tokenize up to whitespace normalization. Double quotes
// alternate open/close; an apostrophe between word characters joins
// both sides.
inline std::string detokenize(const std::vector<std::string>& tokens) {
  std::string out;
  bool quote_open = false;
  bool suppress_space = false;  // set by tokens that attach rightward
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    const std::string& tok = tokens[i];
    bool attach_left = detail::left_attach(tok);
    bool attach_right = detail::right_attach(tok);
    if (tok == "\"") {
      if (!quote_open) {
        attach_right = true;
      } else {
        attach_left = true;
      }
      quote_open = !quote_open;
    } else if (tok == "'") {
      bool prev_w = i > 0 && detail::ends_word_char(tokens[i - 1]);
      bool next_w = i + 1 < tokens.size() &&
                    detail::starts_word_char(tokens[i + 1]);
      if (prev_w && next_w) {
        attach_left = true;
        attach_right = true;
      }
    }
    if (!out.empty() && !attach_left && !suppress_space) out += ' ';
    out += tok;
    suppress_space = attach_right;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Truecasing
// ---------------------------------------------------------------------------

// Casing statistics: for each lowercased token, the weighted counts of
// its observed surface forms. Sentence-initial occurrences contribute
// with weight 0.1 so initial-position capitalization does not dominate.
class TruecaseModel {
 public:
  // Weights are stored in integer tenths to keep file round trips exact.
  void add(const std::string& surface, bool sentence_initial) {
    counts_[lowercase_utf8(surface)][surface] +=
        sentence_initial ? 1 : 10;
  }

  void add_weight_tenths(const std::string& surface, std::uint64_t tenths) {
    counts_[lowercase_utf8(surface)][surface] += tenths;
  }

  bool empty() const { return counts_.empty(); }
  std::size_t size() const { return counts_.size(); }

  // Most frequent surface form for a token, ties toward the fully
  // lowercased form, then lexicographic. Empty when unknown.
  std::string canonical(const std::string& token) const {
    auto key = lowercase_utf8(token);
    auto it = counts_.find(key);
    if (it == counts_.end()) return "";
    const std::string* best = nullptr;
    std::uint64_t best_weight = 0;
    for (const auto& [surface, weight] : it->second) {
      bool better = false;
      if (best == nullptr || weight > best_weight) {
        better = true;
      } else if (weight == best_weight) {
        bool cand_lower = surface == key;
        bool best_lower = *best == key;
        if (cand_lower != best_lower) {
          better = cand_lower;
        } else {
          better = surface < *best;
        }
      }
      if (better) {
        best = &surface;
        best_weight = weight;
      }
    }
    return *best;
  }

  // Serializes as "surface tenths" lines grouped by lowercase key.
  std::string serialize() const {
    std::string out;
    for (const auto& [key, variants] : counts_) {
      std::vector<std::pair<std::string, std::uint64_t>> sorted(
          variants.begin(), variants.end());
      std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
        if (a.second != b.second) return a.second > b.second;
        return a.first < b.first;
      });
      for (const auto& [surface, weight] : sorted) {
        out += surface;
        out += ' ';
        out += std::to_string(weight);
        out += '\n';
      }
    }
    return out;
  }

  static TruecaseModel deserialize(const std::string& content) {
    TruecaseModel model;
    std::size_t line_no = 0;
    for (const auto& line : split_str(content, '\n')) {
      ++line_no;
      if (line.empty()) continue;
      auto space = line.rfind(' ');
      if (space == std::string::npos || space == 0) {
        fail("malformed truecase model line ", line_no, ": '", line, "'");
      }
      std::string surface = line.substr(0, space);
      std::uint64_t tenths = 0;
      for (std::size_t i = space + 1; i < line.size(); ++i) {
        if (line[i] < '0' || line[i] > '9') {
          fail("malformed truecase model line ", line_no, ": '", line, "'");
        }
        tenths = tenths * 10 + static_cast<std::uint64_t>(line[i] - '0');
      }
      model.add_weight_tenths(surface, tenths);
    }
    return model;
  }

 private:
  std::map<std::string, std::map<std::string, std::uint64_t>> counts_;
};

// Counts casing variants over a tokenized corpus side. Order invariant.
inline TruecaseModel train_truecaser(
    const std::vector<std::vector<std::string>>& sentences) {
  TruecaseModel model;
  for (const auto& tokens : sentences) {
    for (std::size_t i = 0; i < tokens.size(); ++i) {
      if (is_placeholder_token(tokens[i])) continue;
      std::size_t k = 0;
      auto first = decode_utf8_at(tokens[i], k);
      if (!first || !is_letter(*first)) continue;
      model.add(tokens[i], i == 0);
    }
  }
  return model;
}

// Maps the sentence-initial token to its canonical form. Unknown
// tokens and placeholders are left unchanged.
inline std::vector<std::string> truecase(std::vector<std::string> tokens,
                                         const TruecaseModel& model) {
  if (tokens.empty() || is_placeholder_token(tokens[0])) return tokens;
  std::string canon = model.canonical(tokens[0]);
  if (!canon.empty()) tokens[0] = canon;
  return tokens;
}

// Uppercases the first alphabetic character of the sentence-initial
// token. Tokens without letters (numbers, placeholders) are left
// alone, which keeps the operation an inverse of truecase.
inline std::vector<std::string> detruecase(std::vector<std::string> tokens) {
  if (tokens.empty() || is_placeholder_token(tokens[0])) return tokens;
  auto cps = decode_utf8(tokens[0]);
  for (auto& cp : cps) {
    if (is_letter(cp)) {
      cp = to_upper(cp);
      tokens[0] = encode_utf8(cps);
      break;
    }
  }
  return tokens;
}

}  // namespace bitext
