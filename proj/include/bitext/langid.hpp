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

// Rank-order character n-gram language identification.
//
// A profile is the list of the most frequent character n-grams (n = 1..3)
// of a training text, ranked by frequency. A query text is profiled the
// same way and scored against each candidate profile with the out-of-place
// distance: for every query n-gram, the absolute rank difference, or a
// fixed penalty when the n-gram is absent from the candidate profile.
// Lowest total distance wins.
//
// Texts with fewer than kMinLetters letters are not classifiable and come
// back as ("unknown", 0.0).

#include <algorithm>
#include <map>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "bitext/common.hpp"
#include "bitext/langid_seeds.hpp"
#include "bitext/unicode.hpp"

namespace bitext {

inline constexpr size_t kProfileSize = 300;
inline constexpr size_t kMaxGramLen = 3;
inline constexpr size_t kMinLetters = 20;
inline constexpr const char* kUnknownLang = "unknown";

namespace detail {

// Lowercases and keeps only letters; every non-letter run becomes a single
// word boundary. Words are returned padded with '_' on both sides so that
// n-grams capture word-initial and word-final characters.
inline std::vector<std::u32string> profile_words(const std::string& text) {
  std::vector<std::u32string> words;
  std::u32string cur;
  for (CodePoint cp : decode_utf8(text)) {
    if (is_letter(cp)) {
      cur.push_back(to_lower(cp));
    } else if (!cur.empty()) {
      words.push_back(U"_" + cur + U"_");
      cur.clear();
    }
  }
  if (!cur.empty()) words.push_back(U"_" + cur + U"_");
  return words;
}

inline size_t count_letters(const std::string& text) {
  size_t n = 0;
  for (CodePoint cp : decode_utf8(text))
    if (is_letter(cp)) ++n;
  return n;
}

}  // namespace detail

class LanguageProfile {
 public:
  LanguageProfile() = default;

  static LanguageProfile from_text(const std::string& text,
                                   size_t max_grams = kProfileSize) {
    std::map<std::u32string, size_t> counts;
    for (const auto& word : detail::profile_words(text)) {
      for (size_t n = 1; n <= kMaxGramLen; ++n) {
        if (word.size() < n) continue;
        for (size_t i = 0; i + n <= word.size(); ++i) {
          std::u32string gram = word.substr(i, n);
          if (gram == U"_" || gram == U"__") continue;
          ++counts[gram];
        }
      }
    }
    std::vector<std::pair<std::u32string, size_t>> items(counts.begin(),
                                                         counts.end());
    // Count descending; the map ordering breaks ties deterministically.
    std::stable_sort(items.begin(), items.end(),
                     [](const auto& a, const auto& b) {
                       return a.second > b.second;
                     });
    LanguageProfile p;
    for (const auto& [gram, cnt] : items) {
      (void)cnt;
      if (p.ranked_.size() >= max_grams) break;
      p.rank_of_[gram] = p.ranked_.size();
      p.ranked_.push_back(gram);
    }
    return p;
  }

  size_t size() const { return ranked_.size(); }
  bool empty() const { return ranked_.empty(); }
  const std::vector<std::u32string>& ranked() const { return ranked_; }

  // Out-of-place distance from a query profile to this profile.
  size_t distance_from(const LanguageProfile& query) const {
    size_t total = 0;
    for (size_t qrank = 0; qrank < query.ranked_.size(); ++qrank) {
      auto it = rank_of_.find(query.ranked_[qrank]);
      if (it == rank_of_.end()) {
        total += kProfileSize;
      } else {
        size_t r = it->second;
        total += r > qrank ? r - qrank : qrank - r;
      }
    }
    return total;
  }

 private:
  std::vector<std::u32string> ranked_;
  std::map<std::u32string, size_t> rank_of_;
};

class LanguageIdentifier {
 public:
  // Profiles built from the bundled seed texts.
  static LanguageIdentifier bundled() {
    LanguageIdentifier id;
    for (const auto& seed : seeds::kAll)
      id.add_language(seed.lang, seed.text);
    return id;
  }

  void add_language(const std::string& lang, const std::string& seed_text) {
    profiles_[lang] = LanguageProfile::from_text(seed_text);
  }

  bool has_language(const std::string& lang) const {
    return profiles_.count(lang) != 0;
  }

  std::vector<std::string> languages() const {
    std::vector<std::string> out;
    for (const auto& [lang, p] : profiles_) {
      (void)p;
      out.push_back(lang);
    }
    return out;
  }

  // Classifies text among `candidates` (all known languages when empty).
  // Returns (language, confidence in [0,1]); ("unknown", 0.0) when the text
  // has fewer than kMinLetters letters or no candidate profile exists.
  std::pair<std::string, double> identify(
      const std::string& text,
      const std::vector<std::string>& candidates = {}) const {
    if (detail::count_letters(text) < kMinLetters)
      return {kUnknownLang, 0.0};

    std::vector<std::string> langs =
        candidates.empty() ? languages() : candidates;
    LanguageProfile query = LanguageProfile::from_text(text);
    if (query.empty()) return {kUnknownLang, 0.0};

    // Worst possible distance: every query gram absent everywhere.
    const double worst =
        static_cast<double>(query.size()) * static_cast<double>(kProfileSize);

    std::string best_lang = kUnknownLang;
    size_t best_dist = 0;
    bool found = false;
    for (const auto& lang : langs) {
      auto it = profiles_.find(lang);
      if (it == profiles_.end() || it->second.empty()) continue;
      size_t d = it->second.distance_from(query);
      if (!found || d < best_dist || (d == best_dist && lang < best_lang)) {
        best_lang = lang;
        best_dist = d;
        found = true;
      }
    }
    if (!found) return {kUnknownLang, 0.0};
    double confidence =
        worst > 0 ? 1.0 - static_cast<double>(best_dist) / worst : 0.0;
    if (confidence < 0.0) confidence = 0.0;
    return {best_lang, confidence};
  }

 private:
  std::map<std::string, LanguageProfile> profiles_;
};

// Shared bundled identifier; profiles are immutable after construction.
inline const LanguageIdentifier& bundled_identifier() {
  static const LanguageIdentifier id = LanguageIdentifier::bundled();
  return id;
}

}  // namespace bitext
