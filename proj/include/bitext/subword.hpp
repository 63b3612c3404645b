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

// Byte-pair encoding: learning merge rules from a tokenized corpus and
// applying them in three modes.
//
//   Baseline      greedy merges, then out-of-vocabulary units are
//                 recursively un-merged down to in-vocabulary units or
//                 single characters.
//   NoMoreSplit   greedy merges with the un-merge recursion disabled;
//                 out-of-vocabulary units are emitted whole.
//   ProtectUnseen Baseline, except a word whose baseline segmentation
//                 still contains more than K out-of-vocabulary units is
//                 emitted as the single original word.
//
// Non-final units of a split word carry the "@@" continuation marker, and
// the vocabulary stores marked forms, so "li@@" and "li" are distinct
// entries. Placeholder tokens (DNTID..) pass through unsegmented in every
// mode and are excluded from learning.

#include <algorithm>
#include <cstdint>
#include <iterator>
#include <map>
#include <set>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "bitext/common.hpp"
#include "bitext/textproc.hpp"
#include "bitext/unicode.hpp"

namespace bitext {

struct BpeModel {
  std::vector<std::pair<std::string, std::string>> merges;  // training order
  std::map<std::string, std::uint64_t> vocab;  // marked unit -> frequency
  std::string marker = "@@";

  // Format: header "bpe 1 <marker> <num_merges> <num_vocab>", then one
  // merge per line "left right", then one vocabulary entry per line
  // "unit count".
  std::string serialize() const {
    std::string out =
        strcat_("bpe 1 ", marker, " ", merges.size(), " ", vocab.size(), "\n");
    for (const auto& [l, r] : merges) out += strcat_(l, " ", r, "\n");
    for (const auto& [unit, count] : vocab)
      out += strcat_(unit, " ", count, "\n");
    return out;
  }

  static BpeModel deserialize(const std::string& text) {
    auto parse_u64 = [](const std::string& s) -> std::uint64_t {
      if (s.empty()) fail("bpe model: bad number ''");
      std::uint64_t v = 0;
      for (char c : s) {
        if (c < '0' || c > '9') fail("bpe model: bad number '", s, "'");
        v = v * 10 + static_cast<std::uint64_t>(c - '0');
      }
      return v;
    };
    auto lines = split_str(text, '\n');
    if (lines.empty()) fail("bpe model: empty input");
    auto header = split_ws(lines[0]);
    if (header.size() != 5 || header[0] != "bpe" || header[1] != "1")
      fail("bpe model: bad header '", lines[0], "'");
    BpeModel model;
    model.marker = header[2];
    std::size_t n_merges = parse_u64(header[3]);
    std::size_t n_vocab = parse_u64(header[4]);
    if (lines.size() < 1 + n_merges + n_vocab)
      fail("bpe model: truncated (expected ", n_merges, " merges and ",
           n_vocab, " vocabulary entries)");
    for (std::size_t i = 0; i < n_merges; ++i) {
      auto fields = split_ws(lines[1 + i]);
      if (fields.size() != 2)
        fail("bpe model line ", 2 + i, ": expected 'left right'");
      model.merges.emplace_back(fields[0], fields[1]);
    }
    for (std::size_t i = 0; i < n_vocab; ++i) {
      auto fields = split_ws(lines[1 + n_merges + i]);
      if (fields.size() != 2)
        fail("bpe model line ", 2 + n_merges + i, ": expected 'unit count'");
      model.vocab[fields[0]] = parse_u64(fields[1]);
    }
    return model;
  }
};

struct SubwordMode {
  enum class Kind { Baseline, NoMoreSplit, ProtectUnseen };
  Kind kind = Kind::Baseline;
  std::size_t k = 0;  // ProtectUnseen threshold

  static SubwordMode baseline() { return {Kind::Baseline, 0}; }
  static SubwordMode no_more_split() { return {Kind::NoMoreSplit, 0}; }
  static SubwordMode protect_unseen(std::size_t k) {
    if (k < 1) fail("protect_unseen threshold must be at least 1");
    return {Kind::ProtectUnseen, k};
  }
};

namespace detail {

inline std::vector<std::string> word_characters(const std::string& word) {
  std::vector<std::string> units;
  std::size_t i = 0;
  while (i < word.size()) {
    std::size_t start = i;
    auto cp = decode_utf8_at(word, i);
    if (!cp) fail("invalid UTF-8 in BPE input");
    units.push_back(word.substr(start, i - start));
  }
  return units;
}

// Merges every left-to-right occurrence of (l, r), in place.
inline void merge_pair(std::vector<std::string>& units, const std::string& l,
                       const std::string& r) {
  std::size_t i = 0;
  while (i + 1 < units.size()) {
    if (units[i] == l && units[i + 1] == r) {
      units[i] += r;
      units.erase(units.begin() + static_cast<std::ptrdiff_t>(i) + 1);
    } else {
      ++i;
    }
  }
}

inline std::vector<std::pair<std::string, std::string>> adjacent_pairs(
    const std::vector<std::string>& units) {
  std::vector<std::pair<std::string, std::string>> out;
  for (std::size_t i = 0; i + 1 < units.size(); ++i)
    out.emplace_back(units[i], units[i + 1]);
  return out;
}

}  // namespace detail

// Learns `num_merges` merge rules from tokenized sentences: repeatedly
// merge the most frequent adjacent symbol pair, breaking count ties by
// the lexicographically smallest pair. Stops early once no adjacent pair
// remains. The vocabulary counts the marked units of the final training
// segmentation.
inline BpeModel learn_bpe(const std::vector<std::string>& sentences,
                          std::size_t num_merges) {
  if (num_merges < 1) fail("learn_bpe: num_merges must be at least 1");

  std::map<std::string, std::uint64_t> word_freq;
  for (const auto& sentence : sentences) {
    for (const auto& token : split_ws(sentence)) {
      if (is_placeholder_token(token)) continue;
      ++word_freq[token];
    }
  }
  if (word_freq.empty()) fail("learn_bpe: empty corpus");

  std::vector<std::vector<std::string>> words;
  std::vector<std::uint64_t> freqs;
  words.reserve(word_freq.size());
  for (const auto& [word, freq] : word_freq) {
    words.push_back(detail::word_characters(word));
    freqs.push_back(freq);
  }

  using Pair = std::pair<std::string, std::string>;
  std::map<Pair, std::uint64_t> pair_counts;
  std::map<Pair, std::set<std::size_t>> pair_words;
  for (std::size_t wi = 0; wi < words.size(); ++wi) {
    for (const auto& p : detail::adjacent_pairs(words[wi])) {
      pair_counts[p] += freqs[wi];
      pair_words[p].insert(wi);
    }
  }

  BpeModel model;
  for (std::size_t step = 0; step < num_merges; ++step) {
    if (pair_counts.empty()) break;
    // pair_counts is keyed in lexicographic order, so the first maximum
    // is the smallest tied pair.
    auto best = pair_counts.begin();
    for (auto it = std::next(best); it != pair_counts.end(); ++it)
      if (it->second > best->second) best = it;
    Pair merged = best->first;
    model.merges.push_back(merged);

    std::set<std::size_t> affected = pair_words[merged];
    for (std::size_t wi : affected) {
      auto& units = words[wi];
      std::uint64_t f = freqs[wi];
      std::set<Pair> touched;
      for (const auto& p : detail::adjacent_pairs(units)) {
        auto it = pair_counts.find(p);
        it->second -= f;
        touched.insert(p);
      }
      for (const auto& p : touched) {
        auto it = pair_counts.find(p);
        pair_words[p].erase(wi);
        if (it->second == 0) {
          pair_counts.erase(it);
          pair_words.erase(p);
        }
      }
      detail::merge_pair(units, merged.first, merged.second);
      for (const auto& p : detail::adjacent_pairs(units)) {
        pair_counts[p] += f;
        pair_words[p].insert(wi);
      }
    }
  }

  for (std::size_t wi = 0; wi < words.size(); ++wi) {
    const auto& units = words[wi];
    for (std::size_t i = 0; i < units.size(); ++i) {
      std::string unit = units[i];
      if (i + 1 < units.size()) unit += model.marker;
      model.vocab[unit] += freqs[wi];
    }
  }
  return model;
}

// Applies a model to token sequences. Construct once per model and mode;
// per-word results are cached.
class BpeApplier {
 public:
  BpeApplier(const BpeModel& model, SubwordMode mode,
             std::uint64_t min_frequency = 1)
      : model_(model), mode_(mode), min_frequency_(min_frequency) {
    for (std::size_t i = 0; i < model_.merges.size(); ++i) {
      const auto& [l, r] = model_.merges[i];
      reverse_.emplace(l + r, model_.merges[i]);  // first rule wins
    }
  }

  std::vector<std::string> apply(const std::vector<std::string>& tokens) {
    std::vector<std::string> out;
    for (const auto& token : tokens) {
      const auto& units = segment_word(token);
      out.insert(out.end(), units.begin(), units.end());
    }
    return out;
  }

  const std::vector<std::string>& segment_word(const std::string& word) {
    auto hit = cache_.find(word);
    if (hit != cache_.end()) return hit->second;
    return cache_.emplace(word, segment_uncached(word)).first->second;
  }

 private:
  bool in_vocab(const std::string& marked_unit) const {
    auto it = model_.vocab.find(marked_unit);
    return it != model_.vocab.end() && it->second >= min_frequency_;
  }

  std::string marked(const std::string& unit, bool is_final) const {
    return is_final ? unit : unit + model_.marker;
  }

  // Un-merges an out-of-vocabulary unit down to in-vocabulary units or
  // characters. Characters stay as they are even when out of vocabulary.
  void emit_baseline(const std::string& unit, bool is_final,
                     std::vector<std::string>& out) const {
    std::string m = marked(unit, is_final);
    if (in_vocab(m)) {
      out.push_back(std::move(m));
      return;
    }
    auto split = reverse_.find(unit);
    if (split == reverse_.end()) {
      out.push_back(std::move(m));
      return;
    }
    emit_baseline(split->second.first, false, out);
    emit_baseline(split->second.second, is_final, out);
  }

  std::vector<std::string> segment_uncached(const std::string& word) const {
    if (word.empty()) return {};
    if (is_placeholder_token(word)) return {word};

    std::vector<std::string> units = detail::word_characters(word);
    for (const auto& [l, r] : model_.merges) detail::merge_pair(units, l, r);

    if (mode_.kind == SubwordMode::Kind::NoMoreSplit) {
      std::vector<std::string> out;
      for (std::size_t i = 0; i < units.size(); ++i)
        out.push_back(marked(units[i], i + 1 == units.size()));
      return out;
    }

    std::vector<std::string> baseline;
    for (std::size_t i = 0; i < units.size(); ++i)
      emit_baseline(units[i], i + 1 == units.size(), baseline);

    if (mode_.kind == SubwordMode::Kind::ProtectUnseen) {
      std::size_t oov = 0;
      for (const auto& u : baseline)
        if (!in_vocab(u)) ++oov;
      if (oov > mode_.k) return {word};
    }
    return baseline;
  }

  const BpeModel& model_;
  SubwordMode mode_;
  std::uint64_t min_frequency_;
  std::unordered_map<std::string, std::pair<std::string, std::string>>
      reverse_;
  std::unordered_map<std::string, std::vector<std::string>> cache_;
};

inline std::vector<std::string> apply_bpe(const std::vector<std::string>& tokens,
                                          const BpeModel& model,
                                          SubwordMode mode,
                                          std::uint64_t min_frequency = 1) {
  BpeApplier applier(model, mode, min_frequency);
  return applier.apply(tokens);
}

struct BpeDecodeResult {
  std::vector<std::string> tokens;
  std::size_t dangling_markers = 0;  // marker on the final unit
};

// Joins every marker-carrying unit with its successor. A marker on the
// last unit has nothing to join with; it is dropped and counted.
inline BpeDecodeResult decode_bpe_full(const std::vector<std::string>& units,
                                       const std::string& marker = "@@") {
  BpeDecodeResult out;
  std::string current;
  bool joining = false;
  for (const auto& unit : units) {
    bool marked = unit.size() >= marker.size() &&
                  unit.compare(unit.size() - marker.size(), marker.size(),
                               marker) == 0;
    std::string body =
        marked ? unit.substr(0, unit.size() - marker.size()) : unit;
    current += body;
    if (marked) {
      joining = true;
    } else {
      out.tokens.push_back(std::move(current));
      current.clear();
      joining = false;
    }
  }
  if (joining) {
    out.tokens.push_back(std::move(current));
    ++out.dangling_markers;
  }
  return out;
}

inline std::vector<std::string> decode_bpe(const std::vector<std::string>& units,
                                           const std::string& marker = "@@") {
  return decode_bpe_full(units, marker).tokens;
}

}  // namespace bitext
