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

// Translation-memory fuzzy matching. The training corpus is indexed by
// source token; each test sentence retrieves IDF-overlap candidates,
// rescored with token-level edit similarity, and the best match becomes
// a per-sentence fine-tuning directive (epochs and learning rate scale
// with similarity). Fine-tuning itself is not executed here; the
// directive file is the integration contract with a trainer.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdio>
#include <set>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "bitext/common.hpp"
#include "bitext/types.hpp"

namespace bitext {

// ---------------------------------------------------------------------------
// Index
// ---------------------------------------------------------------------------

/// Inverted index over tokenized source sides. Pair ids are corpus
/// positions; postings are sorted by pair id and deduplicated.
class TmIndex {
 public:
  std::size_t size() const { return pairs_.size(); }
  bool empty() const { return pairs_.empty(); }

  const SentencePair& pair(std::size_t id) const {
    if (id >= pairs_.size()) fail("pair id ", id, " out of range");
    return pairs_[id];
  }

  const std::vector<std::string>& source_tokens(std::size_t id) const {
    if (id >= src_tokens_.size()) fail("pair id ", id, " out of range");
    return src_tokens_[id];
  }

  /// Pair ids whose source contains `token`; null when absent.
  const std::vector<std::size_t>* postings(const std::string& token) const {
    auto it = postings_.find(token);
    return it == postings_.end() ? nullptr : &it->second;
  }

  /// Smoothed inverse document frequency, always positive.
  double idf(const std::string& token) const {
    auto it = postings_.find(token);
    const std::size_t df = it == postings_.end() ? 0 : it->second.size();
    return std::log((static_cast<double>(pairs_.size()) + 1.0) /
                    (static_cast<double>(df) + 1.0)) +
           1.0;
  }

  /// Sum of idf over the unique source tokens of one pair.
  double idf_sum(std::size_t id) const {
    if (id >= idf_sum_.size()) fail("pair id ", id, " out of range");
    return idf_sum_[id];
  }

  /// Pairs only; postings and idf are rebuilt on load, so equal corpora
  /// serialize byte-identically.
  std::string serialize() const {
    std::string out = strcat_("tmindex 1 ", pairs_.size(), "\n");
    for (const auto& p : pairs_) {
      if (p.src.find('\t') != std::string::npos ||
          p.tgt.find('\t') != std::string::npos) {
        fail("pair ", p.id, " contains a tab, cannot serialize");
      }
      out += p.src;
      out += '\t';
      out += p.tgt;
      out += '\n';
    }
    return out;
  }

  friend TmIndex build_index(const Corpus& corpus);

 private:
  std::vector<SentencePair> pairs_;
  std::vector<std::vector<std::string>> src_tokens_;
  std::unordered_map<std::string, std::vector<std::size_t>> postings_;
  std::vector<double> idf_sum_;
};

/// Indexes a tokenized corpus. An empty corpus yields an empty index;
/// every query then returns no match.
inline TmIndex build_index(const Corpus& corpus) {
  TmIndex index;
  index.pairs_.reserve(corpus.size());
  index.src_tokens_.reserve(corpus.size());
  for (std::size_t id = 0; id < corpus.pairs.size(); ++id) {
    SentencePair p = corpus.pairs[id];
    p.id = id;
    index.src_tokens_.push_back(split_ws(p.src));
    index.pairs_.push_back(std::move(p));
    std::set<std::string> unique(index.src_tokens_[id].begin(),
                                 index.src_tokens_[id].end());
    for (const auto& token : unique) {
      index.postings_[token].push_back(id);
    }
  }
  index.idf_sum_.reserve(index.pairs_.size());
  for (std::size_t id = 0; id < index.pairs_.size(); ++id) {
    std::set<std::string> unique(index.src_tokens_[id].begin(),
                                 index.src_tokens_[id].end());
    double sum = 0.0;
    for (const auto& token : unique) sum += index.idf(token);
    index.idf_sum_.push_back(sum);
  }
  return index;
}

inline TmIndex deserialize_tm_index(const std::string& text) {
  auto lines = split_str(text, '\n');
  if (!lines.empty() && lines.back().empty()) lines.pop_back();
  if (lines.empty()) fail("tm index: missing header");
  auto header = split_ws(lines[0]);
  if (header.size() != 3 || header[0] != "tmindex" || header[1] != "1") {
    fail("tm index: bad header '", lines[0], "'");
  }
  std::size_t n = 0;
  for (char c : header[2]) {
    if (c < '0' || c > '9') fail("tm index: bad pair count '", header[2], "'");
    n = n * 10 + static_cast<std::size_t>(c - '0');
  }
  if (lines.size() != n + 1) {
    fail("tm index: expected ", n, " pairs, found ", lines.size() - 1);
  }
  Corpus corpus;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    auto tab = lines[i].find('\t');
    if (tab == std::string::npos) {
      fail("tm index: line ", i + 1, " has no tab");
    }
    corpus.pairs.push_back(
        {i - 1, lines[i].substr(0, tab), lines[i].substr(tab + 1)});
  }
  return build_index(corpus);
}

// ---------------------------------------------------------------------------
// Retrieval
// ---------------------------------------------------------------------------

struct TmMatch {
  std::size_t pair_id = 0;
  double score = 0.0;
};

/// Ranks stored pairs by IDF-weighted token overlap with the query:
/// shared idf mass over union idf mass (both over unique tokens), in
/// [0,1], 1 exactly when the token sets coincide. Candidates share at
/// least one token; ties rank the lower pair id first.
inline std::vector<TmMatch> retrieve(const TmIndex& index,
                                     const std::vector<std::string>& query,
                                     std::size_t top_k) {
  if (top_k == 0) fail("retrieve: top_k must be >= 1");
  const std::set<std::string> unique(query.begin(), query.end());
  double query_sum = 0.0;
  for (const auto& token : unique) query_sum += index.idf(token);
  std::unordered_map<std::size_t, double> shared;
  for (const auto& token : unique) {
    const auto* ids = index.postings(token);
    if (ids == nullptr) continue;
    const double w = index.idf(token);
    for (std::size_t id : *ids) shared[id] += w;
  }
  std::vector<TmMatch> matches;
  matches.reserve(shared.size());
  for (const auto& [id, s] : shared) {
    matches.push_back({id, s / (query_sum + index.idf_sum(id) - s)});
  }
  std::sort(matches.begin(), matches.end(),
            [](const TmMatch& a, const TmMatch& b) {
              if (a.score != b.score) return a.score > b.score;
              return a.pair_id < b.pair_id;
            });
  if (matches.size() > top_k) matches.resize(top_k);
  return matches;
}

// ---------------------------------------------------------------------------
// Fuzzy similarity
// ---------------------------------------------------------------------------

/// Token-level Levenshtein distance.
inline std::size_t levenshtein_tokens(const std::vector<std::string>& a,
                                      const std::vector<std::string>& b) {
  if (a.empty()) return b.size();
  if (b.empty()) return a.size();
  std::vector<std::size_t> prev(b.size() + 1), cur(b.size() + 1);
  for (std::size_t j = 0; j <= b.size(); ++j) prev[j] = j;
  for (std::size_t i = 1; i <= a.size(); ++i) {
    cur[0] = i;
    for (std::size_t j = 1; j <= b.size(); ++j) {
      const std::size_t sub = prev[j - 1] + (a[i - 1] == b[j - 1] ? 0 : 1);
      cur[j] = std::min({prev[j] + 1, cur[j - 1] + 1, sub});
    }
    std::swap(prev, cur);
  }
  return prev[b.size()];
}

/// 1 - distance / max(|a|, |b|), in [0,1]. Empty vs empty is 1.
inline double fuzzy_score(const std::vector<std::string>& a,
                          const std::vector<std::string>& b) {
  const std::size_t longest = std::max(a.size(), b.size());
  if (longest == 0) return 1.0;
  return 1.0 - static_cast<double>(levenshtein_tokens(a, b)) /
                   static_cast<double>(longest);
}

// ---------------------------------------------------------------------------
// Schedule
// ---------------------------------------------------------------------------

/// Piecewise-linear fine-tuning schedule over similarity. Below s_min
/// nothing happens; from s_min to 1 the epoch count and learning rate
/// interpolate linearly to their maxima.
struct ScheduleConfig {
  double s_min = 0.5;
  std::size_t e_min = 1;
  std::size_t e_max = 9;
  double lr_min = 1e-5;
  double lr_max = 5e-4;

  void validate() const {
    if (s_min < 0.0 || s_min >= 1.0) {
      fail("schedule: s_min must be in [0,1), got ", s_min);
    }
    if (e_max < e_min) {
      fail("schedule: e_max ", e_max, " < e_min ", e_min);
    }
    if (lr_min <= 0.0 || lr_max < lr_min) {
      fail("schedule: need 0 < lr_min <= lr_max, got ", lr_min, " and ",
           lr_max);
    }
  }
};

/// (epochs, learning_rate) for one similarity value. Both outputs are
/// non-decreasing in similarity; below s_min both are zero.
inline std::pair<std::size_t, double> schedule(
    double similarity, const ScheduleConfig& config = {}) {
  config.validate();
  if (similarity < 0.0 || similarity > 1.0) {
    fail("schedule: similarity must be in [0,1], got ", similarity);
  }
  if (similarity < config.s_min) return {0, 0.0};
  const double f = (similarity - config.s_min) / (1.0 - config.s_min);
  const double epochs =
      static_cast<double>(config.e_min) +
      static_cast<double>(config.e_max - config.e_min) * f;
  const double lr = config.lr_min + (config.lr_max - config.lr_min) * f;
  return {static_cast<std::size_t>(std::llround(epochs)), lr};
}

// ---------------------------------------------------------------------------
// Directives
// ---------------------------------------------------------------------------

/// Per-sentence fine-tuning instruction. `has_match` is false when no
/// candidate reached the activation threshold; epochs and learning rate
/// are then zero and the pair fields empty. `similarity` keeps the best
/// score found (0 without any candidate) for diagnostics.
struct AdaptationDirective {
  std::size_t query_id = 0;
  bool has_match = false;
  std::size_t pair_id = 0;
  std::string src;
  std::string tgt;
  double similarity = 0.0;
  std::size_t epochs = 0;
  double learning_rate = 0.0;
};

struct AdaptOptions {
  std::size_t top_k = 5;
  ScheduleConfig schedule;
};

/// Retrieves candidates for each tokenized test source line, rescores
/// them with fuzzy_score, and schedules fine-tuning on the best one.
/// Rescoring ties keep the lower pair id. Deterministic given
/// (index, queries, options).
inline std::vector<AdaptationDirective> adapt_pipeline(
    const TmIndex& index, const std::vector<std::string>& test_src,
    const AdaptOptions& options = {}) {
  options.schedule.validate();
  if (options.top_k == 0) fail("adapt: top_k must be >= 1");
  std::vector<AdaptationDirective> directives;
  directives.reserve(test_src.size());
  for (std::size_t i = 0; i < test_src.size(); ++i) {
    const auto query = split_ws(test_src[i]);
    AdaptationDirective d;
    d.query_id = i;
    bool found = false;
    std::size_t best_id = 0;
    double best = -1.0;
    for (const auto& match : retrieve(index, query, options.top_k)) {
      const double s = fuzzy_score(query, index.source_tokens(match.pair_id));
      if (s > best || (s == best && match.pair_id < best_id)) {
        best = s;
        best_id = match.pair_id;
        found = true;
      }
    }
    if (found) {
      d.similarity = best;
      auto [epochs, lr] = schedule(best, options.schedule);
      if (epochs > 0) {
        d.has_match = true;
        d.pair_id = best_id;
        d.src = index.pair(best_id).src;
        d.tgt = index.pair(best_id).tgt;
        d.epochs = epochs;
        d.learning_rate = lr;
      }
    }
    directives.push_back(std::move(d));
  }
  return directives;
}

/// One tab-separated record: query id, pair id ("-" when unmatched),
/// similarity to six decimals, epochs, learning rate.
inline std::string format_directive(const AdaptationDirective& d) {
  char sim[32];
  std::snprintf(sim, sizeof(sim), "%.6f", d.similarity);
  char lr[32];
  std::snprintf(lr, sizeof(lr), "%.6g", d.learning_rate);
  return strcat_(d.query_id, "\t", d.has_match ? std::to_string(d.pair_id) : "-",
                 "\t", sim, "\t", d.epochs, "\t", lr);
}

inline std::vector<std::string> format_directives(
    const std::vector<AdaptationDirective>& directives) {
  std::vector<std::string> lines;
  lines.reserve(directives.size());
  for (const auto& d : directives) lines.push_back(format_directive(d));
  return lines;
}

}  // namespace bitext
