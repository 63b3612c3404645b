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

// Corpus-level robustness metrics for MT output: OVER (adjacent
// repetition), UNDER (short-output ratio), REP (alignment-confirmed
// repetition), DROP (unaligned source tokens). REP and DROP are
// alignment-based surrogates; they count surface evidence, not model
// internals. BLEU and TER are out of scope and are ingested from
// external scorers for report assembly only.

#pragma once

#include <cstddef>
#include <cstdio>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "bitext/common.hpp"
#include "bitext/postprocess.hpp"
#include "bitext/types.hpp"

namespace bitext {

/// Punctuation excluded from DROP counting by default. Aligners often
/// leave punctuation unlinked, which says nothing about dropped
/// content.
inline const std::set<std::string>& default_drop_stoplist() {
  static const std::set<std::string> stoplist = {
      ".",  ",",  ";",  ":",  "!",  "?",  "\"", "'",  "`",  "``", "''",
      "(",  ")",  "[",  "]",  "{",  "}",  "-",  "--", "...", "–",
      "—", "‘", "’", "“", "”", "«",
      "»", "…"};
  return stoplist;
}

struct MetricsOptions {
  /// UNDER threshold as a fraction of the expected length ratio. A
  /// hypothesis counts when |hyp| / |src| < ratio_floor * expected_ratio.
  double ratio_floor = 0.6;
  /// Expected |hyp| / |src| token ratio on clean output.
  double expected_ratio = 1.0;
  /// Largest repeated block size OVER considers.
  std::size_t max_ngram = 4;
  std::set<std::string> drop_stoplist = default_drop_stoplist();
};

/// Extra adjacent copies in one tokenized hypothesis: sum of count-1
/// over detected repeat blocks.
inline std::size_t over_count(const std::vector<std::string>& hyp_tokens,
                              std::size_t max_ngram = 4) {
  std::size_t total = 0;
  for (const auto& block : find_repeats(hyp_tokens, max_ngram)) {
    total += block.count - 1;
  }
  return total;
}

/// Hypothesis tokens with an identical-surface adjacent predecessor
/// tied to a shared source index: exactly the tokens strict single-word
/// rep_del would delete.
inline std::size_t rep_count(const std::vector<std::string>& src_tokens,
                             const std::vector<std::string>& hyp_tokens,
                             const Alignment& alignment) {
  RepDelOptions options;
  options.max_ngram = 1;
  return rep_del(src_tokens, hyp_tokens, alignment, options)
      .deletions.size();
}

/// Source tokens with no alignment link, minus stop-listed punctuation.
inline std::size_t drop_count(
    const std::vector<std::string>& src_tokens,
    const std::vector<std::string>& hyp_tokens,
    const Alignment& alignment,
    const std::set<std::string>& stoplist = default_drop_stoplist()) {
  for (const auto& [s, t] : alignment.links) {
    if (s >= src_tokens.size() || t >= hyp_tokens.size()) {
      fail("alignment link ", s, "-", t, " out of range for ",
           src_tokens.size(), " source and ", hyp_tokens.size(),
           " hypothesis tokens");
    }
  }
  std::vector<bool> linked(src_tokens.size(), false);
  for (const auto& [s, t] : alignment.links) linked[s] = true;
  std::size_t total = 0;
  for (std::size_t i = 0; i < src_tokens.size(); ++i) {
    if (!linked[i] && stoplist.count(src_tokens[i]) == 0) ++total;
  }
  return total;
}

struct SentenceMetrics {
  std::size_t over = 0;
  bool under = false;
  std::size_t rep = 0;
  std::size_t drop = 0;
};

/// Corpus totals with the per-sentence breakdown they sum over.
struct MetricsReport {
  std::size_t over = 0;
  std::size_t under = 0;
  std::size_t rep = 0;
  std::size_t drop = 0;
  /// False when no alignment was supplied; rep and drop are then 0 by
  /// construction, not measured.
  bool has_alignment = false;
  std::vector<SentenceMetrics> sentences;
  std::vector<std::string> warnings;
};

/// Computes all four metrics over line-parallel tokenized corpora.
/// `alignments` may be null; rep and drop then stay 0. Sentences with
/// an empty source cannot be judged for UNDER and are skipped with a
/// warning.
inline MetricsReport measure_corpus(
    const std::vector<std::vector<std::string>>& src,
    const std::vector<std::vector<std::string>>& hyp,
    const std::vector<Alignment>* alignments = nullptr,
    const MetricsOptions& options = {}) {
  if (src.size() != hyp.size()) {
    fail("source/hypothesis line counts differ: ", src.size(), " vs ",
         hyp.size());
  }
  if (alignments != nullptr && alignments->size() != hyp.size()) {
    fail("alignment/hypothesis line counts differ: ", alignments->size(),
         " vs ", hyp.size());
  }
  if (options.ratio_floor < 0.0 || options.expected_ratio < 0.0) {
    fail("ratio_floor and expected_ratio must be >= 0");
  }
  if (options.max_ngram == 0) fail("max_ngram must be >= 1");

  const double floor = options.ratio_floor * options.expected_ratio;
  MetricsReport report;
  report.has_alignment = alignments != nullptr;
  report.sentences.reserve(src.size());
  for (std::size_t i = 0; i < src.size(); ++i) {
    SentenceMetrics m;
    m.over = over_count(hyp[i], options.max_ngram);
    if (src[i].empty()) {
      report.warnings.push_back(
          strcat_("line ", i, ": empty source, skipped for UNDER"));
    } else if (static_cast<double>(hyp[i].size()) /
                   static_cast<double>(src[i].size()) <
               floor) {
      m.under = true;
    }
    if (alignments != nullptr) {
      m.rep = rep_count(src[i], hyp[i], (*alignments)[i]);
      m.drop = drop_count(src[i], hyp[i], (*alignments)[i],
                          options.drop_stoplist);
    }
    report.over += m.over;
    report.under += m.under ? 1 : 0;
    report.rep += m.rep;
    report.drop += m.drop;
    report.sentences.push_back(m);
  }
  return report;
}

/// Quality scores produced by external tools, for the summary table.
struct ExternalScores {
  std::optional<double> bleu;
  std::optional<double> one_minus_ter;
};

/// Two-line summary with the standard column layout. Absent external
/// scores print as "-".
inline std::string metrics_table(const MetricsReport& report,
                                 const ExternalScores& scores = {}) {
  auto fmt = [](const std::optional<double>& v) -> std::string {
    if (!v.has_value()) return "-";
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.1f", *v);
    return buf;
  };
  std::string out = "BLEU & 1-TER & OVER & REP & UNDER & DROP\n";
  out += fmt(scores.bleu);
  out += " & ";
  out += fmt(scores.one_minus_ter);
  out += " & ";
  out += std::to_string(report.over);
  out += " & ";
  out += std::to_string(report.rep);
  out += " & ";
  out += std::to_string(report.under);
  out += " & ";
  out += std::to_string(report.drop);
  return out;
}

}  // namespace bitext
