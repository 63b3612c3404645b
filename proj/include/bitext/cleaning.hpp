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

// Corpus cleaning cascade. Stages run in a fixed order:
//
//   characters -> punct_digit -> copy -> dedup -> length -> language
//
// Length-ratio statistics are computed on the survivors of the dedup stage
// so that earlier noise does not skew the 6-sigma cut. Every drop is
// recorded with its pair id, stage, and reason, and the report reconciles
// exactly: input = output + drops.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "bitext/common.hpp"
#include "bitext/langid.hpp"
#include "bitext/types.hpp"
#include "bitext/unicode.hpp"

namespace bitext {

// ---------------------------------------------------------------------------
// Report types
// ---------------------------------------------------------------------------

enum class CleaningStage {
  Characters,
  PunctDigit,
  Copy,
  Dedup,
  Length,
  Language,
};

inline constexpr CleaningStage kCleaningStages[] = {
    CleaningStage::Characters, CleaningStage::PunctDigit, CleaningStage::Copy,
    CleaningStage::Dedup,      CleaningStage::Length,     CleaningStage::Language,
};

inline const char* stage_name(CleaningStage s) {
  switch (s) {
    case CleaningStage::Characters: return "characters";
    case CleaningStage::PunctDigit: return "punct_digit";
    case CleaningStage::Copy: return "copy";
    case CleaningStage::Dedup: return "dedup";
    case CleaningStage::Length: return "length";
    case CleaningStage::Language: return "language";
  }
  return "?";
}

inline std::optional<CleaningStage> stage_from_name(const std::string& name) {
  for (CleaningStage s : kCleaningStages)
    if (name == stage_name(s)) return s;
  return std::nullopt;
}

enum class DropReason {
  EmptySide,
  LowAlnumRatio,
  DigitsOnly,
  CopyOfSource,
  Duplicate,
  TooShort,
  RatioOutlier,
  ScriptMismatch,
  LanguageMismatch,
};

inline const char* reason_name(DropReason r) {
  switch (r) {
    case DropReason::EmptySide: return "empty_side";
    case DropReason::LowAlnumRatio: return "low_alnum_ratio";
    case DropReason::DigitsOnly: return "digits_only";
    case DropReason::CopyOfSource: return "copy_of_source";
    case DropReason::Duplicate: return "duplicate";
    case DropReason::TooShort: return "too_short";
    case DropReason::RatioOutlier: return "ratio_outlier";
    case DropReason::ScriptMismatch: return "script_mismatch";
    case DropReason::LanguageMismatch: return "language_mismatch";
  }
  return "?";
}

struct RatioStats {
  double mean = 0.0;
  double stddev = 0.0;
  size_t n = 0;
};

struct DropRecord {
  size_t id = 0;
  CleaningStage stage = CleaningStage::Characters;
  DropReason reason = DropReason::EmptySide;
};

struct StageStats {
  CleaningStage stage = CleaningStage::Characters;
  bool enabled = true;
  size_t input = 0;
  size_t dropped = 0;
  std::map<DropReason, size_t> reasons;

  size_t kept() const { return input - dropped; }
};

struct CleaningReport {
  std::vector<StageStats> stages;  // execution order
  std::vector<DropRecord> drops;   // sorted by pair id
  size_t input_pairs = 0;
  size_t output_pairs = 0;
  size_t characters_modified = 0;  // pairs rewritten by the character stage
  RatioStats ratio_stats;
  bool ratio_stats_valid = false;

  // Conservation invariant: counts chain across stages and every drop is
  // accounted for exactly once.
  bool reconciles() const {
    if (input_pairs != output_pairs + drops.size()) return false;
    size_t flowing = input_pairs;
    size_t total_dropped = 0;
    for (const auto& st : stages) {
      if (st.input != flowing) return false;
      size_t reason_sum = 0;
      for (const auto& [r, c] : st.reasons) {
        (void)r;
        reason_sum += c;
      }
      if (reason_sum != st.dropped) return false;
      if (st.dropped > st.input) return false;
      flowing = st.kept();
      total_dropped += st.dropped;
    }
    if (flowing != output_pairs) return false;
    if (total_dropped != drops.size()) return false;
    std::set<size_t> ids;
    for (const auto& d : drops) ids.insert(d.id);
    return ids.size() == drops.size();
  }

  std::string summary() const {
    std::string out = strcat_("cleaning: ", input_pairs, " pairs in, ",
                              output_pairs, " kept, ", drops.size(),
                              " dropped\n");
    for (const auto& st : stages) {
      out += strcat_("  ", stage_name(st.stage));
      if (!st.enabled) {
        out += ": disabled\n";
        continue;
      }
      out += strcat_(": ", st.input, " in, ", st.dropped, " dropped");
      if (st.stage == CleaningStage::Characters && characters_modified > 0)
        out += strcat_(" (", characters_modified, " pairs rewritten)");
      if (!st.reasons.empty()) {
        out += " [";
        bool first = true;
        for (const auto& [r, c] : st.reasons) {
          if (!first) out += " ";
          out += strcat_(reason_name(r), "=", c);
          first = false;
        }
        out += "]";
      }
      out += "\n";
    }
    if (ratio_stats_valid)
      out += strcat_("ratio stats: mean=", ratio_stats.mean,
                     " stddev=", ratio_stats.stddev, " n=", ratio_stats.n,
                     "\n");
    return out;
  }
};

// ---------------------------------------------------------------------------
// Character cleaning
// ---------------------------------------------------------------------------

namespace detail {

inline bool is_c0_control(CodePoint cp) {
  return (cp < 0x20 && cp != U'\t') || cp == 0x7F;
}

inline bool is_c1_control(CodePoint cp) { return cp >= 0x80 && cp <= 0x9F; }

// Number of adjacent code point pairs that look like a UTF-8 byte sequence
// misread as latin-1/cp1252: a lead-range byte followed by a
// continuation-range byte.
inline size_t mojibake_score_cps(const std::vector<CodePoint>& cps) {
  size_t score = 0;
  for (size_t i = 0; i + 1 < cps.size(); ++i) {
    auto b1 = unicode_to_cp1252(cps[i]);
    auto b2 = unicode_to_cp1252(cps[i + 1]);
    if (!b1 || !b2) continue;
    bool lead = *b1 >= 0xC2 && *b1 <= 0xF4;
    bool cont = *b2 >= 0x80 && *b2 <= 0xBF;
    if (lead && cont) ++score;
  }
  return score;
}

// One attempt at reversing a decode-as-latin1 error: re-encode every code
// point as its latin-1/cp1252 byte and decode the bytes as UTF-8. Returns
// the repaired code points only when that round trip is possible, valid,
// and strictly lowers the mojibake score.
inline std::optional<std::vector<CodePoint>> try_repair_mojibake(
    const std::vector<CodePoint>& cps) {
  size_t before = mojibake_score_cps(cps);
  if (before == 0) return std::nullopt;
  std::string bytes;
  bytes.reserve(cps.size());
  for (CodePoint cp : cps) {
    auto b = unicode_to_cp1252(cp);
    if (!b) return std::nullopt;
    bytes.push_back(static_cast<char>(*b));
  }
  if (utf8_invalid_at(bytes)) return std::nullopt;
  std::vector<CodePoint> repaired = decode_utf8(bytes);
  if (mojibake_score_cps(repaired) >= before) return std::nullopt;
  return repaired;
}

// One normalization pass. clean_characters iterates this to a fixpoint;
// every pass that changes the text either shrinks it or only remaps
// whitespace, so the iteration terminates.
inline std::vector<CodePoint> clean_pass(const std::vector<CodePoint>& in) {
  // C0 controls and invisible format characters can never take part in a
  // mojibake repair (their bytes are not continuation bytes), so removing
  // them first exposes repairable sequences they may interrupt.
  std::vector<CodePoint> cps;
  cps.reserve(in.size());
  for (CodePoint cp : in)
    if (!is_c0_control(cp) && !is_format_noise(cp)) cps.push_back(cp);

  cps = compose_canonical(cps);

  if (auto repaired = try_repair_mojibake(cps)) cps = *repaired;

  // C1 controls survive to this point because latin-1 style mojibake needs
  // them as continuation characters.
  std::vector<CodePoint> out;
  out.reserve(cps.size());
  bool pending_space = false;
  for (CodePoint cp : cps) {
    if (is_c0_control(cp) || is_c1_control(cp) || is_format_noise(cp))
      continue;
    if (cp == U'\t' || is_space(cp)) {
      pending_space = true;
      continue;
    }
    if (pending_space && !out.empty()) out.push_back(U' ');
    pending_space = false;
    out.push_back(cp);
  }
  return out;
}

}  // namespace detail

// Suspicious-bigram count of a UTF-8 string, exposed for inspection.
inline size_t mojibake_score(const std::string& text) {
  return detail::mojibake_score_cps(decode_utf8(text));
}

// Canonicalizes one line of text: composes combining sequences, removes
// control and zero-width characters, repairs double-encoded mojibake when
// the repair strictly lowers the suspicious-bigram score, folds all
// whitespace runs to single spaces, and trims. Total and idempotent.
inline std::string clean_characters(const std::string& text) {
  std::vector<CodePoint> cur = decode_utf8(text);
  // Fixpoint iteration; bound is a safety net only.
  for (size_t i = 0; i <= cur.size() + 2; ++i) {
    std::vector<CodePoint> next = detail::clean_pass(cur);
    if (next == cur) break;
    cur = std::move(next);
  }
  return encode_utf8(cur);
}

// ---------------------------------------------------------------------------
// Pair filters
// ---------------------------------------------------------------------------

// nullopt = keep.
using Verdict = std::optional<DropReason>;

inline Verdict punct_digit_filter(const SentencePair& pair) {
  for (const std::string* side : {&pair.src, &pair.tgt}) {
    if (side->empty()) return DropReason::EmptySide;
    size_t alnum = 0, non_space = 0, digits = 0, other = 0;
    for (CodePoint cp : decode_utf8(*side)) {
      if (cp == U' ') continue;
      ++non_space;
      if (is_letter(cp) || is_ascii_digit(cp)) ++alnum;
      if (is_ascii_digit(cp))
        ++digits;
      else
        ++other;
    }
    if (non_space == 0) return DropReason::EmptySide;
    if (2 * alnum < non_space) return DropReason::LowAlnumRatio;
    if (digits > 0 && other == 0) return DropReason::DigitsOnly;
  }
  return std::nullopt;
}

namespace detail {

inline std::string copy_key(const std::string& text) {
  std::vector<CodePoint> out;
  bool pending = false;
  for (CodePoint cp : decode_utf8(text)) {
    if (is_space(cp) || cp == U'\t') {
      pending = true;
      continue;
    }
    if (pending && !out.empty()) out.push_back(U' ');
    pending = false;
    out.push_back(to_lower(cp));
  }
  return encode_utf8(out);
}

}  // namespace detail

inline Verdict copy_filter(const SentencePair& pair) {
  if (detail::copy_key(pair.src) == detail::copy_key(pair.tgt))
    return DropReason::CopyOfSource;
  return std::nullopt;
}

inline Corpus dedup(const Corpus& corpus) {
  Corpus out;
  out.src_lang = corpus.src_lang;
  out.tgt_lang = corpus.tgt_lang;
  std::unordered_set<std::string> seen;
  for (const auto& p : corpus.pairs)
    if (seen.insert(p.src + '\x1F' + p.tgt).second) out.pairs.push_back(p);
  return out;
}

// ---------------------------------------------------------------------------
// Length-ratio filter
// ---------------------------------------------------------------------------

inline size_t side_length(const std::string& text, bool in_tokens) {
  if (in_tokens) return split_ws(text).size();
  return count_codepoints(text);
}

inline RatioStats compute_ratio_stats(const Corpus& corpus,
                                      bool in_tokens = false) {
  std::vector<double> ratios;
  for (const auto& p : corpus.pairs) {
    size_t s = side_length(p.src, in_tokens);
    size_t t = side_length(p.tgt, in_tokens);
    if (s == 0 || t == 0) continue;
    ratios.push_back(static_cast<double>(s) / static_cast<double>(t));
  }
  if (ratios.size() < 2)
    fail("ratio stats need at least 2 pairs with nonempty sides, got ",
         ratios.size());
  double sum = 0.0;
  for (double r : ratios) sum += r;
  double mean = sum / static_cast<double>(ratios.size());
  double sq = 0.0;
  for (double r : ratios) sq += (r - mean) * (r - mean);
  RatioStats st;
  st.mean = mean;
  st.stddev = std::sqrt(sq / static_cast<double>(ratios.size()));
  st.n = ratios.size();
  return st;
}

inline Verdict length_filter(const SentencePair& pair, const RatioStats& stats,
                             size_t min_chars = 2, double sigma = 6.0,
                             bool in_tokens = false) {
  size_t s = side_length(pair.src, in_tokens);
  size_t t = side_length(pair.tgt, in_tokens);
  if (s == 0 || t == 0) return DropReason::EmptySide;
  if (s < min_chars || t < min_chars) return DropReason::TooShort;
  double ratio = static_cast<double>(s) / static_cast<double>(t);
  if (std::fabs(ratio - stats.mean) > sigma * stats.stddev)
    return DropReason::RatioOutlier;
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Script and language filter
// ---------------------------------------------------------------------------

// Majority script of the letters in the text; Mixed when no script exceeds
// 60% of the letters; Unknown when there are none.
inline Script detect_script(const std::string& text) {
  std::map<Script, size_t> counts;
  size_t letters = 0;
  for (CodePoint cp : decode_utf8(text)) {
    auto sc = letter_script(cp);
    if (!sc) continue;
    ++counts[*sc];
    ++letters;
  }
  if (letters == 0) return Script::Unknown;
  for (const auto& [sc, cnt] : counts)
    if (cnt * 5 > letters * 3) return sc;  // cnt/letters > 0.6
  return Script::Mixed;
}

using ScriptLanguageTable = std::map<Script, std::set<std::string>>;

inline ScriptLanguageTable default_script_table() {
  return {
      {Script::Latin, {"en", "de", "fr", "es", "it", "pt", "nl"}},
      {Script::Cyrillic, {"ru"}},
      {Script::Greek, {"el"}},
  };
}

inline std::pair<std::string, double> identify_language(
    const std::string& text, const std::vector<std::string>& candidates,
    const LanguageIdentifier& id = bundled_identifier()) {
  return id.identify(text, candidates);
}

namespace detail {

inline Verdict language_check_side(const std::string& text,
                                   const std::string& expected,
                                   const ScriptLanguageTable& table,
                                   const LanguageIdentifier& id) {
  Script script = detect_script(text);
  if (script == Script::Unknown || script == Script::Mixed)
    return std::nullopt;  // fail-open
  auto it = table.find(script);
  if (it == table.end()) return std::nullopt;  // no languages known: fail-open
  if (it->second.count(expected) == 0) return DropReason::ScriptMismatch;

  std::vector<std::string> candidates(it->second.begin(), it->second.end());
  std::vector<std::string> tokens = split_ws(text);
  size_t mid = tokens.size() / 2;
  std::string first = join(
      std::vector<std::string>(tokens.begin(), tokens.begin() + mid), " ");
  std::string second = join(
      std::vector<std::string>(tokens.begin() + mid, tokens.end()), " ");
  auto [l1, c1] = id.identify(first, candidates);
  auto [l2, c2] = id.identify(second, candidates);
  (void)c1;
  (void)c2;
  if (l1 == kUnknownLang || l2 == kUnknownLang) return std::nullopt;
  if (l1 == l2 && l1 != expected) return DropReason::LanguageMismatch;
  return std::nullopt;
}

}  // namespace detail

// Script-gated two-halves language filter. A side is rejected only when its
// script rules out the expected language entirely, or when both halves of
// the side classify as the same wrong language. Everything uncertain is
// kept.
inline Verdict language_filter(
    const SentencePair& pair, const std::string& expected_src,
    const std::string& expected_tgt,
    const ScriptLanguageTable& table = default_script_table(),
    const LanguageIdentifier& id = bundled_identifier()) {
  if (!expected_src.empty())
    if (auto v = detail::language_check_side(pair.src, expected_src, table, id))
      return v;
  if (!expected_tgt.empty())
    if (auto v = detail::language_check_side(pair.tgt, expected_tgt, table, id))
      return v;
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Cascade driver
// ---------------------------------------------------------------------------

struct CleaningConfig {
  std::string src_lang;  // empty disables the language stage for that side
  std::string tgt_lang;
  size_t min_chars = 2;
  double sigma = 6.0;
  bool length_in_tokens = false;
  std::set<CleaningStage> disabled;
  ScriptLanguageTable script_table = default_script_table();
  const LanguageIdentifier* identifier = nullptr;  // nullptr = bundled
  // When set, the length stage uses these statistics instead of
  // recomputing them. Re-running on cleaned output with the first run's
  // stats makes the cascade idempotent.
  std::optional<RatioStats> frozen_stats;
};

inline std::pair<Corpus, CleaningReport> run_cleaning(
    const Corpus& corpus, const CleaningConfig& config = {}) {
  const LanguageIdentifier& id =
      config.identifier ? *config.identifier : bundled_identifier();

  Corpus cur = corpus;
  CleaningReport report;
  report.input_pairs = corpus.size();

  auto enabled = [&](CleaningStage s) { return config.disabled.count(s) == 0; };

  auto run_filter = [&](CleaningStage stage, auto&& verdict_fn) {
    StageStats st;
    st.stage = stage;
    st.enabled = enabled(stage);
    st.input = cur.size();
    if (!st.enabled) {
      report.stages.push_back(st);
      return;
    }
    Corpus kept;
    kept.src_lang = cur.src_lang;
    kept.tgt_lang = cur.tgt_lang;
    for (const auto& p : cur.pairs) {
      Verdict v = verdict_fn(p);
      if (v) {
        ++st.dropped;
        ++st.reasons[*v];
        report.drops.push_back({p.id, stage, *v});
      } else {
        kept.pairs.push_back(p);
      }
    }
    report.stages.push_back(st);
    cur = std::move(kept);
  };

  // Stage 1: character cleaning (a rewrite, never a drop).
  {
    StageStats st;
    st.stage = CleaningStage::Characters;
    st.enabled = enabled(CleaningStage::Characters);
    st.input = cur.size();
    if (st.enabled) {
      for (auto& p : cur.pairs) {
        std::string src = clean_characters(p.src);
        std::string tgt = clean_characters(p.tgt);
        if (src != p.src || tgt != p.tgt) ++report.characters_modified;
        p.src = std::move(src);
        p.tgt = std::move(tgt);
      }
    }
    report.stages.push_back(st);
  }

  run_filter(CleaningStage::PunctDigit, punct_digit_filter);
  run_filter(CleaningStage::Copy, copy_filter);

  {
    std::unordered_set<std::string> seen;
    run_filter(CleaningStage::Dedup, [&](const SentencePair& p) -> Verdict {
      if (!seen.insert(p.src + '\x1F' + p.tgt).second)
        return DropReason::Duplicate;
      return std::nullopt;
    });
  }

  // Ratio statistics over dedup survivors. With fewer than 2 usable pairs
  // the stddev is undefined; the ratio cut is skipped and only the empty
  // and min-length checks apply.
  RatioStats stats;
  bool stats_valid = false;
  if (enabled(CleaningStage::Length)) {
    if (config.frozen_stats) {
      stats = *config.frozen_stats;
      stats_valid = true;
    } else {
      size_t usable = 0;
      for (const auto& p : cur.pairs)
        if (side_length(p.src, config.length_in_tokens) > 0 &&
            side_length(p.tgt, config.length_in_tokens) > 0)
          ++usable;
      if (usable >= 2) {
        stats = compute_ratio_stats(cur, config.length_in_tokens);
        stats_valid = true;
      }
    }
  }
  report.ratio_stats = stats;
  report.ratio_stats_valid = stats_valid;

  run_filter(CleaningStage::Length, [&](const SentencePair& p) -> Verdict {
    size_t s = side_length(p.src, config.length_in_tokens);
    size_t t = side_length(p.tgt, config.length_in_tokens);
    if (s == 0 || t == 0) return DropReason::EmptySide;
    if (s < config.min_chars || t < config.min_chars)
      return DropReason::TooShort;
    if (!stats_valid) return std::nullopt;
    double ratio = static_cast<double>(s) / static_cast<double>(t);
    if (std::fabs(ratio - stats.mean) > config.sigma * stats.stddev)
      return DropReason::RatioOutlier;
    return std::nullopt;
  });

  run_filter(CleaningStage::Language, [&](const SentencePair& p) -> Verdict {
    return language_filter(p, config.src_lang, config.tgt_lang,
                           config.script_table, id);
  });

  report.output_pairs = cur.size();
  std::sort(report.drops.begin(), report.drops.end(),
            [](const DropRecord& a, const DropRecord& b) { return a.id < b.id; });
  return {std::move(cur), std::move(report)};
}

}  // namespace bitext
