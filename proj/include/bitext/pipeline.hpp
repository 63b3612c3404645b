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

// End-to-end orchestration. The training side chains cleaning, entity
// masking, tokenization, truecasing, subword encoding, and splitting
// into a run directory with a content-hash manifest; re-running with
// identical inputs and config reproduces every byte. The inference side
// chains subword decode, repetition deletion, detruecasing,
// detokenization, and placeholder restoration. Entity restoration runs
// after detokenization because restored surfaces may contain
// punctuation that detokenization would reattach.
//
// Configs are strict JSON: unknown keys are errors, so a misspelled
// option can never be ignored silently. Requires nlohmann/json on the
// include path (vendored in this repository).

#pragma once

#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "bitext/cleaning.hpp"
#include "bitext/common.hpp"
#include "bitext/corpusio.hpp"
#include "bitext/dnt.hpp"
#include "bitext/postprocess.hpp"
#include "bitext/split.hpp"
#include "bitext/subword.hpp"
#include "bitext/textproc.hpp"
#include "bitext/types.hpp"

namespace bitext {

// Raised when a pipeline stage fails after input validation passed.
// Callers can map input errors and stage errors to distinct exit codes.
class StageError : public Error {
 public:
  StageError(std::string stage, const std::string& what)
      : Error(strcat_("stage ", stage, ": ", what)), stage_(std::move(stage)) {}
  const std::string& stage() const { return stage_; }

 private:
  std::string stage_;
};

struct StageRecord {
  std::string stage;
  std::string input_hash;   // 16 hex digits over the stage's input bytes
  std::string output_hash;  // over every file the stage wrote
  std::string parameters;   // "-" when the stage has none
};

struct ConsolidatedReport {
  std::vector<StageRecord> manifest;
  std::vector<std::string> lines;  // one human-readable line per stage

  std::string text() const {
    std::string out;
    for (const auto& line : lines) {
      out += line;
      out += '\n';
    }
    return out;
  }
};

// ---------------------------------------------------------------------------
// Config structs
// ---------------------------------------------------------------------------

inline std::string subword_mode_label(const SubwordMode& mode) {
  switch (mode.kind) {
    case SubwordMode::Kind::Baseline: return "baseline";
    case SubwordMode::Kind::NoMoreSplit: return "nomoresplit";
    case SubwordMode::Kind::ProtectUnseen: return "protect";
  }
  return "?";
}

inline SubwordMode subword_mode_from(const std::string& name, std::size_t k) {
  if (name == "baseline") return SubwordMode::baseline();
  if (name == "nomoresplit") return SubwordMode::no_more_split();
  if (name == "protect") return SubwordMode::protect_unseen(k);
  fail("unknown subword mode '", name,
       "' (expected baseline, nomoresplit, or protect)");
}

struct PrepareStages {
  bool clean = true;
  bool mask = true;
  bool truecase = true;
  bool bpe = true;
  bool split = true;
};

struct PrepareConfig {
  std::string src_file;
  std::string tgt_file;
  std::string src_lang;  // empty disables that side's language check
  std::string tgt_lang;
  std::string run_dir;
  PrepareStages stages;
  // cleaning
  double sigma = 6.0;
  std::size_t min_chars = 2;
  // subword
  std::size_t bpe_merges = 1000;
  SubwordMode bpe_mode = SubwordMode::baseline();
  std::uint64_t bpe_min_frequency = 1;
  // split
  std::size_t dev_n = 0;
  std::size_t test_n = 0;
  double overlap_frac = 0.05;
  std::uint64_t seed = 0;

  void validate() const {
    if (src_file.empty() || tgt_file.empty()) {
      fail("prepare config: input src and tgt files are required");
    }
    if (run_dir.empty()) fail("prepare config: run_dir is required");
    if (stages.bpe && bpe_merges < 1) {
      fail("prepare config: bpe stage enabled with merges=0");
    }
  }
};

struct PostprocessConfig {
  std::string hyp_file;
  std::string src_file;
  std::string map_file;
  std::string align_file;  // required when repdel is enabled
  std::string out_file;
  std::string report_file;  // optional
  bool repdel = true;
  std::size_t repdel_max_ngram = 4;
  // Pharaoh lines read hypothesis-first ("h-s", decoder convention)
  // unless flipped here to source-first.
  bool align_src_first = false;
  std::string bpe_marker = "@@";

  void validate() const {
    if (hyp_file.empty() || src_file.empty() || map_file.empty()) {
      fail("postprocess config: hyp, src, and map files are required");
    }
    if (out_file.empty()) fail("postprocess config: output file is required");
    if (repdel && align_file.empty()) {
      fail("postprocess config: rep-del needs an alignment file");
    }
    if (repdel && repdel_max_ngram < 1) {
      fail("postprocess config: rep-del max_ngram must be at least 1");
    }
  }
};

// ---------------------------------------------------------------------------
// Strict JSON parsing
// ---------------------------------------------------------------------------

namespace detail {

using json = nlohmann::json;

inline std::string key_path(const std::string& section, const std::string& key) {
  return section.empty() ? key : strcat_(section, ".", key);
}

inline void check_keys(const json& obj, const std::string& section,
                       std::initializer_list<const char*> allowed) {
  if (!obj.is_object()) {
    fail("config: '", section.empty() ? "(root)" : section,
         "' must be an object");
  }
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    bool known = false;
    for (const char* k : allowed) {
      if (it.key() == k) {
        known = true;
        break;
      }
    }
    if (!known) {
      fail("config: unknown key '", key_path(section, it.key()), "'");
    }
  }
}

template <typename T>
T get_field(const json& obj, const std::string& section, const char* key,
            T fallback) {
  if (!obj.contains(key)) return fallback;
  try {
    return obj.at(key).get<T>();
  } catch (const json::exception& e) {
    fail("config: bad value for '", key_path(section, key), "': ", e.what());
  }
}

inline std::string require_string(const json& obj, const std::string& section,
                                  const char* key) {
  if (!obj.contains(key)) {
    fail("config: missing required key '", key_path(section, key), "'");
  }
  return get_field<std::string>(obj, section, key, "");
}

inline json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    fail("config: ", e.what());
  }
}

}  // namespace detail

inline PrepareConfig parse_prepare_config(const std::string& text) {
  using detail::check_keys;
  using detail::get_field;
  using detail::require_string;
  detail::json root = detail::parse_json(text);
  check_keys(root, "",
             {"input", "run_dir", "clean", "mask", "truecase", "bpe", "split"});
  if (!root.contains("input")) fail("config: missing required key 'input'");

  PrepareConfig config;
  const auto& input = root.at("input");
  check_keys(input, "input", {"src", "tgt", "src_lang", "tgt_lang"});
  config.src_file = require_string(input, "input", "src");
  config.tgt_file = require_string(input, "input", "tgt");
  config.src_lang = get_field<std::string>(input, "input", "src_lang", "");
  config.tgt_lang = get_field<std::string>(input, "input", "tgt_lang", "");
  config.run_dir = require_string(root, "", "run_dir");

  if (root.contains("clean")) {
    const auto& clean = root.at("clean");
    check_keys(clean, "clean", {"enabled", "sigma", "min_chars"});
    config.stages.clean = get_field<bool>(clean, "clean", "enabled", true);
    config.sigma = get_field<double>(clean, "clean", "sigma", config.sigma);
    config.min_chars =
        get_field<std::uint64_t>(clean, "clean", "min_chars", config.min_chars);
  }
  if (root.contains("mask")) {
    const auto& mask = root.at("mask");
    check_keys(mask, "mask", {"enabled"});
    config.stages.mask = get_field<bool>(mask, "mask", "enabled", true);
  }
  if (root.contains("truecase")) {
    const auto& truecase = root.at("truecase");
    check_keys(truecase, "truecase", {"enabled"});
    config.stages.truecase =
        get_field<bool>(truecase, "truecase", "enabled", true);
  }
  if (root.contains("bpe")) {
    const auto& bpe = root.at("bpe");
    check_keys(bpe, "bpe", {"enabled", "merges", "mode", "k", "min_frequency"});
    config.stages.bpe = get_field<bool>(bpe, "bpe", "enabled", true);
    config.bpe_merges =
        get_field<std::uint64_t>(bpe, "bpe", "merges", config.bpe_merges);
    const std::string mode =
        get_field<std::string>(bpe, "bpe", "mode", "baseline");
    const std::size_t k = get_field<std::uint64_t>(bpe, "bpe", "k", 1);
    config.bpe_mode = subword_mode_from(mode, k);
    config.bpe_min_frequency = get_field<std::uint64_t>(
        bpe, "bpe", "min_frequency", config.bpe_min_frequency);
  }
  if (root.contains("split")) {
    const auto& split = root.at("split");
    check_keys(split, "split", {"enabled", "dev", "test", "overlap", "seed"});
    config.stages.split = get_field<bool>(split, "split", "enabled", true);
    config.dev_n = get_field<std::uint64_t>(split, "split", "dev", 0);
    config.test_n = get_field<std::uint64_t>(split, "split", "test", 0);
    config.overlap_frac =
        get_field<double>(split, "split", "overlap", config.overlap_frac);
    config.seed = get_field<std::uint64_t>(split, "split", "seed", 0);
  }
  config.validate();
  return config;
}

inline PostprocessConfig parse_postprocess_config(const std::string& text) {
  using detail::check_keys;
  using detail::get_field;
  using detail::require_string;
  detail::json root = detail::parse_json(text);
  check_keys(root, "", {"input", "output", "repdel", "bpe"});
  if (!root.contains("input")) fail("config: missing required key 'input'");
  if (!root.contains("output")) fail("config: missing required key 'output'");

  PostprocessConfig config;
  const auto& input = root.at("input");
  check_keys(input, "input", {"hyp", "src", "map", "align", "align_order"});
  config.hyp_file = require_string(input, "input", "hyp");
  config.src_file = require_string(input, "input", "src");
  config.map_file = require_string(input, "input", "map");
  config.align_file = get_field<std::string>(input, "input", "align", "");
  const std::string order =
      get_field<std::string>(input, "input", "align_order", "hyp-src");
  if (order == "hyp-src") {
    config.align_src_first = false;
  } else if (order == "src-hyp") {
    config.align_src_first = true;
  } else {
    fail("config: input.align_order must be 'hyp-src' or 'src-hyp', got '",
         order, "'");
  }

  const auto& output = root.at("output");
  check_keys(output, "output", {"restored", "report"});
  config.out_file = require_string(output, "output", "restored");
  config.report_file = get_field<std::string>(output, "output", "report", "");

  if (root.contains("repdel")) {
    const auto& repdel = root.at("repdel");
    check_keys(repdel, "repdel", {"enabled", "max_ngram"});
    config.repdel = get_field<bool>(repdel, "repdel", "enabled", true);
    config.repdel_max_ngram = get_field<std::uint64_t>(
        repdel, "repdel", "max_ngram", config.repdel_max_ngram);
  }
  if (root.contains("bpe")) {
    const auto& bpe = root.at("bpe");
    check_keys(bpe, "bpe", {"marker"});
    config.bpe_marker =
        get_field<std::string>(bpe, "bpe", "marker", config.bpe_marker);
  }
  config.validate();
  return config;
}

// ---------------------------------------------------------------------------
// Training side
// ---------------------------------------------------------------------------

struct PrepareOutcome {
  Corpus cleaned;  // post-clean pairs (input pairs when clean is disabled)
  bool clean_ran = false;
  CleaningReport cleaning;
  std::vector<PlaceholderMap> maps;  // aligned with cleaned pairs when masked
  std::size_t skipped_spans = 0;
  Corpus processed;  // final per-line text after the last enabled stage
  TruecaseModel truecase_src;
  TruecaseModel truecase_tgt;
  BpeModel bpe_src;
  BpeModel bpe_tgt;
  bool split_ran = false;
  SplitResult split;
  ConsolidatedReport report;
};

namespace detail {

inline std::string fmt_double(double v) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

inline std::string joined_lines(const std::vector<std::string>& lines) {
  std::string out;
  for (const auto& line : lines) {
    out += line;
    out += '\n';
  }
  return out;
}

// One hash over an ordered list of artifact contents. The separator
// keeps file boundaries visible to the hash.
inline std::string content_hash(std::initializer_list<const std::string*> parts) {
  std::string buf;
  for (const std::string* p : parts) {
    buf += *p;
    buf += '\x1e';
  }
  return hex64(fnv1a64(buf));
}

inline std::vector<std::string> tokenized_lines(
    const std::vector<std::string>& lines) {
  std::vector<std::string> out;
  out.reserve(lines.size());
  for (const auto& line : lines) out.push_back(join(tokenize(line), " "));
  return out;
}

}  // namespace detail

inline PrepareOutcome run_prepare(const PrepareConfig& config) {
  namespace fs = std::filesystem;
  config.validate();

  // Input problems surface before any stage runs.
  Corpus corpus = read_parallel(config.src_file, config.tgt_file,
                                config.src_lang, config.tgt_lang);
  std::error_code ec;
  fs::create_directories(config.run_dir, ec);
  if (ec) {
    fail("cannot create run directory '", config.run_dir, "': ", ec.message());
  }

  PrepareOutcome out;
  out.report.lines.push_back(strcat_("input: ", corpus.size(), " pairs"));

  const std::string manifest_path =
      (fs::path(config.run_dir) / "manifest.tsv").string();
  auto flush_manifest = [&]() {
    std::vector<std::string> lines;
    for (const auto& r : out.report.manifest) {
      lines.push_back(strcat_(r.stage, "\t", r.input_hash, "\t", r.output_hash,
                              "\t", r.parameters));
    }
    write_lines(manifest_path, lines);
  };
  flush_manifest();
  auto record = [&](const char* stage, std::string in_hash,
                    std::string out_hash, std::string params) {
    out.report.manifest.push_back({stage, std::move(in_hash),
                                   std::move(out_hash), std::move(params)});
    flush_manifest();
  };
  auto artifact = [&](const char* name, const std::string& content) {
    write_file((fs::path(config.run_dir) / name).string(), content);
  };

  std::vector<std::string> src_lines, tgt_lines;
  src_lines.reserve(corpus.size());
  tgt_lines.reserve(corpus.size());
  for (const auto& p : corpus.pairs) {
    src_lines.push_back(p.src);
    tgt_lines.push_back(p.tgt);
  }
  std::string src_text = detail::joined_lines(src_lines);
  std::string tgt_text = detail::joined_lines(tgt_lines);

  // -- clean ----------------------------------------------------------------
  if (config.stages.clean) {
    const std::string in_hash = detail::content_hash({&src_text, &tgt_text});
    try {
      CleaningConfig cc;
      cc.src_lang = config.src_lang;
      cc.tgt_lang = config.tgt_lang;
      cc.sigma = config.sigma;
      cc.min_chars = config.min_chars;
      auto [cleaned, report] = run_cleaning(corpus, cc);
      corpus = std::move(cleaned);
      out.cleaning = std::move(report);
      out.clean_ran = true;
      src_lines.clear();
      tgt_lines.clear();
      for (const auto& p : corpus.pairs) {
        src_lines.push_back(p.src);
        tgt_lines.push_back(p.tgt);
      }
      src_text = detail::joined_lines(src_lines);
      tgt_text = detail::joined_lines(tgt_lines);
      artifact("cleaned.src", src_text);
      artifact("cleaned.tgt", tgt_text);
      artifact("cleaning_report.txt", out.cleaning.summary());
    } catch (const StageError&) {
      throw;
    } catch (const Error& e) {
      throw StageError("clean", e.what());
    }
    record("clean", in_hash, detail::content_hash({&src_text, &tgt_text}),
           strcat_("sigma=", detail::fmt_double(config.sigma),
                   " min_chars=", config.min_chars, " src_lang=",
                   config.src_lang.empty() ? "-" : config.src_lang,
                   " tgt_lang=", config.tgt_lang.empty() ? "-" : config.tgt_lang));
    out.report.lines.push_back(strcat_("clean: kept ", out.cleaning.output_pairs,
                                       " of ", out.cleaning.input_pairs,
                                       " pairs"));
  } else {
    out.report.lines.push_back("clean: disabled");
  }
  out.cleaned = corpus;

  // -- mask -----------------------------------------------------------------
  if (config.stages.mask) {
    const std::string in_hash = detail::content_hash({&src_text, &tgt_text});
    std::string map_text;
    std::size_t placeholders = 0;
    try {
      out.maps.reserve(corpus.size());
      for (auto& pair : corpus.pairs) {
        MaskOutcome masked = mask_pair(pair);
        pair = masked.masked;
        placeholders += masked.map.size();
        out.skipped_spans += masked.skipped.size();
        map_text += format_placeholder_line(masked.map);
        map_text += '\n';
        out.maps.push_back(std::move(masked.map));
      }
      src_lines.clear();
      tgt_lines.clear();
      for (const auto& p : corpus.pairs) {
        src_lines.push_back(p.src);
        tgt_lines.push_back(p.tgt);
      }
      src_text = detail::joined_lines(src_lines);
      tgt_text = detail::joined_lines(tgt_lines);
      artifact("masked.src", src_text);
      artifact("masked.tgt", tgt_text);
      artifact("dnt.map", map_text);
    } catch (const Error& e) {
      throw StageError("mask", e.what());
    }
    record("mask", in_hash,
           detail::content_hash({&src_text, &tgt_text, &map_text}), "-");
    out.report.lines.push_back(strcat_("mask: ", placeholders,
                                       " placeholders, ", out.skipped_spans,
                                       " spans skipped"));
  } else {
    out.report.lines.push_back("mask: disabled");
  }

  // -- tokenize (always on) ---------------------------------------------------
  {
    const std::string in_hash = detail::content_hash({&src_text, &tgt_text});
    try {
      src_lines = detail::tokenized_lines(src_lines);
      tgt_lines = detail::tokenized_lines(tgt_lines);
      src_text = detail::joined_lines(src_lines);
      tgt_text = detail::joined_lines(tgt_lines);
      artifact("tokenized.src", src_text);
      artifact("tokenized.tgt", tgt_text);
    } catch (const Error& e) {
      throw StageError("tokenize", e.what());
    }
    record("tokenize", in_hash, detail::content_hash({&src_text, &tgt_text}),
           "-");
    std::size_t src_tokens = 0, tgt_tokens = 0;
    for (const auto& l : src_lines) src_tokens += split_ws(l).size();
    for (const auto& l : tgt_lines) tgt_tokens += split_ws(l).size();
    out.report.lines.push_back(strcat_("tokenize: ", src_tokens,
                                       " source tokens, ", tgt_tokens,
                                       " target tokens"));
  }

  // -- truecase ---------------------------------------------------------------
  if (config.stages.truecase) {
    const std::string in_hash = detail::content_hash({&src_text, &tgt_text});
    std::string src_model, tgt_model;
    try {
      auto side_tokens = [](const std::vector<std::string>& lines) {
        std::vector<std::vector<std::string>> out_tokens;
        out_tokens.reserve(lines.size());
        for (const auto& l : lines) out_tokens.push_back(split_ws(l));
        return out_tokens;
      };
      auto src_tok = side_tokens(src_lines);
      auto tgt_tok = side_tokens(tgt_lines);
      out.truecase_src = train_truecaser(src_tok);
      out.truecase_tgt = train_truecaser(tgt_tok);
      for (std::size_t i = 0; i < src_tok.size(); ++i) {
        src_lines[i] = join(truecase(src_tok[i], out.truecase_src), " ");
        tgt_lines[i] = join(truecase(tgt_tok[i], out.truecase_tgt), " ");
      }
      src_text = detail::joined_lines(src_lines);
      tgt_text = detail::joined_lines(tgt_lines);
      src_model = out.truecase_src.serialize();
      tgt_model = out.truecase_tgt.serialize();
      artifact("truecased.src", src_text);
      artifact("truecased.tgt", tgt_text);
      artifact("truecase.src.model", src_model);
      artifact("truecase.tgt.model", tgt_model);
    } catch (const Error& e) {
      throw StageError("truecase", e.what());
    }
    record("truecase", in_hash,
           detail::content_hash({&src_text, &tgt_text, &src_model, &tgt_model}),
           "-");
    out.report.lines.push_back(strcat_("truecase: ", out.truecase_src.size(),
                                       " source forms, ",
                                       out.truecase_tgt.size(),
                                       " target forms"));
  } else {
    out.report.lines.push_back("truecase: disabled");
  }

  // -- bpe ----------------------------------------------------------------------
  if (config.stages.bpe) {
    const std::string in_hash = detail::content_hash({&src_text, &tgt_text});
    std::string src_model, tgt_model;
    try {
      out.bpe_src = learn_bpe(src_lines, config.bpe_merges);
      out.bpe_tgt = learn_bpe(tgt_lines, config.bpe_merges);
      BpeApplier src_applier(out.bpe_src, config.bpe_mode,
                             config.bpe_min_frequency);
      BpeApplier tgt_applier(out.bpe_tgt, config.bpe_mode,
                             config.bpe_min_frequency);
      for (auto& line : src_lines) {
        line = join(src_applier.apply(split_ws(line)), " ");
      }
      for (auto& line : tgt_lines) {
        line = join(tgt_applier.apply(split_ws(line)), " ");
      }
      src_text = detail::joined_lines(src_lines);
      tgt_text = detail::joined_lines(tgt_lines);
      src_model = out.bpe_src.serialize();
      tgt_model = out.bpe_tgt.serialize();
      artifact("bpe.src", src_text);
      artifact("bpe.tgt", tgt_text);
      artifact("bpe.src.model", src_model);
      artifact("bpe.tgt.model", tgt_model);
    } catch (const Error& e) {
      throw StageError("bpe", e.what());
    }
    std::string params =
        strcat_("merges=", config.bpe_merges,
                " mode=", subword_mode_label(config.bpe_mode));
    if (config.bpe_mode.kind == SubwordMode::Kind::ProtectUnseen) {
      params += strcat_(" k=", config.bpe_mode.k);
    }
    params += strcat_(" min_frequency=", config.bpe_min_frequency);
    record("bpe", in_hash,
           detail::content_hash({&src_text, &tgt_text, &src_model, &tgt_model}),
           params);
    out.report.lines.push_back(
        strcat_("bpe: ", out.bpe_src.merges.size(), " source merges, ",
                out.bpe_tgt.merges.size(), " target merges, mode ",
                subword_mode_label(config.bpe_mode)));
  } else {
    out.report.lines.push_back("bpe: disabled");
  }

  // Final per-line artifacts, ids carried over from the cleaned corpus.
  out.processed.src_lang = corpus.src_lang;
  out.processed.tgt_lang = corpus.tgt_lang;
  out.processed.pairs.reserve(corpus.size());
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    out.processed.pairs.push_back(
        {corpus.pairs[i].id, src_lines[i], tgt_lines[i]});
  }

  // -- split ----------------------------------------------------------------------
  if (config.stages.split) {
    const std::string in_hash = detail::content_hash({&src_text, &tgt_text});
    std::string train_src, train_tgt, dev_src, dev_tgt, test_src, test_tgt;
    std::string split_report;
    try {
      SplitConfig sc;
      sc.dev_n = config.dev_n;
      sc.test_n = config.test_n;
      sc.overlap_frac = config.overlap_frac;
      sc.seed = config.seed;
      out.split = split_corpus(out.processed, sc);
      out.split_ran = true;
      auto side_text = [](const Corpus& c, bool src_side) {
        std::vector<std::string> lines;
        lines.reserve(c.size());
        for (const auto& p : c.pairs) lines.push_back(src_side ? p.src : p.tgt);
        return detail::joined_lines(lines);
      };
      train_src = side_text(out.split.train, true);
      train_tgt = side_text(out.split.train, false);
      dev_src = side_text(out.split.dev, true);
      dev_tgt = side_text(out.split.dev, false);
      test_src = side_text(out.split.test, true);
      test_tgt = side_text(out.split.test, false);
      split_report = out.split.report.summary();
      artifact("train.src", train_src);
      artifact("train.tgt", train_tgt);
      artifact("dev.src", dev_src);
      artifact("dev.tgt", dev_tgt);
      artifact("test.src", test_src);
      artifact("test.tgt", test_tgt);
      artifact("split_report.txt", split_report);
    } catch (const Error& e) {
      throw StageError("split", e.what());
    }
    record("split", in_hash,
           detail::content_hash({&train_src, &train_tgt, &dev_src, &dev_tgt,
                                 &test_src, &test_tgt}),
           strcat_("dev=", config.dev_n, " test=", config.test_n, " overlap=",
                   detail::fmt_double(config.overlap_frac), " seed=",
                   config.seed));
    out.report.lines.push_back(
        strcat_("split: train ", out.split.train.size(), ", dev ",
                out.split.dev.size(), " (", out.split.report.overlap,
                " overlap), test ", out.split.test.size()));
  } else {
    out.report.lines.push_back("split: disabled");
  }

  artifact("report.txt", out.report.text());
  return out;
}

// ---------------------------------------------------------------------------
// Inference side
// ---------------------------------------------------------------------------

struct PostprocessOutcome {
  std::vector<std::string> restored;
  std::vector<std::string> warnings;  // "line N: ..." per event
  std::size_t repetition_deletions = 0;
  std::size_t dangling_markers = 0;
  std::vector<std::string> report_lines;
};

inline PostprocessOutcome run_postprocess(const PostprocessConfig& config) {
  config.validate();

  auto hyp_lines = read_lines(config.hyp_file);
  auto src_lines = read_lines(config.src_file);
  auto map_lines = read_lines(config.map_file);
  auto require_count = [&](const char* what, std::size_t n) {
    if (n != hyp_lines.size()) {
      fail("line count mismatch: hypothesis has ", hyp_lines.size(),
           " lines, ", what, " has ", n);
    }
  };
  require_count("source", src_lines.size());
  require_count("placeholder map", map_lines.size());
  std::vector<std::string> align_lines;
  const bool use_repdel = config.repdel;
  if (use_repdel) {
    align_lines = read_lines(config.align_file);
    require_count("alignment", align_lines.size());
  }

  PostprocessOutcome out;
  out.restored.reserve(hyp_lines.size());
  for (std::size_t i = 0; i < hyp_lines.size(); ++i) {
    const std::string line_tag = strcat_("line ", i + 1, ": ");
    std::vector<std::string> tokens;
    try {
      BpeDecodeResult decoded =
          decode_bpe_full(split_ws(hyp_lines[i]), config.bpe_marker);
      if (decoded.dangling_markers > 0) {
        out.dangling_markers += decoded.dangling_markers;
        out.warnings.push_back(
            strcat_(line_tag, "dangling subword marker dropped"));
      }
      tokens = std::move(decoded.tokens);
      if (use_repdel) {
        std::vector<std::string> src_tokens =
            decode_bpe(split_ws(src_lines[i]), config.bpe_marker);
        Alignment alignment = parse_pharaoh(align_lines[i]);
        if (!config.align_src_first) {
          Alignment flipped;
          for (const auto& [h, s] : alignment.links) flipped.links.insert({s, h});
          alignment = std::move(flipped);
        }
        RepDelOptions options;
        options.max_ngram = config.repdel_max_ngram;
        RepDelResult result = rep_del(src_tokens, tokens, alignment, options);
        out.repetition_deletions += result.deletions.size();
        tokens = std::move(result.tokens);
      }
      tokens = detruecase(std::move(tokens));
      RestoreResult restored =
          restore(detokenize(tokens), parse_placeholder_line(map_lines[i]));
      for (const auto& w : restored.warnings) {
        out.warnings.push_back(line_tag + w.to_string());
      }
      out.restored.push_back(std::move(restored.text));
    } catch (const Error& e) {
      throw StageError("postprocess", line_tag + e.what());
    }
  }

  out.report_lines.push_back(strcat_("postprocess: ", out.restored.size(),
                                     " lines"));
  out.report_lines.push_back(use_repdel
                                 ? strcat_("rep-del: ",
                                           out.repetition_deletions,
                                           " tokens deleted")
                                 : std::string("rep-del: disabled"));
  out.report_lines.push_back(strcat_("warnings: ", out.warnings.size()));
  write_lines(config.out_file, out.restored);
  if (!config.report_file.empty()) {
    std::string report = detail::joined_lines(out.report_lines);
    for (const auto& w : out.warnings) {
      report += w;
      report += '\n';
    }
    write_file(config.report_file, report);
  }
  return out;
}

}  // namespace bitext
