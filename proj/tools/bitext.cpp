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

// Command-line driver. Exit codes: 0 success, 1 input or usage error,
// 2 failure inside a pipeline stage.

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "bitext.hpp"
#include "bitext/pipeline.hpp"

namespace fs = std::filesystem;
using namespace bitext;

namespace {

std::string out_path(const std::string& dir, const char* name) {
  return (fs::path(dir) / name).string();
}

void ensure_dir(const std::string& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) fail("cannot create directory '", dir, "': ", ec.message());
}

// Pharaoh lines arrive hypothesis-first from decoders by default; the
// library wants source-first links.
Alignment parse_alignment_line(const std::string& line, bool src_first) {
  Alignment parsed = parse_pharaoh(line);
  if (src_first) return parsed;
  Alignment flipped;
  for (const auto& [h, s] : parsed.links) flipped.links.insert({s, h});
  return flipped;
}

std::vector<Alignment> load_alignments(const std::string& align_file,
                                       const std::string& attn_file,
                                       double threshold, bool src_first,
                                       std::size_t expected_lines) {
  std::vector<Alignment> alignments;
  if (!align_file.empty() && !attn_file.empty()) {
    fail("--align and --attn are mutually exclusive");
  }
  if (!align_file.empty()) {
    auto lines = read_lines(align_file);
    alignments.reserve(lines.size());
    for (const auto& line : lines) {
      alignments.push_back(parse_alignment_line(line, src_first));
    }
  } else if (!attn_file.empty()) {
    for (const auto& m : read_attention_file(attn_file)) {
      alignments.push_back(alignment_from_attention(m, threshold));
    }
  }
  if (!alignments.empty() && alignments.size() != expected_lines) {
    fail("alignment file has ", alignments.size(), " lines, expected ",
         expected_lines);
  }
  return alignments;
}

double read_score_file(const std::string& path) {
  const std::string text = read_file(path);
  char* end = nullptr;
  double value = std::strtod(text.c_str(), &end);
  if (end == text.c_str()) {
    fail("score file '", path, "' does not start with a number");
  }
  return value;
}

// ---------------------------------------------------------------------------
// clean
// ---------------------------------------------------------------------------

struct CleanArgs {
  std::string src, tgt, src_lang, tgt_lang, out_dir;
  std::size_t min_chars = 2;
  double sigma = 6.0;
  std::vector<std::string> disable;
};

void cmd_clean(const CleanArgs& args) {
  CleaningConfig config;
  config.src_lang = args.src_lang;
  config.tgt_lang = args.tgt_lang;
  config.min_chars = args.min_chars;
  config.sigma = args.sigma;
  for (const auto& name : args.disable) {
    auto stage = stage_from_name(name);
    if (!stage) fail("unknown cleaning stage '", name, "'");
    config.disabled.insert(*stage);
  }
  Corpus corpus =
      read_parallel(args.src, args.tgt, args.src_lang, args.tgt_lang);
  auto [cleaned, report] = run_cleaning(corpus, config);

  ensure_dir(args.out_dir);
  std::vector<std::string> src_lines, tgt_lines, drop_lines;
  for (const auto& p : cleaned.pairs) {
    src_lines.push_back(p.src);
    tgt_lines.push_back(p.tgt);
  }
  for (const auto& d : report.drops) {
    drop_lines.push_back(strcat_(d.id, "\t", stage_name(d.stage), "\t",
                                 reason_name(d.reason)));
  }
  write_lines(out_path(args.out_dir, "cleaned.src"), src_lines);
  write_lines(out_path(args.out_dir, "cleaned.tgt"), tgt_lines);
  write_lines(out_path(args.out_dir, "drops.tsv"), drop_lines);
  write_file(out_path(args.out_dir, "report.txt"), report.summary());
  std::fputs(report.summary().c_str(), stdout);
}

// ---------------------------------------------------------------------------
// dnt
// ---------------------------------------------------------------------------

struct DntMaskArgs {
  std::string src, tgt, out_src, out_tgt, map_file, rules_file;
  bool typed = false;
};

void cmd_dnt_mask(const DntMaskArgs& args) {
  const bool training = !args.tgt.empty();
  if (training && args.out_tgt.empty()) {
    fail("--out-tgt is required when --tgt is given");
  }
  DntRules rules = args.rules_file.empty()
                       ? DntRules::defaults()
                       : DntRules::parse(read_file(args.rules_file));
  if (args.typed) rules.typed_placeholders = true;

  auto src_lines = read_lines(args.src);
  std::vector<std::string> tgt_lines;
  if (training) {
    tgt_lines = read_lines(args.tgt);
    if (tgt_lines.size() != src_lines.size()) {
      fail("line count mismatch: ", args.src, " has ", src_lines.size(),
           " lines, ", args.tgt, " has ", tgt_lines.size());
    }
  }

  std::vector<std::string> masked_src, masked_tgt;
  std::vector<PlaceholderMap> maps;
  std::size_t placeholders = 0, skipped = 0;
  for (std::size_t i = 0; i < src_lines.size(); ++i) {
    SentencePair pair{i, src_lines[i], training ? tgt_lines[i] : ""};
    MaskOutcome outcome = mask_pair(pair, rules);
    placeholders += outcome.map.size();
    skipped += outcome.skipped.size();
    masked_src.push_back(outcome.masked.src);
    if (training) masked_tgt.push_back(outcome.masked.tgt);
    maps.push_back(std::move(outcome.map));
  }
  write_lines(args.out_src, masked_src);
  if (training) write_lines(args.out_tgt, masked_tgt);
  write_placeholder_file(args.map_file, maps);
  std::printf("masked %zu placeholders over %zu sentences (%zu spans skipped)\n",
              placeholders, src_lines.size(), skipped);
}

struct DntRestoreArgs {
  std::string in, map_file, out;
};

void cmd_dnt_restore(const DntRestoreArgs& args) {
  auto lines = read_lines(args.in);
  auto maps = read_placeholder_file(args.map_file);
  if (maps.size() != lines.size()) {
    fail("placeholder map has ", maps.size(), " lines, expected ",
         lines.size());
  }
  std::vector<std::string> restored;
  std::size_t warning_count = 0;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    RestoreResult result = restore(lines[i], maps[i]);
    for (const auto& w : result.warnings) {
      ++warning_count;
      std::fprintf(stderr, "line %zu: %s\n", i + 1, w.to_string().c_str());
    }
    restored.push_back(std::move(result.text));
  }
  write_lines(args.out, restored);
  std::printf("restored %zu sentences (%zu warnings)\n", restored.size(),
              warning_count);
}

// ---------------------------------------------------------------------------
// text processing
// ---------------------------------------------------------------------------

void cmd_tokenize(const std::string& in, const std::string& out) {
  std::vector<std::string> lines;
  for (const auto& line : read_lines(in)) {
    lines.push_back(join(tokenize(line), " "));
  }
  write_lines(out, lines);
}

void cmd_detokenize(const std::string& in, const std::string& out) {
  std::vector<std::string> lines;
  for (const auto& line : read_lines(in)) {
    lines.push_back(detokenize(split_ws(line)));
  }
  write_lines(out, lines);
}

struct TruecaseArgs {
  std::string in, out, model;
  bool learn = false;
};

void cmd_truecase(const TruecaseArgs& args) {
  auto lines = read_lines(args.in);
  std::vector<std::vector<std::string>> tokens;
  tokens.reserve(lines.size());
  for (const auto& line : lines) tokens.push_back(split_ws(line));

  TruecaseModel model;
  if (args.learn) {
    model = train_truecaser(tokens);
    write_file(args.model, model.serialize());
  } else {
    model = TruecaseModel::deserialize(read_file(args.model));
  }
  std::vector<std::string> out_lines;
  out_lines.reserve(tokens.size());
  for (auto& t : tokens) out_lines.push_back(join(truecase(std::move(t), model), " "));
  write_lines(args.out, out_lines);
}

void cmd_detruecase(const std::string& in, const std::string& out) {
  std::vector<std::string> lines;
  for (const auto& line : read_lines(in)) {
    lines.push_back(join(detruecase(split_ws(line)), " "));
  }
  write_lines(out, lines);
}

// ---------------------------------------------------------------------------
// bpe
// ---------------------------------------------------------------------------

void cmd_bpe_learn(const std::string& in, std::size_t merges,
                   const std::string& model_path) {
  BpeModel model = learn_bpe(read_lines(in), merges);
  write_file(model_path, model.serialize());
  std::printf("learned %zu merges, %zu vocabulary units\n",
              model.merges.size(), model.vocab.size());
}

struct BpeApplyArgs {
  std::string in, model, out;
  std::string mode = "baseline";
  std::size_t k = 1;
  std::uint64_t min_frequency = 1;
};

void cmd_bpe_apply(const BpeApplyArgs& args) {
  BpeModel model = BpeModel::deserialize(read_file(args.model));
  SubwordMode mode = subword_mode_from(args.mode, args.k);
  BpeApplier applier(model, mode, args.min_frequency);
  std::vector<std::string> lines;
  for (const auto& line : read_lines(args.in)) {
    lines.push_back(join(applier.apply(split_ws(line)), " "));
  }
  write_lines(args.out, lines);
}

void cmd_bpe_decode(const std::string& in, const std::string& out,
                    const std::string& marker) {
  std::vector<std::string> lines;
  std::size_t dangling = 0;
  for (const auto& line : read_lines(in)) {
    BpeDecodeResult result = decode_bpe_full(split_ws(line), marker);
    dangling += result.dangling_markers;
    lines.push_back(join(result.tokens, " "));
  }
  write_lines(out, lines);
  if (dangling > 0) {
    std::fprintf(stderr, "%zu dangling markers dropped\n", dangling);
  }
}

// ---------------------------------------------------------------------------
// split
// ---------------------------------------------------------------------------

struct SplitArgs {
  std::string src, tgt, out_dir;
  std::size_t dev = 0, test = 0;
  double overlap = 0.05;
  std::uint64_t seed = 0;
};

void cmd_split(const SplitArgs& args) {
  Corpus corpus = read_parallel(args.src, args.tgt);
  SplitConfig config;
  config.dev_n = args.dev;
  config.test_n = args.test;
  config.overlap_frac = args.overlap;
  config.seed = args.seed;
  SplitResult result = split_corpus(corpus, config);

  ensure_dir(args.out_dir);
  auto write_side = [&](const Corpus& c, const char* src_name,
                        const char* tgt_name) {
    std::vector<std::string> src_lines, tgt_lines;
    for (const auto& p : c.pairs) {
      src_lines.push_back(p.src);
      tgt_lines.push_back(p.tgt);
    }
    write_lines(out_path(args.out_dir, src_name), src_lines);
    write_lines(out_path(args.out_dir, tgt_name), tgt_lines);
  };
  write_side(result.train, "train.src", "train.tgt");
  write_side(result.dev, "dev.src", "dev.tgt");
  write_side(result.test, "test.src", "test.tgt");
  write_file(out_path(args.out_dir, "split_report.txt"),
             result.report.summary());
  for (const auto& w : result.warnings) {
    std::fprintf(stderr, "%s\n", w.c_str());
  }
  std::fputs(result.report.summary().c_str(), stdout);
}

// ---------------------------------------------------------------------------
// repdel
// ---------------------------------------------------------------------------

struct RepdelArgs {
  std::string src, hyp, align, attn, out, log;
  double threshold = 0.0;
  std::size_t max_ngram = 4;
  std::string align_order = "hyp-src";
};

void cmd_repdel(const RepdelArgs& args) {
  if (args.align.empty() && args.attn.empty()) {
    fail("repdel needs --align or --attn");
  }
  if (args.align_order != "hyp-src" && args.align_order != "src-hyp") {
    fail("--align-order must be 'hyp-src' or 'src-hyp', got '",
         args.align_order, "'");
  }
  auto src_lines = read_lines(args.src);
  auto hyp_lines = read_lines(args.hyp);
  if (src_lines.size() != hyp_lines.size()) {
    fail("line count mismatch: ", args.src, " has ", src_lines.size(),
         " lines, ", args.hyp, " has ", hyp_lines.size());
  }
  auto alignments =
      load_alignments(args.align, args.attn, args.threshold,
                      args.align_order == "src-hyp", hyp_lines.size());

  RepDelOptions options;
  options.max_ngram = args.max_ngram;
  std::vector<std::string> out_lines, log_lines;
  std::size_t deleted = 0;
  for (std::size_t i = 0; i < hyp_lines.size(); ++i) {
    RepDelResult result = rep_del(split_ws(src_lines[i]),
                                  split_ws(hyp_lines[i]), alignments[i],
                                  options);
    deleted += result.deletions.size();
    out_lines.push_back(join(result.tokens, " "));
    for (const auto& b : result.blocks) {
      log_lines.push_back(strcat_(i, "\t", b.pass, "\t", b.block.start, "\t",
                                  b.block.n, "\t", b.block.count, "\t",
                                  b.deleted_copies));
    }
  }
  write_lines(args.out, out_lines);
  if (!args.log.empty()) write_lines(args.log, log_lines);
  std::printf("deleted %zu repeated tokens across %zu sentences\n", deleted,
              hyp_lines.size());
}

// ---------------------------------------------------------------------------
// measure
// ---------------------------------------------------------------------------

struct MeasureArgs {
  std::string src, hyp, align, out;
  std::string bleu_file, one_minus_ter_file;
  double ratio_floor = 0.6;
  double expected_ratio = 1.0;
  std::size_t max_ngram = 4;
  std::string align_order = "hyp-src";
};

void cmd_measure(const MeasureArgs& args) {
  if (args.align_order != "hyp-src" && args.align_order != "src-hyp") {
    fail("--align-order must be 'hyp-src' or 'src-hyp', got '",
         args.align_order, "'");
  }
  auto src_lines = read_lines(args.src);
  auto hyp_lines = read_lines(args.hyp);
  if (src_lines.size() != hyp_lines.size()) {
    fail("line count mismatch: ", args.src, " has ", src_lines.size(),
         " lines, ", args.hyp, " has ", hyp_lines.size());
  }
  std::vector<std::vector<std::string>> src_tokens, hyp_tokens;
  for (const auto& l : src_lines) src_tokens.push_back(split_ws(l));
  for (const auto& l : hyp_lines) hyp_tokens.push_back(split_ws(l));

  std::vector<Alignment> alignments =
      load_alignments(args.align, "", 0.0, args.align_order == "src-hyp",
                      hyp_lines.size());

  MetricsOptions options;
  options.ratio_floor = args.ratio_floor;
  options.max_ngram = args.max_ngram;
  options.expected_ratio = args.expected_ratio;
  MetricsReport report = measure_corpus(
      src_tokens, hyp_tokens, alignments.empty() ? nullptr : &alignments,
      options);

  ExternalScores scores;
  if (!args.bleu_file.empty()) scores.bleu = read_score_file(args.bleu_file);
  if (!args.one_minus_ter_file.empty()) {
    scores.one_minus_ter = read_score_file(args.one_minus_ter_file);
  }
  for (const auto& w : report.warnings) {
    std::fprintf(stderr, "%s\n", w.c_str());
  }
  if (!args.out.empty()) {
    std::vector<std::string> rows;
    rows.reserve(report.sentences.size());
    for (std::size_t i = 0; i < report.sentences.size(); ++i) {
      const auto& s = report.sentences[i];
      rows.push_back(strcat_(i, "\t", s.over, "\t", s.under ? 1 : 0, "\t",
                             s.rep, "\t", s.drop));
    }
    write_lines(args.out, rows);
  }
  std::printf("%s\n", metrics_table(report, scores).c_str());
}

// ---------------------------------------------------------------------------
// tm
// ---------------------------------------------------------------------------

void cmd_tm_build(const std::string& src, const std::string& tgt,
                  const std::string& index_path) {
  TmIndex index = build_index(read_parallel(src, tgt));
  write_file(index_path, index.serialize());
  std::printf("indexed %zu pairs\n", index.size());
}

struct TmQueryArgs {
  std::string index, queries, out;
  std::size_t top_k = 5;
  ScheduleConfig schedule;
};

void cmd_tm_query(const TmQueryArgs& args) {
  TmIndex index = deserialize_tm_index(read_file(args.index));
  auto queries = read_lines(args.queries);
  AdaptOptions options;
  options.top_k = args.top_k;
  options.schedule = args.schedule;
  auto directives = adapt_pipeline(index, queries, options);
  write_lines(args.out, format_directives(directives));
  std::size_t matched = 0;
  for (const auto& d : directives) matched += d.has_match ? 1 : 0;
  std::printf("%zu of %zu queries scheduled for adaptation\n", matched,
              directives.size());
}

// ---------------------------------------------------------------------------
// pipeline
// ---------------------------------------------------------------------------

void cmd_prepare(const std::string& config_path) {
  PrepareConfig config = parse_prepare_config(read_file(config_path));
  PrepareOutcome outcome = run_prepare(config);
  std::fputs(outcome.report.text().c_str(), stdout);
}

void cmd_postprocess(const std::string& config_path) {
  PostprocessConfig config = parse_postprocess_config(read_file(config_path));
  PostprocessOutcome outcome = run_postprocess(config);
  for (const auto& w : outcome.warnings) {
    std::fprintf(stderr, "%s\n", w.c_str());
  }
  for (const auto& line : outcome.report_lines) {
    std::printf("%s\n", line.c_str());
  }
}

// ---------------------------------------------------------------------------
// fixtures
// ---------------------------------------------------------------------------

struct FixturesArgs {
  std::uint64_t seed = 42;
  std::size_t clean = 100;
  std::size_t per_class = 10;
  std::string out_dir;
};

void cmd_fixtures_generate(const FixturesArgs& args) {
  NoiseFixture fixture =
      generate_noise_fixture(args.seed, {args.clean, args.per_class});
  ensure_dir(args.out_dir);
  std::vector<std::string> src_lines, tgt_lines;
  for (const auto& p : fixture.corpus.pairs) {
    src_lines.push_back(p.src);
    tgt_lines.push_back(p.tgt);
  }
  write_lines(out_path(args.out_dir, "noise.src"), src_lines);
  write_lines(out_path(args.out_dir, "noise.tgt"), tgt_lines);
  write_noise_labels(out_path(args.out_dir, "labels.tsv"), fixture.labels);
  std::printf("wrote %zu pairs (%zu labeled injections)\n",
              fixture.corpus.pairs.size(), fixture.labels.size());
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"bitext: parallel-corpus engineering toolkit"};
  app.require_subcommand(1);

  CleanArgs clean_args;
  auto* clean = app.add_subcommand("clean", "Run the cleaning cascade");
  clean->add_option("--src", clean_args.src, "Source-side file")->required();
  clean->add_option("--tgt", clean_args.tgt, "Target-side file")->required();
  clean->add_option("--src-lang", clean_args.src_lang, "Source language code");
  clean->add_option("--tgt-lang", clean_args.tgt_lang, "Target language code");
  clean->add_option("--out-dir", clean_args.out_dir, "Output directory")
      ->required();
  clean->add_option("--min-chars", clean_args.min_chars,
                    "Minimum codepoints per side");
  clean->add_option("--sigma", clean_args.sigma,
                    "Length-ratio outlier cut in standard deviations");
  clean->add_option("--disable", clean_args.disable,
                    "Stage to skip (repeatable)");
  clean->callback([&]() { cmd_clean(clean_args); });

  auto* dnt = app.add_subcommand("dnt", "Do-not-translate entity handling");
  dnt->require_subcommand(1);
  DntMaskArgs dnt_mask_args;
  auto* dnt_mask = dnt->add_subcommand("mask", "Mask entities with placeholders");
  dnt_mask->add_option("--src", dnt_mask_args.src, "Source file")->required();
  dnt_mask->add_option("--tgt", dnt_mask_args.tgt,
                       "Target file (enables training mode)");
  dnt_mask->add_option("--out-src", dnt_mask_args.out_src, "Masked source")
      ->required();
  dnt_mask->add_option("--out-tgt", dnt_mask_args.out_tgt, "Masked target");
  dnt_mask->add_option("--map", dnt_mask_args.map_file, "Placeholder sidecar")
      ->required();
  dnt_mask->add_option("--rules", dnt_mask_args.rules_file, "Rules file");
  dnt_mask->add_flag("--typed", dnt_mask_args.typed,
                     "Per-category placeholder labels");
  dnt_mask->callback([&]() { cmd_dnt_mask(dnt_mask_args); });
  DntRestoreArgs dnt_restore_args;
  auto* dnt_restore =
      dnt->add_subcommand("restore", "Replace placeholders with surfaces");
  dnt_restore->add_option("--in", dnt_restore_args.in, "Translations file")
      ->required();
  dnt_restore->add_option("--map", dnt_restore_args.map_file,
                          "Placeholder sidecar")
      ->required();
  dnt_restore->add_option("--out", dnt_restore_args.out, "Restored output")
      ->required();
  dnt_restore->callback([&]() { cmd_dnt_restore(dnt_restore_args); });

  std::string tok_in, tok_out;
  auto* tok = app.add_subcommand("tokenize", "Split text into tokens");
  tok->add_option("--in", tok_in, "Input file")->required();
  tok->add_option("--out", tok_out, "Output file")->required();
  tok->callback([&]() { cmd_tokenize(tok_in, tok_out); });

  std::string detok_in, detok_out;
  auto* detok = app.add_subcommand("detokenize", "Join tokens into text");
  detok->add_option("--in", detok_in, "Input file")->required();
  detok->add_option("--out", detok_out, "Output file")->required();
  detok->callback([&]() { cmd_detokenize(detok_in, detok_out); });

  TruecaseArgs truecase_args;
  auto* truecase_cmd =
      app.add_subcommand("truecase", "Normalize sentence-initial casing");
  truecase_cmd->add_option("--in", truecase_args.in, "Tokenized input")
      ->required();
  truecase_cmd->add_option("--out", truecase_args.out, "Output file")
      ->required();
  truecase_cmd->add_option("--model", truecase_args.model, "Model file")
      ->required();
  truecase_cmd->add_flag("--learn", truecase_args.learn,
                         "Train the model on the input first");
  truecase_cmd->callback([&]() { cmd_truecase(truecase_args); });

  std::string detruecase_in, detruecase_out;
  auto* detruecase_cmd =
      app.add_subcommand("detruecase", "Recapitalize sentence starts");
  detruecase_cmd->add_option("--in", detruecase_in, "Tokenized input")
      ->required();
  detruecase_cmd->add_option("--out", detruecase_out, "Output file")
      ->required();
  detruecase_cmd->callback(
      [&]() { cmd_detruecase(detruecase_in, detruecase_out); });

  auto* bpe = app.add_subcommand("bpe", "Subword segmentation");
  bpe->require_subcommand(1);
  std::string bpe_learn_in, bpe_learn_model;
  std::size_t bpe_learn_merges = 0;
  auto* bpe_learn_cmd = bpe->add_subcommand("learn", "Learn a merge table");
  bpe_learn_cmd->add_option("--in", bpe_learn_in, "Tokenized input")
      ->required();
  bpe_learn_cmd->add_option("--merges", bpe_learn_merges, "Merge count")
      ->required();
  bpe_learn_cmd->add_option("--model", bpe_learn_model, "Model output file")
      ->required();
  bpe_learn_cmd->callback(
      [&]() { cmd_bpe_learn(bpe_learn_in, bpe_learn_merges, bpe_learn_model); });
  BpeApplyArgs bpe_apply_args;
  auto* bpe_apply_cmd = bpe->add_subcommand("apply", "Segment tokens");
  bpe_apply_cmd->add_option("--in", bpe_apply_args.in, "Tokenized input")
      ->required();
  bpe_apply_cmd->add_option("--model", bpe_apply_args.model, "Model file")
      ->required();
  bpe_apply_cmd->add_option("--out", bpe_apply_args.out, "Output file")
      ->required();
  bpe_apply_cmd->add_option("--mode", bpe_apply_args.mode,
                            "baseline|nomoresplit|protect");
  bpe_apply_cmd->add_option("--k", bpe_apply_args.k,
                            "protect mode frequency threshold");
  bpe_apply_cmd->add_option("--min-frequency", bpe_apply_args.min_frequency,
                            "Merge application frequency cutoff");
  bpe_apply_cmd->callback([&]() { cmd_bpe_apply(bpe_apply_args); });
  std::string bpe_decode_in, bpe_decode_out, bpe_decode_marker = "@@";
  auto* bpe_decode_cmd = bpe->add_subcommand("decode", "Join subword units");
  bpe_decode_cmd->add_option("--in", bpe_decode_in, "Segmented input")
      ->required();
  bpe_decode_cmd->add_option("--out", bpe_decode_out, "Output file")
      ->required();
  bpe_decode_cmd->add_option("--marker", bpe_decode_marker,
                             "Continuation marker");
  bpe_decode_cmd->callback(
      [&]() { cmd_bpe_decode(bpe_decode_in, bpe_decode_out, bpe_decode_marker); });

  SplitArgs split_args;
  auto* split_cmd =
      app.add_subcommand("split", "Stratified train/dev/test split");
  split_cmd->add_option("--src", split_args.src, "Source-side file")
      ->required();
  split_cmd->add_option("--tgt", split_args.tgt, "Target-side file")
      ->required();
  split_cmd->add_option("--dev", split_args.dev, "Dev set size")->required();
  split_cmd->add_option("--test", split_args.test, "Test set size")
      ->required();
  split_cmd->add_option("--overlap", split_args.overlap,
                        "Train overlap fraction of dev");
  split_cmd->add_option("--seed", split_args.seed, "Shuffle seed");
  split_cmd->add_option("--out-dir", split_args.out_dir, "Output directory")
      ->required();
  split_cmd->callback([&]() { cmd_split(split_args); });

  RepdelArgs repdel_args;
  auto* repdel_cmd =
      app.add_subcommand("repdel", "Delete unlicensed repetitions");
  repdel_cmd->add_option("--src", repdel_args.src, "Source tokens file")
      ->required();
  repdel_cmd->add_option("--hyp", repdel_args.hyp, "Hypothesis tokens file")
      ->required();
  repdel_cmd->add_option("--align", repdel_args.align, "Pharaoh alignments");
  repdel_cmd->add_option("--attn", repdel_args.attn, "Attention matrices");
  repdel_cmd->add_option("--threshold", repdel_args.threshold,
                         "Attention link threshold");
  repdel_cmd->add_option("--out", repdel_args.out, "Output file")->required();
  repdel_cmd->add_option("--log", repdel_args.log, "Block decision log");
  repdel_cmd->add_option("--max-ngram", repdel_args.max_ngram,
                         "Longest repeated unit");
  repdel_cmd->add_option("--align-order", repdel_args.align_order,
                         "Pharaoh link order: hyp-src|src-hyp");
  repdel_cmd->callback([&]() { cmd_repdel(repdel_args); });

  MeasureArgs measure_args;
  auto* measure_cmd =
      app.add_subcommand("measure", "Over/under-generation metrics");
  measure_cmd->add_option("--src", measure_args.src, "Source tokens file")
      ->required();
  measure_cmd->add_option("--hyp", measure_args.hyp, "Hypothesis tokens file")
      ->required();
  measure_cmd->add_option("--align", measure_args.align, "Pharaoh alignments");
  measure_cmd->add_option("--ratio-floor", measure_args.ratio_floor,
                          "UNDER length-ratio floor");
  measure_cmd->add_option("--expected-ratio", measure_args.expected_ratio,
                          "Expected hypothesis/source length ratio");
  measure_cmd->add_option("--max-ngram", measure_args.max_ngram,
                          "Longest repeated unit for OVER");
  measure_cmd->add_option("--align-order", measure_args.align_order,
                          "Pharaoh link order: hyp-src|src-hyp");
  measure_cmd->add_option("--bleu", measure_args.bleu_file,
                          "File holding an external BLEU score");
  measure_cmd->add_option("--one-minus-ter", measure_args.one_minus_ter_file,
                          "File holding an external 1-TER score");
  measure_cmd->add_option("--out", measure_args.out,
                          "Per-sentence metrics TSV");
  measure_cmd->callback([&]() { cmd_measure(measure_args); });

  auto* tm = app.add_subcommand("tm", "Translation-memory adaptation");
  tm->require_subcommand(1);
  std::string tm_src, tm_tgt, tm_index_path;
  auto* tm_build_cmd = tm->add_subcommand("build", "Index a translation memory");
  tm_build_cmd->add_option("--src", tm_src, "Source-side file")->required();
  tm_build_cmd->add_option("--tgt", tm_tgt, "Target-side file")->required();
  tm_build_cmd->add_option("--index", tm_index_path, "Index output file")
      ->required();
  tm_build_cmd->callback([&]() { cmd_tm_build(tm_src, tm_tgt, tm_index_path); });
  TmQueryArgs tm_query_args;
  auto* tm_query_cmd =
      tm->add_subcommand("query", "Schedule adaptation per test sentence");
  tm_query_cmd->add_option("--index", tm_query_args.index, "Index file")
      ->required();
  tm_query_cmd->add_option("--queries", tm_query_args.queries,
                           "Test source sentences")
      ->required();
  tm_query_cmd->add_option("--out", tm_query_args.out, "Directive output file")
      ->required();
  tm_query_cmd->add_option("--top-k", tm_query_args.top_k,
                           "Retrieval candidates");
  tm_query_cmd->add_option("--s-min", tm_query_args.schedule.s_min,
                           "Similarity activation threshold");
  tm_query_cmd->add_option("--e-min", tm_query_args.schedule.e_min,
                           "Epochs at the threshold");
  tm_query_cmd->add_option("--e-max", tm_query_args.schedule.e_max,
                           "Epochs at similarity 1");
  tm_query_cmd->add_option("--lr-min", tm_query_args.schedule.lr_min,
                           "Learning rate at the threshold");
  tm_query_cmd->add_option("--lr-max", tm_query_args.schedule.lr_max,
                           "Learning rate at similarity 1");
  tm_query_cmd->callback([&]() { cmd_tm_query(tm_query_args); });

  std::string prepare_config, postprocess_config;
  auto* prepare_cmd =
      app.add_subcommand("prepare", "Run the training-side pipeline");
  prepare_cmd->add_option("--config", prepare_config, "JSON config file")
      ->required();
  prepare_cmd->callback([&]() { cmd_prepare(prepare_config); });
  auto* postprocess_cmd =
      app.add_subcommand("postprocess", "Run the inference-side pipeline");
  postprocess_cmd
      ->add_option("--config", postprocess_config, "JSON config file")
      ->required();
  postprocess_cmd->callback([&]() { cmd_postprocess(postprocess_config); });

  auto* fixtures = app.add_subcommand("fixtures", "Deterministic test corpora");
  fixtures->require_subcommand(1);
  FixturesArgs fixtures_args;
  auto* fixtures_gen =
      fixtures->add_subcommand("generate", "Labeled noise fixture");
  fixtures_gen->add_option("--seed", fixtures_args.seed, "Generator seed");
  fixtures_gen->add_option("--clean", fixtures_args.clean, "Clean pair count");
  fixtures_gen->add_option("--per-class", fixtures_args.per_class,
                           "Injections per noise class");
  fixtures_gen->add_option("--out-dir", fixtures_args.out_dir,
                           "Output directory")
      ->required();
  fixtures_gen->callback([&]() { cmd_fixtures_generate(fixtures_args); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  } catch (const StageError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "unexpected error: %s\n", e.what());
    return 2;
  }
  return 0;
}
