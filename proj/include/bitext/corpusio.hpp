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

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <string>
#include <vector>

#include "bitext/common.hpp"
#include "bitext/types.hpp"
#include "bitext/unicode.hpp"

// Readers and writers for parallel corpora and their sidecar files:
// Moses-style two-file bitext, single-file TSV, Pharaoh alignments and
// attention matrices. Round trips are bit exact on the text fields; see
// docs/formats.md for the file layouts.

namespace bitext {

namespace detail {

// Splits file content into lines. A trailing '\n' terminates the last
// line rather than opening an empty one; a final CR before LF is
// stripped (Windows tolerance, documented in the format reference).
inline std::vector<std::string> split_lines(const std::string& content) {
  std::vector<std::string> lines;
  std::size_t start = 0;
  for (std::size_t i = 0; i < content.size(); ++i) {
    if (content[i] == '\n') {
      std::size_t end = i;
      if (end > start && content[end - 1] == '\r') --end;
      lines.push_back(content.substr(start, end - start));
      start = i + 1;
    }
  }
  if (start < content.size()) {
    std::size_t end = content.size();
    if (end > start && content[end - 1] == '\r') --end;
    lines.push_back(content.substr(start, end - start));
  }
  return lines;
}

inline void check_utf8_lines(const std::vector<std::string>& lines,
                             const std::string& path) {
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (auto bad = utf8_invalid_at(lines[i])) {
      fail("invalid UTF-8 in ", path, " at line ", i + 1, ", byte offset ",
           *bad);
    }
  }
}

}  // namespace detail

inline std::vector<std::string> read_lines(const std::string& path) {
  auto lines = detail::split_lines(read_file(path));
  detail::check_utf8_lines(lines, path);
  return lines;
}

inline void write_lines(const std::string& path,
                        const std::vector<std::string>& lines) {
  std::string content;
  for (const auto& line : lines) {
    content += line;
    content += '\n';
  }
  write_file(path, content);
}

// Reads a Moses-style pair of aligned text files, one segment per line.
// Line counts must match exactly; invalid UTF-8 is a hard error.
inline Corpus read_parallel(const std::string& src_path,
                            const std::string& tgt_path,
                            const std::string& src_lang = "",
                            const std::string& tgt_lang = "") {
  auto src_lines = read_lines(src_path);
  auto tgt_lines = read_lines(tgt_path);
  if (src_lines.size() != tgt_lines.size()) {
    fail("line-count mismatch: ", src_path, " has ", src_lines.size(),
         " lines, ", tgt_path, " has ", tgt_lines.size());
  }
  Corpus corpus;
  corpus.src_lang = src_lang;
  corpus.tgt_lang = tgt_lang;
  corpus.pairs.reserve(src_lines.size());
  for (std::size_t i = 0; i < src_lines.size(); ++i) {
    corpus.pairs.push_back({i, std::move(src_lines[i]), std::move(tgt_lines[i])});
  }
  return corpus;
}

// Reads a single TSV bitext: source TAB target, one pair per line.
inline Corpus read_tsv(const std::string& path,
                       const std::string& src_lang = "",
                       const std::string& tgt_lang = "") {
  auto lines = read_lines(path);
  Corpus corpus;
  corpus.src_lang = src_lang;
  corpus.tgt_lang = tgt_lang;
  corpus.pairs.reserve(lines.size());
  for (std::size_t i = 0; i < lines.size(); ++i) {
    auto fields = split_str(lines[i], '\t');
    if (fields.size() != 2) {
      fail("expected exactly one TAB in ", path, " at line ", i + 1,
           ", found ", fields.size() - 1);
    }
    corpus.pairs.push_back({i, std::move(fields[0]), std::move(fields[1])});
  }
  return corpus;
}

inline void write_parallel(const Corpus& corpus, const std::string& src_path,
                           const std::string& tgt_path) {
  std::vector<std::string> src_lines, tgt_lines;
  src_lines.reserve(corpus.size());
  tgt_lines.reserve(corpus.size());
  for (const auto& pair : corpus.pairs) {
    src_lines.push_back(pair.src);
    tgt_lines.push_back(pair.tgt);
  }
  write_lines(src_path, src_lines);
  write_lines(tgt_path, tgt_lines);
}

inline void write_tsv(const Corpus& corpus, const std::string& path) {
  std::vector<std::string> lines;
  lines.reserve(corpus.size());
  for (const auto& pair : corpus.pairs) {
    lines.push_back(pair.src + '\t' + pair.tgt);
  }
  write_lines(path, lines);
}

// ---------------------------------------------------------------------------
// Pharaoh alignments
// ---------------------------------------------------------------------------

// Parses whitespace-separated "i-j" tokens. Duplicates collapse; a
// malformed token is a hard error naming the token.
inline Alignment parse_pharaoh(const std::string& text) {
  Alignment alignment;
  for (const auto& token : split_ws(text)) {
    auto dash = token.find('-');
    if (dash == std::string::npos || dash == 0 || dash + 1 == token.size()) {
      fail("malformed alignment token: '", token, "'");
    }
    std::size_t s = 0, t = 0;
    for (std::size_t i = 0; i < dash; ++i) {
      if (!is_ascii_digit(static_cast<unsigned char>(token[i]))) {
        fail("malformed alignment token: '", token, "'");
      }
      s = s * 10 + static_cast<std::size_t>(token[i] - '0');
    }
    for (std::size_t i = dash + 1; i < token.size(); ++i) {
      if (!is_ascii_digit(static_cast<unsigned char>(token[i]))) {
        fail("malformed alignment token: '", token, "'");
      }
      t = t * 10 + static_cast<std::size_t>(token[i] - '0');
    }
    alignment.links.insert({s, t});
  }
  return alignment;
}

inline std::string format_pharaoh(const Alignment& alignment) {
  std::string out;
  for (const auto& [s, t] : alignment.links) {
    if (!out.empty()) out += ' ';
    out += std::to_string(s);
    out += '-';
    out += std::to_string(t);
  }
  return out;
}

// One alignment per line, line-parallel with the corpus it describes.
inline std::vector<Alignment> read_pharaoh_file(const std::string& path) {
  std::vector<Alignment> out;
  auto lines = read_lines(path);
  out.reserve(lines.size());
  for (const auto& line : lines) out.push_back(parse_pharaoh(line));
  return out;
}

inline void write_pharaoh_file(const std::string& path,
                               const std::vector<Alignment>& alignments) {
  std::vector<std::string> lines;
  lines.reserve(alignments.size());
  for (const auto& a : alignments) lines.push_back(format_pharaoh(a));
  write_lines(path, lines);
}

// ---------------------------------------------------------------------------
// Attention matrices
// ---------------------------------------------------------------------------

// Parses one attention record: rows separated by ';', weights by
// spaces. An empty record is an empty matrix; ragged rows are an error.
inline AttentionMatrix parse_attention(const std::string& text) {
  AttentionMatrix m;
  bool any_content = false;
  for (char c : text) {
    if (c != ' ' && c != '\t') { any_content = true; break; }
  }
  if (!any_content) return m;
  for (const auto& row_text : split_str(text, ';')) {
    std::vector<double> row;
    for (const auto& tok : split_ws(row_text)) {
      char* end = nullptr;
      double w = std::strtod(tok.c_str(), &end);
      if (end == tok.c_str() || *end != '\0') {
        fail("malformed attention weight: '", tok, "'");
      }
      row.push_back(w);
    }
    m.rows.push_back(std::move(row));
  }
  for (const auto& row : m.rows) {
    if (row.size() != m.rows[0].size()) {
      fail("ragged attention matrix: row width ", row.size(), " vs ",
           m.rows[0].size());
    }
  }
  return m;
}

inline std::vector<AttentionMatrix> read_attention_file(
    const std::string& path) {
  std::vector<AttentionMatrix> out;
  auto lines = read_lines(path);
  out.reserve(lines.size());
  for (const auto& line : lines) out.push_back(parse_attention(line));
  return out;
}

// Converts attention weights into hard alignment links: for every
// target row whose maximum weight reaches `threshold`, one link to the
// argmax source column (ties toward the lowest column). threshold 0
// is pure argmax.
inline Alignment alignment_from_attention(const AttentionMatrix& m,
                                          double threshold = 0.0) {
  if (threshold < 0.0 || threshold > 1.0) {
    fail("attention threshold must be in [0,1], got ", threshold);
  }
  Alignment alignment;
  for (std::size_t t = 0; t < m.rows.size(); ++t) {
    const auto& row = m.rows[t];
    if (row.empty()) continue;
    std::size_t best = 0;
    for (std::size_t s = 1; s < row.size(); ++s) {
      if (row[s] > row[best]) best = s;
    }
    if (row[best] >= threshold) alignment.links.insert({best, t});
  }
  return alignment;
}

}  // namespace bitext
