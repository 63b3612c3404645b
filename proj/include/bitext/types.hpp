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

#include <cstdint>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace bitext {

/// One aligned source/target segment. `id` is the 0-based line number in
/// the corpus the pair was read from; segments never contain newlines.
struct SentencePair {
  std::size_t id = 0;
  std::string src;
  std::string tgt;

  friend bool operator==(const SentencePair& a, const SentencePair& b) {
    return a.id == b.id && a.src == b.src && a.tgt == b.tgt;
  }
};

/// Ordered sequence of sentence pairs with language metadata. Order is
/// stable across read/write round trips.
struct Corpus {
  std::vector<SentencePair> pairs;
  std::string src_lang;
  std::string tgt_lang;

  std::size_t size() const { return pairs.size(); }
  bool empty() const { return pairs.empty(); }
};

/// A set of (source index, target index) word-alignment links, 0-based.
struct Alignment {
  std::set<std::pair<std::size_t, std::size_t>> links;

  bool contains(std::size_t s, std::size_t t) const {
    return links.count({s, t}) != 0;
  }

  /// Source indices aligned to target index t.
  std::vector<std::size_t> sources_of(std::size_t t) const {
    std::vector<std::size_t> out;
    for (const auto& [s, tt] : links) {
      if (tt == t) out.push_back(s);
    }
    return out;
  }

  friend bool operator==(const Alignment& a, const Alignment& b) {
    return a.links == b.links;
  }
};

/// Attention weights for one sentence: rows are target positions,
/// columns source positions, weights in [0,1].
struct AttentionMatrix {
  std::vector<std::vector<double>> rows;

  bool empty() const { return rows.empty(); }
  std::size_t target_len() const { return rows.size(); }
  std::size_t source_len() const { return rows.empty() ? 0 : rows[0].size(); }
};

}  // namespace bitext
