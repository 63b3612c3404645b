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

// Source-conditioned repetition deletion for MT output. Adjacent
// repeated n-gram blocks in a tokenized hypothesis are detected, and
// later copies are deleted only when the word alignment ties them to
// the same source tokens as the first copy. The posture is
// precision-first: any doubt keeps the token.

#pragma once

#include <algorithm>
#include <cstddef>
#include <iterator>
#include <string>
#include <vector>

#include "bitext/common.hpp"
#include "bitext/types.hpp"

namespace bitext {

/// One run of adjacent repeated n-grams: `count` copies of the n-token
/// sequence starting at `start`. The run spans [start, start+n*count).
struct RepeatBlock {
  std::size_t start = 0;
  std::size_t n = 0;
  std::size_t count = 0;

  friend bool operator==(const RepeatBlock& a, const RepeatBlock& b) {
    return a.start == b.start && a.n == b.n && a.count == b.count;
  }
};

/// Detects adjacent repeated n-gram blocks, longest n first (max_n down
/// to 1). Each maximal run is reported once with its repeat count;
/// blocks never overlap, and a shorter repeat inside a claimed block is
/// not reported again. Results are sorted by start position.
inline std::vector<RepeatBlock> find_repeats(
    const std::vector<std::string>& tokens, std::size_t max_n = 4) {
  if (max_n == 0) fail("find_repeats: max_n must be >= 1");
  std::vector<RepeatBlock> blocks;
  std::vector<bool> covered(tokens.size(), false);
  auto free_range = [&](std::size_t lo, std::size_t hi) {
    for (std::size_t i = lo; i < hi; ++i) {
      if (covered[i]) return false;
    }
    return true;
  };
  auto same_span = [&](std::size_t a, std::size_t b, std::size_t n) {
    for (std::size_t j = 0; j < n; ++j) {
      if (tokens[a + j] != tokens[b + j]) return false;
    }
    return true;
  };
  for (std::size_t n = std::min(max_n, tokens.size() / 2); n >= 1; --n) {
    std::size_t i = 0;
    while (i + 2 * n <= tokens.size()) {
      if (!free_range(i, i + 2 * n) || !same_span(i, i + n, n)) {
        ++i;
        continue;
      }
      std::size_t count = 2;
      while (i + (count + 1) * n <= tokens.size() &&
             free_range(i + count * n, i + (count + 1) * n) &&
             same_span(i, i + count * n, n)) {
        ++count;
      }
      blocks.push_back({i, n, count});
      for (std::size_t k = i; k < i + count * n; ++k) covered[k] = true;
      i += count * n;
    }
  }
  std::sort(blocks.begin(), blocks.end(),
            [](const RepeatBlock& a, const RepeatBlock& b) {
              return a.start < b.start;
            });
  return blocks;
}

/// One deleted hypothesis token, in positions of the original input
/// hypothesis. `first_index` is the corresponding token in the block's
/// first copy that justified the deletion, so the precision guarantee
/// (identical surface, shared source index or both unaligned) is
/// checkable from the record alone.
struct RepDeletion {
  std::size_t hyp_index = 0;
  std::size_t first_index = 0;
  std::string surface;
};

/// Per-block audit entry. Coordinates are within the working token
/// sequence of the deletion pass the block was found in (`pass` 0 sees
/// the raw hypothesis). deleted_copies counts how many of the count-1
/// later copies were removed; 0 means the block was untouched.
struct BlockDecision {
  RepeatBlock block;
  std::size_t deleted_copies = 0;
  std::size_t pass = 0;
};

struct RepDelOptions {
  /// Largest repeated block size considered. 1 restricts deletion to
  /// single repeated words (strict mode).
  std::size_t max_ngram = 4;
};

struct RepDelResult {
  std::vector<std::string> tokens;
  /// Deleted positions in the input hypothesis, ascending.
  std::vector<RepDeletion> deletions;
  /// Every block any pass detected, touched or not.
  std::vector<BlockDecision> blocks;
  /// Input links with deleted positions dropped and the surviving
  /// hypothesis indices shifted down to match `tokens`.
  Alignment filtered;
};

namespace detail {

struct RepDelPass {
  std::vector<bool> deleted;
  std::vector<BlockDecision> blocks;
};

// One deletion pass. `aligned[t]` holds the sorted source indices of
// hypothesis position t.
inline RepDelPass rep_del_pass(const std::vector<std::string>& src_tokens,
                               const std::vector<std::string>& hyp_tokens,
                               const std::vector<std::vector<std::size_t>>& aligned,
                               std::size_t max_ngram, std::size_t pass,
                               bool no_alignment) {
  RepDelPass out;
  out.deleted.assign(hyp_tokens.size(), false);
  for (const auto& block : find_repeats(hyp_tokens, max_ngram)) {
    BlockDecision decision{block, 0, pass};
    for (std::size_t k = 1; !no_alignment && k < block.count; ++k) {
      bool remove = true;
      for (std::size_t j = 0; j < block.n && remove; ++j) {
        const std::size_t p1 = block.start + j;
        const std::size_t pk = block.start + k * block.n + j;
        const auto& a1 = aligned[p1];
        const auto& ak = aligned[pk];
        if (a1.empty() && ak.empty()) continue;
        bool shared = false;
        for (std::size_t s : ak) {
          if (std::binary_search(a1.begin(), a1.end(), s)) {
            shared = true;
            break;
          }
        }
        if (!shared) {
          remove = false;
          break;
        }
        // Source-licensed repeat: the aligned region contains the same
        // surface twice in a row, so the hypothesis repeat is earned.
        std::vector<std::size_t> merged;
        std::set_union(a1.begin(), a1.end(), ak.begin(), ak.end(),
                       std::back_inserter(merged));
        for (std::size_t x = 0; x + 1 < merged.size(); ++x) {
          if (merged[x + 1] == merged[x] + 1 &&
              src_tokens[merged[x]] == src_tokens[merged[x + 1]]) {
            remove = false;
            break;
          }
        }
      }
      if (remove) {
        for (std::size_t j = 0; j < block.n; ++j) {
          out.deleted[block.start + k * block.n + j] = true;
        }
        ++decision.deleted_copies;
      }
    }
    out.blocks.push_back(decision);
  }
  return out;
}

}  // namespace detail

/// Deletes repeated copies in a tokenized hypothesis when the alignment
/// ties them to the same source tokens. Links are (source index,
/// hypothesis index), the orientation alignment_from_attention emits.
///
/// A later copy is deleted only if every one of its tokens shares an
/// aligned source index with the corresponding token of the first copy
/// (tokens unaligned on both sides also match), and the aligned source
/// region does not itself repeat the surface adjacently. Copies are
/// judged independently, so a block can lose some copies and keep
/// others. Passes repeat until no deletion applies, because removing a
/// copy can make previously separated tokens adjacent; the result is a
/// fixed point, so running rep_del on its own output (with the filtered
/// alignment) changes nothing. An empty alignment deletes nothing.
inline RepDelResult rep_del(const std::vector<std::string>& src_tokens,
                            const std::vector<std::string>& hyp_tokens,
                            const Alignment& alignment,
                            const RepDelOptions& options = {}) {
  if (options.max_ngram == 0) fail("rep_del: max_ngram must be >= 1");
  for (const auto& [s, t] : alignment.links) {
    if (s >= src_tokens.size() || t >= hyp_tokens.size()) {
      fail("alignment link ", s, "-", t, " out of range for ",
           src_tokens.size(), " source and ", hyp_tokens.size(),
           " hypothesis tokens");
    }
  }

  RepDelResult result;
  result.tokens = hyp_tokens;
  // Set iteration is (s, t) ascending, so each per-position list comes
  // out sorted.
  std::vector<std::vector<std::size_t>> aligned(hyp_tokens.size());
  for (const auto& [s, t] : alignment.links) aligned[t].push_back(s);
  std::vector<std::size_t> origin(hyp_tokens.size());
  for (std::size_t t = 0; t < origin.size(); ++t) origin[t] = t;
  const bool no_alignment = alignment.links.empty();

  for (std::size_t pass = 0;; ++pass) {
    auto step = detail::rep_del_pass(src_tokens, result.tokens, aligned,
                                     options.max_ngram, pass, no_alignment);
    result.blocks.insert(result.blocks.end(), step.blocks.begin(),
                         step.blocks.end());
    bool any = false;
    for (bool d : step.deleted) {
      if (d) any = true;
    }
    if (!any) break;
    std::vector<std::string> kept_tokens;
    std::vector<std::vector<std::size_t>> kept_aligned;
    std::vector<std::size_t> kept_origin;
    for (std::size_t t = 0; t < result.tokens.size(); ++t) {
      if (!step.deleted[t]) {
        kept_tokens.push_back(std::move(result.tokens[t]));
        kept_aligned.push_back(std::move(aligned[t]));
        kept_origin.push_back(origin[t]);
      }
    }
    // Record deletions in original-input coordinates. The justifying
    // first-copy token is the corresponding position of the block's
    // first copy within this pass.
    for (const auto& decision : step.blocks) {
      const auto& b = decision.block;
      for (std::size_t k = 1; k < b.count; ++k) {
        if (!step.deleted[b.start + k * b.n]) continue;
        for (std::size_t j = 0; j < b.n; ++j) {
          const std::size_t pk = b.start + k * b.n + j;
          result.deletions.push_back(
              {origin[pk], origin[b.start + j], hyp_tokens[origin[pk]]});
        }
      }
    }
    result.tokens = std::move(kept_tokens);
    aligned = std::move(kept_aligned);
    origin = std::move(kept_origin);
  }

  std::sort(result.deletions.begin(), result.deletions.end(),
            [](const RepDeletion& a, const RepDeletion& b) {
              return a.hyp_index < b.hyp_index;
            });
  std::vector<std::size_t> new_index(hyp_tokens.size(), hyp_tokens.size());
  for (std::size_t t = 0; t < origin.size(); ++t) new_index[origin[t]] = t;
  for (const auto& [s, t] : alignment.links) {
    if (new_index[t] < hyp_tokens.size()) {
      result.filtered.links.insert({s, new_index[t]});
    }
  }
  return result;
}

}  // namespace bitext
