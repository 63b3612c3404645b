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

// Stratified train/dev/test splitting with controlled dev-train overlap.
//
// Each pair falls into a stratum keyed by (has a placeholder token) x
// (source length bucket). Dev and test quotas per stratum follow the
// stratum's corpus share by largest-remainder rounding, so both sets
// mirror the corpus distribution of placeholder sentences and lengths.
// The dev set keeps its requested total size: ceil(overlap_frac * dev_n)
// of its pairs are drawn from the training set and stay in training,
// the rest are fresh. Test never intersects train.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "bitext/common.hpp"
#include "bitext/textproc.hpp"
#include "bitext/types.hpp"

namespace bitext {

struct SplitConfig {
  std::size_t dev_n = 0;
  std::size_t test_n = 0;
  double overlap_frac = 0.05;
  std::uint64_t seed = 0;
  // Upper bounds of the source-token length buckets; lengths beyond the
  // last edge form a final open bucket.
  std::vector<std::size_t> bucket_edges = {10, 20, 40};
};

struct StratumReport {
  std::string name;
  std::size_t corpus = 0;
  std::size_t train = 0;
  std::size_t dev = 0;  // includes overlap copies
  std::size_t dev_overlap = 0;
  std::size_t test = 0;
};

struct SplitReport {
  std::vector<StratumReport> strata;
  std::size_t corpus = 0;
  std::size_t overlap = 0;

  std::string summary() const {
    std::string out = strcat_("corpus ", corpus, ", overlap ", overlap, "\n");
    out += "stratum\tcorpus\ttrain\tdev\tdev_overlap\ttest\n";
    for (const auto& s : strata) {
      out += strcat_(s.name, "\t", s.corpus, "\t", s.train, "\t", s.dev, "\t",
                     s.dev_overlap, "\t", s.test, "\n");
    }
    return out;
  }
};

struct SplitResult {
  Corpus train;
  Corpus dev;
  Corpus test;
  SplitReport report;
  std::vector<std::string> warnings;
};

namespace detail {

struct StratumKey {
  bool has_placeholder = false;
  std::size_t bucket = 0;
  friend bool operator<(const StratumKey& a, const StratumKey& b) {
    if (a.has_placeholder != b.has_placeholder)
      return a.has_placeholder < b.has_placeholder;
    return a.bucket < b.bucket;
  }
};

inline std::string stratum_name(const StratumKey& key,
                                const std::vector<std::size_t>& edges) {
  std::string range;
  std::size_t lo = key.bucket == 0 ? 1 : edges[key.bucket - 1] + 1;
  if (key.bucket < edges.size())
    range = strcat_(lo, "-", edges[key.bucket]);
  else
    range = strcat_(lo, "+");
  return strcat_(key.has_placeholder ? "dnt" : "plain", ":", range);
}

inline StratumKey stratum_of(const SentencePair& pair,
                             const std::vector<std::size_t>& edges) {
  StratumKey key;
  auto tokens = split_ws(pair.src);
  for (const auto& t : tokens) {
    if (is_placeholder_token(t)) {
      key.has_placeholder = true;
      break;
    }
  }
  std::size_t len = tokens.size();
  key.bucket = edges.size();
  for (std::size_t b = 0; b < edges.size(); ++b) {
    if (len <= edges[b]) {
      key.bucket = b;
      break;
    }
  }
  return key;
}

// Largest-remainder apportionment of `total` over the stratum sizes,
// clamped to per-stratum capacity. Shortfall from clamping is passed to
// strata with spare capacity in key order, so the totals are met
// whenever the combined capacity allows.
inline std::vector<std::size_t> apportion(
    std::size_t total, const std::vector<std::size_t>& sizes,
    const std::vector<std::size_t>& capacity, std::size_t population,
    std::vector<std::size_t>* clamped) {
  std::size_t n = sizes.size();
  std::vector<std::size_t> quota(n, 0);
  if (population == 0 || total == 0) return quota;

  std::vector<std::pair<double, std::size_t>> remainders;
  std::size_t assigned = 0;
  for (std::size_t i = 0; i < n; ++i) {
    double exact = static_cast<double>(total) *
                   static_cast<double>(sizes[i]) /
                   static_cast<double>(population);
    quota[i] = static_cast<std::size_t>(exact);
    assigned += quota[i];
    remainders.push_back({exact - static_cast<double>(quota[i]), i});
  }
  std::stable_sort(remainders.begin(), remainders.end(),
                   [](const auto& a, const auto& b) {
                     return a.first > b.first;
                   });
  for (std::size_t r = 0; assigned < total && r < remainders.size(); ++r) {
    ++quota[remainders[r].second];
    ++assigned;
  }

  std::size_t deficit = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (quota[i] > capacity[i]) {
      deficit += quota[i] - capacity[i];
      quota[i] = capacity[i];
      if (clamped) clamped->push_back(i);
    }
  }
  while (deficit > 0) {
    bool moved = false;
    for (std::size_t i = 0; i < n && deficit > 0; ++i) {
      if (quota[i] < capacity[i]) {
        ++quota[i];
        --deficit;
        moved = true;
      }
    }
    if (!moved) break;
  }
  return quota;
}

}  // namespace detail

inline SplitResult split_corpus(const Corpus& corpus, const SplitConfig& config) {
  if (config.dev_n + config.test_n >= corpus.size())
    fail("split: dev + test (", config.dev_n + config.test_n,
         ") must be smaller than the corpus (", corpus.size(), ")");
  if (config.overlap_frac < 0.0 || config.overlap_frac >= 1.0)
    fail("split: overlap fraction must be in [0,1)");

  SplitResult result;
  result.train.src_lang = result.dev.src_lang = result.test.src_lang =
      corpus.src_lang;
  result.train.tgt_lang = result.dev.tgt_lang = result.test.tgt_lang =
      corpus.tgt_lang;

  std::size_t overlap_n = static_cast<std::size_t>(
      std::ceil(config.overlap_frac * static_cast<double>(config.dev_n)));
  std::size_t dev_fresh_n =
      overlap_n > config.dev_n ? 0 : config.dev_n - overlap_n;

  // Bucket pair indices by stratum, in key order.
  std::map<detail::StratumKey, std::vector<std::size_t>> strata;
  for (std::size_t i = 0; i < corpus.pairs.size(); ++i)
    strata[detail::stratum_of(corpus.pairs[i], config.bucket_edges)].push_back(
        i);

  std::vector<detail::StratumKey> keys;
  std::vector<std::size_t> sizes;
  for (const auto& [key, members] : strata) {
    keys.push_back(key);
    sizes.push_back(members.size());
  }

  std::vector<std::size_t> test_clamped;
  auto test_quota = detail::apportion(config.test_n, sizes, sizes,
                                      corpus.size(), &test_clamped);
  std::vector<std::size_t> dev_capacity(sizes.size());
  for (std::size_t i = 0; i < sizes.size(); ++i)
    dev_capacity[i] = sizes[i] - test_quota[i];
  std::vector<std::size_t> dev_clamped;
  auto dev_quota = detail::apportion(dev_fresh_n, sizes, dev_capacity,
                                     corpus.size(), &dev_clamped);

  for (std::size_t i : test_clamped)
    result.warnings.push_back(
        strcat_("stratum ", detail::stratum_name(keys[i], config.bucket_edges),
                " too small for its test quota; taking all of it"));
  for (std::size_t i : dev_clamped)
    result.warnings.push_back(
        strcat_("stratum ", detail::stratum_name(keys[i], config.bucket_edges),
                " too small for its dev quota; taking what remains"));

  std::mt19937_64 rng(config.seed);
  std::vector<std::size_t> test_ix, dev_ix, train_ix;
  for (std::size_t s = 0; s < keys.size(); ++s) {
    std::vector<std::size_t> members = strata[keys[s]];
    deterministic_shuffle(members, rng);
    std::size_t t = test_quota[s];
    std::size_t d = dev_quota[s];
    test_ix.insert(test_ix.end(), members.begin(), members.begin() + t);
    dev_ix.insert(dev_ix.end(), members.begin() + t, members.begin() + t + d);
    train_ix.insert(train_ix.end(), members.begin() + t + d, members.end());
  }

  // Overlap pairs: drawn globally from train, duplicated into dev.
  std::sort(train_ix.begin(), train_ix.end());
  std::vector<std::size_t> overlap_ix;
  if (overlap_n > 0) {
    std::vector<std::size_t> pool = train_ix;
    deterministic_shuffle(pool, rng);
    if (overlap_n > pool.size()) {
      result.warnings.push_back(
          strcat_("train too small for the requested overlap; using ",
                  pool.size(), " of ", overlap_n));
      overlap_n = pool.size();
    }
    overlap_ix.assign(pool.begin(), pool.begin() + overlap_n);
  }
  dev_ix.insert(dev_ix.end(), overlap_ix.begin(), overlap_ix.end());

  std::sort(test_ix.begin(), test_ix.end());
  std::sort(dev_ix.begin(), dev_ix.end());

  for (std::size_t i : train_ix) result.train.pairs.push_back(corpus.pairs[i]);
  for (std::size_t i : dev_ix) result.dev.pairs.push_back(corpus.pairs[i]);
  for (std::size_t i : test_ix) result.test.pairs.push_back(corpus.pairs[i]);

  // Report.
  result.report.corpus = corpus.size();
  result.report.overlap = overlap_ix.size();
  std::set<std::size_t> overlap_set(overlap_ix.begin(), overlap_ix.end());
  for (std::size_t s = 0; s < keys.size(); ++s) {
    StratumReport r;
    r.name = detail::stratum_name(keys[s], config.bucket_edges);
    r.corpus = sizes[s];
    r.test = test_quota[s];
    r.dev = dev_quota[s];
    result.report.strata.push_back(r);
  }
  auto stratum_index = [&](std::size_t pair_ix) {
    auto key = detail::stratum_of(corpus.pairs[pair_ix], config.bucket_edges);
    return static_cast<std::size_t>(
        std::lower_bound(keys.begin(), keys.end(), key) - keys.begin());
  };
  for (std::size_t i : train_ix) ++result.report.strata[stratum_index(i)].train;
  for (std::size_t i : overlap_ix) {
    auto& r = result.report.strata[stratum_index(i)];
    ++r.dev;
    ++r.dev_overlap;
  }
  return result;
}

inline SplitResult split_corpus(const Corpus& corpus, std::size_t dev_n,
                                std::size_t test_n,
                                double overlap_frac = 0.05,
                                std::uint64_t seed = 0) {
  SplitConfig config;
  config.dev_n = dev_n;
  config.test_n = test_n;
  config.overlap_frac = overlap_frac;
  config.seed = seed;
  return split_corpus(corpus, config);
}

}  // namespace bitext
