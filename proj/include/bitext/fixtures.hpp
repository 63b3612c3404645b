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

// Deterministic test corpora. A combinatorial German/English sentence
// bank provides unlimited distinct clean pairs; the noise fixture
// appends labeled injections per noise class so cleaning recall is
// scorable against the label sidecar. Everything is reproducible from
// the seed alone; no file in the repository is required.

#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "bitext/cleaning.hpp"
#include "bitext/common.hpp"
#include "bitext/corpusio.hpp"
#include "bitext/types.hpp"

namespace bitext {

// ---------------------------------------------------------------------------
// Clean sentence bank
// ---------------------------------------------------------------------------

namespace detail {

struct PhrasePair {
  const char* de;
  const char* en;
};

inline constexpr PhrasePair kSubjects[] = {
    {"der Mann", "the man"},     {"die Frau", "the woman"},
    {"das Kind", "the child"},   {"der Lehrer", "the teacher"},
    {"die Katze", "the cat"},    {"der Hund", "the dog"},
    {"die Stadt", "the city"},   {"das Team", "the team"},
};

inline constexpr PhrasePair kVerbs[] = {
    {"sieht", "sees"},   {"liebt", "loves"}, {"sucht", "seeks"},
    {"findet", "finds"}, {"kennt", "knows"}, {"braucht", "needs"},
};

inline constexpr PhrasePair kObjects[] = {
    {"den Garten", "the garden"},      {"das Buch", "the book"},
    {"die Antwort", "the answer"},     {"den Schlüssel", "the key"},
    {"das Haus", "the house"},         {"die Musik", "the music"},
    {"den Fehler", "the error"},       {"die Datei", "the file"},
};

inline constexpr PhrasePair kTails[] = {
    {"", ""},
    {"heute", "today"},
    {"am Morgen", "in the morning"},
    {"ohne Zweifel", "without doubt"},
    {"seit vielen Jahren", "for many years"},
};

inline constexpr std::size_t kSubjectCount = 8;
inline constexpr std::size_t kVerbCount = 6;
inline constexpr std::size_t kObjectCount = 8;
inline constexpr std::size_t kTailCount = 5;
// The umlaut-bearing object, used by mojibake injection.
inline constexpr std::size_t kUmlautObject = 3;

inline std::string bank_sentence(const char* subject, const char* verb,
                                 const char* object, const char* tail,
                                 std::size_t block, const char* block_word) {
  std::string s = strcat_(subject, " ", verb, " ", object);
  if (tail[0] != '\0') {
    s += ' ';
    s += tail;
  }
  if (block > 0) {
    s += ' ';
    s += block_word;
    s += ' ';
    s += std::to_string(block);
  }
  s += '.';
  // Bank phrases start with a lowercase ASCII article.
  s[0] = static_cast<char>(s[0] - 'a' + 'A');
  return s;
}

}  // namespace detail

/// Size of one bank block; indices beyond it repeat the grid with a
/// numbered suffix, so every index yields a distinct sentence pair.
inline constexpr std::size_t kCleanBankBlock =
    detail::kSubjectCount * detail::kVerbCount * detail::kObjectCount *
    detail::kTailCount;

/// Deterministic parallel sentence for bank index i. Pure function of
/// the index; distinct indices give distinct surface forms.
inline SentencePair clean_pair(std::size_t i) {
  using namespace detail;
  std::size_t rest = i;
  const std::size_t s = rest % kSubjectCount;
  rest /= kSubjectCount;
  const std::size_t v = rest % kVerbCount;
  rest /= kVerbCount;
  const std::size_t o = rest % kObjectCount;
  rest /= kObjectCount;
  const std::size_t t = rest % kTailCount;
  rest /= kTailCount;
  SentencePair p;
  p.id = i;
  p.src = bank_sentence(kSubjects[s].de, kVerbs[v].de, kObjects[o].de,
                        kTails[t].de, rest, "im Abschnitt");
  p.tgt = bank_sentence(kSubjects[s].en, kVerbs[v].en, kObjects[o].en,
                        kTails[t].en, rest, "in section");
  return p;
}

/// Clean corpus of n distinct pairs, ids 0..n-1, languages de/en.
inline Corpus clean_corpus(std::size_t n) {
  Corpus corpus;
  corpus.src_lang = "de";
  corpus.tgt_lang = "en";
  corpus.pairs.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    SentencePair p = clean_pair(i);
    p.id = i;
    corpus.pairs.push_back(std::move(p));
  }
  return corpus;
}

// ---------------------------------------------------------------------------
// Noise fixture
// ---------------------------------------------------------------------------

enum class NoiseClass {
  Copy,
  DigitOnly,
  BadRatio,
  WrongLanguage,
  Duplicate,
  Mojibake,
};

inline constexpr NoiseClass kNoiseClasses[] = {
    NoiseClass::Copy,          NoiseClass::DigitOnly,
    NoiseClass::BadRatio,      NoiseClass::WrongLanguage,
    NoiseClass::Duplicate,     NoiseClass::Mojibake,
};

inline const char* noise_class_name(NoiseClass c) {
  switch (c) {
    case NoiseClass::Copy: return "copy";
    case NoiseClass::DigitOnly: return "digit_only";
    case NoiseClass::BadRatio: return "bad_ratio";
    case NoiseClass::WrongLanguage: return "wrong_language";
    case NoiseClass::Duplicate: return "duplicate";
    case NoiseClass::Mojibake: return "mojibake";
  }
  return "?";
}

inline NoiseClass noise_class_from_name(const std::string& name) {
  for (NoiseClass c : kNoiseClasses) {
    if (name == noise_class_name(c)) return c;
  }
  fail("unknown noise class '", name, "'");
}

struct NoiseLabel {
  std::size_t id = 0;
  NoiseClass cls = NoiseClass::Copy;
};

struct NoiseFixture {
  Corpus corpus;
  /// Exactly one label per injected pair, ascending by id.
  std::vector<NoiseLabel> labels;
  /// Mojibake ids mapped to the pair cleaning should recover.
  std::map<std::size_t, SentencePair> expected_repairs;
};

struct NoiseFixtureSizes {
  std::size_t clean = 100;
  std::size_t per_class = 10;
};

namespace detail {

inline constexpr PhrasePair kWrongLanguageBank[] = {
    {"Это предложение написано по-русски.",
     "This sentence is written in Russian."},
    {"Погода сегодня очень холодная.", "The weather is very cold today."},
    {"Книга лежит на столе у окна.", "The book lies on the table by the window."},
    {"Мы поедем в город завтра утром.", "We will go to the city tomorrow morning."},
    {"Дети играют в парке после школы.", "The children play in the park after school."},
    {"Этот фильм был очень интересным.", "This film was very interesting."},
    {"Она читает газету каждое утро.", "She reads the newspaper every morning."},
    {"Поезд прибывает на вокзал вовремя.", "The train arrives at the station on time."},
    {"Музыка играла всю ночь напролёт.", "The music played all night long."},
    {"Учитель объясняет новую тему классу.",
     "The teacher explains the new topic to the class."},
};
inline constexpr std::size_t kWrongLanguageCount = 10;

// Classic double-encoding: UTF-8 bytes reinterpreted as Latin-1.
inline std::string corrupt_utf8(const std::string& text) {
  std::string out;
  out.reserve(text.size() * 2);
  for (unsigned char byte : text) {
    if (byte < 0x80) {
      out += static_cast<char>(byte);
    } else {
      out += static_cast<char>(0xC0 | (byte >> 6));
      out += static_cast<char>(0x80 | (byte & 0x3F));
    }
  }
  return out;
}

}  // namespace detail

/// Clean base pairs plus per_class labeled injections per noise class,
/// appended after the base in class order. Deterministic under seed.
/// Duplicate injections copy a base pair, so the later id is the one a
/// dedup stage removes; mojibake injections carry their expected repair.
inline NoiseFixture generate_noise_fixture(std::uint64_t seed,
                                           NoiseFixtureSizes sizes = {}) {
  if (sizes.clean < 1) fail("noise fixture needs at least 1 clean pair");
  NoiseFixture fixture;
  fixture.corpus = clean_corpus(sizes.clean);
  std::mt19937_64 rng(seed);

  // Fresh bank indices never collide with the base or each other.
  std::size_t next_fresh = sizes.clean;
  auto fresh_pair = [&]() { return clean_pair(next_fresh++); };
  auto inject = [&](SentencePair p, NoiseClass cls) {
    p.id = fixture.corpus.pairs.size();
    fixture.labels.push_back({p.id, cls});
    fixture.corpus.pairs.push_back(std::move(p));
  };

  for (std::size_t k = 0; k < sizes.per_class; ++k) {
    SentencePair p = fresh_pair();
    p.tgt = p.src;
    inject(std::move(p), NoiseClass::Copy);
  }
  for (std::size_t k = 0; k < sizes.per_class; ++k) {
    SentencePair p;
    const std::size_t groups = 1 + bounded_rand(rng, 3);
    for (std::size_t g = 0; g < groups; ++g) {
      if (g > 0) p.src += ' ';
      const std::size_t digits = 1 + bounded_rand(rng, 6);
      for (std::size_t d = 0; d < digits; ++d) {
        p.src += static_cast<char>('0' + bounded_rand(rng, 10));
      }
    }
    p.tgt = p.src;
    inject(std::move(p), NoiseClass::DigitOnly);
  }
  for (std::size_t k = 0; k < sizes.per_class; ++k) {
    SentencePair base = fresh_pair();
    SentencePair p;
    p.tgt = base.tgt;
    const std::size_t reps = 18 + bounded_rand(rng, 5);
    for (std::size_t r = 0; r < reps; ++r) {
      if (r > 0) p.src += ' ';
      p.src += base.src;
    }
    inject(std::move(p), NoiseClass::BadRatio);
  }
  for (std::size_t k = 0; k < sizes.per_class; ++k) {
    const auto& entry =
        detail::kWrongLanguageBank[k % detail::kWrongLanguageCount];
    SentencePair p;
    p.src = entry.de;  // Russian text in the source slot
    p.tgt = entry.en;
    if (k >= detail::kWrongLanguageCount) {
      const std::string suffix =
          strcat_(" ", k / detail::kWrongLanguageCount + 1);
      p.src.insert(p.src.size() - 1, suffix);
      p.tgt.insert(p.tgt.size() - 1, suffix);
    }
    inject(std::move(p), NoiseClass::WrongLanguage);
  }
  for (std::size_t k = 0; k < sizes.per_class; ++k) {
    const std::size_t victim = bounded_rand(rng, sizes.clean);
    SentencePair p = fixture.corpus.pairs[victim];
    inject(std::move(p), NoiseClass::Duplicate);
  }
  // Mojibake bases get one bank block each, past every index used above,
  // so the repaired text never collides with another pair. The umlaut
  // object keeps the corruption visible.
  const std::size_t block_base = next_fresh / kCleanBankBlock + 1;
  for (std::size_t k = 0; k < sizes.per_class; ++k) {
    using namespace detail;
    const std::size_t s = bounded_rand(rng, kSubjectCount);
    const std::size_t v = bounded_rand(rng, kVerbCount);
    const std::size_t t = bounded_rand(rng, kTailCount);
    const std::size_t i =
        s + kSubjectCount *
                (v + kVerbCount *
                         (kUmlautObject +
                          kObjectCount * (t + kTailCount * (block_base + k))));
    SentencePair original = clean_pair(i);
    SentencePair p = original;
    p.src = detail::corrupt_utf8(p.src);
    const std::size_t id = fixture.corpus.pairs.size();
    inject(std::move(p), NoiseClass::Mojibake);
    original.id = id;
    fixture.expected_repairs[id] = std::move(original);
  }
  return fixture;
}

/// Per-class handling score against the cleaning outcome. For the drop
/// classes, handled means the injected id was dropped for a reason the
/// class predicts (wrong_language accepts script or language mismatch).
/// For mojibake, handled means the pair survived with exactly the
/// expected repaired text.
struct NoiseScore {
  std::size_t injected = 0;
  std::size_t handled = 0;
};

inline std::map<NoiseClass, NoiseScore> score_noise_handling(
    const NoiseFixture& fixture, const Corpus& cleaned,
    const CleaningReport& report) {
  std::map<std::size_t, DropReason> dropped;
  for (const auto& d : report.drops) dropped[d.id] = d.reason;
  std::map<std::size_t, const SentencePair*> kept;
  for (const auto& p : cleaned.pairs) kept[p.id] = &p;

  auto acceptable = [](NoiseClass cls, DropReason reason) {
    switch (cls) {
      case NoiseClass::Copy: return reason == DropReason::CopyOfSource;
      case NoiseClass::DigitOnly: return reason == DropReason::DigitsOnly;
      case NoiseClass::BadRatio: return reason == DropReason::RatioOutlier;
      case NoiseClass::WrongLanguage:
        return reason == DropReason::ScriptMismatch ||
               reason == DropReason::LanguageMismatch;
      case NoiseClass::Duplicate: return reason == DropReason::Duplicate;
      case NoiseClass::Mojibake: return false;
    }
    return false;
  };

  std::map<NoiseClass, NoiseScore> scores;
  for (NoiseClass c : kNoiseClasses) scores[c] = {};
  for (const auto& label : fixture.labels) {
    auto& score = scores[label.cls];
    ++score.injected;
    if (label.cls == NoiseClass::Mojibake) {
      auto expected = fixture.expected_repairs.find(label.id);
      auto survivor = kept.find(label.id);
      if (expected != fixture.expected_repairs.end() &&
          survivor != kept.end() &&
          survivor->second->src == expected->second.src &&
          survivor->second->tgt == expected->second.tgt) {
        ++score.handled;
      }
      continue;
    }
    auto it = dropped.find(label.id);
    if (it != dropped.end() && acceptable(label.cls, it->second)) {
      ++score.handled;
    }
  }
  return scores;
}

// ---------------------------------------------------------------------------
// Label sidecar
// ---------------------------------------------------------------------------

inline void write_noise_labels(const std::string& path,
                               const std::vector<NoiseLabel>& labels) {
  std::vector<std::string> lines;
  lines.reserve(labels.size());
  for (const auto& label : labels) {
    lines.push_back(strcat_(label.id, "\t", noise_class_name(label.cls)));
  }
  write_lines(path, lines);
}

inline std::vector<NoiseLabel> read_noise_labels(const std::string& path) {
  std::vector<NoiseLabel> labels;
  for (const auto& line : read_lines(path)) {
    auto tab = line.find('\t');
    if (tab == std::string::npos) {
      fail("noise label line has no tab: '", line, "'");
    }
    std::size_t id = 0;
    for (std::size_t i = 0; i < tab; ++i) {
      if (line[i] < '0' || line[i] > '9') {
        fail("bad noise label id in '", line, "'");
      }
      id = id * 10 + static_cast<std::size_t>(line[i] - '0');
    }
    labels.push_back({id, noise_class_from_name(line.substr(tab + 1))});
  }
  return labels;
}

}  // namespace bitext
