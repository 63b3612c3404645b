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

#include "bitext/cleaning.hpp"

#include <random>

#include "catch2/catch_amalgamated.hpp"

using namespace bitext;

// ---------------------------------------------------------------------------
// clean_characters
// ---------------------------------------------------------------------------

TEST_CASE("clean_characters removes control characters") {
  CHECK(clean_characters(std::string("a\0b", 3)) == "ab");
  CHECK(clean_characters("a\x01\x02\x03z") == "az");
  CHECK(clean_characters("del\x7F" "ete") == "delete");
}

TEST_CASE("clean_characters collapses and trims whitespace") {
  CHECK(clean_characters("a   b ") == "a b");
  CHECK(clean_characters("  lead") == "lead");
  CHECK(clean_characters("a\tb") == "a b");
  CHECK(clean_characters("nb\xC2\xA0sp") == "nb sp");  // NBSP
  CHECK(clean_characters("thin\xE2\x80\x89space") == "thin space");
  CHECK(clean_characters("   ") == "");
  CHECK(clean_characters("") == "");
}

TEST_CASE("clean_characters strips zero-width and bidi noise") {
  CHECK(clean_characters("zero\xE2\x80\x8Bwidth") == "zerowidth");
  CHECK(clean_characters("\xEF\xBB\xBF" "bom") == "bom");
  CHECK(clean_characters("soft\xC2\xADhyphen") == "softhyphen");
}

TEST_CASE("clean_characters composes combining sequences") {
  CHECK(clean_characters("Cafe\xCC\x81") == "Café");
  CHECK(clean_characters("u\xCC\x88" "ber") == "über");
}

TEST_CASE("clean_characters repairs double-encoded mojibake") {
  // Equivalent repairs confirmed with an encode-cp1252/decode-utf8 oracle.
  CHECK(clean_characters("Caf\xC3\x83\xC2\xA9") == "Café");          // CafÃ© -> Café
  CHECK(clean_characters("\xC3\x83\xC2\xBC" "ber") == "über");       // Ã¼ber -> über
  CHECK(clean_characters("M\xC3\x83\xC2\xBCnchen") == "München");    // MÃ¼nchen
  CHECK(clean_characters("na\xC3\x83\xC2\xAFve") == "naïve");        // naÃ¯ve
  // â€™ (cp1252-coded right single quote) -> ’
  CHECK(clean_characters("\xC3\xA2\xE2\x82\xAC\xE2\x84\xA2") ==
        "\xE2\x80\x99");
}

TEST_CASE("clean_characters leaves plain accented text alone") {
  CHECK(clean_characters("Café crème") == "Café crème");
  CHECK(clean_characters("Ärzte über alles") == "Ärzte über alles");
  CHECK(clean_characters("привет мир") == "привет мир");
  CHECK(clean_characters("¿Qué tal?") == "¿Qué tal?");
}

TEST_CASE("clean_characters is idempotent on noisy inputs") {
  std::mt19937_64 rng(314159);
  const std::vector<std::string> pieces = {
      "abc", " ",  "\t",   "\xC2\xA0", "\xC3\x83", "\xC2\xA9", "\x01",
      "é",   "ü",  "\xE2\x80\x8B",     "e",        "\xCC\x81", "я",
      "1",   ".",  "\xC3\xA2", "\xE2\x82\xAC",     "\xE2\x84\xA2"};
  for (int iter = 0; iter < 500; ++iter) {
    std::string s;
    size_t n = bounded_rand(rng, 12);
    for (size_t i = 0; i < n; ++i) s += pieces[bounded_rand(rng, pieces.size())];
    std::string once = clean_characters(s);
    CAPTURE(s, once);
    CHECK(clean_characters(once) == once);
    CHECK_FALSE(utf8_invalid_at(once).has_value());
  }
}

TEST_CASE("mojibake_score flags suspicious bigrams") {
  CHECK(mojibake_score("Caf\xC3\x83\xC2\xA9") > 0);
  CHECK(mojibake_score("Café") == 0);
  CHECK(mojibake_score("hello") == 0);
}

// ---------------------------------------------------------------------------
// Pair filters
// ---------------------------------------------------------------------------

TEST_CASE("punct_digit_filter drops low-alnum and digit-only sides") {
  CHECK(punct_digit_filter({0, "!!! ???", "ok then"}) ==
        Verdict{DropReason::LowAlnumRatio});
  CHECK(punct_digit_filter({0, "12 345", "12 345"}) ==
        Verdict{DropReason::DigitsOnly});
  CHECK(punct_digit_filter({0, "hello world", "hallo welt"}) == Verdict{});
  CHECK(punct_digit_filter({0, "", "x"}) == Verdict{DropReason::EmptySide});
  CHECK(punct_digit_filter({0, "x", ""}) == Verdict{DropReason::EmptySide});
  // Exactly half alphanumeric is kept (strict less-than).
  CHECK(punct_digit_filter({0, "ab !?", "ok ok"}) == Verdict{});
  CHECK(punct_digit_filter({0, "a !?!", "ok ok"}) ==
        Verdict{DropReason::LowAlnumRatio});
  CHECK(punct_digit_filter({0, "ok ok", "123"}) ==
        Verdict{DropReason::DigitsOnly});
}

TEST_CASE("copy_filter uses normalized equality") {
  CHECK(copy_filter({0, "Hello World", "hello world"}) ==
        Verdict{DropReason::CopyOfSource});
  CHECK(copy_filter({0, "hello", "hallo"}) == Verdict{});
  CHECK(copy_filter({0, "", ""}) == Verdict{DropReason::CopyOfSource});
  CHECK(copy_filter({0, "ÄRZTE hier", "ärzte  hier"}) ==
        Verdict{DropReason::CopyOfSource});
  CHECK(copy_filter({0, "same same", "same same!"}) == Verdict{});
}

TEST_CASE("dedup keeps first occurrences in order") {
  Corpus c;
  c.pairs = {{0, "a", "b"}, {1, "a", "b"}, {2, "a", "c"},
             {3, "c", "d"}, {4, "a", "b"}};
  Corpus d = dedup(c);
  REQUIRE(d.size() == 3);
  CHECK(d.pairs[0].id == 0);
  CHECK(d.pairs[1].id == 2);  // same source, different target is kept
  CHECK(d.pairs[2].id == 3);
  Corpus dd = dedup(d);
  CHECK(dd.size() == d.size());
}

// ---------------------------------------------------------------------------
// Ratio statistics and length filter
// ---------------------------------------------------------------------------

namespace {

Corpus ratio_corpus(const std::vector<std::pair<size_t, size_t>>& lens) {
  Corpus c;
  size_t id = 0;
  for (auto [s, t] : lens) {
    c.pairs.push_back({id++, std::string(s, 'a'), std::string(t, 'b')});
  }
  return c;
}

}  // namespace

TEST_CASE("ratio stats mean and population stddev") {
  RatioStats eq = compute_ratio_stats(ratio_corpus({{4, 4}, {6, 6}}));
  CHECK(eq.mean == Catch::Approx(1.0));
  CHECK(eq.stddev == Catch::Approx(0.0));
  CHECK(eq.n == 2);

  // Ratios 1.0 and 3.0: mean 2.0, population stddev 1.0.
  RatioStats st = compute_ratio_stats(ratio_corpus({{4, 4}, {6, 2}}));
  CHECK(st.mean == Catch::Approx(2.0));
  CHECK(st.stddev == Catch::Approx(1.0));
}

TEST_CASE("ratio stats require two usable pairs") {
  CHECK_THROWS_AS(compute_ratio_stats(ratio_corpus({{4, 4}})), Error);
  CHECK_THROWS_AS(compute_ratio_stats(ratio_corpus({{4, 4}, {0, 3}})), Error);
  CHECK_THROWS_AS(compute_ratio_stats(Corpus{}), Error);
}

TEST_CASE("ratio stats can count tokens instead of characters") {
  Corpus c;
  c.pairs = {{0, "one two three", "a b"}, {1, "x y z", "p q"}};
  RatioStats st = compute_ratio_stats(c, true);
  CHECK(st.mean == Catch::Approx(1.5));
  CHECK(st.stddev == Catch::Approx(0.0));
}

TEST_CASE("length filter applies min-chars then sigma band") {
  RatioStats st{1.0, 0.1, 100};
  CHECK(length_filter({0, "abcd", "abcd"}, st) == Verdict{});  // ratio == mean
  CHECK(length_filter({0, std::string(20, 'x'), std::string(10, 'y')}, st) ==
        Verdict{DropReason::RatioOutlier});  // ratio 2.0 is 10 sigma out
  CHECK(length_filter({0, "a", "abcd"}, st) == Verdict{DropReason::TooShort});
  CHECK(length_filter({0, "", "abcd"}, st) == Verdict{DropReason::EmptySide});
  // Exactly six sigma is kept (strict greater-than).
  CHECK(length_filter({0, std::string(16, 'x'), std::string(10, 'y')}, st) ==
        Verdict{});
}

TEST_CASE("length filter with zero stddev keeps only the mean ratio") {
  RatioStats st{1.0, 0.0, 50};
  CHECK(length_filter({0, "abcd", "abcd"}, st) == Verdict{});
  CHECK(length_filter({0, "abcde", "abcd"}, st) ==
        Verdict{DropReason::RatioOutlier});
}

// ---------------------------------------------------------------------------
// Script detection and language identification
// ---------------------------------------------------------------------------

TEST_CASE("detect_script majority rule") {
  CHECK(detect_script("hello") == Script::Latin);
  CHECK(detect_script("привет") == Script::Cyrillic);
  CHECK(detect_script("γειά σου") == Script::Greek);
  CHECK(detect_script("123 !!") == Script::Unknown);
  CHECK(detect_script("") == Script::Unknown);
}

TEST_CASE("detect_script sixty percent threshold") {
  // 7 of 8 letters Cyrillic: clear majority.
  CHECK(detect_script("a приветик") == Script::Cyrillic);
  // 3 Latin of 9 letters vs 6 Cyrillic: 66.7% > 60% -> Cyrillic.
  CHECK(detect_script("abc привет") == Script::Cyrillic);
  // 4 vs 4: no script exceeds 60%.
  CHECK(detect_script("abcd прив") == Script::Mixed);
  // Exactly 60% does not exceed the threshold.
  CHECK(detect_script("abcd привет") == Script::Mixed);  // 6 of 10
}

TEST_CASE("identify_language matches expected language on clear text") {
  // Oracle note: no third-party identifier is installed in this
  // environment; these sentences are unambiguous by construction.
  auto [de, cde] = identify_language("der Hund läuft über die Straße schnell",
                                     {"de", "en"});
  CHECK(de == "de");
  CHECK(cde > 0.0);
  auto [en, cen] = identify_language(
      "the quick brown fox jumps over the lazy dog", {"de", "en"});
  CHECK(en == "en");
  CHECK(cen > 0.0);
}

TEST_CASE("identify_language across the bundled profiles") {
  const LanguageIdentifier& id = bundled_identifier();
  auto check_lang = [&](const std::string& text, const std::string& expect) {
    auto [lang, conf] = id.identify(text);
    CAPTURE(text);
    CHECK(lang == expect);
    CHECK(conf > 0.0);
  };
  check_lang("das Wetter ist heute wirklich schön geworden", "de");
  check_lang("the weather turned out really nice today indeed", "en");
  check_lang("le temps est vraiment devenu agréable aujourd'hui", "fr");
  check_lang("el tiempo se ha puesto muy agradable hoy día", "es");
  check_lang("il tempo oggi è diventato davvero molto bello", "it");
  check_lang("o tempo hoje ficou realmente muito agradável aqui", "pt");
  check_lang("het weer is vandaag echt heel mooi geworden", "nl");
  check_lang("погода сегодня стала действительно очень хорошей", "ru");
  check_lang("ο καιρός σήμερα έγινε πραγματικά πολύ ωραίος", "el");
}

TEST_CASE("identify_language returns unknown for short text") {
  auto [lang, conf] = identify_language("ab", {"de", "en"});
  CHECK(lang == "unknown");
  CHECK(conf == 0.0);
  auto [lang2, conf2] = identify_language("", {"de", "en"});
  CHECK(lang2 == "unknown");
  CHECK(conf2 == 0.0);
  // 19 letters is still too short.
  auto [lang3, conf3] = identify_language("abcde fghij klmno pqrs", {"en"});
  CHECK(lang3 == "unknown");
  CHECK(conf3 == 0.0);
}

TEST_CASE("language_filter keeps matching and uncertain pairs") {
  SentencePair good{0, "der schnelle braune Fuchs springt über den Zaun",
                    "the quick brown fox jumps over the fence"};
  CHECK(language_filter(good, "de", "en") == Verdict{});

  // Too short to classify: fail-open.
  SentencePair tiny{1, "ja", "yes"};
  CHECK(language_filter(tiny, "de", "en") == Verdict{});

  // No letters at all: fail-open at script stage.
  SentencePair nums{2, "12 + 3", "12 + 3"};
  CHECK(language_filter(nums, "de", "en") == Verdict{});
}

TEST_CASE("language_filter drops script mismatches") {
  SentencePair pair{0, "это предложение написано русским текстом",
                    "this sentence is in english like expected"};
  CHECK(language_filter(pair, "de", "en") ==
        Verdict{DropReason::ScriptMismatch});
  // Russian expected on the source side: fine.
  CHECK(language_filter(pair, "ru", "en") == Verdict{});
}

TEST_CASE("language_filter needs both halves to agree on the wrong language") {
  // Both halves clearly English, expected German: drop.
  SentencePair wrong{
      0,
      "the government announced new measures to help the children "
      "play outside every afternoon during the cold weather",
      "das spielt keine Rolle für diesen Test"};
  CHECK(language_filter(wrong, "de", "de") ==
        Verdict{DropReason::LanguageMismatch});

  // Half German, half English: halves disagree, keep.
  SentencePair half{
      1,
      "die Kinder spielen jeden Nachmittag draußen im Garten because "
      "the weather turned out really nice today indeed",
      "egal"};
  CHECK(language_filter(half, "de", "") == Verdict{});
}

// ---------------------------------------------------------------------------
// Cascade driver
// ---------------------------------------------------------------------------

namespace {

Corpus clean_corpus_fixture() {
  Corpus c;
  c.src_lang = "de";
  c.tgt_lang = "en";
  std::vector<std::pair<std::string, std::string>> rows = {
      {"der Hund läuft schnell über die Straße hinweg",
       "the dog runs quickly across the street today"},
      {"die Kinder spielen jeden Nachmittag draußen im Garten",
       "the children play outside in the garden every afternoon"},
      {"wir haben frisches Brot und Käse auf dem Markt gekauft",
       "we bought fresh bread and cheese at the market"},
      {"das Wetter war diese Woche wirklich sehr kalt",
       "the weather has been really cold this week"},
      {"sie liest am Abend gerne ein gutes Buch",
       "she likes to read a good book in the evening"},
      {"die Regierung kündigte neue Maßnahmen für kleine Firmen an",
       "the government announced new measures for small companies"},
  };
  size_t id = 0;
  for (auto& [s, t] : rows) c.pairs.push_back({id++, s, t});
  return c;
}

}  // namespace

TEST_CASE("run_cleaning keeps a clean corpus untouched") {
  Corpus c = clean_corpus_fixture();
  CleaningConfig cfg;
  cfg.src_lang = "de";
  cfg.tgt_lang = "en";
  auto [out, report] = run_cleaning(c, cfg);
  CHECK(out.size() == c.size());
  CHECK(report.drops.empty());
  CHECK(report.input_pairs == c.size());
  CHECK(report.output_pairs == c.size());
  CHECK(report.reconciles());
  CHECK(report.ratio_stats_valid);
}

TEST_CASE("run_cleaning drops injected copies at the copy stage") {
  Corpus c = clean_corpus_fixture();
  size_t base = c.size();
  for (size_t i = 0; i < 3; ++i) {
    std::string s = "copied sentence number " + std::to_string(i) +
                    " stays identical on both sides";
    c.pairs.push_back({base + i, s, s});
  }
  CleaningConfig cfg;  // no language expectation: isolate the copy stage
  auto [out, report] = run_cleaning(c, cfg);
  CHECK(out.size() == base);
  REQUIRE(report.drops.size() == 3);
  for (const auto& d : report.drops) {
    CHECK(d.stage == CleaningStage::Copy);
    CHECK(d.reason == DropReason::CopyOfSource);
    CHECK(d.id >= base);
  }
  CHECK(report.reconciles());
}

TEST_CASE("run_cleaning drops duplicates keeping the first") {
  Corpus c = clean_corpus_fixture();
  size_t base = c.size();
  c.pairs.push_back({base, c.pairs[0].src, c.pairs[0].tgt});
  auto [out, report] = run_cleaning(c, CleaningConfig{});
  CHECK(out.size() == base);
  REQUIRE(report.drops.size() == 1);
  CHECK(report.drops[0].id == base);
  CHECK(report.drops[0].stage == CleaningStage::Dedup);
  CHECK(report.drops[0].reason == DropReason::Duplicate);
}

TEST_CASE("run_cleaning repairs characters and counts rewrites") {
  Corpus c = clean_corpus_fixture();
  c.pairs[0].src = "der Hund  läuft   hier";  // extra spaces
  c.pairs[1].tgt = "Caf\xC3\x83\xC2\xA9 time for everyone";
  auto [out, report] = run_cleaning(c, CleaningConfig{});
  CHECK(report.characters_modified == 2);
  CHECK(out.pairs[0].src == "der Hund läuft hier");
  CHECK(out.pairs[1].tgt == "Café time for everyone");
}

TEST_CASE("run_cleaning with frozen stats is idempotent") {
  // A 6-sigma cut needs a low contamination fraction: one outlier among n
  // pairs sits near sqrt(n) sigma, so n=51 puts it at roughly 7 sigma.
  Corpus c;
  for (size_t i = 0; i < 50; ++i) {
    c.pairs.push_back(
        {i, "der nummerierte Satz " + std::to_string(i) + " steht hier",
         "the numbered sentence " + std::to_string(i) + " stands here"});
  }
  size_t base = c.size();
  // Noise of every kind.
  c.pairs.push_back({base + 0, "!!! ???", "ok then maybe"});
  c.pairs.push_back({base + 1, "12 345", "12 345"});
  c.pairs.push_back({base + 2, "gleicher Satz auf beiden Seiten",
                     "gleicher Satz auf beiden Seiten"});
  c.pairs.push_back({base + 3, c.pairs[0].src, c.pairs[0].tgt});
  c.pairs.push_back(
      {base + 4, std::string(1000, 'x') + " lang", "kurz"});  // ratio bomb
  CleaningConfig cfg;
  auto [out1, rep1] = run_cleaning(c, cfg);
  CHECK(rep1.reconciles());
  CHECK(out1.size() == base);
  CHECK(rep1.drops.size() == 5);

  CleaningConfig frozen = cfg;
  frozen.frozen_stats = rep1.ratio_stats;
  auto [out2, rep2] = run_cleaning(out1, frozen);
  CHECK(rep2.drops.empty());
  CHECK(out2.size() == out1.size());
  for (size_t i = 0; i < out1.size(); ++i) {
    CHECK(out2.pairs[i].src == out1.pairs[i].src);
    CHECK(out2.pairs[i].tgt == out1.pairs[i].tgt);
  }
}

TEST_CASE("run_cleaning reconciliation counts chain across stages") {
  Corpus c = clean_corpus_fixture();
  size_t base = c.size();
  c.pairs.push_back({base + 0, "", "empty source"});
  c.pairs.push_back({base + 1, "!!!! !!!", "drop me here"});
  c.pairs.push_back({base + 2, "echo echo", "echo echo"});
  auto [out, report] = run_cleaning(c, CleaningConfig{});
  CHECK(report.reconciles());
  CHECK(report.input_pairs == base + 3);
  CHECK(report.output_pairs == out.size());
  // Reason histogram totals match the drop list.
  std::map<DropReason, size_t> hist;
  for (const auto& d : report.drops) ++hist[d.reason];
  size_t total = 0;
  for (const auto& st : report.stages)
    for (const auto& [r, n] : st.reasons) {
      CHECK(hist[r] >= 1);
      total += n;
    }
  CHECK(total == report.drops.size());
  // Summary text mentions every executed stage.
  std::string s = report.summary();
  for (CleaningStage st : kCleaningStages)
    CHECK(s.find(stage_name(st)) != std::string::npos);
}

TEST_CASE("run_cleaning respects disabled stages") {
  Corpus c = clean_corpus_fixture();
  size_t base = c.size();
  c.pairs.push_back({base, "gleich hier", "gleich hier"});
  CleaningConfig cfg;
  cfg.disabled = {CleaningStage::Copy};
  auto [out, report] = run_cleaning(c, cfg);
  CHECK(out.size() == base + 1);  // the copy survived
  CHECK(report.reconciles());
  bool copy_seen = false;
  for (const auto& st : report.stages)
    if (st.stage == CleaningStage::Copy) {
      copy_seen = true;
      CHECK_FALSE(st.enabled);
      CHECK(st.dropped == 0);
    }
  CHECK(copy_seen);
}

TEST_CASE("run_cleaning sorts drop records by pair id") {
  Corpus c = clean_corpus_fixture();
  // Interleave noise so stages drop out of id order.
  c.pairs.insert(c.pairs.begin(), {97, "!!! ???", "first noise here"});
  c.pairs.push_back({96, "97 98 99", "97 98 99"});
  for (size_t i = 0; i < c.pairs.size(); ++i) c.pairs[i].id = c.pairs[i].id;
  auto [out, report] = run_cleaning(c, CleaningConfig{});
  (void)out;
  for (size_t i = 1; i < report.drops.size(); ++i)
    CHECK(report.drops[i - 1].id < report.drops[i].id);
}

TEST_CASE("stage and reason names are stable identifiers") {
  CHECK(std::string(stage_name(CleaningStage::PunctDigit)) == "punct_digit");
  CHECK(stage_from_name("language") == CleaningStage::Language);
  CHECK_FALSE(stage_from_name("bogus").has_value());
  CHECK(std::string(reason_name(DropReason::RatioOutlier)) == "ratio_outlier");
}
