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

#include "bitext/dnt.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <string>
#include <vector>

#include <catch2/catch_amalgamated.hpp>

#include "bitext/textproc.hpp"

using namespace bitext;

namespace {

std::vector<DntSpan> detect(const std::string& src) {
  return detect_dnts(src);
}

bool has_span(const std::vector<DntSpan>& spans, DntKind kind,
              const std::string& surface) {
  for (const auto& s : spans)
    if (s.kind == kind && s.surface == surface) return true;
  return false;
}

}  // namespace

TEST_CASE("url detection") {
  auto spans = detect("visit www.post2015consensus.com");
  REQUIRE(spans.size() == 1);
  CHECK(spans[0].kind == DntKind::Url);
  CHECK(spans[0].surface == "www.post2015consensus.com");
  CHECK(spans[0].start == 6);
  CHECK(spans[0].end == 31);

  CHECK(has_span(detect("see https://example.org/a?b=1 today"), DntKind::Url,
                 "https://example.org/a?b=1"));

  // Trailing sentence punctuation stays outside the span.
  auto dotted = detect("go to www.example.org.");
  REQUIRE(dotted.size() == 1);
  CHECK(dotted[0].surface == "www.example.org");

  // A bare scheme-less domain without www. is not masked.
  CHECK(detect("see example.org today").empty());
}

TEST_CASE("email detection") {
  auto spans = detect("write to mail.name+tag@sub.example.de today");
  REQUIRE(spans.size() == 1);
  CHECK(spans[0].kind == DntKind::Email);
  CHECK(spans[0].surface == "mail.name+tag@sub.example.de");

  auto dotted = detect("contact a@b.org.");
  REQUIRE(dotted.size() == 1);
  CHECK(dotted[0].surface == "a@b.org");
}

TEST_CASE("number detection") {
  auto spans = detect("all 19 targets");
  REQUIRE(spans.size() == 1);
  CHECK(spans[0].kind == DntKind::Number);
  CHECK(spans[0].surface == "19");
  CHECK(spans[0].start == 4);
  CHECK(spans[0].end == 6);

  SECTION("single digits are not masked") {
    CHECK(detect("a 7 b").empty());
  }
  SECTION("formatted numbers are not masked") {
    CHECK(detect("price 1,000 total").empty());
    CHECK(detect("pi is 3.14 about").empty());
    CHECK(detect("sum 10,000 here").empty());
    CHECK(detect("version 2.0 ready").empty());
  }
  SECTION("sentence punctuation after a number is fine") {
    auto s = detect("all 19, maybe");
    REQUIRE(s.size() == 1);
    CHECK(s[0].surface == "19");
  }
  SECTION("a year-like number is masked") {
    auto s = detect("the 2015 deadline");
    REQUIRE(s.size() == 1);
    CHECK(s[0].surface == "2015");
  }
  SECTION("digit runs inside words are not numbers") {
    auto s = detect("the b52s flew");
    CHECK(!has_span(s, DntKind::Number, "52"));
  }
}

TEST_CASE("alphanumeric mix detection") {
  auto spans = detect("the A380 aircraft");
  REQUIRE(spans.size() == 1);
  CHECK(spans[0].kind == DntKind::AlnumMix);
  CHECK(spans[0].surface == "A380");

  CHECK(has_span(detect("model MB500x here"), DntKind::AlnumMix, "MB500x"));

  SECTION("one digit is not enough") {
    CHECK(detect("the x5 case").empty());
  }
  SECTION("a non-ASCII letter neighbor blocks the span") {
    // The ASCII tail of a word is not a code.
    CHECK(detect("\xC3\xBC" "ber19 hinaus").empty());
  }
}

TEST_CASE("file path detection") {
  CHECK(has_span(detect("open file.txt now"), DntKind::FilePath, "file.txt"));
  CHECK(has_span(detect("see report.pdf."), DntKind::FilePath, "report.pdf"));
  CHECK(has_span(detect("run C:\\Users\\x\\notes.txt today"),
                 DntKind::FilePath, "C:\\Users\\x\\notes.txt"));
  CHECK(has_span(detect("load ~/work/data.csv please"), DntKind::FilePath,
                 "~/work/data.csv"));
  CHECK(has_span(detect("edit src/main.cpp first"), DntKind::FilePath,
                 "src/main.cpp"));

  SECTION("unlisted extensions are not paths") {
    CHECK(detect("see notes.xyz here").empty());
  }
  SECTION("single-letter extensions match case-sensitively") {
    CHECK(detect("under U.S.C rules").empty());
    CHECK(has_span(detect("edit main.c now"), DntKind::FilePath, "main.c"));
  }
  SECTION("plain sentence periods are not extensions") {
    CHECK(detect("the end.").empty());
  }
}

TEST_CASE("xml tag detection") {
  auto spans = detect("a <b> c");
  REQUIRE(spans.size() == 1);
  CHECK(spans[0].kind == DntKind::XmlTag);
  CHECK(spans[0].surface == "<b>");

  CHECK(has_span(detect("click <br/> now"), DntKind::XmlTag, "<br/>"));
  CHECK(has_span(detect("x <a href=\"y\"> z"), DntKind::XmlTag,
                 "<a href=\"y\">"));

  SECTION("comparison operators are not tags") {
    CHECK(detect("if a < b > c then").empty());
  }
  SECTION("tags glued to words are left alone") {
    // A placeholder fused to a word would not survive the pipeline.
    CHECK(detect("<b>bold</b>").empty());
  }
}

TEST_CASE("foreign script detection") {
  std::string src =
      "\xD1\x8D\xD1\x82\xD0\xBE \xD0\xBF\xD1\x80\xD0\xBE\xD0\xB3\xD1\x80"
      "\xD0\xB0\xD0\xBC\xD0\xBC\xD0\xB0 Windows \xD0\xB4\xD0\xBB\xD1\x8F "
      "\xD0\xB2\xD0\xB0\xD1\x81";  // Cyrillic sentence containing "Windows"

  SECTION("fires for non-Latin source with Latin target") {
    auto spans = detect_dnts(src, DntRules::defaults(), Script::Cyrillic,
                             Script::Latin);
    REQUIRE(spans.size() == 1);
    CHECK(spans[0].kind == DntKind::ForeignScript);
    CHECK(spans[0].surface == "Windows");
  }
  SECTION("source script is computed when unknown") {
    auto spans = detect_dnts(src, DntRules::defaults(), Script::Unknown,
                             Script::Latin);
    REQUIRE(spans.size() == 1);
    CHECK(spans[0].surface == "Windows");
  }
  SECTION("silent without a Latin target side") {
    CHECK(detect_dnts(src, DntRules::defaults(), Script::Cyrillic,
                      Script::Unknown)
              .empty());
  }
  SECTION("silent for Latin sources") {
    CHECK(detect_dnts("run Windows now", DntRules::defaults(), Script::Latin,
                      Script::Latin)
              .empty());
  }
}

TEST_CASE("overlap resolution prefers the longest match") {
  // The URL subsumes an alphanumeric-mix candidate and a digit run.
  auto spans = detect("visit www.post2015consensus.com now");
  REQUIRE(spans.size() == 1);
  CHECK(spans[0].kind == DntKind::Url);

  // An email wins over the domain-embedded file-like tail.
  auto mail = detect("send to user@files.example.org today");
  REQUIRE(mail.size() == 1);
  CHECK(mail[0].kind == DntKind::Email);
}

TEST_CASE("spans never overlap and arrive in source order") {
  auto spans =
      detect("all 19 targets at www.example.org with file.txt and A380");
  REQUIRE(spans.size() == 4);
  for (std::size_t i = 1; i < spans.size(); ++i) {
    CHECK(spans[i - 1].end <= spans[i].start);
  }
}

TEST_CASE("disabled categories stay silent") {
  DntRules rules = DntRules::defaults();
  rules.enabled.erase(DntKind::Number);
  CHECK(detect_dnts("all 19 targets", rules).empty());
}

TEST_CASE("masking the running example") {
  SentencePair pair;
  pair.src =
      "For more information about the project and all 19 targets, visit "
      "www.post2015consensus.com";
  auto spans = detect(pair.src);
  auto out = mask_pair(pair, spans, /*training=*/false);
  CHECK(out.masked.src ==
        "For more information about the project and all DNTID1 targets, "
        "visit DNTID2");
  REQUIRE(out.map.size() == 2);
  CHECK(out.map.entries[0] == PlaceholderEntry{"DNTID1", "19"});
  CHECK(out.map.entries[1] ==
        PlaceholderEntry{"DNTID2", "www.post2015consensus.com"});
  CHECK(out.skipped.empty());
}

TEST_CASE("repeated surfaces get distinct labels") {
  SentencePair pair{0, "19 of 19", "19 de 19"};
  auto out = mask_pair(pair, detect(pair.src), /*training=*/true);
  CHECK(out.masked.src == "DNTID1 of DNTID2");
  CHECK(out.masked.tgt == "DNTID1 de DNTID2");
  REQUIRE(out.map.size() == 2);
  CHECK(out.map.entries[0] == PlaceholderEntry{"DNTID1", "19"});
  CHECK(out.map.entries[1] == PlaceholderEntry{"DNTID2", "19"});
}

TEST_CASE("training mode skips spans absent from the target") {
  SentencePair pair{0, "write to a@b.de today", "schreiben Sie heute"};
  auto spans = detect(pair.src);
  REQUIRE(spans.size() == 1);
  auto out = mask_pair(pair, spans, /*training=*/true);
  CHECK(out.masked.src == pair.src);
  CHECK(out.masked.tgt == pair.tgt);
  CHECK(out.map.empty());
  REQUIRE(out.skipped.size() == 1);
  CHECK(out.skipped[0].surface == "a@b.de");
}

TEST_CASE("training mode requires verbatim target occurrences") {
  // "19" inside "192" is not a verbatim occurrence.
  SentencePair pair{0, "all 19 targets", "insgesamt 192 Punkte"};
  auto out = mask_pair(pair, detect(pair.src), /*training=*/true);
  CHECK(out.masked.src == pair.src);
  REQUIRE(out.skipped.size() == 1);

  // Skipped spans do not consume label numbers.
  SentencePair two{0, "19 beats 37 here", "hier gewinnt 37"};
  auto res = mask_pair(two, detect(two.src), /*training=*/true);
  CHECK(res.masked.src == "19 beats DNTID1 here");
  CHECK(res.masked.tgt == "hier gewinnt DNTID1");
  REQUIRE(res.map.size() == 1);
  CHECK(res.map.entries[0] == PlaceholderEntry{"DNTID1", "37"});
}

TEST_CASE("inference mode leaves the target untouched") {
  SentencePair pair{0, "all 19 targets", ""};
  auto out = mask_pair(pair, detect(pair.src), /*training=*/false);
  CHECK(out.masked.src == "all DNTID1 targets");
  CHECK(out.masked.tgt.empty());
}

TEST_CASE("masked text is a detection fixpoint") {
  SentencePair pair;
  pair.src = "send 2015 notes to x@y.org via www.example.org or file.txt";
  auto out = mask_pair(pair, detect(pair.src), /*training=*/false);
  CHECK(detect(out.masked.src).empty());
  auto again = mask_pair(out.masked, detect(out.masked.src),
                         /*training=*/false);
  CHECK(again.masked.src == out.masked.src);
  CHECK(again.map.empty());
}

TEST_CASE("placeholder tokens survive tokenization") {
  SentencePair pair;
  pair.src = "all 19 targets, visit www.example.org";
  auto out = mask_pair(pair, detect(pair.src), /*training=*/false);
  auto tokens = tokenize(out.masked.src);
  int placeholders = 0;
  for (const auto& t : tokens)
    if (is_placeholder_token(t)) ++placeholders;
  CHECK(placeholders == 2);
}

TEST_CASE("restoring the running example") {
  PlaceholderMap map;
  map.entries = {{"DNTID1", "19"}, {"DNTID2", "www.post2015consensus.com"}};

  auto res = restore("see DNTID2 for DNTID1 items", map);
  CHECK(res.text == "see www.post2015consensus.com for 19 items");
  CHECK(res.warnings.empty());

  SECTION("order-free restoration") {
    auto swapped = restore("DNTID1 and DNTID2", map);
    CHECK(swapped.text == "19 and www.post2015consensus.com");
  }
  SECTION("unused entries yield a missing warning") {
    auto partial = restore("see DNTID1 items", map);
    CHECK(partial.text == "see 19 items");
    REQUIRE(partial.warnings.size() == 1);
    CHECK(partial.warnings[0] ==
          DntWarning{DntWarningKind::Missing, "DNTID2"});
  }
}

TEST_CASE("orphan placeholders are deleted with a warning") {
  auto res = restore("DNTID9", PlaceholderMap{});
  CHECK(res.text.empty());
  REQUIRE(res.warnings.size() == 1);
  CHECK(res.warnings[0] == DntWarning{DntWarningKind::Orphan, "DNTID9"});
  CHECK(res.warnings[0].to_string() == "orphan DNTID9");

  SECTION("a neighboring space goes with the orphan") {
    CHECK(restore("keep DNTID9 this", PlaceholderMap{}).text == "keep this");
    CHECK(restore("keep DNTID9", PlaceholderMap{}).text == "keep");
    CHECK(restore("DNTID9 keep", PlaceholderMap{}).text == "keep");
  }
}

TEST_CASE("restore distinguishes multi-digit labels") {
  PlaceholderMap map;
  for (int i = 1; i <= 12; ++i)
    map.entries.push_back({strcat_("DNTID", i), strcat_("s", i)});
  auto res = restore("DNTID12 then DNTID1 then DNTID2", map);
  CHECK(res.text == "s12 then s1 then s2");
  // Nine entries were never seen.
  CHECK(res.warnings.size() == 9);
}

TEST_CASE("restore never resolves placeholders out of inserted surfaces") {
  PlaceholderMap map;
  map.entries = {{"DNTID1", "DNTID2"}, {"DNTID2", "x"}};
  auto res = restore("a DNTID1 b", map);
  CHECK(res.text == "a DNTID2 b");
  REQUIRE(res.warnings.size() == 1);
  CHECK(res.warnings[0] == DntWarning{DntWarningKind::Missing, "DNTID2"});
}

TEST_CASE("mask and restore round trip") {
  std::vector<std::string> sources = {
      "all 19 targets, visit www.post2015consensus.com",
      "send mail to team+dev@example.org about file.txt",
      "the A380 and the MB500x share 2015 parts",
      "click <br/> then open C:\\data\\report.pdf now",
      "19 of 19 is everything",
  };
  for (const auto& src : sources) {
    SentencePair pair;
    pair.src = src;
    auto out = mask_pair(pair, detect(src), /*training=*/false);
    auto res = restore(out.masked.src, out.map);
    CHECK(res.text == src);
    CHECK(res.warnings.empty());
  }
}

TEST_CASE("mask and restore round trip on generated sentences") {
  std::mt19937_64 rng(20260818);
  const std::vector<std::string> words = {
      "the", "green", "house", "stands", "near", "a",    "river",
      "and", "every", "door",  "opens",  "onto", "wide", "fields"};
  const std::vector<std::string> entities = {
      "www.example.org", "user@example.org", "4711", "A380",
      "notes.txt",       "<br/>",            "2015", "build/report.pdf"};
  for (int iter = 0; iter < 300; ++iter) {
    std::string src;
    std::size_t len = 3 + bounded_rand(rng, 8);
    for (std::size_t w = 0; w < len; ++w) {
      if (!src.empty()) src += ' ';
      if (bounded_rand(rng, 3) == 0)
        src += entities[bounded_rand(rng, entities.size())];
      else
        src += words[bounded_rand(rng, words.size())];
    }
    SentencePair pair;
    pair.src = src;
    auto spans = detect(src);
    auto out = mask_pair(pair, spans, /*training=*/false);

    // Labels are positional: DNTID1..n left to right.
    for (std::size_t i = 0; i < out.map.size(); ++i) {
      CHECK(out.map.entries[i].label == strcat_("DNTID", i + 1));
    }
    // Spans never overlap.
    for (std::size_t i = 1; i < spans.size(); ++i)
      CHECK(spans[i - 1].end <= spans[i].start);
    // Masked text has no residual detections.
    CHECK(detect(out.masked.src).empty());
    // Restoration inverts masking.
    auto res = restore(out.masked.src, out.map);
    CHECK(res.text == src);
    CHECK(res.warnings.empty());
  }
}

TEST_CASE("typed placeholders") {
  DntRules rules = DntRules::defaults();
  rules.typed_placeholders = true;
  SentencePair pair;
  pair.src = "all 19 targets, visit www.example.org";
  auto out = mask_pair(pair, detect_dnts(pair.src, rules), /*training=*/false,
                       rules);
  CHECK(out.masked.src == "all NUMID1 targets, visit URLID2");
  REQUIRE(out.map.size() == 2);
  CHECK(out.map.entries[0] == PlaceholderEntry{"NUMID1", "19"});
  CHECK(out.map.entries[1] == PlaceholderEntry{"URLID2", "www.example.org"});

  auto res = restore(out.masked.src, out.map);
  CHECK(res.text == pair.src);
  CHECK(res.warnings.empty());

  // Typed placeholders are also a detection fixpoint.
  CHECK(detect_dnts(out.masked.src, rules).empty());
}

TEST_CASE("rules file parsing") {
  DntRules rules = DntRules::parse(
      "# comment\n"
      "disable xml_tag foreign_script\n"
      "min_number_digits 3\n"
      "extensions txt pdf\n"
      "typed_placeholders on\n");
  CHECK(rules.enabled.count(DntKind::XmlTag) == 0);
  CHECK(rules.enabled.count(DntKind::ForeignScript) == 0);
  CHECK(rules.enabled.count(DntKind::Url) == 1);
  CHECK(rules.min_number_digits == 3);
  CHECK(rules.extensions == std::set<std::string>{"pdf", "txt"});
  CHECK(rules.typed_placeholders);

  CHECK(detect_dnts("all 19 targets", rules).empty());
  CHECK(!detect_dnts("all 190 targets", rules).empty());

  SECTION("serialization round trip") {
    DntRules back = DntRules::parse(rules.serialize());
    CHECK(back.enabled == rules.enabled);
    CHECK(back.min_number_digits == rules.min_number_digits);
    CHECK(back.min_mix_digits == rules.min_mix_digits);
    CHECK(back.min_latin_run == rules.min_latin_run);
    CHECK(back.typed_placeholders == rules.typed_placeholders);
    CHECK(back.extensions == rules.extensions);
  }
  SECTION("unknown directives are errors") {
    CHECK_THROWS_AS(DntRules::parse("frobnicate 3\n"), Error);
    CHECK_THROWS_AS(DntRules::parse("disable nonsense\n"), Error);
    CHECK_THROWS_AS(DntRules::parse("min_number_digits x\n"), Error);
    CHECK_THROWS_AS(DntRules::parse("typed_placeholders maybe\n"), Error);
  }
}

TEST_CASE("kind names round trip") {
  for (DntKind k : kDntKinds) {
    auto back = dnt_kind_from_name(dnt_kind_name(k));
    REQUIRE(back.has_value());
    CHECK(*back == k);
  }
  CHECK(!dnt_kind_from_name("nope").has_value());
}

TEST_CASE("placeholder sidecar lines") {
  PlaceholderMap map;
  map.entries = {{"DNTID1", "19"}, {"DNTID2", "www.example.org"}};
  std::string line = format_placeholder_line(map);
  CHECK(line == "DNTID1=19\tDNTID2=www.example.org");
  auto back = parse_placeholder_line(line);
  CHECK(back.entries == map.entries);

  SECTION("empty line means no placeholders") {
    CHECK(format_placeholder_line(PlaceholderMap{}).empty());
    CHECK(parse_placeholder_line("").empty());
  }
  SECTION("surfaces may contain the separator character") {
    PlaceholderMap odd;
    odd.entries = {{"DNTID1", "a=b"}};
    auto round = parse_placeholder_line(format_placeholder_line(odd));
    CHECK(round.entries == odd.entries);
  }
  SECTION("malformed entries are errors") {
    CHECK_THROWS_AS(parse_placeholder_line("DNTID1"), Error);
    CHECK_THROWS_AS(parse_placeholder_line("=x"), Error);
  }
}

TEST_CASE("placeholder sidecar file round trip") {
  std::string path = "dnt_sidecar_test.tmp";
  std::vector<PlaceholderMap> maps(3);
  maps[0].entries = {{"DNTID1", "19"}};
  maps[2].entries = {{"DNTID1", "www.example.org"}, {"DNTID2", "A380"}};
  write_placeholder_file(path, maps);
  auto back = read_placeholder_file(path);
  REQUIRE(back.size() == 3);
  CHECK(back[0].entries == maps[0].entries);
  CHECK(back[1].empty());
  CHECK(back[2].entries == maps[2].entries);
  std::remove(path.c_str());
}

TEST_CASE("detection and masking through the convenience entry point") {
  SentencePair pair{7, "all 19 targets", "alle 19 Ziele"};
  auto out = mask_pair(pair);
  CHECK(out.masked.id == 7);
  CHECK(out.masked.src == "all DNTID1 targets");
  CHECK(out.masked.tgt == "alle DNTID1 Ziele");
}
