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

#include "bitext/textproc.hpp"

#include <random>

#include "catch2/catch_amalgamated.hpp"
#include "bitext/common.hpp"

using namespace bitext;

using Tokens = std::vector<std::string>;

TEST_CASE("tokenize splits punctuation from words") {
  CHECK(tokenize("Hello, world!") == Tokens{"Hello", ",", "world", "!"});
  CHECK(tokenize("") == Tokens{});
  CHECK(tokenize("   ") == Tokens{});
  CHECK(tokenize("one two") == Tokens{"one", "two"});
  CHECK(tokenize("a(b)c") == Tokens{"a", "(", "b", ")", "c"});
  CHECK(tokenize("Wait... what?") == Tokens{"Wait", ".", ".", ".", "what", "?"});
}

TEST_CASE("tokenize keeps digit-internal separators") {
  CHECK(tokenize("3.14 is pi") == Tokens{"3.14", "is", "pi"});
  CHECK(tokenize("1,000,000 wins") == Tokens{"1,000,000", "wins"});
  CHECK(tokenize("version 1.2.3") == Tokens{"version", "1.2.3"});
  CHECK(tokenize("end.") == Tokens{"end", "."});
  CHECK(tokenize("a.b") == Tokens{"a", ".", "b"});
  CHECK(tokenize("5. place") == Tokens{"5", ".", "place"});
}

TEST_CASE("tokenize keeps hyphenated words intact") {
  CHECK(tokenize("state-of-the-art") == Tokens{"state-of-the-art"});
  CHECK(tokenize("well-known fact") == Tokens{"well-known", "fact"});
  CHECK(tokenize("- leading dash") == Tokens{"-", "leading", "dash"});
  CHECK(tokenize("trailing- dash") == Tokens{"trailing", "-", "dash"});
  CHECK(tokenize("a--b") == Tokens{"a", "-", "-", "b"});
}

TEST_CASE("tokenize keeps placeholders as single tokens") {
  CHECK(tokenize("all DNTID1 targets") == Tokens{"all", "DNTID1", "targets"});
  CHECK(tokenize("visit DNTID2.") == Tokens{"visit", "DNTID2", "."});
  CHECK(tokenize("DNTID12, DNTID3") == Tokens{"DNTID12", ",", "DNTID3"});
}

TEST_CASE("tokenize handles non-latin letters") {
  CHECK(tokenize("привет, мир!") == Tokens{"привет", ",", "мир", "!"});
  CHECK(tokenize("café-crème") == Tokens{"café-crème"});
}

TEST_CASE("is_placeholder_token") {
  CHECK(is_placeholder_token("DNTID1"));
  CHECK(is_placeholder_token("DNTID42"));
  CHECK_FALSE(is_placeholder_token("DNTID"));
  CHECK_FALSE(is_placeholder_token("DNTIDx"));
  CHECK_FALSE(is_placeholder_token("DNTID1x"));
  CHECK_FALSE(is_placeholder_token("dntid1"));
  CHECK_FALSE(is_placeholder_token("xDNTID1"));
}

TEST_CASE("detokenize attaches punctuation") {
  CHECK(detokenize({"Hello", ",", "world", "!"}) == "Hello, world!");
  CHECK(detokenize({}) == "");
  CHECK(detokenize({"one"}) == "one");
  CHECK(detokenize({"(", "sic", ")"}) == "(sic)");
  CHECK(detokenize({"a", ":", "b", ";", "c"}) == "a: b; c");
  CHECK(detokenize({"100", "%"}) == "100%");
}

TEST_CASE("detokenize alternates double quotes") {
  CHECK(detokenize({"\"", "quoted", "\"", "end"}) == "\"quoted\" end");
  CHECK(detokenize({"say", "\"", "hi", "\""}) == "say \"hi\"");
}

TEST_CASE("detokenize attaches apostrophe between word characters") {
  CHECK(detokenize({"l", "'", "eau"}) == "l'eau");
  CHECK(detokenize({"don", "'", "t"}) == "don't");
}

TEST_CASE("tokenize/detokenize round trip on canonical text") {
  for (const std::string& s :
       {std::string("Hello, world!"), std::string("That is state-of-the-art."),
        std::string("Pi is 3.14 (roughly)."),
        std::string("Visit DNTID1 now: it helps!"),
        std::string("Der Preis: 1,99 Euro."),
        std::string("Wirklich? Ja!")}) {
    CHECK(detokenize(tokenize(s)) == s);
  }
}

TEST_CASE("property: detokenize inverts tokenize on generated sentences") {
  std::mt19937_64 rng(1234);
  const std::vector<std::string> words = {"alpha", "beta",  "GAMMA", "delta",
                                          "Wort",  "übung", "x1",    "DNTID7",
                                          "very-long"};
  for (int iter = 0; iter < 300; ++iter) {
    std::string s;
    size_t n = 1 + bounded_rand(rng, 8);
    for (size_t i = 0; i < n; ++i) {
      if (i) s += ' ';
      s += words[bounded_rand(rng, words.size())];
      size_t p = bounded_rand(rng, 4);
      if (p == 1 && i + 1 < n)
        s += ',';
      else if (p == 2 && i + 1 == n)
        s += '.';
    }
    CAPTURE(s);
    CHECK(detokenize(tokenize(s)) == s);
  }
}

TEST_CASE("truecaser training counts variants with initial discount") {
  // Both occurrences of "the" are sentence-initial; the tie goes to the
  // lowercase form.
  TruecaseModel m =
      train_truecaser({tokenize("The cat"), tokenize("the cat sat")});
  CHECK(m.canonical("the") == "the");
  CHECK(m.canonical("The") == "the");
  CHECK(m.canonical("cat") == "cat");
  CHECK(m.canonical("unseen") == "");
}

TEST_CASE("truecaser prefers dominant non-initial surface") {
  TruecaseModel m =
      train_truecaser({tokenize("NASA launched"), tokenize("by NASA")});
  CHECK(m.canonical("nasa") == "NASA");
  CHECK(m.canonical("NaSa") == "NASA");
}

TEST_CASE("truecaser initial evidence loses against one non-initial") {
  // Ten sentence-initial "Word" weigh 1.0; one non-initial "word" also
  // weighs 1.0; the tie then prefers lowercase.
  std::vector<std::vector<std::string>> sentences(10, tokenize("Word here"));
  sentences.push_back(tokenize("a word"));
  TruecaseModel m = train_truecaser(sentences);
  CHECK(m.canonical("word") == "word");
}

TEST_CASE("empty corpus trains empty model") {
  TruecaseModel m = train_truecaser({});
  CHECK(m.empty());
  CHECK(m.canonical("x") == "");
}

TEST_CASE("truecaser skips placeholders and non-letter tokens") {
  TruecaseModel m = train_truecaser({tokenize("DNTID1 42 Apfel")});
  CHECK(m.size() == 1);
  CHECK(m.canonical("apfel") == "Apfel");
}

TEST_CASE("train_truecaser is order invariant") {
  std::vector<std::vector<std::string>> a = {
      tokenize("The cat"), tokenize("by NASA"), tokenize("the dog")};
  std::vector<std::vector<std::string>> b = {a[2], a[0], a[1]};
  CHECK(train_truecaser(a).serialize() == train_truecaser(b).serialize());
}

TEST_CASE("truecase maps only the sentence-initial token") {
  TruecaseModel m =
      train_truecaser({tokenize("The cat"), tokenize("the cat sat")});
  CHECK(truecase({"The", "cat"}, m) == Tokens{"the", "cat"});
  CHECK(truecase({"cat", "The"}, m) == Tokens{"cat", "The"});
  CHECK(truecase({"Unknown", "word"}, m) == Tokens{"Unknown", "word"});
  CHECK(truecase({}, m) == Tokens{});
}

TEST_CASE("truecase never touches placeholders") {
  TruecaseModel m = train_truecaser({tokenize("the cat")});
  CHECK(truecase({"DNTID1", "rocks"}, m) == Tokens{"DNTID1", "rocks"});
}

TEST_CASE("detruecase uppercases the first letter of the first token") {
  CHECK(detruecase({"the", "cat"}) == Tokens{"The", "cat"});
  CHECK(detruecase({"übung", "macht"}) == Tokens{"Übung", "macht"});
  CHECK(detruecase({"42", "things"}) == Tokens{"42", "things"});
  CHECK(detruecase({"DNTID1", "x"}) == Tokens{"DNTID1", "x"});
  CHECK(detruecase({}) == Tokens{});
  CHECK(detruecase({"The", "cat"}) == Tokens{"The", "cat"});
}

TEST_CASE("detruecase inverts truecase for position-0 canonical changes") {
  TruecaseModel m =
      train_truecaser({tokenize("The cat"), tokenize("the cat sat")});
  Tokens original = {"The", "cat"};
  CHECK(detruecase(truecase(original, m)) == original);
}

TEST_CASE("truecase model serialization round trip") {
  TruecaseModel m = train_truecaser(
      {tokenize("The cat"), tokenize("by NASA"), tokenize("the dog runs")});
  std::string text = m.serialize();
  TruecaseModel back = TruecaseModel::deserialize(text);
  CHECK(back.serialize() == text);
  CHECK(back.canonical("nasa") == m.canonical("nasa"));
  CHECK(back.canonical("the") == m.canonical("the"));
}

TEST_CASE("truecase model rejects malformed lines") {
  CHECK_THROWS_AS(TruecaseModel::deserialize("noweight\n"), Error);
  CHECK_THROWS_AS(TruecaseModel::deserialize("word 12x\n"), Error);
  CHECK_THROWS_AS(TruecaseModel::deserialize(" 5\n"), Error);
}
