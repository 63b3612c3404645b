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

#include "bitext/corpusio.hpp"

#include <cstdio>
#include <random>

#include "catch2/catch_amalgamated.hpp"

using namespace bitext;

namespace {

struct TempFile {
  std::string path;
  explicit TempFile(const std::string& name, const std::string& content)
      : path(name) {
    write_file(path, content);
  }
  ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("split_lines handles trailing newline and CRLF") {
  CHECK(detail::split_lines("a\nb\n") == std::vector<std::string>{"a", "b"});
  CHECK(detail::split_lines("a\nb") == std::vector<std::string>{"a", "b"});
  CHECK(detail::split_lines("") == std::vector<std::string>{});
  CHECK(detail::split_lines("\n") == std::vector<std::string>{""});
  CHECK(detail::split_lines("a\r\nb\r\n") ==
        std::vector<std::string>{"a", "b"});
  CHECK(detail::split_lines("a\n\nb\n") ==
        std::vector<std::string>{"a", "", "b"});
}

TEST_CASE("parallel read pairs lines and assigns sequential ids") {
  TempFile src("cio_src.txt", "ein Haus\nder Hund\n");
  TempFile tgt("cio_tgt.txt", "a house\nthe dog\n");
  Corpus c = read_parallel(src.path, tgt.path, "de", "en");
  REQUIRE(c.size() == 2);
  CHECK(c.pairs[0].id == 0);
  CHECK(c.pairs[0].src == "ein Haus");
  CHECK(c.pairs[0].tgt == "a house");
  CHECK(c.pairs[1].id == 1);
  CHECK(c.src_lang == "de");
  CHECK(c.tgt_lang == "en");
}

TEST_CASE("parallel read rejects mismatched line counts") {
  TempFile src("cio_src2.txt", "one\ntwo\n");
  TempFile tgt("cio_tgt2.txt", "uno\n");
  CHECK_THROWS_WITH(read_parallel(src.path, tgt.path),
                    Catch::Matchers::ContainsSubstring("line-count mismatch"));
}

TEST_CASE("parallel read rejects invalid UTF-8 with location") {
  TempFile src("cio_src3.txt", "ok\nbad\xFFline\n");
  TempFile tgt("cio_tgt3.txt", "fine\nfine\n");
  CHECK_THROWS_WITH(read_parallel(src.path, tgt.path),
                    Catch::Matchers::ContainsSubstring("line 2"));
}

TEST_CASE("parallel write/read round trip") {
  Corpus c;
  c.src_lang = "de";
  c.tgt_lang = "en";
  c.pairs = {{0, "Hallo Welt", "hello world"},
             {1, "", "empty source side"},
             {2, "Umlaute äöü", "umlauts"}};
  write_parallel(c, "cio_rt_src.txt", "cio_rt_tgt.txt");
  Corpus back = read_parallel("cio_rt_src.txt", "cio_rt_tgt.txt", "de", "en");
  REQUIRE(back.size() == c.size());
  for (size_t i = 0; i < c.size(); ++i) {
    CHECK(back.pairs[i].src == c.pairs[i].src);
    CHECK(back.pairs[i].tgt == c.pairs[i].tgt);
  }
  std::remove("cio_rt_src.txt");
  std::remove("cio_rt_tgt.txt");
}

TEST_CASE("empty corpus writes empty files") {
  Corpus c;
  write_parallel(c, "cio_e_src.txt", "cio_e_tgt.txt");
  CHECK(read_file("cio_e_src.txt").empty());
  Corpus back = read_parallel("cio_e_src.txt", "cio_e_tgt.txt");
  CHECK(back.empty());
  std::remove("cio_e_src.txt");
  std::remove("cio_e_tgt.txt");
}

TEST_CASE("tsv read requires exactly one tab") {
  TempFile ok("cio_ok.tsv", "ein Haus\ta house\n");
  Corpus c = read_tsv(ok.path);
  REQUIRE(c.size() == 1);
  CHECK(c.pairs[0].src == "ein Haus");
  CHECK(c.pairs[0].tgt == "a house");

  TempFile none("cio_none.tsv", "no tab here\n");
  CHECK_THROWS_WITH(read_tsv(none.path),
                    Catch::Matchers::ContainsSubstring("TAB"));
  TempFile twice("cio_twice.tsv", "a\tb\tc\n");
  CHECK_THROWS_AS(read_tsv(twice.path), Error);
}

TEST_CASE("tsv write/read round trip") {
  Corpus c;
  c.pairs = {{0, "links", "rechts"}, {1, "eins zwei", "one two"}};
  write_tsv(c, "cio_rt.tsv");
  Corpus back = read_tsv("cio_rt.tsv");
  REQUIRE(back.size() == 2);
  CHECK(back.pairs[1].src == "eins zwei");
  std::remove("cio_rt.tsv");
}

TEST_CASE("pharaoh parse and format") {
  Alignment a = parse_pharaoh("0-0 1-2 2-1");
  CHECK(a.links.size() == 3);
  CHECK(a.contains(1, 2));
  CHECK(format_pharaoh(a) == "0-0 1-2 2-1");

  CHECK(parse_pharaoh("").links.empty());
  CHECK(format_pharaoh(Alignment{}) == "");

  Alignment dup = parse_pharaoh("0-0 0-0");
  CHECK(dup.links.size() == 1);

  CHECK_THROWS_WITH(parse_pharaoh("0-0 x-1"),
                    Catch::Matchers::ContainsSubstring("x-1"));
  CHECK_THROWS_AS(parse_pharaoh("3"), Error);
  CHECK_THROWS_AS(parse_pharaoh("1-"), Error);
  CHECK_THROWS_AS(parse_pharaoh("-1"), Error);
  CHECK_THROWS_AS(parse_pharaoh("1-2-3"), Error);
}

TEST_CASE("pharaoh format orders links") {
  Alignment a;
  a.links = {{2, 0}, {0, 1}, {0, 0}};
  CHECK(format_pharaoh(a) == "0-0 0-1 2-0");
}

TEST_CASE("property: pharaoh round trip on random alignments") {
  std::mt19937_64 rng(4242);
  for (int iter = 0; iter < 100; ++iter) {
    Alignment a;
    size_t n = bounded_rand(rng, 30);
    for (size_t k = 0; k < n; ++k)
      a.links.insert({bounded_rand(rng, 40), bounded_rand(rng, 40)});
    CHECK(parse_pharaoh(format_pharaoh(a)).links == a.links);
  }
}

TEST_CASE("pharaoh file round trip") {
  std::vector<Alignment> as = {parse_pharaoh("0-0 1-1"), Alignment{},
                               parse_pharaoh("2-0")};
  write_pharaoh_file("cio_al.txt", as);
  auto back = read_pharaoh_file("cio_al.txt");
  REQUIRE(back.size() == 3);
  CHECK(back[0].links == as[0].links);
  CHECK(back[1].links.empty());
  CHECK(back[2].links == as[2].links);
  std::remove("cio_al.txt");
}

TEST_CASE("attention parsing") {
  AttentionMatrix m = parse_attention("0.2 0.8 ; 0.9 0.1");
  REQUIRE(m.rows.size() == 2);
  CHECK(m.rows[0] == std::vector<double>{0.2, 0.8});
  CHECK(m.rows[1] == std::vector<double>{0.9, 0.1});
  CHECK(m.target_len() == 2);
  CHECK(m.source_len() == 2);

  CHECK(parse_attention("").rows.empty());
  CHECK(parse_attention("   ").rows.empty());
  CHECK_THROWS_WITH(parse_attention("0.1 0.2 ; 0.3"),
                    Catch::Matchers::ContainsSubstring("ragged"));
  CHECK_THROWS_WITH(parse_attention("0.1 oops"),
                    Catch::Matchers::ContainsSubstring("oops"));
}

TEST_CASE("attention to alignment uses per-target argmax") {
  // Each target row links to its strongest source column.
  AttentionMatrix m = parse_attention("0.2 0.8 ; 0.9 0.1");
  Alignment a = alignment_from_attention(m, 0.5);
  CHECK(a.links == std::set<std::pair<size_t, size_t>>{{1, 0}, {0, 1}});
}

TEST_CASE("attention threshold suppresses weak rows") {
  AttentionMatrix m = parse_attention("0.3 0.3 0.4 ; 0.9 0.05 0.05");
  CHECK(alignment_from_attention(m, 0.5).links ==
        std::set<std::pair<size_t, size_t>>{{0, 1}});
  CHECK(alignment_from_attention(m, 0.0).links ==
        std::set<std::pair<size_t, size_t>>{{2, 0}, {0, 1}});
  CHECK(alignment_from_attention(m, 0.4).links ==
        std::set<std::pair<size_t, size_t>>{{2, 0}, {0, 1}});
}

TEST_CASE("attention argmax ties choose the lowest source index") {
  AttentionMatrix m = parse_attention("0.5 0.5");
  CHECK(alignment_from_attention(m).links ==
        std::set<std::pair<size_t, size_t>>{{0, 0}});
}

TEST_CASE("attention threshold domain is checked") {
  AttentionMatrix m = parse_attention("1.0");
  CHECK_THROWS_AS(alignment_from_attention(m, -0.1), Error);
  CHECK_THROWS_AS(alignment_from_attention(m, 1.5), Error);
  CHECK(alignment_from_attention(m, 1.0).links ==
        std::set<std::pair<size_t, size_t>>{{0, 0}});
}

TEST_CASE("property: every alignment from attention is a function of target") {
  std::mt19937_64 rng(777);
  for (int iter = 0; iter < 100; ++iter) {
    AttentionMatrix m;
    size_t rows = 1 + bounded_rand(rng, 6);
    size_t cols = 1 + bounded_rand(rng, 6);
    for (size_t r = 0; r < rows; ++r) {
      std::vector<double> row;
      for (size_t c = 0; c < cols; ++c)
        row.push_back(static_cast<double>(bounded_rand(rng, 1000)) / 1000.0);
      m.rows.push_back(row);
    }
    Alignment a = alignment_from_attention(m, 0.0);
    CHECK(a.links.size() == rows);  // threshold 0: every target links once
    std::set<size_t> targets;
    for (const auto& [s, t] : a.links) {
      CHECK(s < cols);
      CHECK(t < rows);
      targets.insert(t);
    }
    CHECK(targets.size() == rows);
  }
}
