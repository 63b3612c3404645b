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
#include <fstream>
#include <limits>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace bitext {

/// Error raised by all library operations. Messages name the offending
/// input (file, line, token) so failures are actionable from logs.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

namespace detail {

inline void str_impl(std::ostringstream&) {}

template <typename T, typename... Rest>
void str_impl(std::ostringstream& os, const T& value, Rest&&... rest) {
  os << value;
  str_impl(os, std::forward<Rest>(rest)...);
}

}  // namespace detail

// Concatenates arbitrary streamable values into one string.
template <typename... Args>
std::string strcat_(Args&&... args) {
  std::ostringstream os;
  detail::str_impl(os, std::forward<Args>(args)...);
  return os.str();
}

template <typename... Args>
[[noreturn]] void fail(Args&&... args) {
  throw Error(strcat_(std::forward<Args>(args)...));
}

// FNV-1a 64-bit. Used for run-manifest content hashes and dedup keys.
inline std::uint64_t fnv1a64(const void* data, std::size_t len,
                             std::uint64_t seed = 0xcbf29ce484222325ULL) {
  const auto* p = static_cast<const unsigned char*>(data);
  std::uint64_t h = seed;
  for (std::size_t i = 0; i < len; ++i) {
    h ^= p[i];
    h *= 0x100000001b3ULL;
  }
  return h;
}

inline std::uint64_t fnv1a64(const std::string& s) {
  return fnv1a64(s.data(), s.size());
}

inline std::string hex64(std::uint64_t v) {
  static const char* digits = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[static_cast<std::size_t>(i)] = digits[v & 0xF];
    v >>= 4;
  }
  return out;
}

// Unbiased bounded draw. std::uniform_int_distribution is implementation
// defined, so splits would not be reproducible across standard libraries.
inline std::uint64_t bounded_rand(std::mt19937_64& rng, std::uint64_t bound) {
  if (bound == 0) fail("bounded_rand: bound must be positive");
  const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
  const std::uint64_t limit = max - max % bound;
  std::uint64_t r = rng();
  while (r >= limit) r = rng();
  return r % bound;
}

template <typename T>
void deterministic_shuffle(std::vector<T>& v, std::mt19937_64& rng) {
  for (std::size_t i = v.size(); i > 1; --i) {
    std::size_t j = static_cast<std::size_t>(bounded_rand(rng, i));
    std::swap(v[i - 1], v[j]);
  }
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail("cannot open file for reading: ", path);
  std::ostringstream os;
  os << in.rdbuf();
  if (in.bad()) fail("read failure on: ", path);
  return os.str();
}

inline void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) fail("cannot open file for writing: ", path);
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  if (!out) fail("write failure on: ", path);
}

inline bool file_exists(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  return static_cast<bool>(in);
}

// Splits on single-character separator; keeps empty fields.
inline std::vector<std::string> split_str(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == sep) {
      out.push_back(s.substr(start, i - start));
      start = i + 1;
    }
  }
  return out;
}

// Splits on runs of spaces/tabs; no empty fields.
inline std::vector<std::string> split_ws(const std::string& s) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    std::size_t start = i;
    while (i < s.size() && s[i] != ' ' && s[i] != '\t') ++i;
    if (i > start) out.push_back(s.substr(start, i - start));
  }
  return out;
}

inline std::string join(const std::vector<std::string>& parts,
                        const std::string& sep = " ") {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

}  // namespace bitext
