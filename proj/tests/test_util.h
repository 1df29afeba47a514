// Copyright 2026 The zsdec Authors. All Rights Reserved.
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

#ifndef ZSDEC_TESTS_TEST_UTIL_H_
#define ZSDEC_TESTS_TEST_UTIL_H_

#include <cmath>
#include <cstdint>
#include <filesystem>
#include <random>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "zsdec/alphabet.h"
#include "zsdec/emissions.h"
#include "zsdec/errors.h"

namespace zsdec::testing {

// Succeeds when fn throws zsdec::Error of the given kind, and, when line is
// non-zero, at that line.
template <typename Fn>
::testing::AssertionResult ThrowsKind(Fn&& fn, ErrorKind kind,
                                      std::size_t line = 0) {
  try {
    fn();
  } catch (const Error& e) {
    if (e.kind() != kind) {
      return ::testing::AssertionFailure()
             << "threw " << ErrorKindName(e.kind()) << ": " << e.what();
    }
    if (line != 0 && e.line() != line) {
      return ::testing::AssertionFailure() << "wrong line: " << e.what();
    }
    return ::testing::AssertionSuccess();
  }
  return ::testing::AssertionFailure()
         << "no exception, expected " << ErrorKindName(kind);
}

// Random log-softmax rows. Larger sharpness gives peakier frames.
inline EmissionMatrix RandomEmissions(std::size_t frames, std::mt19937_64& rng,
                                      double sharpness = 3.0) {
  std::normal_distribution<double> normal(0.0, sharpness);
  std::vector<float> logp(frames * kAlphabetSize);
  for (std::size_t t = 0; t < frames; ++t) {
    double logits[kAlphabetSize];
    double max = -1e300;
    for (auto& l : logits) {
      l = normal(rng);
      max = std::max(max, l);
    }
    double sum = 0.0;
    for (double l : logits) sum += std::exp(l - max);
    const double lse = max + std::log(sum);
    for (std::size_t v = 0; v < kAlphabetSize; ++v) {
      logp[t * kAlphabetSize + v] = static_cast<float>(logits[v] - lse);
    }
  }
  return EmissionMatrix("rand", frames, std::move(logp));
}

// Per-frame distributions given as probabilities over (symbol, p) pairs;
// unlisted symbols share the remaining mass.
inline EmissionMatrix FramesFromProbs(
    const std::vector<std::vector<std::pair<Symbol, double>>>& frames) {
  std::vector<float> logp(frames.size() * kAlphabetSize);
  for (std::size_t t = 0; t < frames.size(); ++t) {
    double rest = 1.0;
    for (auto [s, p] : frames[t]) rest -= p;
    const double other =
        rest / static_cast<double>(kAlphabetSize - frames[t].size());
    for (std::size_t v = 0; v < kAlphabetSize; ++v) {
      double p = other;
      for (auto [s, q] : frames[t]) {
        if (s == v) p = q;
      }
      logp[t * kAlphabetSize + v] =
          p > 0.0 ? static_cast<float>(std::log(p)) : kNegInf;
    }
  }
  return EmissionMatrix("frames", frames.size(), std::move(logp));
}

inline void AppendUtf8(char32_t c, std::string* out) {
  if (c < 0x80) {
    out->push_back(static_cast<char>(c));
  } else if (c < 0x800) {
    out->push_back(static_cast<char>(0xC0 | (c >> 6)));
    out->push_back(static_cast<char>(0x80 | (c & 0x3F)));
  } else if (c < 0x10000) {
    out->push_back(static_cast<char>(0xE0 | (c >> 12)));
    out->push_back(static_cast<char>(0x80 | ((c >> 6) & 0x3F)));
    out->push_back(static_cast<char>(0x80 | (c & 0x3F)));
  } else {
    out->push_back(static_cast<char>(0xF0 | (c >> 18)));
    out->push_back(static_cast<char>(0x80 | ((c >> 12) & 0x3F)));
    out->push_back(static_cast<char>(0x80 | ((c >> 6) & 0x3F)));
    out->push_back(static_cast<char>(0x80 | (c & 0x3F)));
  }
}

// Mixed-script text: ASCII, Latin, Greek, Cyrillic, Devanagari, CJK,
// combining marks, whitespace, digits, punctuation, '|' and arbitrary
// scalar values.
inline std::string RandomUnicodeString(std::mt19937_64& rng,
                                       std::size_t max_len = 16) {
  static constexpr std::pair<char32_t, char32_t> kRanges[] = {
      {0x20, 0x7E},     {0xA0, 0x24F},    {0x300, 0x36F},   {0x370, 0x3FF},
      {0x400, 0x52F},   {0x900, 0x97F},   {0x4E00, 0x4FFF}, {0x1F300, 0x1F5FF},
      {0x2000, 0x206F}, {0x30, 0x39},     {0x61, 0x7A},     {0x7C, 0x7C},
      {0x9, 0xD},       {0x1, 0x10FFFF},
  };
  std::uniform_int_distribution<std::size_t> len_dist(0, max_len);
  std::uniform_int_distribution<std::size_t> range_dist(
      0, std::size(kRanges) - 1);
  const std::size_t len = len_dist(rng);
  std::string out;
  for (std::size_t i = 0; i < len; ++i) {
    const auto [lo, hi] = kRanges[range_dist(rng)];
    std::uniform_int_distribution<std::uint32_t> cp(lo, hi);
    char32_t c = cp(rng);
    if (c >= 0xD800 && c <= 0xDFFF) c = 0xFFFD;
    AppendUtf8(c, &out);
  }
  return out;
}

// Fresh directory under the system temp dir, removed on destruction.
class TempDir {
 public:
  TempDir() {
    std::random_device rd;
    path_ = std::filesystem::temp_directory_path() /
            ("zsdec_test_" + std::to_string(rd()) + std::to_string(rd()));
    std::filesystem::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  std::string File(const std::string& name) const {
    return (path_ / name).string();
  }
  const std::filesystem::path& path() const { return path_; }

 private:
  std::filesystem::path path_;
};

}  // namespace zsdec::testing

#endif  // ZSDEC_TESTS_TEST_UTIL_H_
