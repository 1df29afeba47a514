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

#ifndef ZSDEC_NGRAM_LM_H_
#define ZSDEC_NGRAM_LM_H_

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <istream>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace zsdec {

using LmWordId = std::int32_t;

inline constexpr LmWordId kBosId = 0;  // <s>
inline constexpr LmWordId kEosId = 1;  // </s>
inline constexpr LmWordId kUnkId = 2;  // <unk>
inline constexpr std::string_view kBosWord = "<s>";
inline constexpr std::string_view kEosWord = "</s>";
inline constexpr std::string_view kUnkWord = "<unk>";

// Log10 score given to unknown words by models that lack a <unk> unigram
// (foreign ARPA files only; trained models always have one).
inline constexpr double kMissingUnkLog10 = -99.0;

// Decoder-side LM history: the last order-1 predicted words, oldest first.
struct LmState {
  std::array<LmWordId, 2> context{-1, -1};
  std::uint8_t length = 0;

  bool operator==(const LmState&) const = default;
  std::size_t Hash() const {
    std::size_t h = length;
    for (int i = 0; i < length; ++i) {
      h = h * 0x9E3779B97F4A7C15ULL + static_cast<std::uint32_t>(context[i]);
    }
    return h;
  }
};

struct LmStateHash {
  std::size_t operator()(const LmState& s) const { return s.Hash(); }
};

// N-gram count table keyed by word sequences of length 1..3.
using NGramCounts = std::map<std::vector<std::string>, std::uint64_t>;

// Count file: "w1 w2 ...<TAB>count" per line, positive integer counts.
// Throws ParseError with a line number.
NGramCounts ReadNGramCounts(std::istream& in);

// Backoff n-gram model (orders 1-3) with log10 probabilities.
//
// Trained models use absolute discounting interpolated with the next lower
// order, which is exactly representable in backoff form:
//   p(w|h) = max(c(hw) - D, 0) / c(h) + bow(h) * p(w|h'),
//   bow(h) = D * N1+(h) / c(h),
// and a unigram layer p(w) = c(w) / (N + 1) with the extra unit of mass on
// <unk>. Immutable after construction; scoring is reentrant.
class NGramModel {
 public:
  static constexpr int kMaxOrder = 3;

  struct Entry {
    double log_prob = 0.0;
    double log_backoff = 0.0;
    bool has_prob = false;
    bool has_backoff = false;
  };

  using Key = std::array<LmWordId, kMaxOrder>;

  NGramModel() = default;

  int order() const { return order_; }
  // Absent for models read from ARPA.
  std::optional<double> discount() const { return discount_; }

  const std::vector<std::string>& vocab() const { return vocab_; }
  const std::string& word(LmWordId id) const {
    return vocab_.at(static_cast<std::size_t>(id));
  }

  // Id used for scoring: kUnkId when the word has no unigram probability.
  LmWordId Index(std::string_view word) const;

  LmState StartState() const;

  // log10 p(word | state). word must come from Index().
  double Score(const LmState& state, LmWordId word, LmState* next) const;

  std::pair<LmState, double> ScoreWord(const LmState& state,
                                       std::string_view word) const;

  // Sum of ScoreWord over words from the start state, plus </s> when
  // with_eos is set.
  double ScoreSentence(std::span<const std::string> words,
                       bool with_eos = true) const;

  // Exact entry for an n-gram of 1..order ids, or nullptr.
  const Entry* Find(std::span<const LmWordId> ngram) const;

  std::size_t num_entries(int n) const;

  // Visits every entry of order n (unspecified order).
  void ForEachEntry(
      int n,
      const std::function<void(std::span<const LmWordId>, const Entry&)>& fn)
      const;

  // Words (ids) that have a unigram probability, ascending.
  std::vector<LmWordId> PredictedWords() const;

 private:
  struct KeyHash {
    std::size_t operator()(const Key& k) const {
      std::size_t h = 0;
      for (LmWordId id : k) {
        h = h * 0x9E3779B97F4A7C15ULL + static_cast<std::uint32_t>(id);
      }
      return h;
    }
  };
  using Table = std::unordered_map<Key, Entry, KeyHash>;

  friend class NGramModelBuilder;

  static Key MakeKey(std::span<const LmWordId> ngram);
  LmWordId Intern(std::string_view word);
  Entry& MutableEntry(std::span<const LmWordId> ngram);

  int order_ = 1;
  std::optional<double> discount_;
  std::vector<std::string> vocab_;
  std::unordered_map<std::string, LmWordId> index_;
  std::vector<bool> predicted_;
  std::array<Table, kMaxOrder> tables_;
};

// Sentences are padded with <s> and </s>. Throws EmptyCorpus when there are
// no word tokens, InvalidDiscount unless 0 < discount < 1, InvalidArgument
// for an order outside 1..3.
NGramModel TrainNGram(const std::vector<std::vector<std::string>>& sentences,
                      int order, double discount = 0.5);

// Count-table training. N-grams longer than order are ignored. Every
// context of a kept n-gram must itself have a count, and <s> may appear
// only as a context; violations raise InvalidCounts.
NGramModel TrainNGramFromCounts(const NGramCounts& counts, int order,
                                double discount = 0.5);

// ARPA text format. Reading throws ArpaParseError (with line number) or
// CountMismatch.
NGramModel ReadArpa(std::string_view text);
std::string WriteArpa(const NGramModel& model);

}  // namespace zsdec

#endif  // ZSDEC_NGRAM_LM_H_
