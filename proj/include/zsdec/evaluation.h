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

#ifndef ZSDEC_EVALUATION_H_
#define ZSDEC_EVALUATION_H_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "zsdec/ctc_decoder.h"
#include "zsdec/emissions.h"
#include "zsdec/lexicon.h"
#include "zsdec/ngram_lm.h"
#include "zsdec/romanizer.h"

namespace zsdec {

// Levenshtein distance with unit costs, O(|b|) memory.
template <typename T>
std::size_t EditDistance(std::span<const T> a, std::span<const T> b) {
  std::vector<std::size_t> row(b.size() + 1);
  for (std::size_t j = 0; j <= b.size(); ++j) row[j] = j;
  for (std::size_t i = 1; i <= a.size(); ++i) {
    std::size_t diag = row[0];
    row[0] = i;
    for (std::size_t j = 1; j <= b.size(); ++j) {
      const std::size_t up = row[j];
      const std::size_t sub = diag + (a[i - 1] == b[j - 1] ? 0 : 1);
      row[j] = std::min(sub, std::min(up, row[j - 1]) + 1);
      diag = up;
    }
  }
  return row[b.size()];
}

// Over codepoints of UTF-8 text.
std::size_t EditDistance(std::string_view a, std::string_view b);

// Codepoints with leading/trailing whitespace removed and internal runs
// collapsed to one space.
std::u32string NormalizeForCer(std::string_view text);

// Throws EmptyReference when the normalized reference is empty.
double Cer(std::string_view reference, std::string_view hypothesis);

struct LanguageScore {
  std::uint64_t edit_distance_total = 0;
  std::uint64_t ref_char_total = 0;
  double cer = 0.0;
  std::size_t utterance_count = 0;
};

struct EvalReport {
  std::map<std::string, LanguageScore> per_language;
  double average_cer = 0.0;  // unweighted over languages

  std::string ToJson() const;
  std::string ToTable() const;
};

struct RefHyp {
  std::string reference;
  std::string hypothesis;
};

using CorpusPairs = std::map<std::string, std::vector<RefHyp>>;

// Micro-averaged CER per language, unweighted mean across languages.
// Throws EmptyLanguage for a language without pairs, EmptyReference when a
// language has no reference characters.
EvalReport EvaluateCorpus(const CorpusPairs& pairs);

// "utterance_id<TAB>language<TAB>text".
struct ReferenceEntry {
  std::string utterance_id;
  std::string language;
  std::string text;
};

// Throws ParseError (with line number) or InvalidArgument on a duplicate id.
std::vector<ReferenceEntry> ParseReferences(std::string_view text);

// "utterance_id<TAB>words<TAB>total_score<TAB>forced".
struct HypothesisEntry {
  std::string utterance_id;
  std::string words;  // space-separated
  double total_score = 0.0;
  bool forced_finalization = false;
};

std::string SerializeHypotheses(std::span<const HypothesisEntry> entries);
// Throws ParseError (with line number).
std::vector<HypothesisEntry> ParseHypotheses(std::string_view text);

// Surface words joined by single spaces.
std::string HypothesisText(const DecodeResult& result);

struct DevUtterance {
  std::string language;
  EmissionMatrix emissions;
  std::string reference;
};

struct GridPoint {
  double lm_weight = 0.0;
  double word_score = 0.0;
  double average_cer = 0.0;
};

struct TuneResult {
  std::vector<GridPoint> grid;  // alpha-major, beta-minor
  GridPoint best;

  std::string ToJson() const;
};

// Values lo, lo+step, ... up to hi inclusive (within step*1e-9). Throws
// InvalidArgument for step <= 0 or hi < lo.
std::vector<double> MakeGrid(double lo, double hi, double step);
// "LO:HI:STEP". Throws InvalidArgument.
std::vector<double> ParseGrid(std::string_view spec);

// Decodes every dev utterance at every (alpha, beta) of the grid. Best is
// the lowest average CER, ties to smaller alpha, then smaller beta. Throws
// InvalidArgument on an empty grid.
TuneResult GridSearch(std::span<const DevUtterance> dev, const LexiconTrie& trie,
                      const Lexicon& lexicon, const NGramModel* lm,
                      std::span<const double> lm_weights,
                      std::span<const double> word_scores,
                      const DecodeConfig& base, int jobs = 1);

// Decodes dev with one configuration and scores it.
EvalReport EvaluateDecoder(std::span<const DevUtterance> dev,
                           const LexiconBeamDecoder& decoder, int jobs = 1);

// Sentence-per-line text or a word-frequency table; "utterances" are lines
// or table rows respectively.
struct SweepCorpus {
  std::vector<std::string> sentences;
  std::vector<WordCount> word_counts;
  bool is_counts = false;

  std::size_t size() const {
    return is_counts ? word_counts.size() : sentences.size();
  }
};

struct SweepOptions {
  const RomanScheme* scheme = nullptr;  // built-in tables when null
  DecodeConfig lexicon_config;          // lm_weight ignored
  DecodeConfig lm_config;
  double discount = 0.5;
  int jobs = 1;
};

struct SweepRow {
  std::size_t size = 0;
  double lex_cer = 0.0;
  double unigram_cer = 0.0;
};

// For each size, builds a lexicon and unigram LM from the first size
// utterances and scores dev both without and with the LM. Throws
// InvalidArgument for non-ascending sizes and SizeExceedsCorpus.
std::vector<SweepRow> TextAmountSweep(const SweepCorpus& corpus,
                                      std::span<const std::size_t> sizes,
                                      std::span<const DevUtterance> dev,
                                      const SweepOptions& options);

// "size,lex_cer,1gram_cer" header plus one row per size.
std::string SweepCsv(std::span<const SweepRow> rows);

}  // namespace zsdec

#endif  // ZSDEC_EVALUATION_H_
