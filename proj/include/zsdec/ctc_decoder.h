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

#ifndef ZSDEC_CTC_DECODER_H_
#define ZSDEC_CTC_DECODER_H_

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "zsdec/alphabet.h"
#include "zsdec/emissions.h"
#include "zsdec/lexicon.h"
#include "zsdec/ngram_lm.h"
#include "zsdec/romanizer.h"

namespace zsdec {

// ln(10): converts log10 LM scores into the natural-log search domain.
inline constexpr double kLn10 = 2.302585092994045684;

struct DecodeConfig {
  int beam_size = 2000;
  double beam_threshold = 25.0;  // natural-log margin below the best
  double lm_weight = 0.0;        // alpha
  double word_score = 0.0;       // beta, added per emitted word
  bool apply_eos = true;         // add the </s> LM term at the end

  // Throws InvalidArgument.
  void Validate() const;
};

struct DecodeResult {
  std::vector<std::string> words;
  std::vector<WordId> word_ids;
  std::string romanized;  // concatenated spellings, e.g. "el|corre|"
  double total_score = 0.0;
  double am_score = 0.0;  // natural log
  double lm_score = 0.0;  // log10, </s> included when applied
  int word_count = 0;
  // No hypothesis ended on a word boundary; the best partial word was
  // discarded.
  bool forced_finalization = false;
};

// total = am + alpha * ln(10) * lm + beta * words.
double CombineScores(double am_score, double lm_score, int word_count,
                     double lm_weight, double word_score);

// Per-frame argmax (lowest index wins ties), repeats collapsed, blanks
// removed, separators normalized.
RomanizedText GreedyDecode(const EmissionMatrix& m);

// Best (Viterbi) CTC alignment score of symbols against the whole matrix.
// Returns kNegInf when no alignment exists. symbols must be non-blank.
double BestAlignmentScore(const EmissionMatrix& m,
                          std::span<const Symbol> symbols);

// Frame-synchronous lexicon-constrained CTC beam search with optional n-gram
// shallow fusion. Holds references; lexicon, trie and model must outlive
// it. Decode() is const and may run concurrently on different inputs.
class LexiconBeamDecoder {
 public:
  // lm may be null. Throws EmptyLexicon or InvalidArgument.
  LexiconBeamDecoder(const Lexicon& lexicon, const LexiconTrie& trie,
                     const NGramModel* lm, DecodeConfig config);

  DecodeResult Decode(const EmissionMatrix& m) const;

  const DecodeConfig& config() const { return config_; }

 private:
  const Lexicon& lexicon_;
  const LexiconTrie& trie_;
  const NGramModel* lm_;
  DecodeConfig config_;
  std::vector<LmWordId> lm_ids_;  // lexicon word id -> LM word id
};

DecodeResult BeamDecode(const EmissionMatrix& m, const LexiconTrie& trie,
                        const Lexicon& lexicon, const NGramModel* lm,
                        const DecodeConfig& config);

struct OracleOptions {
  double lm_weight = 0.0;
  double word_score = 0.0;
  int max_words = 1;
  bool apply_eos = true;
  // Also consider the empty transcript (the all-blank path).
  bool allow_empty = true;
};

struct OracleResult {
  DecodeResult best;
  double runner_up_score = kNegInf;
  // False when every candidate is acoustically impossible; best then has
  // no words, the sentinel score and forced_finalization set.
  bool feasible = true;
};

// Upper bound on enumerated word sequences.
inline constexpr std::size_t kOracleMaxSequences = 1000000;

// Exhaustive search over word sequences of up to max_words words, each
// scored by BestAlignmentScore of its concatenated spellings plus LM and
// word-score terms. Ties go to the lexicographically smallest word-id
// sequence. Throws SearchSpaceTooLarge.
OracleResult OracleDecode(const EmissionMatrix& m, const Lexicon& lexicon,
                          const NGramModel* lm, const OracleOptions& options);

}  // namespace zsdec

#endif  // ZSDEC_CTC_DECODER_H_
