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

#include <algorithm>
#include <string>
#include <vector>

#include "zsdec/ctc_decoder.h"
#include "zsdec/errors.h"

namespace zsdec {

namespace {

std::size_t CountSequences(std::size_t vocab, int max_words, bool allow_empty) {
  std::size_t total = allow_empty ? 1 : 0;
  std::size_t layer = 1;
  for (int n = 1; n <= max_words; ++n) {
    if (vocab != 0 && layer > kOracleMaxSequences / vocab) {
      return kOracleMaxSequences + 1;
    }
    layer *= vocab;
    total += layer;
    if (total > kOracleMaxSequences) return total;
  }
  return total;
}

}  // namespace

OracleResult OracleDecode(const EmissionMatrix& m, const Lexicon& lexicon,
                          const NGramModel* lm, const OracleOptions& options) {
  if (options.max_words < 0) {
    throw Error(ErrorKind::kInvalidArgument, "max_words must be >= 0");
  }
  if (CountSequences(lexicon.size(), options.max_words, options.allow_empty) >
      kOracleMaxSequences) {
    throw Error(ErrorKind::kSearchSpaceTooLarge,
                "oracle enumeration exceeds " +
                    std::to_string(kOracleMaxSequences) + " sequences");
  }
  const double alpha = lm != nullptr ? options.lm_weight : 0.0;

  OracleResult result;
  result.feasible = false;
  result.best.total_score = kNegInf;
  result.best.am_score = kNegInf;
  result.best.forced_finalization = true;
  bool have_best = false;

  std::vector<WordId> ids;
  auto evaluate = [&]() {
    std::vector<Symbol> symbols;
    std::vector<std::string> words;
    for (WordId w : ids) {
      const auto& e = lexicon.entry(w);
      symbols.insert(symbols.end(), e.spelling.begin(), e.spelling.end());
      words.push_back(e.word);
    }
    const double am = BestAlignmentScore(m, symbols);
    if (am <= static_cast<double>(kNegInf)) return;
    const double lm_score =
        lm != nullptr ? lm->ScoreSentence(words, options.apply_eos) : 0.0;
    const int count = static_cast<int>(ids.size());
    const double total =
        CombineScores(am, lm_score, count, alpha, options.word_score);
    const bool wins =
        !have_best || total > result.best.total_score ||
        (total == result.best.total_score &&
         std::lexicographical_compare(ids.begin(), ids.end(),
                                      result.best.word_ids.begin(),
                                      result.best.word_ids.end()));
    if (!wins) {
      result.runner_up_score = std::max(result.runner_up_score, total);
      return;
    }
    if (have_best) {
      result.runner_up_score =
          std::max(result.runner_up_score, result.best.total_score);
    }
    have_best = true;
    result.feasible = true;
    DecodeResult& best = result.best;
    best.words = std::move(words);
    best.word_ids = ids;
    best.romanized = SymbolsToString(symbols);
    best.total_score = total;
    best.am_score = am;
    best.lm_score = lm_score;
    best.word_count = count;
    best.forced_finalization = false;
  };

  if (options.allow_empty) evaluate();
  const auto vocab = static_cast<WordId>(lexicon.size());
  for (int n = 1; n <= options.max_words && vocab > 0; ++n) {
    ids.assign(static_cast<std::size_t>(n), 0);
    while (true) {
      evaluate();
      // Odometer increment, last position fastest.
      int pos = n - 1;
      while (pos >= 0 && ++ids[static_cast<std::size_t>(pos)] == vocab) {
        ids[static_cast<std::size_t>(pos)] = 0;
        --pos;
      }
      if (pos < 0) break;
    }
  }
  return result;
}

}  // namespace zsdec
