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

#include "zsdec/ctc_decoder.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <unordered_map>

#include "zsdec/errors.h"

namespace zsdec {

namespace {

constexpr double kMinusInf = -std::numeric_limits<double>::infinity();

// Anything this low went through a sentinel entry.
constexpr double kInfeasible = 0.5 * static_cast<double>(kNegInf);

struct Hypothesis {
  double am_score = 0.0;
  double lm_score = 0.0;
  double total = 0.0;
  int word_count = 0;
  LexiconTrie::NodeId node = 0;
  LmState lm_state;
  Symbol last = kBlank;
  std::int32_t history = -1;  // index into the word-link arena
};

struct HypKey {
  LexiconTrie::NodeId node;
  LmState lm_state;
  Symbol last;
  bool operator==(const HypKey&) const = default;
};

struct HypKeyHash {
  std::size_t operator()(const HypKey& k) const {
    return (k.lm_state.Hash() * 31 + static_cast<std::size_t>(k.node)) * 31 +
           k.last;
  }
};

struct WordLink {
  WordId word;
  std::int32_t parent;
};

void CheckVocab(const EmissionMatrix& m) {
  if (m.vocab_size() != kAlphabetSize ||
      m.data().size() != m.frames() * kAlphabetSize) {
    throw Error(ErrorKind::kDimensionMismatch,
                "emission vocabulary does not match the canonical alphabet");
  }
}

}  // namespace

void DecodeConfig::Validate() const {
  if (beam_size < 1) {
    throw Error(ErrorKind::kInvalidArgument, "beam_size must be >= 1");
  }
  if (!(beam_threshold > 0.0)) {
    throw Error(ErrorKind::kInvalidArgument, "beam_threshold must be > 0");
  }
  if (!(lm_weight >= 0.0) || !std::isfinite(lm_weight)) {
    throw Error(ErrorKind::kInvalidArgument, "lm_weight must be >= 0");
  }
  if (!std::isfinite(word_score)) {
    throw Error(ErrorKind::kInvalidArgument, "word_score must be finite");
  }
}

double CombineScores(double am_score, double lm_score, int word_count,
                     double lm_weight, double word_score) {
  return am_score + lm_weight * kLn10 * lm_score +
         word_score * static_cast<double>(word_count);
}

RomanizedText GreedyDecode(const EmissionMatrix& m) {
  std::vector<Symbol> collapsed;
  Symbol prev = kBlank;
  for (std::size_t t = 0; t < m.frames(); ++t) {
    const auto row = m.row(t);
    Symbol best = 0;
    for (Symbol v = 1; v < kAlphabetSize; ++v) {
      if (row[v] > row[best]) best = v;
    }
    if (best != kBlank && best != prev) {
      // Separator normalization: no leading or doubled '|'.
      if (best != kSeparator ||
          (!collapsed.empty() && collapsed.back() != kSeparator)) {
        collapsed.push_back(best);
      }
    }
    prev = best;
  }
  if (!collapsed.empty() && collapsed.back() == kSeparator) collapsed.pop_back();
  return RomanizedText(std::move(collapsed), {});
}

double BestAlignmentScore(const EmissionMatrix& m,
                          std::span<const Symbol> symbols) {
  const std::size_t frames = m.frames();
  if (symbols.empty()) {
    double total = 0.0;
    for (std::size_t t = 0; t < frames; ++t) total += m.at(t, kBlank);
    return total <= kInfeasible ? static_cast<double>(kNegInf) : total;
  }
  if (frames == 0) return kNegInf;
  // Blank-interleaved label sequence: b s1 b s2 ... sN b.
  const std::size_t len = 2 * symbols.size() + 1;
  std::vector<Symbol> ext(len, kBlank);
  for (std::size_t i = 0; i < symbols.size(); ++i) ext[2 * i + 1] = symbols[i];

  std::vector<double> prev(len, kMinusInf), cur(len, kMinusInf);
  prev[0] = m.at(0, ext[0]);
  prev[1] = m.at(0, ext[1]);
  for (std::size_t t = 1; t < frames; ++t) {
    for (std::size_t j = 0; j < len; ++j) {
      double best = prev[j];
      if (j >= 1) best = std::max(best, prev[j - 1]);
      if (j >= 2 && ext[j] != kBlank && ext[j] != ext[j - 2]) {
        best = std::max(best, prev[j - 2]);
      }
      cur[j] = best == kMinusInf ? kMinusInf : best + m.at(t, ext[j]);
    }
    std::swap(prev, cur);
  }
  const double score = std::max(prev[len - 1], prev[len - 2]);
  return score <= kInfeasible ? static_cast<double>(kNegInf) : score;
}

LexiconBeamDecoder::LexiconBeamDecoder(const Lexicon& lexicon,
                                       const LexiconTrie& trie,
                                       const NGramModel* lm,
                                       DecodeConfig config)
    : lexicon_(lexicon), trie_(trie), lm_(lm), config_(config) {
  if (lexicon_.empty()) {
    throw Error(ErrorKind::kEmptyLexicon, "cannot decode with an empty lexicon");
  }
  config_.Validate();
  if (lm_ != nullptr) {
    lm_ids_.reserve(lexicon_.size());
    for (const auto& e : lexicon_.entries()) lm_ids_.push_back(lm_->Index(e.word));
  }
}

DecodeResult LexiconBeamDecoder::Decode(const EmissionMatrix& m) const {
  CheckVocab(m);
  const double alpha = lm_ != nullptr ? config_.lm_weight : 0.0;
  const double beta = config_.word_score;
  const LexiconTrie::NodeId root = trie_.root();

  std::vector<WordLink> links;
  std::vector<Hypothesis> beam;
  {
    Hypothesis start;
    start.node = root;
    if (lm_ != nullptr) start.lm_state = lm_->StartState();
    beam.push_back(start);
  }

  std::vector<Hypothesis> next;
  std::unordered_map<HypKey, std::size_t, HypKeyHash> slot;
  auto push = [&](const Hypothesis& h) {
    const HypKey key{h.node, h.lm_state, h.last};
    auto [it, inserted] = slot.try_emplace(key, next.size());
    if (inserted) {
      next.push_back(h);
    } else if (h.total > next[it->second].total) {
      next[it->second] = h;
    }
  };

  for (std::size_t t = 0; t < m.frames(); ++t) {
    const auto row = m.row(t);
    next.clear();
    slot.clear();
    slot.reserve(beam.size() * 4);
    for (const Hypothesis& h : beam) {
      {
        Hypothesis b = h;
        b.am_score += row[kBlank];
        b.total += row[kBlank];
        b.last = kBlank;
        push(b);
      }
      if (h.last != kBlank) {
        Hypothesis r = h;
        r.am_score += row[h.last];
        r.total += row[h.last];
        push(r);
      }
      for (Symbol s = 1; s < kAlphabetSize; ++s) {
        if (s == h.last) continue;
        const LexiconTrie::NodeId child = trie_.Child(h.node, s);
        if (child == LexiconTrie::kNoNode) continue;
        Hypothesis c = h;
        c.am_score += row[s];
        c.last = s;
        const auto words = trie_.Words(child);
        if (words.empty()) {
          c.node = child;
          c.total = CombineScores(c.am_score, c.lm_score, c.word_count, alpha, beta);
          push(c);
          continue;
        }
        // Terminal node: commit each homophone and return to the root.
        for (WordId w : words) {
          Hypothesis committed = c;
          committed.node = root;
          committed.word_count += 1;
          if (lm_ != nullptr) {
            committed.lm_score += lm_->Score(
                h.lm_state, lm_ids_[static_cast<std::size_t>(w)],
                &committed.lm_state);
          }
          committed.total =
              CombineScores(committed.am_score, committed.lm_score,
                            committed.word_count, alpha, beta);
          const HypKey key{committed.node, committed.lm_state, committed.last};
          auto it = slot.find(key);
          if (it != slot.end() && !(committed.total > next[it->second].total)) {
            continue;
          }
          committed.history = static_cast<std::int32_t>(links.size());
          links.push_back({w, h.history});
          push(committed);
        }
      }
    }

    double best = kMinusInf;
    for (const auto& h : next) best = std::max(best, h.total);
    const double floor = best - config_.beam_threshold;
    std::vector<std::size_t> order;
    order.reserve(next.size());
    for (std::size_t i = 0; i < next.size(); ++i) {
      if (next[i].total >= floor) order.push_back(i);
    }
    auto better = [&](std::size_t a, std::size_t b) {
      if (next[a].total != next[b].total) return next[a].total > next[b].total;
      return a < b;
    };
    const auto keep = std::min(order.size(),
                               static_cast<std::size_t>(config_.beam_size));
    if (order.size() > keep) {
      std::nth_element(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(keep),
                       order.end(), better);
      order.resize(keep);
    }
    std::sort(order.begin(), order.end(), better);
    beam.clear();
    for (std::size_t i : order) beam.push_back(next[i]);
  }

  auto final_score = [&](const Hypothesis& h, double* eos) {
    *eos = 0.0;
    if (lm_ != nullptr && config_.apply_eos) {
      *eos = lm_->Score(h.lm_state, kEosId, nullptr);
    }
    return CombineScores(h.am_score, h.lm_score + *eos, h.word_count, alpha,
                         beta);
  };

  const Hypothesis* chosen = nullptr;
  double chosen_total = kMinusInf;
  double chosen_eos = 0.0;
  for (const auto& h : beam) {
    if (h.node != root) continue;
    double eos = 0.0;
    const double total = final_score(h, &eos);
    if (chosen == nullptr || total > chosen_total) {
      chosen = &h;
      chosen_total = total;
      chosen_eos = eos;
    }
  }
  DecodeResult result;
  if (chosen == nullptr) {
    // Beam is never empty: the blank extension always survives pruning of
    // the best hypothesis.
    chosen = &beam.front();
    chosen_total = final_score(*chosen, &chosen_eos);
    result.forced_finalization = true;
  }

  std::vector<WordId> ids;
  for (std::int32_t link = chosen->history; link >= 0;
       link = links[static_cast<std::size_t>(link)].parent) {
    ids.push_back(links[static_cast<std::size_t>(link)].word);
  }
  std::reverse(ids.begin(), ids.end());
  for (WordId w : ids) {
    const auto& e = lexicon_.entry(w);
    result.words.push_back(e.word);
    result.romanized += SymbolsToString(e.spelling);
  }
  result.word_ids = std::move(ids);
  result.am_score = chosen->am_score;
  result.lm_score = chosen->lm_score + chosen_eos;
  result.word_count = chosen->word_count;
  result.total_score = chosen_total;
  return result;
}

DecodeResult BeamDecode(const EmissionMatrix& m, const LexiconTrie& trie,
                        const Lexicon& lexicon, const NGramModel* lm,
                        const DecodeConfig& config) {
  return LexiconBeamDecoder(lexicon, trie, lm, config).Decode(m);
}

}  // namespace zsdec
