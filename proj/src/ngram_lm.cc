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

#include "zsdec/ngram_lm.h"

#include <cmath>

#include "ngram_builder.h"
#include "zsdec/errors.h"
#include "zsdec/io_util.h"

namespace zsdec {

NGramCounts ReadNGramCounts(std::istream& in) {
  NGramCounts counts;
  std::string line;
  std::size_t line_no = 0;
  while (ReadLine(in, &line)) {
    ++line_no;
    if (TrimAscii(line).empty()) continue;
    auto fields = SplitTabs(line);
    if (fields.size() != 2) {
      throw Error(ErrorKind::kParseError, "expected ngram<TAB>count", line_no);
    }
    std::vector<std::string> words = SplitWhitespace(fields[0]);
    if (words.empty() || words.size() > NGramModel::kMaxOrder) {
      throw Error(ErrorKind::kParseError, "n-gram must have 1-3 words",
                  line_no);
    }
    const std::string_view text = TrimAscii(fields[1]);
    std::uint64_t value = 0;
    std::size_t used = 0;
    try {
      value = std::stoull(std::string(text), &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != text.size() || value == 0 || text[0] == '-') {
      throw Error(ErrorKind::kParseError,
                  "count must be a positive integer: " + std::string(text),
                  line_no);
    }
    counts[std::move(words)] += value;
  }
  if (in.bad()) throw Error(ErrorKind::kIoFailure, "count stream unreadable");
  return counts;
}

NGramModel::Key NGramModel::MakeKey(std::span<const LmWordId> ngram) {
  Key key;
  key.fill(-1);
  for (std::size_t i = 0; i < ngram.size(); ++i) key[i] = ngram[i];
  return key;
}

LmWordId NGramModel::Intern(std::string_view word) {
  auto it = index_.find(std::string(word));
  if (it != index_.end()) return it->second;
  const auto id = static_cast<LmWordId>(vocab_.size());
  vocab_.emplace_back(word);
  index_.emplace(std::string(word), id);
  return id;
}

NGramModel::Entry& NGramModel::MutableEntry(std::span<const LmWordId> ngram) {
  return tables_[ngram.size() - 1][MakeKey(ngram)];
}

LmWordId NGramModel::Index(std::string_view word) const {
  auto it = index_.find(std::string(word));
  if (it == index_.end()) return kUnkId;
  const LmWordId id = it->second;
  return predicted_[static_cast<std::size_t>(id)] ? id : kUnkId;
}

LmState NGramModel::StartState() const {
  LmState state;
  if (order_ > 1) {
    state.context[0] = kBosId;
    state.length = 1;
  }
  return state;
}

const NGramModel::Entry* NGramModel::Find(
    std::span<const LmWordId> ngram) const {
  if (ngram.empty() || ngram.size() > static_cast<std::size_t>(order_)) {
    return nullptr;
  }
  const Table& table = tables_[ngram.size() - 1];
  auto it = table.find(MakeKey(ngram));
  return it == table.end() ? nullptr : &it->second;
}

double NGramModel::Score(const LmState& state, LmWordId word,
                         LmState* next) const {
  if (word < 0 || static_cast<std::size_t>(word) >= predicted_.size() ||
      !predicted_[static_cast<std::size_t>(word)]) {
    word = kUnkId;
  }
  std::array<LmWordId, kMaxOrder> ngram{};
  const int len = state.length;
  double backoff = 0.0;
  double score = 0.0;
  bool found = false;
  for (int k = len; k >= 0; --k) {
    for (int i = 0; i < k; ++i) ngram[i] = state.context[len - k + i];
    ngram[k] = word;
    const Entry* e = Find(std::span<const LmWordId>(ngram.data(), k + 1));
    if (e != nullptr && e->has_prob) {
      score = backoff + e->log_prob;
      found = true;
      break;
    }
    if (k > 0) {
      const Entry* ctx = Find(std::span<const LmWordId>(ngram.data(), k));
      if (ctx != nullptr && ctx->has_backoff) backoff += ctx->log_backoff;
    }
  }
  if (!found) score = backoff + kMissingUnkLog10;

  if (next != nullptr) {
    LmState out;
    const int keep = order_ - 1;
    if (keep > 0) {
      std::array<LmWordId, kMaxOrder> history{};
      int n = 0;
      for (int i = 0; i < len; ++i) history[n++] = state.context[i];
      history[n++] = word;
      const int start = std::max(0, n - keep);
      for (int i = start; i < n; ++i) out.context[out.length++] = history[i];
    }
    *next = out;
  }
  return score;
}

std::pair<LmState, double> NGramModel::ScoreWord(const LmState& state,
                                                 std::string_view word) const {
  LmState next;
  const double score = Score(state, Index(word), &next);
  return {next, score};
}

double NGramModel::ScoreSentence(std::span<const std::string> words,
                                 bool with_eos) const {
  LmState state = StartState();
  double total = 0.0;
  for (const auto& w : words) {
    LmState next;
    total += Score(state, Index(w), &next);
    state = next;
  }
  if (with_eos) total += Score(state, kEosId, nullptr);
  return total;
}

std::size_t NGramModel::num_entries(int n) const {
  if (n < 1 || n > order_) return 0;
  return tables_[static_cast<std::size_t>(n - 1)].size();
}

void NGramModel::ForEachEntry(
    int n,
    const std::function<void(std::span<const LmWordId>, const Entry&)>& fn)
    const {
  if (n < 1 || n > order_) return;
  for (const auto& [key, entry] : tables_[static_cast<std::size_t>(n - 1)]) {
    fn(std::span<const LmWordId>(key.data(), static_cast<std::size_t>(n)),
       entry);
  }
}

std::vector<LmWordId> NGramModel::PredictedWords() const {
  std::vector<LmWordId> out;
  for (std::size_t i = 0; i < predicted_.size(); ++i) {
    if (predicted_[i]) out.push_back(static_cast<LmWordId>(i));
  }
  return out;
}

NGramModelBuilder::NGramModelBuilder(int order,
                                     std::optional<double> discount) {
  model_.order_ = order;
  model_.discount_ = discount;
  model_.Intern(kBosWord);
  model_.Intern(kEosWord);
  model_.Intern(kUnkWord);
}

bool NGramModelBuilder::HasWord(std::string_view word) const {
  return model_.index_.count(std::string(word)) != 0;
}

LmWordId NGramModelBuilder::WordId(std::string_view word) const {
  return model_.index_.at(std::string(word));
}

void NGramModelBuilder::RefreshPredicted() {
  model_.predicted_.assign(model_.vocab_.size(), false);
  for (const auto& [key, entry] : model_.tables_[0]) {
    if (entry.has_prob && key[0] != kBosId) {
      model_.predicted_[static_cast<std::size_t>(key[0])] = true;
    }
  }
}

NGramModel NGramModelBuilder::Release() {
  RefreshPredicted();
  return std::move(model_);
}

namespace {

using IdNGram = std::vector<LmWordId>;
using IdCounts = std::array<std::map<IdNGram, std::uint64_t>,
                            NGramModel::kMaxOrder>;

void CheckArguments(int order, double discount) {
  if (order < 1 || order > NGramModel::kMaxOrder) {
    throw Error(ErrorKind::kInvalidArgument,
                "order must be 1-3, got " + std::to_string(order));
  }
  if (!(discount > 0.0 && discount < 1.0)) {
    throw Error(ErrorKind::kInvalidDiscount,
                "discount must lie in (0, 1), got " + std::to_string(discount));
  }
}

// Fills the builder's tables from integer counts. counts[0] holds predicted
// unigram counts (<s> excluded).
NGramModel Estimate(NGramModelBuilder& builder, const IdCounts& counts,
                    int order, double discount) {
  std::uint64_t total = 0;
  for (const auto& [ngram, c] : counts[0]) total += c;
  const double denom = static_cast<double>(total) + 1.0;

  bool unk_seen = false;
  for (const auto& [ngram, c] : counts[0]) {
    auto& e = builder.MutableEntry(ngram);
    double mass = static_cast<double>(c);
    if (ngram[0] == kUnkId) {
      mass += 1.0;
      unk_seen = true;
    }
    e.log_prob = std::log10(mass / denom);
    e.has_prob = true;
  }
  if (!unk_seen) {
    auto& e = builder.MutableEntry(IdNGram{kUnkId});
    e.log_prob = std::log10(1.0 / denom);
    e.has_prob = true;
  }
  builder.RefreshPredicted();

  for (int n = 2; n <= order; ++n) {
    const auto& layer = counts[static_cast<std::size_t>(n - 1)];
    // Context totals and distinct-continuation counts.
    std::map<IdNGram, std::pair<std::uint64_t, std::uint64_t>> contexts;
    for (const auto& [ngram, c] : layer) {
      auto& ctx = contexts[IdNGram(ngram.begin(), ngram.end() - 1)];
      ctx.first += c;
      ctx.second += 1;
    }
    // Lower-order lookups touch only orders < n.
    std::vector<std::pair<const IdNGram*, double>> probs;
    probs.reserve(layer.size());
    for (const auto& [ngram, c] : layer) {
      const auto& [ctx_total, ctx_types] =
          contexts[IdNGram(ngram.begin(), ngram.end() - 1)];
      const double ctx_count = static_cast<double>(ctx_total);
      const double lambda =
          discount * static_cast<double>(ctx_types) / ctx_count;
      LmState lower;
      for (std::size_t i = 1; i + 1 < ngram.size(); ++i) {
        lower.context[lower.length++] = ngram[i];
      }
      const double p_lower =
          std::pow(10.0, builder.model().Score(lower, ngram.back(), nullptr));
      const double p =
          std::max(static_cast<double>(c) - discount, 0.0) / ctx_count +
          lambda * p_lower;
      probs.emplace_back(&ngram, p);
    }
    for (const auto& [ngram, p] : probs) {
      auto& e = builder.MutableEntry(*ngram);
      e.log_prob = std::log10(p);
      e.has_prob = true;
    }
    for (const auto& [ctx, stats] : contexts) {
      auto& e = builder.MutableEntry(ctx);
      e.log_backoff = std::log10(discount * static_cast<double>(stats.second) /
                                 static_cast<double>(stats.first));
      e.has_backoff = true;
    }
  }
  return builder.Release();
}

}  // namespace

NGramModel TrainNGram(const std::vector<std::vector<std::string>>& sentences,
                      int order, double discount) {
  CheckArguments(order, discount);
  NGramModelBuilder builder(order, discount);
  IdCounts counts;
  std::size_t word_tokens = 0;
  std::vector<LmWordId> padded;
  for (const auto& sentence : sentences) {
    padded.assign(1, kBosId);
    for (const auto& w : sentence) {
      if (w == kBosWord || w == kEosWord) continue;
      padded.push_back(builder.Intern(w));
      ++word_tokens;
    }
    padded.push_back(kEosId);
    for (int n = 1; n <= order; ++n) {
      for (std::size_t start = 0; start + n <= padded.size(); ++start) {
        // Unigrams count predicted tokens only.
        if (n == 1 && start == 0) continue;
        IdNGram ngram(padded.begin() + static_cast<std::ptrdiff_t>(start),
                      padded.begin() + static_cast<std::ptrdiff_t>(start + n));
        ++counts[static_cast<std::size_t>(n - 1)][ngram];
      }
    }
  }
  if (word_tokens == 0) {
    throw Error(ErrorKind::kEmptyCorpus, "training corpus has no words");
  }
  return Estimate(builder, counts, order, discount);
}

NGramModel TrainNGramFromCounts(const NGramCounts& counts, int order,
                                double discount) {
  CheckArguments(order, discount);
  NGramModelBuilder builder(order, discount);
  IdCounts id_counts;
  for (const auto& [words, c] : counts) {
    if (words.size() > static_cast<std::size_t>(order)) continue;
    IdNGram ngram;
    for (const auto& w : words) ngram.push_back(builder.Intern(w));
    if (ngram.back() == kBosId) {
      throw Error(ErrorKind::kInvalidCounts,
                  "<s> cannot be a predicted word");
    }
    id_counts[words.size() - 1][ngram] += c;
  }
  if (id_counts[0].empty()) {
    throw Error(ErrorKind::kEmptyCorpus, "count table has no unigrams");
  }
  for (std::size_t n = 1; n < id_counts.size(); ++n) {
    for (const auto& [ngram, c] : id_counts[n]) {
      IdNGram ctx(ngram.begin(), ngram.end() - 1);
      const bool is_bos = ctx.size() == 1 && ctx[0] == kBosId;
      const bool ctx_ok = is_bos || id_counts[n - 1].count(ctx) != 0;
      const bool word_ok = id_counts[0].count(IdNGram{ngram.back()}) != 0;
      if (!ctx_ok || !word_ok) {
        std::string text;
        for (LmWordId id : ngram) {
          if (!text.empty()) text += ' ';
          text += builder.model().word(id);
        }
        throw Error(ErrorKind::kInvalidCounts,
                    "'" + text + "' lacks a count for its " +
                        (ctx_ok ? "final word" : "context"));
      }
    }
  }
  return Estimate(builder, id_counts, order, discount);
}

}  // namespace zsdec
