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

#include "zsdec/evaluation.h"

#include <unicode/uchar.h>
#include <unicode/unistr.h>

#include <cerrno>
#include <cmath>
#include <cstdlib>
#include <set>
#include <sstream>

#include "json.hpp"
#include "zsdec/errors.h"
#include "zsdec/io_util.h"
#include "zsdec/parallel.h"

namespace zsdec {

namespace {

std::u32string ToCodepoints(std::string_view text) {
  const icu::UnicodeString u = icu::UnicodeString::fromUTF8(
      icu::StringPiece(text.data(), static_cast<int32_t>(text.size())));
  std::u32string out;
  out.reserve(static_cast<std::size_t>(u.length()));
  for (int32_t i = 0; i < u.length(); i = u.moveIndex32(i, 1)) {
    out.push_back(static_cast<char32_t>(u.char32At(i)));
  }
  return out;
}

double ParseDouble(std::string_view field, std::size_t line_no) {
  const std::string s(field);
  char* end = nullptr;
  errno = 0;
  const double v = std::strtod(s.c_str(), &end);
  if (s.empty() || end != s.c_str() + s.size() || errno == ERANGE) {
    throw Error(ErrorKind::kParseError, "bad number '" + s + "'", line_no);
  }
  return v;
}

}  // namespace

std::size_t EditDistance(std::string_view a, std::string_view b) {
  const std::u32string ca = ToCodepoints(a);
  const std::u32string cb = ToCodepoints(b);
  return EditDistance<char32_t>(ca, cb);
}

std::u32string NormalizeForCer(std::string_view text) {
  std::u32string out;
  bool pending_space = false;
  for (char32_t c : ToCodepoints(text)) {
    if (u_isUWhiteSpace(static_cast<UChar32>(c))) {
      pending_space = !out.empty();
      continue;
    }
    if (pending_space) out.push_back(U' ');
    pending_space = false;
    out.push_back(c);
  }
  return out;
}

double Cer(std::string_view reference, std::string_view hypothesis) {
  const std::u32string ref = NormalizeForCer(reference);
  if (ref.empty()) {
    throw Error(ErrorKind::kEmptyReference, "reference is empty");
  }
  const std::u32string hyp = NormalizeForCer(hypothesis);
  return static_cast<double>(EditDistance<char32_t>(ref, hyp)) /
         static_cast<double>(ref.size());
}

EvalReport EvaluateCorpus(const CorpusPairs& pairs) {
  if (pairs.empty()) {
    throw Error(ErrorKind::kEmptyLanguage, "no languages to evaluate");
  }
  EvalReport report;
  double sum = 0.0;
  for (const auto& [language, list] : pairs) {
    if (list.empty()) {
      throw Error(ErrorKind::kEmptyLanguage,
                  "language '" + language + "' has no utterances");
    }
    LanguageScore score;
    for (const RefHyp& p : list) {
      const std::u32string ref = NormalizeForCer(p.reference);
      const std::u32string hyp = NormalizeForCer(p.hypothesis);
      score.edit_distance_total += EditDistance<char32_t>(ref, hyp);
      score.ref_char_total += ref.size();
    }
    if (score.ref_char_total == 0) {
      throw Error(ErrorKind::kEmptyReference,
                  "language '" + language + "' has only empty references");
    }
    score.utterance_count = list.size();
    score.cer = static_cast<double>(score.edit_distance_total) /
                static_cast<double>(score.ref_char_total);
    sum += score.cer;
    report.per_language.emplace(language, score);
  }
  report.average_cer = sum / static_cast<double>(report.per_language.size());
  return report;
}

std::string EvalReport::ToJson() const {
  nlohmann::ordered_json j;
  j["average_cer"] = average_cer;
  nlohmann::ordered_json langs = nlohmann::ordered_json::object();
  for (const auto& [language, s] : per_language) {
    langs[language] = {{"cer", s.cer},
                       {"edit_distance_total", s.edit_distance_total},
                       {"ref_char_total", s.ref_char_total},
                       {"utterance_count", s.utterance_count}};
  }
  j["per_language"] = std::move(langs);
  return j.dump(2) + "\n";
}

std::string EvalReport::ToTable() const {
  std::size_t width = 8;
  for (const auto& [language, s] : per_language) {
    width = std::max(width, language.size());
  }
  auto pad = [](std::string s, std::size_t w) {
    if (s.size() < w) s.append(w - s.size(), ' ');
    return s;
  };
  std::string out = pad("language", width) + "  utts  edits  chars  cer\n";
  for (const auto& [language, s] : per_language) {
    out += pad(language, width) + "  " +
           pad(std::to_string(s.utterance_count), 4) + "  " +
           pad(std::to_string(s.edit_distance_total), 5) + "  " +
           pad(std::to_string(s.ref_char_total), 5) + "  " +
           FormatFixed(s.cer * 100.0, 2) + "%\n";
  }
  out += pad("average", width) + "  " + std::string(20, ' ') +
         FormatFixed(average_cer * 100.0, 2) + "%\n";
  return out;
}

std::vector<ReferenceEntry> ParseReferences(std::string_view text) {
  std::vector<ReferenceEntry> entries;
  std::set<std::string> seen;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (ReadLine(in, &line)) {
    ++line_no;
    if (TrimAscii(line).empty()) continue;
    const auto fields = SplitTabs(line);
    if (fields.size() != 3 || fields[0].empty() || fields[1].empty()) {
      throw Error(ErrorKind::kParseError,
                  "expected utterance_id<TAB>language<TAB>text", line_no);
    }
    ReferenceEntry e{std::string(fields[0]), std::string(fields[1]),
                     std::string(fields[2])};
    if (!seen.insert(e.utterance_id).second) {
      throw Error(ErrorKind::kParseError,
                  "duplicate utterance id '" + e.utterance_id + "'", line_no);
    }
    entries.push_back(std::move(e));
  }
  return entries;
}

std::string SerializeHypotheses(std::span<const HypothesisEntry> entries) {
  std::string out;
  for (const auto& e : entries) {
    out += e.utterance_id + '\t' + e.words + '\t' +
           FormatFixed(e.total_score, 6) + '\t' +
           (e.forced_finalization ? "true" : "false") + '\n';
  }
  return out;
}

std::vector<HypothesisEntry> ParseHypotheses(std::string_view text) {
  std::vector<HypothesisEntry> entries;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (ReadLine(in, &line)) {
    ++line_no;
    if (TrimAscii(line).empty()) continue;
    const auto fields = SplitTabs(line);
    if (fields.size() != 4 || fields[0].empty()) {
      throw Error(ErrorKind::kParseError,
                  "expected utterance_id<TAB>words<TAB>score<TAB>forced",
                  line_no);
    }
    HypothesisEntry e;
    e.utterance_id = std::string(fields[0]);
    e.words = std::string(fields[1]);
    e.total_score = ParseDouble(fields[2], line_no);
    if (fields[3] == "true") {
      e.forced_finalization = true;
    } else if (fields[3] != "false") {
      throw Error(ErrorKind::kParseError, "forced flag must be true or false",
                  line_no);
    }
    entries.push_back(std::move(e));
  }
  return entries;
}

std::string HypothesisText(const DecodeResult& result) {
  std::string out;
  for (const auto& w : result.words) {
    if (!out.empty()) out += ' ';
    out += w;
  }
  return out;
}

std::vector<double> MakeGrid(double lo, double hi, double step) {
  if (!std::isfinite(lo) || !std::isfinite(hi) || !(step > 0.0) ||
      !std::isfinite(step) || hi < lo) {
    throw Error(ErrorKind::kInvalidArgument,
                "grid needs finite LO <= HI and STEP > 0");
  }
  const double span = (hi - lo) / step;
  const auto n = static_cast<std::size_t>(std::floor(span + 1e-9));
  if (n > 100000) {
    throw Error(ErrorKind::kInvalidArgument, "grid has too many points");
  }
  std::vector<double> grid;
  grid.reserve(n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    grid.push_back(lo + static_cast<double>(i) * step);
  }
  return grid;
}

std::vector<double> ParseGrid(std::string_view spec) {
  std::vector<double> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t colon = spec.find(':', start);
    const std::string field(spec.substr(start, colon == std::string_view::npos
                                                   ? std::string_view::npos
                                                   : colon - start));
    char* end = nullptr;
    const double v = std::strtod(field.c_str(), &end);
    if (field.empty() || end != field.c_str() + field.size()) {
      throw Error(ErrorKind::kInvalidArgument,
                  "grid must be LO:HI:STEP, got '" + std::string(spec) + "'");
    }
    parts.push_back(v);
    if (colon == std::string_view::npos) break;
    start = colon + 1;
  }
  if (parts.size() != 3) {
    throw Error(ErrorKind::kInvalidArgument,
                "grid must be LO:HI:STEP, got '" + std::string(spec) + "'");
  }
  return MakeGrid(parts[0], parts[1], parts[2]);
}

EvalReport EvaluateDecoder(std::span<const DevUtterance> dev,
                           const LexiconBeamDecoder& decoder, int jobs) {
  std::vector<std::string> hyps(dev.size());
  ParallelFor(dev.size(), jobs, [&](std::size_t i) {
    hyps[i] = HypothesisText(decoder.Decode(dev[i].emissions));
  });
  CorpusPairs pairs;
  for (std::size_t i = 0; i < dev.size(); ++i) {
    pairs[dev[i].language].push_back({dev[i].reference, std::move(hyps[i])});
  }
  return EvaluateCorpus(pairs);
}

TuneResult GridSearch(std::span<const DevUtterance> dev, const LexiconTrie& trie,
                      const Lexicon& lexicon, const NGramModel* lm,
                      std::span<const double> lm_weights,
                      std::span<const double> word_scores,
                      const DecodeConfig& base, int jobs) {
  if (lm_weights.empty() || word_scores.empty()) {
    throw Error(ErrorKind::kInvalidArgument, "grid search needs non-empty grids");
  }
  std::vector<LexiconBeamDecoder> decoders;
  TuneResult result;
  for (double a : lm_weights) {
    for (double b : word_scores) {
      DecodeConfig cfg = base;
      cfg.lm_weight = a;
      cfg.word_score = b;
      decoders.emplace_back(lexicon, trie, lm, cfg);
      result.grid.push_back({a, b, 0.0});
    }
  }
  const std::size_t points = decoders.size();
  std::vector<std::string> hyps(points * dev.size());
  ParallelFor(hyps.size(), jobs, [&](std::size_t k) {
    const std::size_t p = k / dev.size();
    const std::size_t u = k % dev.size();
    hyps[k] = HypothesisText(decoders[p].Decode(dev[u].emissions));
  });
  for (std::size_t p = 0; p < points; ++p) {
    CorpusPairs pairs;
    for (std::size_t u = 0; u < dev.size(); ++u) {
      pairs[dev[u].language].push_back(
          {dev[u].reference, std::move(hyps[p * dev.size() + u])});
    }
    result.grid[p].average_cer = EvaluateCorpus(pairs).average_cer;
  }
  result.best = result.grid.front();
  for (const GridPoint& g : result.grid) {
    const GridPoint& b = result.best;
    if (g.average_cer < b.average_cer ||
        (g.average_cer == b.average_cer &&
         (g.lm_weight < b.lm_weight ||
          (g.lm_weight == b.lm_weight && g.word_score < b.word_score)))) {
      result.best = g;
    }
  }
  return result;
}

std::string TuneResult::ToJson() const {
  nlohmann::ordered_json j;
  j["best"] = {{"lm_weight", best.lm_weight},
               {"word_score", best.word_score},
               {"average_cer", best.average_cer}};
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const GridPoint& g : grid) {
    rows.push_back({{"lm_weight", g.lm_weight},
                    {"word_score", g.word_score},
                    {"average_cer", g.average_cer}});
  }
  j["grid"] = std::move(rows);
  return j.dump(2) + "\n";
}

std::vector<SweepRow> TextAmountSweep(const SweepCorpus& corpus,
                                      std::span<const std::size_t> sizes,
                                      std::span<const DevUtterance> dev,
                                      const SweepOptions& options) {
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    if (sizes[i] == 0 || (i > 0 && sizes[i] <= sizes[i - 1])) {
      throw Error(ErrorKind::kInvalidArgument,
                  "sweep sizes must be positive and strictly ascending");
    }
    if (sizes[i] > corpus.size()) {
      throw Error(ErrorKind::kSizeExceedsCorpus,
                  "size " + std::to_string(sizes[i]) + " exceeds corpus of " +
                      std::to_string(corpus.size()));
    }
  }
  const RomanScheme builtin = RomanScheme::Builtin();
  const RomanScheme& scheme = options.scheme != nullptr ? *options.scheme : builtin;
  DecodeConfig lex_config = options.lexicon_config;
  lex_config.lm_weight = 0.0;

  std::vector<SweepRow> rows;
  for (std::size_t size : sizes) {
    std::vector<std::string> words;
    NGramModel lm = [&]() {
      if (corpus.is_counts) {
        NGramCounts counts;
        for (std::size_t i = 0; i < size; ++i) {
          const WordCount& wc = corpus.word_counts[i];
          words.push_back(wc.word);
          counts[{wc.word}] += wc.count;
        }
        return TrainNGramFromCounts(counts, 1, options.discount);
      }
      std::vector<std::vector<std::string>> sentences;
      for (std::size_t i = 0; i < size; ++i) {
        sentences.push_back(SplitWhitespace(corpus.sentences[i]));
        words.insert(words.end(), sentences.back().begin(),
                     sentences.back().end());
      }
      return TrainNGram(sentences, 1, options.discount);
    }();
    const Lexicon lexicon = BuildLexicon(words, scheme);
    const LexiconTrie trie(lexicon);
    const LexiconBeamDecoder lex_decoder(lexicon, trie, nullptr, lex_config);
    const LexiconBeamDecoder lm_decoder(lexicon, trie, &lm, options.lm_config);
    rows.push_back({size,
                    EvaluateDecoder(dev, lex_decoder, options.jobs).average_cer,
                    EvaluateDecoder(dev, lm_decoder, options.jobs).average_cer});
  }
  return rows;
}

std::string SweepCsv(std::span<const SweepRow> rows) {
  std::string out = "size,lex_cer,1gram_cer\n";
  for (const SweepRow& r : rows) {
    out += std::to_string(r.size) + ',' + FormatFixed(r.lex_cer, 6) + ',' +
           FormatFixed(r.unigram_cer, 6) + '\n';
  }
  return out;
}

}  // namespace zsdec
