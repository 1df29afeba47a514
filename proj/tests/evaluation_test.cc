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

#include <cmath>
#include <random>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "json.hpp"
#include "test_util.h"
#include "zsdec/alphabet.h"

namespace zsdec {
namespace {

using ::zsdec::testing::ThrowsKind;

// Full-table quadratic DP, independent of the rolling-row implementation.
std::size_t ReferenceDistance(const std::string& a, const std::string& b) {
  std::vector<std::vector<std::size_t>> d(a.size() + 1,
                                          std::vector<std::size_t>(b.size() + 1));
  for (std::size_t i = 0; i <= a.size(); ++i) d[i][0] = i;
  for (std::size_t j = 0; j <= b.size(); ++j) d[0][j] = j;
  for (std::size_t i = 1; i <= a.size(); ++i) {
    for (std::size_t j = 1; j <= b.size(); ++j) {
      d[i][j] = std::min({d[i - 1][j] + 1, d[i][j - 1] + 1,
                          d[i - 1][j - 1] + (a[i - 1] != b[j - 1])});
    }
  }
  return d[a.size()][b.size()];
}

std::string RandomAscii(std::mt19937_64& rng, int max_len, char hi = 'd') {
  std::uniform_int_distribution<int> len(0, max_len), c('a', hi);
  std::string s;
  for (int n = len(rng); n > 0; --n) s += static_cast<char>(c(rng));
  return s;
}

TEST(EditDistanceTest, Examples) {
  EXPECT_EQ(EditDistance("abc", "abc"), 0u);
  EXPECT_EQ(EditDistance("kitten", "sitting"), 3u);
  EXPECT_EQ(EditDistance("", "ab"), 2u);
  EXPECT_EQ(EditDistance("ñu", "nu"), 1u);
}

TEST(EditDistanceTest, SymbolSequences) {
  const auto a = StringToSymbols("el|gato"), b = StringToSymbols("el|pato");
  EXPECT_EQ(EditDistance<Symbol>(a, b), 1u);
}

TEST(EditDistancePropertyTest, MetricAxiomsAndReference) {
  std::mt19937_64 rng(2024);
  for (int i = 0; i < 2000; ++i) {
    const std::string a = RandomAscii(rng, 10), b = RandomAscii(rng, 10),
                      c = RandomAscii(rng, 10);
    const std::size_t ab = EditDistance(a, b);
    ASSERT_EQ(ab, ReferenceDistance(a, b));
    ASSERT_EQ(ab, EditDistance(b, a));
    ASSERT_EQ(ab == 0, a == b);
    ASSERT_LE(EditDistance(a, c), ab + EditDistance(b, c));
  }
}

TEST(CerTest, Examples) {
  EXPECT_NEAR(Cer("abc", "axc"), 1.0 / 3.0, 1e-12);
  EXPECT_EQ(Cer("el gato", "el gato"), 0.0);
  EXPECT_EQ(Cer("ab", ""), 1.0);
  EXPECT_EQ(Cer("ab", "xyzw"), 2.0);
  EXPECT_EQ(Cer("  el   gato ", "el gato"), 0.0);
  EXPECT_TRUE(ThrowsKind([] { Cer("  ", "a"); }, ErrorKind::kEmptyReference));
}

TEST(EvaluateCorpusTest, UnweightedAverage) {
  CorpusPairs pairs;
  pairs["a"] = {{"abcdefghij", "abcdefghix"}};
  pairs["b"] = {{"abcdefghij", "abcdefgxyz"}};
  const EvalReport r = EvaluateCorpus(pairs);
  EXPECT_NEAR(r.per_language.at("a").cer, 0.1, 1e-12);
  EXPECT_NEAR(r.per_language.at("b").cer, 0.3, 1e-12);
  EXPECT_NEAR(r.average_cer, 0.2, 1e-12);
}

TEST(EvaluateCorpusTest, SinglePerfectLanguage) {
  EXPECT_EQ(EvaluateCorpus({{"x", {{"abc", "abc"}}}}).average_cer, 0.0);
}

TEST(EvaluateCorpusTest, SmallLanguageWeighsEqually) {
  CorpusPairs pairs;
  pairs["A"] = {{"ab", "xy"}};
  pairs["B"] = std::vector<RefHyp>(100, {"ab", "ab"});
  EXPECT_NEAR(EvaluateCorpus(pairs).average_cer, 0.5, 1e-12);
}

TEST(EvaluateCorpusTest, MicroAveragesWithinLanguage) {
  const EvalReport r = EvaluateCorpus({{"x", {{"a", "b"}, {"abc", "abc"}}}});
  const auto& s = r.per_language.at("x");
  EXPECT_EQ(s.edit_distance_total, 1u);
  EXPECT_EQ(s.ref_char_total, 4u);
  EXPECT_EQ(s.utterance_count, 2u);
  EXPECT_NEAR(s.cer, 0.25, 1e-12);
}

TEST(EvaluateCorpusTest, Errors) {
  EXPECT_TRUE(ThrowsKind([] { EvaluateCorpus({{"x", {}}}); }, ErrorKind::kEmptyLanguage));
  EXPECT_TRUE(ThrowsKind([] { EvaluateCorpus({}); }, ErrorKind::kEmptyLanguage));
  EXPECT_TRUE(ThrowsKind([] { EvaluateCorpus({{"x", {{" ", "a"}}}}); },
                         ErrorKind::kEmptyReference));
}

TEST(EvaluateCorpusPropertyTest, DuplicationInvariance) {
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<int> dup(1, 5), n(1, 6);
  for (int trial = 0; trial < 200; ++trial) {
    CorpusPairs pairs, duplicated;
    for (const char* lang : {"l1", "l2", "l3"}) {
      for (int i = n(rng); i > 0; --i) {
        std::string ref = RandomAscii(rng, 8);
        ref += 'a';
        pairs[lang].push_back({ref, RandomAscii(rng, 9)});
      }
      const int times = dup(rng);
      for (int t = 0; t < times; ++t) {
        duplicated[lang].insert(duplicated[lang].end(), pairs[lang].begin(),
                                pairs[lang].end());
      }
    }
    ASSERT_NEAR(EvaluateCorpus(pairs).average_cer,
                EvaluateCorpus(duplicated).average_cer, 1e-12);
  }
}

TEST(ReportTest, JsonAndTable) {
  const EvalReport r = EvaluateCorpus({{"es", {{"abcd", "abcx"}}}});
  const auto j = nlohmann::json::parse(r.ToJson());
  EXPECT_NEAR(j["average_cer"].get<double>(), 0.25, 1e-12);
  EXPECT_EQ(j["per_language"]["es"]["edit_distance_total"].get<int>(), 1);
  EXPECT_EQ(j["per_language"]["es"]["ref_char_total"].get<int>(), 4);
  EXPECT_EQ(j["per_language"]["es"]["utterance_count"].get<int>(), 1);
  EXPECT_NE(r.ToTable().find("25.00%"), std::string::npos);
}

TEST(ReferencesTest, ParseAndErrors) {
  const auto refs = ParseReferences("u1\tes\tel gato\n\nu2\tfr\tle chat\n");
  ASSERT_EQ(refs.size(), 2u);
  EXPECT_EQ(refs[1].language, "fr");
  EXPECT_TRUE(ThrowsKind([] { ParseReferences("u1\tes\n"); }, ErrorKind::kParseError, 1));
  EXPECT_TRUE(ThrowsKind([] { ParseReferences("u1\tes\ta\nu1\tes\tb\n"); },
                         ErrorKind::kParseError, 2));
}

TEST(HypothesesTest, RoundTrip) {
  const std::vector<HypothesisEntry> hyps{{"u1", "el gato", -12.5, false},
                                          {"u2", "", -3.25, true}};
  const std::string text = SerializeHypotheses(hyps);
  EXPECT_EQ(text, "u1\tel gato\t-12.500000\tfalse\nu2\t\t-3.250000\ttrue\n");
  const auto parsed = ParseHypotheses(text);
  ASSERT_EQ(parsed.size(), 2u);
  EXPECT_EQ(parsed[0].words, "el gato");
  EXPECT_TRUE(parsed[1].forced_finalization);
  EXPECT_TRUE(ThrowsKind([] { ParseHypotheses("u1\tx\tnan-ish\tfalse\n"); },
                         ErrorKind::kParseError, 1));
  EXPECT_TRUE(ThrowsKind([] { ParseHypotheses("u1\tx\t1\tmaybe\n"); },
                         ErrorKind::kParseError, 1));
}

TEST(GridTest, InclusiveRanges) {
  EXPECT_EQ(MakeGrid(0, 1, 0.25), (std::vector<double>{0, 0.25, 0.5, 0.75, 1}));
  EXPECT_EQ(ParseGrid("-5:5:0.5").size(), 21u);
  EXPECT_EQ(ParseGrid("0:5:0.25").size(), 21u);
  EXPECT_EQ(ParseGrid("0:0.3:0.1").size(), 4u);
  EXPECT_EQ(ParseGrid("1:1:1"), std::vector<double>{1});
  EXPECT_EQ(ParseGrid("0:1:0.3").size(), 4u);
  for (const char* bad : {"0:1", "a:1:1", "0:1:0", "1:0:1", "0:1:1:1", ""}) {
    EXPECT_TRUE(ThrowsKind([&] { ParseGrid(bad); }, ErrorKind::kInvalidArgument)) << bad;
  }
}

// Two homophones where the dev references favour the LM's preferred word.
struct HomophoneDev {
  Lexicon lexicon;
  NGramModel lm;
  std::vector<DevUtterance> dev;

  HomophoneDev() : lm(TrainNGramFromCounts({{{"ká"}, 9}, {{"ka"}, 1}}, 1)) {
    lexicon.Add("ka", StringToSymbols("ka|"));
    lexicon.Add("ká", StringToSymbols("ka|"));
    SynthesisOptions o;
    o.noise = 0.2;
    o.seed = 4;
    for (const char* lang : {"x", "y"}) {
      dev.push_back({lang, SynthesizeEmissions(StringToSymbols("ka|"), o), "ká"});
    }
  }
};

TEST(GridSearchTest, SingletonGrid) {
  HomophoneDev d;
  const LexiconTrie trie(d.lexicon);
  const std::vector<double> zero{0.0};
  const TuneResult r = GridSearch(d.dev, trie, d.lexicon, &d.lm, zero, zero, {});
  ASSERT_EQ(r.grid.size(), 1u);
  EXPECT_EQ(r.best.lm_weight, 0.0);
  EXPECT_EQ(r.best.word_score, 0.0);
}

TEST(GridSearchTest, PrefersStrictlyBetterPoint) {
  HomophoneDev d;
  const LexiconTrie trie(d.lexicon);
  const std::vector<double> alphas{0.0, 0.5}, betas{0.0, 1.0};
  const TuneResult r = GridSearch(d.dev, trie, d.lexicon, &d.lm, alphas, betas, {}, 2);
  ASSERT_EQ(r.grid.size(), 4u);
  EXPECT_EQ(r.grid[0].average_cer, 1.0 / 2.0);
  EXPECT_EQ(r.best.lm_weight, 0.5);
  EXPECT_EQ(r.best.word_score, 0.0);
  EXPECT_EQ(r.best.average_cer, 0.0);
  const auto j = nlohmann::json::parse(r.ToJson());
  EXPECT_EQ(j["grid"].size(), 4u);
}

TEST(GridSearchTest, TiesGoToSmallerWeights) {
  HomophoneDev d;
  const LexiconTrie trie(d.lexicon);
  const std::vector<double> alphas{2.0, 1.0}, betas{0.5, -0.5};
  const TuneResult r = GridSearch(d.dev, trie, d.lexicon, &d.lm, alphas, betas, {});
  EXPECT_EQ(r.best.lm_weight, 1.0);
  EXPECT_EQ(r.best.word_score, -0.5);
}

TEST(GridSearchTest, EmptyGridIsInvalid) {
  HomophoneDev d;
  const LexiconTrie trie(d.lexicon);
  const std::vector<double> none, zero{0.0};
  EXPECT_TRUE(ThrowsKind([&] { GridSearch(d.dev, trie, d.lexicon, &d.lm, none, zero, {}); },
                         ErrorKind::kInvalidArgument));
}

std::vector<DevUtterance> SweepDev() {
  std::vector<DevUtterance> dev;
  SynthesisOptions o;
  for (const char* text : {"sol luna", "mar sol", "luna mar"}) {
    const auto symbols = RomanizeText(text, RomanScheme::Builtin()).WordTerminated();
    dev.push_back({"x", SynthesizeEmissions(symbols, o), text});
  }
  return dev;
}

TEST(SweepTest, FullSizeEqualsDirectBuild) {
  SweepCorpus corpus;
  corpus.sentences = {"sol", "luna", "mar sol"};
  const auto dev = SweepDev();
  SweepOptions options;
  options.lm_config.lm_weight = 1.0;
  const std::vector<std::size_t> sizes{3};
  const auto rows = TextAmountSweep(corpus, sizes, dev, options);
  ASSERT_EQ(rows.size(), 1u);

  const Lexicon lex = BuildLexicon(std::vector<std::string>{"sol", "luna", "mar", "sol"},
                                   RomanScheme::Builtin());
  const LexiconTrie trie(lex);
  const NGramModel lm = TrainNGram({{"sol"}, {"luna"}, {"mar", "sol"}}, 1);
  EXPECT_EQ(rows[0].lex_cer,
            EvaluateDecoder(dev, LexiconBeamDecoder(lex, trie, nullptr, {})).average_cer);
  EXPECT_EQ(rows[0].unigram_cer,
            EvaluateDecoder(dev, LexiconBeamDecoder(lex, trie, &lm, options.lm_config))
                .average_cer);
  EXPECT_EQ(rows[0].lex_cer, 0.0);
}

TEST(SweepTest, CoverageGrowthLowersLexiconCer) {
  SweepCorpus corpus;
  corpus.sentences = {"sol", "luna", "mar"};
  SweepOptions options;
  options.lm_config.lm_weight = 1.0;
  const std::vector<std::size_t> sizes{1, 2, 3};
  const auto rows = TextAmountSweep(corpus, sizes, SweepDev(), options);
  ASSERT_EQ(rows.size(), 3u);
  EXPECT_GT(rows[0].lex_cer, rows[1].lex_cer);
  EXPECT_GT(rows[1].lex_cer, rows[2].lex_cer);
  EXPECT_EQ(rows[2].lex_cer, 0.0);
  const std::string csv = SweepCsv(rows);
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "size,lex_cer,1gram_cer");
  EXPECT_NE(csv.find("\n3,0.000000,0.000000\n"), std::string::npos) << csv;
}

TEST(SweepTest, WordCountCorpus) {
  SweepCorpus corpus;
  corpus.is_counts = true;
  corpus.word_counts = {{"sol", 5}, {"luna", 2}, {"mar", 1}};
  SweepOptions options;
  const std::vector<std::size_t> sizes{3};
  EXPECT_EQ(TextAmountSweep(corpus, sizes, SweepDev(), options)[0].lex_cer, 0.0);
}

TEST(SweepTest, Errors) {
  SweepCorpus corpus;
  corpus.sentences = {"sol"};
  const auto dev = SweepDev();
  const std::vector<std::size_t> too_big{2}, unsorted{1, 1};
  EXPECT_TRUE(ThrowsKind([&] { TextAmountSweep(corpus, too_big, dev, {}); },
                         ErrorKind::kSizeExceedsCorpus));
  EXPECT_TRUE(ThrowsKind([&] { TextAmountSweep(corpus, unsorted, dev, {}); },
                         ErrorKind::kInvalidArgument));
}

}  // namespace
}  // namespace zsdec
