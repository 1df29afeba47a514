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

#include "cli.h"

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "json.hpp"
#include "test_util.h"
#include "zsdec/io_util.h"

namespace zsdec::cli {
namespace {

using ::zsdec::testing::TempDir;

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome RunArgs(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = Run(args, out, err);
  return {code, out.str(), err.str()};
}

void Write(const std::string& path, const std::string& text) {
  std::ofstream(path, std::ios::binary) << text;
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    Write(dir_.File("refs.tsv"),
          "u1\tes\tel gato come\nu2\tes\tla casa\nu3\tru\tпривет мир\n");
    Write(dir_.File("words.txt"), "el\ngato\ncome\nla\ncasa\nпривет\nмир\n");
    Write(dir_.File("corpus.txt"), "el gato come\nla casa\nel gato\nпривет мир\n");
  }

  std::string F(const std::string& name) const { return dir_.File(name); }

  // romanize is not needed by the decode path; everything else runs.
  void RunPipeline(const std::string& tag) {
    ASSERT_EQ(RunArgs({"build-lexicon", "--words", F("words.txt"), "--out",
                       F(tag + "lex.tsv")}).code, kExitOk);
    ASSERT_EQ(RunArgs({"train-lm", "--corpus", F("corpus.txt"), "--order", "3",
                       "--out", F(tag + "lm.arpa")}).code, kExitOk);
    ASSERT_EQ(RunArgs({"synth", "--refs", F("refs.tsv"), "--out", F(tag + "em"),
                       "--frames-per-symbol", "2", "--noise", "0.4", "--seed", "3"})
                  .code,
              kExitOk);
    ASSERT_EQ(RunArgs({"decode", "--manifest", F(tag + "em/manifest.tsv"),
                       "--lexicon", F(tag + "lex.tsv"), "--lm", F(tag + "lm.arpa"),
                       "--lm-weight", "0.5", "--word-score", "0.5", "--jobs", "3",
                       "--out", F(tag + "hyps.tsv")}).code,
              kExitOk);
    ASSERT_EQ(RunArgs({"eval", "--refs", F("refs.tsv"), "--hyps", F(tag + "hyps.tsv"),
                       "--out", F(tag + "report.json")}).code,
              kExitOk);
    ASSERT_EQ(RunArgs({"tune", "--manifest", F(tag + "em/manifest.tsv"), "--refs",
                       F("refs.tsv"), "--lexicon", F(tag + "lex.tsv"), "--lm",
                       F(tag + "lm.arpa"), "--lm-weight-grid", "0:1:0.5",
                       "--word-score-grid", "-1:1:1", "--jobs", "2", "--out",
                       F(tag + "tune.json")}).code,
              kExitOk);
    ASSERT_EQ(RunArgs({"sweep", "--corpus", F("corpus.txt"), "--sizes", "1,2,4",
                       "--manifest", F(tag + "em/manifest.tsv"), "--refs",
                       F("refs.tsv"), "--out", F(tag + "sweep.csv")}).code,
              kExitOk);
  }

  TempDir dir_;
};

TEST_F(CliTest, RomanizeFoldsDiacritics) {
  Write(F("in.txt"), "á\nÉl  corre.\n");
  const Outcome o = RunArgs({"romanize", "--in", F("in.txt"), "--out", F("out.txt")});
  ASSERT_EQ(o.code, kExitOk) << o.err;
  EXPECT_EQ(ReadFile(F("out.txt")), "a\nel|corre\n");
}

TEST_F(CliTest, RomanizeWithExtraTables) {
  std::filesystem::create_directories(dir_.path() / "tables");
  Write(F("tables/cjk.tsv"), "U+4E2D\tzhong\n");
  Write(F("in.txt"), "中\n");
  ASSERT_EQ(RunArgs({"romanize", "--in", F("in.txt"), "--out", F("out.txt"),
                     "--tables", F("tables")}).code,
            kExitOk);
  EXPECT_EQ(ReadFile(F("out.txt")), "zhong\n");
}

TEST_F(CliTest, PipelineProducesExpectedArtifacts) {
  RunPipeline("a_");
  EXPECT_EQ(ReadFile(F("a_lex.tsv")).substr(0, 9), "el\te l |\n");
  EXPECT_NE(ReadFile(F("a_lm.arpa")).find("ngram 3="), std::string::npos);
  const auto hyps = ReadLines(F("a_hyps.tsv"));
  ASSERT_EQ(hyps.size(), 3u);
  EXPECT_EQ(hyps[0].substr(0, 16), "u1\tel gato come\t");
  const auto report = nlohmann::json::parse(ReadFile(F("a_report.json")));
  EXPECT_EQ(report["per_language"].size(), 2u);
  const auto tune = nlohmann::json::parse(ReadFile(F("a_tune.json")));
  EXPECT_EQ(tune["grid"].size(), 9u);
  EXPECT_EQ(ReadLines(F("a_sweep.csv")).size(), 4u);
}

TEST_F(CliTest, PipelineIsByteIdenticalAcrossRuns) {
  RunPipeline("a_");
  RunPipeline("b_");
  for (const char* name : {"lex.tsv", "lm.arpa", "em/u1.ctce", "em/u3.ctce",
                           "hyps.tsv", "report.json", "tune.json", "sweep.csv"}) {
    EXPECT_EQ(ReadFile(F(std::string("a_") + name)), ReadFile(F(std::string("b_") + name)))
        << name;
  }
  const std::string manifest_a = ReadFile(F("a_em/manifest.tsv"));
  EXPECT_EQ(manifest_a, ReadFile(F("b_em/manifest.tsv")));
}

TEST_F(CliTest, DecodeDefaultsToBeam2000) {
  RunPipeline("a_");
  const Outcome o = RunArgs({"decode", "--manifest", F("a_em/manifest.tsv"),
                             "--lexicon", F("a_lex.tsv"), "--out", F("h.tsv")});
  ASSERT_EQ(o.code, kExitOk) << o.err;
  EXPECT_NE(o.out.find("beam 2000"), std::string::npos) << o.out;
}

TEST_F(CliTest, UsageErrors) {
  const Outcome beam = RunArgs({"decode", "--beam", "0", "--manifest", "m",
                                "--lexicon", "l", "--out", "o"});
  EXPECT_EQ(beam.code, kExitUsage);
  EXPECT_NE(beam.err.find("--beam"), std::string::npos) << beam.err;
  EXPECT_EQ(RunArgs({}).code, kExitUsage);
  EXPECT_EQ(RunArgs({"frobnicate"}).code, kExitUsage);
  const Outcome unknown = RunArgs({"eval", "--refs", "r", "--hyps", "h", "--out", "o",
                                   "--bogus"});
  EXPECT_EQ(unknown.code, kExitUsage);
  EXPECT_NE(unknown.err.find("--bogus"), std::string::npos) << unknown.err;
  EXPECT_EQ(RunArgs({"train-lm", "--corpus", "c", "--order", "4", "--out", "o"}).code,
            kExitUsage);
  EXPECT_EQ(RunArgs({"train-lm", "--order", "1", "--out", "o"}).code, kExitUsage);
  EXPECT_EQ(RunArgs({"synth", "--refs", "r", "--out", "d", "--noise", "1.0",
                     "--seed", "1"}).code,
            kExitUsage);
  EXPECT_EQ(RunArgs({"tune", "--manifest", "m", "--refs", "r", "--lexicon", "l",
                     "--lm", "x", "--lm-weight-grid", "1:0:1", "--out", "o"}).code,
            kExitUsage);
  EXPECT_EQ(RunArgs({"sweep", "--corpus", "c", "--sizes", "3,2", "--manifest", "m",
                     "--refs", "r", "--out", "o"}).code,
            kExitUsage);
  EXPECT_EQ(RunArgs({"build-lexicon", "--words", "w", "--freq", "f", "--out", "o"}).code,
            kExitUsage);
}

TEST_F(CliTest, HelpDocumentsFormats) {
  const Outcome o = RunArgs({"--help"});
  EXPECT_EQ(o.code, kExitOk);
  EXPECT_NE(o.out.find("utt001<TAB>es<TAB>el gato come"), std::string::npos);
  EXPECT_NE(o.out.find("CTCE"), std::string::npos);
  EXPECT_EQ(RunArgs({"decode", "--help"}).code, kExitOk);
}

TEST_F(CliTest, DataErrorsNameFileAndLine) {
  Write(F("bad_lex.tsv"), "casa\tc a s a |\nperro p e r r o\n");
  Write(F("m.tsv"), "");
  const Outcome o = RunArgs({"decode", "--manifest", F("m.tsv"), "--lexicon",
                             F("bad_lex.tsv"), "--out", F("h.tsv")});
  EXPECT_EQ(o.code, kExitData);
  EXPECT_NE(o.err.find("bad_lex.tsv"), std::string::npos) << o.err;
  EXPECT_NE(o.err.find("line 2"), std::string::npos) << o.err;

  const Outcome missing = RunArgs({"eval", "--refs", F("nope.tsv"), "--hyps",
                                   F("h.tsv"), "--out", F("r.json")});
  EXPECT_EQ(missing.code, kExitData);
  EXPECT_NE(missing.err.find("nope.tsv"), std::string::npos);
}

TEST_F(CliTest, EvalRequiresEveryHypothesis) {
  Write(F("h.tsv"), "u1\tel gato come\t-1.0\tfalse\n");
  EXPECT_EQ(RunArgs({"eval", "--refs", F("refs.tsv"), "--hyps", F("h.tsv"), "--out",
                     F("r.json")}).code,
            kExitData);
  EXPECT_FALSE(std::filesystem::exists(F("r.json")));
}

TEST_F(CliTest, SweepSizeBeyondCorpusIsDataError) {
  RunPipeline("a_");
  EXPECT_EQ(RunArgs({"sweep", "--corpus", F("corpus.txt"), "--sizes", "10",
                     "--manifest", F("a_em/manifest.tsv"), "--refs", F("refs.tsv"),
                     "--out", F("s.csv")}).code,
            kExitData);
}

TEST_F(CliTest, BuildLexiconFromCounts) {
  Write(F("freq.tsv"), "casa\t5\nperro\t1\ngato\t3\n");
  ASSERT_EQ(RunArgs({"build-lexicon", "--freq", F("freq.tsv"), "--min-count", "3",
                     "--out", F("lex.tsv")}).code,
            kExitOk);
  EXPECT_EQ(ReadFile(F("lex.tsv")), "casa\tc a s a |\ngato\tg a t o |\n");
}

TEST_F(CliTest, TrainFromCountTable) {
  Write(F("counts.tsv"), "the\t3\ncat\t1\n");
  ASSERT_EQ(RunArgs({"train-lm", "--counts", F("counts.tsv"), "--order", "1", "--out",
                     F("lm.arpa")}).code,
            kExitOk);
  EXPECT_NE(ReadFile(F("lm.arpa")).find("-0.2218487\tthe"), std::string::npos);
}

}  // namespace
}  // namespace zsdec::cli
