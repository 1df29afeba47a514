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

#include "zsdec/lexicon.h"

#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "test_util.h"
#include "zsdec/alphabet.h"
#include "zsdec/romanizer.h"

namespace zsdec {
namespace {

using ::zsdec::testing::ThrowsKind;

const RomanScheme& Scheme() {
  static const RomanScheme scheme = RomanScheme::Builtin();
  return scheme;
}

std::vector<Symbol> S(std::string_view text) { return StringToSymbols(text); }

Lexicon Build(std::vector<std::string> words, LexiconBuildStats* stats = nullptr) {
  return BuildLexicon(words, Scheme(), stats);
}

TEST(BuildLexiconTest, AsciiWord) {
  const Lexicon lex = Build({"casa"});
  ASSERT_EQ(lex.size(), 1u);
  EXPECT_EQ(lex.entry(0).word, "casa");
  EXPECT_EQ(JoinSymbolNames(lex.entry(0).spelling), "c a s a |");
}

TEST(BuildLexiconTest, DiacriticVariantsCollide) {
  const Lexicon lex = Build({"á", "a"});
  ASSERT_EQ(lex.size(), 2u);
  EXPECT_EQ(lex.entry(0).spelling, S("a|"));
  EXPECT_EQ(lex.entry(1).spelling, S("a|"));
}

TEST(BuildLexiconTest, PunctuationOnlyIsEmptyLexicon) {
  EXPECT_TRUE(ThrowsKind([] { Build({"…"}); }, ErrorKind::kEmptyLexicon));
  EXPECT_TRUE(ThrowsKind([] { Build({}); }, ErrorKind::kEmptyLexicon));
}

TEST(BuildLexiconTest, DeduplicatesCaseSensitivelyAndCountsDrops) {
  LexiconBuildStats stats;
  const Lexicon lex = Build({"Casa", "casa", "casa", "42", "casa"}, &stats);
  ASSERT_EQ(lex.size(), 2u);
  EXPECT_EQ(lex.entry(0).word, "Casa");
  EXPECT_EQ(lex.entry(1).word, "casa");
  EXPECT_EQ(lex.entry(0).spelling, lex.entry(1).spelling);
  EXPECT_EQ(stats.duplicates, 2u);
  EXPECT_EQ(stats.dropped_empty, 1u);
}

TEST(LexiconTest, AddValidatesSpelling) {
  Lexicon lex;
  EXPECT_EQ(lex.Add("ab", S("ab|")), 0);
  EXPECT_TRUE(ThrowsKind([&] { lex.Add("ab", S("ab|")); }, ErrorKind::kDuplicateWord));
  EXPECT_TRUE(ThrowsKind([&] { lex.Add("x", S("x")); }, ErrorKind::kInvalidArgument));
  EXPECT_TRUE(ThrowsKind([&] { lex.Add("x", S("|")); }, ErrorKind::kInvalidArgument));
  EXPECT_TRUE(ThrowsKind([&] { lex.Add("x", S("a|b|")); }, ErrorKind::kInvalidArgument));
  EXPECT_TRUE(ThrowsKind([&] { lex.Add("a\tb", S("ab|")); }, ErrorKind::kInvalidArgument));
  EXPECT_EQ(lex.Find("ab"), 0);
  EXPECT_FALSE(lex.Find("zz").has_value());
}

TEST(SerializeTest, LineFormat) {
  Lexicon lex;
  lex.Add("casa", S("casa|"));
  EXPECT_EQ(SerializeLexicon(lex), "casa\tc a s a |\n");
}

TEST(SerializeTest, AmbiguousRoundTrip) {
  const Lexicon lex = Build({"á", "a"});
  EXPECT_EQ(ParseLexicon(SerializeLexicon(lex)), lex);
}

TEST(ParseTest, Errors) {
  EXPECT_TRUE(ThrowsKind([] { ParseLexicon("casa c a s a\n"); },
                         ErrorKind::kParseError, 1));
  EXPECT_TRUE(ThrowsKind([] { ParseLexicon("a\ta |\nb\tb ? |\n"); },
                         ErrorKind::kParseError, 2));
  EXPECT_TRUE(ThrowsKind([] { ParseLexicon("a\ta\n"); }, ErrorKind::kParseError, 1));
  EXPECT_TRUE(ThrowsKind([] { ParseLexicon("a\ta |\nb\tb |\na\ta |\n"); },
                         ErrorKind::kDuplicateWord, 3));
}

TEST(ParseTest, SkipsBlankLinesAndCarriageReturns) {
  const Lexicon lex = ParseLexicon("\nhola\th o l a |\r\n\n");
  ASSERT_EQ(lex.size(), 1u);
  EXPECT_EQ(lex.entry(0).word, "hola");
}

TEST(RoundTripPropertyTest, RandomLexicons) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> len(1, 8), letter(0, 26), count(1, 40);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<std::string> words;
    const int n = count(rng);
    for (int i = 0; i < n; ++i) {
      std::string w;
      const int l = len(rng);
      for (int k = 0; k < l; ++k) {
        const int c = letter(rng);
        w += c == 26 ? '\'' : static_cast<char>('a' + c);
      }
      if (trial % 3 == 0) w += "é";
      words.push_back(w);
    }
    const Lexicon lex = Build(words);
    ASSERT_EQ(ParseLexicon(SerializeLexicon(lex)), lex);
    ASSERT_EQ(SerializeLexicon(ParseLexicon(SerializeLexicon(lex))),
              SerializeLexicon(lex));
    // Many-to-one preservation: one entry per distinct word.
    ASSERT_EQ(lex.size(), std::set<std::string>(words.begin(), words.end()).size());
  }
}

TEST(TrieTest, HomophonesShareTerminal) {
  const Lexicon lex = Build({"a", "á"});
  const LexiconTrie trie(lex);
  EXPECT_EQ(trie.Lookup(S("a|")), (std::vector<WordId>{0, 1}));
  EXPECT_TRUE(trie.Lookup(S("a")).empty());
  EXPECT_TRUE(trie.Lookup(S("z|")).empty());
}

TEST(TrieTest, SharedPrefixShape) {
  Lexicon lex;
  lex.Add("ab", S("ab|"));
  lex.Add("a", S("a|"));
  const LexiconTrie trie(lex);
  // root, a, ab, ab|, a|
  EXPECT_EQ(trie.num_nodes(), 5u);
  const auto a = trie.Child(trie.root(), *SymbolFromChar('a'));
  ASSERT_NE(a, LexiconTrie::kNoNode);
  EXPECT_TRUE(trie.Words(a).empty());
  const auto ab_end = trie.Child(trie.Child(a, *SymbolFromChar('b')), kSeparator);
  const auto a_end = trie.Child(a, kSeparator);
  ASSERT_NE(ab_end, a_end);
  EXPECT_EQ(std::vector<WordId>(trie.Words(ab_end).begin(), trie.Words(ab_end).end()),
            std::vector<WordId>{0});
  EXPECT_EQ(std::vector<WordId>(trie.Words(a_end).begin(), trie.Words(a_end).end()),
            std::vector<WordId>{1});
}

TEST(TrieTest, SingleEntryIsChain) {
  const Lexicon lex = Build({"casa"});
  EXPECT_EQ(LexiconTrie(lex).num_nodes(), lex.entry(0).spelling.size() + 1);
}

TEST(TriePropertyTest, CompletenessAndSize) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> len(1, 6), letter(0, 4), count(1, 60);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<std::string> words;
    const int n = count(rng);
    for (int i = 0; i < n; ++i) {
      std::string w;
      for (int k = len(rng); k > 0; --k) w += static_cast<char>('a' + letter(rng));
      words.push_back(w);
    }
    const Lexicon lex = Build(words);
    const LexiconTrie trie(lex);
    std::size_t total = 0;
    std::set<std::string> spellings;
    for (WordId id = 0; id < static_cast<WordId>(lex.size()); ++id) {
      const auto& e = lex.entry(id);
      total += e.spelling.size();
      spellings.insert(SymbolsToString(e.spelling));
      const auto hits = trie.Lookup(e.spelling);
      ASSERT_NE(std::find(hits.begin(), hits.end(), id), hits.end());
      for (WordId h : hits) ASSERT_LT(static_cast<std::size_t>(h), lex.size());
    }
    ASSERT_LE(trie.num_nodes(), 1 + total);
    for (int q = 0; q < 1000; ++q) {
      std::string probe;
      for (int k = len(rng); k > 0; --k) probe += static_cast<char>('a' + letter(rng));
      probe += '|';
      if (spellings.count(probe)) continue;
      ASSERT_TRUE(trie.Lookup(S(probe)).empty()) << probe;
    }
  }
}

TEST(WordInputTest, WordListTrimsAndSkipsBlanks) {
  std::istringstream in("  casa \n\n perro\r\n");
  EXPECT_EQ(ReadWordList(in), (std::vector<std::string>{"casa", "perro"}));
}

TEST(WordInputTest, WordCountsAndMinCount) {
  std::istringstream in("casa\t3\nperro\t1\ngato\t10\n");
  const auto counts = ReadWordCounts(in);
  ASSERT_EQ(counts.size(), 3u);
  EXPECT_EQ(counts[2].count, 10u);
  EXPECT_EQ(WordsWithMinCount(counts, 3), (std::vector<std::string>{"casa", "gato"}));
  EXPECT_EQ(WordsWithMinCount(counts, 1).size(), 3u);
}

TEST(WordInputTest, BadCountsAreParseErrors) {
  for (const char* text : {"casa\n", "casa\t0\n", "casa\t-1\n", "casa\tx\n",
                           "a\t1\ncasa\t1.5\n"}) {
    std::istringstream in(text);
    EXPECT_TRUE(ThrowsKind([&] { ReadWordCounts(in); }, ErrorKind::kParseError))
        << text;
  }
}

}  // namespace
}  // namespace zsdec
