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

#ifndef ZSDEC_LEXICON_H_
#define ZSDEC_LEXICON_H_

#include <array>
#include <cstddef>
#include <cstdint>
#include <istream>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "zsdec/alphabet.h"
#include "zsdec/romanizer.h"

namespace zsdec {

using WordId = std::int32_t;

// A surface word and its romanized spelling. The spelling is non-empty
// before its single, terminal '|'.
struct LexiconEntry {
  std::string word;
  std::vector<Symbol> spelling;

  bool operator==(const LexiconEntry&) const = default;
};

// Words are unique; spellings may repeat (homophones).
class Lexicon {
 public:
  Lexicon() = default;

  // Throws DuplicateWord for a repeated surface form and InvalidArgument for
  // a malformed spelling.
  WordId Add(std::string word, std::vector<Symbol> spelling);

  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  const std::vector<LexiconEntry>& entries() const { return entries_; }
  const LexiconEntry& entry(WordId id) const;
  std::optional<WordId> Find(std::string_view word) const;

  bool operator==(const Lexicon& other) const {
    return entries_ == other.entries_;
  }

 private:
  std::vector<LexiconEntry> entries_;
  std::unordered_map<std::string, WordId> index_;
};

struct LexiconBuildStats {
  std::size_t duplicates = 0;      // repeated surface forms skipped
  std::size_t dropped_empty = 0;   // words that romanized to nothing
  std::size_t fallback_count = 0;  // unknown codepoints seen
};

// One entry per distinct word, in order of first occurrence. Deduplication
// is case-sensitive; romanization is not. Throws EmptyLexicon when nothing
// survives.
Lexicon BuildLexicon(std::span<const std::string> words,
                     const RomanScheme& scheme,
                     LexiconBuildStats* stats = nullptr);

// "word<TAB>c a s a |" lines.
std::string SerializeLexicon(const Lexicon& lexicon);
// Throws ParseError (with line number) or DuplicateWord.
Lexicon ParseLexicon(std::string_view text);

// Word-list input: one word per line, surrounding ASCII whitespace trimmed,
// blank lines skipped.
std::vector<std::string> ReadWordList(std::istream& in);

struct WordCount {
  std::string word;
  std::uint64_t count = 0;
};

// Word-frequency input: "word<TAB>count" with a positive integer count.
std::vector<WordCount> ReadWordCounts(std::istream& in);

// Words with count >= min_count, input order preserved.
std::vector<std::string> WordsWithMinCount(std::span<const WordCount> counts,
                                           std::uint64_t min_count);

// Prefix trie over lexicon spellings with a fixed 29-way branch per node.
// Spellings end in '|', so terminal nodes are leaves.
class LexiconTrie {
 public:
  using NodeId = std::int32_t;
  static constexpr NodeId kNoNode = -1;

  explicit LexiconTrie(const Lexicon& lexicon);

  NodeId root() const { return 0; }
  std::size_t num_nodes() const { return nodes_.size(); }

  NodeId Child(NodeId node, Symbol symbol) const {
    return nodes_[static_cast<std::size_t>(node)].children[symbol];
  }
  // Word ids ending at node, ascending.
  std::span<const WordId> Words(NodeId node) const {
    return nodes_[static_cast<std::size_t>(node)].words;
  }

  // Exact-spelling lookup; prefixes of a spelling return nothing.
  std::vector<WordId> Lookup(std::span<const Symbol> spelling) const;

 private:
  struct Node {
    Node() { children.fill(kNoNode); }
    std::array<NodeId, kAlphabetSize> children;
    std::vector<WordId> words;
  };
  std::vector<Node> nodes_;
};

}  // namespace zsdec

#endif  // ZSDEC_LEXICON_H_
