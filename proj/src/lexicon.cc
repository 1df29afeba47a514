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

#include <charconv>
#include <unordered_set>

#include "zsdec/errors.h"
#include "zsdec/io_util.h"

namespace zsdec {

namespace {

// Empty string when valid, otherwise a description of the defect.
std::string SpellingDefect(std::span<const Symbol> spelling) {
  if (spelling.size() < 2) return "spelling needs a symbol before '|'";
  if (spelling.back() != kSeparator) return "spelling must end with '|'";
  for (std::size_t i = 0; i + 1 < spelling.size(); ++i) {
    if (spelling[i] == kSeparator) return "'|' allowed only at the end";
    if (spelling[i] == kBlank || spelling[i] >= kAlphabetSize) {
      return "spelling contains a non-spelling symbol";
    }
  }
  return {};
}

}  // namespace

WordId Lexicon::Add(std::string word, std::vector<Symbol> spelling) {
  if (word.empty()) throw Error(ErrorKind::kInvalidArgument, "empty word");
  if (word.find_first_of("\t\n\r") != std::string::npos) {
    throw Error(ErrorKind::kInvalidArgument,
                "word contains tab or newline: " + word);
  }
  if (std::string defect = SpellingDefect(spelling); !defect.empty()) {
    throw Error(ErrorKind::kInvalidArgument, defect + " (word " + word + ")");
  }
  if (index_.count(word) != 0) {
    throw Error(ErrorKind::kDuplicateWord, "duplicate word: " + word);
  }
  const auto id = static_cast<WordId>(entries_.size());
  index_.emplace(word, id);
  entries_.push_back({std::move(word), std::move(spelling)});
  return id;
}

const LexiconEntry& Lexicon::entry(WordId id) const {
  return entries_.at(static_cast<std::size_t>(id));
}

std::optional<WordId> Lexicon::Find(std::string_view word) const {
  auto it = index_.find(std::string(word));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Lexicon BuildLexicon(std::span<const std::string> words,
                     const RomanScheme& scheme, LexiconBuildStats* stats) {
  LexiconBuildStats local;
  RomanizeStats roman_stats;
  Lexicon lexicon;
  std::unordered_set<std::string> seen;
  for (const std::string& word : words) {
    if (!seen.insert(word).second) {
      ++local.duplicates;
      continue;
    }
    std::vector<Symbol> spelling;
    try {
      spelling = RomanizeWord(word, scheme, &roman_stats);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::kEmptyInput) throw;
    }
    if (spelling.empty()) {
      ++local.dropped_empty;
      continue;
    }
    spelling.push_back(kSeparator);
    lexicon.Add(word, std::move(spelling));
  }
  local.fallback_count = roman_stats.fallback_count;
  if (stats != nullptr) *stats = local;
  if (lexicon.empty()) {
    throw Error(ErrorKind::kEmptyLexicon,
                "no word survives romanization (" +
                    std::to_string(words.size()) + " input words)");
  }
  return lexicon;
}

std::string SerializeLexicon(const Lexicon& lexicon) {
  std::string out;
  for (const auto& e : lexicon.entries()) {
    out += e.word;
    out += '\t';
    out += JoinSymbolNames(e.spelling);
    out += '\n';
  }
  return out;
}

Lexicon ParseLexicon(std::string_view text) {
  Lexicon lexicon;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty()) continue;
    auto fields = SplitTabs(line);
    if (fields.size() != 2) {
      throw Error(ErrorKind::kParseError, "expected word<TAB>spelling",
                  line_no);
    }
    if (fields[0].empty()) {
      throw Error(ErrorKind::kParseError, "empty word", line_no);
    }
    std::vector<Symbol> spelling;
    for (const std::string& token : SplitWhitespace(fields[1])) {
      auto s = SymbolFromName(token);
      if (!s || *s == kBlank) {
        throw Error(ErrorKind::kParseError, "unknown spelling symbol: " + token,
                    line_no);
      }
      spelling.push_back(*s);
    }
    if (std::string defect = SpellingDefect(spelling); !defect.empty()) {
      throw Error(ErrorKind::kParseError, defect, line_no);
    }
    try {
      lexicon.Add(std::string(fields[0]), std::move(spelling));
    } catch (const Error& e) {
      throw Error(e.kind(), e.message(), line_no);
    }
  }
  return lexicon;
}

std::vector<std::string> ReadWordList(std::istream& in) {
  std::vector<std::string> words;
  std::string line;
  while (ReadLine(in, &line)) {
    std::string_view w = TrimAscii(line);
    if (!w.empty()) words.emplace_back(w);
  }
  if (in.bad()) throw Error(ErrorKind::kIoFailure, "word list unreadable");
  return words;
}

std::vector<WordCount> ReadWordCounts(std::istream& in) {
  std::vector<WordCount> counts;
  std::string line;
  std::size_t line_no = 0;
  while (ReadLine(in, &line)) {
    ++line_no;
    if (TrimAscii(line).empty()) continue;
    auto fields = SplitTabs(line);
    if (fields.size() != 2 || fields[0].empty()) {
      throw Error(ErrorKind::kParseError, "expected word<TAB>count", line_no);
    }
    const std::string_view count_text = TrimAscii(fields[1]);
    std::uint64_t count = 0;
    auto [ptr, ec] = std::from_chars(
        count_text.data(), count_text.data() + count_text.size(), count);
    if (ec != std::errc() || ptr != count_text.data() + count_text.size() ||
        count == 0) {
      throw Error(ErrorKind::kParseError,
                  "count must be a positive integer: " +
                      std::string(count_text),
                  line_no);
    }
    counts.push_back({std::string(fields[0]), count});
  }
  if (in.bad()) throw Error(ErrorKind::kIoFailure, "count file unreadable");
  return counts;
}

std::vector<std::string> WordsWithMinCount(std::span<const WordCount> counts,
                                           std::uint64_t min_count) {
  std::vector<std::string> words;
  for (const auto& wc : counts) {
    if (wc.count >= min_count) words.push_back(wc.word);
  }
  return words;
}

LexiconTrie::LexiconTrie(const Lexicon& lexicon) {
  nodes_.emplace_back();
  for (std::size_t id = 0; id < lexicon.size(); ++id) {
    NodeId node = root();
    for (Symbol s : lexicon.entries()[id].spelling) {
      NodeId next = nodes_[static_cast<std::size_t>(node)].children[s];
      if (next == kNoNode) {
        next = static_cast<NodeId>(nodes_.size());
        nodes_[static_cast<std::size_t>(node)].children[s] = next;
        nodes_.emplace_back();
      }
      node = next;
    }
    nodes_[static_cast<std::size_t>(node)].words.push_back(
        static_cast<WordId>(id));
  }
}

std::vector<WordId> LexiconTrie::Lookup(std::span<const Symbol> spelling) const {
  NodeId node = root();
  for (Symbol s : spelling) {
    if (s >= kAlphabetSize) return {};
    node = Child(node, s);
    if (node == kNoNode) return {};
  }
  const auto words = Words(node);
  return {words.begin(), words.end()};
}

}  // namespace zsdec
