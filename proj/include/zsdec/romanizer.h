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

#ifndef ZSDEC_ROMANIZER_H_
#define ZSDEC_ROMANIZER_H_

#include <cstddef>
#include <cstdint>
#include <istream>
#include <map>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "zsdec/alphabet.h"

namespace zsdec {

// What happens to a codepoint that no table covers and that is not a
// mark, digit, punctuation, symbol, or separator.
enum class FallbackPolicy { kDrop, kApostrophe };

// Counters accumulated by a romanization call. Not shared between threads.
struct RomanizeStats {
  std::size_t fallback_count = 0;
};

// Table-driven romanization scheme.
//
// Each mapping takes a codepoint sequence (compared after full lowercasing
// and canonical decomposition) to a possibly empty string over 'a'..'z' and
// the apostrophe. Lookup is longest-match-first. A source may carry a
// leading '^' and/or trailing '$' anchor, restricting the mapping to the
// start and/or end of a word; anchored and unanchored entries of the same
// length are tried most specific first.
//
// A scheme is immutable once loading is finished and may then be shared by
// any number of threads.
class RomanScheme {
 public:
  RomanScheme() = default;

  // Latin (with diacritic folding), Cyrillic, Greek and Devanagari tables.
  static RomanScheme Builtin(FallbackPolicy policy = FallbackPolicy::kDrop);

  // Adds or overrides one mapping. Throws InvalidArgument when the target
  // contains anything besides 'a'..'z' and apostrophes, or the source is
  // empty.
  void AddMapping(std::string_view source, std::string_view target);

  // Table file: UTF-8 TSV "source<TAB>target" lines; '#' starts a comment
  // line; blank lines are ignored. The source is either literal text or
  // space-separated "U+XXXX" codepoints. Throws ParseError with a line
  // number.
  void LoadTable(std::istream& in);
  void LoadTableFile(const std::string& path);
  // Loads every "*.tsv" in dir, in lexicographic filename order.
  void LoadTableDirectory(const std::string& dir);

  FallbackPolicy fallback_policy() const { return fallback_policy_; }
  void set_fallback_policy(FallbackPolicy policy) { fallback_policy_ = policy; }

  std::size_t num_mappings() const { return table_.size(); }

  // Romanizes one whitespace-free run of already lowercased and decomposed
  // codepoints. Appends to out.
  void RomanizeCodepoints(std::u32string_view word, std::string* out,
                          RomanizeStats* stats) const;

 private:
  std::unordered_map<std::u32string, std::string> table_;
  std::size_t max_source_length_ = 0;
  FallbackPolicy fallback_policy_ = FallbackPolicy::kDrop;
};

// Romanized transcript: canonical symbols with single '|' separators and no
// leading or trailing separator.
class RomanizedText {
 public:
  RomanizedText() = default;
  RomanizedText(std::vector<Symbol> symbols, std::string source);

  const std::vector<Symbol>& symbols() const { return symbols_; }
  const std::string& source() const { return source_; }
  bool empty() const { return symbols_.empty(); }

  // "el|corre"
  std::string str() const { return SymbolsToString(symbols_); }

  // Symbols with a trailing separator appended ("el|corre|"), the
  // word-terminated form matching lexicon spellings.
  std::vector<Symbol> WordTerminated() const;

 private:
  std::vector<Symbol> symbols_;
  std::string source_;
};

// Romanizes a single word. Throws EmptyInput when the word is empty or
// whitespace-only. Whitespace or '|' inside the word is dropped.
std::vector<Symbol> RomanizeWord(std::string_view word,
                                 const RomanScheme& scheme,
                                 RomanizeStats* stats = nullptr);

// Romanizes running text. Whitespace runs and '|' act as word separators;
// words that romanize to nothing disappear. Total and idempotent.
RomanizedText RomanizeText(std::string_view text, const RomanScheme& scheme,
                           RomanizeStats* stats = nullptr);

struct VocabularyAudit {
  std::map<Symbol, std::uint64_t> counts;
  std::size_t lines = 0;
};

// Romanizes every line and counts the produced symbols, separators
// included. Throws IoFailure if the stream goes bad.
VocabularyAudit AuditVocabulary(std::istream& corpus,
                                const RomanScheme& scheme);

}  // namespace zsdec

#endif  // ZSDEC_ROMANIZER_H_
