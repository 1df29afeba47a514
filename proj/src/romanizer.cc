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

#include "zsdec/romanizer.h"

#include <unicode/locid.h>
#include <unicode/normalizer2.h>
#include <unicode/uchar.h>
#include <unicode/unistr.h>

#include <algorithm>
#include <filesystem>
#include <fstream>

#include "builtin_tables.h"
#include "zsdec/errors.h"
#include "zsdec/io_util.h"

namespace zsdec {

namespace {

// Anchor markers inside table keys. Both are control characters, which are
// removed from input before lookup and so never collide with real text.
constexpr char32_t kStartAnchor = 0x02;
constexpr char32_t kEndAnchor = 0x03;

// Full lowercase followed by canonical decomposition.
std::u32string LowerDecompose(std::string_view utf8) {
  icu::UnicodeString text = icu::UnicodeString::fromUTF8(
      icu::StringPiece(utf8.data(), static_cast<int32_t>(utf8.size())));
  text.toLower(icu::Locale::getRoot());
  UErrorCode status = U_ZERO_ERROR;
  const icu::Normalizer2* nfd = icu::Normalizer2::getNFDInstance(status);
  if (U_FAILURE(status)) {
    throw Error(ErrorKind::kInvalidArgument, "ICU NFD normalizer unavailable");
  }
  icu::UnicodeString decomposed = nfd->normalize(text, status);
  if (U_FAILURE(status)) {
    throw Error(ErrorKind::kInvalidArgument, "canonical decomposition failed");
  }
  std::u32string out;
  out.reserve(static_cast<std::size_t>(decomposed.length()));
  for (int32_t i = 0; i < decomposed.length();) {
    UChar32 c = decomposed.char32At(i);
    out.push_back(static_cast<char32_t>(c));
    i += U16_LENGTH(c);
  }
  return out;
}

bool IsWordBreak(char32_t c) {
  return c == U'|' || u_isUWhiteSpace(static_cast<UChar32>(c));
}

enum class CodepointClass { kMark, kRemoved, kUnknown };

CodepointClass Classify(char32_t c) {
  switch (u_charType(static_cast<UChar32>(c))) {
    case U_NON_SPACING_MARK:
    case U_ENCLOSING_MARK:
    case U_COMBINING_SPACING_MARK:
      return CodepointClass::kMark;
    case U_DECIMAL_DIGIT_NUMBER:
    case U_LETTER_NUMBER:
    case U_OTHER_NUMBER:
    case U_DASH_PUNCTUATION:
    case U_START_PUNCTUATION:
    case U_END_PUNCTUATION:
    case U_CONNECTOR_PUNCTUATION:
    case U_OTHER_PUNCTUATION:
    case U_INITIAL_PUNCTUATION:
    case U_FINAL_PUNCTUATION:
    case U_MATH_SYMBOL:
    case U_CURRENCY_SYMBOL:
    case U_MODIFIER_SYMBOL:
    case U_OTHER_SYMBOL:
    case U_SPACE_SEPARATOR:
    case U_LINE_SEPARATOR:
    case U_PARAGRAPH_SEPARATOR:
    case U_CONTROL_CHAR:
    case U_FORMAT_CHAR:
      return CodepointClass::kRemoved;
    default:
      return CodepointClass::kUnknown;
  }
}

bool IsCanonicalTarget(std::string_view target) {
  return std::all_of(target.begin(), target.end(), [](char c) {
    return (c >= 'a' && c <= 'z') || c == '\'';
  });
}

std::u32string ParseCodepointList(std::string_view field, std::size_t line) {
  std::u32string out;
  for (const std::string& token : SplitWhitespace(field)) {
    if (token.size() < 3 || (token[0] != 'U' && token[0] != 'u') ||
        token[1] != '+') {
      throw Error(ErrorKind::kParseError, "bad codepoint token: " + token,
                  line);
    }
    std::size_t used = 0;
    unsigned long value = 0;
    try {
      value = std::stoul(token.substr(2), &used, 16);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != token.size() - 2 || value > 0x10FFFF) {
      throw Error(ErrorKind::kParseError, "bad codepoint token: " + token,
                  line);
    }
    out.push_back(static_cast<char32_t>(value));
  }
  return out;
}

std::string EncodeUtf8(std::u32string_view cps) {
  icu::UnicodeString u;
  for (char32_t c : cps) u.append(static_cast<UChar32>(c));
  std::string out;
  u.toUTF8String(out);
  return out;
}

}  // namespace

RomanScheme RomanScheme::Builtin(FallbackPolicy policy) {
  RomanScheme scheme;
  internal::AddBuiltinTables(&scheme);
  scheme.set_fallback_policy(policy);
  return scheme;
}

void RomanScheme::AddMapping(std::string_view source, std::string_view target) {
  if (!IsCanonicalTarget(target)) {
    throw Error(ErrorKind::kInvalidArgument,
                "table target must use only a-z and apostrophe: " +
                    std::string(target));
  }
  bool start = false;
  bool end = false;
  if (source.size() > 1 && source.front() == '^') {
    start = true;
    source.remove_prefix(1);
  }
  if (source.size() > 1 && source.back() == '$') {
    end = true;
    source.remove_suffix(1);
  }
  std::u32string key = LowerDecompose(source);
  if (key.empty()) {
    throw Error(ErrorKind::kInvalidArgument, "empty table source");
  }
  max_source_length_ = std::max(max_source_length_, key.size());
  if (start) key.insert(key.begin(), kStartAnchor);
  if (end) key.push_back(kEndAnchor);
  table_[std::move(key)] = std::string(target);
}

void RomanScheme::LoadTable(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  while (ReadLine(in, &line)) {
    ++line_no;
    if (TrimAscii(line).empty() || TrimAscii(line).front() == '#') continue;
    auto fields = SplitTabs(line);
    if (fields.size() != 2) {
      throw Error(ErrorKind::kParseError,
                  "expected source<TAB>target, got " +
                      std::to_string(fields.size()) + " field(s)",
                  line_no);
    }
    std::string_view source = fields[0];
    const std::string_view target = TrimAscii(fields[1]);
    std::string literal;
    if (source.size() >= 2 && (source[0] == 'U' || source[0] == 'u') &&
        source[1] == '+') {
      literal = EncodeUtf8(ParseCodepointList(source, line_no));
      source = literal;
    }
    if (!IsCanonicalTarget(target)) {
      throw Error(ErrorKind::kParseError,
                  "target must use only a-z and apostrophe", line_no);
    }
    try {
      AddMapping(source, target);
    } catch (const Error& e) {
      throw Error(ErrorKind::kParseError, e.message(), line_no);
    }
  }
  if (in.bad()) throw Error(ErrorKind::kIoFailure, "table stream unreadable");
}

void RomanScheme::LoadTableFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::kIoFailure, "cannot open " + path);
  try {
    LoadTable(in);
  } catch (const Error& e) {
    throw Error(e.kind(), path + ": " + e.message(), e.line());
  }
}

void RomanScheme::LoadTableDirectory(const std::string& dir) {
  namespace fs = std::filesystem;
  std::error_code ec;
  if (!fs::is_directory(dir, ec)) {
    throw Error(ErrorKind::kIoFailure, "not a directory: " + dir);
  }
  std::vector<std::string> files;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".tsv") {
      files.push_back(entry.path().string());
    }
  }
  std::sort(files.begin(), files.end());
  for (const auto& f : files) LoadTableFile(f);
}

void RomanScheme::RomanizeCodepoints(std::u32string_view word, std::string* out,
                                     RomanizeStats* stats) const {
  const std::size_t n = word.size();
  std::u32string key;
  std::size_t i = 0;
  while (i < n) {
    bool matched = false;
    for (std::size_t len = std::min(max_source_length_, n - i); len > 0;
         --len) {
      const bool at_start = i == 0;
      const bool at_end = i + len == n;
      const std::u32string_view sub = word.substr(i, len);
      // Most specific anchoring first.
      for (int variant = 0; variant < 4 && !matched; ++variant) {
        const bool want_start = variant == 0 || variant == 2;
        const bool want_end = variant == 0 || variant == 1;
        if ((want_start && !at_start) || (want_end && !at_end)) continue;
        key.clear();
        if (want_start) key.push_back(kStartAnchor);
        key.append(sub);
        if (want_end) key.push_back(kEndAnchor);
        auto it = table_.find(key);
        if (it != table_.end()) {
          out->append(it->second);
          matched = true;
        }
      }
      if (matched) {
        i += len;
        break;
      }
    }
    if (matched) continue;
    switch (Classify(word[i])) {
      case CodepointClass::kMark:
      case CodepointClass::kRemoved:
        break;
      case CodepointClass::kUnknown:
        if (stats != nullptr) ++stats->fallback_count;
        if (fallback_policy_ == FallbackPolicy::kApostrophe) out->push_back('\'');
        break;
    }
    ++i;
  }
}

RomanizedText::RomanizedText(std::vector<Symbol> symbols, std::string source)
    : symbols_(std::move(symbols)), source_(std::move(source)) {}

std::vector<Symbol> RomanizedText::WordTerminated() const {
  std::vector<Symbol> out = symbols_;
  if (!out.empty()) out.push_back(kSeparator);
  return out;
}

std::vector<Symbol> RomanizeWord(std::string_view word,
                                 const RomanScheme& scheme,
                                 RomanizeStats* stats) {
  std::u32string cps = LowerDecompose(word);
  std::erase_if(cps, IsWordBreak);
  if (cps.empty()) {
    throw Error(ErrorKind::kEmptyInput, "word is empty or whitespace-only");
  }
  std::string roman;
  scheme.RomanizeCodepoints(cps, &roman, stats);
  return StringToSymbols(roman);
}

RomanizedText RomanizeText(std::string_view text, const RomanScheme& scheme,
                           RomanizeStats* stats) {
  const std::u32string cps = LowerDecompose(text);
  std::string roman;
  std::string word;
  std::size_t i = 0;
  while (i < cps.size()) {
    while (i < cps.size() && IsWordBreak(cps[i])) ++i;
    const std::size_t start = i;
    while (i < cps.size() && !IsWordBreak(cps[i])) ++i;
    if (i == start) continue;
    word.clear();
    scheme.RomanizeCodepoints(
        std::u32string_view(cps).substr(start, i - start), &word, stats);
    if (word.empty()) continue;
    if (!roman.empty()) roman.push_back('|');
    roman.append(word);
  }
  return RomanizedText(StringToSymbols(roman), std::string(text));
}

VocabularyAudit AuditVocabulary(std::istream& corpus,
                                const RomanScheme& scheme) {
  VocabularyAudit audit;
  std::string line;
  while (ReadLine(corpus, &line)) {
    ++audit.lines;
    const RomanizedText text = RomanizeText(line, scheme);
    for (Symbol s : text.symbols()) ++audit.counts[s];
  }
  if (corpus.bad()) {
    throw Error(ErrorKind::kIoFailure, "corpus stream unreadable");
  }
  return audit;
}

}  // namespace zsdec
