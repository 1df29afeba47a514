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

#include "zsdec/alphabet.h"

#include "zsdec/errors.h"

namespace zsdec {

const std::array<std::string_view, kAlphabetSize>& CanonicalVocab() {
  static constexpr std::array<std::string_view, kAlphabetSize> kVocab = {
      "<blank>", "|", "'", "a", "b", "c", "d", "e", "f", "g",
      "h",       "i", "j", "k", "l", "m", "n", "o", "p", "q",
      "r",       "s", "t", "u", "v", "w", "x", "y", "z"};
  return kVocab;
}

std::string_view SymbolName(Symbol s) {
  if (s >= kAlphabetSize) {
    throw Error(ErrorKind::kInvalidArgument,
                "symbol index out of range: " + std::to_string(s));
  }
  return CanonicalVocab()[s];
}

std::optional<Symbol> SymbolFromChar(char c) {
  if (c >= 'a' && c <= 'z') return static_cast<Symbol>(kFirstLetter + (c - 'a'));
  if (c == '|') return kSeparator;
  if (c == '\'') return kApostrophe;
  return std::nullopt;
}

char SymbolChar(Symbol s) {
  if (s == kSeparator) return '|';
  if (s == kApostrophe) return '\'';
  if (s >= kFirstLetter && s < kAlphabetSize) {
    return static_cast<char>('a' + (s - kFirstLetter));
  }
  throw Error(ErrorKind::kInvalidArgument,
              "symbol has no character form: " + std::to_string(s));
}

std::optional<Symbol> SymbolFromName(std::string_view name) {
  if (name.size() == 1) return SymbolFromChar(name[0]);
  if (name == "<blank>") return kBlank;
  return std::nullopt;
}

std::string JoinSymbolNames(std::span<const Symbol> symbols) {
  std::string out;
  for (std::size_t i = 0; i < symbols.size(); ++i) {
    if (i > 0) out += ' ';
    out += SymbolName(symbols[i]);
  }
  return out;
}

std::string SymbolsToString(std::span<const Symbol> symbols) {
  std::string out;
  out.reserve(symbols.size());
  for (Symbol s : symbols) out += SymbolChar(s);
  return out;
}

std::vector<Symbol> StringToSymbols(std::string_view text) {
  std::vector<Symbol> out;
  out.reserve(text.size());
  for (char c : text) {
    auto s = SymbolFromChar(c);
    if (!s) {
      throw Error(ErrorKind::kInvalidArgument,
                  std::string("character outside the canonical alphabet: '") +
                      c + "'");
    }
    out.push_back(*s);
  }
  return out;
}

}  // namespace zsdec
