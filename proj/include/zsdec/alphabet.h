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

#ifndef ZSDEC_ALPHABET_H_
#define ZSDEC_ALPHABET_H_

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace zsdec {

// Index into the canonical CTC alphabet:
//   0 <blank>, 1 '|' (word separator), 2 apostrophe, 3..28 'a'..'z'.
using Symbol = std::uint8_t;

inline constexpr Symbol kBlank = 0;
inline constexpr Symbol kSeparator = 1;
inline constexpr Symbol kApostrophe = 2;
inline constexpr Symbol kFirstLetter = 3;
inline constexpr std::size_t kAlphabetSize = 29;

// Ordered symbol names, as written in emission files and lexicons.
const std::array<std::string_view, kAlphabetSize>& CanonicalVocab();

std::string_view SymbolName(Symbol s);

// Single-character form used in romanized strings ('|', '\'', 'a'..'z').
// The blank has no character form.
std::optional<Symbol> SymbolFromChar(char c);
char SymbolChar(Symbol s);

// Parses a name from CanonicalVocab() ("<blank>", "|", "a", ...).
std::optional<Symbol> SymbolFromName(std::string_view name);

// "c a s a |" style rendering used by lexicon files.
std::string JoinSymbolNames(std::span<const Symbol> symbols);

// Compact rendering ("casa|"). Throws InvalidArgument on <blank>.
std::string SymbolsToString(std::span<const Symbol> symbols);

// Inverse of SymbolsToString. Throws InvalidArgument on characters outside
// the alphabet.
std::vector<Symbol> StringToSymbols(std::string_view text);

}  // namespace zsdec

#endif  // ZSDEC_ALPHABET_H_
