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

#include "zsdec/errors.h"

namespace zsdec {

std::string_view ErrorKindName(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kInvalidArgument: return "InvalidArgument";
    case ErrorKind::kEmptyInput: return "EmptyInput";
    case ErrorKind::kIoFailure: return "IoFailure";
    case ErrorKind::kEmptyLexicon: return "EmptyLexicon";
    case ErrorKind::kParseError: return "ParseError";
    case ErrorKind::kDuplicateWord: return "DuplicateWord";
    case ErrorKind::kEmptyCorpus: return "EmptyCorpus";
    case ErrorKind::kInvalidDiscount: return "InvalidDiscount";
    case ErrorKind::kInvalidCounts: return "InvalidCounts";
    case ErrorKind::kArpaParseError: return "ArpaParseError";
    case ErrorKind::kCountMismatch: return "CountMismatch";
    case ErrorKind::kFormatError: return "FormatError";
    case ErrorKind::kDimensionError: return "DimensionError";
    case ErrorKind::kVocabMismatch: return "VocabMismatch";
    case ErrorKind::kInvalidEmissions: return "InvalidEmissions";
    case ErrorKind::kEmptyReference: return "EmptyReference";
    case ErrorKind::kDimensionMismatch: return "DimensionMismatch";
    case ErrorKind::kSearchSpaceTooLarge: return "SearchSpaceTooLarge";
    case ErrorKind::kEmptyLanguage: return "EmptyLanguage";
    case ErrorKind::kSizeExceedsCorpus: return "SizeExceedsCorpus";
  }
  return "Unknown";
}

namespace {

std::string Format(ErrorKind kind, const std::string& message,
                   std::size_t line) {
  std::string out(ErrorKindName(kind));
  if (line > 0) out += " (line " + std::to_string(line) + ")";
  out += ": ";
  out += message;
  return out;
}

}  // namespace

Error::Error(ErrorKind kind, const std::string& message, std::size_t line)
    : std::runtime_error(Format(kind, message, line)),
      kind_(kind),
      line_(line),
      message_(message) {}

}  // namespace zsdec
