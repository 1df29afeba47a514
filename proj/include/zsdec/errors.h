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

#ifndef ZSDEC_ERRORS_H_
#define ZSDEC_ERRORS_H_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace zsdec {

enum class ErrorKind {
  kInvalidArgument,
  kEmptyInput,
  kIoFailure,
  kEmptyLexicon,
  kParseError,
  kDuplicateWord,
  kEmptyCorpus,
  kInvalidDiscount,
  kInvalidCounts,
  kArpaParseError,
  kCountMismatch,
  kFormatError,
  kDimensionError,
  kVocabMismatch,
  kInvalidEmissions,
  kEmptyReference,
  kDimensionMismatch,
  kSearchSpaceTooLarge,
  kEmptyLanguage,
  kSizeExceedsCorpus,
};

std::string_view ErrorKindName(ErrorKind kind);

// All data and contract errors raised by the library. `line()` is the
// 1-based line of the offending input for text parsers, 0 otherwise.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message, std::size_t line = 0);

  ErrorKind kind() const { return kind_; }
  std::size_t line() const { return line_; }
  // The message without the kind and line prefix of what().
  const std::string& message() const { return message_; }

 private:
  ErrorKind kind_;
  std::size_t line_;
  std::string message_;
};

}  // namespace zsdec

#endif  // ZSDEC_ERRORS_H_
