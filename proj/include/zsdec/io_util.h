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

#ifndef ZSDEC_IO_UTIL_H_
#define ZSDEC_IO_UTIL_H_

#include <cstdint>
#include <istream>
#include <string>
#include <string_view>
#include <vector>

namespace zsdec {

// Whole-file helpers. Failures raise Error(kIoFailure) naming the path.
std::string ReadFile(const std::string& path);
std::vector<std::string> ReadLines(const std::string& path);

// Writes to a sibling temporary file and renames it over path.
void WriteFileAtomic(const std::string& path, std::string_view content);

// Reads one line, stripping a trailing '\r'. Returns false at EOF.
bool ReadLine(std::istream& in, std::string* line);

std::vector<std::string_view> SplitTabs(std::string_view line);

// Splits on ASCII whitespace, dropping empty fields.
std::vector<std::string> SplitWhitespace(std::string_view text);

std::string_view TrimAscii(std::string_view text);

// Locale-independent fixed-point formatting.
std::string FormatFixed(double value, int decimals);

std::uint64_t Fnv1a64(std::string_view data);

}  // namespace zsdec

#endif  // ZSDEC_IO_UTIL_H_
