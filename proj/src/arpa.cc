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

// ARPA backoff model text format: a "\data\" line, one "ngram N=<count>"
// line per order, then per order a "\N-grams:" section of
// "<log10 prob><TAB><w1 ... wN>[<TAB><log10 backoff>]" lines, and a final
// "\end\" line. <s> is listed with the conventional placeholder probability
// -99 and is never treated as a predicted word.

#include <algorithm>
#include <charconv>
#include <cmath>
#include <string>
#include <vector>

#include "ngram_builder.h"
#include "zsdec/errors.h"
#include "zsdec/io_util.h"
#include "zsdec/ngram_lm.h"

namespace zsdec {

namespace {

constexpr double kBosPlaceholder = -99.0;

class LineReader {
 public:
  explicit LineReader(std::string_view text) : text_(text) {}

  bool Next(std::string_view* line) {
    if (pos_ >= text_.size()) return false;
    std::size_t eol = text_.find('\n', pos_);
    if (eol == std::string_view::npos) eol = text_.size();
    *line = text_.substr(pos_, eol - pos_);
    if (!line->empty() && line->back() == '\r') line->remove_suffix(1);
    pos_ = eol + 1;
    ++line_no_;
    return true;
  }
  std::size_t line_no() const { return line_no_; }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_no_ = 0;
};

bool ParseDouble(std::string_view text, double* value) {
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), *value);
  return ec == std::errc() && ptr == text.data() + text.size() &&
         std::isfinite(*value);
}

std::vector<std::string_view> SplitFields(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

}  // namespace

NGramModel ReadArpa(std::string_view text) {
  LineReader reader(text);
  std::string_view line;
  auto fail = [&](const std::string& msg) -> Error {
    return Error(ErrorKind::kArpaParseError, msg, reader.line_no());
  };

  bool found_data = false;
  while (reader.Next(&line)) {
    if (TrimAscii(line) == "\\data\\") {
      found_data = true;
      break;
    }
  }
  if (!found_data) throw fail("missing \\data\\ header");

  std::vector<std::size_t> declared;
  while (reader.Next(&line)) {
    std::string_view t = TrimAscii(line);
    if (t.empty()) {
      if (declared.empty()) continue;
      break;
    }
    if (t.substr(0, 6) != "ngram ") throw fail("expected 'ngram N=count'");
    t.remove_prefix(6);
    const std::size_t eq = t.find('=');
    if (eq == std::string_view::npos) throw fail("expected 'ngram N=count'");
    std::size_t n = 0;
    std::size_t count = 0;
    std::string_view n_text = TrimAscii(t.substr(0, eq));
    std::string_view c_text = TrimAscii(t.substr(eq + 1));
    auto r1 = std::from_chars(n_text.data(), n_text.data() + n_text.size(), n);
    auto r2 = std::from_chars(c_text.data(), c_text.data() + c_text.size(), count);
    if (r1.ec != std::errc() || r1.ptr != n_text.data() + n_text.size() ||
        r2.ec != std::errc() || r2.ptr != c_text.data() + c_text.size()) {
      throw fail("malformed ngram count line");
    }
    if (n != declared.size() + 1) throw fail("ngram orders must be 1, 2, ...");
    if (n > static_cast<std::size_t>(NGramModel::kMaxOrder)) {
      throw fail("orders above 3 are not supported");
    }
    declared.push_back(count);
  }
  if (declared.empty()) throw fail("no ngram counts declared");

  const int order = static_cast<int>(declared.size());
  NGramModelBuilder builder(order, std::nullopt);
  bool at_end = false;
  bool have_line = reader.Next(&line);
  for (int n = 1; n <= order; ++n) {
    while (have_line && TrimAscii(line).empty()) have_line = reader.Next(&line);
    const std::string header = "\\" + std::to_string(n) + "-grams:";
    if (!have_line || TrimAscii(line) != header) {
      throw fail("expected " + header);
    }
    const std::size_t header_line = reader.line_no();
    std::size_t seen = 0;
    std::vector<LmWordId> ids(static_cast<std::size_t>(n));
    while ((have_line = reader.Next(&line))) {
      std::string_view t = TrimAscii(line);
      if (t.empty()) continue;
      if (t.front() == '\\') break;
      auto fields = SplitFields(t);
      if (fields.size() != static_cast<std::size_t>(n) + 1 &&
          fields.size() != static_cast<std::size_t>(n) + 2) {
        throw fail("expected logprob, " + std::to_string(n) +
                   " word(s), optional backoff");
      }
      double log_prob = 0.0;
      if (!ParseDouble(fields[0], &log_prob)) throw fail("bad log probability");
      double log_backoff = 0.0;
      const bool has_backoff = fields.size() == static_cast<std::size_t>(n) + 2;
      if (has_backoff && !ParseDouble(fields.back(), &log_backoff)) {
        throw fail("bad backoff weight");
      }
      for (int i = 0; i < n; ++i) {
        const std::string_view w = fields[static_cast<std::size_t>(i) + 1];
        if (n == 1) {
          ids[0] = builder.Intern(w);
        } else if (!builder.HasWord(w)) {
          throw fail("word missing from unigrams: " + std::string(w));
        } else {
          ids[static_cast<std::size_t>(i)] = builder.WordId(w);
        }
      }
      if (builder.model().Find(ids) != nullptr) {
        throw fail("duplicate n-gram");
      }
      auto& e = builder.MutableEntry(ids);
      if (ids.back() == kBosId) {
        if (n > 1) throw fail("<s> cannot be predicted");
        e.has_prob = false;
      } else {
        if (log_prob > 0.0) throw fail("log probability above 0");
        e.log_prob = log_prob;
        e.has_prob = true;
      }
      e.log_backoff = log_backoff;
      e.has_backoff = has_backoff;
      ++seen;
    }
    if (seen != declared[static_cast<std::size_t>(n - 1)]) {
      throw Error(ErrorKind::kCountMismatch,
                  "\\" + std::to_string(n) + "-grams: declared " +
                      std::to_string(declared[static_cast<std::size_t>(n - 1)]) +
                      ", found " + std::to_string(seen),
                  header_line);
    }
  }
  while (have_line) {
    const std::string_view t = TrimAscii(line);
    if (t == "\\end\\") {
      at_end = true;
      break;
    }
    if (!t.empty()) throw fail("unexpected content before \\end\\");
    have_line = reader.Next(&line);
  }
  if (!at_end) throw fail("missing \\end\\");
  return builder.Release();
}

std::string WriteArpa(const NGramModel& model) {
  struct Row {
    std::vector<std::string> words;
    NGramModel::Entry entry;
  };
  std::vector<std::vector<Row>> sections(static_cast<std::size_t>(model.order()));
  for (int n = 1; n <= model.order(); ++n) {
    auto& rows = sections[static_cast<std::size_t>(n - 1)];
    model.ForEachEntry(n, [&](std::span<const LmWordId> ids,
                              const NGramModel::Entry& e) {
      Row row;
      for (LmWordId id : ids) row.words.push_back(model.word(id));
      row.entry = e;
      rows.push_back(std::move(row));
    });
    std::sort(rows.begin(), rows.end(),
              [](const Row& a, const Row& b) { return a.words < b.words; });
  }

  std::string out = "\\data\\\n";
  for (int n = 1; n <= model.order(); ++n) {
    out += "ngram " + std::to_string(n) + "=" +
           std::to_string(sections[static_cast<std::size_t>(n - 1)].size()) +
           "\n";
  }
  for (int n = 1; n <= model.order(); ++n) {
    out += "\n\\" + std::to_string(n) + "-grams:\n";
    for (const Row& row : sections[static_cast<std::size_t>(n - 1)]) {
      out += FormatFixed(row.entry.has_prob ? row.entry.log_prob
                                            : kBosPlaceholder,
                         7);
      out += '\t';
      for (std::size_t i = 0; i < row.words.size(); ++i) {
        if (i > 0) out += ' ';
        out += row.words[i];
      }
      if (row.entry.has_backoff) {
        out += '\t';
        out += FormatFixed(row.entry.log_backoff, 7);
      }
      out += '\n';
    }
  }
  out += "\n\\end\\\n";
  return out;
}

}  // namespace zsdec
