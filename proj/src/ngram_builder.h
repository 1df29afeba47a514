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

#ifndef ZSDEC_SRC_NGRAM_BUILDER_H_
#define ZSDEC_SRC_NGRAM_BUILDER_H_

#include <optional>
#include <span>
#include <string_view>

#include "zsdec/ngram_lm.h"

namespace zsdec {

// Mutable access to an NGramModel while it is being assembled by the
// trainer or the ARPA reader.
class NGramModelBuilder {
 public:
  NGramModelBuilder(int order, std::optional<double> discount);

  LmWordId Intern(std::string_view word) { return model_.Intern(word); }
  bool HasWord(std::string_view word) const;
  LmWordId WordId(std::string_view word) const;

  NGramModel::Entry& MutableEntry(std::span<const LmWordId> ngram) {
    return model_.MutableEntry(ngram);
  }
  const NGramModel& model() const { return model_; }

  // Recomputes which words have a unigram probability.
  void RefreshPredicted();

  // Finalizes derived lookup state and hands the model over.
  NGramModel Release();

 private:
  NGramModel model_;
};

}  // namespace zsdec

#endif  // ZSDEC_SRC_NGRAM_BUILDER_H_
