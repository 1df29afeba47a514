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

#ifndef ZSDEC_EMISSIONS_H_
#define ZSDEC_EMISSIONS_H_

#include <cstddef>
#include <cstdint>
#include <istream>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "zsdec/alphabet.h"

namespace zsdec {

// Stand-in for log(0) in emission matrices.
inline constexpr float kNegInf = -1e30f;

// T x V frame log-probabilities (natural log) over the canonical alphabet,
// row-major. V is always kAlphabetSize.
class EmissionMatrix {
 public:
  EmissionMatrix() = default;
  // logp.size() must equal frames * kAlphabetSize.
  EmissionMatrix(std::string utterance_id, std::size_t frames,
                 std::vector<float> logp);

  const std::string& utterance_id() const { return utterance_id_; }
  void set_utterance_id(std::string id) { utterance_id_ = std::move(id); }

  std::size_t frames() const { return frames_; }
  std::size_t vocab_size() const { return kAlphabetSize; }

  float at(std::size_t t, Symbol s) const { return logp_[t * kAlphabetSize + s]; }
  std::span<const float> row(std::size_t t) const {
    return std::span<const float>(logp_).subspan(t * kAlphabetSize,
                                                 kAlphabetSize);
  }
  const std::vector<float>& data() const { return logp_; }

  bool operator==(const EmissionMatrix&) const = default;

 private:
  std::string utterance_id_;
  std::size_t frames_ = 0;
  std::vector<float> logp_;
};

// Checks row normalization (|log sum exp| <= 1e-3) and that entries are
// finite and <= 0. Throws InvalidEmissions naming the first bad frame.
void ValidateEmissions(const EmissionMatrix& m);

// Binary format, little-endian:
//   "CTCE" | u32 version (1) | u32 T | u32 V |
//   V x (u16 byte length + UTF-8 name) | T*V float32, row-major.
void WriteEmissions(const EmissionMatrix& m, std::ostream& out);
std::string EncodeEmissions(const EmissionMatrix& m);

// Throws FormatError (magic/version/truncated header), VocabMismatch
// (vocabulary differs from the canonical alphabet) or DimensionError
// (payload length differs from T*V*4).
EmissionMatrix DecodeEmissions(std::string_view bytes,
                               std::string utterance_id = {});
EmissionMatrix ReadEmissionsFile(const std::string& path,
                                 std::string utterance_id = {});
void WriteEmissionsFile(const EmissionMatrix& m, const std::string& path);

struct SynthesisOptions {
  int frames_per_symbol = 1;
  double noise = 0.0;  // epsilon in [0, 1)
  std::uint64_t seed = 0;
  // Per-frame multiplicative jitter of +-10% on the off-target mass.
  bool jitter = true;
};

// Builds emissions in which each reference symbol owns frames_per_symbol
// consecutive frames with probability 1 - noise, the rest spread evenly over
// the other 28 symbols (kNegInf when noise is 0). A single blank-dominated
// frame separates identical neighbours. Deterministic in (reference,
// options). Throws EmptyReference, or InvalidArgument for bad options or a
// blank inside the reference.
EmissionMatrix SynthesizeEmissions(std::span<const Symbol> reference,
                                   const SynthesisOptions& options,
                                   std::string utterance_id = {});

// seed XOR hash(utterance_id): per-utterance seeds independent of batch
// order.
std::uint64_t UtteranceSeed(std::uint64_t seed, std::string_view utterance_id);

struct ManifestEntry {
  std::string utterance_id;
  std::string path;
  std::string reference;
};

// "utterance_id<TAB>path<TAB>reference-text" lines. Relative paths are kept
// as written; ResolveManifestPath anchors them at the manifest's directory.
std::vector<ManifestEntry> ParseManifest(std::string_view text);
std::string SerializeManifest(std::span<const ManifestEntry> entries);
std::string ResolveManifestPath(const std::string& manifest_path,
                                const std::string& entry_path);

}  // namespace zsdec

#endif  // ZSDEC_EMISSIONS_H_
