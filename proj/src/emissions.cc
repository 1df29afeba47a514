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

#include "zsdec/emissions.h"

#include <array>
#include <bit>
#include <cmath>
#include <filesystem>
#include <limits>
#include <random>
#include <sstream>

#include "zsdec/errors.h"
#include "zsdec/io_util.h"

namespace zsdec {

namespace {

constexpr char kMagic[4] = {'C', 'T', 'C', 'E'};
constexpr std::uint32_t kVersion = 1;

void PutU16(std::string* out, std::uint16_t v) {
  out->push_back(static_cast<char>(v & 0xFF));
  out->push_back(static_cast<char>((v >> 8) & 0xFF));
}

void PutU32(std::string* out, std::uint32_t v) {
  for (int i = 0; i < 4; ++i) out->push_back(static_cast<char>((v >> (8 * i)) & 0xFF));
}

class ByteReader {
 public:
  explicit ByteReader(std::string_view bytes) : bytes_(bytes) {}

  std::size_t remaining() const { return bytes_.size() - pos_; }

  bool U16(std::uint16_t* v) {
    if (remaining() < 2) return false;
    *v = static_cast<std::uint16_t>(Byte(0) | (Byte(1) << 8));
    pos_ += 2;
    return true;
  }
  bool U32(std::uint32_t* v) {
    if (remaining() < 4) return false;
    *v = Byte(0) | (Byte(1) << 8) | (Byte(2) << 16) | (Byte(3) << 24);
    pos_ += 4;
    return true;
  }
  bool Bytes(std::size_t n, std::string_view* out) {
    if (remaining() < n) return false;
    *out = bytes_.substr(pos_, n);
    pos_ += n;
    return true;
  }

 private:
  std::uint32_t Byte(std::size_t i) const {
    return static_cast<unsigned char>(bytes_[pos_ + i]);
  }
  std::string_view bytes_;
  std::size_t pos_ = 0;
};

// Uniform double in [0, 1) from the top 53 bits; identical on every
// platform, unlike std::uniform_real_distribution.
double UnitUniform(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

EmissionMatrix::EmissionMatrix(std::string utterance_id, std::size_t frames,
                               std::vector<float> logp)
    : utterance_id_(std::move(utterance_id)),
      frames_(frames),
      logp_(std::move(logp)) {
  if (logp_.size() != frames_ * kAlphabetSize) {
    throw Error(ErrorKind::kDimensionError,
                "emission payload has " + std::to_string(logp_.size()) +
                    " values, expected " +
                    std::to_string(frames_ * kAlphabetSize));
  }
}

void ValidateEmissions(const EmissionMatrix& m) {
  for (std::size_t t = 0; t < m.frames(); ++t) {
    double max_v = -std::numeric_limits<double>::infinity();
    for (float v : m.row(t)) {
      if (!std::isfinite(v) || v > 0.0f) {
        throw Error(ErrorKind::kInvalidEmissions,
                    m.utterance_id() + ": frame " + std::to_string(t) +
                        " has an entry that is not a finite log-probability");
      }
      max_v = std::max(max_v, static_cast<double>(v));
    }
    double sum = 0.0;
    for (float v : m.row(t)) sum += std::exp(static_cast<double>(v) - max_v);
    const double log_total = max_v + std::log(sum);
    if (std::abs(log_total) > 1e-3) {
      throw Error(ErrorKind::kInvalidEmissions,
                  m.utterance_id() + ": frame " + std::to_string(t) +
                      " is not normalized (log sum " +
                      std::to_string(log_total) + ")");
    }
  }
}

std::string EncodeEmissions(const EmissionMatrix& m) {
  std::string out;
  out.reserve(16 + 4 * m.data().size() + 64);
  out.append(kMagic, 4);
  PutU32(&out, kVersion);
  PutU32(&out, static_cast<std::uint32_t>(m.frames()));
  PutU32(&out, static_cast<std::uint32_t>(kAlphabetSize));
  for (std::string_view name : CanonicalVocab()) {
    PutU16(&out, static_cast<std::uint16_t>(name.size()));
    out.append(name);
  }
  for (float v : m.data()) PutU32(&out, std::bit_cast<std::uint32_t>(v));
  return out;
}

void WriteEmissions(const EmissionMatrix& m, std::ostream& out) {
  const std::string bytes = EncodeEmissions(m);
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw Error(ErrorKind::kIoFailure, "emission write failed");
}

EmissionMatrix DecodeEmissions(std::string_view bytes,
                               std::string utterance_id) {
  ByteReader in(bytes);
  std::string_view magic;
  if (!in.Bytes(4, &magic) || magic != std::string_view(kMagic, 4)) {
    throw Error(ErrorKind::kFormatError, "bad magic, expected CTCE");
  }
  std::uint32_t version = 0, frames = 0, vocab = 0;
  if (!in.U32(&version)) throw Error(ErrorKind::kFormatError, "truncated header");
  if (version != kVersion) {
    throw Error(ErrorKind::kFormatError,
                "unsupported version " + std::to_string(version));
  }
  if (!in.U32(&frames) || !in.U32(&vocab)) {
    throw Error(ErrorKind::kFormatError, "truncated header");
  }
  std::vector<std::string> names;
  for (std::uint32_t v = 0; v < vocab; ++v) {
    std::uint16_t len = 0;
    std::string_view name;
    if (!in.U16(&len) || !in.Bytes(len, &name)) {
      throw Error(ErrorKind::kFormatError, "truncated vocabulary");
    }
    names.emplace_back(name);
  }
  const auto& canonical = CanonicalVocab();
  bool vocab_ok = names.size() == canonical.size();
  for (std::size_t i = 0; vocab_ok && i < names.size(); ++i) {
    vocab_ok = names[i] == canonical[i];
  }
  if (!vocab_ok) {
    throw Error(ErrorKind::kVocabMismatch,
                "emission vocabulary differs from the canonical alphabet");
  }
  const std::size_t expected =
      static_cast<std::size_t>(frames) * kAlphabetSize * 4;
  if (in.remaining() != expected) {
    throw Error(ErrorKind::kDimensionError,
                "payload has " + std::to_string(in.remaining()) +
                    " bytes, expected " + std::to_string(expected));
  }
  std::vector<float> logp(static_cast<std::size_t>(frames) * kAlphabetSize);
  for (float& v : logp) {
    std::uint32_t raw = 0;
    in.U32(&raw);
    v = std::bit_cast<float>(raw);
  }
  return EmissionMatrix(std::move(utterance_id), frames, std::move(logp));
}

EmissionMatrix ReadEmissionsFile(const std::string& path,
                                 std::string utterance_id) {
  const std::string bytes = ReadFile(path);
  try {
    return DecodeEmissions(bytes, std::move(utterance_id));
  } catch (const Error& e) {
    throw Error(e.kind(), path + ": " + e.message());
  }
}

void WriteEmissionsFile(const EmissionMatrix& m, const std::string& path) {
  WriteFileAtomic(path, EncodeEmissions(m));
}

EmissionMatrix SynthesizeEmissions(std::span<const Symbol> reference,
                                   const SynthesisOptions& options,
                                   std::string utterance_id) {
  if (reference.empty()) {
    throw Error(ErrorKind::kEmptyReference, "cannot synthesize empty reference");
  }
  if (options.frames_per_symbol < 1) {
    throw Error(ErrorKind::kInvalidArgument, "frames_per_symbol must be >= 1");
  }
  if (!(options.noise >= 0.0 && options.noise < 1.0)) {
    throw Error(ErrorKind::kInvalidArgument, "noise must lie in [0, 1)");
  }
  for (Symbol s : reference) {
    if (s == kBlank || s >= kAlphabetSize) {
      throw Error(ErrorKind::kInvalidArgument,
                  "reference may contain only non-blank canonical symbols");
    }
  }

  std::vector<Symbol> targets;
  for (std::size_t i = 0; i < reference.size(); ++i) {
    if (i > 0 && reference[i] == reference[i - 1]) targets.push_back(kBlank);
    for (int k = 0; k < options.frames_per_symbol; ++k) {
      targets.push_back(reference[i]);
    }
  }

  std::mt19937_64 rng(options.seed);
  const double eps = options.noise;
  const double off = eps / static_cast<double>(kAlphabetSize - 1);
  std::vector<float> logp(targets.size() * kAlphabetSize);
  std::array<double, kAlphabetSize> probs{};
  for (std::size_t t = 0; t < targets.size(); ++t) {
    double total = 0.0;
    for (Symbol v = 0; v < kAlphabetSize; ++v) {
      double p = 1.0 - eps;
      if (v != targets[t]) {
        p = off;
        if (options.jitter && eps > 0.0) {
          p *= 1.0 + 0.2 * (UnitUniform(rng) - 0.5);
        }
      }
      probs[v] = p;
      total += p;
    }
    for (Symbol v = 0; v < kAlphabetSize; ++v) {
      const double p = probs[v] / total;
      logp[t * kAlphabetSize + v] =
          p > 0.0 ? static_cast<float>(std::log(p)) : kNegInf;
    }
  }
  return EmissionMatrix(std::move(utterance_id), targets.size(),
                        std::move(logp));
}

std::uint64_t UtteranceSeed(std::uint64_t seed, std::string_view utterance_id) {
  return seed ^ Fnv1a64(utterance_id);
}

std::vector<ManifestEntry> ParseManifest(std::string_view text) {
  std::vector<ManifestEntry> entries;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (ReadLine(in, &line)) {
    ++line_no;
    if (TrimAscii(line).empty()) continue;
    auto fields = SplitTabs(line);
    if (fields.size() != 3 || fields[0].empty() || fields[1].empty()) {
      throw Error(ErrorKind::kParseError,
                  "expected utterance_id<TAB>path<TAB>reference", line_no);
    }
    entries.push_back({std::string(fields[0]), std::string(fields[1]),
                       std::string(fields[2])});
  }
  return entries;
}

std::string SerializeManifest(std::span<const ManifestEntry> entries) {
  std::string out;
  for (const auto& e : entries) {
    out += e.utterance_id + '\t' + e.path + '\t' + e.reference + '\n';
  }
  return out;
}

std::string ResolveManifestPath(const std::string& manifest_path,
                                const std::string& entry_path) {
  namespace fs = std::filesystem;
  const fs::path p(entry_path);
  if (p.is_absolute()) return entry_path;
  return (fs::path(manifest_path).parent_path() / p).string();
}

}  // namespace zsdec
