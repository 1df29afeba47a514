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

#include "cli.h"

#include <filesystem>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "zsdec/ctc_decoder.h"
#include "zsdec/emissions.h"
#include "zsdec/errors.h"
#include "zsdec/evaluation.h"
#include "zsdec/io_util.h"
#include "zsdec/lexicon.h"
#include "zsdec/ngram_lm.h"
#include "zsdec/parallel.h"
#include "zsdec/romanizer.h"

namespace zsdec::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DataError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Runs fn, tagging library errors with the file they came from.
template <typename Fn>
auto WithFile(const std::string& path, Fn&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const Error& e) {
    throw DataError(path + ": " + e.what());
  }
}

std::string ReadInput(const std::string& path) {
  return WithFile(path, [&] { return ReadFile(path); });
}

void WriteOutput(const std::string& path, std::string_view content) {
  WithFile(path, [&] { WriteFileAtomic(path, content); });
}

struct SchemeFlags {
  std::string tables;
  std::string fallback = "drop";

  void Register(CLI::App* app) {
    app->add_option("--tables", tables,
                    "Directory of extra *.tsv romanization tables")
        ->check(CLI::ExistingDirectory);
    app->add_option("--fallback", fallback,
                    "Unknown-codepoint policy: drop or apostrophe")
        ->check(CLI::IsMember({"drop", "apostrophe"}));
  }

  RomanScheme Build() const {
    RomanScheme scheme = RomanScheme::Builtin(
        fallback == "apostrophe" ? FallbackPolicy::kApostrophe
                                 : FallbackPolicy::kDrop);
    if (!tables.empty()) {
      WithFile(tables, [&] { scheme.LoadTableDirectory(tables); });
    }
    return scheme;
  }
};

struct DecodeFlags {
  DecodeConfig config;
  bool no_eos = false;

  void Register(CLI::App* app, bool with_weights) {
    if (with_weights) {
      app->add_option("--lm-weight", config.lm_weight, "LM weight alpha (>= 0)")
          ->capture_default_str();
      app->add_option("--word-score", config.word_score,
                      "Per-word score beta")
          ->capture_default_str();
    }
    app->add_option("--beam", config.beam_size, "Beam size (>= 1)")
        ->capture_default_str();
    app->add_option("--beam-threshold", config.beam_threshold,
                    "Prune hypotheses this far below the best (natural log)")
        ->capture_default_str();
    app->add_flag("--no-eos", no_eos, "Skip the end-of-sentence LM term");
  }

  DecodeConfig Finish() {
    config.apply_eos = !no_eos;
    if (config.beam_size < 1) throw UsageError("--beam must be >= 1");
    if (!(config.beam_threshold > 0.0)) {
      throw UsageError("--beam-threshold must be > 0");
    }
    if (!(config.lm_weight >= 0.0)) throw UsageError("--lm-weight must be >= 0");
    try {
      config.Validate();
    } catch (const Error& e) {
      throw UsageError(e.message());
    }
    return config;
  }
};

int RequirePositive(int value, const std::string& flag) {
  if (value < 1) throw UsageError(flag + " must be >= 1");
  return value;
}

NGramModel LoadLm(const std::string& path) {
  const std::string text = ReadInput(path);
  return WithFile(path, [&] { return ReadArpa(text); });
}

Lexicon LoadLexicon(const std::string& path) {
  const std::string text = ReadInput(path);
  return WithFile(path, [&] { return ParseLexicon(text); });
}

std::vector<ReferenceEntry> LoadReferences(const std::string& path) {
  const std::string text = ReadInput(path);
  return WithFile(path, [&] { return ParseReferences(text); });
}

std::vector<ManifestEntry> LoadManifest(const std::string& path) {
  const std::string text = ReadInput(path);
  return WithFile(path, [&] { return ParseManifest(text); });
}

// Joins manifest emissions with reference languages and texts by id.
std::vector<DevUtterance> LoadDev(const std::string& manifest_path,
                                  const std::string& refs_path, int jobs) {
  const auto manifest = LoadManifest(manifest_path);
  const auto refs = LoadReferences(refs_path);
  std::map<std::string, const ReferenceEntry*> by_id;
  for (const auto& r : refs) by_id[r.utterance_id] = &r;
  std::vector<const ReferenceEntry*> matched;
  for (const auto& m : manifest) {
    auto it = by_id.find(m.utterance_id);
    if (it == by_id.end()) {
      throw DataError(refs_path + ": no reference for utterance '" +
                      m.utterance_id + "'");
    }
    matched.push_back(it->second);
  }
  std::vector<std::optional<DevUtterance>> slots(manifest.size());
  ParallelFor(manifest.size(), jobs, [&](std::size_t i) {
    const std::string path =
        ResolveManifestPath(manifest_path, manifest[i].path);
    EmissionMatrix m = WithFile(path, [&] {
      return ReadEmissionsFile(path, manifest[i].utterance_id);
    });
    slots[i] = DevUtterance{matched[i]->language, std::move(m),
                            matched[i]->text};
  });
  std::vector<DevUtterance> dev;
  dev.reserve(slots.size());
  for (auto& s : slots) dev.push_back(std::move(*s));
  return dev;
}

constexpr const char* kFormats = R"(Formats (one example line each):
  references     utt001<TAB>es<TAB>el gato come
  manifest       utt001<TAB>utt001.ctce<TAB>el gato come
  lexicon        gato<TAB>g a t o |
  word list      gato
  word counts    gato<TAB>12
  n-gram counts  el gato<TAB>3
  hypotheses     utt001<TAB>el gato come<TAB>-12.345678<TAB>false
  sweep csv      10,0.412000,0.305000
  emissions      binary: "CTCE", u32 version=1, u32 T, u32 V, V x (u16 len +
                 UTF-8 symbol), T*V float32 natural-log probabilities
  ARPA           standard \data\ / \N-grams: / \end\ text, log10 values
Exit codes: 0 success, 1 usage error, 2 data error.)";

int CmdRomanize(const std::string& in_path, const std::string& out_path,
                const SchemeFlags& scheme_flags, std::ostream& out) {
  const RomanScheme scheme = scheme_flags.Build();
  const std::string text = ReadInput(in_path);
  std::istringstream in(text);
  std::string line, result;
  RomanizeStats stats;
  while (ReadLine(in, &line)) {
    result += RomanizeText(line, scheme, &stats).str();
    result += '\n';
  }
  WriteOutput(out_path, result);
  out << "romanized " << in_path << " -> " << out_path << " ("
      << stats.fallback_count << " unknown codepoints)\n";
  return kExitOk;
}

int CmdBuildLexicon(const std::string& words_path, const std::string& freq_path,
                    std::uint64_t min_count, const std::string& out_path,
                    const SchemeFlags& scheme_flags, std::ostream& out) {
  const RomanScheme scheme = scheme_flags.Build();
  std::vector<std::string> words;
  if (!words_path.empty()) {
    std::istringstream in(ReadInput(words_path));
    words = WithFile(words_path, [&] { return ReadWordList(in); });
  } else {
    std::istringstream in(ReadInput(freq_path));
    const auto counts = WithFile(freq_path, [&] { return ReadWordCounts(in); });
    words = WordsWithMinCount(counts, min_count);
  }
  LexiconBuildStats stats;
  const std::string& source = words_path.empty() ? freq_path : words_path;
  const Lexicon lexicon =
      WithFile(source, [&] { return BuildLexicon(words, scheme, &stats); });
  WriteOutput(out_path, SerializeLexicon(lexicon));
  out << "lexicon: " << lexicon.size() << " words, " << stats.duplicates
      << " duplicates, " << stats.dropped_empty << " dropped, "
      << stats.fallback_count << " unknown codepoints\n";
  return kExitOk;
}

int CmdTrainLm(const std::string& corpus_path, const std::string& counts_path,
               int order, double discount, const std::string& out_path,
               std::ostream& out) {
  NGramModel model = [&] {
    if (!corpus_path.empty()) {
      std::istringstream in(ReadInput(corpus_path));
      std::vector<std::vector<std::string>> sentences;
      std::string line;
      while (ReadLine(in, &line)) {
        auto words = SplitWhitespace(line);
        if (!words.empty()) sentences.push_back(std::move(words));
      }
      return WithFile(corpus_path,
                      [&] { return TrainNGram(sentences, order, discount); });
    }
    std::istringstream in(ReadInput(counts_path));
    const auto counts = WithFile(counts_path, [&] { return ReadNGramCounts(in); });
    return WithFile(counts_path, [&] {
      return TrainNGramFromCounts(counts, order, discount);
    });
  }();
  WriteOutput(out_path, WriteArpa(model));
  out << "lm: order " << model.order() << ", " << model.vocab().size()
      << " vocabulary entries\n";
  return kExitOk;
}

int CmdSynth(const std::string& refs_path, const std::string& out_dir,
             const SynthesisOptions& base, const SchemeFlags& scheme_flags,
             std::ostream& out) {
  const RomanScheme scheme = scheme_flags.Build();
  const auto refs = LoadReferences(refs_path);
  for (const auto& r : refs) {
    if (r.utterance_id.find('/') != std::string::npos ||
        r.utterance_id == "." || r.utterance_id == "..") {
      throw DataError(refs_path + ": utterance id '" + r.utterance_id +
                      "' is not a valid file name");
    }
  }
  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec) throw DataError(out_dir + ": " + ec.message());
  std::vector<ManifestEntry> manifest;
  for (const auto& r : refs) {
    const RomanizedText text = RomanizeText(r.text, scheme);
    SynthesisOptions options = base;
    options.seed = UtteranceSeed(base.seed, r.utterance_id);
    const EmissionMatrix m = WithFile(refs_path, [&] {
      return SynthesizeEmissions(text.WordTerminated(), options, r.utterance_id);
    });
    const std::string file = r.utterance_id + ".ctce";
    WithFile(out_dir, [&] {
      WriteEmissionsFile(m, (std::filesystem::path(out_dir) / file).string());
    });
    manifest.push_back({r.utterance_id, file, r.text});
  }
  const std::string manifest_path =
      (std::filesystem::path(out_dir) / "manifest.tsv").string();
  WriteOutput(manifest_path, SerializeManifest(manifest));
  out << "synthesized " << manifest.size() << " utterances -> "
      << manifest_path << "\n";
  return kExitOk;
}

int CmdDecode(const std::string& manifest_path, const std::string& lexicon_path,
              const std::string& lm_path, const DecodeConfig& config, int jobs,
              const std::string& out_path, std::ostream& out) {
  const auto manifest = LoadManifest(manifest_path);
  const Lexicon lexicon = LoadLexicon(lexicon_path);
  std::optional<NGramModel> lm;
  if (!lm_path.empty()) lm = LoadLm(lm_path);
  const LexiconTrie trie(lexicon);
  const LexiconBeamDecoder decoder =
      WithFile(lexicon_path, [&] {
        return LexiconBeamDecoder(lexicon, trie, lm ? &*lm : nullptr, config);
      });
  std::vector<HypothesisEntry> hyps(manifest.size());
  ParallelFor(manifest.size(), jobs, [&](std::size_t i) {
    const std::string path =
        ResolveManifestPath(manifest_path, manifest[i].path);
    const DecodeResult r = WithFile(path, [&] {
      return decoder.Decode(ReadEmissionsFile(path, manifest[i].utterance_id));
    });
    hyps[i] = {manifest[i].utterance_id, HypothesisText(r), r.total_score,
               r.forced_finalization};
  });
  WriteOutput(out_path, SerializeHypotheses(hyps));
  std::size_t forced = 0;
  for (const auto& h : hyps) forced += h.forced_finalization ? 1 : 0;
  out << "decoded " << hyps.size() << " utterances (beam " << config.beam_size
      << ", " << forced << " force-finalized)\n";
  return kExitOk;
}

int CmdEval(const std::string& refs_path, const std::string& hyps_path,
            const std::string& out_path, std::ostream& out) {
  const auto refs = LoadReferences(refs_path);
  const std::string hyp_text = ReadInput(hyps_path);
  const auto hyps = WithFile(hyps_path, [&] { return ParseHypotheses(hyp_text); });
  std::map<std::string, const HypothesisEntry*> by_id;
  for (const auto& h : hyps) {
    if (!by_id.emplace(h.utterance_id, &h).second) {
      throw DataError(hyps_path + ": duplicate utterance '" + h.utterance_id +
                      "'");
    }
  }
  CorpusPairs pairs;
  for (const auto& r : refs) {
    auto it = by_id.find(r.utterance_id);
    if (it == by_id.end()) {
      throw DataError(hyps_path + ": missing hypothesis for '" +
                      r.utterance_id + "'");
    }
    pairs[r.language].push_back({r.text, it->second->words});
    by_id.erase(it);
  }
  if (!by_id.empty()) {
    throw DataError(hyps_path + ": hypothesis '" + by_id.begin()->first +
                    "' has no reference");
  }
  const EvalReport report = WithFile(refs_path, [&] { return EvaluateCorpus(pairs); });
  WriteOutput(out_path, report.ToJson());
  out << report.ToTable();
  return kExitOk;
}

int CmdTune(const std::string& manifest_path, const std::string& refs_path,
            const std::string& lexicon_path, const std::string& lm_path,
            const std::vector<double>& alphas, const std::vector<double>& betas,
            const DecodeConfig& base, int jobs, const std::string& out_path,
            std::ostream& out) {
  const auto dev = LoadDev(manifest_path, refs_path, jobs);
  const Lexicon lexicon = LoadLexicon(lexicon_path);
  const NGramModel lm = LoadLm(lm_path);
  const LexiconTrie trie(lexicon);
  const TuneResult result = WithFile(manifest_path, [&] {
    return GridSearch(dev, trie, lexicon, &lm, alphas, betas, base, jobs);
  });
  WriteOutput(out_path, result.ToJson());
  out << "best lm_weight " << FormatFixed(result.best.lm_weight, 4)
      << " word_score " << FormatFixed(result.best.word_score, 4)
      << " average_cer " << FormatFixed(result.best.average_cer, 6) << " over "
      << result.grid.size() << " grid points\n";
  return kExitOk;
}

std::vector<std::size_t> ParseSizes(const std::string& spec) {
  std::vector<std::size_t> sizes;
  std::stringstream ss(spec);
  std::string field;
  while (std::getline(ss, field, ',')) {
    const std::string t(TrimAscii(field));
    if (t.empty() || t.find_first_not_of("0123456789") != std::string::npos ||
        t.size() > 18) {
      throw UsageError("--sizes: '" + t + "' is not a positive integer");
    }
    const std::size_t v = std::stoull(t);
    if (v == 0 || (!sizes.empty() && v <= sizes.back())) {
      throw UsageError("--sizes must be positive and strictly ascending");
    }
    sizes.push_back(v);
  }
  if (sizes.empty()) throw UsageError("--sizes is empty");
  return sizes;
}

int CmdSweep(const std::string& corpus_path, const std::string& corpus_format,
             const std::vector<std::size_t>& sizes,
             const std::string& manifest_path, const std::string& refs_path,
             const SweepOptions& options, const std::string& out_path,
             std::ostream& out) {
  SweepCorpus corpus;
  std::istringstream in(ReadInput(corpus_path));
  if (corpus_format == "counts") {
    corpus.is_counts = true;
    corpus.word_counts = WithFile(corpus_path, [&] { return ReadWordCounts(in); });
  } else {
    std::string line;
    while (ReadLine(in, &line)) {
      if (!TrimAscii(line).empty()) corpus.sentences.push_back(line);
    }
  }
  const auto dev = LoadDev(manifest_path, refs_path, options.jobs);
  const auto rows = WithFile(corpus_path, [&] {
    return TextAmountSweep(corpus, sizes, dev, options);
  });
  WriteOutput(out_path, SweepCsv(rows));
  out << SweepCsv(rows);
  return kExitOk;
}

}  // namespace

int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Zero-shot CTC decoding toolkit: romanize, build lexicons, "
               "train n-gram LMs, decode and evaluate.",
               "zsdec"};
  app.footer(kFormats);
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Show help for every subcommand");

  // romanize
  std::string in_path, out_path;
  SchemeFlags scheme_flags;
  auto* romanize = app.add_subcommand("romanize", "Romanize text line by line");
  romanize->add_option("--in", in_path, "UTF-8 text file")->required();
  romanize->add_option("--out", out_path, "Romanized output, '|' between words")
      ->required();
  scheme_flags.Register(romanize);
  romanize->footer("Example output line: el|gato|come");

  // build-lexicon
  std::string words_path, freq_path;
  std::uint64_t min_count = 1;
  auto* build = app.add_subcommand("build-lexicon",
                                   "Build a word -> romanized spelling lexicon");
  auto* words_opt =
      build->add_option("--words", words_path, "Word list, one word per line");
  auto* freq_opt =
      build->add_option("--freq", freq_path, "Word counts, word<TAB>count");
  words_opt->excludes(freq_opt);
  auto* min_opt = build->add_option("--min-count", min_count,
                                    "Keep --freq words with count >= N")
                      ->check(CLI::PositiveNumber)
                      ->capture_default_str();
  min_opt->needs(freq_opt);
  build->add_option("--out", out_path, "Lexicon output")->required();
  scheme_flags.Register(build);
  build->footer("Example output line: gato<TAB>g a t o |");

  // train-lm
  std::string corpus_path, counts_path;
  int order = 0;
  double discount = 0.5;
  auto* train = app.add_subcommand("train-lm", "Train an absolute-discounting n-gram LM");
  auto* corpus_opt = train->add_option("--corpus", corpus_path,
                                        "Text, one whitespace-tokenized sentence per line");
  auto* counts_opt = train->add_option("--counts", counts_path,
                                       "N-gram counts, 'w1 w2<TAB>count'");
  corpus_opt->excludes(counts_opt);
  train->add_option("--order", order, "N-gram order")
      ->required()
      ->check(CLI::IsMember({1, 2, 3}));
  train->add_option("--discount", discount, "Absolute discount D in (0, 1)")
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();
  train->add_option("--out", out_path, "ARPA output")->required();
  train->footer("Example ARPA line: -0.2218488<TAB>the<TAB>-0.3010300");

  // synth
  std::string refs_path;
  SynthesisOptions synth_options;
  auto* synth = app.add_subcommand(
      "synth", "Synthesize emission files and a manifest from references");
  synth->add_option("--refs", refs_path, "References, utt<TAB>lang<TAB>text")
      ->required();
  synth->add_option("--out", out_path, "Output directory")->required();
  synth->add_option("--frames-per-symbol", synth_options.frames_per_symbol,
                    "Frames per symbol")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  synth->add_option("--noise", synth_options.noise,
                    "Off-target probability mass in [0, 1)")
      ->capture_default_str();
  synth->add_option("--seed", synth_options.seed, "Random seed")->required();
  scheme_flags.Register(synth);
  synth->footer("Writes DIR/<utt>.ctce and DIR/manifest.tsv.");

  // decode
  std::string manifest_path, lexicon_path, lm_path;
  int jobs = 1;
  DecodeFlags decode_flags;
  auto* decode = app.add_subcommand("decode", "Lexicon-constrained CTC beam search");
  decode->add_option("--manifest", manifest_path, "Emission manifest")->required();
  decode->add_option("--lexicon", lexicon_path, "Lexicon")->required();
  decode->add_option("--lm", lm_path, "ARPA language model");
  decode_flags.Register(decode, true);
  decode->add_option("--jobs", jobs, "Worker threads")->capture_default_str();
  decode->add_option("--out", out_path, "Hypotheses output")->required();
  decode->footer(
      "Example output line: utt001<TAB>el gato come<TAB>-12.345678<TAB>false");

  // eval
  std::string hyps_path;
  auto* eval = app.add_subcommand("eval", "Character error rate report");
  eval->add_option("--refs", refs_path, "References")->required();
  eval->add_option("--hyps", hyps_path, "Hypotheses from decode")->required();
  eval->add_option("--out", out_path, "JSON report")->required();
  eval->footer(
      "Example JSON: {\"average_cer\": 0.2, \"per_language\": {\"es\": {...}}}");

  // tune
  std::string alpha_grid = "0:5:0.25", beta_grid = "-5:5:0.5";
  DecodeFlags tune_flags;
  auto* tune = app.add_subcommand("tune", "Grid search over LM weight and word score");
  tune->add_option("--manifest", manifest_path, "Dev emission manifest")->required();
  tune->add_option("--refs", refs_path, "Dev references")->required();
  tune->add_option("--lexicon", lexicon_path, "Lexicon")->required();
  tune->add_option("--lm", lm_path, "ARPA language model")->required();
  tune->add_option("--lm-weight-grid", alpha_grid, "LO:HI:STEP, inclusive")
      ->capture_default_str();
  tune->add_option("--word-score-grid", beta_grid, "LO:HI:STEP, inclusive")
      ->capture_default_str();
  tune_flags.Register(tune, false);
  tune->add_option("--jobs", jobs, "Worker threads")->capture_default_str();
  tune->add_option("--out", out_path, "JSON result")->required();
  tune->footer("Example JSON: {\"best\": {\"lm_weight\": 1.0, ...}, \"grid\": [...]}");

  // sweep
  std::string sizes_spec, corpus_format = "sentences";
  DecodeFlags sweep_flags;
  sweep_flags.config.lm_weight = 1.0;
  double lex_word_score = 0.0;
  auto* sweep = app.add_subcommand(
      "sweep", "Lexicon vs unigram CER as the text corpus grows");
  sweep->add_option("--corpus", corpus_path, "Text corpus")->required();
  sweep->add_option("--corpus-format", corpus_format,
                    "sentences (one per line) or counts (word<TAB>count)")
      ->check(CLI::IsMember({"sentences", "counts"}))
      ->capture_default_str();
  sweep->add_option("--sizes", sizes_spec,
                    "Ascending utterance counts, e.g. 10,100,1000")
      ->required();
  sweep->add_option("--manifest", manifest_path, "Dev emission manifest")->required();
  sweep->add_option("--refs", refs_path, "Dev references")->required();
  sweep->add_option("--out", out_path, "CSV output")->required();
  sweep_flags.Register(sweep, true);
  sweep->add_option("--lex-word-score", lex_word_score,
                    "Word score for the lexicon-only decode")
      ->capture_default_str();
  sweep->add_option("--discount", discount, "Absolute discount D in (0, 1)")
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();
  sweep->add_option("--jobs", jobs, "Worker threads")->capture_default_str();
  scheme_flags.Register(sweep);
  sweep->footer("Example output line: 100,0.412000,0.305000");

  std::vector<const char*> argv{"zsdec"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (romanize->parsed()) {
      return CmdRomanize(in_path, out_path, scheme_flags, out);
    }
    if (build->parsed()) {
      if (words_path.empty() && freq_path.empty()) {
        throw UsageError("one of --words or --freq is required");
      }
      return CmdBuildLexicon(words_path, freq_path, min_count, out_path,
                             scheme_flags, out);
    }
    if (train->parsed()) {
      if (corpus_path.empty() && counts_path.empty()) {
        throw UsageError("one of --corpus or --counts is required");
      }
      if (!(discount > 0.0 && discount < 1.0)) {
        throw UsageError("--discount must lie in (0, 1)");
      }
      return CmdTrainLm(corpus_path, counts_path, order, discount, out_path, out);
    }
    if (synth->parsed()) {
      if (!(synth_options.noise >= 0.0 && synth_options.noise < 1.0)) {
        throw UsageError("--noise must lie in [0, 1)");
      }
      return CmdSynth(refs_path, out_path, synth_options, scheme_flags, out);
    }
    if (decode->parsed()) {
      const DecodeConfig config = decode_flags.Finish();
      return CmdDecode(manifest_path, lexicon_path, lm_path, config,
                       RequirePositive(jobs, "--jobs"), out_path, out);
    }
    if (eval->parsed()) {
      return CmdEval(refs_path, hyps_path, out_path, out);
    }
    if (tune->parsed()) {
      const DecodeConfig config = tune_flags.Finish();
      std::vector<double> alphas, betas;
      try {
        alphas = ParseGrid(alpha_grid);
        betas = ParseGrid(beta_grid);
      } catch (const Error& e) {
        throw UsageError(e.message());
      }
      for (double a : alphas) {
        if (a < 0.0) throw UsageError("--lm-weight-grid values must be >= 0");
      }
      return CmdTune(manifest_path, refs_path, lexicon_path, lm_path, alphas,
                     betas, config, RequirePositive(jobs, "--jobs"), out_path,
                     out);
    }
    if (sweep->parsed()) {
      SweepOptions options;
      options.lm_config = sweep_flags.Finish();
      options.lexicon_config = options.lm_config;
      options.lexicon_config.lm_weight = 0.0;
      options.lexicon_config.word_score = lex_word_score;
      options.discount = discount;
      options.jobs = RequirePositive(jobs, "--jobs");
      const auto sizes = ParseSizes(sizes_spec);
      const RomanScheme scheme = scheme_flags.Build();
      options.scheme = &scheme;
      return CmdSweep(corpus_path, corpus_format, sizes, manifest_path,
                      refs_path, options, out_path, out);
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DataError& e) {
    err << "error: " << e.what() << "\n";
    return kExitData;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitData;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitData;
  }
  return kExitUsage;
}

}  // namespace zsdec::cli
