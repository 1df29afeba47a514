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

#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cstring>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "cli.h"
#include "zsdec/alphabet.h"
#include "zsdec/ctc_decoder.h"
#include "zsdec/emissions.h"
#include "zsdec/errors.h"
#include "zsdec/evaluation.h"
#include "zsdec/lexicon.h"
#include "zsdec/ngram_lm.h"
#include "zsdec/romanizer.h"

namespace py = pybind11;

namespace zsdec {
namespace {

FallbackPolicy ParsePolicy(const std::string& name) {
  if (name == "drop") return FallbackPolicy::kDrop;
  if (name == "apostrophe") return FallbackPolicy::kApostrophe;
  throw Error(ErrorKind::kInvalidArgument,
              "fallback must be 'drop' or 'apostrophe', got '" + name + "'");
}

RomanScheme MakeScheme(const std::string& fallback,
                       const std::optional<std::string>& tables) {
  RomanScheme scheme = RomanScheme::Builtin(ParsePolicy(fallback));
  if (tables) scheme.LoadTableDirectory(*tables);
  return scheme;
}

// Owns everything a decoder refers to; never moved after construction.
class Decoder {
 public:
  Decoder(Lexicon lexicon, std::optional<NGramModel> lm, DecodeConfig config)
      : lexicon_(std::move(lexicon)),
        trie_(lexicon_),
        lm_(std::move(lm)),
        decoder_(lexicon_, trie_, lm_ ? &*lm_ : nullptr, config) {}
  Decoder(const Decoder&) = delete;
  Decoder& operator=(const Decoder&) = delete;

  DecodeResult Decode(const EmissionMatrix& m) const { return decoder_.Decode(m); }
  const DecodeConfig& config() const { return decoder_.config(); }

 private:
  Lexicon lexicon_;
  LexiconTrie trie_;
  std::optional<NGramModel> lm_;
  LexiconBeamDecoder decoder_;
};

EmissionMatrix MatrixFromArray(
    py::array_t<float, py::array::c_style | py::array::forcecast> logp,
    std::string utterance_id) {
  if (logp.ndim() != 2 || logp.shape(1) != static_cast<py::ssize_t>(kAlphabetSize)) {
    throw Error(ErrorKind::kDimensionMismatch,
                "emissions must have shape (frames, " +
                    std::to_string(kAlphabetSize) + ")");
  }
  const auto frames = static_cast<std::size_t>(logp.shape(0));
  std::vector<float> data(logp.data(), logp.data() + frames * kAlphabetSize);
  EmissionMatrix m(std::move(utterance_id), frames, std::move(data));
  ValidateEmissions(m);
  return m;
}

py::array_t<float> ArrayFromMatrix(const EmissionMatrix& m) {
  py::array_t<float> out({static_cast<py::ssize_t>(m.frames()),
                          static_cast<py::ssize_t>(kAlphabetSize)});
  if (!m.data().empty()) {
    std::memcpy(out.mutable_data(), m.data().data(), m.data().size() * sizeof(float));
  }
  return out;
}

py::dict ReportToDict(const EvalReport& report) {
  py::dict langs;
  for (const auto& [lang, s] : report.per_language) {
    py::dict d;
    d["edit_distance_total"] = s.edit_distance_total;
    d["ref_char_total"] = s.ref_char_total;
    d["cer"] = s.cer;
    d["utterance_count"] = s.utterance_count;
    langs[py::str(lang)] = d;
  }
  py::dict out;
  out["per_language"] = langs;
  out["average_cer"] = report.average_cer;
  return out;
}

}  // namespace
}  // namespace zsdec

PYBIND11_MODULE(_zsdec, m) {
  using namespace zsdec;
  m.doc() = "Zero-shot lexicon and n-gram constrained CTC decoding.";

  static PyObject* const error_type = PyErr_NewException(
      "zsdec._zsdec.ZsdecError", PyExc_RuntimeError, nullptr);
  m.attr("ZsdecError") = py::handle(error_type).inc_ref();
  // Raised instances carry the error kind name and the input line (0 when
  // not applicable).
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object inst = py::handle(error_type)(e.what());
      inst.attr("kind") = std::string(ErrorKindName(e.kind()));
      inst.attr("line") = e.line();
      PyErr_SetObject(error_type, inst.ptr());
    }
  });

  m.attr("ALPHABET") = py::cast(std::vector<std::string>(CanonicalVocab().begin(),
                                                         CanonicalVocab().end()));

  m.def(
      "romanize",
      [](const std::string& text, const std::string& fallback,
         const std::optional<std::string>& tables) {
        return RomanizeText(text, MakeScheme(fallback, tables)).str();
      },
      py::arg("text"), py::arg("fallback") = "drop", py::arg("tables") = py::none(),
      "Romanized text with '|' between words.");
  m.def(
      "romanize_word",
      [](const std::string& word, const std::string& fallback) {
        return SymbolsToString(RomanizeWord(word, MakeScheme(fallback, std::nullopt)));
      },
      py::arg("word"), py::arg("fallback") = "drop");

  py::class_<Lexicon>(m, "Lexicon")
      .def(py::init<>())
      .def("add",
           [](Lexicon& lex, std::string word, const std::string& spelling) {
             return lex.Add(std::move(word), StringToSymbols(spelling));
           },
           py::arg("word"), py::arg("spelling"))
      .def("__len__", &Lexicon::size)
      .def("find", &Lexicon::Find)
      .def_property_readonly("words",
                             [](const Lexicon& lex) {
                               std::vector<std::string> out;
                               for (const auto& e : lex.entries()) out.push_back(e.word);
                               return out;
                             })
      .def("spelling",
           [](const Lexicon& lex, WordId id) {
             return SymbolsToString(lex.entry(id).spelling);
           })
      .def("serialize", &SerializeLexicon)
      .def_static("parse", &ParseLexicon, py::arg("text"))
      .def("__eq__", [](const Lexicon& a, const Lexicon& b) { return a == b; });
  m.def(
      "build_lexicon",
      [](const std::vector<std::string>& words, const std::string& fallback) {
        return BuildLexicon(words, MakeScheme(fallback, std::nullopt));
      },
      py::arg("words"), py::arg("fallback") = "drop");

  py::class_<NGramModel>(m, "NGramModel")
      .def_property_readonly("order", &NGramModel::order)
      .def_property_readonly("vocab", &NGramModel::vocab)
      .def("score_sentence",
           [](const NGramModel& lm, const std::vector<std::string>& words, bool eos) {
             return lm.ScoreSentence(words, eos);
           },
           py::arg("words"), py::arg("with_eos") = true, "log10 probability.")
      .def("to_arpa", &WriteArpa)
      .def_static("from_arpa", [](const std::string& text) { return ReadArpa(text); },
                  py::arg("text"));
  m.def("train_ngram", &TrainNGram, py::arg("sentences"), py::arg("order"),
        py::arg("discount") = 0.5);
  m.def(
      "train_ngram_from_counts",
      [](const std::vector<std::pair<std::vector<std::string>, std::uint64_t>>& rows,
         int order, double discount) {
        NGramCounts counts;
        for (const auto& [ngram, c] : rows) counts[ngram] += c;
        return TrainNGramFromCounts(counts, order, discount);
      },
      py::arg("counts"), py::arg("order"), py::arg("discount") = 0.5);

  py::class_<EmissionMatrix>(m, "Emissions")
      .def(py::init(&MatrixFromArray), py::arg("logp"), py::arg("utterance_id") = "")
      .def_property_readonly("utterance_id", &EmissionMatrix::utterance_id)
      .def_property_readonly("frames", &EmissionMatrix::frames)
      .def("numpy", &ArrayFromMatrix)
      .def("encode", [](const EmissionMatrix& e) { return py::bytes(EncodeEmissions(e)); })
      .def_static("decode",
                  [](const py::bytes& b, const std::string& id) {
                    return DecodeEmissions(std::string(b), id);
                  },
                  py::arg("data"), py::arg("utterance_id") = "")
      .def("__eq__", [](const EmissionMatrix& a, const EmissionMatrix& b) { return a == b; });
  m.def(
      "synthesize",
      [](const std::string& text, int frames_per_symbol, double noise,
         std::uint64_t seed, const std::string& utterance_id) {
        SynthesisOptions o;
        o.frames_per_symbol = frames_per_symbol;
        o.noise = noise;
        o.seed = seed;
        const auto symbols =
            RomanizeText(text, RomanScheme::Builtin()).WordTerminated();
        return SynthesizeEmissions(symbols, o, utterance_id);
      },
      py::arg("text"), py::arg("frames_per_symbol") = 1, py::arg("noise") = 0.0,
      py::arg("seed") = 0, py::arg("utterance_id") = "",
      "Synthetic log-probabilities for the romanized, word-terminated text.");

  py::class_<DecodeConfig>(m, "DecodeConfig")
      .def(py::init([](int beam, double threshold, double alpha, double beta, bool eos) {
             DecodeConfig c;
             c.beam_size = beam;
             c.beam_threshold = threshold;
             c.lm_weight = alpha;
             c.word_score = beta;
             c.apply_eos = eos;
             c.Validate();
             return c;
           }),
           py::arg("beam_size") = 2000, py::arg("beam_threshold") = 25.0,
           py::arg("lm_weight") = 0.0, py::arg("word_score") = 0.0,
           py::arg("apply_eos") = true)
      .def_readwrite("beam_size", &DecodeConfig::beam_size)
      .def_readwrite("beam_threshold", &DecodeConfig::beam_threshold)
      .def_readwrite("lm_weight", &DecodeConfig::lm_weight)
      .def_readwrite("word_score", &DecodeConfig::word_score)
      .def_readwrite("apply_eos", &DecodeConfig::apply_eos);

  py::class_<DecodeResult>(m, "DecodeResult")
      .def_readonly("words", &DecodeResult::words)
      .def_readonly("word_ids", &DecodeResult::word_ids)
      .def_readonly("romanized", &DecodeResult::romanized)
      .def_readonly("total_score", &DecodeResult::total_score)
      .def_readonly("am_score", &DecodeResult::am_score)
      .def_readonly("lm_score", &DecodeResult::lm_score)
      .def_readonly("word_count", &DecodeResult::word_count)
      .def_readonly("forced_finalization", &DecodeResult::forced_finalization)
      .def_property_readonly("text", &HypothesisText);

  py::class_<Decoder>(m, "Decoder")
      .def(py::init<Lexicon, std::optional<NGramModel>, DecodeConfig>(),
           py::arg("lexicon"), py::arg("lm") = py::none(),
           py::arg("config") = DecodeConfig())
      .def("decode", &Decoder::Decode, py::arg("emissions"),
           py::call_guard<py::gil_scoped_release>())
      .def_property_readonly("config", &Decoder::config);

  m.def("greedy_decode",
        [](const EmissionMatrix& e) { return GreedyDecode(e).str(); },
        py::arg("emissions"));
  m.def(
      "oracle_decode",
      [](const EmissionMatrix& e, const Lexicon& lex, const NGramModel* lm,
         double alpha, double beta, int max_words, bool eos) {
        OracleOptions o;
        o.lm_weight = alpha;
        o.word_score = beta;
        o.max_words = max_words;
        o.apply_eos = eos;
        return OracleDecode(e, lex, lm, o).best;
      },
      py::arg("emissions"), py::arg("lexicon"), py::arg("lm") = nullptr,
      py::arg("lm_weight") = 0.0, py::arg("word_score") = 0.0,
      py::arg("max_words") = 1, py::arg("apply_eos") = true);

  m.def("edit_distance",
        [](const std::string& a, const std::string& b) { return EditDistance(a, b); },
        py::arg("a"), py::arg("b"));
  m.def("cer", &Cer, py::arg("reference"), py::arg("hypothesis"));
  m.def(
      "evaluate",
      [](const std::map<std::string, std::vector<std::pair<std::string, std::string>>>& in) {
        CorpusPairs pairs;
        for (const auto& [lang, rows] : in) {
          auto& dst = pairs[lang];
          for (const auto& [ref, hyp] : rows) dst.push_back({ref, hyp});
        }
        return ReportToDict(EvaluateCorpus(pairs));
      },
      py::arg("pairs"),
      "pairs: language -> [(reference, hypothesis)]; unweighted average CER.");

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        int code;
        {
          py::gil_scoped_release release;
          code = cli::Run(args, out, err);
        }
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), "Runs a zsdec subcommand; returns (exit_code, stdout, stderr).");
}
