# Copyright 2026 The zsdec Authors. All Rights Reserved.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Zero-shot lexicon and n-gram constrained CTC decoding."""

from ._zsdec import (
    ALPHABET,
    DecodeConfig,
    DecodeResult,
    Decoder,
    Emissions,
    Lexicon,
    NGramModel,
    ZsdecError,
    build_lexicon,
    cer,
    edit_distance,
    evaluate,
    greedy_decode,
    oracle_decode,
    romanize,
    romanize_word,
    run_cli,
    synthesize,
    train_ngram,
    train_ngram_from_counts,
)

__all__ = [
    "ALPHABET",
    "DecodeConfig",
    "DecodeResult",
    "Decoder",
    "Emissions",
    "Lexicon",
    "NGramModel",
    "ZsdecError",
    "build_lexicon",
    "cer",
    "edit_distance",
    "evaluate",
    "greedy_decode",
    "oracle_decode",
    "romanize",
    "romanize_word",
    "run_cli",
    "synthesize",
    "train_ngram",
    "train_ngram_from_counts",
]

__version__ = "0.1.0"
