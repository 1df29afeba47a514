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

// Built-in romanization tables. Values follow the conventions of common
// universal romanizers; sources are matched after lowercasing and canonical
// decomposition, so precomposed letters with diacritics reduce to their base
// letter and need no entry of their own.

#include "builtin_tables.h"

#include <string>
#include <string_view>
#include <vector>

namespace zsdec::internal {

namespace {

struct TableEntry {
  std::string_view source;
  std::string_view target;
};

// Letters of the Latin, IPA and spacing-modifier blocks whose decomposition
// is not a plain ASCII letter.
constexpr TableEntry kLatinExtra[] = {
    {"ª", "a"},  // U+00AA
    {"µ", "m"},  // U+00B5
    {"º", "o"},  // U+00BA
    {"æ", "ae"},  // U+00E6
    {"ð", "th"},  // U+00F0
    {"ø", "oe"},  // U+00F8
    {"þ", "th"},  // U+00FE
    {"ß", "ss"},  // U+00DF
    {"đ", "d"},  // U+0111
    {"ħ", "h"},  // U+0127
    {"ı", "i"},  // U+0131
    {"ĳ", "ij"},  // U+0133
    {"ĸ", "k"},  // U+0138
    {"ŀ", "l"},  // U+0140
    {"ł", "l"},  // U+0142
    {"ŉ", "'n"},  // U+0149
    {"ŋ", "ng"},  // U+014B
    {"œ", "oe"},  // U+0153
    {"ŧ", "t"},  // U+0167
    {"ſ", "s"},  // U+017F
    {"ƀ", "b"},  // U+0180
    {"ɓ", "b"},  // U+0253
    {"ƃ", "b"},  // U+0183
    {"ƅ", "b"},  // U+0185
    {"ɔ", "o"},  // U+0254
    {"ƈ", "c"},  // U+0188
    {"ɖ", "d"},  // U+0256
    {"ɗ", "d"},  // U+0257
    {"ƌ", "d"},  // U+018C
    {"ƍ", "d"},  // U+018D
    {"ǝ", "e"},  // U+01DD
    {"ə", "e"},  // U+0259
    {"ɛ", "e"},  // U+025B
    {"ƒ", "f"},  // U+0192
    {"ɠ", "g"},  // U+0260
    {"ɣ", "g"},  // U+0263
    {"ƕ", "hv"},  // U+0195
    {"ɩ", "i"},  // U+0269
    {"ɨ", "i"},  // U+0268
    {"ƙ", "k"},  // U+0199
    {"ƚ", "l"},  // U+019A
    {"ƛ", "l"},  // U+019B
    {"ɯ", "m"},  // U+026F
    {"ɲ", "n"},  // U+0272
    {"ƞ", "n"},  // U+019E
    {"ɵ", "o"},  // U+0275
    {"ƣ", "oi"},  // U+01A3
    {"ƥ", "p"},  // U+01A5
    {"ʀ", "r"},  // U+0280
    {"ƨ", "s"},  // U+01A8
    {"ʃ", "sh"},  // U+0283
    {"ƪ", "sh"},  // U+01AA
    {"ƫ", "t"},  // U+01AB
    {"ƭ", "t"},  // U+01AD
    {"ʈ", "t"},  // U+0288
    {"ʊ", "u"},  // U+028A
    {"ʋ", "v"},  // U+028B
    {"ƴ", "y"},  // U+01B4
    {"ƶ", "z"},  // U+01B6
    {"ʒ", "zh"},  // U+0292
    {"ƹ", "zh"},  // U+01B9
    {"ƺ", "zh"},  // U+01BA
    {"ƻ", "tw"},  // U+01BB
    {"ƽ", ""},  // U+01BD
    {"ƾ", "ts"},  // U+01BE
    {"ƿ", "w"},  // U+01BF
    {"ǀ", ""},  // U+01C0
    {"ǁ", ""},  // U+01C1
    {"ǂ", ""},  // U+01C2
    {"ǃ", ""},  // U+01C3
    {"ǆ", "dz"},  // U+01C6
    {"ǉ", "lj"},  // U+01C9
    {"ǌ", "nj"},  // U+01CC
    {"ǥ", "g"},  // U+01E5
    {"ǳ", "dz"},  // U+01F3
    {"ȝ", "yo"},  // U+021D
    {"ȡ", "d"},  // U+0221
    {"ȣ", "ou"},  // U+0223
    {"ȥ", "z"},  // U+0225
    {"ȴ", "l"},  // U+0234
    {"ȵ", "n"},  // U+0235
    {"ȶ", "t"},  // U+0236
    {"ȷ", "j"},  // U+0237
    {"ȸ", "db"},  // U+0238
    {"ȹ", "qp"},  // U+0239
    {"ⱥ", "a"},  // U+2C65
    {"ȼ", "c"},  // U+023C
    {"ⱦ", "t"},  // U+2C66
    {"ȿ", "s"},  // U+023F
    {"ɀ", "z"},  // U+0240
    {"ɂ", "'"},  // U+0242
    {"ʉ", "u"},  // U+0289
    {"ʌ", "v"},  // U+028C
    {"ɇ", "e"},  // U+0247
    {"ɉ", "j"},  // U+0249
    {"ɋ", "q"},  // U+024B
    {"ɍ", "r"},  // U+024D
    {"ɏ", "y"},  // U+024F
    {"ɐ", "a"},  // U+0250
    {"ɑ", "a"},  // U+0251
    {"ɒ", "a"},  // U+0252
    {"ɕ", "c"},  // U+0255
    {"ɘ", "e"},  // U+0258
    {"ɚ", "e"},  // U+025A
    {"ɜ", "e"},  // U+025C
    {"ɝ", "e"},  // U+025D
    {"ɞ", "e"},  // U+025E
    {"ɟ", "j"},  // U+025F
    {"ɡ", "g"},  // U+0261
    {"ɢ", "g"},  // U+0262
    {"ɤ", "o"},  // U+0264
    {"ɥ", "h"},  // U+0265
    {"ɦ", "h"},  // U+0266
    {"ɧ", "h"},  // U+0267
    {"ɪ", "i"},  // U+026A
    {"ɫ", "l"},  // U+026B
    {"ɬ", "l"},  // U+026C
    {"ɭ", "l"},  // U+026D
    {"ɮ", "l"},  // U+026E
    {"ɰ", "m"},  // U+0270
    {"ɱ", "m"},  // U+0271
    {"ɳ", "n"},  // U+0273
    {"ɴ", "n"},  // U+0274
    {"ɶ", "oe"},  // U+0276
    {"ɷ", "o"},  // U+0277
    {"ɸ", "ph"},  // U+0278
    {"ɹ", "r"},  // U+0279
    {"ɺ", "r"},  // U+027A
    {"ɻ", "r"},  // U+027B
    {"ɼ", "r"},  // U+027C
    {"ɽ", "r"},  // U+027D
    {"ɾ", "r"},  // U+027E
    {"ɿ", "r"},  // U+027F
    {"ʁ", "r"},  // U+0281
    {"ʂ", "s"},  // U+0282
    {"ʄ", "j"},  // U+0284
    {"ʅ", "sh"},  // U+0285
    {"ʆ", "sh"},  // U+0286
    {"ʇ", "t"},  // U+0287
    {"ʍ", "w"},  // U+028D
    {"ʎ", "y"},  // U+028E
    {"ʏ", "y"},  // U+028F
    {"ʐ", "z"},  // U+0290
    {"ʑ", "z"},  // U+0291
    {"ʓ", "zh"},  // U+0293
    {"ʔ", "'"},  // U+0294
    {"ʕ", "'"},  // U+0295
    {"ʖ", "'"},  // U+0296
    {"ʗ", "c"},  // U+0297
    {"ʘ", ""},  // U+0298
    {"ʙ", "b"},  // U+0299
    {"ʚ", "e"},  // U+029A
    {"ʛ", "g"},  // U+029B
    {"ʜ", "h"},  // U+029C
    {"ʝ", "j"},  // U+029D
    {"ʞ", "k"},  // U+029E
    {"ʟ", "l"},  // U+029F
    {"ʠ", "q"},  // U+02A0
    {"ʡ", "'"},  // U+02A1
    {"ʢ", "'"},  // U+02A2
    {"ʣ", "dz"},  // U+02A3
    {"ʤ", "dzh"},  // U+02A4
    {"ʥ", "dz"},  // U+02A5
    {"ʦ", "ts"},  // U+02A6
    {"ʧ", "tsh"},  // U+02A7
    {"ʨ", "tc"},  // U+02A8
    {"ʩ", "f"},  // U+02A9
    {"ʪ", "ls"},  // U+02AA
    {"ʫ", "lz"},  // U+02AB
    {"ʬ", ""},  // U+02AC
    {"ʭ", ""},  // U+02AD
    {"ʮ", "h"},  // U+02AE
    {"ʯ", "h"},  // U+02AF
    {"ẚ", "a"},  // U+1E9A
    {"ẜ", "s"},  // U+1E9C
    {"ẝ", "s"},  // U+1E9D
    {"ẟ", "d"},  // U+1E9F
    {"ỻ", "ll"},  // U+1EFB
    {"ỽ", "v"},  // U+1EFD
    {"ỿ", "y"},  // U+1EFF
    {"ʰ", "h"},  // U+02B0
    {"ʱ", "h"},  // U+02B1
    {"ʲ", "j"},  // U+02B2
    {"ʳ", "r"},  // U+02B3
    {"ʴ", "r"},  // U+02B4
    {"ʵ", "r"},  // U+02B5
    {"ʶ", "r"},  // U+02B6
    {"ʷ", "w"},  // U+02B7
    {"ʸ", "y"},  // U+02B8
    {"ʹ", "'"},  // U+02B9
    {"ʺ", ""},  // U+02BA
    {"ʻ", "'"},  // U+02BB
    {"ʼ", "'"},  // U+02BC
    {"ʽ", "c"},  // U+02BD
    {"ʾ", "'"},  // U+02BE
    {"ʿ", "'"},  // U+02BF
    {"ˀ", "'"},  // U+02C0
    {"ˁ", "'"},  // U+02C1
    {"ˆ", ""},  // U+02C6
    {"ˇ", ""},  // U+02C7
    {"ˈ", ""},  // U+02C8
    {"ˉ", ""},  // U+02C9
    {"ˊ", ""},  // U+02CA
    {"ˋ", ""},  // U+02CB
    {"ˌ", ""},  // U+02CC
    {"ˍ", "m"},  // U+02CD
    {"ˎ", ""},  // U+02CE
    {"ˏ", ""},  // U+02CF
    {"ː", ""},  // U+02D0
    {"ˑ", ""},  // U+02D1
    {"ˠ", "g"},  // U+02E0
    {"ˡ", "l"},  // U+02E1
    {"ˢ", "s"},  // U+02E2
    {"ˣ", "x"},  // U+02E3
    {"ˤ", "st"},  // U+02E4
    {"ˬ", "v"},  // U+02EC
    {"ˮ", "a"},  // U+02EE
};

constexpr TableEntry kCyrillic[] = {
    {"е", "e"},  // U+0435
    {"ђ", "dj"},  // U+0452
    {"г", "g"},  // U+0433
    {"є", "ie"},  // U+0454
    {"ѕ", "dz"},  // U+0455
    {"і", "i"},  // U+0456
    {"ј", "j"},  // U+0458
    {"љ", "lj"},  // U+0459
    {"њ", "nj"},  // U+045A
    {"ћ", "tsh"},  // U+045B
    {"к", "k"},  // U+043A
    {"и", "i"},  // U+0438
    {"у", "u"},  // U+0443
    {"џ", "dzh"},  // U+045F
    {"а", "a"},  // U+0430
    {"б", "b"},  // U+0431
    {"в", "v"},  // U+0432
    {"д", "d"},  // U+0434
    {"ж", "zh"},  // U+0436
    {"з", "z"},  // U+0437
    {"л", "l"},  // U+043B
    {"м", "m"},  // U+043C
    {"н", "n"},  // U+043D
    {"о", "o"},  // U+043E
    {"п", "p"},  // U+043F
    {"р", "r"},  // U+0440
    {"с", "s"},  // U+0441
    {"т", "t"},  // U+0442
    {"ф", "f"},  // U+0444
    {"х", "kh"},  // U+0445
    {"ц", "ts"},  // U+0446
    {"ч", "ch"},  // U+0447
    {"ш", "sh"},  // U+0448
    {"щ", "shch"},  // U+0449
    {"ъ", ""},  // U+044A
    {"ы", "y"},  // U+044B
    {"ь", ""},  // U+044C
    {"э", "e"},  // U+044D
    {"ю", "yu"},  // U+044E
    {"я", "ya"},  // U+044F
    {"ѡ", "o"},  // U+0461
    {"ѣ", "ya"},  // U+0463
    {"ѥ", "e"},  // U+0465
    {"ѧ", "yu"},  // U+0467
    {"ѩ", "yu"},  // U+0469
    {"ѫ", "yu"},  // U+046B
    {"ѭ", "yu"},  // U+046D
    {"ѯ", "ks"},  // U+046F
    {"ѱ", "ps"},  // U+0471
    {"ѳ", "f"},  // U+0473
    {"ѵ", "i"},  // U+0475
    {"ѹ", "k"},  // U+0479
    {"ѻ", "o"},  // U+047B
    {"ѽ", "o"},  // U+047D
    {"ѿ", "t"},  // U+047F
    {"ҁ", "k"},  // U+0481
    {"ҋ", "i"},  // U+048B
    {"ҍ", "s"},  // U+048D
    {"ҏ", "r"},  // U+048F
    {"ґ", "gh"},  // U+0491
    {"ғ", "gh"},  // U+0493
    {"ҕ", "gh"},  // U+0495
    {"җ", "zh"},  // U+0497
    {"ҙ", "z"},  // U+0499
    {"қ", "k"},  // U+049B
    {"ҝ", "k"},  // U+049D
    {"ҟ", "k"},  // U+049F
    {"ҡ", "k"},  // U+04A1
    {"ң", "n"},  // U+04A3
    {"ҥ", "ng"},  // U+04A5
    {"ҧ", "p"},  // U+04A7
    {"ҩ", "h"},  // U+04A9
    {"ҫ", "s"},  // U+04AB
    {"ҭ", "t"},  // U+04AD
    {"ү", "u"},  // U+04AF
    {"ұ", "u"},  // U+04B1
    {"ҳ", "h"},  // U+04B3
    {"ҵ", "ts"},  // U+04B5
    {"ҷ", "ch"},  // U+04B7
    {"ҹ", "ch"},  // U+04B9
    {"һ", "shh"},  // U+04BB
    {"ҽ", "ch"},  // U+04BD
    {"ҿ", "ch"},  // U+04BF
    {"ӏ", "p"},  // U+04CF
    {"ӄ", "k"},  // U+04C4
    {"ӆ", "l"},  // U+04C6
    {"ӈ", "n"},  // U+04C8
    {"ӊ", "n"},  // U+04CA
    {"ӌ", "ch"},  // U+04CC
    {"ӎ", "m"},  // U+04CE
    {"ӕ", "ae"},  // U+04D5
    {"ә", "e"},  // U+04D9
    {"ӡ", "dz"},  // U+04E1
    {"ө", "o"},  // U+04E9
    {"ӷ", "gh"},  // U+04F7
    {"ӻ", "gh"},  // U+04FB
    {"ӽ", "h"},  // U+04FD
    {"ӿ", "h"},  // U+04FF
};

constexpr TableEntry kGreek[] = {
    {"ͱ", "h"},  // U+0371
    {"ͳ", "s"},  // U+0373
    {"ʹ", "'"},  // U+02B9
    {"ͷ", "w"},  // U+0377
    {"ͺ", "i"},  // U+037A
    {"ͻ", "s"},  // U+037B
    {"ͼ", "s"},  // U+037C
    {"ͽ", "s"},  // U+037D
    {"ϳ", "yo"},  // U+03F3
    {"α", "a"},  // U+03B1
    {"ε", "e"},  // U+03B5
    {"η", "e"},  // U+03B7
    {"ι", "i"},  // U+03B9
    {"ο", "o"},  // U+03BF
    {"υ", "y"},  // U+03C5
    {"ω", "o"},  // U+03C9
    {"β", "b"},  // U+03B2
    {"γ", "g"},  // U+03B3
    {"δ", "d"},  // U+03B4
    {"ζ", "z"},  // U+03B6
    {"θ", "th"},  // U+03B8
    {"κ", "k"},  // U+03BA
    {"λ", "l"},  // U+03BB
    {"μ", "m"},  // U+03BC
    {"ν", "n"},  // U+03BD
    {"ξ", "x"},  // U+03BE
    {"π", "p"},  // U+03C0
    {"ρ", "r"},  // U+03C1
    {"σ", "s"},  // U+03C3
    {"τ", "t"},  // U+03C4
    {"φ", "f"},  // U+03C6
    {"χ", "ch"},  // U+03C7
    {"ψ", "ps"},  // U+03C8
    {"ς", "s"},  // U+03C2
    {"ϗ", "kai"},  // U+03D7
    {"ϐ", "b"},  // U+03D0
    {"ϑ", "th"},  // U+03D1
    {"ϒ", "y"},  // U+03D2
    {"ϕ", "f"},  // U+03D5
    {"ϖ", "p"},  // U+03D6
    {"ϙ", "k"},  // U+03D9
    {"ϛ", "st"},  // U+03DB
    {"ϝ", "d"},  // U+03DD
    {"ϟ", "k"},  // U+03DF
    {"ϡ", "s"},  // U+03E1
    {"ϣ", "sh"},  // U+03E3
    {"ϥ", "f"},  // U+03E5
    {"ϧ", "kh"},  // U+03E7
    {"ϩ", "h"},  // U+03E9
    {"ϫ", "j"},  // U+03EB
    {"ϭ", "ch"},  // U+03ED
    {"ϯ", "ti"},  // U+03EF
    {"ϰ", "k"},  // U+03F0
    {"ϱ", "r"},  // U+03F1
    {"ϲ", "s"},  // U+03F2
    {"ϵ", "e"},  // U+03F5
    {"ϸ", "sh"},  // U+03F8
    {"ϻ", "s"},  // U+03FB
    {"ϼ", "r"},  // U+03FC
};

// Multi-codepoint Cyrillic sources (decomposed forms that carry meaning).
constexpr TableEntry kCyrillicSequences[] = {
    {"ї", "yi"},  // ї
    {"ѓ", "gj"},  // ѓ
    {"ќ", "kj"},  // ќ
};

constexpr TableEntry kApostrophes[] = {
    {"'", "'"},
    {"’", "'"},  // right single quotation mark
    {"ʼ", "'"},  // modifier letter apostrophe
    {"ꞌ", "'"},  // latin small letter saltillo
};

struct DevanagariConsonant {
  char32_t codepoint;
  std::string_view roman;
};

constexpr DevanagariConsonant kDevanagariConsonants[] = {
    {U'क', "k"},  {U'ख', "kh"},  {U'ग', "g"},  {U'घ', "gh"},
    {U'ङ', "ng"}, {U'च', "c"},   {U'छ', "ch"}, {U'ज', "j"},
    {U'झ', "jh"}, {U'ञ', "ny"},  {U'ट', "tt"}, {U'ठ', "tth"},
    {U'ड', "dd"}, {U'ढ', "ddh"}, {U'ण', "nn"}, {U'त', "t"},
    {U'थ', "th"}, {U'द', "d"},   {U'ध', "dh"}, {U'न', "n"},
    {U'प', "p"},  {U'फ', "ph"},  {U'ब', "b"},  {U'भ', "bh"},
    {U'म', "m"},  {U'य', "y"},   {U'र', "r"},  {U'ल', "l"},
    {U'ळ', "ll"}, {U'व', "v"},   {U'श', "sh"}, {U'ष', "ss"},
    {U'स', "s"},  {U'ह', "h"},   {U'ॸ', "dd"}, {U'ॹ', "zh"},
    {U'ॺ', "y"},  {U'ॻ', "g"},   {U'ॼ', "j"},  {U'ॽ', "'"},
    {U'ॾ', "dd"}, {U'ॿ', "b"},
};

// Consonant + nukta readings that differ from the bare consonant.
constexpr DevanagariConsonant kDevanagariNukta[] = {
    {U'क', "q"}, {U'ख', "kh"}, {U'ग', "g"},
    {U'ज', "z"}, {U'फ', "f"},  {U'य', "y"},
};

constexpr DevanagariConsonant kDevanagariVowelSigns[] = {
    {U'ा', "aa"}, {U'ि', "i"},  {U'ी', "ii"}, {U'ु', "u"},
    {U'ू', "uu"}, {U'ृ', "r"},  {U'ॄ', "rr"}, {U'ॅ', "e"},
    {U'ॆ', "e"},  {U'े', "e"},  {U'ै', "ai"}, {U'ॉ', "o"},
    {U'ॊ', "o"},  {U'ो', "o"},  {U'ौ', "au"}, {U'ॎ', "e"},
    {U'ॏ', "aw"}, {U'ॕ', "e"},  {U'ॖ', "ue"}, {U'ॗ', "uue"},
    {U'ॢ', "l"},  {U'ॣ', "ll"},
};

constexpr DevanagariConsonant kDevanagariIndependent[] = {
    {U'ऀ', "n"},   {U'ँ', "n"},  {U'ं', "m"},  {U'ः', "h"},
    {U'ऄ', "a"},   {U'अ', "a"},  {U'आ', "aa"}, {U'इ', "i"},
    {U'ई', "ii"},  {U'उ', "u"},  {U'ऊ', "uu"}, {U'ऋ', "ri"},
    {U'ऌ', "l"},   {U'ऍ', "e"},  {U'ऎ', "e"},  {U'ए', "e"},
    {U'ऐ', "ai"},  {U'ऑ', "o"},  {U'ऒ', "o"},  {U'ओ', "o"},
    {U'औ', "au"},  {U'ऽ', ""},   {U'ॐ', "om"}, {U'ॠ', "rr"},
    {U'ॡ', "ll"},  {U'ॱ', ""},   {U'ॲ', "a"},  {U'ॳ', "oe"},
    {U'ॴ', "ooe"}, {U'ॵ', "aw"}, {U'ॶ', "ue"}, {U'ॷ', "uue"},
};

constexpr char32_t kVirama = U'्';
constexpr char32_t kNukta = U'़';

std::string Utf8(std::u32string_view cps) {
  std::string out;
  for (char32_t c : cps) {
    if (c < 0x80) {
      out += static_cast<char>(c);
    } else if (c < 0x800) {
      out += static_cast<char>(0xC0 | (c >> 6));
      out += static_cast<char>(0x80 | (c & 0x3F));
    } else if (c < 0x10000) {
      out += static_cast<char>(0xE0 | (c >> 12));
      out += static_cast<char>(0x80 | ((c >> 6) & 0x3F));
      out += static_cast<char>(0x80 | (c & 0x3F));
    } else {
      out += static_cast<char>(0xF0 | (c >> 18));
      out += static_cast<char>(0x80 | ((c >> 12) & 0x3F));
      out += static_cast<char>(0x80 | ((c >> 6) & 0x3F));
      out += static_cast<char>(0x80 | (c & 0x3F));
    }
  }
  return out;
}

template <std::size_t N>
void AddAll(RomanScheme* scheme, const TableEntry (&entries)[N]) {
  for (const auto& e : entries) scheme->AddMapping(e.source, e.target);
}

// An abugida consonant carries an inherent 'a' unless followed by a vowel
// sign or virama. The inherent vowel is dropped word-finally except in
// single-consonant words and after a conjunct.
void AddDevanagari(RomanScheme* scheme) {
  struct Base {
    std::u32string cps;
    std::string roman;
  };
  std::vector<Base> bases;
  std::vector<Base> plain;
  for (const auto& c : kDevanagariConsonants) {
    plain.push_back({std::u32string(1, c.codepoint), std::string(c.roman)});
    std::string nukta_roman(c.roman);
    for (const auto& n : kDevanagariNukta) {
      if (n.codepoint == c.codepoint) nukta_roman = n.roman;
    }
    bases.push_back(plain.back());
    bases.push_back({std::u32string{c.codepoint, kNukta}, nukta_roman});
  }
  for (const auto& b : bases) {
    const std::string src = Utf8(b.cps);
    scheme->AddMapping(src, b.roman + "a");
    scheme->AddMapping(src + Utf8(std::u32string(1, kVirama)), b.roman);
    for (const auto& v : kDevanagariVowelSigns) {
      scheme->AddMapping(src + Utf8(std::u32string(1, v.codepoint)),
                         b.roman + std::string(v.roman));
    }
    scheme->AddMapping(src + "$", b.roman);
    scheme->AddMapping("^" + src + "$", b.roman + "a");
    for (const auto& first : plain) {
      std::u32string conjunct = first.cps;
      conjunct += kVirama;
      conjunct += b.cps;
      scheme->AddMapping(Utf8(conjunct) + "$", first.roman + b.roman + "a");
    }
  }
  for (const auto& v : kDevanagariIndependent) {
    scheme->AddMapping(Utf8(std::u32string(1, v.codepoint)), v.roman);
  }
  // A vowel sign with no consonant before it still reads as its vowel.
  for (const auto& v : kDevanagariVowelSigns) {
    scheme->AddMapping(Utf8(std::u32string(1, v.codepoint)), v.roman);
  }
}

}  // namespace

void AddBuiltinTables(RomanScheme* scheme) {
  for (char c = 'a'; c <= 'z'; ++c) {
    const std::string letter(1, c);
    scheme->AddMapping(letter, letter);
  }
  AddAll(scheme, kApostrophes);
  AddAll(scheme, kLatinExtra);
  AddAll(scheme, kCyrillic);
  AddAll(scheme, kCyrillicSequences);
  AddAll(scheme, kGreek);
  AddDevanagari(scheme);
}

}  // namespace zsdec::internal
