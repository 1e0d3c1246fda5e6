// Copyright 2026 The qcx Authors
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


/**
 * @file
 * Codes turning circuits into strings over small symbol alphabets, code
 * translation, and the three-symbol embedding of classical bit strings.
 *
 * Explicit-layout strings look like
 *
 *   <N in binary> L  <gate word> <target digits>... L  ...
 *
 * where every target is written in ceil(log2 N) binary digits (none for a
 * single qubit). Positional strings (the {I, N, L} code) carry one gate per
 * qubit, in qubit order, each followed by L, and no header.
 */
#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qcx/circuit.hpp"

namespace qcx {

using Symbol = std::uint32_t;
using SymbolWord = std::vector<Symbol>;

enum class Layout { Explicit, Positional };

class Code {
 public:
  /// Throws Domain unless every basis gate has a word, the words and the
  /// structural symbols form a prefix-free set, and symbols are in range.
  Code(std::string id, BasisPtr basis, Layout layout, std::vector<std::string> alphabet,
       std::map<std::string, SymbolWord> gate_words, Symbol newline, Symbol digit0, Symbol digit1);

  const std::string& id() const noexcept { return id_; }
  const BasisPtr& basis() const noexcept { return basis_; }
  Layout layout() const noexcept { return layout_; }
  const std::vector<std::string>& alphabet() const noexcept { return alphabet_; }
  const std::map<std::string, SymbolWord>& gate_words() const noexcept { return gate_words_; }
  Symbol newline() const noexcept { return newline_; }
  Symbol digit(bool one) const noexcept { return one ? digit1_ : digit0_; }
  /// ceil(log2 |alphabet|), at least 1.
  int bits_per_symbol() const noexcept { return bits_per_symbol_; }

  /// Symbol for a token; throws Lookup.
  Symbol symbol(std::string_view token) const;

 private:
  std::string id_;
  BasisPtr basis_;
  Layout layout_;
  std::vector<std::string> alphabet_;
  std::map<std::string, SymbolWord> gate_words_;
  Symbol newline_, digit0_, digit1_;
  int bits_per_symbol_;
};

/// One symbol per gate: alphabet = gate names, "0", "1", "L".
Code one_symbol_code(const BasisPtr& basis);
/// Two symbols per gate: gate i is written in base q over "a", "b", ...
/// (q = ceil(sqrt(#gates)), at least 2), then "0", "1", "L".
Code two_symbol_code(const BasisPtr& basis);
/// {I, N, L} positional code over the classical basis: I = 0, N = 1, L = 2.
const Code& inl_code();

/// "one-symbol", "two-symbol" (any basis) or "inl" (classical basis only).
Code code_by_id(std::string_view id, const BasisPtr& basis);

struct EncodedString {
  std::string code_id;
  std::string basis_id;
  int bits_per_symbol = 1;
  std::vector<Symbol> symbols;
  std::string source_id;

  /// symbols.size() * bits_per_symbol.
  std::size_t raw_bits() const noexcept { return symbols.size() * bits_per_symbol; }
  friend bool operator==(const EncodedString&, const EncodedString&) = default;
};

/// Throws Lookup for a gate the code has no word for and Domain when the
/// circuit does not fit a positional layout.
EncodedString encode(const Circuit& c, const Code& code, std::string source_id = "");
/// Throws ParseError carrying the 0-based symbol index of the problem.
Circuit decode(const EncodedString& s, const Code& code);

/// Space-separated tokens.
std::string to_text(const EncodedString& s, const Code& code);
EncodedString parse_encoded(const std::string& text, const Code& code);

/// Symbols as bits_per_symbol-bit groups, most significant bit first,
/// zero-padded to whole bytes.
std::vector<std::uint8_t> pack_bits(const EncodedString& s);
/// A '0'/'1' string, one bit per character, first character in the high bit.
std::vector<std::uint8_t> pack_bit_string(std::string_view x);

struct TranslationDictionary {
  /// from-word -> to-word, one pair per gate and structural symbol.
  std::vector<std::pair<SymbolWord, SymbolWord>> pairs;
  /// Sum over pairs of |from| * bps(from) + |to| * bps(to); 0 for identical codes.
  std::size_t size_bits = 0;
  /// "fromWord toWord" lines, tokens of a word joined by '+'.
  std::string text;
};

/// The dictionary covers both codes completely, so its size depends on the
/// codes only. Throws Domain when the codes differ in basis or layout.
TranslationDictionary translation_dictionary(const Code& from, const Code& to);

/// Rewrites `s` word by word through the dictionary.
std::pair<EncodedString, TranslationDictionary> translate(const EncodedString& s, const Code& from,
                                                          const Code& to);

/// NOT on qubits whose bit is 1, the identity marker elsewhere, over the
/// classical basis, with its {I, N, L} string. Throws Domain for an empty x
/// or characters other than '0' and '1'.
std::pair<Circuit, EncodedString> embed_classical(const std::string& x);

}  // namespace qcx
