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


#include "qcx/encode.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <sstream>

namespace qcx {

namespace {

bool is_prefix(const SymbolWord& a, const SymbolWord& b) {
  return a.size() <= b.size() && std::equal(a.begin(), a.end(), b.begin());
}

int index_width(int num_qubits) {
  return num_qubits <= 1 ? 0 : static_cast<int>(std::bit_width(static_cast<unsigned>(num_qubits - 1)));
}

std::string join(const std::vector<std::string>& alphabet, const SymbolWord& w, char sep) {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += sep;
    out += alphabet[w[i]];
  }
  return out;
}

}  // namespace

Code::Code(std::string id, BasisPtr basis, Layout layout, std::vector<std::string> alphabet,
           std::map<std::string, SymbolWord> gate_words, Symbol newline, Symbol digit0,
           Symbol digit1)
    : id_(std::move(id)),
      basis_(std::move(basis)),
      layout_(layout),
      alphabet_(std::move(alphabet)),
      gate_words_(std::move(gate_words)),
      newline_(newline),
      digit0_(digit0),
      digit1_(digit1) {
  if (!basis_) throw Error(ErrorKind::Domain, "code needs a basis");
  const auto n = static_cast<Symbol>(alphabet_.size());
  if (n < 2) throw Error(ErrorKind::Domain, "code alphabet needs at least two symbols");
  for (std::size_t i = 0; i < alphabet_.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (alphabet_[i] == alphabet_[j]) throw Error(ErrorKind::Domain, "repeated token in alphabet");
    }
  }
  bits_per_symbol_ = std::max(1, static_cast<int>(std::bit_width(static_cast<unsigned>(n - 1))));

  std::vector<SymbolWord> words;
  for (const auto& g : basis_->gates()) {
    auto it = gate_words_.find(g.name);
    if (it == gate_words_.end() || it->second.empty()) {
      throw Error(ErrorKind::Domain, "code '" + id_ + "' has no word for gate '" + g.name + "'");
    }
    words.push_back(it->second);
  }
  if (gate_words_.size() != basis_->gates().size()) {
    throw Error(ErrorKind::Domain, "code '" + id_ + "' maps gates outside its basis");
  }
  words.push_back({newline_});
  if (layout_ == Layout::Explicit) {
    words.push_back({digit0_});
    words.push_back({digit1_});
  }
  for (std::size_t i = 0; i < words.size(); ++i) {
    for (Symbol s : words[i]) {
      if (s >= n) throw Error(ErrorKind::Domain, "symbol out of range in code '" + id_ + "'");
    }
    for (std::size_t j = 0; j < words.size(); ++j) {
      if (i != j && is_prefix(words[i], words[j])) {
        throw Error(ErrorKind::Domain, "code '" + id_ + "' is not prefix-free");
      }
    }
  }
}

Symbol Code::symbol(std::string_view token) const {
  for (std::size_t i = 0; i < alphabet_.size(); ++i) {
    if (alphabet_[i] == token) return static_cast<Symbol>(i);
  }
  throw Error(ErrorKind::Lookup, "token '" + std::string(token) + "' not in code '" + id_ + "'");
}

Code one_symbol_code(const BasisPtr& basis) {
  std::vector<std::string> alphabet;
  std::map<std::string, SymbolWord> words;
  for (const auto& g : basis->gates()) {
    words[g.name] = {static_cast<Symbol>(alphabet.size())};
    alphabet.push_back(g.name);
  }
  const auto base = static_cast<Symbol>(alphabet.size());
  alphabet.insert(alphabet.end(), {"0", "1", "L"});
  return Code("one-symbol", basis, Layout::Explicit, std::move(alphabet), std::move(words),
              base + 2, base, base + 1);
}

Code two_symbol_code(const BasisPtr& basis) {
  const auto k = basis->gates().size();
  Symbol q = 2;
  while (q * q < k) ++q;
  std::vector<std::string> alphabet;
  for (Symbol i = 0; i < q; ++i) alphabet.push_back(std::string(1, static_cast<char>('a' + i)));
  std::map<std::string, SymbolWord> words;
  for (std::size_t i = 0; i < k; ++i) {
    words[basis->gates()[i].name] = {static_cast<Symbol>(i / q), static_cast<Symbol>(i % q)};
  }
  alphabet.insert(alphabet.end(), {"0", "1", "L"});
  return Code("two-symbol", basis, Layout::Explicit, std::move(alphabet), std::move(words), q + 2,
              q, q + 1);
}

const Code& inl_code() {
  static const Code code("inl", classical_coarsening().basis, Layout::Positional, {"I", "N", "L"},
                         {{"I", {0}}, {"N", {1}}}, 2, 0, 1);
  return code;
}

Code code_by_id(std::string_view id, const BasisPtr& basis) {
  if (id == "one-symbol") return one_symbol_code(basis);
  if (id == "two-symbol") return two_symbol_code(basis);
  if (id == "inl") {
    if (basis->id() != "classical") {
      throw Error(ErrorKind::Domain, "the inl code only covers the classical basis");
    }
    return inl_code();
  }
  throw Error(ErrorKind::Lookup, "unknown code '" + std::string(id) + "'");
}

// ---------------------------------------------------------------------------

EncodedString encode(const Circuit& c, const Code& code, std::string source_id) {
  if (c.basis()->id() != code.basis()->id()) {
    throw Error(ErrorKind::Domain, "circuit basis '" + c.basis()->id() + "' differs from code basis '" +
                                       code.basis()->id() + "'");
  }
  EncodedString s{code.id(), code.basis()->id(), code.bits_per_symbol(), {}, std::move(source_id)};
  const auto word = [&](const std::string& gate) -> const SymbolWord& {
    auto it = code.gate_words().find(gate);
    if (it == code.gate_words().end()) {
      throw Error(ErrorKind::Lookup, "no code word for gate '" + gate + "'");
    }
    return it->second;
  };
  if (code.layout() == Layout::Positional) {
    if (c.size() != static_cast<std::size_t>(c.num_qubits())) {
      throw Error(ErrorKind::Domain, "positional code needs exactly one gate per qubit");
    }
    for (int q = 0; q < c.num_qubits(); ++q) {
      const Operation& op = c.ops()[static_cast<std::size_t>(q)];
      if (op.targets.size() != 1 || op.targets[0] != q) {
        throw Error(ErrorKind::Domain, "positional code needs gate i on qubit i");
      }
      const SymbolWord& w = word(op.gate);
      s.symbols.insert(s.symbols.end(), w.begin(), w.end());
      s.symbols.push_back(code.newline());
    }
    return s;
  }
  for (int b = static_cast<int>(std::bit_width(static_cast<unsigned>(c.num_qubits()))) - 1; b >= 0; --b) {
    s.symbols.push_back(code.digit(c.num_qubits() >> b & 1));
  }
  s.symbols.push_back(code.newline());
  const int width = index_width(c.num_qubits());
  for (const auto& op : c.ops()) {
    const SymbolWord& w = word(op.gate);
    s.symbols.insert(s.symbols.end(), w.begin(), w.end());
    for (int t : op.targets) {
      for (int b = width - 1; b >= 0; --b) s.symbols.push_back(code.digit(t >> b & 1));
    }
    s.symbols.push_back(code.newline());
  }
  return s;
}

Circuit decode(const EncodedString& s, const Code& code) {
  if (s.code_id != code.id() || s.basis_id != code.basis()->id()) {
    throw ParseError(0, "string was written with code '" + s.code_id + "' over '" + s.basis_id + "'");
  }
  std::size_t pos = 0;
  const auto fail = [&](const std::string& why) {
    return ParseError(pos, "symbol " + std::to_string(pos) + ": " + why);
  };
  const auto next = [&]() {
    if (pos >= s.symbols.size()) throw fail("unexpected end of string");
    return s.symbols[pos++];
  };
  const auto gate = [&]() -> const std::string& {
    SymbolWord w;
    const std::size_t start = pos;
    while (true) {
      w.push_back(next());
      bool extendable = false;
      for (const auto& [name, word] : code.gate_words()) {
        if (word == w) return name;
        extendable = extendable || is_prefix(w, word);
      }
      if (!extendable) {
        pos = start;
        throw fail("no gate word starts here");
      }
    }
  };
  const auto expect_newline = [&]() {
    if (next() != code.newline()) {
      --pos;
      throw fail("expected line terminator");
    }
  };

  if (code.layout() == Layout::Positional) {
    std::vector<std::string> gates;
    while (pos < s.symbols.size()) {
      gates.push_back(gate());
      expect_newline();
    }
    if (gates.empty()) throw fail("empty positional string");
    Circuit c(code.basis(), static_cast<int>(gates.size()));
    for (std::size_t q = 0; q < gates.size(); ++q) c.append(gates[q], {static_cast<int>(q)});
    return c;
  }

  const auto digit_value = [&](Symbol sym) -> int {
    if (sym == code.digit(false)) return 0;
    if (sym == code.digit(true)) return 1;
    --pos;
    throw fail("expected binary digit");
  };
  long long n = 0;
  int digits = 0;
  while (pos < s.symbols.size() && s.symbols[pos] != code.newline()) {
    n = 2 * n + digit_value(next());
    if (++digits > 5 || n > kDefaultMaxQubits * 1024) throw fail("qubit count too large");
  }
  if (digits == 0) throw fail("missing qubit count");
  expect_newline();
  if (n < 1) throw fail("qubit count must be positive");
  Circuit c(code.basis(), static_cast<int>(n));
  const int width = index_width(static_cast<int>(n));
  while (pos < s.symbols.size()) {
    const std::size_t start = pos;
    const std::string& name = gate();
    std::vector<int> targets;
    for (int k = 0; k < code.basis()->at(name).arity; ++k) {
      int t = 0;
      for (int b = 0; b < width; ++b) t = 2 * t + digit_value(next());
      targets.push_back(t);
    }
    expect_newline();
    try {
      c.append(name, std::move(targets));
    } catch (const Error& e) {
      pos = start;
      throw fail(e.what());
    }
  }
  return c;
}

std::string to_text(const EncodedString& s, const Code& code) {
  return join(code.alphabet(), s.symbols, ' ');
}

EncodedString parse_encoded(const std::string& text, const Code& code) {
  EncodedString s{code.id(), code.basis()->id(), code.bits_per_symbol(), {}, ""};
  std::istringstream in(text);
  for (std::string tok; in >> tok;) {
    try {
      s.symbols.push_back(code.symbol(tok));
    } catch (const Error&) {
      throw ParseError(s.symbols.size(), "symbol " + std::to_string(s.symbols.size()) +
                                             ": unknown token '" + tok + "'");
    }
  }
  return s;
}

std::vector<std::uint8_t> pack_bits(const EncodedString& s) {
  std::vector<std::uint8_t> out((s.raw_bits() + 7) / 8, 0);
  std::size_t bit = 0;
  for (Symbol sym : s.symbols) {
    for (int b = s.bits_per_symbol - 1; b >= 0; --b, ++bit) {
      if (sym >> b & 1u) out[bit / 8] |= static_cast<std::uint8_t>(0x80u >> (bit % 8));
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
std::vector<std::uint8_t> pack_bit_string(std::string_view x) {
  std::vector<std::uint8_t> out((x.size() + 7) / 8, 0);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == '1') {
      out[i / 8] |= static_cast<std::uint8_t>(0x80u >> (i % 8));
    } else if (x[i] != '0') {
      throw Error(ErrorKind::Domain, "bit string may contain only '0' and '1'");
    }
  }
  return out;
}

TranslationDictionary translation_dictionary(const Code& from, const Code& to) {
  if (from.basis()->id() != to.basis()->id()) {
    throw Error(ErrorKind::Domain, "codes cover different bases");
  }
  if (from.layout() != to.layout()) {
    throw Error(ErrorKind::Domain, "codes use different layouts");
  }
  TranslationDictionary d;
  for (const auto& g : from.basis()->gates()) {
    d.pairs.emplace_back(from.gate_words().at(g.name), to.gate_words().at(g.name));
  }
  d.pairs.push_back({{from.newline()}, {to.newline()}});
  if (from.layout() == Layout::Explicit) {
    d.pairs.push_back({{from.digit(false)}, {to.digit(false)}});
    d.pairs.push_back({{from.digit(true)}, {to.digit(true)}});
  }
  if (from.id() == to.id()) return d;  // identity: nothing to store
  for (const auto& [a, b] : d.pairs) {
    d.size_bits += a.size() * static_cast<std::size_t>(from.bits_per_symbol()) +
                   b.size() * static_cast<std::size_t>(to.bits_per_symbol());
    d.text += join(from.alphabet(), a, '+') + ' ' + join(to.alphabet(), b, '+') + '\n';
  }
  return d;
}

std::pair<EncodedString, TranslationDictionary> translate(const EncodedString& s, const Code& from,
                                                          const Code& to) {
  TranslationDictionary d = translation_dictionary(from, to);
  if (s.code_id != from.id()) throw Error(ErrorKind::Domain, "string is not in the source code");
  EncodedString out{to.id(), to.basis()->id(), to.bits_per_symbol(), {}, s.source_id};
  std::size_t pos = 0;
  while (pos < s.symbols.size()) {
    bool matched = false;
    for (const auto& [a, b] : d.pairs) {
      if (pos + a.size() <= s.symbols.size() &&
          std::equal(a.begin(), a.end(), s.symbols.begin() + static_cast<std::ptrdiff_t>(pos))) {
        out.symbols.insert(out.symbols.end(), b.begin(), b.end());
        pos += a.size();
        matched = true;
        break;
      }
    }
    if (!matched) throw ParseError(pos, "symbol " + std::to_string(pos) + ": no dictionary word");
  }
  return {std::move(out), std::move(d)};
}

std::pair<Circuit, EncodedString> embed_classical(const std::string& x) {
  if (x.empty()) throw Error(ErrorKind::Domain, "bit string must be non-empty");
  Circuit c(classical_coarsening().basis, static_cast<int>(x.size()));
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] != '0' && x[i] != '1') {
      throw Error(ErrorKind::Domain, "bit string may contain only '0' and '1'");
    }
    c.append(x[i] == '1' ? "N" : "I", {static_cast<int>(i)});
  }
  EncodedString s = encode(c, inl_code(), "classical:" + x);
  return {std::move(c), std::move(s)};
}

}  // namespace qcx
