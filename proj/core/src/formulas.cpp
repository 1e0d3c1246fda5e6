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


#include <cmath>
#include <numeric>

#include "qcx/bounds.hpp"

namespace qcx {

namespace {

void need_qubits(int n) {
  if (n < 1) throw Error(ErrorKind::Domain, "qubit count must be >= 1");
  if (n > 62) throw Error(ErrorKind::Domain, "qubit count too large for closed forms");
}

void need_epsilon(double epsilon) {
  if (!(epsilon > 0.0 && epsilon < 1.0)) throw Error(ErrorKind::Domain, "precision must lie in (0, 1)");
}

double pow2(int n) { return std::ldexp(1.0, n); }

}  // namespace

double preliminary_bound(int n, double epsilon, bool linear_term) {
  need_qubits(n);
  need_epsilon(epsilon);
  return -pow2(n) * std::log2(epsilon) + (linear_term ? n : 0);
}

double ball_volume_bound(int n, double epsilon) {
  need_qubits(n);
  need_epsilon(epsilon);
  // -log2(2^-N eps^(2^N)), expanded to stay finite for large N.
  return n - pow2(n) * std::log2(epsilon);
}

double general_bound(int n, double epsilon) {
  need_qubits(n);
  need_epsilon(epsilon);
  return -static_cast<double>(n) * n * pow2(n) * std::log2(epsilon);
}

double graph_exact_bound(int n) {
  need_qubits(n);
  return n + n * (n - 1) / 2.0;
}

double graph_sk_bound(int n, double epsilon) {
  need_qubits(n);
  need_epsilon(epsilon);
  return static_cast<double>(n) * n - std::log2(epsilon / (static_cast<double>(n) * n));
}

double weighted_graph_bound(int n, double epsilon) {
  need_qubits(n);
  need_epsilon(epsilon);
  return -static_cast<double>(n) * n * std::log2(epsilon / (static_cast<double>(n) * n));
}

double copies_bound(int n, int copies, double epsilon) {
  need_qubits(n);
  need_epsilon(epsilon);
  if (copies < 1) throw Error(ErrorKind::Domain, "copy count must be >= 1");
  return -static_cast<double>(n) * n * pow2(n) * std::log2(epsilon / copies);
}

double separable_bound(const std::vector<int>& partition, double epsilon) {
  need_epsilon(epsilon);
  if (partition.empty()) throw Error(ErrorKind::Domain, "partition must be non-empty");
  const double j = static_cast<double>(partition.size());
  double sum = 0.0;
  for (int nj : partition) {
    need_qubits(nj);
    sum += static_cast<double>(nj) * nj * pow2(nj);
  }
  return -sum * std::log2(epsilon / j);
}

double fully_separable_bound(int n, double epsilon) {
  need_qubits(n);
  need_epsilon(epsilon);
  return -2.0 * n * std::log2(epsilon / n);
}

double schumacher_bound(int n, double entropy, double epsilon, int dictionary_size) {
  need_qubits(n);
  need_epsilon(epsilon);
  if (!(entropy >= 0.0 && entropy <= 1.0)) throw Error(ErrorKind::Domain, "entropy must lie in [0, 1]");
  if (dictionary_size < 1) throw Error(ErrorKind::Domain, "dictionary size must be >= 1");
  const double ns = n * entropy;
  return -dictionary_size * ns * ns * std::exp2(ns) * std::log2(epsilon);
}

double sentence_bound(double index_bits, int word_length, int dictionary_size) {
  if (!(index_bits >= 0.0)) throw Error(ErrorKind::Domain, "index bits must be >= 0");
  if (word_length < 0 || dictionary_size < 1) {
    throw Error(ErrorKind::Domain, "word length must be >= 0 and dictionary size >= 1");
  }
  return index_bits + static_cast<double>(word_length) * dictionary_size;
}

const std::vector<std::string>& formula_kinds() {
  static const std::vector<std::string> kinds{
      "preliminary", "ball_volume", "general",  "graph_exact",     "graph_sk",   "weighted_graph",
      "copies",      "per_copy",    "separable", "fully_separable", "schumacher", "sentence"};
  return kinds;
}

ComplexityEstimate formula_bound(std::string_view kind, const FormulaParams& p) {
  ComplexityEstimate e;
  e.method = Method::Formula;
  e.formula = std::string(kind);
  e.epsilon = p.epsilon;
  if (kind == "preliminary") {
    e.bits = preliminary_bound(p.n, p.epsilon, true);
    e.terms["without_linear"] = preliminary_bound(p.n, p.epsilon, false);
  } else if (kind == "ball_volume") {
    e.bits = ball_volume_bound(p.n, p.epsilon);
  } else if (kind == "general") {
    e.bits = general_bound(p.n, p.epsilon);
  } else if (kind == "graph_exact") {
    e.bits = graph_exact_bound(p.n);
  } else if (kind == "graph_sk") {
    e.bits = graph_sk_bound(p.n, p.epsilon);
  } else if (kind == "weighted_graph") {
    e.bits = weighted_graph_bound(p.n, p.epsilon);
  } else if (kind == "copies") {
    e.bits = copies_bound(p.n, p.copies, p.epsilon);
  } else if (kind == "per_copy") {
    if (p.copies < 1) throw Error(ErrorKind::Domain, "copy count must be >= 1");
    const double log_m = std::log2(static_cast<double>(p.copies));
    e.terms["per_copy"] = general_bound(p.n, p.epsilon);
    e.terms["log_m"] = log_m;
    e.bits = e.terms["per_copy"] + log_m;
  } else if (kind == "separable") {
    e.bits = separable_bound(p.partition, p.epsilon);
  } else if (kind == "fully_separable") {
    e.bits = fully_separable_bound(p.n, p.epsilon);
  } else if (kind == "schumacher") {
    e.bits = schumacher_bound(p.n, p.entropy, p.epsilon, p.dictionary_size);
  } else if (kind == "sentence") {
    e.bits = sentence_bound(p.index_bits, p.word_length, p.dictionary_size);
  } else {
    throw Error(ErrorKind::Lookup, "unknown formula kind '" + std::string(kind) + "'");
  }
  return e;
}

}  // namespace qcx
