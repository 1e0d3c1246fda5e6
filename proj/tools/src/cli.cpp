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


#include "qcx/cli/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <map>
#include <sstream>

#include "qcx/bounds.hpp"
#include "qcx/circuit.hpp"
#include "qcx/compress.hpp"
#include "qcx/encode.hpp"
#include "qcx/synth.hpp"
#include "text.hpp"

namespace qcx::cli {
namespace {

namespace fs = std::filesystem;

struct Options {
  std::string basis = "standard";
  std::string code = "one-symbol";
  double epsilon = 0.01;
  std::uint64_t seed = 1;
  std::string out;
  std::string compressor{kDefaultCompressor};
  int sk_l0 = SkParams{}.l0;
  int sk_depth = SkParams{}.depth;
  std::string dump_state;

  SkParams sk() const { return {sk_l0, sk_depth}; }

  void validate() const {
    basis_by_id(basis);
    code_by_id(code, basis_by_id(basis));
    validate_compressor(compressor);
    if (!(epsilon > 0.0 && epsilon < 1.0)) throw Error(ErrorKind::Domain, "epsilon must lie in (0, 1)");
    if (sk_l0 < 1 || sk_depth < 0) throw Error(ErrorKind::Domain, "bad SK parameters");
  }
};

std::string num(double v, int precision = 10) {
  std::ostringstream os;
  os << std::setprecision(precision) << v;
  return os.str();
}

std::string file_stem(std::string id) {
  std::replace_if(id.begin(), id.end(), [](char ch) { return ch == ':' || ch == '/'; }, '_');
  return id;
}

fs::path out_path(const Options& o, const std::string& name) {
  std::error_code ec;
  fs::create_directories(o.out, ec);
  if (ec) throw Error(ErrorKind::Io, "cannot create '" + o.out + "': " + ec.message());
  return fs::path(o.out) / name;
}

void write_file(const fs::path& p, const std::string& text, bool append = false) {
  std::ofstream f(p, append ? std::ios::app : std::ios::trunc);
  if (!(f << text)) throw Error(ErrorKind::Io, "cannot write '" + p.string() + "'");
}

void dump_state(const Options& o, const StateVector& s) {
  if (o.dump_state.empty()) return;
  std::ostringstream os;
  write_state(os, s);
  write_file(o.dump_state, os.str());
}

// ---- compile ---------------------------------------------------------------

struct Compiled {
  explicit Compiled(Circuit c) : circuit(std::move(c)) {}
  Circuit circuit;
  std::optional<double> fidelity;
  double per_gate_budget = 0.0;
  std::size_t continuous_gates = 0;
  int depth = 0;
  std::string extra;
};

Compiled compile_target(const Target& t, const Options& o) {
  const BasisPtr basis = basis_by_id(o.basis);
  if (t.bits) {
    auto [c, s] = embed_classical(*t.bits);
    Compiled r(c);
    r.extra = "# string " + to_text(s, inl_code()) + "\n";
    if (basis->id() == standard_basis()->id()) {
      r.circuit = expand(c, classical_coarsening().dictionary);
    } else if (basis->id() != c.basis()->id()) {
      throw Error(ErrorKind::Lookup, "classical strings compile to the classical or standard basis");
    }
    return r;
  }
  if (t.graph && !t.graph->weighted()) {
    const bool coarse = basis->id() == graph_coarsening().basis->id();
    if (coarse || basis->id() == standard_basis()->id()) {
      Compiled r(graph_state_circuit(*t.graph, !coarse));
      r.extra = "# coarse_gates=" + std::to_string(graph_state_circuit(*t.graph, false).size()) + "\n";
      return r;
    }
  }
  CompileResult cr = t.graph ? compile_to_basis(weighted_graph_state_circuit(*t.graph), basis,
                                                o.epsilon, o.sk())
                             : compile_state(*t.state, basis, o.epsilon, o.sk());
  Compiled r(std::move(cr.circuit));
  r.fidelity = cr.fidelity;
  r.per_gate_budget = cr.per_gate_budget;
  r.continuous_gates = cr.continuous_gates;
  r.depth = cr.max_depth_used;
  return r;
}

int cmd_compile(const std::string& spec, const Options& o, std::ostream& out) {
  const Target t = load_target(spec);
  Compiled r = compile_target(t, o);
  const int n = r.circuit.num_qubits();
  std::optional<StateVector> prepared;
  if (n <= kDefaultMaxQubits) prepared = run(r.circuit);
  if (!r.fidelity && prepared && (!t.bits || n <= kDefaultMaxQubits)) {
    r.fidelity = fidelity(*prepared, target_state(t));
  }
  std::ostringstream metrics;
  metrics << "# gates=" << r.circuit.size()
          << " fidelity=" << (r.fidelity ? num(*r.fidelity, 12) : "unsimulated")
          << " per_gate_budget=" << num(r.per_gate_budget)
          << " continuous_gates=" << r.continuous_gates << " sk_depth=" << r.depth << '\n'
          << r.extra;
  if (prepared) dump_state(o, *prepared);
  if (o.out.empty()) {
    out << metrics.str() << to_text(r.circuit);
  } else {
    const fs::path p = out_path(o, file_stem(t.id) + ".circuit");
    write_file(p, metrics.str() + to_text(r.circuit));
    out << metrics.str() << "# wrote " << p.string() << '\n';
  }
  return 0;
}

// ---- estimate --------------------------------------------------------------

constexpr const char* kEstimateHeader =
    "state_id,N,epsilon,method,bits,basis,code,candidate_count,compressor_id\n";

int cmd_estimate(const std::string& spec, const std::string& generator_list, const Options& o,
                 std::ostream& out) {
  const Target t = load_target(spec);
  const StateVector phi = target_state(t);
  const BasisPtr basis = basis_by_id(o.basis);
  std::vector<Generator> gens;
  for (const auto& id : split(generator_list, ',')) {
    if (!id.empty()) gens.push_back(generator_by_id(id, basis, o.sk()));
  }
  if (gens.empty()) throw Error(ErrorKind::EmptyCandidates, "no generators given");
  const CandidateReport rep = min_over_candidates(phi, o.epsilon, gens, o.code, o.compressor);
  const ComplexityEstimate& e = rep.estimate;

  std::ostringstream row;
  row << t.id << ',' << phi.num_qubits() << ',' << num(o.epsilon) << ',' << to_string(e.method)
      << ',' << num(e.bits) << ',' << e.basis_id << ',' << e.code_id << ',' << e.candidate_count
      << ',' << e.compressor_id << '\n';
  if (o.out.empty()) {
    out << kEstimateHeader << row.str();
  } else {
    const fs::path p = out_path(o, "estimates.csv");
    const bool fresh = !fs::exists(p);
    write_file(p, (fresh ? std::string(kEstimateHeader) : std::string()) + row.str(), true);
    out << kEstimateHeader << row.str() << "# appended to " << p.string() << '\n';
  }
  for (const auto& c : rep.candidates) {
    out << "# candidate " << c.generator << (c.accepted ? " accepted" : " rejected");
    if (c.bits) out << " bits=" << num(*c.bits);
    if (c.fidelity) out << " fidelity=" << num(*c.fidelity, 12);
    if (!c.reason.empty()) out << " reason=\"" << c.reason << '"';
    out << '\n';
  }
  const double general = general_bound(phi.num_qubits(), o.epsilon);
  out << "# winner=" << rep.candidates.at(rep.winner).generator << " gates=" << rep.circuit.size()
      << " header_bits=" << e.header_bits << " general_bound=" << num(general)
      << (e.bits < general ? " below_general" : " not_below_general") << '\n';
  return 0;
}

// ---- bounds ----------------------------------------------------------------

int cmd_bounds(const std::string& kind, const std::vector<std::string>& args, std::ostream& out) {
  auto need = [&](std::size_t k, const char* usage) {
    if (args.size() != k) throw Error(ErrorKind::Parse, "usage: bounds " + kind + " " + usage);
  };
  auto i = [&](std::size_t j) { return parse_number<int>(args[j], "integer"); };
  auto d = [&](std::size_t j) { return parse_number<double>(args[j], "number"); };
  std::ostringstream os;
  os << "kind,params,bits\n";
  std::string joined;
  for (const auto& a : args) joined += (joined.empty() ? "" : " ") + a;

  if (kind == "list") {
    for (const auto& k : formula_kinds()) out << k << '\n';
    out << "incompressible_fraction\nnoncomplex_fraction\ncensus\n";
    return 0;
  }
  if (kind == "incompressible_fraction") {
    need(2, "N c");
    os << kind << ',' << joined << ',' << num(incompressible_fraction(i(0), d(1))) << '\n';
    out << os.str();
    return 0;
  }
  if (kind == "noncomplex_fraction") {
    need(3, "N eps c");
    const auto f = noncomplex_fraction(i(0), d(1), d(2));
    os << kind << ',' << joined << ',' << num(f.clamped) << "\n# unclamped=" << num(f.value) << '\n';
    out << os.str();
    return 0;
  }
  if (kind == "census") {
    need(1, "c");
    const auto r = toy_machine_census(i(0));
    out << "c,descriptions,valid,distinct_outputs,bound,holds\n"
        << r.c << ',' << r.descriptions << ',' << r.valid << ',' << r.distinct_outputs << ','
        << r.bound << ',' << (r.holds ? "yes" : "no") << '\n';
    return 0;
  }

  FormulaParams p;
  if (kind == "graph_exact") {
    need(1, "N");
    p.n = i(0);
  } else if (kind == "copies" || kind == "per_copy") {
    need(3, "N m eps");
    p.n = i(0);
    p.copies = i(1);
    p.epsilon = d(2);
  } else if (kind == "separable") {
    if (args.size() < 2) throw Error(ErrorKind::Parse, "usage: bounds separable eps N1 [N2 ...]");
    p.epsilon = d(0);
    for (std::size_t j = 1; j < args.size(); ++j) p.partition.push_back(i(j));
  } else if (kind == "schumacher") {
    need(4, "N S eps D");
    p.n = i(0);
    p.entropy = d(1);
    p.epsilon = d(2);
    p.dictionary_size = i(3);
  } else if (kind == "sentence") {
    need(3, "index_bits l D");
    p.index_bits = d(0);
    p.word_length = i(1);
    p.dictionary_size = i(2);
  } else if (std::find(formula_kinds().begin(), formula_kinds().end(), kind) != formula_kinds().end()) {
    need(2, "N eps");
    p.n = i(0);
    p.epsilon = d(1);
  } else {
    throw Error(ErrorKind::Lookup, "unknown bound kind '" + kind + "' (try 'bounds list')");
  }
  const ComplexityEstimate e = formula_bound(kind, p);
  os << kind << ',' << joined << ',' << num(e.bits) << '\n';
  for (const auto& [name, v] : e.terms) os << "# " << name << '=' << num(v) << '\n';
  out << os.str();
  return 0;
}

// ---- source-exp ------------------------------------------------------------

int cmd_source_exp(const std::string& spec, const std::vector<std::size_t>& ms, std::size_t trials,
                   const Options& o, std::ostream& out) {
  const WordSource src = load_source(spec);
  const auto rows = entropy_rate_experiment(src, ms, trials, o.seed, o.compressor);
  std::ostringstream csv;
  write_experiment_csv(csv, rows);
  if (o.out.empty()) {
    out << csv.str();
  } else {
    const fs::path p = out_path(o, "experiment.csv");
    write_file(p, csv.str());
    out << "# wrote " << p.string() << '\n';
  }
  const double h = shannon_entropy(src.probs());
  for (const auto& [m, rate] : mean_rates(rows)) {
    out << "# m=" << m << " mean_bits_per_emission=" << num(rate) << " H=" << num(h) << '\n';
  }
  if (src.kind() == SourceKind::QuantumStates) {
    const auto idx = sample_sentence(src, ms.front(), trial_seed(o.seed, 0));
    const auto q = quantum_message_estimate(src, idx, o.epsilon, basis_by_id(o.basis), o.sk(),
                                            o.code, o.compressor);
    out << "# stateword m=" << ms.front() << " index_bits=" << num(q.index_bits)
        << " dictionary_bits=" << num(q.dictionary_bits) << " total=" << num(q.total)
        << " cap=" << num(q.cap) << " header_bits=" << q.header_bits << '\n';
    for (std::size_t j = 0; j < q.per_state.size(); ++j) {
      out << "# state " << j << " bits=" << num(q.per_state[j].bits)
          << " candidates=" << q.per_state[j].candidate_count << '\n';
    }
  }
  return 0;
}

// ---- embed -----------------------------------------------------------------

int cmd_embed(const std::string& x, const Options& o, std::ostream& out) {
  if (x.empty() || x.find_first_not_of("01") != std::string::npos) {
    throw Error(ErrorKind::Parse, "expected a nonempty string over {0,1}");
  }
  auto [c, s] = embed_classical(x);
  const std::size_t string_bytes = compressed_bits(pack_bits(s), o.compressor) / 8;
  const std::size_t x_bytes = compressed_bits(pack_bit_string(x), o.compressor) / 8;
  out << "# length=" << x.size() << " gates=" << c.size() << " raw_bits=" << s.raw_bits()
      << " compressed_string_bytes=" << string_bytes << " compressed_x_bytes=" << x_bytes
      << " difference_bytes="
      << (string_bytes > x_bytes ? string_bytes - x_bytes : x_bytes - string_bytes) << '\n';
  if (x.size() <= static_cast<std::size_t>(kDefaultMaxQubits)) {
    const StateVector prepared = run(c);
    const bool exact =
        fidelity(prepared, basis_state(static_cast<int>(x.size()), std::stoull(x, nullptr, 2))) >
        1.0 - kTolerance;
    out << "# reproduces=" << (exact ? "yes" : "no") << '\n';
    dump_state(o, prepared);
  }
  out << "# string " << to_text(s, inl_code()) << '\n' << to_text(c);
  return 0;
}

// ---- report ----------------------------------------------------------------

std::vector<std::vector<std::string>> read_csv(const fs::path& p) {
  std::ifstream in(p);
  if (!in) throw Error(ErrorKind::Io, "cannot open '" + p.string() + "'");
  std::vector<std::vector<std::string>> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line[0] != '#') rows.push_back(split(line, ','));
  }
  return rows;
}

void report_estimates(const std::vector<std::vector<std::string>>& rows, std::ostream& os) {
  os << "state_id,N,epsilon,bits,general_bound,fraction_of_general\n";
  for (std::size_t r = 1; r < rows.size(); ++r) {
    const auto& f = rows[r];
    if (f.size() != 9) throw ParseError(r + 1, "estimate row " + std::to_string(r + 1) + " has wrong width");
    const int n = parse_number<int>(f[1], "N");
    const double eps = parse_number<double>(f[2], "epsilon");
    const double bits = parse_number<double>(f[4], "bits");
    const double g = general_bound(n, eps);
    os << f[0] << ',' << n << ',' << num(eps) << ',' << num(bits) << ',' << num(g) << ','
       << num(bits / g, 4) << '\n';
  }
}

void report_experiment(const std::vector<std::vector<std::string>>& rows, std::ostream& os) {
  std::map<std::pair<std::string, std::size_t>, std::pair<double, double>> acc;
  std::map<std::pair<std::string, std::size_t>, std::size_t> count;
  for (std::size_t r = 1; r < rows.size(); ++r) {
    const auto& f = rows[r];
    if (f.size() != 7) throw ParseError(r + 1, "experiment row " + std::to_string(r + 1) + " has wrong width");
    const auto key = std::make_pair(f[5], parse_number<std::size_t>(f[0], "m"));
    acc[key].first += parse_number<double>(f[3], "bits_per_emission");
    acc[key].second = parse_number<double>(f[4], "H");
    ++count[key];
  }
  os << "source_id,m,trials,mean_bits_per_emission,H,relative_gap\n";
  for (const auto& [key, v] : acc) {
    const double mean = v.first / static_cast<double>(count[key]);
    os << key.first << ',' << key.second << ',' << count[key] << ',' << num(mean) << ','
       << num(v.second) << ',' << (v.second > 0.0 ? num((mean - v.second) / v.second, 4) : "n/a")
       << '\n';
  }
}

int cmd_report(std::vector<std::string> inputs, const Options& o, std::ostream& out) {
  if (inputs.empty() && !o.out.empty()) {
    for (const char* name : {"estimates.csv", "experiment.csv"}) {
      if (fs::exists(fs::path(o.out) / name)) inputs.push_back((fs::path(o.out) / name).string());
    }
  }
  if (inputs.empty()) throw Error(ErrorKind::Io, "no CSV inputs to report on");
  std::ostringstream os;
  for (const auto& in : inputs) {
    const auto rows = read_csv(in);
    os << "# " << in << '\n';
    if (rows.empty()) continue;
    if (rows[0].size() == 9 && rows[0][0] == "state_id") {
      report_estimates(rows, os);
    } else if (rows[0].size() == 7 && rows[0][0] == "m") {
      report_experiment(rows, os);
    } else {
      throw Error(ErrorKind::Parse, "'" + in + "' is neither an estimate nor an experiment CSV");
    }
  }
  out << os.str();
  if (!o.out.empty()) {
    const fs::path p = out_path(o, "report.txt");
    write_file(p, os.str());
    out << "# wrote " << p.string() << '\n';
  }
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"qcx: circuit-based complexity estimates for pure states", "qcx"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_config("--config", "", "flat key=value file; flags given on the command line win");

  Options o;
  app.add_option("--basis", o.basis, "gate basis: standard, graph, classical");
  app.add_option("--code", o.code, "string code: one-symbol, two-symbol, inl");
  app.add_option("--epsilon", o.epsilon, "precision");
  app.add_option("--seed", o.seed, "master seed");
  app.add_option("--out", o.out, "output directory");
  app.add_option("--compressor", o.compressor, "deflate-best or zlib-0..zlib-9");
  app.add_option("--sk-l0", o.sk_l0, "net word length");
  app.add_option("--sk-depth", o.sk_depth, "maximum recursion depth");
  app.add_option("--dump-state", o.dump_state, "write the prepared state as a .state file");

  std::string spec, generators = "trivial,classical,graph,separable,generic", kind;
  std::vector<std::string> extra;
  std::vector<std::size_t> ms{1000, 10000, 100000};
  std::size_t trials = 8;

  auto* compile = app.add_subcommand("compile", "compile a state, graph or classical string");
  compile->add_option("spec", spec, "file.state, file.g, classical:BITS or a named family")->required();
  auto* estimate = app.add_subcommand("estimate", "upper-bound a state's complexity");
  estimate->add_option("spec", spec)->required();
  estimate->add_option("--generators", generators, "comma-separated generator ids");
  auto* bounds = app.add_subcommand("bounds", "evaluate a closed-form bound (kind 'list' lists them)");
  bounds->add_option("kind", kind)->required();
  bounds->add_option("params", extra);
  auto* source = app.add_subcommand("source-exp", "entropy-rate experiment on a word source");
  source->add_option("source", spec, "file, bernoulli:P, deterministic or zero-plus:P")->required();
  source->add_option("--m", ms, "sentence lengths")->delimiter(',');
  source->add_option("--trials", trials, "trials per length");
  auto* embed = app.add_subcommand("embed", "embed a classical bit string as a circuit");
  embed->add_option("bits", spec)->required();
  auto* report = app.add_subcommand("report", "summarize estimate and experiment CSVs");
  report->add_option("inputs", extra, "CSV files (default: those under --out)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: usage: " << e.what() << '\n';
    return 2;
  }

  try {
    o.validate();
    if (compile->parsed()) return cmd_compile(spec, o, out);
    if (estimate->parsed()) return cmd_estimate(spec, generators, o, out);
    if (bounds->parsed()) return cmd_bounds(kind, extra, out);
    if (source->parsed()) return cmd_source_exp(spec, ms, trials, o, out);
    if (embed->parsed()) return cmd_embed(spec, o, out);
    return cmd_report(extra, o, out);
  } catch (const ParseError& e) {
    err << "error: " << to_string(e.kind()) << ": " << e.what() << '\n';
  } catch (const Error& e) {
    err << "error: " << to_string(e.kind()) << ": " << e.what() << '\n';
  } catch (const std::exception& e) {
    err << "error: internal: " << e.what() << '\n';
  }
  return 1;
}

}  // namespace qcx::cli
