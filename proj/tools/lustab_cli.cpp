// Copyright 2026 The lustab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// lustab: analyze local-unitary stabilizers of qubit states.
//
// Exit status: 0 success, 1 a checked property failed, 2 bad input or flags.

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "lustab/lustab.hpp"

namespace {

using namespace lustab;

constexpr int kExitOk = 0;
constexpr int kExitPropertyFailure = 1;
constexpr int kExitInputError = 2;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string input;
  std::string state;
  int n = 0;
  std::string alpha = "1";
  std::string beta = "1";
  std::string bits;
  std::string mode = "auto";
  double tol = kDefaultRankTol;
  std::uint64_t seed = 1;
  int trials = -1;
  int n_max = 7;
  bool json = false;
  bool haar_only = false;
  std::string out;
};

std::string join(const std::vector<int>& v, const char* sep = ",") {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + std::to_string(v[i]);
  return s;
}

std::string sets(const std::vector<std::vector<int>>& parts) {
  if (parts.empty()) return "none";
  std::string s;
  for (const auto& p : parts) s += (s.empty() ? "{" : " {") + join(p) + "}";
  return s;
}

PureState load_state(const Options& o) {
  if (o.input.empty() == o.state.empty()) throw InputError("exactly one of --input and --state is required");
  if (!o.input.empty()) return read_state_file(o.input);
  NamedParams p;
  p.n = o.n;
  p.alpha = parse_rational(o.alpha);
  p.beta = parse_rational(o.beta);
  p.bits = o.bits;
  p.seed = o.seed;
  return make_named(o.state, p);
}

std::string label_of(const Options& o) {
  if (!o.input.empty()) return o.input;
  return o.n > 0 ? o.state + "(" + std::to_string(o.n) + ")" : o.state;
}

void emit(const Options& o, const std::string& text) {
  if (o.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(o.out);
  if (!f) throw InputError("cannot write '" + o.out + "'");
  f << text;
}

std::string format_basis_row(const StabilizerReport& r, std::size_t i) {
  std::string s = "[";
  if (r.mode == Mode::Exact) {
    for (std::size_t k = 0; k < r.exact_kernel_basis[i].size(); ++k)
      s += (k ? " " : "") + to_string(r.exact_kernel_basis[i][k]);
  } else {
    char buf[32];
    for (std::size_t k = 0; k < r.kernel_basis[i].size(); ++k) {
      std::snprintf(buf, sizeof buf, "%s%.6g", k ? " " : "", r.kernel_basis[i][k]);
      s += buf;
    }
  }
  return s + "]";
}

std::string text_report(const std::string& label, const StabilizerReport& r) {
  std::ostringstream os;
  const Classification& c = r.classification;
  os << "state            " << label << " (n=" << r.n << ", " << to_string(r.mode) << " mode)\n";
  os << "kernel_dim       " << r.kernel_dim() << "\n";
  os << "orbit_dim        " << r.orbit_dim() << "\n";
  os << "su(2) blocks     " << sets(r.blocks.blocks) << "  (p=" << r.blocks.p << ")\n";
  os << "residual_dim     " << r.blocks.residual_dim << "\n";
  os << "projection dims  " << join(r.blocks.per_qubit_projection_dims, " ") << "\n";
  os << "closure residual " << r.closure_residual << "\n";
  for (const auto& w : r.warnings) os << "WARNING          " << w << "\n";
  os << "kernel basis     (coordinates iI, A1 B1 C1, A2 B2 C2, ...)\n";
  for (std::size_t i = 0; i < r.kernel_dim(); ++i) os << "  " << format_basis_row(r, i) << "\n";
  os << "factors          " << sets(c.parts) << (c.is_product ? "  product" : "  nonproduct") << "\n";
  std::vector<std::vector<int>> pairs;
  for (auto [a, b] : c.singlet_pairs) pairs.push_back({a, b});
  os << "singlet pairs    " << sets(pairs) << "\n";
  os << "bound            " << bound_name(c.bound) << " = " << c.bound_value
     << (c.saturated ? "  saturated" : "  not saturated") << "\n";
  os << "checks           " << (r.checks.all() ? "all pass" : "FAILED") << "\n";
  return os.str();
}

int run_analyze(const Options& o) {
  const PureState psi = load_state(o);
  AnalysisOptions opts;
  opts.mode = mode_request_from_string(o.mode);
  opts.tol = o.tol;
  const StabilizerReport r = stabilizer_report(psi, opts);
  emit(o, o.json ? to_json(r).dump(2) + "\n" : text_report(label_of(o), r));
  return r.checks.all() ? kExitOk : kExitPropertyFailure;
}

int run_catalog(const Options& o) {
  const auto cat = catalog();
  if (o.json) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& e : cat) {
      nlohmann::json j = {{"label", e.label}, {"name", e.name}, {"n", e.make().num_qubits()},
                          {"provenance", e.provenance}};
      j["expected_kernel_dim"] = e.expected_kernel_dim ? nlohmann::json(*e.expected_kernel_dim) : nlohmann::json();
      j["expected_blocks"] = e.expected_blocks ? nlohmann::json(*e.expected_blocks) : nlohmann::json();
      arr.push_back(std::move(j));
    }
    emit(o, arr.dump(2) + "\n");
    return kExitOk;
  }
  std::ostringstream os;
  char buf[256];
  std::snprintf(buf, sizeof buf, "%-20s %3s %8s %-10s %s\n", "label", "n", "dim", "blocks", "provenance");
  os << buf;
  for (const auto& e : cat) {
    const std::string dim = e.expected_kernel_dim ? std::to_string(*e.expected_kernel_dim) : "-";
    const std::string blocks = e.expected_blocks ? "[" + join(*e.expected_blocks) + "]" : "-";
    std::snprintf(buf, sizeof buf, "%-20s %3d %8s %-10s %s\n", e.label.c_str(), e.make().num_qubits(), dim.c_str(),
                  blocks.c_str(), e.provenance.c_str());
    os << buf;
  }
  emit(o, os.str());
  return kExitOk;
}

int run_table(const Options& o) {
  TableConfig cfg;
  cfg.n_max = o.n_max;
  cfg.mode = mode_request_from_string(o.mode);
  cfg.tol = o.tol;
  cfg.seed = o.seed;
  if (o.trials > 0) cfg.generic_samples = o.trials;
  const auto rows = reproduce_table(cfg);
  bool all = true;
  for (const auto& r : rows) all = all && r.matches();
  if (o.json) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : rows)
      arr.push_back({{"row", r.row}, {"n", r.n}, {"expected", r.expected}, {"computed", r.computed},
                     {"unstable", r.unstable}, {"match", r.matches()}});
    emit(o, nlohmann::json{{"rows", arr}, {"all_match", all}}.dump(2) + "\n");
  } else {
    std::ostringstream os;
    char buf[256];
    std::snprintf(buf, sizeof buf, "%-30s %3s %8s  %-20s %s\n", "row", "n", "expected", "computed", "match");
    os << buf;
    for (const auto& r : rows) {
      std::string got;
      const bool uniform = std::adjacent_find(r.computed.begin(), r.computed.end(), std::not_equal_to<>()) ==
                           r.computed.end();
      if (uniform && !r.computed.empty())
        got = std::to_string(r.computed.front()) + " x" + std::to_string(r.computed.size());
      else
        for (auto d : r.computed) got += (got.empty() ? "" : ",") + std::to_string(d);
      if (r.unstable) got += " (unstable)";
      std::snprintf(buf, sizeof buf, "%-30s %3d %8zu  %-20s %s\n", r.row.c_str(), r.n, r.expected, got.c_str(),
                    r.matches() ? "yes" : "NO");
      os << buf;
    }
    os << (all ? "all rows match\n" : "MISMATCH\n");
    emit(o, os.str());
  }
  return all ? kExitOk : kExitPropertyFailure;
}

int run_verify(const Options& o) {
  VerifyConfig cfg;
  cfg.seed = o.seed;
  cfg.n_max = o.n_max;
  if (o.trials >= 0) cfg.lu_trials = o.trials;
  const SuiteReport s = verify_suite(cfg);
  if (o.json) {
    emit(o, to_json(s).dump(2) + "\n");
  } else {
    std::ostringstream os;
    char buf[256];
    for (const auto& p : s.properties) {
      std::snprintf(buf, sizeof buf, "%-28s %6d trials %4d failures  %s\n", p.name.c_str(), p.trials, p.failures,
                    p.failures ? "FAIL" : "ok");
      os << buf;
      for (const auto& c : p.counterexamples) os << "    counterexample: " << c.dump() << "\n";
    }
    os << (s.passed() ? "all properties pass\n" : "PROPERTY FAILURES\n");
    emit(o, os.str());
  }
  return s.passed() ? kExitOk : kExitPropertyFailure;
}

int run_scan(const Options& o) {
  const ScanResult r = scan_nonproduct_max(o.n, o.trials < 0 ? 100 : o.trials, o.seed, o.haar_only);
  if (o.json) {
    emit(o, to_json(r).dump(2) + "\n");
    return kExitOk;
  }
  std::ostringstream os;
  os << "nonproduct states with kernel_dim = n-1 = " << r.n - 1 << " (n=" << r.n << ", seed " << r.seed << ")\n";
  char buf[256];
  for (const auto& f : r.families) {
    std::snprintf(buf, sizeof buf, "  %-20s %5d samples %5d nonproduct %5d hits\n", f.family.c_str(), f.samples,
                  f.nonproduct, f.hits);
    os << buf;
  }
  std::map<std::string, std::map<std::string, int>> shapes;
  for (const auto& h : r.hits) ++shapes[h.family][sets(h.blocks)];
  for (const auto& [fam, m] : shapes)
    for (const auto& [blocks, count] : m) os << "  hit " << fam << ": blocks " << blocks << " x" << count << "\n";
  emit(o, os.str());
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Local-unitary stabilizer subalgebras of multiqubit pure states"};
  app.require_subcommand(1);
  Options o;

  auto add_state = [&](CLI::App* s) {
    s->add_option("--input", o.input, "State file: ket expression or state JSON");
    s->add_option("--state", o.state, "Catalog state name");
    s->add_option("--n", o.n, "Qubit count for named states")->check(CLI::Range(1, kDefaultMaxQubits));
    s->add_option("--alpha", o.alpha, "GHZ coefficient of |0...0> (P/Q)");
    s->add_option("--beta", o.beta, "GHZ coefficient of |1...1> (P/Q)");
    s->add_option("--bits", o.bits, "Digits of a basis state");
  };
  auto add_common = [&](CLI::App* s) {
    s->add_option("--mode", o.mode, "exact, float or auto")->check(CLI::IsMember({"exact", "float", "auto"}));
    s->add_option("--tol", o.tol, "Relative rank threshold")->check(CLI::Range(1e-13, 1e-4));
    s->add_option("--seed", o.seed, "Base random seed");
    s->add_flag("--json", o.json, "Emit JSON");
    s->add_option("--out", o.out, "Write the report to FILE");
  };

  auto* analyze = app.add_subcommand("analyze", "Stabilizer report and classification of one state");
  add_state(analyze);
  add_common(analyze);
  auto* cat = app.add_subcommand("catalog", "List named states and their reference values");
  add_common(cat);
  auto* table = app.add_subcommand("table", "Recompute the stabilizer-dimension table");
  add_common(table);
  table->add_option("--n-max", o.n_max, "Largest n")->check(CLI::Range(1, kDefaultMaxQubits));
  table->add_option("--trials", o.trials, "Haar samples per generic row");
  auto* verify = app.add_subcommand("verify", "Run the structure and bound property suite");
  add_common(verify);
  verify->add_option("--n-max", o.n_max, "Largest n")->check(CLI::Range(2, 10));
  verify->add_option("--trials", o.trials, "Local-unitary transforms per catalog state");
  auto* scan = app.add_subcommand("scan", "Search for nonproduct states with kernel_dim n-1");
  add_common(scan);
  scan->add_option("--n", o.n, "Qubit count")->required()->check(CLI::Range(3, 8));
  scan->add_option("--trials", o.trials, "Samples per family");
  scan->add_flag("--haar-only", o.haar_only, "Sample Haar states only");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInputError;
  }

  try {
    if (*analyze) return run_analyze(o);
    if (*cat) return run_catalog(o);
    if (*table) return run_table(o);
    if (*verify) return run_verify(o);
    if (*scan) return run_scan(o);
  } catch (const StructureViolation& e) {
    std::cerr << "structure violation: " << e.what() << "\n";
    return kExitPropertyFailure;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}
