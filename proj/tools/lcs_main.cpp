// Copyright 2026 The lcs authors
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

#include <atomic>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"
#include "lcs/compile.hpp"
#include "lcs/ft.hpp"

using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;    // I/O or validation problems, failed checks
constexpr int kExitUnsat = 2;    // unsat at the requested length
constexpr int kExitNoModel = 3;  // budget exhausted without a model

lcs::StabilizerCode load_code(const std::string& ref) {
  for (const auto& name : lcs::builtin_code_names())
    if (name == ref) return lcs::builtin_code(name);
  return lcs::read_code_file(ref);
}

lcs::LogicalGate load_target(const std::string& ref, std::size_t k) {
  if (std::filesystem::exists(ref))
    return lcs::LogicalGate::from_symplectic(lcs::read_matrix_file(ref));
  return lcs::LogicalGate::from_spec(ref, k);
}

json report_to_json(const lcs::VerificationReport& report) {
  json j;
  j["is_logical"] = report.is_logical;
  j["sign_correct"] = report.sign_correct;
  j["passed"] = report.passed();
  j["failures"] = report.failures;
  if (report.logical_action) j["logical_action"] = report.logical_action->to_string();
  if (report.gauge) j["gauge"] = report.gauge->f_prime.to_string();
  return j;
}

json fault_report_to_json(const lcs::FaultReport& report) {
  json j;
  j["total_locations"] = report.total_locations;
  j["total_faults"] = report.total_faults;
  j["verdict"] = report.verdict;
  json list = json::array();
  for (const auto& u : report.undetectable) {
    json entry;
    entry["location"] = u.location.describe();
    entry["fault_index"] = u.fault_index;
    entry["residual"] = u.residual.to_string();
    list.push_back(entry);
  }
  j["undetectable"] = list;
  return j;
}

void emit(const json& j, bool pretty) {
  std::cout << (pretty ? j.dump(2) : j.dump()) << "\n";
}

struct CompileArgs {
  std::string code_ref;
  std::string target_ref;
  std::string connectivity;
  std::size_t length = 0;
  bool deepen = false;
  double budget = 60.0;
  std::string circuit_out = "circuit.out";
  std::string gauge_out;
  std::string summary_out;
  std::string emit_cnf;
  std::string emit_wcnf;
  std::string model_in;
  std::string targets_file;
  std::string out_dir = ".";
  unsigned jobs = 1;
  bool pretty = false;
};

// One compilation: solve (or decode an external model), write the circuit
// and gauge artifacts, then re-verify strictly from the files alone.
int run_one_compile(const CompileArgs& args, const lcs::StabilizerCode& code,
                    const std::string& target_ref, const lcs::ConnectivityGraph& con,
                    const std::string& circuit_path, const std::string& gauge_path,
                    json& summary) {
  const lcs::LogicalGate target = load_target(target_ref, code.k);
  const auto t0 = std::chrono::steady_clock::now();

  lcs::CompileOutcome outcome;
  if (!args.model_in.empty()) {
    // External-solver escape hatch: decode standard model lines.
    const auto enc = lcs::reduce_encoding(lcs::build_encoding(code));
    const auto inst = lcs::encode(enc, target.symplectic(), args.length, con);
    std::ifstream in(args.model_in);
    if (!in) throw std::runtime_error("cannot open model file: " + args.model_in);
    const auto model = lcs::sat::parse_model_lines(in, inst.cnf.num_vars);
    if (!model) {
      summary["status"] = "no-model-in-file";
      return kExitNoModel;
    }
    if (!lcs::satisfies(inst, *model))
      throw std::runtime_error("model does not satisfy the instance");
    auto decoded = lcs::decode_model(inst, *model);
    lcs::CompileResult result;
    result.circuit = std::move(decoded.circuit);
    result.gauge = std::move(decoded.gauge);
    result.cz_count = result.circuit.cz_count();
    result.status = lcs::SolveStatus::Feasible;
    lcs::fix_pauli_frame(result.circuit, code, target);
    result.report = lcs::implements_target(result.circuit, code, target, true);
    outcome.status = lcs::SolveStatus::Feasible;
    outcome.length = args.length;
    outcome.result = std::move(result);
  } else if (args.deepen) {
    outcome = lcs::compile_deepening(code, target, args.length, con,
                                     lcs::Budget{args.budget});
  } else {
    outcome = lcs::compile(code, target, args.length, con, lcs::Budget{args.budget});
  }

  const double wall =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  summary["target"] = target_ref;
  summary["status"] = lcs::to_string(outcome.status);
  summary["wall_time"] = wall;
  summary["length"] = outcome.length;
  if (!outcome.found())
    return outcome.status == lcs::SolveStatus::Unsat ? kExitUnsat : kExitNoModel;

  const lcs::CompileResult& result = *outcome.result;
  summary["cz_count"] = result.cz_count;
  lcs::write_circuit_file(circuit_path, lcs::flatten(result.circuit));
  lcs::write_matrix_file(gauge_path, result.gauge.f_prime);
  summary["circuit_file"] = circuit_path;
  summary["gauge_file"] = gauge_path;

  // No in-memory trust: the exit code reflects the re-read artifacts.
  const lcs::GateSequence reread = lcs::read_circuit_file(circuit_path, code.n);
  const auto report = lcs::implements_target(reread, code, target, /*strict=*/true);
  summary["verified"] = report.passed();
  if (!report.passed()) {
    summary["failures"] = report.failures;
    return kExitError;
  }
  return kExitOk;
}

int cmd_compile(const CompileArgs& args) {
  const lcs::StabilizerCode code = load_code(args.code_ref);
  const auto diagnostics = lcs::validate(code);
  if (!diagnostics.ok) {
    json j;
    j["error"] = "invalid code";
    j["problems"] = diagnostics.problems;
    emit(j, args.pretty);
    return kExitError;
  }
  const lcs::ConnectivityGraph con = lcs::parse_connectivity(
      args.connectivity.empty() ? "complete:" + std::to_string(code.n)
                                : args.connectivity);
  if (con.n != code.n) {
    emit({{"error", "connectivity size differs from the code size"}}, args.pretty);
    return kExitError;
  }

  if (!args.emit_cnf.empty() || !args.emit_wcnf.empty()) {
    const auto enc = lcs::reduce_encoding(lcs::build_encoding(code));
    const lcs::LogicalGate target = load_target(args.target_ref, code.k);
    const auto inst = lcs::encode(enc, target.symplectic(), args.length, con);
    if (!args.emit_cnf.empty()) {
      std::ofstream out(args.emit_cnf);
      lcs::sat::write_dimacs(out, inst.cnf);
    }
    if (!args.emit_wcnf.empty()) {
      std::ofstream out(args.emit_wcnf);
      lcs::sat::write_wcnf(out, inst.cnf, inst.cost_lits);
    }
  }

  if (args.targets_file.empty()) {
    json summary;
    const int rc = run_one_compile(
        args, code, args.target_ref, con, args.circuit_out,
        args.gauge_out.empty() ? args.circuit_out + ".gauge" : args.gauge_out, summary);
    if (!args.summary_out.empty())
      std::ofstream(args.summary_out) << summary.dump(2) << "\n";
    emit(summary, args.pretty);
    return rc;
  }

  // Sweep mode: one target spec per line, a worker pool of --jobs threads.
  std::ifstream list(args.targets_file);
  if (!list) {
    emit({{"error", "cannot open targets file"}}, args.pretty);
    return kExitError;
  }
  std::vector<std::string> targets;
  std::string line;
  while (std::getline(list, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const auto begin = line.find_first_not_of(" \t");
    if (begin == std::string::npos) continue;
    targets.push_back(line.substr(begin, line.find_last_not_of(" \t") - begin + 1));
  }
  std::filesystem::create_directories(args.out_dir);
  std::vector<json> summaries(targets.size());
  std::vector<int> codes(targets.size(), kExitOk);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    while (true) {
      const std::size_t i = next.fetch_add(1);
      if (i >= targets.size()) return;
      const std::string stem = args.out_dir + "/target-" + std::to_string(i);
      try {
        codes[i] = run_one_compile(args, code, targets[i], con, stem + ".circuit",
                                   stem + ".gauge", summaries[i]);
      } catch (const std::exception& e) {
        summaries[i]["target"] = targets[i];
        summaries[i]["error"] = e.what();
        codes[i] = kExitError;
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < std::max(1u, args.jobs); ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  json all = json::array();
  for (auto& s : summaries) all.push_back(std::move(s));
  if (!args.summary_out.empty())
    std::ofstream(args.summary_out) << all.dump(2) << "\n";
  emit(all, args.pretty);
  int worst = kExitOk;
  for (int c : codes) worst = std::max(worst, c);
  return worst;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hardware-tailored logical Clifford circuit compiler"};
  app.require_subcommand(1);

  CompileArgs cargs;
  auto* compile = app.add_subcommand("compile", "synthesize a logical gate circuit");
  compile->add_option("--code", cargs.code_ref, "builtin code name or *.code.json file")
      ->required();
  compile->add_option("--target", cargs.target_ref,
                      "gate spec like H@1 or CX@2,1 (';'-separated), or a 2k x 2k matrix file");
  compile->add_option("--connectivity", cargs.connectivity,
                      "preset (star:N line:N ring:N grid:RxC cube8 complete:N) or edge-list file");
  compile->add_option("-l,--length", cargs.length, "ansatz length (number of CZ layers)");
  compile->add_flag("--deepen", cargs.deepen, "try lengths 0..L and keep the cheapest");
  compile->add_option("--budget", cargs.budget, "solver budget in seconds per length");
  compile->add_option("-o,--circuit-out", cargs.circuit_out, "output circuit file");
  compile->add_option("--gauge-out", cargs.gauge_out, "output gauge matrix file");
  compile->add_option("--summary-out", cargs.summary_out, "also write the JSON summary here");
  compile->add_option("--emit-cnf", cargs.emit_cnf, "export the instance as DIMACS CNF");
  compile->add_option("--emit-wcnf", cargs.emit_wcnf, "export as weighted CNF (soft CZ literals)");
  compile->add_option("--model", cargs.model_in,
                      "decode an external solver's model lines instead of solving");
  compile->add_option("--targets-file", cargs.targets_file, "sweep: one target spec per line");
  compile->add_option("--out-dir", cargs.out_dir, "sweep: output directory");
  compile->add_option("--jobs", cargs.jobs, "sweep: parallel compilations");
  compile->add_flag("--pretty", cargs.pretty, "indent JSON output");

  std::string v_code, v_circuit, v_target;
  bool v_strict = false, v_pretty = false;
  auto* verify = app.add_subcommand("verify", "check a circuit against a logical target");
  verify->add_option("--code", v_code)->required();
  verify->add_option("--circuit", v_circuit)->required();
  verify->add_option("--target", v_target)->required();
  verify->add_flag("--strict", v_strict, "demand exact stabilizer and logical signs");
  verify->add_flag("--pretty", v_pretty);

  std::size_t g_n = 0, g_k = 0;
  bool g_factored = false;
  auto* gauge = app.add_subcommand("gauge-count", "size of the freedom gauge group");
  gauge->add_option("n", g_n)->required();
  gauge->add_option("k", g_k)->required();
  gauge->add_flag("--factored", g_factored, "print the three-factor decomposition");

  std::string f_code, f_circuit;
  bool f_pretty = false;
  auto* ftcheck = app.add_subcommand("ft-check", "exhaustive single-fault enumeration");
  ftcheck->add_option("--code", f_code)->required();
  ftcheck->add_option("--circuit", f_circuit)->required();
  ftcheck->add_flag("--pretty", f_pretty);

  std::string ff_code, ff_circuit, ff_out = "gadget.out";
  bool ff_single = false, ff_pretty = false, ff_inward = false;
  auto* ftflag = app.add_subcommand("ft-flag", "find guards and build a flag gadget");
  ftflag->add_option("--code", ff_code)->required();
  ftflag->add_option("--circuit", ff_circuit)->required();
  ftflag->add_option("-o,--gadget-out", ff_out, "output gadget circuit file");
  ftflag->add_flag("--single-flag", ff_single, "reject gadgets that need the hook flag");
  ftflag->add_flag("--inward", ff_inward, "also try sandwiching just the dangerous window");
  ftflag->add_flag("--pretty", ff_pretty);

  std::string b_unitary, b_conn, b_out = "circuit.out";
  auto* baseline = app.add_subcommand("baseline", "swap-routed generator decomposition");
  baseline->add_option("--unitary", b_unitary, "2n x 2n symplectic matrix file")->required();
  baseline->add_option("--connectivity", b_conn)->required();
  baseline->add_option("-o,--circuit-out", b_out);

  bool l_pretty = false;
  auto* list = app.add_subcommand("list-codes", "print the builtin code library");
  list->add_flag("--pretty", l_pretty);

  CLI11_PARSE(app, argc, argv);

  try {
    if (compile->parsed()) {
      if (cargs.target_ref.empty() && cargs.targets_file.empty())
        throw std::runtime_error("compile needs --target or --targets-file");
      return cmd_compile(cargs);
    }

    if (verify->parsed()) {
      const lcs::StabilizerCode code = load_code(v_code);
      const auto seq = lcs::read_circuit_file(v_circuit, code.n);
      const auto target = load_target(v_target, code.k);
      const auto report = lcs::implements_target(seq, code, target, v_strict);
      emit(report_to_json(report), v_pretty);
      return report.passed() ? kExitOk : kExitError;
    }

    if (gauge->parsed()) {
      if (g_factored) {
        const auto f = lcs::freedom_count_factored(g_n, g_k);
        std::cout << f[0] << " " << f[1] << " " << f[2] << "\n";
      } else {
        std::cout << lcs::freedom_count(g_n, g_k) << "\n";
      }
      return kExitOk;
    }

    if (ftcheck->parsed()) {
      const lcs::StabilizerCode code = load_code(f_code);
      const auto seq = lcs::read_circuit_file(f_circuit, code.n);
      lcs::GadgetCircuit gadget;
      gadget.data_qubits = code.n;
      gadget.flag_qubits = seq.n > code.n ? seq.n - code.n : 0;
      gadget.ops = seq;
      gadget.ops.n = code.n + gadget.flag_qubits;
      const auto report = lcs::check_fault_tolerance(gadget, code);
      emit(fault_report_to_json(report), f_pretty);
      return report.verdict ? kExitOk : kExitError;
    }

    if (ftflag->parsed()) {
      const lcs::StabilizerCode code = load_code(ff_code);
      const auto seq = lcs::read_circuit_file(ff_circuit, code.n);
      lcs::GuardSearchOptions options;
      options.propagate_inward = ff_inward;
      if (ff_single) options.max_order_retries = 16;
      auto result = lcs::find_guards(seq, code, options);
      if (ff_single && result.gadget.flag_qubits > result.guards.size())
        throw std::runtime_error("single-flag mode failed: a hook flag is required");
      lcs::write_circuit_file(ff_out, result.gadget.ops);
      json j = fault_report_to_json(result.report);
      j["gadget_file"] = ff_out;
      j["flag_qubits"] = result.gadget.flag_qubits;
      json guards = json::array();
      for (const auto& g : result.guards) guards.push_back(g.to_string());
      j["guards"] = guards;
      emit(j, ff_pretty);
      return result.report.verdict ? kExitOk : kExitError;
    }

    if (baseline->parsed()) {
      const auto mat = lcs::read_matrix_file(b_unitary);
      const lcs::SymplecticMap unitary{lcs::BitMatrix(mat)};
      const auto con = lcs::parse_connectivity(b_conn);
      const auto circuit = lcs::baseline_compile(unitary, con);
      lcs::write_circuit_file(b_out, lcs::flatten(circuit));
      json j;
      j["circuit_file"] = b_out;
      j["cz_count"] = circuit.cz_count();
      j["length"] = circuit.length();
      emit(j, false);
      return kExitOk;
    }

    if (list->parsed()) {
      if (l_pretty) {
        for (const auto& name : lcs::builtin_code_names()) {
          const auto code = lcs::builtin_code(name);
          std::cout << name << "  [[" << code.n << "," << code.k << "]]\n";
        }
      } else {
        std::cout << json(lcs::builtin_code_names()).dump() << "\n";
      }
      return kExitOk;
    }
  } catch (const std::exception& e) {
    json j;
    j["error"] = e.what();
    std::cout << j.dump() << "\n";
    return kExitError;
  }
  return kExitError;
}
