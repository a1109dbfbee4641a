// Command line front end: degree-sequence checks, Nash-Williams sequence
// generation, exhaustive forcible-hamiltonicity verification, counting, and
// witness-graph output.
//
// Exit codes: 0 ok / FORCIBLY_HAMILTONIAN, 1 usage or parameter error,
// 2 NOT_GRAPHICAL, 3 NOT_FORCIBLY_HAMILTONIAN, 4 INCONCLUSIVE.

#include <charconv>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hamseq/hamseq.hpp"
#include "hamseq/json_io.hpp"

namespace {

using nlohmann::json;

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string token;
  while (std::getline(ss, token, ',')) {
    const auto first = token.find_first_not_of(" \t");
    if (first == std::string::npos) throw hamseq::ParseError("empty entry in integer list");
    const auto last = token.find_last_not_of(" \t");
    int value = 0;
    const char* begin = token.data() + first;
    const char* end = token.data() + last + 1;
    const auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc{} || ptr != end)
      throw hamseq::ParseError("not an integer: '" + token + "'");
    out.push_back(value);
  }
  if (out.empty()) throw hamseq::ParseError("expected a comma-separated integer list");
  return out;
}

void emit(const std::string& text, const std::string& output_path) {
  if (output_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream file(output_path);
  if (!file) throw hamseq::Error("cannot open output file: " + output_path);
  file << text;
}

int verdict_exit_code(hamseq::Verdict v) {
  switch (v) {
    case hamseq::Verdict::kForciblyHamiltonian: return 0;
    case hamseq::Verdict::kNotGraphical: return 2;
    case hamseq::Verdict::kNotForciblyHamiltonian: return 3;
    case hamseq::Verdict::kInconclusive: return 4;
  }
  return 4;
}

std::string csv_quote(const std::string& value) {
  if (value.find(',') == std::string::npos && value.find('"') == std::string::npos) return value;
  std::string quoted = "\"";
  for (char c : value) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  quoted += '"';
  return quoted;
}

std::string opt_to_string(const std::optional<int>& v) {
  return v.has_value() ? std::to_string(*v) : std::string("-");
}

std::string counterexample_compact(const hamseq::SimpleGraph& g) {
  std::string out;
  for (const auto& [u, v] : g.edges()) {
    if (!out.empty()) out += ';';
    out += std::to_string(u) + "-" + std::to_string(v);
  }
  return out;
}

std::string report_text(const hamseq::VerificationReport& r) {
  std::ostringstream out;
  out << "sequence: " << r.sequence.to_string() << '\n';
  out << "graphical: " << (r.graphical ? "true" : "false") << '\n';
  out << "chvatal_satisfied: " << (r.chvatal.satisfied ? "true" : "false") << '\n';
  out << "chvatal_failing_k: " << opt_to_string(r.chvatal.failing_k) << '\n';
  out << "nw_shape_k: " << opt_to_string(r.nw_shape_k) << '\n';
  out << "exception: " << (r.exception ? "true" : "false") << '\n';
  out << "verdict: " << hamseq::to_string(r.verdict) << '\n';
  out << "realizations_checked: " << r.realizations_checked << '\n';
  out << "closure_accepts: " << r.closure_accepts << '\n';
  if (r.counterexample.has_value()) {
    out << "counterexample:\n" << hamseq::to_edge_list(*r.counterexample);
  }
  return out.str();
}

std::string report_csv(const hamseq::VerificationReport& r) {
  std::ostringstream out;
  out << "key,value\n";
  out << "sequence," << csv_quote(r.sequence.to_string()) << '\n';
  out << "graphical," << (r.graphical ? "true" : "false") << '\n';
  out << "chvatal_satisfied," << (r.chvatal.satisfied ? "true" : "false") << '\n';
  out << "chvatal_failing_k," << opt_to_string(r.chvatal.failing_k) << '\n';
  out << "nw_shape_k," << opt_to_string(r.nw_shape_k) << '\n';
  out << "exception," << (r.exception ? "true" : "false") << '\n';
  out << "verdict," << hamseq::to_string(r.verdict) << '\n';
  out << "realizations_checked," << r.realizations_checked << '\n';
  out << "closure_accepts," << r.closure_accepts << '\n';
  out << "counterexample,"
      << (r.counterexample.has_value() ? csv_quote(counterexample_compact(*r.counterexample))
                                       : std::string("-"))
      << '\n';
  return out.str();
}

std::string render_report(const hamseq::VerificationReport& r, const std::string& format) {
  if (format == "json") return hamseq::report_to_json(r).dump(2) + "\n";
  if (format == "csv") return report_csv(r);
  return report_text(r);
}

struct CommonOpts {
  std::string format = "text";
  std::string output;
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
  cmd->add_option("--format", opts.format, "Output format")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  cmd->add_option("--output", opts.output, "Write output to a file instead of stdout");
}

int run_check(const std::string& sequence_text, const CommonOpts& opts) {
  const hamseq::DegreeSequence pi = hamseq::normalize(parse_int_list(sequence_text));
  const hamseq::VerificationReport report = hamseq::classify(pi);
  emit(render_report(report, opts.format), opts.output);
  return verdict_exit_code(report.verdict);
}

int run_verify(const std::string& sequence_text, int jobs, std::optional<std::uint64_t> budget,
               const CommonOpts& opts) {
  const hamseq::DegreeSequence pi = hamseq::normalize(parse_int_list(sequence_text));
  hamseq::VerifyOptions vopts;
  vopts.jobs = jobs;
  vopts.budget = budget;
  const hamseq::VerificationReport report = hamseq::verify_forcibly_hamiltonian(pi, vopts);
  emit(render_report(report, opts.format), opts.output);
  return verdict_exit_code(report.verdict);
}

int run_generate(int n, int k, bool all, const std::string& pi_prime_text,
                 const CommonOpts& opts) {
  const hamseq::NwParams params(n, k);
  std::vector<hamseq::DegreeSequence> sequences;
  if (all) {
    sequences = hamseq::enumerate_nw_sequences(params);
  } else {
    const hamseq::PiPrime modifier(parse_int_list(pi_prime_text));
    sequences.push_back(hamseq::nw_construct(params, modifier));
  }
  std::string text;
  if (opts.format == "json") {
    json out;
    out["n"] = n;
    out["k"] = k;
    json list = json::array();
    for (const auto& s : sequences) list.push_back(s.values());
    out["sequences"] = std::move(list);
    text = out.dump(2) + "\n";
  } else {
    // text and csv both print one sequence per line
    std::ostringstream out;
    for (const auto& s : sequences) out << s.to_string() << '\n';
    text = out.str();
  }
  emit(text, opts.output);
  return 0;
}

int run_count(int n, std::optional<int> only_k, const CommonOpts& opts) {
  if (n < 5) throw hamseq::InvalidParams("require n >= 5");
  struct Row {
    int k;
    std::uint64_t count;
    hamseq::Rational bound;
  };
  std::vector<Row> rows;
  std::uint64_t total = 0;
  if (only_k.has_value()) {
    const hamseq::NwParams params(n, *only_k);
    const auto sequences = hamseq::enumerate_nw_sequences(params);
    rows.push_back({*only_k, sequences.size(), hamseq::count_lower_bound(*only_k)});
  } else {
    for (int k = 2; 2 * k <= n - 1; ++k) {
      const auto sequences = hamseq::enumerate_nw_sequences(hamseq::NwParams(n, k));
      rows.push_back({k, sequences.size(), hamseq::count_lower_bound(k)});
      total += sequences.size();
    }
  }
  std::string text;
  if (opts.format == "json") {
    json out;
    out["n"] = n;
    json list = json::array();
    for (const Row& row : rows)
      list.push_back({{"k", row.k}, {"count", row.count}, {"bound", row.bound.to_string()}});
    out["per_k"] = std::move(list);
    if (!only_k.has_value()) {
      out["total"] = total;
      out["total_bound"] = hamseq::count_total_lower_bound(n).to_string();
    }
    text = out.dump(2) + "\n";
  } else if (opts.format == "csv") {
    std::ostringstream out;
    out << "k,count,bound\n";
    for (const Row& row : rows)
      out << row.k << ',' << row.count << ',' << row.bound.to_string() << '\n';
    if (!only_k.has_value())
      out << "total," << total << ',' << hamseq::count_total_lower_bound(n).to_string() << '\n';
    text = out.str();
  } else {
    std::ostringstream out;
    for (const Row& row : rows)
      out << "k=" << row.k << " count=" << row.count << " bound=" << row.bound.to_string()
          << '\n';
    if (!only_k.has_value())
      out << "total=" << total << " bound=" << hamseq::count_total_lower_bound(n).to_string()
          << '\n';
    text = out.str();
  }
  emit(text, opts.output);
  return 0;
}

int run_witness(int n, int k, const std::string& which, const CommonOpts& opts) {
  const hamseq::SimpleGraph g =
      which == "cnk" ? hamseq::build_cnk(n, k) : hamseq::build_exception_graph(n, k, 1);
  if (opts.format == "json")
    emit(hamseq::graph_to_json(g).dump(2) + "\n", opts.output);
  else
    emit(hamseq::to_edge_list(g), opts.output);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Degree-sequence forcible-hamiltonicity toolkit"};
  app.require_subcommand(1);

  std::string sequence_text;
  int n = 0;
  int k = 0;
  bool all = false;
  std::string pi_prime_text;
  std::string which = "cnk";
  int jobs = 1;
  std::optional<std::uint64_t> budget;
  std::optional<int> only_k;
  CommonOpts check_opts, generate_opts, verify_opts, count_opts, witness_opts;

  CLI::App* check = app.add_subcommand("check", "Theory-only sequence classification");
  check->add_option("sequence", sequence_text, "Comma-separated degree sequence")->required();
  add_common(check, check_opts);

  CLI::App* generate = app.add_subcommand("generate", "Construct Nash-Williams (n,k)-sequences");
  generate->add_option("--n", n, "Vertex count")->required();
  generate->add_option("--k", k, "Parameter k")->required();
  generate->add_flag("--all", all, "Emit every sequence for (n, k)");
  generate->add_option("--pi-prime", pi_prime_text, "Single modifier, comma-separated");
  add_common(generate, generate_opts);

  CLI::App* verify = app.add_subcommand("verify", "Exhaustive forcible-hamiltonicity check");
  verify->add_option("sequence", sequence_text, "Comma-separated degree sequence")->required();
  verify->add_option("--jobs", jobs, "Worker count")->check(CLI::PositiveNumber);
  verify->add_option("--budget", budget, "Cap on checked realizations");
  add_common(verify, verify_opts);

  CLI::App* count = app.add_subcommand("count", "Count sequences against the lower bounds");
  count->add_option("--n", n, "Vertex count")->required();
  count->add_option("--k", only_k, "Restrict to a single k");
  add_common(count, count_opts);

  CLI::App* witness = app.add_subcommand("witness", "Emit a nonhamiltonian witness graph");
  witness->add_option("--n", n, "Vertex count")->required();
  witness->add_option("--k", k, "Parameter k")->required();
  witness->add_option("--which", which, "Witness family")
      ->check(CLI::IsMember({"cnk", "exception"}));
  add_common(witness, witness_opts);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (check->parsed()) return run_check(sequence_text, check_opts);
    if (generate->parsed()) {
      if (all != pi_prime_text.empty())  // exactly one of --all / --pi-prime
        throw hamseq::InvalidParams("pass exactly one of --all or --pi-prime");
      return run_generate(n, k, all, pi_prime_text, generate_opts);
    }
    if (verify->parsed()) return run_verify(sequence_text, jobs, budget, verify_opts);
    if (count->parsed()) return run_count(n, only_k, count_opts);
    if (witness->parsed()) return run_witness(n, k, which, witness_opts);
  } catch (const hamseq::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}
