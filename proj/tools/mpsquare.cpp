// Command-line surface for the bipartite cube model: scenario runs, the
// order-dependence demo, exhaustive verification sweeps, per-state square
// products, the witness sweep and the quantum operator cross-check. All
// machine output is JSON on stdout; logs go to stderr.
//
// Exit codes: 0 success / all checks pass, 1 verification failure or internal
// contract violation, 2 usage or parse error.

#include <algorithm>
#include <chrono>
#include <iostream>
#include <optional>
#include <random>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "mps/io.hpp"
#include "mps/quantum.hpp"

using nlohmann::ordered_json;
using namespace mps;

namespace {

int g_indent = 2;

void emit(const ordered_json& doc) {
  if (g_indent < 0)
    std::cout << doc.dump() << "\n";
  else
    std::cout << doc.dump(g_indent) << "\n";
}

ordered_json parse_doc(const std::string& text) { return ordered_json::parse(text); }

ordered_json scenario_to_json(const Scenario& sc) {
  ordered_json settings = ordered_json::array();
  for (const auto& s : sc.settings) settings.push_back(to_literal(s));
  return ordered_json{{"initial", sc.initial_literal}, {"settings", std::move(settings)}};
}

int cmd_run(const std::string& path, const std::string& mode,
            std::optional<std::uint64_t> seed) {
  const auto scenarios = parse_scenario_file(path);
  if (mode == "exact") {
    ordered_json out = ordered_json::array();
    for (const auto& sc : scenarios) {
      ordered_json entry = scenario_to_json(sc);
      entry["traces"] = parse_doc(traces_json(run_exact(sc.initial, sc.settings)));
      out.push_back(std::move(entry));
    }
    emit(ordered_json{{"mode", "exact"}, {"scenarios", std::move(out)}});
    return 0;
  }
  if (mode == "sample") {
    const std::uint64_t used_seed = seed.value_or(static_cast<std::uint64_t>(
        std::chrono::system_clock::now().time_since_epoch().count()));
    std::mt19937_64 rng(used_seed);
    ordered_json out = ordered_json::array();
    for (const auto& sc : scenarios) {
      ordered_json entry = scenario_to_json(sc);
      entry["trace"] = parse_doc(trace_json(run_sampled(sc.initial, sc.settings, rng)));
      out.push_back(std::move(entry));
    }
    emit(ordered_json{{"mode", "sample"}, {"seed", used_seed}, {"scenarios", std::move(out)}});
    return 0;
  }
  throw CLI::ValidationError("--mode must be 'exact' or 'sample'");
}

int cmd_fig7() {
  // Same preparation, the two-setting direct-family sequence run in both
  // orders: the outcomes are repeatable within each run yet the value read
  // off for Z1Z2 differs between the runs.
  const JointOnticState initial =
      parse_joint_ontic("(+,-,+)x(+,+,-)");
  const std::vector<std::vector<MeasurementSetting>> orders = {
      {parse_setting("XX&YY"), parse_setting("ZZ&YY")},
      {parse_setting("ZZ&YY"), parse_setting("XX&YY")},
  };

  ordered_json sequences = ordered_json::array();
  for (const auto& settings : orders) {
    const auto traces = run_exact(point_state(initial), settings);
    if (traces.size() != 1) {
      std::cerr << "internal error: demo run is not deterministic\n";
      return 1;
    }
    const auto assignment = assign_values(ContextId::C3, traces.front());
    ordered_json values = ordered_json::object();
    for (const auto& [obs, v] : assignment.values) values[to_literal(obs)] = to_int(v);
    ordered_json names = ordered_json::array();
    for (const auto& s : settings) names.push_back(to_literal(s));
    sequences.push_back(ordered_json{
        {"settings", std::move(names)},
        {"trace", parse_doc(trace_json(traces.front()))},
        {"values", std::move(values)},
        {"post", post_state_label(traces.front().final_state())},
        {"product", to_int(context_product(assignment))}});
  }
  emit(ordered_json{{"initial", to_literal(initial)}, {"context", "C3"},
                    {"sequences", std::move(sequences)}});
  return 0;
}

int cmd_verify(int max_len, int workers, bool timings, bool corrupt_table) {
  // The hidden corruption flag swaps two Table-1 post-state assignments so
  // the suite can demonstrate that its checks catch a broken table.
  const NonlocalTable table =
      corrupt_table ? NonlocalTable::standard().with_swapped_entries(NonlocalId::xx_yy, 1, 2)
                    : NonlocalTable::standard();
  const auto reports = exhaustive_verify(max_len, workers, timings, table);
  emit(parse_doc(reports_json(reports)));
  const bool all_pass =
      std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.pass; });
  return all_pass ? 0 : 1;
}

int cmd_square(const std::string& initial_literal, int order) {
  const JointOnticState initial = parse_joint_ontic(initial_literal);
  const SquareResult result = square_products(initial, order);
  ordered_json out = parse_doc(square_result_json(result));
  out["initial"] = to_literal(initial);
  out["order"] = order;
  emit(out);
  return 0;
}

int cmd_witness(int workers) {
  const auto report = check_square(workers);
  ordered_json out{{"witness", 6},
                   {"noncontextual_bound", kNoncontextualBound},
                   {"bound_source", "external"},
                   {"state_independent", report.pass},
                   {"order_insensitive", report.pass},
                   {"report", parse_doc(report_json(report))}};
  emit(out);
  return report.pass ? 0 : 1;
}

int cmd_quantum(int workers) {
  const auto quantum_report = verify_quantum_square();
  const auto classical_report = check_square(workers);
  const auto q_signature = quantum_signature();

  ordered_json quantum = ordered_json::object();
  ordered_json classical = ordered_json::object();
  const std::array<Sign, 6> classical_signature = {Sign::plus, Sign::plus, Sign::plus,
                                                   Sign::plus, Sign::plus, Sign::minus};
  for (std::size_t i = 0; i < kAllContexts.size(); ++i) {
    quantum[to_string(kAllContexts[i])] = to_int(q_signature[i]);
    classical[to_string(kAllContexts[i])] = to_int(classical_signature[i]);
  }
  const bool match =
      quantum_report.pass && classical_report.pass && q_signature == classical_signature;
  emit(ordered_json{{"quantum_signature", std::move(quantum)},
                    {"classical_signature", std::move(classical)},
                    {"signatures_match", match},
                    {"quantum_report", parse_doc(report_json(quantum_report))},
                    {"classical_report", parse_doc(report_json(classical_report))}});
  return match ? 0 : 1;
}

int cmd_enumerate() {
  using enum CanonicalStateName;
  ordered_json states = ordered_json::array();
  for (const CanonicalStateName name :
       {x_plus, x_minus, y_plus, y_minus, z_plus, z_minus, psi_plus, phi_plus, phi_minus,
        psi_minus, phi_i_plus, psi_i_minus, psi_i_plus, phi_i_minus}) {
    const EpistemicState e = canonical_state(name);
    ordered_json support = ordered_json::array();
    for (int i : e.support()) {
      if (e.space() == Space::joint)
        support.push_back(to_literal(JointOnticState::decode(i)));
      else
        support.push_back(to_literal(OnticState::decode(i)));
    }
    states.push_back(ordered_json{{"name", to_string(name)},
                                  {"weight", e.weight(e.support().front()).str()},
                                  {"support", std::move(support)}});
  }

  ordered_json settings = ordered_json::array();
  for (Axis a : {Axis::x, Axis::y, Axis::z})
    for (int sub : {1, 2})
      settings.push_back(to_literal(MeasurementSetting::elementary(sub, a)));
  for (Axis a1 : {Axis::x, Axis::y, Axis::z})
    for (Axis a2 : {Axis::x, Axis::y, Axis::z})
      settings.push_back(to_literal(MeasurementSetting::local_pair(a1, a2)));
  for (int i = 0; i < 6; ++i)
    settings.push_back(to_literal(MeasurementSetting::nonlocal(static_cast<NonlocalId>(i))));

  ordered_json observables = ordered_json::array();
  for (const auto& obs : observable_catalog()) observables.push_back(to_literal(obs));

  emit(ordered_json{{"canonical_states", std::move(states)},
                    {"settings", std::move(settings)},
                    {"observables", std::move(observables)}});
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bipartite cube toy model of the Mermin-Peres square"};
  app.require_subcommand(1);
  app.add_option("--json-indent", g_indent, "JSON indent width; negative for compact")
      ->capture_default_str();

  std::string scenario_path;
  std::string mode = "exact";
  std::optional<std::uint64_t> seed;
  auto* run = app.add_subcommand("run", "Execute a scenario file");
  run->add_option("scenario", scenario_path, "Scenario file path")->required();
  run->add_option("--mode", mode, "exact | sample")->capture_default_str();
  run->add_option("--seed", seed, "RNG seed for sample mode");

  app.add_subcommand("fig7", "Order-dependence demo: same preparation, two orders");

  int max_len = 4;
  int workers = 1;
  bool timings = false;
  bool corrupt_table = false;
  auto* verify = app.add_subcommand("verify", "Run the exhaustive verification suite");
  verify->add_option("--max-len", max_len, "Repeatability sequence length cap")
      ->capture_default_str();
  verify->add_option("--workers", workers, "Parallel sweep workers")->capture_default_str();
  verify->add_flag("--timings", timings, "Include per-check runtimes (breaks byte-stability)");
  verify->add_flag("--corrupt-table", corrupt_table)->group("");  // hidden test hook

  std::string initial_literal = "(+,+,+)x(+,+,+)";
  int order = 0;
  auto* square = app.add_subcommand("square", "Context products for one initial state");
  square->add_option("--initial", initial_literal, "Joint ontic state literal")
      ->capture_default_str();
  square->add_option("--order", order, "Non-local setting order, 0..5")->capture_default_str();

  auto* witness = app.add_subcommand("witness", "Witness value over all 64 initial states");
  witness->add_option("--workers", workers, "Parallel sweep workers");

  auto* quantum = app.add_subcommand("quantum", "Quantum vs classical signature cross-check");
  quantum->add_option("--workers", workers, "Parallel sweep workers");

  app.add_subcommand("enumerate", "List canonical states, settings and observables");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (run->parsed()) return cmd_run(scenario_path, mode, seed);
    if (app.got_subcommand("fig7")) return cmd_fig7();
    if (verify->parsed()) return cmd_verify(max_len, workers, timings, corrupt_table);
    if (square->parsed()) return cmd_square(initial_literal, order);
    if (witness->parsed()) return cmd_witness(workers);
    if (quantum->parsed()) return cmd_quantum(workers);
    if (app.got_subcommand("enumerate")) return cmd_enumerate();
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const CLI::ValidationError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
