// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. All comparisons are exact; the only tolerances are the runtime
// budgets stated next to each criterion.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>

#include "mps/io.hpp"
#include "mps/quantum.hpp"

using namespace mps;
using enum CanonicalStateName;

namespace {

int g_failures = 0;

void criterion(int number, const std::string& description, double budget_seconds,
               const std::function<bool(std::string&)>& body) {
  std::string detail;
  const auto start = std::chrono::steady_clock::now();
  bool ok = false;
  try {
    ok = body(detail);
  } catch (const std::exception& e) {
    detail = std::string("exception: ") + e.what();
  }
  const double elapsed =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (budget_seconds > 0 && elapsed > budget_seconds) {
    ok = false;
    detail += (detail.empty() ? "" : "; ") + std::string("over runtime budget");
  }
  std::cout << (ok ? "[PASS]" : "[FAIL]") << " criterion " << number << ": "
            << description << " (" << elapsed << " s";
  if (!detail.empty()) std::cout << "; " << detail;
  std::cout << ")\n";
  if (!ok) ++g_failures;
}

std::vector<MeasurementSetting> settings_of(std::initializer_list<const char*> literals) {
  std::vector<MeasurementSetting> out;
  for (const char* lit : literals) out.push_back(parse_setting(lit));
  return out;
}

bool criterion1_fig7(std::string& detail) {
  const JointOnticState initial = parse_joint_ontic("(+,-,+)x(+,+,-)");
  const Observable xx = Observable::product(Axis::x, Axis::x);
  const Observable yy = Observable::product(Axis::y, Axis::y);
  const Observable zz = Observable::product(Axis::z, Axis::z);

  const auto top =
      run_exact(point_state(initial), settings_of({"XX&YY", "ZZ&YY"}));
  if (top.size() != 1) return false;
  const auto top_values = assign_values(ContextId::C3, top.front());
  const bool top_ok = top_values.value_of(xx) == Sign::plus &&
                      top_values.value_of(yy) == Sign::minus &&
                      top_values.value_of(zz) == Sign::plus &&
                      states_equal(top.front().final_state(), canonical_state(phi_plus));

  const auto bottom =
      run_exact(point_state(initial), settings_of({"ZZ&YY", "XX&YY"}));
  if (bottom.size() != 1) return false;
  const auto bottom_values = assign_values(ContextId::C3, bottom.front());
  const bool bottom_ok =
      bottom_values.value_of(xx) == Sign::minus &&
      bottom_values.value_of(yy) == Sign::minus &&
      bottom_values.value_of(zz) == Sign::minus &&
      states_equal(bottom.front().final_state(), canonical_state(psi_minus));

  if (!top_ok) detail = "forward order values wrong";
  if (!bottom_ok) detail += std::string(detail.empty() ? "" : "; ") + "reversed order values wrong";
  return top_ok && bottom_ok;
}

bool criterion2_square(std::string& detail) {
  const std::array<Sign, 6> expected = {Sign::plus, Sign::plus, Sign::plus,
                                        Sign::plus, Sign::plus, Sign::minus};
  for (int i = 0; i < kJointSpaceSize; ++i) {
    for (int order = 0; order < 6; ++order) {
      const SquareResult r = square_products(JointOnticState::decode(i), order);
      if (r.products != expected || r.witness != 6) {
        detail = "initial " + std::to_string(i) + ", order " + std::to_string(order);
        return false;
      }
    }
  }
  return true;
}

bool criterion3_eigen_repeat(std::string& detail) {
  const auto eigen = check_eigenstates();
  if (!eigen.pass || eigen.universe_size != 60) {
    detail = "eigenstate sweep failed";
    return false;
  }
  for (const ContextId context : {ContextId::C3, ContextId::R3}) {
    const auto report = check_repeatability(
        context_info(context).family, to_string(context), 4);
    if (!report.pass) {
      detail = "repeatability failed for " + to_string(context) + " family";
      return false;
    }
  }
  return true;
}

bool criterion4_negative_control(std::string& detail) {
  const auto report = check_mixed_family_incompatibility();
  if (!report.pass) detail = "no Y1Y2 flip of length <= 3 found";
  return report.pass;
}

bool criterion5_partition(std::string&) { return check_support_partition().pass; }

bool criterion6_quantum(std::string& detail) {
  const auto report = verify_quantum_square();
  if (!report.pass) {
    detail = "operator algebra check failed";
    return false;
  }
  const auto q = quantum_signature();
  const SquareResult classical = square_products(JointOnticState::decode(0), 0);
  if (q != classical.products) {
    detail = "signatures differ";
    return false;
  }
  return true;
}

bool criterion7_determinism(std::string& detail) {
  const std::string reports1 = reports_json(exhaustive_verify(4, 1));
  const std::string reports1_again = reports_json(exhaustive_verify(4, 1));
  const std::string reports8 = reports_json(exhaustive_verify(4, 8));
  if (reports1 != reports1_again || reports1 != reports8) {
    detail = "verification reports not byte-identical";
    return false;
  }
  const auto settings = settings_of({"X1&X2", "XX&YY", "ZZ&YY"});
  const EpistemicState start = canonical_state(psi_minus);
  std::mt19937_64 a(42), b(42);
  const std::string run_a = trace_json(run_sampled(start, settings, a));
  const std::string run_b = trace_json(run_sampled(start, settings, b));
  if (run_a != run_b) {
    detail = "sampled runs not byte-identical for fixed seed";
    return false;
  }
  return true;
}

}  // namespace

int main() {
  criterion(1, "demo-state order dependence: values and post-states, exact", 1.0,
            criterion1_fig7);
  criterion(2, "square signature (+1,+1,+1,+1,+1,-1) and witness 6 over all 64 initials "
               "x 6 orders", 5.0, criterion2_square);
  criterion(3, "eigenstate sweep (60 pairs) and repeatability of both families to "
               "length 4", 30.0, criterion3_eigen_repeat);
  criterion(4, "negative control: mixed {XX&YY, X1&X2} fails repeatability with a "
               "Y1Y2 flip of length <= 3", 0, criterion4_negative_control);
  criterion(5, "canonical supports: size 8, weight 1/8, partitions of the parity halves",
            0, criterion5_partition);
  criterion(6, "quantum operator cross-check matches the classical signature", 0,
            criterion6_quantum);
  criterion(7, "byte-identical reports across runs/worker counts; seeded sampling "
               "deterministic", 0, criterion7_determinism);

  if (g_failures == 0) {
    std::cout << "all acceptance criteria passed\n";
    return 0;
  }
  std::cout << g_failures << " acceptance criteria failed\n";
  return 1;
}
