#include "mps/verifier.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <set>
#include <thread>

#include "mps/io.hpp"

namespace mps {

namespace {

std::string join_settings(std::span<const MeasurementSetting> settings) {
  std::string out;
  for (const auto& s : settings) {
    if (!out.empty()) out += ';';
    out += to_literal(s);
  }
  return out;
}

// Static partition of the 64 initial states across workers; results land in
// per-initial slots, so the merged order never depends on scheduling.
template <typename Fn>
std::vector<Counterexample> sweep_initials(int workers, Fn&& per_initial) {
  workers = std::clamp(workers, 1, kJointSpaceSize);
  std::array<std::vector<Counterexample>, kJointSpaceSize> slots;
  auto work = [&](int worker) {
    for (int i = worker; i < kJointSpaceSize; i += workers) slots[i] = per_initial(i);
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(work, w);
    for (auto& t : pool) t.join();
  }
  std::vector<Counterexample> merged;
  for (auto& slot : slots)
    merged.insert(merged.end(), slot.begin(), slot.end());
  return merged;
}

// All ordered sequences (with repetition) over the family, lengths 1..max_len,
// in lexicographic order.
std::vector<std::vector<MeasurementSetting>> enumerate_sequences(
    const std::vector<MeasurementSetting>& family, int max_len) {
  std::vector<std::vector<MeasurementSetting>> out;
  std::vector<std::vector<MeasurementSetting>> frontier = {{}};
  for (int len = 1; len <= max_len; ++len) {
    std::vector<std::vector<MeasurementSetting>> next;
    for (const auto& prefix : frontier) {
      for (const auto& s : family) {
        auto seq = prefix;
        seq.push_back(s);
        out.push_back(seq);
        next.push_back(std::move(seq));
      }
    }
    frontier = std::move(next);
  }
  return out;
}

// Repeated-observable violations in one trace, keyed for stable reporting.
std::vector<Counterexample> trace_violations(int initial_index,
                                             const std::string& sequence,
                                             const Trace& trace) {
  std::vector<Counterexample> out;
  std::vector<std::pair<Observable, std::vector<Sign>>> seen;
  for (const auto& step : trace.steps) {
    for (const auto& [obs, value] : observable_values(step.setting, step.outcome)) {
      auto it = std::find_if(seen.begin(), seen.end(),
                             [&](const auto& entry) { return entry.first == obs; });
      if (it == seen.end())
        seen.push_back({obs, {value}});
      else
        it->second.push_back(value);
    }
  }
  for (const auto& [obs, values] : seen) {
    if (values.size() < 2) continue;
    if (std::all_of(values.begin(), values.end(),
                    [&](Sign v) { return v == values.front(); }))
      continue;
    std::string value_list;
    for (Sign v : values) {
      if (!value_list.empty()) value_list += ',';
      value_list += sign_char(v);
      value_list += '1';
    }
    out.push_back(Counterexample{initial_index, sequence, to_literal(obs), value_list});
  }
  return out;
}

long long sequence_count(std::size_t family_size, int max_len) {
  long long total = 0, power = 1;
  for (int len = 1; len <= max_len; ++len) {
    power *= static_cast<long long>(family_size);
    total += power;
  }
  return total;
}

}  // namespace

VerificationReport check_repeatability(const std::vector<MeasurementSetting>& family,
                                       const std::string& family_label, int max_len,
                                       int workers, const NonlocalTable& table) {
  if (max_len < 2) throw std::invalid_argument("check_repeatability: max_len must be >= 2");
  const auto sequences = enumerate_sequences(family, max_len);

  auto per_initial = [&](int initial) {
    std::vector<Counterexample> found;
    const EpistemicState start = point_state(JointOnticState::decode(initial));
    for (const auto& seq : sequences) {
      const std::string seq_text = join_settings(seq);
      for (const auto& trace : run_exact(start, seq, table)) {
        auto violations = trace_violations(initial, seq_text, trace);
        found.insert(found.end(), violations.begin(), violations.end());
      }
    }
    return found;
  };

  VerificationReport report;
  report.check = "repeatability[" + family_label + "]";
  report.universe = "64 point initial states x all ordered sequences of {" +
                    join_settings(family) + "} up to length " + std::to_string(max_len);
  report.universe_size = kJointSpaceSize * sequence_count(family.size(), max_len);
  report.counterexamples = sweep_initials(workers, per_initial);
  report.pass = report.counterexamples.empty();
  return report;
}

VerificationReport check_eigenstates(const NonlocalTable& table) {
  VerificationReport report;
  report.check = "eigenstates";
  report.universe = "6 non-local + 9 local settings x 4 outcomes each";
  report.universe_size = 60;

  std::vector<MeasurementSetting> settings;
  for (int i = 0; i < 6; ++i)
    settings.push_back(MeasurementSetting::nonlocal(static_cast<NonlocalId>(i)));
  for (Axis a1 : {Axis::x, Axis::y, Axis::z})
    for (Axis a2 : {Axis::x, Axis::y, Axis::z})
      settings.push_back(MeasurementSetting::local_pair(a1, a2));

  for (const auto& s : settings) {
    for (int idx = 0; idx < 4; ++idx) {
      const Outcome o = outcome_from_index(idx);
      const EpistemicState post = post_state_for(s, o, table);
      const auto branches = measure(s, post, table);
      const bool ok = branches.size() == 1 && branches[0].outcome == o &&
                      branches[0].probability == Rational(1) &&
                      states_equal(branches[0].post, post);
      if (!ok) {
        std::string detail = "branches=" + std::to_string(branches.size());
        for (const auto& b : branches)
          detail += " " + to_literal(b.outcome) + ":" + b.probability.str();
        report.counterexamples.push_back(
            Counterexample{-1, to_literal(s), to_literal(o), detail});
      }
    }
  }
  report.pass = report.counterexamples.empty();
  return report;
}

VerificationReport check_faithfulness(const NonlocalTable& table) {
  VerificationReport report;
  report.check = "faithfulness";
  report.universe = "64 point states x 15 joint settings, first-measurement outcomes";
  report.universe_size = 64 * 15;

  std::vector<MeasurementSetting> settings;
  for (Axis a1 : {Axis::x, Axis::y, Axis::z})
    for (Axis a2 : {Axis::x, Axis::y, Axis::z})
      settings.push_back(MeasurementSetting::local_pair(a1, a2));
  for (int i = 0; i < 6; ++i)
    settings.push_back(MeasurementSetting::nonlocal(static_cast<NonlocalId>(i)));

  report.counterexamples = sweep_initials(1, [&](int initial) {
    std::vector<Counterexample> found;
    const JointOnticState w = JointOnticState::decode(initial);
    for (const auto& s : settings) {
      const auto branches = measure(s, point_state(w), table);
      const Outcome expected = outcome_of(s, w);
      if (branches.size() != 1 || branches[0].probability != Rational(1) ||
          !(branches[0].outcome == expected)) {
        found.push_back(Counterexample{initial, to_literal(s), to_literal(expected),
                                       "outcome mismatch or indeterministic branch"});
      }
    }
    return found;
  });
  report.pass = report.counterexamples.empty();
  return report;
}

VerificationReport check_support_partition() {
  VerificationReport report;
  report.check = "support_partition";
  report.universe = "8 correlated canonical states against all 64 joint ontic states";
  report.universe_size = kJointSpaceSize;

  using enum CanonicalStateName;
  const std::array<CanonicalStateName, 4> direct_names = {psi_plus, phi_plus, phi_minus,
                                                          psi_minus};
  const std::array<CanonicalStateName, 4> swapped_names = {phi_i_plus, psi_i_minus,
                                                           psi_i_plus, phi_i_minus};

  auto check_family = [&](const std::array<CanonicalStateName, 4>& names, bool swapped) {
    std::set<int> covered;
    for (const auto name : names) {
      const EpistemicState e = canonical_state(name);
      const auto support = e.support();
      if (support.size() != 8)
        report.counterexamples.push_back(Counterexample{
            -1, "", to_string(name), "support size " + std::to_string(support.size())});
      for (int i : support) {
        if (e.weight(i) != Rational(1, 8))
          report.counterexamples.push_back(
              Counterexample{i, "", to_string(name), "weight " + e.weight(i).str()});
        if (!covered.insert(i).second)
          report.counterexamples.push_back(
              Counterexample{i, "", to_string(name), "state covered twice"});
      }
    }
    // The target set: odd number of -1 parities in the direct profile, even
    // in the swapped one.
    for (int i = 0; i < kJointSpaceSize; ++i) {
      const ParityProfile prof = parity_profile(JointOnticState::decode(i));
      const auto& pattern = swapped ? prof.swapped : prof.direct;
      const int minus_count = static_cast<int>(
          std::count(pattern.begin(), pattern.end(), Sign::minus));
      const bool should_cover = swapped ? minus_count % 2 == 0 : minus_count % 2 == 1;
      if (should_cover != covered.contains(i))
        report.counterexamples.push_back(Counterexample{
            i, "", swapped ? "swapped family" : "direct family",
            should_cover ? "state missing from partition" : "state wrongly covered"});
    }
  };
  check_family(direct_names, false);
  check_family(swapped_names, true);
  report.pass = report.counterexamples.empty();
  return report;
}

std::array<MeasurementSetting, 2> nonlocal_order(ContextId context, int order_index) {
  const auto& family = context_info(context).family;
  if (family.size() != 3)
    throw std::invalid_argument("nonlocal_order: context is measured by a single setting");
  static constexpr int pairs[6][2] = {{0, 1}, {0, 2}, {1, 0}, {1, 2}, {2, 0}, {2, 1}};
  if (order_index < 0 || order_index >= 6)
    throw std::invalid_argument("nonlocal_order: order index must be in 0..5");
  return {family[pairs[order_index][0]], family[pairs[order_index][1]]};
}

SquareResult square_products(const JointOnticState& initial, int order_index,
                             const NonlocalTable& table) {
  SquareResult result{};
  int witness = 0;
  for (std::size_t i = 0; i < kAllContexts.size(); ++i) {
    const ContextId context = kAllContexts[i];
    const ContextInfo& info = context_info(context);
    std::vector<MeasurementSetting> settings;
    if (info.family.size() == 1) {
      settings = {info.family[0]};
    } else {
      const auto order = nonlocal_order(context, order_index);
      settings = {order[0], order[1]};
    }
    // Fresh preparation per context: the square compares contexts as
    // alternative experiments on the same initial ontic state.
    const auto traces = run_exact(point_state(initial), settings, table);
    const Sign product = context_product(assign_values(context, traces.front()));
    for (const auto& t : traces)
      if (context_product(assign_values(context, t)) != product)
        throw std::logic_error("square_products: context product differs across branches");
    result.products[i] = product;
    witness += (context == ContextId::C3 ? -1 : 1) * to_int(product);
  }
  result.witness = witness;
  return result;
}

VerificationReport check_square(int workers, const NonlocalTable& table) {
  VerificationReport report;
  report.check = "square_products";
  report.universe =
      "64 initial ontic states x 6 orderings of two-setting sequences per "
      "non-local context; expected products (+1,+1,+1,+1,+1,-1), witness 6 "
      "(noncontextual bound 4, external)";
  report.universe_size = kJointSpaceSize * 6;

  const std::array<Sign, 6> expected = {Sign::plus, Sign::plus, Sign::plus,
                                        Sign::plus, Sign::plus, Sign::minus};
  report.counterexamples = sweep_initials(workers, [&](int initial) {
    std::vector<Counterexample> found;
    for (int order = 0; order < 6; ++order) {
      try {
        const SquareResult r =
            square_products(JointOnticState::decode(initial), order, table);
        if (r.products != expected || r.witness != 6) {
          std::string values;
          for (std::size_t i = 0; i < kAllContexts.size(); ++i) {
            if (!values.empty()) values += ',';
            values += to_string(kAllContexts[i]) + ":" + sign_char(r.products[i]);
          }
          values += ",witness:" + std::to_string(r.witness);
          found.push_back(Counterexample{initial, "order=" + std::to_string(order),
                                         "context products", values});
        }
      } catch (const std::exception& e) {
        found.push_back(Counterexample{initial, "order=" + std::to_string(order),
                                       "context products", e.what()});
      }
    }
    return found;
  });
  report.pass = report.counterexamples.empty();
  return report;
}

VerificationReport check_mixed_family_incompatibility() {
  VerificationReport report;
  report.check = "mixed_family_incompatibility";
  const std::vector<MeasurementSetting> family = {
      MeasurementSetting::nonlocal(NonlocalId::xx_yy),
      MeasurementSetting::local_pair(Axis::x, Axis::x)};
  report.universe_size = kJointSpaceSize * sequence_count(family.size(), 3);

  // This is a negative control: the mixed family must NOT be repeatable.
  // The check passes when exhaustive search finds a length <= 3 trace in
  // which Y1Y2 takes two different values.
  const auto inner = check_repeatability(family, "mixed", 3, 1);
  const Observable yy = Observable::product(Axis::y, Axis::y);
  const auto witness =
      std::find_if(inner.counterexamples.begin(), inner.counterexamples.end(),
                   [&](const Counterexample& ce) {
                     return ce.observable == to_literal(yy) &&
                            std::count(ce.sequence.begin(), ce.sequence.end(), ';') <= 2;
                   });
  if (witness != inner.counterexamples.end()) {
    report.pass = true;
    report.universe =
        "negative control over {XX&YY, X1&X2} up to length 3; witness: initial " +
        std::to_string(witness->initial_index) + " (" +
        to_literal(JointOnticState::decode(witness->initial_index)) + "), sequence " +
        witness->sequence + ", Y1Y2 values " + witness->values;
  } else {
    report.pass = false;
    report.universe = "negative control over {XX&YY, X1&X2} up to length 3";
    report.counterexamples.push_back(Counterexample{
        -1, "", to_literal(yy),
        "mixed family unexpectedly repeatable: no Y1Y2 flip of length <= 3 found"});
  }
  return report;
}

std::vector<VerificationReport> exhaustive_verify(int max_len, int workers,
                                                  bool with_timings,
                                                  const NonlocalTable& table) {
  std::vector<VerificationReport> reports;
  auto timed = [&](auto&& fn) {
    const auto start = std::chrono::steady_clock::now();
    VerificationReport r = fn();
    if (with_timings) {
      const auto elapsed = std::chrono::steady_clock::now() - start;
      r.runtime_ms =
          std::chrono::duration_cast<std::chrono::duration<double, std::milli>>(elapsed)
              .count();
    }
    reports.push_back(std::move(r));
  };

  timed([&] { return check_eigenstates(table); });
  timed([&] { return check_faithfulness(table); });
  timed([&] {
    return check_repeatability(context_info(ContextId::C3).family, "table1", max_len,
                               workers, table);
  });
  timed([&] {
    return check_repeatability(context_info(ContextId::R3).family, "table2", max_len,
                               workers, table);
  });
  timed([&] { return check_square(workers, table); });
  timed([&] { return check_support_partition(); });
  timed([&] { return check_mixed_family_incompatibility(); });
  return reports;
}

}  // namespace mps
