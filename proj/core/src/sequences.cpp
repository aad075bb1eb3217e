#include "mps/sequences.hpp"

#include <algorithm>
#include <stdexcept>

namespace mps {

namespace {

std::vector<Branch> step_branches(const MeasurementSetting& s, const EpistemicState& e,
                                  const NonlocalTable& table) {
  if (e.space() == Space::joint) return measure(s, e, table);
  if (s.kind != MeasurementSetting::Kind::elementary)
    throw std::invalid_argument("run: elementary state takes elementary settings only");
  const int subsystem = e.space() == Space::elementary1 ? 1 : 2;
  if (s.subsystem != subsystem)
    throw std::invalid_argument("run: setting addresses the other subsystem");
  return measure_elementary(s.axis1, e);
}

}  // namespace

std::vector<Trace> run_exact(const EpistemicState& initial,
                             std::span<const MeasurementSetting> settings,
                             const NonlocalTable& table) {
  std::vector<Trace> paths = {Trace{initial, {}, Rational(1)}};
  for (const auto& setting : settings) {
    std::vector<Trace> next;
    for (const auto& path : paths) {
      for (const auto& branch : step_branches(setting, path.final_state(), table)) {
        Trace extended = path;
        extended.steps.push_back(TraceStep{setting, branch.outcome, branch.post});
        extended.probability = path.probability * branch.probability;
        next.push_back(std::move(extended));
      }
    }
    paths = std::move(next);
  }
  return paths;
}

Trace run_sampled(const EpistemicState& initial,
                  std::span<const MeasurementSetting> settings, std::mt19937_64& rng,
                  const NonlocalTable& table) {
  Trace trace{initial, {}, Rational(1)};
  for (const auto& setting : settings) {
    const auto branches = step_branches(setting, trace.final_state(), table);
    // Re-draw against the exact branch list so the path probability stays exact.
    const auto [outcome, post] = [&] {
      if (trace.final_state().space() == Space::joint)
        return sample(setting, trace.final_state(), rng, table);
      return sample_elementary(setting.axis1, trace.final_state(), rng);
    }();
    const auto it = std::find_if(branches.begin(), branches.end(),
                                 [&](const Branch& b) { return b.outcome == outcome; });
    trace.probability *= it->probability;
    trace.steps.push_back(TraceStep{setting, outcome, post});
  }
  return trace;
}

const ContextInfo& context_info(ContextId id) {
  using S = MeasurementSetting;
  static const std::array<ContextInfo, 6> infos = {{
      // R1: X1, X2, X1X2 via X1 & X2
      {{Observable::single(1, Axis::x), Observable::single(2, Axis::x),
        Observable::product(Axis::x, Axis::x)},
       {S::local_pair(Axis::x, Axis::x)}},
      // R2: Y1, Y2, Y1Y2 via Y1 & Y2
      {{Observable::single(1, Axis::y), Observable::single(2, Axis::y),
        Observable::product(Axis::y, Axis::y)},
       {S::local_pair(Axis::y, Axis::y)}},
      // R3: X1Y2, Y1X2, Z1Z2 via the swapped-parity family
      {{Observable::product(Axis::x, Axis::y), Observable::product(Axis::y, Axis::x),
        Observable::product(Axis::z, Axis::z)},
       {S::nonlocal(NonlocalId::xy_yx), S::nonlocal(NonlocalId::yx_zz),
        S::nonlocal(NonlocalId::xy_zz)}},
      // C1: X1, Y2, X1Y2 via X1 & Y2
      {{Observable::single(1, Axis::x), Observable::single(2, Axis::y),
        Observable::product(Axis::x, Axis::y)},
       {S::local_pair(Axis::x, Axis::y)}},
      // C2: Y1, X2, Y1X2 via Y1 & X2
      {{Observable::single(1, Axis::y), Observable::single(2, Axis::x),
        Observable::product(Axis::y, Axis::x)},
       {S::local_pair(Axis::y, Axis::x)}},
      // C3: X1X2, Y1Y2, Z1Z2 via the direct-parity family
      {{Observable::product(Axis::x, Axis::x), Observable::product(Axis::y, Axis::y),
        Observable::product(Axis::z, Axis::z)},
       {S::nonlocal(NonlocalId::xx_yy), S::nonlocal(NonlocalId::xx_zz),
        S::nonlocal(NonlocalId::zz_yy)}},
  }};
  switch (id) {
    case ContextId::R1: return infos[0];
    case ContextId::R2: return infos[1];
    case ContextId::R3: return infos[2];
    case ContextId::C1: return infos[3];
    case ContextId::C2: return infos[4];
    case ContextId::C3: return infos[5];
  }
  throw std::logic_error("bad context id");
}

std::string to_string(ContextId id) {
  switch (id) {
    case ContextId::R1: return "R1";
    case ContextId::R2: return "R2";
    case ContextId::R3: return "R3";
    case ContextId::C1: return "C1";
    case ContextId::C2: return "C2";
    case ContextId::C3: return "C3";
  }
  throw std::logic_error("bad context id");
}

std::vector<std::pair<Observable, Sign>> observable_values(const MeasurementSetting& s,
                                                           const Outcome& o) {
  const auto observables = s.measured_observables();
  std::vector<std::pair<Observable, Sign>> values;
  values.emplace_back(observables[0], o.first);
  if (observables.size() > 1) values.emplace_back(observables[1], *o.second);
  // A local pair also reveals the product observable by multiplying outcomes.
  if (s.kind == MeasurementSetting::Kind::local_pair)
    values.emplace_back(Observable::product(s.axis1, s.axis2), o.first * *o.second);
  return values;
}

Sign ValueAssignment::value_of(const Observable& obs) const {
  for (const auto& [o, v] : values)
    if (o == obs) return v;
  throw std::invalid_argument("value_of: observable not in this assignment");
}

ValueAssignment assign_values(ContextId context, const Trace& trace) {
  if (trace.steps.empty())
    throw std::invalid_argument("assign_values: empty trace");
  const ContextInfo& info = context_info(context);
  for (const auto& step : trace.steps)
    if (std::find(info.family.begin(), info.family.end(), step.setting) == info.family.end())
      throw std::invalid_argument("assign_values: setting outside the context's family");

  ValueAssignment assignment{context, {}};
  for (int i = 0; i < 3; ++i) {
    const Observable& target = info.observables[i];
    bool found = false;
    Sign value = Sign::plus;
    for (const auto& step : trace.steps) {
      for (const auto& [obs, v] : observable_values(step.setting, step.outcome)) {
        if (!(obs == target)) continue;
        if (!found) {
          found = true;
          value = v;
        } else if (v != value) {
          throw std::logic_error("assign_values: repeated observable changed value");
        }
      }
    }
    if (!found)
      throw std::invalid_argument("assign_values: observable never measured in trace");
    assignment.values[i] = {target, value};
  }
  return assignment;
}

Sign context_product(const ValueAssignment& assignment) {
  Sign product = Sign::plus;
  for (const auto& [obs, v] : assignment.values) product = product * v;
  return product;
}

}  // namespace mps
