#pragma once

#include <span>
#include <string>
#include <vector>

#include "mps/measurement.hpp"

namespace mps {

struct TraceStep {
  MeasurementSetting setting;
  Outcome outcome;
  EpistemicState post;
};

/// One outcome path of a sequential measurement with its exact probability.
struct Trace {
  EpistemicState initial;
  std::vector<TraceStep> steps;
  Rational probability;

  const EpistemicState& final_state() const {
    return steps.empty() ? initial : steps.back().post;
  }
};

/// Runs the settings in order, branching on every outcome; returns one
/// trace per nonzero-probability path. Probabilities sum to exactly one.
/// Joint initial states take local/non-local settings, elementary initial
/// states take elementary settings on their own subsystem.
std::vector<Trace> run_exact(const EpistemicState& initial,
                             std::span<const MeasurementSetting> settings,
                             const NonlocalTable& table = NonlocalTable::standard());

/// Single stochastic path with branch choices drawn from the caller's
/// engine. The recorded probability is the exact probability of the path.
Trace run_sampled(const EpistemicState& initial,
                  std::span<const MeasurementSetting> settings, std::mt19937_64& rng,
                  const NonlocalTable& table = NonlocalTable::standard());

/// The six compatible-observable sets of the square. R1, R2, C1, C2 are
/// measured by a single local setting; C3 by any sequence from the
/// {XX&YY, XX&ZZ, ZZ&YY} family, R3 from the {XY&YX, YX&ZZ, XY&ZZ} family.
enum class ContextId : std::uint8_t { R1, R2, R3, C1, C2, C3 };

inline constexpr std::array<ContextId, 6> kAllContexts = {
    ContextId::R1, ContextId::R2, ContextId::R3,
    ContextId::C1, ContextId::C2, ContextId::C3};

struct ContextInfo {
  std::array<Observable, 3> observables;
  std::vector<MeasurementSetting> family;  // sanctioned settings
};

const ContextInfo& context_info(ContextId id);
std::string to_string(ContextId id);

/// Values a single step's outcome assigns: the measured observables plus,
/// for a local pair A1 & B2, the product A1B2 computed by multiplication.
std::vector<std::pair<Observable, Sign>> observable_values(const MeasurementSetting& s,
                                                           const Outcome& o);

struct ValueAssignment {
  ContextId context;
  std::array<std::pair<Observable, Sign>, 3> values;

  Sign value_of(const Observable& obs) const;
};

/// Reads off the context's observable triple from a trace over the
/// sanctioned family. Each observable takes the value from the first step
/// measuring it; later occurrences are verified, and a disagreement (which
/// repeatability rules out for sanctioned traces) throws.
ValueAssignment assign_values(ContextId context, const Trace& trace);

Sign context_product(const ValueAssignment& assignment);

}  // namespace mps
