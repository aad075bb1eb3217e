#pragma once

#include <array>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "mps/epistemic.hpp"

namespace mps {

/// The six non-local settings the model defines post-state tables for.
/// The first three share the {psi+-, phi+-} post-state family, the last
/// three share {psi_i+-, phi_i+-}.
enum class NonlocalId : std::uint8_t {
  xx_yy, xx_zz, zz_yy,  // family measuring X1X2, Y1Y2, Z1Z2
  xy_yx, yx_zz, xy_zz,  // family measuring X1Y2, Y1X2, Z1Z2
};

/// A measurement procedure: one of the 3 elementary per-cube measurements,
/// the 9 local bipartite settings A1 & B2, or the 6 listed non-local
/// settings. No other non-local pairing is constructible.
struct MeasurementSetting {
  enum class Kind : std::uint8_t { elementary, local_pair, nonlocal };

  Kind kind;
  int subsystem;   // elementary only
  Axis axis1;      // elementary: the axis; local_pair: axis on system 1
  Axis axis2;      // local_pair only
  NonlocalId id;   // nonlocal only

  static MeasurementSetting elementary(int subsystem, Axis a);
  static MeasurementSetting local_pair(Axis a1, Axis a2);
  static MeasurementSetting nonlocal(NonlocalId id);

  /// Builds the non-local setting measuring (first, second), both product
  /// observables. Returns nullopt for any pairing outside the six defined
  /// ones: the model assigns no post-states to them.
  static std::optional<MeasurementSetting> nonlocal_pair(const Observable& first,
                                                         const Observable& second);

  /// The observables whose values the outcome bits report. Elementary
  /// settings measure one observable; the rest measure two.
  std::vector<Observable> measured_observables() const;

  friend bool operator==(const MeasurementSetting&, const MeasurementSetting&) = default;
};

/// Result bits of one measurement. Elementary settings fill `first` only.
struct Outcome {
  Sign first;
  std::optional<Sign> second;

  friend bool operator==(const Outcome&, const Outcome&) = default;
};

/// Column index in the post-state tables: (+,+), (+,-), (-,+), (-,-).
int outcome_index(const Outcome& o);
Outcome outcome_from_index(int index);

/// One possible result of measuring an epistemic state.
struct Branch {
  Outcome outcome;
  Rational probability;
  EpistemicState post;
};

/// Assignment of post-measurement states to (non-local setting, outcome)
/// pairs. The standard table is the model's definition; mutated copies
/// exist so the verifier can prove its checks catch corruption.
class NonlocalTable {
 public:
  static const NonlocalTable& standard();

  CanonicalStateName post(NonlocalId id, const Outcome& o) const {
    return entries_[static_cast<int>(id)][outcome_index(o)];
  }

  /// Copy with two outcome columns of one row swapped.
  NonlocalTable with_swapped_entries(NonlocalId id, int column_a, int column_b) const;

 private:
  std::array<std::array<CanonicalStateName, 4>, 6> entries_;
  explicit NonlocalTable(std::array<std::array<CanonicalStateName, 4>, 6> entries)
      : entries_(entries) {}
};

/// Faithful outcome: the measured observables evaluated on the actual
/// ontic state. Defined for local and non-local settings.
Outcome outcome_of(const MeasurementSetting& s, const JointOnticState& w);

/// The post-state the setting/outcome pair dictates, independent of what
/// was measured: local pairs produce an uncorrelated product of face
/// states, non-local settings the table-assigned correlated state.
EpistemicState post_state_for(const MeasurementSetting& s, const Outcome& o,
                              const NonlocalTable& table = NonlocalTable::standard());

/// All nonzero-probability branches of measuring a joint state. Branch
/// probability is the total weight of ontic states producing that outcome;
/// the post-state is a full replacement (non-Bayesian: it depends only on
/// setting and outcome, never on the prior).
std::vector<Branch> measure(const MeasurementSetting& s, const EpistemicState& e,
                            const NonlocalTable& table = NonlocalTable::standard());

/// Elementary measurement on a single-cube state: at most two branches,
/// post-states are the axis face states.
std::vector<Branch> measure_elementary(Axis axis, const EpistemicState& e);

/// Draws one branch with exactly the measure() probabilities. The engine is
/// caller-owned; identical seeds give identical draws.
std::pair<Outcome, EpistemicState> sample(const MeasurementSetting& s,
                                          const EpistemicState& e,
                                          std::mt19937_64& rng,
                                          const NonlocalTable& table = NonlocalTable::standard());

std::pair<Outcome, EpistemicState> sample_elementary(Axis axis, const EpistemicState& e,
                                                     std::mt19937_64& rng);

}  // namespace mps
