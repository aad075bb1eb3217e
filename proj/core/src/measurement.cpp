#include "mps/measurement.hpp"

#include <map>
#include <numeric>
#include <stdexcept>

namespace mps {

MeasurementSetting MeasurementSetting::elementary(int subsystem, Axis a) {
  if (subsystem != 1 && subsystem != 2)
    throw std::invalid_argument("MeasurementSetting: subsystem must be 1 or 2");
  return MeasurementSetting{Kind::elementary, subsystem, a, a, NonlocalId::xx_yy};
}

MeasurementSetting MeasurementSetting::local_pair(Axis a1, Axis a2) {
  return MeasurementSetting{Kind::local_pair, 0, a1, a2, NonlocalId::xx_yy};
}

MeasurementSetting MeasurementSetting::nonlocal(NonlocalId id) {
  return MeasurementSetting{Kind::nonlocal, 0, Axis::x, Axis::x, id};
}

namespace {

// The two product observables each non-local setting reports, in outcome
// bit order.
const std::array<std::pair<Observable, Observable>, 6>& nonlocal_observables() {
  static const std::array<std::pair<Observable, Observable>, 6> table = {{
      {Observable::product(Axis::x, Axis::x), Observable::product(Axis::y, Axis::y)},
      {Observable::product(Axis::x, Axis::x), Observable::product(Axis::z, Axis::z)},
      {Observable::product(Axis::z, Axis::z), Observable::product(Axis::y, Axis::y)},
      {Observable::product(Axis::x, Axis::y), Observable::product(Axis::y, Axis::x)},
      {Observable::product(Axis::y, Axis::x), Observable::product(Axis::z, Axis::z)},
      {Observable::product(Axis::x, Axis::y), Observable::product(Axis::z, Axis::z)},
  }};
  return table;
}

}  // namespace

std::optional<MeasurementSetting> MeasurementSetting::nonlocal_pair(
    const Observable& first, const Observable& second) {
  const auto& table = nonlocal_observables();
  for (int i = 0; i < 6; ++i)
    if (table[i].first == first && table[i].second == second)
      return nonlocal(static_cast<NonlocalId>(i));
  return std::nullopt;
}

std::vector<Observable> MeasurementSetting::measured_observables() const {
  switch (kind) {
    case Kind::elementary:
      return {Observable::single(subsystem, axis1)};
    case Kind::local_pair:
      return {Observable::single(1, axis1), Observable::single(2, axis2)};
    case Kind::nonlocal: {
      const auto& pair = nonlocal_observables()[static_cast<int>(id)];
      return {pair.first, pair.second};
    }
  }
  throw std::logic_error("bad setting kind");
}

int outcome_index(const Outcome& o) {
  if (!o.second) throw std::invalid_argument("outcome_index: two-bit outcome required");
  return (o.first == Sign::plus ? 0 : 2) + (*o.second == Sign::plus ? 0 : 1);
}

Outcome outcome_from_index(int index) {
  return Outcome{index < 2 ? Sign::plus : Sign::minus,
                 index % 2 == 0 ? Sign::plus : Sign::minus};
}

const NonlocalTable& NonlocalTable::standard() {
  using enum CanonicalStateName;
  // Rows in NonlocalId order, columns (+,+), (+,-), (-,+), (-,-).
  static const NonlocalTable table(std::array<std::array<CanonicalStateName, 4>, 6>{{
      {psi_plus, phi_plus, phi_minus, psi_minus},      // X1X2 & Y1Y2
      {phi_plus, psi_plus, phi_minus, psi_minus},      // X1X2 & Z1Z2
      {phi_minus, phi_plus, psi_plus, psi_minus},      // Z1Z2 & Y1Y2
      {phi_i_plus, psi_i_minus, psi_i_plus, phi_i_minus},  // X1Y2 & Y1X2
      {phi_i_plus, psi_i_plus, phi_i_minus, psi_i_minus},  // Y1X2 & Z1Z2
      {phi_i_plus, psi_i_minus, phi_i_minus, psi_i_plus},  // X1Y2 & Z1Z2
  }});
  return table;
}

NonlocalTable NonlocalTable::with_swapped_entries(NonlocalId id, int column_a,
                                                  int column_b) const {
  NonlocalTable copy = *this;
  auto& row = copy.entries_[static_cast<int>(id)];
  std::swap(row.at(column_a), row.at(column_b));
  return copy;
}

Outcome outcome_of(const MeasurementSetting& s, const JointOnticState& w) {
  if (s.kind == MeasurementSetting::Kind::elementary)
    return Outcome{w.coord(s.subsystem, s.axis1), std::nullopt};
  const auto observables = s.measured_observables();
  return Outcome{evaluate_observable(observables[0], w),
                 evaluate_observable(observables[1], w)};
}

EpistemicState post_state_for(const MeasurementSetting& s, const Outcome& o,
                              const NonlocalTable& table) {
  switch (s.kind) {
    case MeasurementSetting::Kind::elementary:
      return canonical_state(elementary_name(s.axis1, o.first), s.subsystem);
    case MeasurementSetting::Kind::local_pair: {
      if (!o.second) throw std::invalid_argument("post_state_for: two-bit outcome required");
      return tensor(canonical_state(elementary_name(s.axis1, o.first), 1),
                    canonical_state(elementary_name(s.axis2, *o.second), 2));
    }
    case MeasurementSetting::Kind::nonlocal:
      return canonical_state(table.post(s.id, o));
  }
  throw std::logic_error("bad setting kind");
}

std::vector<Branch> measure(const MeasurementSetting& s, const EpistemicState& e,
                            const NonlocalTable& table) {
  if (e.space() != Space::joint)
    throw std::invalid_argument("measure: joint state required");
  if (s.kind == MeasurementSetting::Kind::elementary)
    throw std::invalid_argument(
        "measure: the model defines no single-sided measurement on the joint system");

  // Outcomes in table column order (+,+), (+,-), (-,+), (-,-).
  std::array<Rational, 4> probabilities{};
  for (int i = 0; i < kJointSpaceSize; ++i) {
    if (e.weight(i).is_zero()) continue;
    probabilities[outcome_index(outcome_of(s, JointOnticState::decode(i)))] += e.weight(i);
  }

  std::vector<Branch> branches;
  for (int idx = 0; idx < 4; ++idx) {
    if (probabilities[idx].is_zero()) continue;
    const Outcome o = outcome_from_index(idx);
    branches.push_back(Branch{o, probabilities[idx], post_state_for(s, o, table)});
  }
  return branches;
}

std::vector<Branch> measure_elementary(Axis axis, const EpistemicState& e) {
  if (e.space() == Space::joint)
    throw std::invalid_argument("measure_elementary: elementary state required");
  const int subsystem = e.space() == Space::elementary1 ? 1 : 2;

  std::array<Rational, 2> probabilities{};
  for (int i = 0; i < kElementarySpaceSize; ++i) {
    if (e.weight(i).is_zero()) continue;
    const Sign v = OnticState::decode(i).coord(axis);
    probabilities[v == Sign::plus ? 0 : 1] += e.weight(i);
  }

  std::vector<Branch> branches;
  for (int idx = 0; idx < 2; ++idx) {
    if (probabilities[idx].is_zero()) continue;
    const Sign v = idx == 0 ? Sign::plus : Sign::minus;
    branches.push_back(Branch{Outcome{v, std::nullopt}, probabilities[idx],
                              canonical_state(elementary_name(axis, v), subsystem)});
  }
  return branches;
}

namespace {

// Unbiased index draw over exact branch probabilities: scale to a common
// denominator and rejection-sample a uniform integer below it.
std::size_t draw_branch(const std::vector<Branch>& branches, std::mt19937_64& rng) {
  std::uint64_t denom = 1;
  for (const auto& b : branches)
    denom = std::lcm(denom, static_cast<std::uint64_t>(b.probability.denominator()));

  const std::uint64_t limit = denom * ((~std::uint64_t{0}) / denom);
  std::uint64_t draw;
  do {
    draw = rng();
  } while (draw >= limit);
  std::uint64_t ticket = draw % denom;

  for (std::size_t i = 0; i < branches.size(); ++i) {
    const auto& p = branches[i].probability;
    const std::uint64_t weight =
        static_cast<std::uint64_t>(p.numerator()) * (denom / p.denominator());
    if (ticket < weight) return i;
    ticket -= weight;
  }
  throw std::logic_error("draw_branch: probabilities do not cover the ticket space");
}

}  // namespace

std::pair<Outcome, EpistemicState> sample(const MeasurementSetting& s,
                                          const EpistemicState& e, std::mt19937_64& rng,
                                          const NonlocalTable& table) {
  const auto branches = measure(s, e, table);
  const auto& chosen = branches[draw_branch(branches, rng)];
  return {chosen.outcome, chosen.post};
}

std::pair<Outcome, EpistemicState> sample_elementary(Axis axis, const EpistemicState& e,
                                                     std::mt19937_64& rng) {
  const auto branches = measure_elementary(axis, e);
  const auto& chosen = branches[draw_branch(branches, rng)];
  return {chosen.outcome, chosen.post};
}

}  // namespace mps
