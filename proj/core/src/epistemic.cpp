#include "mps/epistemic.hpp"

#include <algorithm>
#include <stdexcept>

namespace mps {

EpistemicState::EpistemicState(Space space, std::vector<Rational> weights)
    : space_(space), weights_(std::move(weights)) {
  if (static_cast<int>(weights_.size()) != space_size(space_))
    throw std::invalid_argument("EpistemicState: weight vector size mismatch");
  Rational total;
  for (const auto& w : weights_) {
    if (w < Rational(0)) throw std::invalid_argument("EpistemicState: negative weight");
    total += w;
  }
  if (total != Rational(1))
    throw std::invalid_argument("EpistemicState: weights must sum to 1, got " + total.str());
}

std::vector<int> EpistemicState::support() const {
  std::vector<int> out;
  for (int i = 0; i < size(); ++i)
    if (!weights_[i].is_zero()) out.push_back(i);
  return out;
}

int EpistemicState::support_size() const {
  return static_cast<int>(std::count_if(weights_.begin(), weights_.end(),
                                        [](const Rational& w) { return !w.is_zero(); }));
}

EpistemicState point_state(const JointOnticState& w) {
  std::vector<Rational> weights(kJointSpaceSize, Rational(0));
  weights[w.encode()] = Rational(1);
  return EpistemicState(Space::joint, std::move(weights));
}

EpistemicState point_state(const OnticState& w, int subsystem) {
  if (subsystem != 1 && subsystem != 2)
    throw std::invalid_argument("point_state: subsystem must be 1 or 2");
  std::vector<Rational> weights(kElementarySpaceSize, Rational(0));
  weights[w.encode()] = Rational(1);
  return EpistemicState(subsystem == 1 ? Space::elementary1 : Space::elementary2,
                        std::move(weights));
}

JointStatePattern joint_state_pattern(CanonicalStateName name) {
  using enum CanonicalStateName;
  switch (name) {
    // x1=x2, y1=y2, z1!=z2 and friends.
    case psi_plus:    return {false, {Sign::plus, Sign::plus, Sign::minus}};
    case phi_plus:    return {false, {Sign::plus, Sign::minus, Sign::plus}};
    case phi_minus:   return {false, {Sign::minus, Sign::plus, Sign::plus}};
    case psi_minus:   return {false, {Sign::minus, Sign::minus, Sign::minus}};
    // x1=y2, y1=x2, z1=z2 and friends.
    case phi_i_plus:  return {true, {Sign::plus, Sign::plus, Sign::plus}};
    case psi_i_minus: return {true, {Sign::plus, Sign::minus, Sign::minus}};
    case psi_i_plus:  return {true, {Sign::minus, Sign::plus, Sign::minus}};
    case phi_i_minus: return {true, {Sign::minus, Sign::minus, Sign::plus}};
    default:
      throw std::invalid_argument("joint_state_pattern: not a joint state name");
  }
}

EpistemicState canonical_state(CanonicalStateName name, int subsystem) {
  if (is_elementary_name(name)) {
    const int raw = static_cast<int>(name);
    const Axis axis = static_cast<Axis>(raw / 2);
    const Sign value = raw % 2 == 0 ? Sign::plus : Sign::minus;
    std::vector<Rational> weights(kElementarySpaceSize, Rational(0));
    for (int i = 0; i < kElementarySpaceSize; ++i)
      if (OnticState::decode(i).coord(axis) == value) weights[i] = Rational(1, 4);
    if (subsystem != 1 && subsystem != 2)
      throw std::invalid_argument("canonical_state: subsystem must be 1 or 2");
    return EpistemicState(subsystem == 1 ? Space::elementary1 : Space::elementary2,
                          std::move(weights));
  }
  const JointStatePattern pat = joint_state_pattern(name);
  std::vector<Rational> weights(kJointSpaceSize, Rational(0));
  for (int i = 0; i < kJointSpaceSize; ++i) {
    const ParityProfile prof = parity_profile(JointOnticState::decode(i));
    if ((pat.swapped ? prof.swapped : prof.direct) == pat.pattern)
      weights[i] = Rational(1, 8);
  }
  return EpistemicState(Space::joint, std::move(weights));
}

std::optional<CanonicalStateName> canonical_name_of(const EpistemicState& e) {
  using enum CanonicalStateName;
  static constexpr CanonicalStateName kAll[] = {
      x_plus, x_minus, y_plus, y_minus, z_plus, z_minus,
      psi_plus, phi_plus, phi_minus, psi_minus,
      phi_i_plus, psi_i_minus, psi_i_plus, phi_i_minus};
  for (CanonicalStateName name : kAll) {
    if (is_elementary_name(name)) {
      if (e.space() == Space::joint) continue;
      const int sub = e.space() == Space::elementary1 ? 1 : 2;
      if (e == canonical_state(name, sub)) return name;
    } else {
      if (e.space() != Space::joint) continue;
      if (e == canonical_state(name)) return name;
    }
  }
  return std::nullopt;
}

std::string to_string(CanonicalStateName name) {
  using enum CanonicalStateName;
  switch (name) {
    case x_plus: return "x+";
    case x_minus: return "x-";
    case y_plus: return "y+";
    case y_minus: return "y-";
    case z_plus: return "z+";
    case z_minus: return "z-";
    case psi_plus: return "psi+";
    case psi_minus: return "psi-";
    case phi_plus: return "phi+";
    case phi_minus: return "phi-";
    case psi_i_plus: return "psi_i+";
    case psi_i_minus: return "psi_i-";
    case phi_i_plus: return "phi_i+";
    case phi_i_minus: return "phi_i-";
  }
  throw std::logic_error("to_string: bad canonical state name");
}

EpistemicState tensor(const EpistemicState& e1, const EpistemicState& e2) {
  if (e1.space() != Space::elementary1 || e2.space() != Space::elementary2)
    throw std::invalid_argument("tensor: arguments must be on elementary spaces 1 and 2");
  std::vector<Rational> weights(kJointSpaceSize, Rational(0));
  for (int i = 0; i < kElementarySpaceSize; ++i) {
    if (e1.weight(i).is_zero()) continue;
    for (int j = 0; j < kElementarySpaceSize; ++j)
      weights[(i << 3) | j] = e1.weight(i) * e2.weight(j);
  }
  return EpistemicState(Space::joint, std::move(weights));
}

bool states_equal(const EpistemicState& a, const EpistemicState& b) {
  if (a.space() != b.space())
    throw std::invalid_argument("states_equal: space mismatch");
  return a.weights() == b.weights();
}

EpistemicState marginal(const EpistemicState& joint, int subsystem) {
  if (joint.space() != Space::joint)
    throw std::invalid_argument("marginal: joint state required");
  std::vector<Rational> weights(kElementarySpaceSize, Rational(0));
  for (int i = 0; i < kJointSpaceSize; ++i) {
    const int idx = subsystem == 1 ? (i >> 3) : (i & 7);
    weights[idx] += joint.weight(i);
  }
  return EpistemicState(subsystem == 1 ? Space::elementary1 : Space::elementary2,
                        std::move(weights));
}

const std::array<Observable, 11>& observable_catalog() {
  static const std::array<Observable, 11> catalog = {
      Observable::single(1, Axis::x), Observable::single(1, Axis::y),
      Observable::single(1, Axis::z), Observable::single(2, Axis::x),
      Observable::single(2, Axis::y), Observable::single(2, Axis::z),
      Observable::product(Axis::x, Axis::x), Observable::product(Axis::y, Axis::y),
      Observable::product(Axis::z, Axis::z), Observable::product(Axis::x, Axis::y),
      Observable::product(Axis::y, Axis::x)};
  return catalog;
}

bool in_catalog(const Observable& obs) {
  const auto& catalog = observable_catalog();
  return std::find(catalog.begin(), catalog.end(), obs) != catalog.end();
}

}  // namespace mps
