#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mps/model.hpp"
#include "mps/rational.hpp"

namespace mps {

enum class Space : std::uint8_t { elementary1, elementary2, joint };

constexpr int space_size(Space s) {
  return s == Space::joint ? kJointSpaceSize : kElementarySpaceSize;
}

/// Exact probability distribution over an ontic space (dense: the spaces
/// have 8 or 64 points). Immutable after construction; weights must sum to
/// exactly one.
class EpistemicState {
 public:
  EpistemicState(Space space, std::vector<Rational> weights);

  Space space() const { return space_; }
  int size() const { return static_cast<int>(weights_.size()); }
  const Rational& weight(int index) const { return weights_.at(index); }
  const std::vector<Rational>& weights() const { return weights_; }

  /// Indices with nonzero weight, ascending.
  std::vector<int> support() const;
  int support_size() const;

  friend bool operator==(const EpistemicState&, const EpistemicState&) = default;

 private:
  Space space_;
  std::vector<Rational> weights_;
};

/// Extremal state: the system is definitely in the given ontic state.
EpistemicState point_state(const JointOnticState& w);
EpistemicState point_state(const OnticState& w, int subsystem);

/// The named post-measurement states: six face states of the elementary
/// cube, four correlated states defined on direct coordinate (in)equalities
/// and four on the swapped ones.
enum class CanonicalStateName : std::uint8_t {
  x_plus, x_minus, y_plus, y_minus, z_plus, z_minus,   // elementary
  psi_plus, phi_plus, phi_minus, psi_minus,            // direct pattern
  phi_i_plus, psi_i_minus, psi_i_plus, phi_i_minus,    // swapped pattern
};

constexpr bool is_elementary_name(CanonicalStateName n) {
  return static_cast<int>(n) < 6;
}
constexpr CanonicalStateName elementary_name(Axis a, Sign s) {
  return static_cast<CanonicalStateName>(2 * static_cast<int>(a) +
                                         (s == Sign::plus ? 0 : 1));
}

/// For the eight joint names: which profile ("direct" or "swapped") defines
/// the state and the required pattern of coordinate products (+1 = equal).
struct JointStatePattern {
  bool swapped;
  std::array<Sign, 3> pattern;
};
JointStatePattern joint_state_pattern(CanonicalStateName name);

/// Builds the named state. Elementary names live on subsystem 1 by default;
/// pass subsystem = 2 for the other factor. Joint names ignore the argument.
EpistemicState canonical_state(CanonicalStateName name, int subsystem = 1);

/// Reverse lookup used when reporting traces; empty for non-canonical states.
std::optional<CanonicalStateName> canonical_name_of(const EpistemicState& e);

std::string to_string(CanonicalStateName name);

/// Product distribution on the joint space from states on the two factors.
EpistemicState tensor(const EpistemicState& e1, const EpistemicState& e2);

/// Exact equality on the same space; throws on space mismatch.
bool states_equal(const EpistemicState& a, const EpistemicState& b);

/// Marginal of a joint state onto one subsystem.
EpistemicState marginal(const EpistemicState& joint, int subsystem);

}  // namespace mps
