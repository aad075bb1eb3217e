#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "mps/epistemic.hpp"

using namespace mps;
using enum CanonicalStateName;

namespace {

// Independent oracle: the support of each correlated state enumerated
// straight from its three coordinate (in)equality conditions, without going
// through parity profiles.
std::set<int> oracle_support(CanonicalStateName name) {
  std::set<int> out;
  for (int i = 0; i < kJointSpaceSize; ++i) {
    const JointOnticState w = JointOnticState::decode(i);
    const auto& a = w.first;
    const auto& b = w.second;
    bool member = false;
    switch (name) {
      case psi_plus:    member = a.x == b.x && a.y == b.y && a.z != b.z; break;
      case phi_plus:    member = a.x == b.x && a.y != b.y && a.z == b.z; break;
      case phi_minus:   member = a.x != b.x && a.y == b.y && a.z == b.z; break;
      case psi_minus:   member = a.x != b.x && a.y != b.y && a.z != b.z; break;
      case phi_i_plus:  member = a.x == b.y && a.y == b.x && a.z == b.z; break;
      case psi_i_minus: member = a.x == b.y && a.y != b.x && a.z != b.z; break;
      case psi_i_plus:  member = a.x != b.y && a.y == b.x && a.z != b.z; break;
      case phi_i_minus: member = a.x != b.y && a.y != b.x && a.z == b.z; break;
      default: REQUIRE(false);
    }
    if (member) out.insert(i);
  }
  return out;
}

const std::array<CanonicalStateName, 8> kJointNames = {
    psi_plus, phi_plus, phi_minus, psi_minus,
    phi_i_plus, psi_i_minus, psi_i_plus, phi_i_minus};

}  // namespace

TEST_CASE("rational arithmetic stays in lowest terms") {
  CHECK(Rational(2, 8) == Rational(1, 4));
  CHECK(Rational(1, 4) * Rational(1, 4) == Rational(1, 16));
  CHECK(Rational(1, 2) + Rational(1, 2) == Rational(1));
  CHECK(Rational(3, -6) == Rational(-1, 2));
  CHECK(Rational(1, 8).str() == "1/8");
  CHECK(Rational(1).str() == "1/1");
  CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
}

TEST_CASE("point states put weight one on the encoded index") {
  for (int i = 0; i < kJointSpaceSize; ++i) {
    const EpistemicState e = point_state(JointOnticState::decode(i));
    CHECK(e.support() == std::vector<int>{i});
    CHECK(e.weight(i) == Rational(1));
  }
}

TEST_CASE("weights must sum to one") {
  std::vector<Rational> weights(kJointSpaceSize, Rational(0));
  weights[0] = Rational(1, 2);
  CHECK_THROWS_AS(EpistemicState(Space::joint, weights), std::invalid_argument);
}

TEST_CASE("elementary canonical states are uniform quarters on a face") {
  const EpistemicState xp = canonical_state(x_plus);
  CHECK(xp.support_size() == 4);
  for (int i : xp.support()) {
    CHECK(OnticState::decode(i).x == Sign::plus);
    CHECK(xp.weight(i) == Rational(1, 4));
  }
  const EpistemicState zm = canonical_state(z_minus, 2);
  CHECK(zm.space() == Space::elementary2);
  for (int i : zm.support()) CHECK(OnticState::decode(i).z == Sign::minus);
}

TEST_CASE("correlated canonical states match the condition-enumeration oracle") {
  for (const auto name : kJointNames) {
    const EpistemicState e = canonical_state(name);
    const std::set<int> expected = oracle_support(name);
    CHECK(expected.size() == 8);
    const auto support = e.support();
    CHECK(std::set<int>(support.begin(), support.end()) == expected);
    for (int i : support) CHECK(e.weight(i) == Rational(1, 8));
  }
}

TEST_CASE("psi- contains the antipodal pair, phi_i+ the swap-matched pair") {
  const JointOnticState antipodal{{Sign::plus, Sign::plus, Sign::plus},
                                  {Sign::minus, Sign::minus, Sign::minus}};
  CHECK_FALSE(canonical_state(psi_minus).weight(antipodal.encode()).is_zero());

  const JointOnticState swap_matched{{Sign::plus, Sign::minus, Sign::plus},
                                     {Sign::minus, Sign::plus, Sign::plus}};
  CHECK_FALSE(canonical_state(phi_i_plus).weight(swap_matched.encode()).is_zero());
}

TEST_CASE("the two four-state families partition their 32-state halves") {
  std::set<int> direct_union, swapped_union;
  for (int k = 0; k < 4; ++k) {
    for (int i : canonical_state(kJointNames[k]).support())
      CHECK(direct_union.insert(i).second);  // pairwise disjoint
    for (int i : canonical_state(kJointNames[4 + k]).support())
      CHECK(swapped_union.insert(i).second);
  }
  CHECK(direct_union.size() == 32);
  CHECK(swapped_union.size() == 32);

  for (int i = 0; i < kJointSpaceSize; ++i) {
    const ParityProfile p = parity_profile(JointOnticState::decode(i));
    const auto minus_count = [](const std::array<Sign, 3>& v) {
      int n = 0;
      for (Sign s : v)
        if (s == Sign::minus) ++n;
      return n;
    };
    CHECK(direct_union.contains(i) == (minus_count(p.direct) % 2 == 1));
    CHECK(swapped_union.contains(i) == (minus_count(p.swapped) % 2 == 0));
  }
}

TEST_CASE("tensor of face states is the uniform sixteenth mixture") {
  const EpistemicState product =
      tensor(canonical_state(x_plus, 1), canonical_state(y_minus, 2));
  CHECK(product.support_size() == 16);
  for (int i : product.support()) {
    CHECK(product.weight(i) == Rational(1, 16));
    const JointOnticState w = JointOnticState::decode(i);
    CHECK(w.first.x == Sign::plus);
    CHECK(w.second.y == Sign::minus);
  }
}

TEST_CASE("tensor of points is the point of the pair") {
  const OnticState a{Sign::plus, Sign::minus, Sign::plus};
  const OnticState b{Sign::minus, Sign::minus, Sign::plus};
  CHECK(states_equal(tensor(point_state(a, 1), point_state(b, 2)),
                     point_state(JointOnticState{a, b})));
}

TEST_CASE("marginals of a tensor recover the factors") {
  const EpistemicState e1 = canonical_state(z_plus, 1);
  const EpistemicState e2 = canonical_state(x_minus, 2);
  const EpistemicState joint = tensor(e1, e2);
  CHECK(states_equal(marginal(joint, 1), e1));
  CHECK(states_equal(marginal(joint, 2), e2));
}

TEST_CASE("tensor rejects mismatched spaces") {
  CHECK_THROWS_AS(tensor(canonical_state(x_plus, 2), canonical_state(y_plus, 2)),
                  std::invalid_argument);
}

TEST_CASE("states_equal distinguishes the canonical states") {
  CHECK(states_equal(canonical_state(psi_plus), canonical_state(psi_plus)));
  CHECK_FALSE(states_equal(canonical_state(psi_plus), canonical_state(phi_plus)));
  CHECK_FALSE(states_equal(tensor(canonical_state(x_plus, 1), canonical_state(x_plus, 2)),
                           canonical_state(psi_plus)));
  CHECK_THROWS_AS(states_equal(canonical_state(x_plus, 1), canonical_state(psi_plus)),
                  std::invalid_argument);
}

TEST_CASE("canonical_name_of inverts canonical_state") {
  for (const auto name : kJointNames)
    CHECK(canonical_name_of(canonical_state(name)) == name);
  CHECK(canonical_name_of(canonical_state(y_minus)) == y_minus);
  CHECK_FALSE(canonical_name_of(point_state(JointOnticState::decode(0))).has_value());
}
