#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "mps/io.hpp"

using namespace mps;
using enum CanonicalStateName;

TEST_CASE("ontic literals round-trip") {
  for (int i = 0; i < kJointSpaceSize; ++i) {
    const JointOnticState w = JointOnticState::decode(i);
    CHECK(parse_joint_ontic(to_literal(w)) == w);
  }
  CHECK(to_literal(parse_joint_ontic("(+,-,+)x(+,+,-)")) == "(+,-,+)x(+,+,-)");
  CHECK_THROWS_AS(parse_joint_ontic("(+,-)x(+,+,-)"), ParseError);
  CHECK_THROWS_AS(parse_ontic("(+,0,+)"), ParseError);
}

TEST_CASE("setting literals round-trip") {
  for (const char* lit : {"X1&Y2", "Z1&Z2", "XX&YY", "ZZ&YY", "XY&ZZ", "Z@1", "X@2"}) {
    CHECK(to_literal(parse_setting(lit)) == lit);
  }
  CHECK(parse_setting("XX&YY").kind == MeasurementSetting::Kind::nonlocal);
  CHECK(parse_setting("X1X2&Y1Y2") == parse_setting("XX&YY"));
}

TEST_CASE("unlisted non-local settings are rejected at parse time") {
  CHECK_THROWS_AS(parse_setting("YY&XX"), ParseError);
  CHECK_THROWS_AS(parse_setting("ZX&ZZ"), ParseError);
  CHECK_THROWS_AS(parse_setting("bogus"), ParseError);
}

TEST_CASE("scenario files parse states, settings and comments") {
  std::istringstream in(
      "# demo\n"
      "\n"
      "(+,-,+)x(+,+,-) | XX&YY;ZZ&YY\n"
      "(+,+,+)x(+,+,+) |\n"
      "(+,-,+) | Z@1;X@1\n");
  const auto scenarios = parse_scenarios(in);
  REQUIRE(scenarios.size() == 3);
  CHECK(scenarios[0].settings.size() == 2);
  CHECK(scenarios[1].settings.empty());
  CHECK(scenarios[2].initial.space() == Space::elementary1);
  CHECK(scenarios[2].settings.size() == 2);
}

TEST_CASE("state JSON lists support only with exact rationals") {
  CHECK(state_json(point_state(JointOnticState::decode(5))) ==
        R"({"space":"joint","weights":{"5":"1/1"}})");
  const std::string psi = state_json(canonical_state(psi_minus));
  CHECK(psi.find("\"1/8\"") != std::string::npos);
  CHECK(psi.find("\"space\":\"joint\"") != std::string::npos);
}

TEST_CASE("post-state labels name canonical states and tensor products") {
  CHECK(post_state_label(canonical_state(phi_plus)) == "phi+");
  CHECK(post_state_label(canonical_state(psi_i_minus)) == "psi_i-");
  CHECK(post_state_label(tensor(canonical_state(x_plus, 1), canonical_state(y_minus, 2))) ==
        "x+*y-");
}

TEST_CASE("trace JSON is deterministic") {
  const auto settings = std::vector<MeasurementSetting>{parse_setting("XX&YY")};
  const auto traces =
      run_exact(point_state(parse_joint_ontic("(+,-,+)x(+,+,-)")), settings);
  const std::string text = traces_json(traces);
  CHECK(text ==
        R"json([{"probability":"1/1","steps":[{"setting":"XX&YY","outcome":"(+,-)","post":"phi+"}]}])json");
}

TEST_CASE("report JSON omits runtime unless requested") {
  VerificationReport r{"demo", "u", 3, true, {}, std::nullopt};
  CHECK(report_json(r).find("runtime_ms") == std::string::npos);
  r.runtime_ms = 1.5;
  CHECK(report_json(r).find("runtime_ms") != std::string::npos);
}

TEST_CASE("pretty re-indents without changing content") {
  const std::string compact = R"({"a":1,"b":[1,2]})";
  CHECK(pretty(compact, -1) == compact);
  const std::string wide = pretty(compact, 2);
  CHECK(wide.find("\n") != std::string::npos);
}
