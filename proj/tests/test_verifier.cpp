#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "mps/io.hpp"
#include "mps/verifier.hpp"

using namespace mps;

TEST_CASE("both table families are repeatable up to length 4") {
  for (const ContextId context : {ContextId::C3, ContextId::R3}) {
    const auto report = check_repeatability(
        context_info(context).family, context == ContextId::C3 ? "table1" : "table2", 4);
    CHECK(report.pass);
    CHECK(report.counterexamples.empty());
    CHECK(report.universe_size == 64 * (3 + 9 + 27 + 81));
  }
}

TEST_CASE("mixing XX&YY with local X&X breaks repeatability") {
  const std::vector<MeasurementSetting> family = {
      MeasurementSetting::nonlocal(NonlocalId::xx_yy),
      MeasurementSetting::local_pair(Axis::x, Axis::x)};
  const auto report = check_repeatability(family, "mixed", 3);
  CHECK_FALSE(report.pass);
  // Some counterexample flips Y1Y2 in a length <= 3 sequence.
  const bool has_yy_flip = std::any_of(
      report.counterexamples.begin(), report.counterexamples.end(),
      [](const Counterexample& ce) {
        return ce.observable == "Y1Y2" &&
               std::count(ce.sequence.begin(), ce.sequence.end(), ';') <= 2;
      });
  CHECK(has_yy_flip);
}

TEST_CASE("check_repeatability rejects max_len below 2") {
  CHECK_THROWS_AS(
      check_repeatability(context_info(ContextId::C3).family, "table1", 1),
      std::invalid_argument);
}

TEST_CASE("all 60 setting/outcome pairs re-measure deterministically") {
  const auto report = check_eigenstates();
  CHECK(report.pass);
  CHECK(report.universe_size == 60);
}

TEST_CASE("first measurements are faithful on every point state") {
  CHECK(check_faithfulness().pass);
}

TEST_CASE("canonical supports partition the parity halves") {
  CHECK(check_support_partition().pass);
}

TEST_CASE("square products are state-independent and order-insensitive") {
  const std::array<Sign, 6> expected = {Sign::plus, Sign::plus, Sign::plus,
                                        Sign::plus, Sign::plus, Sign::minus};
  for (int i = 0; i < kJointSpaceSize; ++i) {
    for (int order = 0; order < 6; ++order) {
      const SquareResult r = square_products(JointOnticState::decode(i), order);
      CHECK(r.products == expected);
      CHECK(r.witness == 6);
    }
  }
}

TEST_CASE("the demo state keeps the C3 product at -1 in both orders") {
  const JointOnticState demo{{Sign::plus, Sign::minus, Sign::plus},
                             {Sign::plus, Sign::plus, Sign::minus}};
  // Orders 1 and 4 run (XX&YY, ZZ&YY) and (ZZ&YY, XX&YY) for C3.
  for (int order : {1, 4}) {
    const SquareResult r = square_products(demo, order);
    CHECK(r.products[5] == Sign::minus);
  }
}

TEST_CASE("check_square passes and covers 64 x 6 runs") {
  const auto report = check_square();
  CHECK(report.pass);
  CHECK(report.universe_size == 64 * 6);
}

TEST_CASE("the mixed-family negative control finds its witness") {
  const auto report = check_mixed_family_incompatibility();
  CHECK(report.pass);
  CHECK(report.universe.find("Y1Y2") != std::string::npos);
}

TEST_CASE("a corrupted table is caught by the eigenstate sweep") {
  const NonlocalTable bad =
      NonlocalTable::standard().with_swapped_entries(NonlocalId::xx_yy, 1, 2);
  const auto report = check_eigenstates(bad);
  CHECK_FALSE(report.pass);
  CHECK_FALSE(report.counterexamples.empty());
}

TEST_CASE("exhaustive_verify is all-pass and byte-stable across worker counts") {
  const auto reports1 = exhaustive_verify(4, 1);
  CHECK(std::all_of(reports1.begin(), reports1.end(),
                    [](const VerificationReport& r) { return r.pass; }));
  const auto reports8 = exhaustive_verify(4, 8);
  CHECK(reports_json(reports1) == reports_json(reports8));
}

TEST_CASE("nonlocal_order covers the six ordered pairs") {
  std::set<std::string> seen;
  for (int k = 0; k < 6; ++k) {
    const auto order = nonlocal_order(ContextId::C3, k);
    CHECK_FALSE(order[0] == order[1]);
    seen.insert(to_literal(order[0]) + ";" + to_literal(order[1]));
  }
  CHECK(seen.size() == 6);
  CHECK_THROWS_AS(nonlocal_order(ContextId::R1, 0), std::invalid_argument);
  CHECK_THROWS_AS(nonlocal_order(ContextId::C3, 6), std::invalid_argument);
}
