#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "mps/verifier.hpp"

namespace mps {

// --- Text literals --------------------------------------------------------
// Ontic states: "(+,-,+)" elementary, "(+,-,+)x(+,+,-)" joint (x,y,z order).
// Settings: "X1&Y2" local pair, "XX&YY" non-local, "Z@1" elementary.

std::string to_literal(Sign s);
std::string to_literal(const OnticState& w);
std::string to_literal(const JointOnticState& w);
std::string to_literal(const Observable& obs);
std::string to_literal(const MeasurementSetting& s);
std::string to_literal(const Outcome& o);

/// Thrown on any malformed literal or scenario line.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

OnticState parse_ontic(const std::string& text);
JointOnticState parse_joint_ontic(const std::string& text);
MeasurementSetting parse_setting(const std::string& text);

// --- Scenario files -------------------------------------------------------
// One scenario per line: "<state-literal> | <setting>;<setting>;..."
// Blank lines and lines starting with '#' are skipped. The setting list may
// be empty (a run with no measurements).

struct Scenario {
  EpistemicState initial;
  std::string initial_literal;
  std::vector<MeasurementSetting> settings;
};

std::vector<Scenario> parse_scenarios(std::istream& in);
std::vector<Scenario> parse_scenario_file(const std::string& path);

// --- JSON serialization ----------------------------------------------------
// All builders return compact deterministic JSON strings (fixed key order,
// support-only weight maps, exact rationals as "num/den").

std::string state_json(const EpistemicState& e);

/// Canonical states appear by name, tensor products as "<a>*<b>", anything
/// else by its support.
std::string post_state_label(const EpistemicState& e);

std::string trace_json(const Trace& t);
std::string traces_json(const std::vector<Trace>& traces);
std::string report_json(const VerificationReport& r);
std::string reports_json(const std::vector<VerificationReport>& reports);
std::string square_result_json(const SquareResult& r);

/// Re-indents a JSON document; indent < 0 keeps it compact.
std::string pretty(const std::string& json_text, int indent);

}  // namespace mps
