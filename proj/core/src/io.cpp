#include "mps/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace mps {

using ordered_json = nlohmann::ordered_json;

std::string to_literal(Sign s) { return std::string(1, sign_char(s)); }

std::string to_literal(const OnticState& w) {
  std::string out = "(";
  out += sign_char(w.x);
  out += ',';
  out += sign_char(w.y);
  out += ',';
  out += sign_char(w.z);
  out += ')';
  return out;
}

std::string to_literal(const JointOnticState& w) {
  return to_literal(w.first) + "x" + to_literal(w.second);
}

std::string to_literal(const Observable& obs) {
  std::string out;
  if (obs.kind == Observable::Kind::single) {
    out += axis_char(obs.axis1);
    out += static_cast<char>('0' + obs.subsystem);
  } else {
    out += axis_char(obs.axis1);
    out += '1';
    out += axis_char(obs.axis2);
    out += '2';
  }
  return out;
}

std::string to_literal(const MeasurementSetting& s) {
  switch (s.kind) {
    case MeasurementSetting::Kind::elementary:
      return std::string(1, axis_char(s.axis1)) + "@" +
             static_cast<char>('0' + s.subsystem);
    case MeasurementSetting::Kind::local_pair:
      return std::string(1, axis_char(s.axis1)) + "1&" + axis_char(s.axis2) + "2";
    case MeasurementSetting::Kind::nonlocal: {
      const auto observables = s.measured_observables();
      auto pair_token = [](const Observable& o) {
        return std::string(1, axis_char(o.axis1)) + axis_char(o.axis2);
      };
      return pair_token(observables[0]) + "&" + pair_token(observables[1]);
    }
  }
  throw std::logic_error("bad setting kind");
}

std::string to_literal(const Outcome& o) {
  if (!o.second) return std::string(1, sign_char(o.first));
  return std::string("(") + sign_char(o.first) + "," + sign_char(*o.second) + ")";
}

namespace {

Sign parse_sign(char c, const std::string& context) {
  if (c == '+') return Sign::plus;
  if (c == '-') return Sign::minus;
  throw ParseError("expected '+' or '-' in " + context);
}

Axis parse_axis(char c, const std::string& context) {
  switch (c) {
    case 'X': case 'x': return Axis::x;
    case 'Y': case 'y': return Axis::y;
    case 'Z': case 'z': return Axis::z;
    default: throw ParseError("expected axis X/Y/Z in " + context);
  }
}

std::string strip(const std::string& text) {
  const auto begin = text.find_first_not_of(" \t\r\n");
  if (begin == std::string::npos) return "";
  const auto end = text.find_last_not_of(" \t\r\n");
  return text.substr(begin, end - begin + 1);
}

}  // namespace

OnticState parse_ontic(const std::string& text) {
  // "(+,-,+)"
  const std::string t = strip(text);
  if (t.size() != 7 || t[0] != '(' || t[2] != ',' || t[4] != ',' || t[6] != ')')
    throw ParseError("malformed ontic state literal: " + text);
  return OnticState{parse_sign(t[1], text), parse_sign(t[3], text), parse_sign(t[5], text)};
}

JointOnticState parse_joint_ontic(const std::string& text) {
  const std::string t = strip(text);
  const auto sep = t.find(")x(");
  if (sep == std::string::npos)
    throw ParseError("malformed joint state literal: " + text);
  return JointOnticState{parse_ontic(t.substr(0, sep + 1)), parse_ontic(t.substr(sep + 2))};
}

MeasurementSetting parse_setting(const std::string& text) {
  const std::string t = strip(text);
  if (const auto at = t.find('@'); at != std::string::npos) {
    // "Z@1"
    if (at != 1 || t.size() != 3 || (t[2] != '1' && t[2] != '2'))
      throw ParseError("malformed elementary setting: " + text);
    return MeasurementSetting::elementary(t[2] - '0', parse_axis(t[0], text));
  }
  const auto amp = t.find('&');
  if (amp == std::string::npos)
    throw ParseError("malformed setting literal: " + text);
  const std::string lhs = strip(t.substr(0, amp));
  const std::string rhs = strip(t.substr(amp + 1));
  if (lhs.size() == 2 && lhs[1] == '1' && rhs.size() == 2 && rhs[1] == '2') {
    // "X1&Y2"
    return MeasurementSetting::local_pair(parse_axis(lhs[0], text), parse_axis(rhs[0], text));
  }
  auto parse_product = [&](const std::string& token) {
    // "XX" shorthand or explicit "X1Y2"
    if (token.size() == 2)
      return Observable::product(parse_axis(token[0], text), parse_axis(token[1], text));
    if (token.size() == 4 && token[1] == '1' && token[3] == '2')
      return Observable::product(parse_axis(token[0], text), parse_axis(token[2], text));
    throw ParseError("malformed product observable '" + token + "' in " + text);
  };
  const auto setting =
      MeasurementSetting::nonlocal_pair(parse_product(lhs), parse_product(rhs));
  if (!setting)
    throw ParseError("non-local setting '" + t +
                     "' is not one of the six defined settings; "
                     "the model assigns no post-measurement states to it");
  return *setting;
}

std::vector<Scenario> parse_scenarios(std::istream& in) {
  std::vector<Scenario> scenarios;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string t = strip(line);
    if (t.empty() || t[0] == '#') continue;
    const auto bar = t.find('|');
    if (bar == std::string::npos)
      throw ParseError("line " + std::to_string(line_no) + ": expected '|' separator");
    const std::string state_text = strip(t.substr(0, bar));

    EpistemicState initial = [&] {
      if (state_text.find(")x(") != std::string::npos)
        return point_state(parse_joint_ontic(state_text));
      return point_state(parse_ontic(state_text), 1);
    }();

    std::vector<MeasurementSetting> settings;
    std::string rest = strip(t.substr(bar + 1));
    while (!rest.empty()) {
      const auto semi = rest.find(';');
      const std::string token = strip(rest.substr(0, semi));
      if (!token.empty()) settings.push_back(parse_setting(token));
      if (semi == std::string::npos) break;
      rest = strip(rest.substr(semi + 1));
    }
    scenarios.push_back(Scenario{std::move(initial), state_text, std::move(settings)});
  }
  return scenarios;
}

std::vector<Scenario> parse_scenario_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open scenario file: " + path);
  return parse_scenarios(in);
}

namespace {

ordered_json state_to_json(const EpistemicState& e) {
  ordered_json weights = ordered_json::object();
  for (int i : e.support()) weights[std::to_string(i)] = e.weight(i).str();
  const char* space = e.space() == Space::joint
                          ? "joint"
                          : (e.space() == Space::elementary1 ? "elementary1" : "elementary2");
  return ordered_json{{"space", space}, {"weights", std::move(weights)}};
}

ordered_json trace_to_json(const Trace& t) {
  ordered_json steps = ordered_json::array();
  for (const auto& step : t.steps) {
    steps.push_back(ordered_json{{"setting", to_literal(step.setting)},
                                 {"outcome", to_literal(step.outcome)},
                                 {"post", post_state_label(step.post)}});
  }
  return ordered_json{{"probability", t.probability.str()}, {"steps", std::move(steps)}};
}

ordered_json report_to_json(const VerificationReport& r) {
  ordered_json counterexamples = ordered_json::array();
  for (const auto& ce : r.counterexamples) {
    counterexamples.push_back(ordered_json{{"initial", ce.initial_index},
                                           {"sequence", ce.sequence},
                                           {"observable", ce.observable},
                                           {"values", ce.values}});
  }
  ordered_json out{{"check", r.check},
                   {"universe", r.universe},
                   {"universe_size", r.universe_size},
                   {"pass", r.pass},
                   {"counterexamples", std::move(counterexamples)}};
  if (r.runtime_ms) out["runtime_ms"] = *r.runtime_ms;
  return out;
}

}  // namespace

std::string state_json(const EpistemicState& e) { return state_to_json(e).dump(); }

std::string post_state_label(const EpistemicState& e) {
  if (const auto name = canonical_name_of(e)) return to_string(*name);
  if (e.space() == Space::joint) {
    // Product of canonical face states, as left by a local pair measurement.
    const auto m1 = marginal(e, 1);
    const auto m2 = marginal(e, 2);
    const auto n1 = canonical_name_of(m1);
    const auto n2 = canonical_name_of(m2);
    if (n1 && n2 && states_equal(e, tensor(m1, m2)))
      return to_string(*n1) + "*" + to_string(*n2);
  }
  return state_json(e);
}

std::string trace_json(const Trace& t) { return trace_to_json(t).dump(); }

std::string traces_json(const std::vector<Trace>& traces) {
  ordered_json arr = ordered_json::array();
  for (const auto& t : traces) arr.push_back(trace_to_json(t));
  return arr.dump();
}

std::string report_json(const VerificationReport& r) { return report_to_json(r).dump(); }

std::string reports_json(const std::vector<VerificationReport>& reports) {
  ordered_json arr = ordered_json::array();
  for (const auto& r : reports) arr.push_back(report_to_json(r));
  return arr.dump();
}

std::string square_result_json(const SquareResult& r) {
  ordered_json products = ordered_json::object();
  for (std::size_t i = 0; i < kAllContexts.size(); ++i)
    products[to_string(kAllContexts[i])] = to_int(r.products[i]);
  return ordered_json{{"products", std::move(products)},
                      {"witness", r.witness},
                      {"noncontextual_bound", kNoncontextualBound},
                      {"bound_source", "external"}}
      .dump();
}

std::string pretty(const std::string& json_text, int indent) {
  if (indent < 0) return json_text;
  return ordered_json::parse(json_text).dump(indent);
}

}  // namespace mps
