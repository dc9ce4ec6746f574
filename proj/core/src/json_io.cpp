#include "cdock/json_io.hpp"

#include <string>

#include "cdock/error.hpp"

namespace cdock {

using nlohmann::json;

namespace {

json one_based(const std::vector<int>& ids) {
  json out = json::array();
  for (int id : ids) out.push_back(id + 1);
  return out;
}

std::vector<int> int_array(const json& doc, const char* key) {
  if (!doc.contains(key) || !doc[key].is_array()) {
    throw ParseError(std::string("schedule needs an integer array \"") + key + "\"", 0);
  }
  std::vector<int> out;
  for (const json& v : doc[key]) {
    if (!v.is_number_integer()) {
      throw ParseError(std::string("non-integer entry in \"") + key + "\"", 0);
    }
    out.push_back(v.get<int>());
  }
  return out;
}

}  // namespace

json schedule_to_json(const Schedule& sched) {
  return json{{"makespan", makespan(sched)},
              {"start_a", sched.start_a},
              {"start_b", sched.start_b}};
}

ScheduleFile schedule_from_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed schedule JSON: ") + e.what(), 0);
  }
  if (!doc.is_object()) throw ParseError("schedule JSON must be an object", 0);
  if (!doc.contains("makespan") || !doc["makespan"].is_number_integer()) {
    throw ParseError("schedule needs an integer \"makespan\"", 0);
  }
  ScheduleFile file;
  file.declared_makespan = doc["makespan"].get<int>();
  file.schedule.start_a = int_array(doc, "start_a");
  file.schedule.start_b = int_array(doc, "start_b");
  return file;
}

json bounds_to_json(const BoundsReport& report) {
  return json{{"q", report.q},
              {"d_min_a", report.d_min_a},
              {"d_min_b", report.d_min_b},
              {"lower_bound", report.lower_bound},
              {"lower_bound_printed", report.lower_bound_printed},
              {"greedy_upper", report.greedy_upper},
              {"ratio_bound", {report.ratio_bound.num(), report.ratio_bound.den()}}};
}

json trace_to_json(const Pd2Trace& trace) {
  json events = json::array();
  for (const Pd2Event& event : trace.events) {
    if (const auto* zero = std::get_if<ZeroPick>(&event)) {
      events.push_back({{"kind", "zero"}, {"b", zero->b + 1}});
    } else {
      const auto& pick = std::get<DegPick>(event);
      events.push_back({{"kind", "deg"},
                        {"b", pick.b + 1},
                        {"picked_degree", pick.picked_degree},
                        {"a_batch", one_based(pick.a_batch)}});
    }
  }
  return events;
}

json blocks_to_json(const std::vector<Block>& blocks) {
  json out = json::array();
  for (const Block& block : blocks) {
    out.push_back({{"label", block.label},
                   {"a_ops", one_based(block.a_ops)},
                   {"b_ops", one_based(block.b_ops)},
                   {"offset_len", block.offset_len},
                   {"overhang_len", block.overhang_len}});
  }
  return out;
}

}  // namespace cdock
