#pragma once

#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "cdock/greedy.hpp"
#include "cdock/pd2.hpp"
#include "cdock/schedule.hpp"

namespace cdock {

// Start times are 0-based time units; array position k is operation k+1.
// {"makespan": M, "start_a": [...], "start_b": [...]}
nlohmann::json schedule_to_json(const Schedule& sched);

// A schedule read back from file together with the makespan it declares.
struct ScheduleFile {
  Schedule schedule;
  int declared_makespan = 0;
};

// Throws ParseError on malformed JSON or missing/mistyped fields.
ScheduleFile schedule_from_json(std::string_view text);

// All BoundsReport fields; ratio_bound as [numerator, denominator].
nlohmann::json bounds_to_json(const BoundsReport& report);

// Events as tagged records with 1-based indices:
//   {"kind": "zero", "b": 1}
//   {"kind": "deg", "b": 4, "picked_degree": 1, "a_batch": [4]}
nlohmann::json trace_to_json(const Pd2Trace& trace);

// [{"label", "a_ops", "b_ops", "offset_len", "overhang_len"}, ...], 1-based.
nlohmann::json blocks_to_json(const std::vector<Block>& blocks);

}  // namespace cdock
