#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "cdock/rational.hpp"

namespace cdock::cli {

struct BenchRow {
  std::string instance_name;
  int n = 0;
  int m = 0;
  std::size_t arc_count = 0;
  std::string algorithm;
  int makespan = 0;
  int lower_bound = 0;
  int lower_bound_printed = 0;
  std::optional<int> greedy_upper;  // greedy rows only
  Rational ratio;                   // makespan / ratio_reference
  std::string ratio_reference;      // "opt" when exact ran, else "lb"
  Rational ratio_bound;
  double wall_time_ms = 0.0;
  std::string flag;
};

struct BenchOptions {
  std::filesystem::path dir;
  std::vector<std::string> algorithms;
  int exact_limit = 10;
};

// One row per (instance, algorithm), ordered by file name then algorithm name.
// Skipped combinations and unreadable files are reported on `notes`.
std::vector<BenchRow> run_bench(const BenchOptions& options, std::ostream& notes);

std::string format_csv(const std::vector<BenchRow>& rows);
std::string format_markdown(const std::vector<BenchRow>& rows);

}  // namespace cdock::cli
