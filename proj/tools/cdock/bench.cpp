#include "bench.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <map>
#include <sstream>

#include "cdock/error.hpp"
#include "cdock/exact.hpp"
#include "cdock/greedy.hpp"
#include "cdock/instance.hpp"
#include "cdock/pd2.hpp"

namespace cdock::cli {

namespace {

const std::vector<std::string> kColumns{
    "instance", "n", "m", "arcs", "algorithm", "makespan", "lower_bound",
    "lower_bound_printed", "greedy_upper", "ratio", "ratio_ref", "ratio_bound",
    "wall_time_ms", "flag"};

std::vector<std::string> cells(const BenchRow& row) {
  std::ostringstream ms;
  ms << std::fixed << std::setprecision(3) << row.wall_time_ms;
  return {row.instance_name,
          std::to_string(row.n),
          std::to_string(row.m),
          std::to_string(row.arc_count),
          row.algorithm,
          std::to_string(row.makespan),
          std::to_string(row.lower_bound),
          std::to_string(row.lower_bound_printed),
          row.greedy_upper ? std::to_string(*row.greedy_upper) : "",
          row.ratio.str(),
          row.ratio_reference,
          row.ratio_bound.str(),
          ms.str(),
          row.flag};
}

std::string csv_field(const std::string& field) {
  if (field.find_first_of(",\"\r\n") == std::string::npos) return field;
  std::string quoted = "\"";
  for (char ch : field) {
    if (ch == '"') quoted += '"';
    quoted += ch;
  }
  return quoted + '"';
}

std::string md_field(const std::string& field) {
  std::string out;
  for (char ch : field) {
    if (ch == '|') out += '\\';
    out += ch;
  }
  return out;
}

template <class F>
std::pair<int, double> timed(F&& solve) {
  const auto start = std::chrono::steady_clock::now();
  const int result = solve();
  const auto stop = std::chrono::steady_clock::now();
  return {result, std::chrono::duration<double, std::milli>(stop - start).count()};
}

}  // namespace

std::vector<BenchRow> run_bench(const BenchOptions& options, std::ostream& notes) {
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(options.dir)) {
    if (!entry.is_regular_file()) continue;
    if (entry.path().filename().string().starts_with(".")) continue;
    files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end(),
            [](const auto& x, const auto& y) { return x.filename() < y.filename(); });

  std::vector<std::string> algorithms = options.algorithms;
  std::sort(algorithms.begin(), algorithms.end());
  algorithms.erase(std::unique(algorithms.begin(), algorithms.end()), algorithms.end());

  std::vector<BenchRow> rows;
  for (const auto& path : files) {
    const std::string name = path.filename().string();
    std::ifstream in(path);
    std::optional<Instance> parsed;
    try {
      if (!in) throw Error("cannot open file");
      parsed.emplace(parse_instance(in));
    } catch (const Error& e) {
      notes << "note: skipping " << name << ": " << e.what() << '\n';
      continue;
    }
    const Instance& inst = *parsed;
    const BoundsReport bounds = bounds_report(inst);

    // Exact runs first so the other rows can be compared with the optimum.
    std::map<std::string, std::pair<int, double>> results;
    std::optional<int> optimum;
    const bool want_exact =
        std::find(algorithms.begin(), algorithms.end(), "exact") != algorithms.end();
    if (want_exact) {
      if (inst.n() > options.exact_limit) {
        notes << "note: skipping exact on " << name << ": n=" << inst.n()
              << " exceeds limit " << options.exact_limit << '\n';
      } else {
        results["exact"] = timed([&] { return solve_exact(inst, options.exact_limit).optimal_makespan; });
        optimum = results["exact"].first;
      }
    }
    for (const std::string& alg : algorithms) {
      if (alg == "greedy") {
        results[alg] = timed([&] { return makespan(solve_greedy(inst)); });
      } else if (alg == "pd2") {
        if (!classify(inst).is_d2) {
          notes << "note: skipping pd2 on " << name << ": not D2\n";
          continue;
        }
        results[alg] = timed([&] { return makespan(solve_pd2(inst).schedule); });
      }
    }

    std::string flag;
    if (bounds.printed_exceeds_corrected()) {
      flag = optimum && bounds.lower_bound_printed > *optimum ? "printed-lb-exceeds-opt"
                                                              : "printed-lb-above-corrected";
    }
    for (const std::string& alg : algorithms) {
      const auto it = results.find(alg);
      if (it == results.end()) continue;
      BenchRow row;
      row.instance_name = name;
      row.n = inst.n();
      row.m = inst.m();
      row.arc_count = inst.arc_count();
      row.algorithm = alg;
      row.makespan = it->second.first;
      row.wall_time_ms = it->second.second;
      row.lower_bound = bounds.lower_bound;
      row.lower_bound_printed = bounds.lower_bound_printed;
      if (alg == "greedy") row.greedy_upper = bounds.greedy_upper;
      row.ratio_reference = optimum ? "opt" : "lb";
      row.ratio = Rational(row.makespan, optimum ? *optimum : bounds.lower_bound);
      row.ratio_bound = bounds.ratio_bound;
      row.flag = flag;
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

std::string format_csv(const std::vector<BenchRow>& rows) {
  std::ostringstream out;
  auto emit = [&](const std::vector<std::string>& fields) {
    for (std::size_t k = 0; k < fields.size(); ++k) {
      if (k) out << ',';
      out << csv_field(fields[k]);
    }
    out << "\r\n";
  };
  emit(kColumns);
  for (const BenchRow& row : rows) emit(cells(row));
  return out.str();
}

std::string format_markdown(const std::vector<BenchRow>& rows) {
  std::ostringstream out;
  auto emit = [&](const std::vector<std::string>& fields) {
    out << '|';
    for (const std::string& field : fields) out << ' ' << md_field(field) << " |";
    out << '\n';
  };
  emit(kColumns);
  out << '|';
  for (std::size_t k = 0; k < kColumns.size(); ++k) out << " --- |";
  out << '\n';
  for (const BenchRow& row : rows) emit(cells(row));
  return out.str();
}

}  // namespace cdock::cli
