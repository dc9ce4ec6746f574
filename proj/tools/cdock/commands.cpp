#include "commands.hpp"

#include <charconv>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "bench.hpp"
#include "cdock/error.hpp"
#include "cdock/exact.hpp"
#include "cdock/generators.hpp"
#include "cdock/greedy.hpp"
#include "cdock/instance.hpp"
#include "cdock/json_io.hpp"
#include "cdock/pd2.hpp"

namespace cdock::cli {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out || !(out << contents) || !out.flush()) throw Error("cannot write " + path);
}

Instance load_instance(const std::string& path) {
  try {
    return parse_instance(read_file(path));
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what(), 0);
  }
}

// "p/q" or a decimal such as "0.25".
Rational parse_probability(const std::string& text) {
  const auto slash = text.find('/');
  std::int64_t num = 0;
  std::int64_t den = 1;
  auto parse_int = [&](std::string_view s, std::int64_t& value) {
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    return ec == std::errc() && ptr == s.data() + s.size() && !s.empty();
  };
  bool ok = false;
  if (slash != std::string::npos) {
    ok = parse_int(std::string_view(text).substr(0, slash), num) &&
         parse_int(std::string_view(text).substr(slash + 1), den) && den > 0;
  } else {
    const auto dot = text.find('.');
    std::string digits = text;
    if (dot != std::string::npos) {
      digits.erase(dot, 1);
      for (std::size_t k = dot; k < text.size() - 1; ++k) den *= 10;
    }
    ok = text.size() <= 18 && parse_int(digits, num);
  }
  if (!ok) throw PreconditionError("cannot parse probability \"" + text + "\"");
  const Rational p(num, den);
  if (p < Rational(0, 1) || p > Rational(1, 1)) {
    throw PreconditionError("probability must lie in [0, 1], got " + text);
  }
  return p;
}

std::string join_command_line(const std::vector<std::string>& args) {
  std::string line = "cdock";
  for (std::size_t k = 1; k < args.size(); ++k) line += ' ' + args[k];
  return line;
}

void print_bounds(std::ostream& out, const BoundsReport& r) {
  out << "q " << r.q << '\n'
      << "lower_bound " << r.lower_bound << "  [authoritative: max{n+d_min_a, m+d_min_b}]\n"
      << "lower_bound_printed " << r.lower_bound_printed << "  [max{m+d_min_a, n+d_min_b}";
  if (r.printed_exceeds_corrected()) out << "; FLAG: exceeds authoritative bound, not valid";
  out << "]\n"
      << "greedy_upper " << r.greedy_upper << '\n'
      << "ratio_bound " << r.ratio_bound << '\n';
}

struct GenArgs {
  int n = 0, m = 0;
  std::string p;
  int a = 0, b = 0, pendants = 0;
  int k = 0, l = 0, s = 0;
  std::uint64_t seed = 0;
  std::string out;
};

struct SolveArgs {
  std::string alg;
  std::string in;
  std::string out;
  std::string trace;
  bool gantt = false;
  int exact_limit = kDefaultExactLimit;
};

int emit_instance(const Instance& inst, const GenArgs& g,
                  const std::vector<std::string>& args, std::ostream& out,
                  std::ostream& err) {
  const std::vector<std::string> comments{"generated by: " + join_command_line(args)};
  const std::string text = serialize_instance(inst, comments);
  const Classification c = classify(inst);
  std::ostringstream summary;
  summary << "n=" << inst.n() << " m=" << inst.m() << " arcs=" << inst.arc_count()
          << " is_d2=" << (c.is_d2 ? "true" : "false")
          << " has_pendant_b=" << (c.has_pendant_b ? "true" : "false");
  if (g.out.empty()) {
    out << text;
    err << summary.str() << '\n';
  } else {
    write_file(g.out, text);
    out << "wrote " << g.out << ": " << summary.str() << '\n';
  }
  return kExitOk;
}

int cmd_solve(const SolveArgs& a, std::ostream& out) {
  const Instance inst = load_instance(a.in);
  Schedule sched;
  std::ostringstream details;
  if (a.alg == "greedy") {
    sched = solve_greedy(inst);
    print_bounds(details, bounds_report(inst));
  } else if (a.alg == "pd2") {
    Pd2Result r = solve_pd2(inst);
    details << "lemma1_bound " << lemma1_bound(inst) << '\n';
    const std::vector<Block> bl = blocks(inst, r.trace);
    details << "blocks";
    for (const Block& block : bl) details << " BL" << block.label;
    details << '\n';
    if (!a.trace.empty()) {
      const nlohmann::json doc{{"events", trace_to_json(r.trace)}, {"blocks", blocks_to_json(bl)}};
      write_file(a.trace, doc.dump(2) + "\n");
    }
    sched = std::move(r.schedule);
  } else {
    const ExactResult r = solve_exact(inst, a.exact_limit);
    details << "permutations_examined " << r.permutations_examined << '\n';
    sched = r.schedule;
  }
  out << "algorithm " << a.alg << '\n' << "makespan " << makespan(sched) << '\n' << details.str();
  if (!a.out.empty()) write_file(a.out, schedule_to_json(sched).dump() + "\n");
  if (a.gantt) out << render_gantt(inst, sched);
  return kExitOk;
}

int cmd_bound(const std::string& in, bool as_json, std::ostream& out) {
  const Instance inst = load_instance(in);
  const BoundsReport r = bounds_report(inst);
  const bool d2 = classify(inst).is_d2;
  if (as_json) {
    nlohmann::json doc = bounds_to_json(r);
    if (d2) doc["lemma1_bound"] = lemma1_bound(inst);
    out << doc.dump(2) << '\n';
    return kExitOk;
  }
  print_bounds(out, r);
  if (d2) out << "lemma1_bound " << lemma1_bound(inst) << "  [class D2]\n";
  return kExitOk;
}

int cmd_verify(const std::string& in, const std::string& schedule_path, std::ostream& out) {
  const Instance inst = load_instance(in);
  const ScheduleFile file = schedule_from_json(read_file(schedule_path));
  const Schedule& sched = file.schedule;
  if (static_cast<int>(sched.start_a.size()) != inst.n() ||
      static_cast<int>(sched.start_b.size()) != inst.m()) {
    throw PreconditionError("schedule has " + std::to_string(sched.start_a.size()) + "/" +
                            std::to_string(sched.start_b.size()) +
                            " start times, instance needs " + std::to_string(inst.n()) +
                            "/" + std::to_string(inst.m()));
  }
  const FeasibilityReport report = check_feasible(inst, sched);
  std::vector<std::string> problems;
  for (const Violation& v : report.violations) problems.push_back(v.message());
  if (file.declared_makespan != makespan(sched)) {
    problems.push_back("declared makespan " + std::to_string(file.declared_makespan) +
                       " differs from actual " + std::to_string(makespan(sched)));
  }
  if (problems.empty()) {
    out << "feasible, makespan " << makespan(sched) << '\n';
    return kExitOk;
  }
  out << "infeasible, " << problems.size() << " violation(s)\n";
  for (const std::string& p : problems) out << "  " << p << '\n';
  return kExitInfeasible;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Two-machine unit-time flow shop with bipartite precedence (cross-docking)"};
  app.name("cdock");
  app.require_subcommand(1);

  GenArgs g;
  auto* gen = app.add_subcommand("gen", "Generate an instance file");
  gen->require_subcommand(1);
  auto* gen_random_cmd = gen->add_subcommand("random", "Independent arcs with probability p");
  gen_random_cmd->add_option("--n", g.n, "machine-1 operations")->required()->check(CLI::PositiveNumber);
  gen_random_cmd->add_option("--m", g.m, "machine-2 operations")->required()->check(CLI::PositiveNumber);
  gen_random_cmd->add_option("--p", g.p, "arc probability, p/q or decimal")->required();
  gen_random_cmd->add_option("--seed", g.seed)->required();
  gen_random_cmd->add_option("--out", g.out, "output file (stdout when omitted)");
  auto* gen_d2_cmd = gen->add_subcommand("d2", "Every A gets exactly two successors");
  gen_d2_cmd->add_option("--a", g.a, "machine-1 operations")->required();
  gen_d2_cmd->add_option("--b", g.b, "machine-2 operations")->required();
  gen_d2_cmd->add_option("--pendants", g.pendants, "B operations kept free of predecessors");
  gen_d2_cmd->add_option("--seed", g.seed)->required();
  gen_d2_cmd->add_option("--out", g.out, "output file (stdout when omitted)");
  auto* gen_tight_cmd = gen->add_subcommand("tight", "Family attaining the greedy ratio bound");
  gen_tight_cmd->add_option("--k", g.k)->required();
  gen_tight_cmd->add_option("--l", g.l)->required();
  gen_tight_cmd->add_option("--s", g.s)->required();
  gen_tight_cmd->add_option("--out", g.out, "output file (stdout when omitted)");

  SolveArgs sa;
  auto* solve = app.add_subcommand("solve", "Build a schedule");
  solve->add_option("--alg", sa.alg)->required()->check(CLI::IsMember({"greedy", "pd2", "exact"}));
  solve->add_option("--in", sa.in, "instance file")->required();
  solve->add_option("--out", sa.out, "schedule JSON output");
  solve->add_option("--trace", sa.trace, "pd2 trace and blocks JSON output");
  solve->add_flag("--gantt", sa.gantt, "print a text Gantt chart");
  solve->add_option("--exact-limit", sa.exact_limit, "largest n accepted by the exact solver");

  std::string bound_in;
  bool bound_json = false;
  auto* bound = app.add_subcommand("bound", "Report q, lower bounds and the ratio certificate");
  bound->add_option("--in", bound_in, "instance file")->required();
  bound->add_flag("--json", bound_json, "emit JSON");

  std::string verify_in;
  std::string verify_schedule;
  auto* verify = app.add_subcommand("verify", "Check a schedule against an instance");
  verify->add_option("--in", verify_in, "instance file")->required();
  verify->add_option("--schedule", verify_schedule, "schedule JSON")->required();

  BenchOptions bo;
  std::string bench_algs = "greedy,pd2,exact";
  std::string bench_format = "md";
  auto* bench = app.add_subcommand("bench", "Tabulate solvers over a directory of instances");
  bench->add_option("--dir", bo.dir, "instance directory")->required()->check(CLI::ExistingDirectory);
  bench->add_option("--algs", bench_algs, "comma-separated subset of greedy,pd2,exact");
  bench->add_option("--format", bench_format)->check(CLI::IsMember({"csv", "md"}));
  bench->add_option("--exact-limit", bo.exact_limit, "largest n given to the exact solver");

  std::vector<std::string> reversed(args.rbegin(), args.rend() - (args.empty() ? 0 : 1));
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (*gen_random_cmd) {
      return emit_instance(gen_random(g.n, g.m, parse_probability(g.p), g.seed), g, args, out, err);
    }
    if (*gen_d2_cmd) return emit_instance(gen_d2(g.a, g.b, g.pendants, g.seed), g, args, out, err);
    if (*gen_tight_cmd) return emit_instance(gen_tight({g.k, g.l, g.s}), g, args, out, err);
    if (*solve) return cmd_solve(sa, out);
    if (*bound) return cmd_bound(bound_in, bound_json, out);
    if (*verify) return cmd_verify(verify_in, verify_schedule, out);
    if (*bench) {
      std::stringstream list(bench_algs);
      for (std::string alg; std::getline(list, alg, ',');) {
        if (alg != "greedy" && alg != "pd2" && alg != "exact") {
          throw PreconditionError("unknown algorithm \"" + alg + "\"");
        }
        bo.algorithms.push_back(alg);
      }
      const auto rows = run_bench(bo, err);
      out << (bench_format == "csv" ? format_csv(rows) : format_markdown(rows));
      return kExitOk;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace cdock::cli
