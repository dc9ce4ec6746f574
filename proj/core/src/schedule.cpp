#include "cdock/schedule.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>
#include <sstream>

#include "cdock/error.hpp"

namespace cdock {

Permutation::Permutation(std::vector<int> order) : order_(std::move(order)) {
  std::vector<char> seen(order_.size(), 0);
  for (int v : order_) {
    if (v < 0 || v >= static_cast<int>(order_.size()) || seen[v]) {
      throw PreconditionError("not a permutation of 0.." +
                              std::to_string(order_.size()) + "-1");
    }
    seen[v] = 1;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  return Permutation(std::move(order));
}

int makespan(const Schedule& sched) {
  int end = 0;
  for (int s : sched.start_a) end = std::max(end, s + 1);
  for (int s : sched.start_b) end = std::max(end, s + 1);
  return end;
}

std::vector<int> machine1_starts(const Permutation& pi) {
  std::vector<int> start(pi.size());
  for (int pos = 0; pos < pi.size(); ++pos) start[pi[pos]] = pos;
  return start;
}

namespace {

void require_matching(const Instance& inst, const Permutation& pi) {
  if (pi.size() != inst.n()) {
    throw PreconditionError("permutation has " + std::to_string(pi.size()) +
                            " entries, instance has n=" + std::to_string(inst.n()));
  }
}

ReleaseVector releases_from_starts(const Instance& inst,
                                   const std::vector<int>& start_a) {
  ReleaseVector r(inst.m());
  for (int b = 0; b < inst.m(); ++b) {
    int ready = 0;
    for (int a : inst.predecessors(b)) ready = std::max(ready, start_a[a] + 1);
    r[b] = std::max(inst.in_degree(b), ready);
  }
  return r;
}

// Places B operations in the given order, each as early as its release and
// the machine allow.
std::vector<int> place_in_order(std::span<const int> order, const ReleaseVector& r) {
  std::vector<int> start(r.size());
  int free_at = 0;
  for (int b : order) {
    const int s = std::max(free_at, r[b]);
    start[b] = s;
    free_at = s + 1;
  }
  return start;
}

}  // namespace

ReleaseVector release_times(const Instance& inst, const Permutation& pi) {
  require_matching(inst, pi);
  return releases_from_starts(inst, machine1_starts(pi));
}

Schedule complete_m2_erd(const Instance& inst, const Permutation& pi,
                         ErdTieBreak tie_break) {
  require_matching(inst, pi);
  Schedule sched;
  sched.start_a = machine1_starts(pi);
  const ReleaseVector r = releases_from_starts(inst, sched.start_a);

  std::vector<int> order(inst.m());
  std::iota(order.begin(), order.end(), 0);
  if (tie_break == ErdTieBreak::kAscendingIndex) {
    std::sort(order.begin(), order.end(), [&](int x, int y) {
      return r[x] != r[y] ? r[x] < r[y] : x < y;
    });
  } else {
    std::sort(order.begin(), order.end(), [&](int x, int y) {
      return r[x] != r[y] ? r[x] < r[y] : x > y;
    });
  }
  sched.start_b = place_in_order(order, r);
  return sched;
}

Schedule best_m2_bruteforce(const Instance& inst, const Permutation& pi) {
  require_matching(inst, pi);
  if (inst.m() > kMaxBruteforceM) {
    throw SizeLimitError("machine-2 brute force limited to m <= " +
                         std::to_string(kMaxBruteforceM) + ", got m=" +
                         std::to_string(inst.m()));
  }
  Schedule best;
  best.start_a = machine1_starts(pi);
  const ReleaseVector r = releases_from_starts(inst, best.start_a);

  std::vector<int> order(inst.m());
  std::iota(order.begin(), order.end(), 0);
  int best_end = std::numeric_limits<int>::max();
  // next_permutation visits orders lexicographically, so keeping only strict
  // improvements yields the smallest optimal order.
  do {
    std::vector<int> start_b = place_in_order(order, r);
    const int end = std::max(inst.n(), *std::max_element(start_b.begin(), start_b.end()) + 1);
    if (end < best_end) {
      best_end = end;
      best.start_b = std::move(start_b);
    }
  } while (std::next_permutation(order.begin(), order.end()));
  return best;
}

std::string Violation::message() const {
  std::ostringstream out;
  switch (kind) {
    case ViolationKind::kSizeMismatch:
      out << "machine-" << first << " start list must have " << second << " entries";
      break;
    case ViolationKind::kNegativeStart:
      out << "negative start for " << (first == 1 ? 'A' : 'B') << second + 1;
      break;
    case ViolationKind::kMachine1Overlap:
      out << "machine-1 overlap: A" << first + 1 << " and A" << second + 1
          << " both start at " << time;
      break;
    case ViolationKind::kMachine2Overlap:
      out << "machine-2 overlap: B" << first + 1 << " and B" << second + 1
          << " both start at " << time;
      break;
    case ViolationKind::kPrecedence:
      out << "precedence violation (" << first + 1 << "," << second + 1 << "): B"
          << second + 1 << " starts at " << time << " before A" << first + 1
          << " completes";
      break;
  }
  return out.str();
}

namespace {

void collect_overlaps(const std::vector<int>& start, ViolationKind kind,
                      std::vector<Violation>& out) {
  std::map<int, int> first_at;
  for (int op = 0; op < static_cast<int>(start.size()); ++op) {
    auto [it, inserted] = first_at.emplace(start[op], op);
    if (!inserted) out.push_back({kind, it->second, op, start[op]});
  }
}

}  // namespace

FeasibilityReport check_feasible(const Instance& inst, const Schedule& sched) {
  FeasibilityReport report;
  auto& v = report.violations;
  const bool sizes_ok = static_cast<int>(sched.start_a.size()) == inst.n() &&
                        static_cast<int>(sched.start_b.size()) == inst.m();
  if (static_cast<int>(sched.start_a.size()) != inst.n()) {
    v.push_back({ViolationKind::kSizeMismatch, 1, inst.n()});
  }
  if (static_cast<int>(sched.start_b.size()) != inst.m()) {
    v.push_back({ViolationKind::kSizeMismatch, 2, inst.m()});
  }
  for (int i = 0; i < static_cast<int>(sched.start_a.size()); ++i) {
    if (sched.start_a[i] < 0) v.push_back({ViolationKind::kNegativeStart, 1, i, sched.start_a[i]});
  }
  for (int j = 0; j < static_cast<int>(sched.start_b.size()); ++j) {
    if (sched.start_b[j] < 0) v.push_back({ViolationKind::kNegativeStart, 2, j, sched.start_b[j]});
  }
  collect_overlaps(sched.start_a, ViolationKind::kMachine1Overlap, v);
  collect_overlaps(sched.start_b, ViolationKind::kMachine2Overlap, v);
  if (sizes_ok) {
    for (const Arc& arc : inst.arcs()) {
      if (sched.start_b[arc.b] < sched.start_a[arc.a] + 1) {
        v.push_back({ViolationKind::kPrecedence, arc.a, arc.b, sched.start_b[arc.b]});
      }
    }
  }
  return report;
}

std::string render_gantt(const Instance& inst, const Schedule& sched) {
  const FeasibilityReport report = check_feasible(inst, sched);
  if (!report.ok()) {
    throw PreconditionError("cannot render infeasible schedule: " +
                            report.violations.front().message());
  }
  const int horizon = makespan(sched);
  const std::size_t width =
      1 + std::to_string(std::max(inst.n(), inst.m())).size();

  auto row = [&](const char* name, char prefix, const std::vector<int>& start) {
    std::vector<std::string> cells(horizon, ".");
    for (int op = 0; op < static_cast<int>(start.size()); ++op) {
      cells[start[op]] = prefix + std::to_string(op + 1);
    }
    std::string line = name;
    for (const std::string& cell : cells) {
      line += ' ';
      line += cell;
      line.append(width - cell.size(), ' ');
    }
    return line + '\n';
  };
  return row("M1", 'A', sched.start_a) + row("M2", 'B', sched.start_b);
}

}  // namespace cdock
