#pragma once

#include <span>
#include <string>
#include <vector>

#include "cdock/instance.hpp"

namespace cdock {

// Processing order of the machine-1 operations. Holds a bijection on
// {0..n-1}; the constructor rejects anything else.
class Permutation {
 public:
  explicit Permutation(std::vector<int> order);

  static Permutation identity(int n);

  std::span<const int> order() const { return order_; }
  int size() const { return static_cast<int>(order_.size()); }
  int operator[](int position) const { return order_[position]; }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> order_;
};

// Integer start times, indexed by operation (start_a[i] is s_i^A).
struct Schedule {
  std::vector<int> start_a;
  std::vector<int> start_b;

  friend bool operator==(const Schedule&, const Schedule&) = default;
};

// r_j per machine-2 operation, indexed by B.
using ReleaseVector = std::vector<int>;

enum class ErdTieBreak { kAscendingIndex, kDescendingIndex };

// Max start + 1 over both machines; 0 for an empty schedule.
int makespan(const Schedule& sched);

// Machine 1 runs pi back-to-back from time 0: s^A_{pi[k]} = k.
std::vector<int> machine1_starts(const Permutation& pi);

// r_j = max{d_j^B, max_{i in T_j} (s_i^A + 1)}; the inner max of an empty T_j is 0.
ReleaseVector release_times(const Instance& inst, const Permutation& pi);

// Machine 1 from pi, machine 2 in non-decreasing r_j (ties per tie_break),
// each operation at the earliest time not before r_j and the previous finish.
Schedule complete_m2_erd(const Instance& inst, const Permutation& pi,
                         ErdTieBreak tie_break = ErdTieBreak::kAscendingIndex);

inline constexpr int kMaxBruteforceM = 9;

// Tries all m! machine-2 orders for the fixed machine-1 assignment given by pi
// and returns the schedule of the lexicographically smallest optimal order.
// Throws SizeLimitError when m > kMaxBruteforceM.
Schedule best_m2_bruteforce(const Instance& inst, const Permutation& pi);

enum class ViolationKind {
  kSizeMismatch,
  kNegativeStart,
  kMachine1Overlap,
  kMachine2Overlap,
  kPrecedence,
};

// One broken feasibility condition. Field meaning depends on kind:
//   kSizeMismatch:     first = machine (1 or 2), second = expected length
//   kNegativeStart:    first = machine, second = operation index
//   kMachine*Overlap:  first, second = operation indices sharing start `time`
//   kPrecedence:       first = A index, second = B index of the arc
struct Violation {
  ViolationKind kind;
  int first = -1;
  int second = -1;
  int time = 0;

  std::string message() const;

  friend bool operator==(const Violation&, const Violation&) = default;
};

struct FeasibilityReport {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
};

// Lists every violation; never throws for malformed schedules.
FeasibilityReport check_feasible(const Instance& inst, const Schedule& sched);

// Two fixed-width rows ("M1", "M2"), one cell per unit of time, "." for idle.
// Throws PreconditionError when the schedule is infeasible.
std::string render_gantt(const Instance& inst, const Schedule& sched);

}  // namespace cdock
