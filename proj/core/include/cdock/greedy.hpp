#pragma once

#include "cdock/instance.hpp"
#include "cdock/rational.hpp"
#include "cdock/schedule.hpp"

namespace cdock {

// Bounds attached to the greedy algorithm.
//
// lower_bound is max{n + d_min_a, m + d_min_b}, which never exceeds the
// optimum. lower_bound_printed is the swapped form max{m + d_min_a,
// n + d_min_b}; it is kept for comparison only and can exceed the optimum
// (n=1, m=3, single arc (1,1): printed 4, optimum 3).
struct BoundsReport {
  int q = 0;
  int d_min_a = 0;
  int d_min_b = 0;
  int lower_bound = 0;
  int lower_bound_printed = 0;
  int greedy_upper = 0;  // max{q + m, n}
  Rational ratio_bound;  // greedy_upper / lower_bound

  bool printed_exceeds_corrected() const { return lower_bound_printed > lower_bound; }

  friend bool operator==(const BoundsReport&, const BoundsReport&) = default;
};

// Orders A by out-degree descending, then by d_i^A / sum_{j in S_i} d_j^B
// descending (exact cross-multiplication), then by index. Operations without
// successors land last in index order.
Permutation greedy_order(const Instance& inst);

// complete_m2_erd(inst, greedy_order(inst)).
Schedule solve_greedy(const Instance& inst);

// Smallest q in 1..n whose prefix out-degree sum under pi exceeds
// (total arcs - m).
int compute_q(const Instance& inst, const Permutation& pi);

int lower_bound(const Instance& inst);
int lower_bound_printed(const Instance& inst);

BoundsReport bounds_report(const Instance& inst);

}  // namespace cdock
