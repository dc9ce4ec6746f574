#include "cdock/greedy.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>

#include "cdock/error.hpp"

namespace cdock {

Permutation greedy_order(const Instance& inst) {
  const int n = inst.n();
  // Denominator of the tie-break ratio: sum of original in-degrees of S_i.
  std::vector<std::int64_t> succ_load(n, 0);
  for (int a = 0; a < n; ++a) {
    for (int b : inst.successors(a)) succ_load[a] += inst.in_degree(b);
  }

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int x, int y) {
    const std::int64_t dx = inst.out_degree(x);
    const std::int64_t dy = inst.out_degree(y);
    if (dx != dy) return dx > dy;
    if (dx > 0) {
      // dx / load_x > dy / load_y with both loads >= degree >= 1.
      const std::int64_t lhs = dx * succ_load[y];
      const std::int64_t rhs = dy * succ_load[x];
      if (lhs != rhs) return lhs > rhs;
    }
    return x < y;
  });
  return Permutation(std::move(order));
}

Schedule solve_greedy(const Instance& inst) {
  return complete_m2_erd(inst, greedy_order(inst));
}

int compute_q(const Instance& inst, const Permutation& pi) {
  if (pi.size() != inst.n()) {
    throw PreconditionError("permutation size does not match instance");
  }
  const std::int64_t threshold =
      static_cast<std::int64_t>(inst.arc_count()) - inst.m();
  std::int64_t prefix = 0;
  for (int q = 1; q <= pi.size(); ++q) {
    prefix += inst.out_degree(pi[q - 1]);
    if (prefix > threshold) return q;
  }
  // Unreachable for m >= 1: the full sum always exceeds total - m.
  throw Error("compute_q: no prefix satisfies the inequality");
}

namespace {

std::pair<int, int> min_degrees(const Instance& inst) {
  const DegreeProfile& deg = inst.degrees();
  return {*std::min_element(deg.out_deg.begin(), deg.out_deg.end()),
          *std::min_element(deg.in_deg.begin(), deg.in_deg.end())};
}

}  // namespace

int lower_bound(const Instance& inst) {
  const auto [d_min_a, d_min_b] = min_degrees(inst);
  return std::max(inst.n() + d_min_a, inst.m() + d_min_b);
}

int lower_bound_printed(const Instance& inst) {
  const auto [d_min_a, d_min_b] = min_degrees(inst);
  return std::max(inst.m() + d_min_a, inst.n() + d_min_b);
}

BoundsReport bounds_report(const Instance& inst) {
  BoundsReport report;
  std::tie(report.d_min_a, report.d_min_b) = min_degrees(inst);
  report.q = compute_q(inst, greedy_order(inst));
  report.lower_bound = lower_bound(inst);
  report.lower_bound_printed = lower_bound_printed(inst);
  report.greedy_upper = std::max(report.q + inst.m(), inst.n());
  report.ratio_bound = Rational(report.greedy_upper, report.lower_bound);
  return report;
}

}  // namespace cdock
