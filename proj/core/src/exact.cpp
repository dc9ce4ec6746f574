#include "cdock/exact.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <string>

#include "cdock/error.hpp"

namespace cdock {

namespace {

// Group id per A, numbered by first appearance so ids ascend with the
// smallest member index.
std::vector<int> successor_groups(const Instance& inst, bool merge) {
  std::vector<int> group(inst.n());
  if (!merge) {
    for (int a = 0; a < inst.n(); ++a) group[a] = a;
    return group;
  }
  std::map<std::vector<int>, int> ids;
  for (int a = 0; a < inst.n(); ++a) {
    const auto succ = inst.successors(a);
    auto [it, inserted] =
        ids.emplace(std::vector<int>(succ.begin(), succ.end()), static_cast<int>(ids.size()));
    group[a] = it->second;
  }
  return group;
}

// Makespan of ERD completion for machine-1 starts. Releases never exceed n,
// so a counting pass over release values replaces the sort.
class ErdEvaluator {
 public:
  explicit ErdEvaluator(const Instance& inst)
      : inst_(inst), release_count_(inst.n() + 1, 0) {}

  int makespan(const std::vector<int>& start_a) {
    std::fill(release_count_.begin(), release_count_.end(), 0);
    for (int b = 0; b < inst_.m(); ++b) {
      int r = inst_.in_degree(b);
      for (int a : inst_.predecessors(b)) r = std::max(r, start_a[a] + 1);
      ++release_count_[r];
    }
    int free_at = 0;
    for (int r = 0; r <= inst_.n(); ++r) {
      if (release_count_[r] > 0) free_at = std::max(free_at, r) + release_count_[r];
    }
    return std::max(free_at, inst_.n());
  }

 private:
  const Instance& inst_;
  std::vector<int> release_count_;
};

}  // namespace

ExactResult solve_exact(const Instance& inst, const ExactOptions& options) {
  if (inst.n() > options.max_n) {
    throw SizeLimitError("exact solver limited to n <= " + std::to_string(options.max_n) +
                         ", got n=" + std::to_string(inst.n()));
  }
  const int n = inst.n();
  const std::vector<int> group = successor_groups(inst, options.prune_symmetric);
  const int group_count = *std::max_element(group.begin(), group.end()) + 1;
  std::vector<std::vector<int>> members(group_count);
  for (int a = 0; a < n; ++a) members[group[a]].push_back(a);

  // Multiset permutation over group ids; the k-th occurrence of a group maps
  // to its k-th smallest member, which is the canonical representative.
  std::vector<int> ids(group);
  std::sort(ids.begin(), ids.end());

  ErdEvaluator erd(inst);
  std::vector<int> order(n);
  std::vector<int> start_a(n);
  std::vector<int> used(group_count);
  std::vector<int> best_order;
  int best = std::numeric_limits<int>::max();
  std::uint64_t examined = 0;
  do {
    std::fill(used.begin(), used.end(), 0);
    for (int pos = 0; pos < n; ++pos) {
      const int a = members[ids[pos]][used[ids[pos]]++];
      order[pos] = a;
      start_a[a] = pos;
    }
    ++examined;
    const int end = erd.makespan(start_a);
    if (end < best || (end == best && order < best_order)) {
      best = end;
      best_order = order;
    }
  } while (std::next_permutation(ids.begin(), ids.end()));

  ExactResult result;
  result.order = Permutation(std::move(best_order));
  result.schedule = complete_m2_erd(inst, result.order);
  result.optimal_makespan = best;
  result.permutations_examined = examined;
  return result;
}

ExactResult solve_exact(const Instance& inst, int max_n) {
  return solve_exact(inst, ExactOptions{max_n, true});
}

std::uint64_t search_space_size(const Instance& inst) {
  const std::vector<int> group = successor_groups(inst, true);
  std::map<int, int> sizes;
  for (int g : group) ++sizes[g];

  // Product of binomials C(placed + size, size), built one factor at a time so
  // every intermediate value is an exact integer.
  constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
  __extension__ unsigned __int128 total = 1;
  int placed = 0;
  for (const auto& [g, size] : sizes) {
    for (int k = 1; k <= size; ++k) {
      total = total * static_cast<unsigned>(placed + k) / static_cast<unsigned>(k);
      if (total > kMax) return kMax;
    }
    placed += size;
  }
  return static_cast<std::uint64_t>(total);
}

}  // namespace cdock
