#pragma once

#include <cstdint>

#include "cdock/instance.hpp"
#include "cdock/schedule.hpp"

namespace cdock {

inline constexpr int kDefaultExactLimit = 10;

struct ExactOptions {
  int max_n = kDefaultExactLimit;
  // Skip orderings that only swap A operations with identical successor sets.
  bool prune_symmetric = true;
};

struct ExactResult {
  Schedule schedule;
  Permutation order = Permutation::identity(0);
  int optimal_makespan = 0;
  std::uint64_t permutations_examined = 0;
};

// Enumerates machine-1 orders, completes each with ERD on machine 2 and
// keeps the minimum. Ties resolve to the lexicographically smallest order.
// Throws SizeLimitError when n > max_n.
ExactResult solve_exact(const Instance& inst, const ExactOptions& options);
ExactResult solve_exact(const Instance& inst, int max_n = kDefaultExactLimit);

// n! / prod(group size!) over groups of A with identical successor sets.
// Saturates at UINT64_MAX.
std::uint64_t search_space_size(const Instance& inst);

}  // namespace cdock
