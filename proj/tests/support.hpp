#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>
#include <utility>
#include <vector>

#include "cdock/generators.hpp"
#include "cdock/instance.hpp"
#include "cdock/schedule.hpp"

namespace cdock::testing {

// Builds an instance from 1-based (i, j) pairs as written in the text.
inline Instance make_instance(int n, int m,
                              std::initializer_list<std::pair<int, int>> arcs) {
  std::vector<Arc> out;
  for (auto [i, j] : arcs) out.push_back({i - 1, j - 1});
  return Instance(n, m, std::move(out));
}

// Converts 1-based operation numbers to 0-based indices.
inline std::vector<int> zero_based(std::initializer_list<int> ids) {
  std::vector<int> out;
  for (int id : ids) out.push_back(id - 1);
  return out;
}

inline Permutation perm1(std::initializer_list<int> ids) {
  return Permutation(zero_based(ids));
}

// Worked D2 example with pendants B1, B7.
inline Instance ex1() {
  return make_instance(6, 7,
                       {{1, 2}, {1, 3}, {2, 2}, {2, 3}, {3, 2}, {3, 3},
                        {4, 4}, {4, 5}, {5, 3}, {5, 6}, {6, 5}, {6, 6}});
}

inline constexpr const char* kEx1Text =
    "c worked D2 example\n"
    "p cdock 6 7\n"
    "a 1 2\na 1 3\na 2 2\na 2 3\na 3 2\na 3 3\n"
    "a 4 4\na 4 5\na 5 3\na 5 6\na 6 5\na 6 6\n";

// Instance on which the swapped lower-bound form exceeds the optimum.
inline Instance cex() { return make_instance(1, 3, {{1, 1}}); }

// Random general instance with n, m in [1, max_n] x [1, max_m] and an arc
// density drawn from {0, 1/4, 1/2, 3/4, 1}.
inline Instance random_instance(std::mt19937_64& rng, int max_n, int max_m) {
  const int n = 1 + static_cast<int>(rng() % static_cast<unsigned>(max_n));
  const int m = 1 + static_cast<int>(rng() % static_cast<unsigned>(max_m));
  const Rational p(static_cast<std::int64_t>(rng() % 5), 4);
  return gen_random(n, m, p, rng());
}

// Random D2 instance with n <= max_n, m in [2, max_m].
inline Instance random_d2(std::mt19937_64& rng, int max_n, int max_m) {
  const int n = 1 + static_cast<int>(rng() % static_cast<unsigned>(max_n));
  const int m = 2 + static_cast<int>(rng() % static_cast<unsigned>(max_m - 1));
  const int pendants = static_cast<int>(rng() % static_cast<unsigned>(m - 1));
  return gen_d2(n, m, pendants, rng());
}

inline Permutation random_permutation(std::mt19937_64& rng, int n) {
  std::vector<int> order(n);
  for (int k = 0; k < n; ++k) order[k] = k;
  for (int k = n - 1; k > 0; --k) {
    std::swap(order[k], order[rng() % static_cast<unsigned>(k + 1)]);
  }
  return Permutation(std::move(order));
}

// Optimal makespan by exhaustive search over every integer schedule whose
// start times lie in [0, horizon]. Shares no code with the solvers: it does
// not assume a no-idle machine 1, release times, or any ordering rule.
// Branches are cut only when they cannot beat the incumbent.
int full_space_optimum(const Instance& inst, int horizon);

}  // namespace cdock::testing
