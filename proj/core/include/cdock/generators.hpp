#pragma once

#include <cstdint>
#include <random>

#include "cdock/instance.hpp"
#include "cdock/rational.hpp"

namespace cdock {

// Portable seeded stream: std::mt19937_64 (its output sequence is fixed by
// the C++ standard) with bounded draws by rejection sampling on the raw
// 64-bit words. Library distributions are avoided because their algorithms
// differ between standard library implementations.
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : engine_(seed) {}

  // Uniform in [0, bound); bound must be positive.
  std::uint64_t below(std::uint64_t bound);

  // True with probability p.num()/p.den().
  bool bernoulli(const Rational& p);

 private:
  std::mt19937_64 engine_;
};

// Each of the n*m arcs, visited in (i, j) order, is kept with probability p.
Instance gen_random(int n, int m, const Rational& p, std::uint64_t seed);

// Every A receives two distinct successors drawn uniformly from the B's that
// were not set aside; pendant_count B's (chosen by a seeded shuffle) are set
// aside and end up with in-degree 0. Others may stay uncovered by chance.
Instance gen_d2(int a_count, int b_count, int pendant_count, std::uint64_t seed);

struct TightParams {
  int k = 0;
  int l = 0;
  int s = 0;
};

// Family with n = k+l+s, m = 2k+s on which the greedy ratio bound is met.
// A layout: K-block A_1..A_k, L-block A_{k+1}..A_{k+l}, S-block after that.
// B layout: pair block B_1..B_2k, then the s-block.
//   K-block A_i      -> B_{2i-1}, B_{2i}
//   L-block A        -> every s-block B
//   S-block i-th A   -> i-th s-block B
// Requires k >= l >= 1 and s >= 3.
Instance gen_tight(const TightParams& params);

}  // namespace cdock
