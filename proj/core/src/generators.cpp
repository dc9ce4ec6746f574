#include "cdock/generators.hpp"

#include <numeric>
#include <string>
#include <utility>

#include "cdock/error.hpp"

namespace cdock {

std::uint64_t SeededRng::below(std::uint64_t bound) {
  if (bound == 0) throw PreconditionError("SeededRng::below needs a positive bound");
  // 2^64 mod bound; rejecting draws below it leaves a range whose length is a
  // multiple of bound, so every residue is equally likely.
  const std::uint64_t threshold = (0 - bound) % bound;
  std::uint64_t x = engine_();
  while (x < threshold) x = engine_();
  return x % bound;
}

bool SeededRng::bernoulli(const Rational& p) {
  return below(static_cast<std::uint64_t>(p.den())) <
         static_cast<std::uint64_t>(p.num());
}

Instance gen_random(int n, int m, const Rational& p, std::uint64_t seed) {
  if (n < 1 || m < 1) throw PreconditionError("gen_random needs n, m >= 1");
  if (p < Rational(0, 1) || p > Rational(1, 1)) {
    throw PreconditionError("arc probability must lie in [0, 1], got " + p.str());
  }
  SeededRng rng(seed);
  std::vector<Arc> arcs;
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < m; ++b) {
      if (rng.bernoulli(p)) arcs.push_back({a, b});
    }
  }
  return Instance(n, m, std::move(arcs));
}

Instance gen_d2(int a_count, int b_count, int pendant_count, std::uint64_t seed) {
  if (a_count < 1) throw PreconditionError("gen_d2 needs at least one A operation");
  if (pendant_count < 0) throw PreconditionError("pendant count must be non-negative");
  if (b_count - pendant_count < 2) {
    throw PreconditionError("gen_d2 needs b_count - pendant_count >= 2, got " +
                            std::to_string(b_count) + " - " + std::to_string(pendant_count));
  }
  SeededRng rng(seed);

  // Partial Fisher-Yates: the first pendant_count slots become the set-aside B's.
  std::vector<int> shuffled(b_count);
  std::iota(shuffled.begin(), shuffled.end(), 0);
  for (int k = 0; k < pendant_count; ++k) {
    const int pick = k + static_cast<int>(rng.below(static_cast<std::uint64_t>(b_count - k)));
    std::swap(shuffled[k], shuffled[pick]);
  }
  std::vector<char> set_aside(b_count, 0);
  for (int k = 0; k < pendant_count; ++k) set_aside[shuffled[k]] = 1;
  std::vector<int> eligible;
  for (int b = 0; b < b_count; ++b) {
    if (!set_aside[b]) eligible.push_back(b);
  }

  const auto pool = static_cast<std::uint64_t>(eligible.size());
  std::vector<Arc> arcs;
  arcs.reserve(2 * static_cast<std::size_t>(a_count));
  for (int a = 0; a < a_count; ++a) {
    const auto first = rng.below(pool);
    auto second = rng.below(pool - 1);
    if (second >= first) ++second;
    arcs.push_back({a, eligible[first]});
    arcs.push_back({a, eligible[second]});
  }
  return Instance(a_count, b_count, std::move(arcs));
}

Instance gen_tight(const TightParams& params) {
  const auto [k, l, s] = params;
  if (l < 1 || k < l || s < 3) {
    throw PreconditionError("tight family needs k >= l >= 1 and s >= 3, got k=" +
                            std::to_string(k) + " l=" + std::to_string(l) +
                            " s=" + std::to_string(s));
  }
  std::vector<Arc> arcs;
  for (int i = 0; i < k; ++i) {
    arcs.push_back({i, 2 * i});
    arcs.push_back({i, 2 * i + 1});
  }
  for (int i = 0; i < l; ++i) {
    for (int j = 0; j < s; ++j) arcs.push_back({k + i, 2 * k + j});
  }
  for (int i = 0; i < s; ++i) arcs.push_back({k + l + i, 2 * k + i});
  return Instance(k + l + s, 2 * k + s, std::move(arcs));
}

}  // namespace cdock
