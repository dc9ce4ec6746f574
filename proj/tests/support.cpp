#include "support.hpp"

#include <algorithm>
#include <stdexcept>

namespace cdock::testing {

namespace {

class FullSpaceSearch {
 public:
  FullSpaceSearch(const Instance& inst, int horizon)
      : inst_(inst),
        horizon_(horizon),
        start_a_(inst.n(), 0),
        best_(horizon + 2) {
    if (horizon + 1 > 63) throw std::invalid_argument("horizon too large");
  }

  int run() {
    assign_a(0, 0, 0);
    return best_;
  }

 private:
  // Any improving schedule has every start <= best_ - 2.
  int last_slot() const { return std::min(horizon_, best_ - 2); }

  void assign_a(int a, std::uint64_t used, int end) {
    if (a == inst_.n()) {
      assign_b(0, 0, end);
      return;
    }
    for (int t = 0; t <= last_slot(); ++t) {
      if (used >> t & 1) continue;
      start_a_[a] = t;
      assign_a(a + 1, used | (std::uint64_t{1} << t), std::max(end, t + 1));
    }
  }

  void assign_b(int b, std::uint64_t used, int end) {
    if (b == inst_.m()) {
      best_ = std::min(best_, end);
      return;
    }
    int earliest = 0;
    for (int a : inst_.predecessors(b)) earliest = std::max(earliest, start_a_[a] + 1);
    for (int t = earliest; t <= last_slot(); ++t) {
      if (used >> t & 1) continue;
      assign_b(b + 1, used | (std::uint64_t{1} << t), std::max(end, t + 1));
    }
  }

  const Instance& inst_;
  int horizon_;
  std::vector<int> start_a_;
  int best_;
};

}  // namespace

int full_space_optimum(const Instance& inst, int horizon) {
  return FullSpaceSearch(inst, horizon).run();
}

}  // namespace cdock::testing
