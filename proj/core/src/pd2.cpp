#include "cdock/pd2.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <utility>

#include "cdock/error.hpp"

namespace cdock {

namespace {

template <class... Fs>
struct Overloaded : Fs... {
  using Fs::operator()...;
};
template <class... Fs>
Overloaded(Fs...) -> Overloaded<Fs...>;

void require_d2(const Instance& inst) {
  for (int a = 0; a < inst.n(); ++a) {
    if (inst.out_degree(a) != 2) throw NotD2Error(a, inst.out_degree(a));
  }
}

}  // namespace

std::vector<int> Pd2Trace::machine1_sequence() const {
  std::vector<int> seq;
  for (const Pd2Event& e : events) {
    if (const auto* pick = std::get_if<DegPick>(&e)) {
      seq.insert(seq.end(), pick->a_batch.begin(), pick->a_batch.end());
    }
  }
  return seq;
}

std::vector<int> Pd2Trace::machine2_sequence() const {
  std::vector<int> seq;
  for (const Pd2Event& e : events) {
    std::visit([&](const auto& pick) { seq.push_back(pick.b); }, e);
  }
  return seq;
}

Pd2Result solve_pd2(const Instance& inst, const Pd2SortObserver& observer) {
  require_d2(inst);
  const int n = inst.n();
  const int m = inst.m();

  std::vector<int> degree(inst.degrees().in_deg);
  std::vector<char> a_done(n, 0);
  // Remaining V2 keyed by (current degree, index): begin() is the step-2 pick
  // and the leading zero-degree run is exactly the step-1 set, in index order.
  std::set<std::pair<int, int>> remaining;
  for (int b = 0; b < m; ++b) remaining.emplace(degree[b], b);

  Pd2Result result;
  auto& events = result.trace.events;
  std::vector<DegreeEntry> snapshot;

  while (!remaining.empty()) {
    if (observer) {
      snapshot.clear();
      for (const auto& [d, b] : remaining) snapshot.push_back({b, d});
      observer(snapshot);
    }
    // Step 1.
    while (!remaining.empty() && remaining.begin()->first == 0) {
      events.push_back(ZeroPick{remaining.begin()->second});
      remaining.erase(remaining.begin());
    }
    if (remaining.empty()) break;

    // Step 2.
    const auto [picked_degree, picked] = *remaining.begin();
    remaining.erase(remaining.begin());
    DegPick pick{picked, picked_degree, {}};
    for (int a : inst.predecessors(picked)) {
      if (a_done[a]) continue;
      a_done[a] = 1;
      pick.a_batch.push_back(a);
      for (int b : inst.successors(a)) {
        if (b == picked) continue;
        remaining.erase({degree[b], b});
        --degree[b];
        remaining.emplace(degree[b], b);
      }
    }
    degree[picked] = 0;
    events.push_back(std::move(pick));
  }

  Schedule& sched = result.schedule;
  sched.start_a.assign(n, 0);
  sched.start_b.assign(m, 0);
  const std::vector<int> seq1 = result.trace.machine1_sequence();
  for (int pos = 0; pos < n; ++pos) sched.start_a[seq1[pos]] = pos;
  int free_at = 0;
  for (int b : result.trace.machine2_sequence()) {
    int s = free_at;
    for (int a : inst.predecessors(b)) s = std::max(s, sched.start_a[a] + 1);
    sched.start_b[b] = s;
    free_at = s + 1;
  }
  return result;
}

int lemma1_bound(const Instance& inst) {
  require_d2(inst);
  const bool pendant = classify(inst).has_pendant_b;
  return std::max(inst.n() + 2, pendant ? inst.m() : inst.m() + 1);
}

namespace {

void measure(const Instance& inst, Block& block) {
  if (block.a_ops.empty()) {
    block.offset_len = 0;
    block.overhang_len = 0;
    return;
  }
  std::vector<int> local_pos(inst.n(), -1);
  for (int k = 0; k < static_cast<int>(block.a_ops.size()); ++k) {
    local_pos[block.a_ops[k]] = k;
  }
  const int a_len = static_cast<int>(block.a_ops.size());
  int free_at = 0;
  int first_start = -1;
  int overhang = 0;
  for (int b : block.b_ops) {
    int s = free_at;
    for (int a : inst.predecessors(b)) {
      if (local_pos[a] >= 0) s = std::max(s, local_pos[a] + 1);
    }
    if (first_start < 0) first_start = s;
    if (s >= a_len) ++overhang;
    free_at = s + 1;
  }
  block.offset_len = first_start < 0 ? a_len : std::min(first_start, a_len);
  block.overhang_len = overhang;
}

}  // namespace

std::vector<Block> blocks(const Instance& inst, const Pd2Trace& trace) {
  std::vector<int> a_seen(inst.n(), 0);
  std::vector<int> b_seen(inst.m(), 0);
  auto mismatch = [](const std::string& what) {
    return PreconditionError("trace does not match instance: " + what);
  };
  auto see_b = [&](int b) {
    if (b < 0 || b >= inst.m()) throw mismatch("B index out of range");
    if (b_seen[b]++) throw mismatch("B" + std::to_string(b + 1) + " repeated");
  };

  std::vector<Block> out;
  for (const Pd2Event& event : trace.events) {
    std::visit(Overloaded{
                   [&](const ZeroPick& pick) {
                     see_b(pick.b);
                     if (out.empty()) out.push_back(Block{0, {}, {}, 0, 0});
                     out.back().b_ops.push_back(pick.b);
                   },
                   [&](const DegPick& pick) {
                     see_b(pick.b);
                     if (static_cast<int>(pick.a_batch.size()) != pick.picked_degree) {
                       throw mismatch("batch size differs from picked degree");
                     }
                     const auto preds = inst.predecessors(pick.b);
                     for (int a : pick.a_batch) {
                       if (a < 0 || a >= inst.n()) throw mismatch("A index out of range");
                       if (a_seen[a]++) throw mismatch("A" + std::to_string(a + 1) + " repeated");
                       if (!std::binary_search(preds.begin(), preds.end(), a)) {
                         throw mismatch("A" + std::to_string(a + 1) + " is not a predecessor of B" +
                                        std::to_string(pick.b + 1));
                       }
                     }
                     if (out.empty() || pick.picked_degree > out.back().label) {
                       out.push_back(Block{pick.picked_degree, {}, {}, 0, 0});
                     }
                     Block& block = out.back();
                     block.a_ops.insert(block.a_ops.end(), pick.a_batch.begin(),
                                        pick.a_batch.end());
                     block.b_ops.push_back(pick.b);
                   },
               },
               event);
  }
  if (std::count(a_seen.begin(), a_seen.end(), 1) != inst.n() ||
      std::count(b_seen.begin(), b_seen.end(), 1) != inst.m()) {
    throw mismatch("not every operation appears in the trace");
  }
  for (Block& block : out) measure(inst, block);
  return out;
}

}  // namespace cdock
