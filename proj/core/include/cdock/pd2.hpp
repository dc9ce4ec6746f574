#pragma once

#include <functional>
#include <span>
#include <variant>
#include <vector>

#include "cdock/instance.hpp"
#include "cdock/schedule.hpp"

namespace cdock {

// Step 1 event: a machine-2 operation with no remaining predecessors.
struct ZeroPick {
  int b = 0;

  friend bool operator==(const ZeroPick&, const ZeroPick&) = default;
};

// Step 2 event: the B of minimal current in-degree together with the batch of
// its remaining predecessors, in the order they run on machine 1.
struct DegPick {
  int b = 0;
  int picked_degree = 0;
  std::vector<int> a_batch;

  friend bool operator==(const DegPick&, const DegPick&) = default;
};

using Pd2Event = std::variant<ZeroPick, DegPick>;

struct Pd2Trace {
  std::vector<Pd2Event> events;

  std::vector<int> machine1_sequence() const;
  std::vector<int> machine2_sequence() const;
};

struct Pd2Result {
  Schedule schedule;
  Pd2Trace trace;
};

// Remaining machine-2 operation as seen by step 1, sorted by (degree, index).
struct DegreeEntry {
  int b = 0;
  int degree = 0;

  friend bool operator==(const DegreeEntry&, const DegreeEntry&) = default;
};

// Called once per step 1 with the current V2 in sorted order.
using Pd2SortObserver = std::function<void(std::span<const DegreeEntry>)>;

// Exact algorithm for class D2. Every free choice is resolved by ascending
// index. Machine 1 runs the collected sequence without idle from time 0;
// machine 2 places its sequence earliest-feasible.
// Throws NotD2Error naming the first A whose out-degree is not 2.
Pd2Result solve_pd2(const Instance& inst, const Pd2SortObserver& observer = {});

// max{n+2, m} when some B has no predecessors, max{n+2, m+1} otherwise.
// Throws NotD2Error.
int lemma1_bound(const Instance& inst);

// Segment BL_label of a PD2 schedule. offset_len and overhang_len are
// measured on the block alone: a_ops back-to-back from local time 0, b_ops in
// trace order at their earliest feasible times, predecessors outside the
// block treated as finished.
//   offset_len   = machine-1 operations completed before the first b_op starts
//   overhang_len = b_ops starting at or after the last a_op completes
// Both are 0 for a block without machine-1 operations.
struct Block {
  int label = 0;
  std::vector<int> a_ops;
  std::vector<int> b_ops;
  int offset_len = 0;
  int overhang_len = 0;

  friend bool operator==(const Block&, const Block&) = default;
};

// Splits a trace into blocks: leading ZeroPicks form BL_0, a DegPick whose
// degree exceeds the current label opens a new block, anything else joins
// the current one. Throws PreconditionError when trace and instance disagree.
std::vector<Block> blocks(const Instance& inst, const Pd2Trace& trace);

}  // namespace cdock
