#include <random>

#include <gtest/gtest.h>

#include "cdock/error.hpp"
#include "cdock/greedy.hpp"
#include "cdock/generators.hpp"
#include "cdock/schedule.hpp"
#include "support.hpp"

namespace cdock {
namespace {

using testing::ex1;
using testing::make_instance;
using testing::perm1;

// Greedy order on the worked example.
Permutation ex1_pi() { return perm1({4, 6, 5, 1, 2, 3}); }

TEST(Permutation, RejectsNonBijections) {
  EXPECT_THROW(Permutation({0, 0}), PreconditionError);
  EXPECT_THROW(Permutation({1, 2}), PreconditionError);
  EXPECT_NO_THROW(Permutation({1, 0}));
}

TEST(ReleaseTimes, WorkedExample) {
  // r_B1..r_B7
  EXPECT_EQ(release_times(ex1(), ex1_pi()), (ReleaseVector{0, 6, 6, 1, 2, 3, 0}));
}

TEST(ReleaseTimes, EmptyPredecessorSetsReleaseAtZero) {
  EXPECT_EQ(release_times(Instance(2, 2, {}), perm1({2, 1})), (ReleaseVector{0, 0}));
}

TEST(ReleaseTimes, SingleArc) {
  EXPECT_EQ(release_times(make_instance(1, 1, {{1, 1}}), perm1({1})), (ReleaseVector{1}));
}

TEST(ReleaseTimes, RejectsWrongPermutationSize) {
  EXPECT_THROW(release_times(ex1(), perm1({1, 2})), PreconditionError);
}

TEST(CompleteM2Erd, WorkedExample) {
  const Schedule s = complete_m2_erd(ex1(), ex1_pi());
  EXPECT_EQ(s.start_a, (std::vector<int>{3, 4, 5, 0, 2, 1}));
  EXPECT_EQ(s.start_b, (std::vector<int>{0, 6, 7, 2, 3, 4, 1}));
  EXPECT_EQ(makespan(s), 8);
  EXPECT_TRUE(check_feasible(ex1(), s).ok());
}

TEST(CompleteM2Erd, IndependentMachines) {
  const Schedule s = complete_m2_erd(Instance(2, 3, {}), perm1({1, 2}));
  EXPECT_EQ(s.start_b, (std::vector<int>{0, 1, 2}));
  EXPECT_EQ(makespan(s), 3);
}

TEST(CompleteM2Erd, TightFamilyUnderGreedyOrder) {
  const Instance tf = gen_tight({3, 2, 3});
  EXPECT_EQ(makespan(complete_m2_erd(tf, greedy_order(tf))), 12);
}

TEST(BestM2Bruteforce, MatchesErdOnWorkedExample) {
  EXPECT_EQ(makespan(best_m2_bruteforce(ex1(), ex1_pi())), 8);
}

TEST(BestM2Bruteforce, NoArcsGivesMaxOfLoads) {
  EXPECT_EQ(makespan(best_m2_bruteforce(Instance(4, 2, {}), perm1({3, 1, 4, 2}))), 4);
  EXPECT_EQ(makespan(best_m2_bruteforce(Instance(2, 5, {}), perm1({1, 2}))), 5);
}

TEST(BestM2Bruteforce, SizeLimit) {
  EXPECT_THROW(best_m2_bruteforce(Instance(1, 10, {}), perm1({1})), SizeLimitError);
}

TEST(BestM2Bruteforce, ErdIsOptimalForFixedMachine1) {
  std::mt19937_64 rng(31337);
  for (int trial = 0; trial < 200; ++trial) {
    const Instance inst = testing::random_instance(rng, 7, 7);
    const Permutation pi = testing::random_permutation(rng, inst.n());
    const Schedule brute = best_m2_bruteforce(inst, pi);
    ASSERT_TRUE(check_feasible(inst, brute).ok());
    ASSERT_EQ(makespan(complete_m2_erd(inst, pi)), makespan(brute))
        << serialize_instance(inst);
  }
}

TEST(CompleteM2Erd, TieBreakDoesNotChangeMakespan) {
  std::mt19937_64 rng(4242);
  for (int trial = 0; trial < 200; ++trial) {
    const Instance inst = testing::random_instance(rng, 9, 9);
    const Permutation pi = testing::random_permutation(rng, inst.n());
    const Schedule asc = complete_m2_erd(inst, pi, ErdTieBreak::kAscendingIndex);
    const Schedule desc = complete_m2_erd(inst, pi, ErdTieBreak::kDescendingIndex);
    ASSERT_EQ(makespan(asc), makespan(desc));
    ASSERT_TRUE(check_feasible(inst, asc).ok());
    ASSERT_TRUE(check_feasible(inst, desc).ok());
  }
}

TEST(ReleaseTimes, BoundsHoldOnRandomInstances) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const Instance inst = testing::random_instance(rng, 10, 10);
    const Permutation pi = testing::random_permutation(rng, inst.n());
    const ReleaseVector r = release_times(inst, pi);
    const std::vector<int> start_a = machine1_starts(pi);
    for (int b = 0; b < inst.m(); ++b) {
      ASSERT_GE(r[b], inst.in_degree(b));
      for (int a : inst.predecessors(b)) ASSERT_GE(r[b], start_a[a] + 1);
    }
  }
}

TEST(CheckFeasible, ReportsEveryViolationKind) {
  const Instance one = make_instance(1, 1, {{1, 1}});
  const FeasibilityReport prec = check_feasible(one, Schedule{{0}, {0}});
  ASSERT_EQ(prec.violations.size(), 1u);
  EXPECT_EQ(prec.violations[0], (Violation{ViolationKind::kPrecedence, 0, 0, 0}));

  const FeasibilityReport overlap = check_feasible(Instance(2, 1, {}), Schedule{{0, 0}, {0}});
  ASSERT_EQ(overlap.violations.size(), 1u);
  EXPECT_EQ(overlap.violations[0].kind, ViolationKind::kMachine1Overlap);

  const FeasibilityReport m2 = check_feasible(Instance(1, 2, {}), Schedule{{0}, {3, 3}});
  ASSERT_EQ(m2.violations.size(), 1u);
  EXPECT_EQ(m2.violations[0].kind, ViolationKind::kMachine2Overlap);

  const FeasibilityReport neg = check_feasible(Instance(1, 1, {}), Schedule{{-1}, {0}});
  ASSERT_EQ(neg.violations.size(), 1u);
  EXPECT_EQ(neg.violations[0].kind, ViolationKind::kNegativeStart);

  const FeasibilityReport size = check_feasible(Instance(2, 1, {}), Schedule{{0}, {0}});
  ASSERT_FALSE(size.ok());
  EXPECT_EQ(size.violations[0].kind, ViolationKind::kSizeMismatch);
}

TEST(CheckFeasible, CollectsAllViolations) {
  const Instance inst = make_instance(2, 2, {{1, 1}, {2, 2}});
  const FeasibilityReport r = check_feasible(inst, Schedule{{0, 0}, {0, 0}});
  // A overlap, B overlap, both arcs.
  EXPECT_EQ(r.violations.size(), 4u);
}

TEST(CheckFeasible, PrecedenceMessageNamesTheArc) {
  // A6 first, then A4 at time 1; B4 at 1 starts before A4 completes.
  Schedule s = complete_m2_erd(ex1(), ex1_pi());
  std::swap(s.start_a[3], s.start_a[5]);
  s.start_b[3] = 1;
  const FeasibilityReport r = check_feasible(ex1(), s);
  ASSERT_FALSE(r.ok());
  bool found = false;
  for (const Violation& v : r.violations) {
    if (v.kind == ViolationKind::kPrecedence && v.first == 3 && v.second == 3) {
      found = true;
      EXPECT_NE(v.message().find("(4,4)"), std::string::npos);
    }
  }
  EXPECT_TRUE(found);
}

TEST(Makespan, Examples) {
  EXPECT_EQ(makespan(Schedule{{0}, {1}}), 2);
  EXPECT_EQ(makespan(complete_m2_erd(ex1(), ex1_pi())), 8);
  EXPECT_EQ(makespan(Schedule{}), 0);
}

TEST(RenderGantt, SingleArc) {
  const std::string chart = render_gantt(make_instance(1, 1, {{1, 1}}), Schedule{{0}, {1}});
  EXPECT_EQ(chart, "M1 A1 . \nM2 .  B1\n");
}

std::vector<std::string> cells_of_row(const std::string& chart, int row) {
  std::istringstream lines(chart);
  std::string line;
  for (int k = 0; k <= row; ++k) std::getline(lines, line);
  std::istringstream tokens(line);
  std::vector<std::string> cells;
  std::string cell;
  tokens >> cell;  // row label
  while (tokens >> cell) cells.push_back(cell);
  return cells;
}

TEST(RenderGantt, WorkedExampleHasOneIdleCellOnMachine2) {
  const std::string chart = render_gantt(ex1(), complete_m2_erd(ex1(), ex1_pi()));
  const auto m2 = cells_of_row(chart, 1);
  ASSERT_EQ(m2.size(), 8u);
  EXPECT_EQ(std::count(m2.begin(), m2.end(), "."), 1);
  EXPECT_EQ(m2[5], ".");
  EXPECT_EQ(m2[6], "B2");
  const auto m1 = cells_of_row(chart, 0);
  EXPECT_EQ(m1[0], "A4");
}

TEST(RenderGantt, FixedWidthRows) {
  const Instance inst(12, 3, {});
  const std::string chart = render_gantt(inst, complete_m2_erd(inst, Permutation::identity(12)));
  const auto nl = chart.find('\n');
  EXPECT_EQ(nl + 1, chart.size() - nl - 1);
  EXPECT_NE(chart.find("A12"), std::string::npos);
}

TEST(RenderGantt, NoIdleWithoutArcs) {
  const Instance inst(2, 2, {});
  const std::string chart = render_gantt(inst, complete_m2_erd(inst, Permutation::identity(2)));
  EXPECT_EQ(chart.find('.'), std::string::npos);
}

TEST(RenderGantt, RejectsInfeasibleSchedule) {
  EXPECT_THROW(render_gantt(make_instance(1, 1, {{1, 1}}), Schedule{{0}, {0}}),
               PreconditionError);
}

}  // namespace
}  // namespace cdock
