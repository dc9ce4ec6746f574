#pragma once

#include <compare>
#include <istream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace cdock {

// Precedence arc A_a -> B_b. Indices are 0-based in memory; files and
// human-readable reports use 1-based indices.
struct Arc {
  int a = 0;
  int b = 0;

  friend auto operator<=>(const Arc&, const Arc&) = default;
};

// Degree and adjacency views of the precedence graph.
//   out_deg[a] == succ[a].size(), in_deg[b] == pred[b].size()
// succ/pred lists are sorted ascending.
struct DegreeProfile {
  std::vector<int> out_deg;
  std::vector<int> in_deg;
  std::vector<std::vector<int>> succ;
  std::vector<std::vector<int>> pred;
};

struct Classification {
  bool is_d2 = false;          // every A has exactly two successors
  bool has_pendant_b = false;  // some B has no predecessors

  friend bool operator==(const Classification&, const Classification&) = default;
};

// Two-machine unit-time flow shop instance with bipartite precedence
// between machine-1 operations A_1..A_n and machine-2 operations B_1..B_m.
// Immutable once constructed.
class Instance {
 public:
  // Validates n, m >= 1, arc ranges and uniqueness; throws PreconditionError.
  Instance(int n, int m, std::vector<Arc> arcs);

  int n() const { return n_; }
  int m() const { return m_; }
  // Sorted lexicographically by (a, b).
  std::span<const Arc> arcs() const { return arcs_; }
  std::size_t arc_count() const { return arcs_.size(); }

  const DegreeProfile& degrees() const { return profile_; }
  std::span<const int> successors(int a) const { return profile_.succ[a]; }
  std::span<const int> predecessors(int b) const { return profile_.pred[b]; }
  int out_degree(int a) const { return profile_.out_deg[a]; }
  int in_degree(int b) const { return profile_.in_deg[b]; }

  friend bool operator==(const Instance& x, const Instance& y) {
    return x.n_ == y.n_ && x.m_ == y.m_ && x.arcs_ == y.arcs_;
  }

 private:
  int n_;
  int m_;
  std::vector<Arc> arcs_;
  DegreeProfile profile_;
};

// Reads the line-oriented "p cdock <n> <m>" / "a <i> <j>" format.
// Lines starting with "c" are comments; blank lines are ignored.
// Throws ParseError carrying the offending line number.
Instance parse_instance(std::istream& in);
Instance parse_instance(std::string_view text);

// Canonical text: header, then arcs in (i, j) order, newline-terminated.
std::string serialize_instance(const Instance& inst);
// Same, preceded by one "c <text>" line per comment.
std::string serialize_instance(const Instance& inst,
                               std::span<const std::string> comments);

inline const DegreeProfile& degree_profile(const Instance& inst) {
  return inst.degrees();
}

Classification classify(const Instance& inst);

}  // namespace cdock
