#include "cdock/instance.hpp"

#include <algorithm>
#include <sstream>

#include "cdock/error.hpp"

namespace cdock {

Instance::Instance(int n, int m, std::vector<Arc> arcs)
    : n_(n), m_(m), arcs_(std::move(arcs)) {
  if (n_ < 1 || m_ < 1) {
    throw PreconditionError("instance needs n >= 1 and m >= 1, got n=" +
                            std::to_string(n_) + " m=" + std::to_string(m_));
  }
  for (const Arc& arc : arcs_) {
    if (arc.a < 0 || arc.a >= n_ || arc.b < 0 || arc.b >= m_) {
      throw PreconditionError("arc (" + std::to_string(arc.a + 1) + "," +
                              std::to_string(arc.b + 1) + ") out of range");
    }
  }
  std::sort(arcs_.begin(), arcs_.end());
  const auto dup = std::adjacent_find(arcs_.begin(), arcs_.end());
  if (dup != arcs_.end()) {
    throw PreconditionError("duplicate arc (" + std::to_string(dup->a + 1) +
                            "," + std::to_string(dup->b + 1) + ")");
  }

  profile_.out_deg.assign(n_, 0);
  profile_.in_deg.assign(m_, 0);
  profile_.succ.resize(n_);
  profile_.pred.resize(m_);
  // arcs_ is sorted by (a, b) so succ lists come out sorted; pred lists are
  // filled in increasing a for the same reason.
  for (const Arc& arc : arcs_) {
    profile_.succ[arc.a].push_back(arc.b);
    profile_.pred[arc.b].push_back(arc.a);
    ++profile_.out_deg[arc.a];
    ++profile_.in_deg[arc.b];
  }
}

namespace {

bool is_comment(std::string_view line) {
  return !line.empty() && line[0] == 'c' &&
         (line.size() == 1 || line[1] == ' ' || line[1] == '\t');
}

bool is_blank(std::string_view line) {
  return std::all_of(line.begin(), line.end(),
                     [](char ch) { return ch == ' ' || ch == '\t' || ch == '\r'; });
}

}  // namespace

Instance parse_instance(std::istream& in) {
  int n = 0;
  int m = 0;
  bool have_header = false;
  std::vector<Arc> arcs;
  std::vector<int> arc_lines;

  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (is_blank(line) || is_comment(line)) continue;

    std::istringstream fields(line);
    std::string tag;
    fields >> tag;
    if (tag == "p") {
      if (have_header) throw ParseError("duplicate header", line_no);
      std::string format;
      if (!(fields >> format >> n >> m) || format != "cdock") {
        throw ParseError("malformed header, expected \"p cdock <n> <m>\"", line_no);
      }
      std::string rest;
      if (fields >> rest) throw ParseError("malformed header, trailing data", line_no);
      if (n < 1 || m < 1) throw ParseError("n and m must be positive", line_no);
      have_header = true;
    } else if (tag == "a") {
      if (!have_header) throw ParseError("arc before header", line_no);
      long long i = 0;
      long long j = 0;
      std::string rest;
      if (!(fields >> i >> j) || (fields >> rest)) {
        throw ParseError("malformed arc, expected \"a <i> <j>\"", line_no);
      }
      if (i < 1 || i > n || j < 1 || j > m) {
        throw ParseError("index out of range", line_no);
      }
      arcs.push_back({static_cast<int>(i - 1), static_cast<int>(j - 1)});
      arc_lines.push_back(line_no);
    } else {
      throw ParseError("unknown line type \"" + tag + "\"", line_no);
    }
  }
  if (!have_header) throw ParseError("missing header \"p cdock <n> <m>\"", line_no);

  // Duplicates are rejected against the line that repeats an earlier arc.
  std::vector<std::size_t> order(arcs.size());
  for (std::size_t k = 0; k < order.size(); ++k) order[k] = k;
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return arcs[x] < arcs[y]; });
  for (std::size_t k = 1; k < order.size(); ++k) {
    if (arcs[order[k]] == arcs[order[k - 1]]) {
      throw ParseError("duplicate arc", arc_lines[std::max(order[k], order[k - 1])]);
    }
  }
  return Instance(n, m, std::move(arcs));
}

Instance parse_instance(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_instance(in);
}

std::string serialize_instance(const Instance& inst) {
  return serialize_instance(inst, {});
}

std::string serialize_instance(const Instance& inst,
                               std::span<const std::string> comments) {
  std::ostringstream out;
  for (const std::string& comment : comments) out << "c " << comment << '\n';
  out << "p cdock " << inst.n() << ' ' << inst.m() << '\n';
  for (const Arc& arc : inst.arcs()) {
    out << "a " << arc.a + 1 << ' ' << arc.b + 1 << '\n';
  }
  return out.str();
}

Classification classify(const Instance& inst) {
  const DegreeProfile& deg = inst.degrees();
  Classification c;
  c.is_d2 = std::all_of(deg.out_deg.begin(), deg.out_deg.end(),
                        [](int d) { return d == 2; });
  c.has_pendant_b = std::any_of(deg.in_deg.begin(), deg.in_deg.end(),
                                [](int d) { return d == 0; });
  return c;
}

}  // namespace cdock
