#include "jspan/dep_graph.hpp"

#include "jspan/errors.hpp"

namespace jspan {

void check_raw(const DependencyGraph& graph) {
  if (graph.heads.size() != graph.labels.size()) {
    throw Error(Err::LengthMismatch, "heads and labels differ in length");
  }
  const int n = graph.size();
  for (int i = 0; i < n; ++i) {
    if (graph.heads[i] < 0 || graph.heads[i] > n) {
      throw Error(Err::HeadOutOfRange,
                  "head " + std::to_string(graph.heads[i]) + " of token " +
                      std::to_string(i + 1) + " outside [0, " + std::to_string(n) + "]");
    }
    if (graph.heads[i] == i + 1) {
      throw Error(Err::SelfLoop, "token " + std::to_string(i + 1) + " is its own head");
    }
  }
}

bool is_well_formed_tree(const DependencyGraph& graph) {
  const int n = graph.size();
  int roots = 0;
  for (int h : graph.heads) {
    if (h == 0) ++roots;
  }
  if (roots != 1) return false;
  // Walk the head chain of every token; in a tree each walk reaches the
  // virtual root within n steps.
  for (int t = 1; t <= n; ++t) {
    int cur = t;
    int steps = 0;
    while (cur != 0) {
      cur = graph.heads[cur - 1];
      if (++steps > n) return false;  // revisited somebody: cycle
    }
  }
  return true;
}

}  // namespace jspan
