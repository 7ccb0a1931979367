#include "jspan/repair.hpp"

#include <algorithm>

#include "jspan/errors.hpp"

namespace jspan {

namespace {

struct Component {
  int lo = 0;
  int hi = 0;
  int root = 0;  // the component's unique external-headed token
};

struct Repairer {
  DependencyGraph* graph;
  SplitMix64 rng;
  RepairLog* log;

  void repoint(int token, int new_head, bool* changed_here) {
    int& head = graph->heads[token - 1];
    if (head == new_head) return;
    log->changed_arcs.push_back({token, head, new_head});
    head = new_head;
    *changed_here = true;
  }

  // Returns the subtree's head token (its unique external-headed token once
  // this call finishes). Children are repaired before their parent, which is
  // what makes a single pass sufficient: at this node, only the child span
  // heads can still point astray, and only they may be re-pointed without
  // un-fixing a child span.
  int process(const ConstNode& node) {
    if (node.leaf()) return node.token.index;

    std::vector<Component> comps;
    comps.reserve(node.children.size());
    for (const ConstNode& child : node.children) {
      comps.push_back({child.lo, child.hi, process(child)});
    }
    const int lo = node.lo;
    const int hi = node.hi;

    std::vector<int> external;  // ascending: components come left to right
    for (const Component& c : comps) {
      int h = graph->heads[c.root - 1];
      if (h < lo || h > hi) external.push_back(c.root);
    }

    // Head chains that never leave this interval loop through component
    // roots; find the roots sitting on such loops.
    const int k = static_cast<int>(comps.size());
    std::vector<int> succ(k, -1);  // -1: chain exits the interval
    for (int i = 0; i < k; ++i) {
      int h = graph->heads[comps[i].root - 1];
      if (h < lo || h > hi) continue;
      for (int j = 0; j < k; ++j) {
        if (h >= comps[j].lo && h <= comps[j].hi) {
          succ[i] = j;
          break;
        }
      }
    }
    std::vector<int> color(k, 0);  // 0 fresh, 1 on current path, 2 settled
    std::vector<bool> on_cycle(k, false);
    for (int start = 0; start < k; ++start) {
      if (color[start] != 0) continue;
      std::vector<int> path;
      int cur = start;
      while (cur != -1 && color[cur] == 0) {
        color[cur] = 1;
        path.push_back(cur);
        cur = succ[cur];
      }
      if (cur != -1 && color[cur] == 1) {
        for (std::size_t p = path.size(); p-- > 0;) {
          on_cycle[path[p]] = true;
          if (path[p] == cur) break;
        }
      }
      for (int v : path) color[v] = 2;
    }
    std::vector<int> cycle_roots;
    for (int i = 0; i < k; ++i) {
      if (on_cycle[i]) cycle_roots.push_back(comps[i].root);
    }

    if (external.size() == 1 && cycle_roots.empty()) {
      return external.front();  // interval already consistent
    }
    // When no chain exits the interval, the successor graph is total and
    // therefore cyclic, so the candidate list is never empty.
    const std::vector<int>& candidates = external.empty() ? cycle_roots : external;
    int head = candidates.size() == 1 ? candidates.front()
                                      : candidates[rng.below(candidates.size())];

    bool changed_here = false;
    if (external.empty()) {
      // All chains loop inside: promote the chosen token to a provisional
      // root. Enclosing intervals see it as external and settle it.
      repoint(head, 0, &changed_here);
    }
    for (int e : external) {
      if (e != head) repoint(e, head, &changed_here);
    }
    for (int e : cycle_roots) {
      if (e != head) repoint(e, head, &changed_here);
    }
    if (changed_here) ++log->violations_fixed;
    return head;
  }
};

}  // namespace

std::pair<DependencyGraph, RepairLog> repair_pair(const ConstNode& tree,
                                                  const DependencyGraph& graph,
                                                  std::uint64_t seed) {
  if (token_count(tree) != graph.size()) {
    throw Error(Err::LengthMismatch,
                "tree spans " + std::to_string(token_count(tree)) + " tokens but graph has " +
                    std::to_string(graph.size()));
  }
  check_raw(graph);

  DependencyGraph repaired = graph;
  RepairLog log;
  log.seed = seed;
  Repairer repairer{&repaired, SplitMix64(seed), &log};
  repairer.process(tree);
  return {std::move(repaired), std::move(log)};
}

std::pair<std::vector<std::pair<DependencyGraph, RepairLog>>, CorpusRepairStats> repair_corpus(
    const std::vector<std::pair<ConstNode, DependencyGraph>>& pairs, std::uint64_t seed) {
  std::vector<std::pair<DependencyGraph, RepairLog>> results;
  results.reserve(pairs.size());
  CorpusRepairStats stats;
  stats.total_pairs = pairs.size();
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    try {
      if (!validate_pair(pairs[i].first, pairs[i].second).compliant) ++stats.non_compliant;
      auto result = repair_pair(pairs[i].first, pairs[i].second, seed ^ i);
      stats.arcs_changed += result.second.changed_arcs.size();
      results.push_back(std::move(result));
    } catch (const Error& e) {
      throw Error(e.kind(), "pair " + std::to_string(i) + ": " + e.what(), e.location());
    }
  }
  return {std::move(results), stats};
}

}  // namespace jspan
