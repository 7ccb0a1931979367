#include "jspan/joint.hpp"

#include <algorithm>
#include <set>

namespace jspan {

namespace {

void collect_intervals(const ConstNode& node, std::set<std::pair<int, int>>* out) {
  if (node.leaf()) return;
  out->insert({node.lo, node.hi});
  for (const ConstNode& child : node.children) collect_intervals(child, out);
}

}  // namespace

std::vector<int> external_heads(const DependencyGraph& graph, int lo, int hi) {
  const int n = graph.size();
  if (lo < 1 || hi > n || lo > hi) {
    throw Error(Err::IntervalOutOfRange,
                "interval [" + std::to_string(lo) + ", " + std::to_string(hi) +
                    "] outside [1, " + std::to_string(n) + "]");
  }
  std::vector<int> out;
  for (int t = lo; t <= hi; ++t) {
    int h = graph.head_of(t);
    if (h < lo || h > hi) out.push_back(t);  // the virtual root 0 is always outside
  }
  return out;
}

bool is_projective(const DependencyGraph& graph) {
  if (!is_well_formed_tree(graph)) {
    throw Error(Err::NotATree, "projectivity is defined on well-formed trees only");
  }
  const int n = graph.size();
  // Pairwise crossing test over all arcs, the root arc included. Two arcs
  // cross iff their position intervals properly interleave.
  for (int d1 = 1; d1 <= n; ++d1) {
    int a = std::min(graph.head_of(d1), d1);
    int b = std::max(graph.head_of(d1), d1);
    for (int d2 = d1 + 1; d2 <= n; ++d2) {
      int c = std::min(graph.head_of(d2), d2);
      int d = std::max(graph.head_of(d2), d2);
      if ((a < c && c < b && b < d) || (c < a && a < d && d < b)) return false;
    }
  }
  return true;
}

ValidationReport validate_pair(const ConstNode& tree, const DependencyGraph& graph,
                               bool require_projectivity) {
  if (token_count(tree) != graph.size()) {
    throw Error(Err::LengthMismatch,
                "tree spans " + std::to_string(token_count(tree)) + " tokens but graph has " +
                    std::to_string(graph.size()));
  }
  ValidationReport report;
  report.well_formed_tree = is_well_formed_tree(graph);
  report.projective = report.well_formed_tree && is_projective(graph);

  // Unary chains share an interval; each distinct interval is judged once.
  std::set<std::pair<int, int>> intervals;
  collect_intervals(tree, &intervals);
  for (auto [lo, hi] : intervals) {
    std::vector<int> ext = external_heads(graph, lo, hi);
    if (ext.size() != 1) {
      report.violations.push_back({lo, hi, std::move(ext)});
    }
  }
  report.compliant = report.well_formed_tree && report.violations.empty() &&
                     (!require_projectivity || report.projective);
  return report;
}

namespace {

JointNode annotate(const ConstNode& node, const DependencyGraph& graph) {
  if (node.leaf()) return JointNode::make_leaf(node.token);
  JointNode out;
  out.categ = node.label;
  out.function = node.function;
  out.lo = node.lo;
  out.hi = node.hi;
  out.head_token = external_heads(graph, node.lo, node.hi).front();
  for (const ConstNode& child : node.children) {
    out.children.push_back(annotate(child, graph));
  }
  return out;
}

void read_off(const JointNode& node, int enclosing_head, DependencyGraph* graph) {
  if (node.leaf()) {
    graph->heads[node.head_token - 1] = enclosing_head;
    return;
  }
  for (const JointNode& child : node.children) {
    // A child whose head token equals ours is the head child; its tokens
    // keep looking upward. Any other child's head attaches here.
    read_off(child, child.head_token == node.head_token ? enclosing_head : node.head_token,
             graph);
  }
}

}  // namespace

JointNode build_joint(const ConstNode& tree, const DependencyGraph& graph) {
  ValidationReport report = validate_pair(tree, graph);
  if (!report.compliant) throw NotCompliantError(std::move(report));
  return annotate(tree, graph);
}

ConstNode drop_annotations(const JointNode& joint) {
  if (joint.leaf()) return ConstNode::make_leaf(joint.token);
  ConstNode out;
  out.label = joint.categ;
  out.function = joint.function;
  out.lo = joint.lo;
  out.hi = joint.hi;
  for (const JointNode& child : joint.children) {
    out.children.push_back(drop_annotations(child));
  }
  return out;
}

DependencyGraph read_off_dependencies(const JointNode& joint) {
  const int n = joint.hi - joint.lo + 1;
  DependencyGraph graph;
  graph.heads.assign(n, 0);
  graph.labels.assign(n, "_");
  read_off(joint, 0, &graph);
  return graph;
}

}  // namespace jspan
