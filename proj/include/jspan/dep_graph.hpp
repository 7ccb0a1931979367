#ifndef JSPAN_DEP_GRAPH_HPP
#define JSPAN_DEP_GRAPH_HPP

#include <string>
#include <vector>

namespace jspan {

/// Per-token head assignment. heads[i] is the head of token i+1 and lies in
/// [0, n]; 0 is the virtual root. A raw graph only guarantees no self-loops
/// and in-range heads; it need not be a tree (input corpora contain
/// multi-root and cyclic sentences, which the validator reports and the
/// repairer fixes).
struct DependencyGraph {
  std::vector<int> heads;
  std::vector<std::string> labels;

  int size() const { return static_cast<int>(heads.size()); }
  int head_of(int token) const { return heads[token - 1]; }
  const std::string& label_of(int token) const { return labels[token - 1]; }

  friend bool operator==(const DependencyGraph&, const DependencyGraph&) = default;
};

/// Raw-form invariants: sizes agree, heads in [0, n], no token is its own
/// head. Throws Error(SelfLoop/HeadOutOfRange/LengthMismatch) on violation.
void check_raw(const DependencyGraph& graph);

/// True iff the graph has exactly one root arc and no cycles.
bool is_well_formed_tree(const DependencyGraph& graph);

}  // namespace jspan

#endif  // JSPAN_DEP_GRAPH_HPP
