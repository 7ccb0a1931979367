#ifndef JSPAN_JOINT_HPP
#define JSPAN_JOINT_HPP

#include <string>
#include <vector>

#include "jspan/dep_graph.hpp"
#include "jspan/errors.hpp"
#include "jspan/tree.hpp"

namespace jspan {

/// Constituency node annotated with its category and head token: the node's
/// head token is the one token in the interval whose dependency head lies
/// outside it, and it always coincides with the head token of exactly one
/// child.
struct JointNode {
  std::string categ;
  std::string function;
  int lo = 0;
  int hi = 0;
  int head_token = 0;
  Token token;  // meaningful only on leaves
  std::vector<JointNode> children;

  bool leaf() const { return children.empty(); }

  friend bool operator==(const JointNode&, const JointNode&) = default;

  static JointNode make_leaf(Token t) {
    JointNode n;
    n.lo = n.hi = n.head_token = t.index;
    n.token = std::move(t);
    return n;
  }
};

struct SpanViolation {
  int lo = 0;
  int hi = 0;
  std::vector<int> external_tokens;

  friend bool operator==(const SpanViolation&, const SpanViolation&) = default;
};

/// Machine-checkable compatibility verdict for one (tree, graph) pair.
/// `compliant` requires a well-formed dependency tree and exactly one
/// external-headed token per constituent interval; projectivity is computed
/// and reported but folded into `compliant` only when the caller asked for
/// the strict check.
struct ValidationReport {
  bool well_formed_tree = false;
  bool projective = false;
  std::vector<SpanViolation> violations;  // one per distinct interval, sorted
  bool compliant = false;
};

/// Tokens t in [lo, hi] whose head lies outside [lo, hi], ascending. The
/// virtual root 0 counts as outside every interval.
std::vector<int> external_heads(const DependencyGraph& graph, int lo, int hi);

/// True iff no two arcs cross when drawn above the sentence (the arc from
/// the virtual root participates). Requires a well-formed tree; throws
/// Error(NotATree) otherwise.
bool is_projective(const DependencyGraph& graph);

/// Decides compatibility. When require_projectivity is set, `compliant`
/// additionally demands a projective graph. Throws Error(LengthMismatch)
/// when token counts disagree.
ValidationReport validate_pair(const ConstNode& tree, const DependencyGraph& graph,
                               bool require_projectivity = false);

/// Annotates every node with its head token and category. Requires a
/// compliant pair; throws NotCompliantError otherwise.
JointNode build_joint(const ConstNode& tree, const DependencyGraph& graph);

/// Strips the annotations again; inverse of build_joint on the tree side.
ConstNode drop_annotations(const JointNode& joint);

/// Reads a dependency graph off a joint tree: each token attaches to the
/// head token of the lowest ancestor whose head token differs from it, and
/// the tree's head token attaches to the virtual root. Relation labels are
/// not recoverable from the tree and come out as "_". Exact for trees whose
/// arcs attach span head to span head (decoder output, head-percolation
/// conversions).
DependencyGraph read_off_dependencies(const JointNode& joint);

/// Thrown by build_joint; carries the report explaining the refusal.
class NotCompliantError : public Error {
 public:
  explicit NotCompliantError(ValidationReport report)
      : Error(Err::NotCompliant, "pair does not satisfy the joint-span conditions"),
        report_(std::move(report)) {}

  const ValidationReport& report() const { return report_; }

 private:
  ValidationReport report_;
};

}  // namespace jspan

#endif  // JSPAN_JOINT_HPP
