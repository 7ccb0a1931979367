#ifndef JSPAN_HEAD_RULES_HPP
#define JSPAN_HEAD_RULES_HPP

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "jspan/dep_graph.hpp"
#include "jspan/tree.hpp"

namespace jspan {

enum class ScanDirection { Leftward, Rightward };

/// One priority tier: an alternation of items, each a literal label or a
/// prefix followed by '*'.
struct RulePattern {
  std::vector<std::string> items;

  bool matches(std::string_view key) const;
};

struct HeadRule {
  ScanDirection direction = ScanDirection::Leftward;
  std::vector<RulePattern> priority;  // scanned in order
};

/// Head-percolation rule table. The file format is line-based:
///   LABEL<TAB>l|r<TAB>pat1;pat2;...
/// where each pattern is a '|'-separated alternation of items. Lines
/// starting with '#' are comments. Directives: "@default l|r" sets the
/// fallback scan direction, "@root LABEL" sets the relation used for the
/// root arc (default "root").
struct HeadRuleTable {
  std::map<std::string, HeadRule> rules;
  ScanDirection default_direction = ScanDirection::Leftward;
  std::string root_label = "root";
};

/// Parses a rule file. Errors carry 1-based line numbers:
/// BadDirection, EmptyPattern, DuplicateLabel.
HeadRuleTable parse_rules(std::string_view text);

/// Index of the head child of an internal node. Tiers are scanned in
/// priority order; within a tier children are scanned left-to-right
/// (leftward) or right-to-left (rightward); the first child whose label
/// (internal child) or POS tag (token child) matches wins. When nothing
/// matches, falls back to the leftmost child under the table's default
/// leftward direction, the rightmost otherwise.
std::size_t find_head_child(const ConstNode& node, const HeadRuleTable& table);

/// Converts a constituency tree into a dependency graph by bottom-up head
/// percolation: each node's lexical head is the lexical head of its head
/// child, every non-head child's lexical head attaches to it, and the
/// sentence head attaches to the virtual root. Relation labels come from
/// the non-head child's function tag, lowercased, or "dep" when absent.
/// The output is single-rooted, acyclic and projective for every input.
DependencyGraph to_dependency(const ConstNode& tree, const HeadRuleTable& table);

}  // namespace jspan

#endif  // JSPAN_HEAD_RULES_HPP
