#ifndef JSPAN_TREE_HPP
#define JSPAN_TREE_HPP

#include <string>
#include <vector>

namespace jspan {

/// One terminal of a sentence. Both tree views share the same 1-based
/// token index space.
struct Token {
  int index = 0;
  std::string form;
  std::string pos;

  friend bool operator==(const Token&, const Token&) = default;
};

using Sentence = std::vector<Token>;

/// Node of an n-ary constituency tree. A node is either internal (owns child
/// nodes) or a leaf (owns one token; the preterminal tag lives in token.pos).
/// Intervals are 1-based and inclusive; a node's interval is always the
/// contiguous union of its children's intervals.
struct ConstNode {
  std::string label;     // category, e.g. "NP"; empty on leaves
  std::string function;  // function tag split off after the first '-'; empty when absent
  int lo = 0;
  int hi = 0;
  Token token;           // meaningful only on leaves
  std::vector<ConstNode> children;

  bool leaf() const { return children.empty(); }

  friend bool operator==(const ConstNode&, const ConstNode&) = default;

  static ConstNode make_leaf(Token t) {
    ConstNode n;
    n.lo = n.hi = t.index;
    n.token = std::move(t);
    return n;
  }
};

/// Collects the leaf tokens of `root` in left-to-right order.
Sentence tokens_of(const ConstNode& root);

/// Number of tokens spanned by `root`.
int token_count(const ConstNode& root);

/// Label as written in the bracketed format: label plus "-" plus function
/// tag when one is present.
std::string full_label(const ConstNode& node);

/// Splits a raw node label into (label, function) at the first '-'. Labels
/// beginning with '-' (PTB escapes such as "-LRB-") are kept whole, as are
/// labels with no dash.
void split_label(const std::string& raw, std::string* label, std::string* function);

}  // namespace jspan

#endif  // JSPAN_TREE_HPP
