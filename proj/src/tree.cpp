#include "jspan/tree.hpp"

namespace jspan {

namespace {

void collect_tokens(const ConstNode& node, Sentence* out) {
  if (node.leaf()) {
    out->push_back(node.token);
    return;
  }
  for (const ConstNode& child : node.children) collect_tokens(child, out);
}

}  // namespace

Sentence tokens_of(const ConstNode& root) {
  Sentence out;
  collect_tokens(root, &out);
  return out;
}

int token_count(const ConstNode& root) { return root.hi - root.lo + 1; }

std::string full_label(const ConstNode& node) {
  if (node.function.empty()) return node.label;
  return node.label + "-" + node.function;
}

void split_label(const std::string& raw, std::string* label, std::string* function) {
  std::size_t dash = raw.find('-');
  if (dash == std::string::npos || dash == 0) {
    *label = raw;
    function->clear();
    return;
  }
  *label = raw.substr(0, dash);
  *function = raw.substr(dash + 1);
}

}  // namespace jspan
