#include "jspan/bracketed.hpp"

#include <cctype>

#include "jspan/errors.hpp"

namespace jspan {

namespace {

bool is_ws(char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' || c == '\f'; }

struct Cursor {
  std::string_view text;
  std::size_t pos = 0;
  std::size_t base = 0;  // offset of text[0] in the underlying stream

  bool done() const { return pos >= text.size(); }
  char peek() const { return text[pos]; }
  std::size_t at() const { return base + pos; }

  void skip_ws() {
    while (!done() && is_ws(peek())) ++pos;
  }

  std::string_view atom() {
    std::size_t start = pos;
    while (!done() && !is_ws(peek()) && peek() != '(' && peek() != ')') ++pos;
    return text.substr(start, pos - start);
  }
};

std::string unescape_form(std::string_view atom) {
  std::string out;
  out.reserve(atom.size());
  for (std::size_t i = 0; i < atom.size();) {
    if (atom.compare(i, 5, "-LRB-") == 0) {
      out += '(';
      i += 5;
    } else if (atom.compare(i, 5, "-RRB-") == 0) {
      out += ')';
      i += 5;
    } else {
      out += atom[i++];
    }
  }
  return out;
}

std::string escape_atom(const std::string& s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    if (c == '(') {
      out += "-LRB-";
    } else if (c == ')') {
      out += "-RRB-";
    } else {
      out += c;
    }
  }
  return out;
}

// tree := '(' label (tree+ | terminal) ')'
ConstNode parse_node(Cursor& cur, int* next_index) {
  const std::size_t open_at = cur.at();
  ++cur.pos;  // consume '('
  cur.skip_ws();
  if (cur.done()) throw Error(Err::UnbalancedParens, "unterminated node", open_at);
  if (cur.peek() == '(' || cur.peek() == ')') {
    throw Error(Err::EmptyNode, "node without a label", open_at);
  }
  std::string_view raw_label = cur.atom();

  ConstNode node;
  bool has_terminal = false;
  std::size_t terminal_at = 0;

  while (true) {
    cur.skip_ws();
    if (cur.done()) throw Error(Err::UnbalancedParens, "unterminated node", open_at);
    char c = cur.peek();
    if (c == ')') {
      ++cur.pos;
      break;
    }
    if (c == '(') {
      if (has_terminal) {
        throw Error(Err::LeafWithoutTag, "terminal mixed with child nodes", terminal_at);
      }
      node.children.push_back(parse_node(cur, next_index));
      continue;
    }
    // terminal atom
    std::size_t atom_at = cur.at();
    std::string_view form = cur.atom();
    if (has_terminal || !node.children.empty()) {
      throw Error(Err::LeafWithoutTag, "terminal without its own preterminal tag", atom_at);
    }
    has_terminal = true;
    terminal_at = atom_at;
    node.token.form = unescape_form(form);
  }

  if (has_terminal) {
    // Preterminal: the node collapses into a token leaf; the tag is kept
    // whole (Token has no function slot, and dashes occur inside real tags).
    node.token.pos = std::string(raw_label);
    node.token.index = (*next_index)++;
    node.lo = node.hi = node.token.index;
    return node;
  }
  if (node.children.empty()) {
    throw Error(Err::EmptyNode, "node with neither children nor terminal", open_at);
  }
  split_label(std::string(raw_label), &node.label, &node.function);
  node.lo = node.children.front().lo;
  node.hi = node.children.back().hi;
  return node;
}

ConstNode parse_one(Cursor& cur) {
  if (cur.peek() == ')') {
    throw Error(Err::UnbalancedParens, "unmatched ')'", cur.at());
  }
  if (cur.peek() != '(') {
    throw Error(Err::LeafWithoutTag, "bare terminal at top level", cur.at());
  }
  int next_index = 1;
  return parse_node(cur, &next_index);
}

void emit_node(const ConstNode& node, std::string* out) {
  out->push_back('(');
  if (node.leaf()) {
    *out += escape_atom(node.token.pos);
    out->push_back(' ');
    *out += escape_atom(node.token.form);
  } else {
    *out += escape_atom(full_label(node));
    for (const ConstNode& child : node.children) {
      out->push_back(' ');
      emit_node(child, out);
    }
  }
  out->push_back(')');
}

}  // namespace

std::vector<ConstNode> parse_bracketed(std::string_view text) {
  std::vector<ConstNode> trees;
  Cursor cur{text};
  while (true) {
    cur.skip_ws();
    if (cur.done()) break;
    trees.push_back(parse_one(cur));
  }
  return trees;
}

std::string emit_bracketed(const ConstNode& tree) {
  std::string out;
  emit_node(tree, &out);
  return out;
}

bool BracketedReader::fill() {
  char chunk[4096];
  in_.read(chunk, sizeof(chunk));
  std::streamsize got = in_.gcount();
  if (got <= 0) return false;
  buffer_.append(chunk, static_cast<std::size_t>(got));
  return true;
}

std::optional<ConstNode> BracketedReader::next() {
  // Drop leading whitespace, keeping stream offsets honest.
  while (true) {
    while (pos_ < buffer_.size() && is_ws(buffer_[pos_])) ++pos_;
    if (pos_ < buffer_.size()) break;
    consumed_ += buffer_.size();
    buffer_.clear();
    pos_ = 0;
    if (!fill()) return std::nullopt;
  }
  consumed_ += pos_;
  buffer_.erase(0, pos_);
  pos_ = 0;

  if (buffer_[0] != '(') {
    Cursor cur{buffer_, 0, consumed_};
    parse_one(cur);  // throws with the right offset
  }
  // Pull input until the tree is balanced.
  int depth = 0;
  std::size_t end = 0;
  while (true) {
    for (; end < buffer_.size(); ++end) {
      if (buffer_[end] == '(') ++depth;
      if (buffer_[end] == ')' && --depth == 0) {
        ++end;
        goto balanced;
      }
    }
    if (!fill()) {
      throw Error(Err::UnbalancedParens, "unterminated tree at end of input",
                  consumed_ + buffer_.size());
    }
  }
balanced:
  Cursor cur{std::string_view(buffer_).substr(0, end), 0, consumed_};
  ConstNode tree = parse_one(cur);
  pos_ = end;
  return tree;
}

}  // namespace jspan
