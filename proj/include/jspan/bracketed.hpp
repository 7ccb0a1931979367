#ifndef JSPAN_BRACKETED_HPP
#define JSPAN_BRACKETED_HPP

#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "jspan/tree.hpp"

namespace jspan {

/// Parses a sequence of PTB-style bracketed trees. Whitespace-tolerant;
/// node labels carry an optional function tag after the first '-';
/// "-LRB-"/"-RRB-" atoms decode to literal parentheses. On malformed input
/// throws Error(UnbalancedParens/EmptyNode/LeafWithoutTag) carrying the
/// 0-based byte offset of the fault.
std::vector<ConstNode> parse_bracketed(std::string_view text);

/// Single-line S-expression for one tree. parse_bracketed(emit_bracketed(t))
/// yields trees structurally equal to t.
std::string emit_bracketed(const ConstNode& tree);

/// Streaming reader: yields one tree at a time so corpus-size inputs never
/// have to be resident in memory. Byte offsets in errors are relative to the
/// start of the stream.
class BracketedReader {
 public:
  explicit BracketedReader(std::istream& in) : in_(in) {}

  /// Next tree, or nullopt at end of input.
  std::optional<ConstNode> next();

 private:
  std::istream& in_;
  std::string buffer_;
  std::size_t pos_ = 0;        // cursor into buffer_
  std::size_t consumed_ = 0;   // bytes of the stream before buffer_[0]
  bool fill();
};

}  // namespace jspan

#endif  // JSPAN_BRACKETED_HPP
