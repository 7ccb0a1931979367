#ifndef JSPAN_ERRORS_HPP
#define JSPAN_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace jspan {

// Every recoverable failure in the toolkit is reported through Error with a
// machine-checkable kind. Format errors additionally carry a location:
// byte offset for bracketed input, 1-based line number for tabular input.
enum class Err {
  // bracketed format
  UnbalancedParens,
  EmptyNode,
  LeafWithoutTag,
  // tabular dependency format
  BadColumnCount,
  NonContiguousIds,
  HeadOutOfRange,
  SelfLoop,
  // head-rule files
  BadDirection,
  EmptyPattern,
  DuplicateLabel,
  // score files
  BadScoreRecord,
  NonFiniteScore,
  EmptyScoreSet,
  UnknownLabel,
  // structural preconditions
  LengthMismatch,
  IntervalOutOfRange,
  NotATree,
  NotCompliant,
  AlignmentMismatch,
  NTooLarge,
};

class Error : public std::runtime_error {
 public:
  Error(Err kind, std::string message, std::size_t location = kNoLocation)
      : std::runtime_error(std::move(message)), kind_(kind), location_(location) {}

  Err kind() const { return kind_; }

  // Byte offset or line number, depending on the producing parser.
  std::size_t location() const { return location_; }
  bool has_location() const { return location_ != kNoLocation; }

  static constexpr std::size_t kNoLocation = static_cast<std::size_t>(-1);

 private:
  Err kind_;
  std::size_t location_;
};

}  // namespace jspan

#endif  // JSPAN_ERRORS_HPP
