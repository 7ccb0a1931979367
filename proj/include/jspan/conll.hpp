#ifndef JSPAN_CONLL_HPP
#define JSPAN_CONLL_HPP

#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "jspan/dep_graph.hpp"
#include "jspan/tree.hpp"

namespace jspan {

/// One sentence of a tabular dependency file. Besides the parsed view,
/// every row's raw columns are retained so that files with more than the
/// 8-column core (ID, FORM, LEMMA, UPOS, XPOS, FEATS, HEAD, DEPREL, ...)
/// round-trip without losing the extra columns.
struct ConllBlock {
  Sentence sentence;
  DependencyGraph graph;
  std::vector<std::vector<std::string>> columns;  // one row per token, as read
};

/// Parses blank-line-separated blocks of tab-separated rows. "#" comment
/// lines are skipped. IDs must count 1..n; HEAD must be an integer in
/// [0, n] and never the row's own ID. Well-formedness (single root,
/// acyclicity) is deliberately NOT enforced here; raw corpora violate it
/// and the validator is the component that judges that.
/// Errors carry 1-based line numbers.
std::vector<ConllBlock> parse_conll(std::string_view text);

/// Rows for one sentence from scratch: the columns this toolkit populates
/// (ID, FORM, XPOS, HEAD, DEPREL) plus "_" for the rest of the 8-column
/// core. No trailing blank line.
std::string emit_conll(const Sentence& sentence, const DependencyGraph& graph);

/// Re-emits a parsed block, preserving any extra columns verbatim while
/// taking FORM/POS from the sentence and HEAD/DEPREL from the graph.
std::string emit_conll(const ConllBlock& block);

/// Streaming reader over an input stream; yields one block at a time.
class ConllReader {
 public:
  explicit ConllReader(std::istream& in) : in_(in) {}

  std::optional<ConllBlock> next();

  /// Line number of the last row read (for error reporting by callers).
  std::size_t line() const { return line_; }

 private:
  std::istream& in_;
  std::size_t line_ = 0;
};

}  // namespace jspan

#endif  // JSPAN_CONLL_HPP
