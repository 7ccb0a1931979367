#include "jspan/conll.hpp"

#include <charconv>

#include "jspan/errors.hpp"

namespace jspan {

namespace {

std::vector<std::string> split_tabs(std::string_view line) {
  std::vector<std::string> cols;
  std::size_t start = 0;
  while (true) {
    std::size_t tab = line.find('\t', start);
    if (tab == std::string_view::npos) {
      cols.emplace_back(line.substr(start));
      break;
    }
    cols.emplace_back(line.substr(start, tab - start));
    start = tab + 1;
  }
  return cols;
}

bool parse_int(const std::string& s, int* out) {
  const char* first = s.data();
  const char* last = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(first, last, *out);
  return ec == std::errc() && ptr == last && !s.empty();
}

struct BlockBuilder {
  ConllBlock block;
  std::vector<std::size_t> row_lines;

  bool empty() const { return block.columns.empty(); }

  void add_row(std::string_view line, std::size_t lineno) {
    std::vector<std::string> cols = split_tabs(line);
    if (cols.size() < 8) {
      throw Error(Err::BadColumnCount,
                  "expected at least 8 tab-separated columns, got " +
                      std::to_string(cols.size()),
                  lineno);
    }
    int id = 0;
    if (!parse_int(cols[0], &id) || id != static_cast<int>(block.columns.size()) + 1) {
      throw Error(Err::NonContiguousIds,
                  "ID column must count 1..n, got \"" + cols[0] + "\"", lineno);
    }
    int head = 0;
    if (!parse_int(cols[6], &head) || head < 0) {
      throw Error(Err::HeadOutOfRange, "HEAD column not a head index: \"" + cols[6] + "\"",
                  lineno);
    }
    if (head == id) {
      throw Error(Err::SelfLoop, "token " + std::to_string(id) + " is its own head", lineno);
    }

    Token tok;
    tok.index = id;
    tok.form = cols[1];
    tok.pos = (cols[4] != "_") ? cols[4] : cols[3];  // XPOS, falling back to UPOS
    block.sentence.push_back(std::move(tok));
    block.graph.heads.push_back(head);
    block.graph.labels.push_back(cols[7]);
    block.columns.push_back(std::move(cols));
    row_lines.push_back(lineno);
  }

  ConllBlock finish() {
    const int n = block.graph.size();
    for (int i = 0; i < n; ++i) {
      if (block.graph.heads[i] > n) {
        throw Error(Err::HeadOutOfRange,
                    "head " + std::to_string(block.graph.heads[i]) + " in a " +
                        std::to_string(n) + "-token sentence",
                    row_lines[i]);
      }
    }
    ConllBlock out = std::move(block);
    block = ConllBlock{};
    row_lines.clear();
    return out;
  }
};

bool is_comment(std::string_view line) { return !line.empty() && line[0] == '#'; }

bool is_blank(std::string_view line) {
  for (char c : line) {
    if (c != ' ' && c != '\t' && c != '\r') return false;
  }
  return true;
}

std::string_view strip_cr(std::string_view line) {
  if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
  return line;
}

}  // namespace

std::vector<ConllBlock> parse_conll(std::string_view text) {
  std::vector<ConllBlock> blocks;
  BlockBuilder builder;
  std::size_t lineno = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t nl = text.find('\n', start);
    std::string_view line = (nl == std::string_view::npos)
                                ? text.substr(start)
                                : text.substr(start, nl - start);
    ++lineno;
    line = strip_cr(line);
    if (is_blank(line)) {
      if (!builder.empty()) blocks.push_back(builder.finish());
    } else if (!is_comment(line)) {
      builder.add_row(line, lineno);
    }
    if (nl == std::string_view::npos) break;
    start = nl + 1;
  }
  if (!builder.empty()) blocks.push_back(builder.finish());
  return blocks;
}

std::string emit_conll(const Sentence& sentence, const DependencyGraph& graph) {
  if (static_cast<int>(sentence.size()) != graph.size()) {
    throw Error(Err::LengthMismatch,
                "sentence has " + std::to_string(sentence.size()) + " tokens but graph has " +
                    std::to_string(graph.size()));
  }
  std::string out;
  for (int i = 0; i < graph.size(); ++i) {
    out += std::to_string(i + 1);
    out += '\t';
    out += sentence[i].form;
    out += "\t_\t_\t";
    out += sentence[i].pos;
    out += "\t_\t";
    out += std::to_string(graph.heads[i]);
    out += '\t';
    out += graph.labels[i];
    if (i + 1 < graph.size()) out += '\n';
  }
  return out;
}

std::string emit_conll(const ConllBlock& block) {
  if (static_cast<int>(block.columns.size()) != block.graph.size()) {
    throw Error(Err::LengthMismatch, "block columns and graph differ in length");
  }
  std::string out;
  for (std::size_t i = 0; i < block.columns.size(); ++i) {
    std::vector<std::string> cols = block.columns[i];
    cols[6] = std::to_string(block.graph.heads[i]);
    cols[7] = block.graph.labels[i];
    for (std::size_t c = 0; c < cols.size(); ++c) {
      if (c) out += '\t';
      out += cols[c];
    }
    if (i + 1 < block.columns.size()) out += '\n';
  }
  return out;
}

std::optional<ConllBlock> ConllReader::next() {
  BlockBuilder builder;
  std::string line;
  while (std::getline(in_, line)) {
    ++line_;
    std::string_view sv = strip_cr(line);
    if (is_blank(sv)) {
      if (!builder.empty()) return builder.finish();
      continue;
    }
    if (is_comment(sv)) continue;
    builder.add_row(sv, line_);
  }
  if (!builder.empty()) return builder.finish();
  return std::nullopt;
}

}  // namespace jspan
