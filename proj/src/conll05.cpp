#include "srlu/conll05.hpp"

#include <algorithm>
#include <sstream>

#include "srlu/textutil.hpp"

namespace srlu {

namespace {

struct OpenSpan {
  std::string role;
  int start = -1;
};

std::string at(int line, int column) {
  return " (line " + std::to_string(line) + ", column " + std::to_string(column) + ")";
}

// One predicate column cell: optional "(ROLE*" opening, "*", optional ")".
void apply_cell(const std::string& cell, int token, int line, int column,
                OpenSpan& open, SpanFrame& frame) {
  size_t i = 0;
  if (i < cell.size() && cell[i] == '(') {
    size_t star = cell.find('*', i);
    if (star == std::string::npos)
      throw ParseError("props: malformed cell '" + cell + "'" + at(line, column));
    if (open.start >= 0)
      throw ParseError("props: role bracket opened before '" + open.role + "' was closed" +
                       at(line, column));
    open.role = cell.substr(i + 1, star - i - 1);
    if (open.role.empty())
      throw ParseError("props: empty role label" + at(line, column));
    open.start = token;
    i = star;
  }
  if (i >= cell.size() || cell[i] != '*')
    throw ParseError("props: malformed cell '" + cell + "'" + at(line, column));
  ++i;
  if (i < cell.size() && cell[i] == ')') {
    if (open.start < 0)
      throw ParseError("props: closing bracket without an open role" + at(line, column));
    if (open.role == "V") {
      if (frame.predicate >= 0)
        throw ParseError("props: second (V*) in one column" + at(line, column));
      frame.predicate = open.start;
    } else {
      frame.args.push_back({open.start, token, open.role});
    }
    open.start = -1;
    ++i;
  }
  if (i != cell.size())
    throw ParseError("props: malformed cell '" + cell + "'" + at(line, column));
}

Conll05Sentence parse_block(const std::vector<std::pair<int, std::string>>& rows,
                            int block_index) {
  std::vector<std::vector<std::string>> fields;
  fields.reserve(rows.size());
  for (const auto& [line, text] : rows) {
    fields.push_back(split_ws(text));
    if (fields.back().size() != fields.front().size())
      throw ParseError("props: ragged row, expected " +
                       std::to_string(fields.front().size()) + " columns" + at(line, 1));
  }
  const int n = static_cast<int>(rows.size());
  const int npred = static_cast<int>(fields.front().size()) - 1;

  Conll05Sentence out;
  out.sentence.id = "s" + std::to_string(block_index);
  out.sentence.tokens.reserve(n);
  for (int t = 0; t < n; ++t) {
    Token tok;
    tok.index = t;
    tok.form = "_";  // the format carries no word forms
    out.sentence.tokens.push_back(std::move(tok));
  }

  for (int col = 0; col < npred; ++col) {
    SpanFrame frame;
    frame.predicate = -1;
    OpenSpan open;
    for (int t = 0; t < n; ++t)
      apply_cell(fields[t][col + 1], t, rows[t].first, col + 2, open, frame);
    if (open.start >= 0)
      throw ParseError("props: role '" + open.role + "' left unclosed at sentence end" +
                       at(rows.back().first, col + 2));
    if (frame.predicate < 0)
      throw ParseError("props: column " + std::to_string(col + 2) + " has no (V*)" +
                       at(rows.front().first, col + 2));
    const std::string& target = fields[frame.predicate][0];
    if (target != "-") frame.sense = target;
    std::sort(frame.args.begin(), frame.args.end(),
              [](const SpanArgument& a, const SpanArgument& b) { return a.start < b.start; });
    validate_span_frame(frame, n, out.sentence.id);
    out.frames.push_back(std::move(frame));
  }
  std::stable_sort(out.frames.begin(), out.frames.end(),
                   [](const SpanFrame& a, const SpanFrame& b) { return a.predicate < b.predicate; });
  for (size_t i = 0; i + 1 < out.frames.size(); ++i)
    if (out.frames[i].predicate == out.frames[i + 1].predicate)
      throw ParseError("props: two columns share predicate token " +
                       std::to_string(out.frames[i].predicate) + " in block " +
                       std::to_string(block_index));
  return out;
}

}  // namespace

std::vector<Conll05Sentence> parse_conll05_props(std::string_view text) {
  std::vector<Conll05Sentence> out;
  std::vector<std::pair<int, std::string>> block;
  int line_no = 0;
  auto flush = [&] {
    if (!block.empty()) {
      out.push_back(parse_block(block, static_cast<int>(out.size())));
      block.clear();
    }
  };
  for (const std::string& line : split_lines(text)) {
    ++line_no;
    if (is_blank(line))
      flush();
    else
      block.emplace_back(line_no, line);
  }
  flush();
  return out;
}

std::string export_span_projection(std::span<const AnnotatedSentence> docs) {
  std::ostringstream os;
  bool first_block = true;
  for (const AnnotatedSentence& doc : docs) {
    validate_doc(doc);
    if (!first_block) os << '\n';
    first_block = false;
    const int n = doc.sentence.size();

    std::vector<std::string> target(n, "-");
    std::vector<std::vector<std::string>> cells(doc.frames.size(),
                                                std::vector<std::string>(n, "*"));
    for (size_t f = 0; f < doc.frames.size(); ++f) {
      const Frame& frame = doc.frames[f];
      const Token& pred = doc.sentence.tokens[frame.predicate];
      target[frame.predicate] =
          !frame.sense.empty() ? frame.sense : (!pred.lemma.empty() ? pred.lemma : pred.form);

      std::vector<char> covered(n, 0);
      auto cover = [&](int s, int e, const std::string& role) {
        for (int t = s; t <= e; ++t) {
          if (covered[t])
            throw ValidationError(doc.sentence.id + ": cannot bracket predicate " +
                                  std::to_string(frame.predicate) +
                                  ": arguments overlap at token " + std::to_string(t));
          covered[t] = 1;
        }
        cells[f][s] = "(" + role + cells[f][s];
        cells[f][e] += ")";
      };
      cover(frame.predicate, frame.predicate, "V");
      for (const UniformArgument& a : frame.args) cover(a.start, a.end, a.role);
    }

    for (int t = 0; t < n; ++t) {
      os << target[t];
      for (size_t f = 0; f < doc.frames.size(); ++f) os << '\t' << cells[f][t];
      os << '\n';
    }
  }
  return os.str();
}

}  // namespace srlu
