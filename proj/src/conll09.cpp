#include "srlu/conll09.hpp"

#include <sstream>

#include "srlu/textutil.hpp"

namespace srlu {

namespace {

constexpr int kFixedColumns = 14;

std::string undash(const std::string& s) { return s == "_" ? std::string() : s; }
std::string ordash(const std::string& s) { return s.empty() ? std::string("_") : s; }

AnnotatedSentence parse_block(const std::vector<std::pair<int, std::string>>& rows,
                              int block_index) {
  const int n = static_cast<int>(rows.size());
  std::vector<std::vector<std::string>> fields;
  fields.reserve(rows.size());
  for (const auto& [line, text] : rows) {
    fields.push_back(split_char(text, '\t'));
    if (static_cast<int>(fields.back().size()) < kFixedColumns ||
        fields.back().size() != fields.front().size())
      throw ParseError("conll09: ragged row at line " + std::to_string(line) + ", expected " +
                       std::to_string(std::max<size_t>(fields.front().size(), kFixedColumns)) +
                       " columns");
  }

  AnnotatedSentence doc;
  doc.sentence.id = "s" + std::to_string(block_index);
  DependencyTree tree;
  bool any_head = false, all_head = true;

  for (int t = 0; t < n; ++t) {
    const auto& f = fields[t];
    const int line = rows[t].first;
    if (parse_int(f[0], "ID at line " + std::to_string(line)) != t + 1)
      throw ParseError("conll09: ID out of sequence at line " + std::to_string(line));
    Token tok;
    tok.index = t;
    tok.form = f[1];
    tok.lemma = undash(f[2]);
    tok.pos = undash(f[4]);
    doc.sentence.tokens.push_back(std::move(tok));

    if (f[8] == "_") {
      all_head = false;
      tree.heads.push_back(-1);
    } else {
      any_head = true;
      int h = parse_int(f[8], "HEAD at line " + std::to_string(line));
      if (h < 0 || h > n)
        throw ValidationError("conll09: HEAD " + std::to_string(h) + " out of range at line " +
                              std::to_string(line));
      tree.heads.push_back(h - 1);
    }
    tree.deprels.push_back(f[10]);
  }
  if (any_head && !all_head)
    throw ParseError("conll09: mixed HEAD and '_' cells in block " + std::to_string(block_index));
  if (any_head) {
    validate_tree(tree, n, doc.sentence.id);
    doc.dtree = std::move(tree);
  }

  std::vector<int> predicates;
  for (int t = 0; t < n; ++t)
    if (fields[t][12] == "Y") predicates.push_back(t);
  const int napred = static_cast<int>(fields.front().size()) - kFixedColumns;
  if (napred != static_cast<int>(predicates.size()))
    throw ParseError("conll09: block " + std::to_string(block_index) + " has " +
                     std::to_string(predicates.size()) + " predicates but " +
                     std::to_string(napred) + " APRED columns");

  for (size_t i = 0; i < predicates.size(); ++i) {
    Frame frame;
    frame.predicate = predicates[i];
    frame.sense = undash(fields[predicates[i]][13]);
    for (int t = 0; t < n; ++t) {
      const std::string& cell = fields[t][kFixedColumns + static_cast<int>(i)];
      if (cell != "_") frame.args.push_back({t, t, t, cell});
    }
    doc.frames.push_back(std::move(frame));
  }
  validate_doc(doc);
  return doc;
}

}  // namespace

std::vector<AnnotatedSentence> parse_conll09(std::string_view text) {
  std::vector<AnnotatedSentence> out;
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

std::string export_dep_projection(std::span<const AnnotatedSentence> docs) {
  std::ostringstream os;
  bool first_block = true;
  for (const AnnotatedSentence& doc : docs) {
    validate_doc(doc);
    if (!first_block) os << '\n';
    first_block = false;
    const int n = doc.sentence.size();

    std::vector<std::vector<std::string>> apred(doc.frames.size(),
                                                std::vector<std::string>(n, "_"));
    std::vector<std::string> pred(n, "_");
    std::vector<char> fill(n, 0);
    for (size_t f = 0; f < doc.frames.size(); ++f) {
      const Frame& frame = doc.frames[f];
      fill[frame.predicate] = 1;
      pred[frame.predicate] = ordash(frame.sense);
      for (const UniformArgument& a : frame.args) apred[f][a.head] = a.role;
    }

    for (int t = 0; t < n; ++t) {
      const Token& tok = doc.sentence.tokens[t];
      os << t + 1 << '\t' << tok.form << '\t' << ordash(tok.lemma) << "\t_\t"
         << ordash(tok.pos) << "\t_\t_\t_\t";
      if (doc.dtree)
        os << doc.dtree->heads[t] + 1 << "\t_\t" << ordash(doc.dtree->deprels[t]) << "\t_\t";
      else
        os << "_\t_\t_\t_\t";
      os << (fill[t] ? "Y" : "_") << '\t' << pred[t];
      for (size_t f = 0; f < doc.frames.size(); ++f) os << '\t' << apred[f][t];
      os << '\n';
    }
  }
  return os.str();
}

}  // namespace srlu
