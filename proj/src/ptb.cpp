#include "srlu/ptb.hpp"

#include <cctype>
#include <memory>

namespace srlu {

namespace {

struct RawNode {
  std::string label;
  std::string word;  // non-empty only for preterminals
  std::vector<RawNode> children;
  bool is_leaf() const { return children.empty(); }
};

struct Cursor {
  std::string_view text;
  size_t pos = 0;

  void skip_space() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  bool eof() {
    skip_space();
    return pos >= text.size();
  }
  char peek() const { return text[pos]; }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("ptb: " + what + " at byte " + std::to_string(pos));
  }
  std::string atom() {
    size_t begin = pos;
    while (pos < text.size() && text[pos] != '(' && text[pos] != ')' &&
           !std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
    if (pos == begin) fail("expected atom");
    return std::string(text.substr(begin, pos - begin));
  }
};

RawNode parse_node(Cursor& cur) {
  cur.skip_space();
  if (cur.pos >= cur.text.size() || cur.peek() != '(') cur.fail("expected '('");
  ++cur.pos;
  cur.skip_space();
  RawNode node;
  if (cur.pos < cur.text.size() && cur.peek() != '(' && cur.peek() != ')')
    node.label = cur.atom();
  while (true) {
    cur.skip_space();
    if (cur.pos >= cur.text.size()) cur.fail("unbalanced brackets, missing ')'");
    char c = cur.peek();
    if (c == ')') {
      ++cur.pos;
      break;
    }
    if (c == '(') {
      node.children.push_back(parse_node(cur));
    } else {
      std::string word = cur.atom();
      if (!node.word.empty() || !node.children.empty())
        cur.fail("word leaf outside a preterminal");
      node.word = word;
    }
  }
  if (node.word.empty() && node.children.empty())
    cur.fail("empty constituent '" + node.label + "'");
  return node;
}

// Removes -NONE- leaves and prunes constituents they empty out.
bool prune_traces(RawNode& node) {
  if (node.is_leaf()) return node.label != "-NONE-";
  std::vector<RawNode> kept;
  for (RawNode& c : node.children)
    if (prune_traces(c)) kept.push_back(std::move(c));
  node.children = std::move(kept);
  return !node.children.empty();
}

std::string strip_function_tags(const std::string& label) {
  // NP-SBJ-1 -> NP, S=2 -> S. Labels starting with '-' stay untouched.
  size_t cut = label.find_first_of("-=", 1);
  if (cut == std::string::npos || label.empty() || label[0] == '-') return label;
  return label.substr(0, cut);
}

ConstituentNode build(const RawNode& node, std::vector<Token>& tokens) {
  ConstituentNode out;
  out.raw_label = node.label;
  if (node.is_leaf()) {
    out.label = node.label;  // POS labels keep their tags
    out.start = out.end = static_cast<int>(tokens.size());
    Token t;
    t.index = out.start;
    t.form = node.word;
    t.pos = node.label;
    tokens.push_back(std::move(t));
    return out;
  }
  out.label = strip_function_tags(node.label);
  out.children.reserve(node.children.size());
  for (const RawNode& c : node.children) out.children.push_back(build(c, tokens));
  out.start = out.children.front().start;
  out.end = out.children.back().end;
  return out;
}

PtbTree finish(RawNode raw) {
  // PTB files wrap each tree in a label-less pair of brackets; unwrap it.
  while (raw.label.empty() && raw.children.size() == 1)
    raw = std::move(raw.children.front());
  if (!prune_traces(raw))
    throw ValidationError("ptb: tree is empty after trace removal");
  PtbTree tree;
  tree.root = build(raw, tree.sentence.tokens);
  return tree;
}

}  // namespace

PtbTree parse_ptb(std::string_view text) {
  Cursor cur{text};
  if (cur.eof()) throw ParseError("ptb: empty input");
  RawNode raw = parse_node(cur);
  if (!cur.eof()) cur.fail("trailing content after tree");
  return finish(std::move(raw));
}

std::vector<PtbTree> read_ptb_corpus(std::string_view text) {
  std::vector<PtbTree> trees;
  Cursor cur{text};
  while (!cur.eof()) trees.push_back(finish(parse_node(cur)));
  return trees;
}

}  // namespace srlu
