#include "srlu/retokenizer.hpp"

#include <algorithm>

#include "srlu/textutil.hpp"

namespace srlu {

namespace {

const char* const kDefaultPrefixes[] = {"co",   "pre",  "post",  "un",  "anti", "ante", "ex",
                                        "extra", "fore", "non",  "over", "pro", "re",   "super",
                                        "sub",  "tri",  "bi",   "uni", "ultra"};

bool is_delimiter(char c) { return c == '-' || c == '/'; }

}  // namespace

Lexicon::Lexicon() {
  for (const char* p : kDefaultPrefixes) prefixes.insert(p);
}

bool Lexicon::qualifies(const std::string& segment) const {
  if (segment.empty()) return false;
  return words.count(segment) > 0 || entities.count(segment) > 0 ||
         prefixes.count(segment) > 0;
}

Lexicon parse_lexicon(std::string_view text) {
  Lexicon lex;
  std::unordered_set<std::string>* section = nullptr;
  bool prefixes_declared = false;
  for (const std::string& raw : split_lines(text)) {
    if (is_blank(raw)) continue;
    std::vector<std::string> fields = split_ws(raw);
    const std::string& entry = fields.front();
    if (entry == "#words") {
      section = &lex.words;
    } else if (entry == "#entities") {
      section = &lex.entities;
    } else if (entry == "#prefixes") {
      if (!prefixes_declared) lex.prefixes.clear();  // section replaces the default list
      prefixes_declared = true;
      section = &lex.prefixes;
    } else if (entry[0] == '#') {
      throw ParseError("lexicon: unknown section header '" + entry + "'");
    } else {
      if (!section) throw ParseError("lexicon: entry '" + entry + "' before any section header");
      for (const std::string& f : fields) section->insert(f);
    }
  }
  return lex;
}

int TokenMap::new_size() const {
  return segments.empty() ? 0 : segments.back().back() + 1;
}

std::vector<std::string> split_token(const std::string& form, const Lexicon& lex) {
  // Chunks are the maximal delimiter-free pieces; delimiter i sits between
  // chunk i and chunk i+1. Splitting is decided per delimiter.
  std::vector<std::string> chunks;
  std::vector<char> delims;
  std::string cur;
  for (char c : form) {
    if (is_delimiter(c)) {
      chunks.push_back(cur);
      cur.clear();
      delims.push_back(c);
    } else {
      cur.push_back(c);
    }
  }
  chunks.push_back(cur);
  if (delims.empty()) return {form};

  std::vector<bool> split_at(delims.size());
  bool any = false;
  for (size_t i = 0; i < delims.size(); ++i) {
    split_at[i] = lex.qualifies(chunks[i]) && lex.qualifies(chunks[i + 1]);
    any = any || split_at[i];
  }
  if (!any) return {form};

  std::vector<std::string> segments;
  std::string pending = chunks[0];
  for (size_t i = 0; i < delims.size(); ++i) {
    if (split_at[i]) {
      segments.push_back(pending);
      segments.push_back(std::string(1, delims[i]));
      pending = chunks[i + 1];
    } else {
      pending += delims[i];
      pending += chunks[i + 1];
    }
  }
  segments.push_back(pending);
  return segments;
}

namespace {

// Rebuilds the constituent tree over new indices; a preterminal whose token
// split fans out into one preterminal per segment.
std::vector<ConstituentNode> remap_ctree(const ConstituentNode& node, const TokenMap& map) {
  if (node.is_preterminal()) {
    std::vector<ConstituentNode> out;
    for (int idx : map.segments[node.start]) {
      ConstituentNode pt;
      pt.label = node.label;
      pt.raw_label = node.raw_label;
      pt.start = pt.end = idx;
      out.push_back(std::move(pt));
    }
    return out;
  }
  ConstituentNode out;
  out.label = node.label;
  out.raw_label = node.raw_label;
  for (const ConstituentNode& c : node.children) {
    std::vector<ConstituentNode> mapped = remap_ctree(c, map);
    for (ConstituentNode& m : mapped) out.children.push_back(std::move(m));
  }
  out.start = out.children.front().start;
  out.end = out.children.back().end;
  return {std::move(out)};
}

}  // namespace

RetokenizeResult retokenize_sentence(const AnnotatedSentence& doc, const Lexicon& lex) {
  validate_doc(doc);
  const int n = doc.sentence.size();

  RetokenizeResult res;
  res.map.segments.resize(n);
  res.doc.sentence.id = doc.sentence.id;

  for (int t = 0; t < n; ++t) {
    const Token& old = doc.sentence.tokens[t];
    std::vector<std::string> segs = split_token(old.form, lex);
    for (size_t k = 0; k < segs.size(); ++k) {
      Token tok;
      tok.index = static_cast<int>(res.doc.sentence.tokens.size());
      tok.form = segs[k];
      if (k == 0) {  // only the first segment keeps the original annotations
        tok.lemma = old.lemma;
        tok.pos = old.pos;
      }
      res.map.segments[t].push_back(tok.index);
      res.doc.sentence.tokens.push_back(std::move(tok));
    }
  }
  const TokenMap& map = res.map;

  if (doc.dtree) {
    DependencyTree tree;
    tree.heads.resize(map.new_size());
    tree.deprels.resize(map.new_size());
    for (int t = 0; t < n; ++t) {
      int h = doc.dtree->heads[t];
      tree.heads[map.first(t)] = h < 0 ? -1 : map.first(h);
      tree.deprels[map.first(t)] = doc.dtree->deprels[t];
      for (size_t k = 1; k < map.segments[t].size(); ++k) {
        tree.heads[map.segments[t][k]] = map.first(t);
        tree.deprels[map.segments[t][k]] = "HYPH";
      }
    }
    res.doc.dtree = std::move(tree);
  }

  if (doc.ctree) {
    std::vector<ConstituentNode> roots = remap_ctree(*doc.ctree, map);
    if (roots.size() == 1) {
      res.doc.ctree = std::move(roots.front());
    } else {  // root preterminal split: keep a tree by wrapping the segments
      ConstituentNode wrap;
      wrap.label = wrap.raw_label = doc.ctree->label;
      wrap.start = roots.front().start;
      wrap.end = roots.back().end;
      wrap.children = std::move(roots);
      res.doc.ctree = std::move(wrap);
    }
  }

  for (const Frame& frame : doc.frames) {
    Frame out;
    out.predicate = map.first(frame.predicate);
    out.sense = frame.sense;
    for (const UniformArgument& a : frame.args)
      out.args.push_back({map.first(a.start), map.last(a.end), map.first(a.head), a.role});
    res.doc.frames.push_back(std::move(out));
  }
  return res;
}

}  // namespace srlu
