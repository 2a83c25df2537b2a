#include "srlu/types.hpp"

#include <algorithm>
#include <cctype>

namespace srlu {

namespace {

std::string ctx(const std::string& where) {
  return where.empty() ? std::string() : where + ": ";
}

bool has_whitespace(const std::string& s) {
  return std::any_of(s.begin(), s.end(),
                     [](unsigned char c) { return std::isspace(c) != 0; });
}

}  // namespace

int DependencyTree::root() const {
  for (int i = 0; i < size(); ++i)
    if (heads[i] < 0) return i;
  return -1;
}

bool is_continuation_role(const std::string& role) {
  return role.size() > 2 && role.compare(0, 2, "C-") == 0;
}

std::string continuation_of(const std::string& role) {
  // Continuation of a continuation keeps the single C- prefix.
  return is_continuation_role(role) ? role : "C-" + role;
}

void validate_sentence(const Sentence& s) {
  if (s.tokens.empty()) throw ValidationError(ctx(s.id) + "sentence has no tokens");
  for (int i = 0; i < s.size(); ++i) {
    const Token& t = s.tokens[i];
    if (t.form.empty())
      throw ValidationError(ctx(s.id) + "token " + std::to_string(i) + " has empty form");
    if (has_whitespace(t.form))
      throw ValidationError(ctx(s.id) + "token " + std::to_string(i) +
                            " form contains whitespace: '" + t.form + "'");
    if (t.index != i)
      throw ValidationError(ctx(s.id) + "token " + std::to_string(i) +
                            " carries index " + std::to_string(t.index));
  }
}

void validate_tree(const DependencyTree& t, int n, const std::string& where) {
  if (t.size() != n || static_cast<int>(t.deprels.size()) != n)
    throw ValidationError(ctx(where) + "dependency tree arrays do not match sentence length " +
                          std::to_string(n));
  int roots = 0;
  for (int i = 0; i < n; ++i) {
    int h = t.heads[i];
    if (h == -1) {
      ++roots;
    } else if (h < 0 || h >= n) {
      throw ValidationError(ctx(where) + "head of token " + std::to_string(i) +
                            " out of range: " + std::to_string(h));
    } else if (h == i) {
      throw ValidationError(ctx(where) + "token " + std::to_string(i) + " is its own head");
    }
  }
  if (roots != 1)
    throw ValidationError(ctx(where) + "tree has " + std::to_string(roots) +
                          " roots, expected exactly 1");
  // Acyclicity: every token must reach the root in at most n steps.
  for (int i = 0; i < n; ++i) {
    int cur = i;
    int steps = 0;
    while (cur != -1) {
      cur = t.heads[cur];
      if (++steps > n)
        throw ValidationError(ctx(where) + "cycle through token " + std::to_string(i));
    }
  }
}

void validate_ctree(const ConstituentNode& node, int n, const std::string& where) {
  if (node.start < 0 || node.end >= n || node.start > node.end)
    throw ValidationError(ctx(where) + "constituent '" + node.label + "' span [" +
                          std::to_string(node.start) + "," + std::to_string(node.end) +
                          "] out of range");
  if (node.is_preterminal()) {
    if (node.start != node.end)
      throw ValidationError(ctx(where) + "preterminal '" + node.label +
                            "' covers more than one token");
    return;
  }
  int expect = node.start;
  for (const ConstituentNode& c : node.children) {
    if (c.start != expect)
      throw ValidationError(ctx(where) + "children of '" + node.label +
                            "' do not tile its span at token " + std::to_string(expect));
    expect = c.end + 1;
    validate_ctree(c, n, where);
  }
  if (expect != node.end + 1)
    throw ValidationError(ctx(where) + "children of '" + node.label +
                          "' stop short of its span end");
}

namespace {

template <typename Arg>
void check_disjoint_sorted(const std::vector<Arg>& args, int predicate,
                           const std::string& head) {
  for (size_t i = 0; i + 1 < args.size(); ++i) {
    if (args[i + 1].start <= args[i].end)
      throw ValidationError(head + "arguments of predicate " + std::to_string(predicate) +
                            " overlap around token " + std::to_string(args[i + 1].start));
  }
}

}  // namespace

void validate_frame(const Frame& f, int n, const std::string& where) {
  const std::string head = ctx(where);
  if (f.predicate < 0 || f.predicate >= n)
    throw ValidationError(head + "predicate index " + std::to_string(f.predicate) +
                          " out of range");
  std::vector<UniformArgument> sorted = f.args;
  std::sort(sorted.begin(), sorted.end(),
            [](const UniformArgument& a, const UniformArgument& b) { return a.start < b.start; });
  std::vector<std::string> base_roles;
  for (const UniformArgument& a : sorted) {
    if (a.start < 0 || a.end >= n || a.start > a.end)
      throw ValidationError(head + "argument span [" + std::to_string(a.start) + "," +
                            std::to_string(a.end) + "] of predicate " +
                            std::to_string(f.predicate) + " out of range");
    if (a.head < a.start || a.head > a.end)
      throw ValidationError(head + "argument head " + std::to_string(a.head) +
                            " outside span [" + std::to_string(a.start) + "," +
                            std::to_string(a.end) + "] of predicate " +
                            std::to_string(f.predicate));
    if (a.role.empty())
      throw ValidationError(head + "empty role label on predicate " +
                            std::to_string(f.predicate));
    if (!is_continuation_role(a.role)) base_roles.push_back(a.role);
  }
  check_disjoint_sorted(sorted, f.predicate, head);
  std::sort(base_roles.begin(), base_roles.end());
  if (std::adjacent_find(base_roles.begin(), base_roles.end()) != base_roles.end())
    throw ValidationError(head + "predicate " + std::to_string(f.predicate) +
                          " carries a base role more than once");
}

void validate_span_frame(const SpanFrame& f, int n, const std::string& where) {
  const std::string head = ctx(where);
  if (f.predicate < 0 || f.predicate >= n)
    throw ValidationError(head + "predicate index " + std::to_string(f.predicate) +
                          " out of range");
  std::vector<SpanArgument> sorted = f.args;
  std::sort(sorted.begin(), sorted.end(),
            [](const SpanArgument& a, const SpanArgument& b) { return a.start < b.start; });
  for (const SpanArgument& a : sorted) {
    if (a.start < 0 || a.end >= n || a.start > a.end)
      throw ValidationError(head + "argument span [" + std::to_string(a.start) + "," +
                            std::to_string(a.end) + "] of predicate " +
                            std::to_string(f.predicate) + " out of range");
    if (a.role.empty())
      throw ValidationError(head + "empty role label on predicate " +
                            std::to_string(f.predicate));
  }
  check_disjoint_sorted(sorted, f.predicate, head);
}

void validate_doc(const AnnotatedSentence& doc) {
  validate_sentence(doc.sentence);
  const int n = doc.sentence.size();
  if (doc.dtree) validate_tree(*doc.dtree, n, doc.sentence.id);
  if (doc.ctree) validate_ctree(*doc.ctree, n, doc.sentence.id);
  int prev = -1;
  for (const Frame& f : doc.frames) {
    validate_frame(f, n, doc.sentence.id);
    if (f.predicate <= prev)
      throw ValidationError(ctx(doc.sentence.id) +
                            "frames are not in strictly ascending predicate order");
    prev = f.predicate;
  }
}

}  // namespace srlu
