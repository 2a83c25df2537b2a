#pragma once

#include <optional>
#include <string>
#include <vector>

#include "srlu/errors.hpp"

namespace srlu {

struct Token {
  int index = 0;
  std::string form;
  std::string lemma;  // empty means absent
  std::string pos;    // empty means absent

  bool operator==(const Token&) const = default;
};

struct Sentence {
  std::string id;
  std::vector<Token> tokens;

  int size() const { return static_cast<int>(tokens.size()); }
  bool operator==(const Sentence&) const = default;
};

// Constituent node over an inclusive token range. A node without children is
// a preterminal covering exactly one token; the word itself lives in the
// owning Sentence.
struct ConstituentNode {
  std::string label;      // working label, function tags stripped
  std::string raw_label;  // label as found in the source
  int start = 0;
  int end = 0;  // inclusive
  std::vector<ConstituentNode> children;

  bool is_preterminal() const { return children.empty(); }
  int width() const { return end - start + 1; }
  bool operator==(const ConstituentNode&) const = default;
};

// Single-rooted dependency tree; head -1 marks the root token.
struct DependencyTree {
  std::vector<int> heads;
  std::vector<std::string> deprels;

  int size() const { return static_cast<int>(heads.size()); }
  int root() const;
  bool operator==(const DependencyTree&) const = default;
};

struct SpanArgument {
  int start = 0;
  int end = 0;  // inclusive
  std::string role;

  bool operator==(const SpanArgument&) const = default;
};

// The argument part of the quintuple: span plus its syntactic head token.
struct UniformArgument {
  int start = 0;
  int end = 0;  // inclusive
  int head = 0;
  std::string role;

  bool operator==(const UniformArgument&) const = default;
};

struct Frame {
  int predicate = 0;
  std::string sense;  // empty means absent, e.g. "lift.01" when present
  std::vector<UniformArgument> args;

  bool operator==(const Frame&) const = default;
};

// Span-only frame, the shape CoNLL-2005 props provide before head assignment.
struct SpanFrame {
  int predicate = 0;
  std::string sense;
  std::vector<SpanArgument> args;

  bool operator==(const SpanFrame&) const = default;
};

struct AnnotatedSentence {
  Sentence sentence;
  std::optional<ConstituentNode> ctree;
  std::optional<DependencyTree> dtree;
  std::vector<Frame> frames;

  bool operator==(const AnnotatedSentence&) const = default;
};

bool is_continuation_role(const std::string& role);
std::string continuation_of(const std::string& role);

// Validation. Each throws ValidationError with a message naming the offending
// piece; `where` is prepended for context (typically the sentence id).
void validate_sentence(const Sentence& s);
void validate_tree(const DependencyTree& t, int n, const std::string& where = "");
void validate_ctree(const ConstituentNode& node, int n, const std::string& where = "");
void validate_frame(const Frame& f, int n, const std::string& where = "");
void validate_span_frame(const SpanFrame& f, int n, const std::string& where = "");
void validate_doc(const AnnotatedSentence& doc);

}  // namespace srlu
