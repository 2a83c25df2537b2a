#pragma once

#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "srlu/types.hpp"

namespace srlu {

// Lexical resources deciding whether a hyphen/slash boundary may split.
// `prefixes` defaults to the fixed splitting-prefix list; a lexicon file can
// replace it with a #prefixes section.
struct Lexicon {
  std::unordered_set<std::string> words;
  std::unordered_set<std::string> entities;
  std::unordered_set<std::string> prefixes;

  Lexicon();
  bool qualifies(const std::string& segment) const;
};

// File format: one entry per line, grouped under #words / #entities /
// #prefixes section headers.
Lexicon parse_lexicon(std::string_view text);

// Maps each original token index to the ascending run of new indices it
// became; runs cover the new index range exactly once.
struct TokenMap {
  std::vector<std::vector<int>> segments;

  int first(int old_index) const { return segments[old_index].front(); }
  int last(int old_index) const { return segments[old_index].back(); }
  int new_size() const;
};

// Splits a form at '-' or '/' when both flanking chunks qualify under the
// lexicon; qualifying delimiters become their own segments. Total: returns
// {form} when nothing splits.
std::vector<std::string> split_token(const std::string& form, const Lexicon& lex);

struct RetokenizeResult {
  AnnotatedSentence doc;
  TokenMap map;
};

// Splits every splittable token and remaps frames, dependency heads, and
// constituent spans. Non-first segments of a split token attach to the first
// segment with relation HYPH; a preterminal over a split token becomes one
// preterminal per segment.
RetokenizeResult retokenize_sentence(const AnnotatedSentence& doc, const Lexicon& lex);

}  // namespace srlu
