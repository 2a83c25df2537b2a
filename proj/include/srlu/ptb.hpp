#pragma once

#include <string_view>
#include <vector>

#include "srlu/types.hpp"

namespace srlu {

struct PtbTree {
  Sentence sentence;
  ConstituentNode root;

  bool operator==(const PtbTree&) const = default;
};

// Parses one bracketed tree. `-NONE-` trace leaves are removed and emptied
// constituents pruned before token indices are assigned; function-tag
// suffixes on phrase labels are stripped into the working label, the source
// label staying in raw_label. Throws ParseError with a byte offset on
// unbalanced input and ValidationError when trace removal empties the tree.
PtbTree parse_ptb(std::string_view text);

// Parses a whole file of consecutive bracketed trees.
std::vector<PtbTree> read_ptb_corpus(std::string_view text);

}  // namespace srlu
