#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "srlu/types.hpp"

namespace srlu {

// Tab-separated columns ID FORM LEMMA PLEMMA POS PPOS FEAT PFEAT HEAD PHEAD
// DEPREL PDEPREL FILLPRED PRED APRED1..k, sentences separated by blank lines.
// HEAD is 1-based in the text with 0 marking the root; the data model uses
// 0-based heads with -1 for the root. APREDi fills the i-th predicate's
// arguments as single-token spans (start = end = head). Sentence ids are
// assigned as s0, s1, ... in file order.
std::vector<AnnotatedSentence> parse_conll09(std::string_view text);

// Dependency projection: keeps (predicate, head, role) by writing each
// argument's role into the APRED column at the argument's head row.
std::string export_dep_projection(std::span<const AnnotatedSentence> docs);

}  // namespace srlu
