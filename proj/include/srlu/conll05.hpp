#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "srlu/types.hpp"

namespace srlu {

// One props block: placeholder tokens (the format carries no word forms,
// only the target-lemma column) plus span-only frames.
struct Conll05Sentence {
  Sentence sentence;
  std::vector<SpanFrame> frames;

  bool operator==(const Conll05Sentence&) const = default;
};

// Star-bracket column format: column 1 holds the target lemma or "-", then
// one column per predicate with cells (ROLE*, *, *), (ROLE*). The (V*) span
// names the predicate token; V cells are not stored as arguments.
std::vector<Conll05Sentence> parse_conll05_props(std::string_view text);

// Span projection: drops the head field and brackets each span. Throws
// ValidationError when arguments of one frame overlap each other or the
// predicate token (the column cannot be bracketed).
std::string export_span_projection(std::span<const AnnotatedSentence> docs);

}  // namespace srlu
