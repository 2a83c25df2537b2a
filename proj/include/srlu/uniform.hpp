#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "srlu/types.hpp"

namespace srlu {

// Canonical uniform format, one sentence per blank-line-separated block:
//   #id <sentence-id>
//   #text <token0> <token1> ...
//   #dep <head0> <head1> ...        (optional; 0-based, -1 = root)
//   #deprel <l0> <l1> ...           (required when #dep is present)
//   <pred>\t<sense|_>\t<s>:<e>:<h>:<role> ...   (one line per frame)
// Indices are 0-based, spans inclusive, arguments sorted by start, frames
// sorted by predicate. write(read(x)) is byte-identical for canonical x.
std::vector<AnnotatedSentence> read_uniform(std::string_view text);
std::string write_uniform(std::span<const AnnotatedSentence> docs);

}  // namespace srlu
