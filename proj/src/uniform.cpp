#include "srlu/uniform.hpp"

#include <algorithm>
#include <sstream>

#include "srlu/textutil.hpp"

namespace srlu {

namespace {

bool starts_with(const std::string& line, std::string_view prefix) {
  return line.size() >= prefix.size() && line.compare(0, prefix.size(), prefix) == 0;
}

UniformArgument parse_argument(const std::string& field, const std::string& id) {
  std::vector<std::string> parts = split_char(field, ':');
  if (parts.size() != 4)
    throw ParseError(id + ": argument '" + field + "' is not start:end:head:role");
  UniformArgument a;
  a.start = parse_int(parts[0], id + " argument start");
  a.end = parse_int(parts[1], id + " argument end");
  a.head = parse_int(parts[2], id + " argument head");
  a.role = parts[3];
  return a;
}

AnnotatedSentence parse_block(const std::vector<std::string>& lines, int block_index) {
  size_t i = 0;
  auto need = [&](std::string_view prefix) -> std::string {
    if (i >= lines.size() || !starts_with(lines[i], prefix))
      throw ParseError("uniform: block " + std::to_string(block_index) + " expected '" +
                       std::string(prefix) + "' line");
    return lines[i++].substr(prefix.size());
  };

  AnnotatedSentence doc;
  doc.sentence.id = need("#id ");
  if (doc.sentence.id.empty())
    throw ParseError("uniform: block " + std::to_string(block_index) + " has empty id");
  const std::string& id = doc.sentence.id;

  std::vector<std::string> forms = split_ws(need("#text "));
  for (size_t t = 0; t < forms.size(); ++t) {
    Token tok;
    tok.index = static_cast<int>(t);
    tok.form = forms[t];
    doc.sentence.tokens.push_back(std::move(tok));
  }
  const int n = doc.sentence.size();

  if (i < lines.size() && starts_with(lines[i], "#dep ")) {
    DependencyTree tree;
    for (const std::string& f : split_ws(lines[i].substr(5)))
      tree.heads.push_back(parse_int(f, id + " #dep entry"));
    ++i;
    if (i >= lines.size() || !starts_with(lines[i], "#deprel "))
      throw ParseError(id + ": #dep line without a following #deprel line");
    tree.deprels = split_ws(lines[i].substr(8));
    ++i;
    validate_tree(tree, n, id);
    doc.dtree = std::move(tree);
  }

  for (; i < lines.size(); ++i) {
    std::vector<std::string> fields = split_char(lines[i], '\t');
    if (fields.size() != 2 && fields.size() != 3)
      throw ParseError(id + ": frame line '" + lines[i] + "' is not pred\\tsense\\targs");
    Frame frame;
    frame.predicate = parse_int(fields[0], id + " predicate index");
    if (fields[1] != "_") frame.sense = fields[1];
    if (fields.size() == 3) {
      size_t arg_index = 0;
      for (const std::string& field : split_ws(fields[2])) {
        UniformArgument a = parse_argument(field, id);
        if (a.head < a.start || a.head > a.end)
          throw ValidationError(id + ": frame " + std::to_string(doc.frames.size()) +
                                " argument " + std::to_string(arg_index) + " head " +
                                std::to_string(a.head) + " outside span [" +
                                std::to_string(a.start) + "," + std::to_string(a.end) + "]");
        frame.args.push_back(std::move(a));
        ++arg_index;
      }
    }
    std::sort(frame.args.begin(), frame.args.end(),
              [](const UniformArgument& a, const UniformArgument& b) { return a.start < b.start; });
    doc.frames.push_back(std::move(frame));
  }
  std::stable_sort(doc.frames.begin(), doc.frames.end(),
                   [](const Frame& a, const Frame& b) { return a.predicate < b.predicate; });
  validate_doc(doc);
  return doc;
}

void check_writable(const AnnotatedSentence& doc) {
  validate_doc(doc);
  const std::string& id = doc.sentence.id;
  if (id.empty() || id.find_first_of(" \t\n") != std::string::npos)
    throw ValidationError("cannot serialize sentence id '" + id + "'");
  if (doc.dtree)
    for (const std::string& d : doc.dtree->deprels)
      if (d.find_first_of(" \t\n") != std::string::npos)
        throw ValidationError(id + ": deprel '" + d + "' contains whitespace");
  for (const Frame& f : doc.frames) {
    if (f.sense.find_first_of(" \t\n") != std::string::npos)
      throw ValidationError(id + ": sense '" + f.sense + "' contains whitespace");
    for (const UniformArgument& a : f.args)
      if (a.role.find_first_of(": \t\n") != std::string::npos)
        throw ValidationError(id + ": role '" + a.role + "' contains ':' or whitespace");
  }
}

}  // namespace

std::vector<AnnotatedSentence> read_uniform(std::string_view text) {
  std::vector<AnnotatedSentence> out;
  std::vector<std::string> block;
  auto flush = [&] {
    if (!block.empty()) {
      out.push_back(parse_block(block, static_cast<int>(out.size())));
      block.clear();
    }
  };
  for (const std::string& line : split_lines(text)) {
    if (is_blank(line))
      flush();
    else
      block.push_back(line);
  }
  flush();
  return out;
}

std::string write_uniform(std::span<const AnnotatedSentence> docs) {
  std::ostringstream os;
  bool first_block = true;
  for (const AnnotatedSentence& doc : docs) {
    check_writable(doc);
    if (!first_block) os << '\n';
    first_block = false;

    os << "#id " << doc.sentence.id << '\n';
    os << "#text";
    for (const Token& t : doc.sentence.tokens) os << ' ' << t.form;
    os << '\n';
    if (doc.dtree) {
      os << "#dep";
      for (int h : doc.dtree->heads) os << ' ' << h;
      os << '\n';
      os << "#deprel";
      for (const std::string& d : doc.dtree->deprels) os << ' ' << (d.empty() ? "_" : d);
      os << '\n';
    }
    for (const Frame& frame : doc.frames) {
      std::vector<UniformArgument> args = frame.args;
      std::sort(args.begin(), args.end(),
                [](const UniformArgument& a, const UniformArgument& b) { return a.start < b.start; });
      os << frame.predicate << '\t' << (frame.sense.empty() ? "_" : frame.sense);
      if (!args.empty()) {
        os << '\t';
        for (size_t i = 0; i < args.size(); ++i) {
          if (i) os << ' ';
          os << args[i].start << ':' << args[i].end << ':' << args[i].head << ':' << args[i].role;
        }
      }
      os << '\n';
    }
  }
  return os.str();
}

}  // namespace srlu
