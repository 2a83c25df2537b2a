#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace srlu {

std::vector<std::string> split_lines(std::string_view text);
std::vector<std::string> split_ws(std::string_view line);
std::vector<std::string> split_char(std::string_view line, char sep);
bool is_blank(std::string_view line);

// Strict integer parsing; throws ParseError naming `what` on failure.
int parse_int(std::string_view s, const std::string& what);
double parse_double(std::string_view s, const std::string& what);

// Fixed-width decimal formatting used by every report writer.
std::string format_fixed(double v, int places);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view content);

}  // namespace srlu
