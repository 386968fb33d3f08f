#pragma once

#include <string>
#include <vector>

namespace gpsa {

std::string trim_spaces(const std::string& s);
// drops everything from '#' on, then trims
std::string strip_comment(const std::string& line);
std::vector<std::string> split_ws(const std::string& s);
// splits on commas that are not inside [...] (element lists contain commas)
std::vector<std::string> split_commas_bracket_aware(const std::string& s);
std::vector<std::string> split_on(const std::string& s, char sep);

bool parse_u64(const std::string& s, uint64_t& out);
bool parse_u32(const std::string& s, uint32_t& out);

}  // namespace gpsa
