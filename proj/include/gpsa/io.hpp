#pragma once

#include <string>
#include <vector>

#include "gpsa/field.hpp"

namespace gpsa {

// shared "field p=.. e=.. [modulus=[..]]" header fragment
std::string field_header(const Field& f);
FieldPtr parse_field_header(const std::vector<std::string>& toks);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace gpsa
