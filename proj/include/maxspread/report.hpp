#pragma once

#include <string>

#include "json.hpp"

namespace maxspread {

using Json = nlohmann::ordered_json;

/// Serializes with insertion-ordered keys and every floating-point value at 17
/// significant digits, so parse -> dump reproduces the input byte for byte.
/// Arrays of scalars stay on one line. Non-finite doubles become null.
std::string dump_json(const Json& j, int indent = 2);

/// Shortest "%.17g" rendering, with -0 printed as 0.
std::string format_double(double x);

/// Writes to path.tmp and renames over path.
void write_file_atomic(const std::string& path, const std::string& contents);

}  // namespace maxspread
