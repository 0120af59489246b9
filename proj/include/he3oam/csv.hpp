#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace he3oam::csv {

/// Splits one line on commas and trims surrounding whitespace. No quoting:
/// none of the files read here carry commas inside fields.
std::vector<std::string> split(std::string_view line);

/// Non-empty lines that are not '#' comments.
std::vector<std::string> data_lines(std::string_view text);

} // namespace he3oam::csv
