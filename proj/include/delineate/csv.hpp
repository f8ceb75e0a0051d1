#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace delineate::csv {

// Minimal RFC-4180 style CSV. Fields containing commas, quotes, or newlines
// are quoted; quotes are doubled. Parsing skips blank lines and lines whose
// first non-space character is '#'.

std::string escape(std::string_view field);
std::string row(const std::vector<std::string>& fields);

struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};

// Parses CSV text. When expect_header is true the first data row becomes the
// header. Ragged rows are padded with empty fields up to the header width.
Table parse(std::string_view text, bool expect_header);

}  // namespace delineate::csv
