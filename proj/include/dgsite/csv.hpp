#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace dgsite::csv {

struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
    std::vector<std::size_t> line_numbers; // 1-based source line of each row
};

// Strict reader for the small comma-separated inputs this project uses:
// one exact header row, no quoting, '.' decimal separator. Blank lines are
// skipped; anything else malformed raises ParseError with the line number.
Table read_file(const std::string& path, const std::vector<std::string>& expected_header);

double to_double(const std::string& field, const std::string& path, std::size_t line);
int to_int(const std::string& field, const std::string& path, std::size_t line);

} // namespace dgsite::csv
