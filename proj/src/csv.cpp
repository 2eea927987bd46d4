#include "dgsite/csv.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "dgsite/common.hpp"

namespace dgsite::csv {

namespace {

std::string trim(const std::string& s) {
    const char* ws = " \t\r";
    auto begin = s.find_first_not_of(ws);
    if (begin == std::string::npos) return {};
    auto end = s.find_last_not_of(ws);
    return s.substr(begin, end - begin + 1);
}

std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> fields;
    std::string field;
    std::istringstream stream(line);
    while (std::getline(stream, field, ',')) fields.push_back(trim(field));
    if (!line.empty() && line.back() == ',') fields.emplace_back();
    return fields;
}

} // namespace

Table read_file(const std::string& path, const std::vector<std::string>& expected_header) {
    std::ifstream in(path);
    if (!in) throw ParseError(path + ": cannot open file");

    Table table;
    std::string line;
    std::size_t line_no = 0;
    bool header_seen = false;
    while (std::getline(in, line)) {
        ++line_no;
        if (trim(line).empty()) continue;
        auto fields = split_fields(line);
        if (!header_seen) {
            if (fields != expected_header) {
                std::string want;
                for (const auto& h : expected_header) want += (want.empty() ? "" : ",") + h;
                throw ParseError(path + ":1: expected header '" + want + "'");
            }
            table.header = fields;
            header_seen = true;
            continue;
        }
        if (fields.size() != expected_header.size())
            throw ParseError(path + ":" + std::to_string(line_no) + ": expected " +
                             std::to_string(expected_header.size()) + " fields, got " +
                             std::to_string(fields.size()));
        table.rows.push_back(std::move(fields));
        table.line_numbers.push_back(line_no);
    }
    if (!header_seen) throw ParseError(path + ": empty file");
    return table;
}

double to_double(const std::string& field, const std::string& path, std::size_t line) {
    char* end = nullptr;
    double value = std::strtod(field.c_str(), &end);
    if (field.empty() || end != field.c_str() + field.size())
        throw ParseError(path + ":" + std::to_string(line) + ": not a number: '" + field + "'");
    return value;
}

int to_int(const std::string& field, const std::string& path, std::size_t line) {
    char* end = nullptr;
    long value = std::strtol(field.c_str(), &end, 10);
    if (field.empty() || end != field.c_str() + field.size())
        throw ParseError(path + ":" + std::to_string(line) + ": not an integer: '" + field + "'");
    return static_cast<int>(value);
}

} // namespace dgsite::csv
