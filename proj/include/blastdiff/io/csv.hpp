#pragma once

#include <filesystem>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace blastdiff::io {

struct CsvLocation {
    const std::filesystem::path* path = nullptr;
    std::size_t line = 0;
};

/// Streams a comma-separated file. Lines starting with '#' are comments. The
/// first non-comment line must equal `header` column for column. Fields are
/// not quoted.
void for_each_csv_row(const std::filesystem::path& path, std::span<const std::string> header,
                      const std::function<void(std::span<const std::string_view>, CsvLocation)>& visit);

/// Header columns of a CSV file (first non-comment line).
std::vector<std::string> read_csv_header(const std::filesystem::path& path);

int parse_int(std::string_view field, CsvLocation at);
long long parse_int64(std::string_view field, CsvLocation at);
double parse_double(std::string_view field, CsvLocation at);

/// Shortest round-trip text for a double.
std::string format_double(double v);

}  // namespace blastdiff::io
