#pragma once

// Line-delimited JSON record files: one JSON object per line, each carrying
// a "record" type and "format_version" tag.

#include <filesystem>
#include <functional>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace blastdiff::io {

using Json = nlohmann::json;

inline constexpr int kFormatVersion = 1;

/// Writes records atomically (temp file + rename).
void write_jsonl(const std::filesystem::path& path, const std::vector<Json>& records);
/// Calls `visit` for each record; checks the record type and version.
void read_jsonl(const std::filesystem::path& path, std::string_view record_type,
                const std::function<void(const Json&)>& visit);

/// Writes `text` to `path` atomically.
void write_text(const std::filesystem::path& path, std::string_view text);
std::string read_text(const std::filesystem::path& path);

/// Lowercase hex SHA-256 of a file's bytes or of a string.
std::string sha256_file(const std::filesystem::path& path);
std::string sha256_hex(std::string_view data);

}  // namespace blastdiff::io
