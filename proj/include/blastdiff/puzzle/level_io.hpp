#pragma once

#include <filesystem>
#include <vector>

#include "blastdiff/io/records.hpp"
#include "blastdiff/puzzle/level.hpp"

namespace blastdiff::puzzle {

io::Json to_json(const LevelSpec& level);
LevelSpec level_from_json(const io::Json& j);

void write_levels(const std::filesystem::path& path, const std::vector<LevelSpec>& levels);
std::vector<LevelSpec> read_levels(const std::filesystem::path& path);

}  // namespace blastdiff::puzzle
