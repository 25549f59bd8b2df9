#pragma once

#include <filesystem>
#include <vector>

#include "blastdiff/population/population.hpp"

namespace blastdiff::population {

/// attempts.csv (player_id,level_id,attempts) plus a companion side file
/// (player_id,level_id,moves_used,move_limit,pre_boosters,in_boosters).
void write_attempts(const std::filesystem::path& attempts_csv, const std::filesystem::path& side_csv,
                    const std::vector<SimulatedAttempt>& records);
std::vector<SimulatedAttempt> read_attempts(const std::filesystem::path& attempts_csv,
                                            const std::filesystem::path& side_csv);
std::vector<AttemptRecord> read_attempt_records(const std::filesystem::path& attempts_csv);

void write_players(const std::filesystem::path& path, const std::vector<PlayerProfile>& players);
std::vector<PlayerProfile> read_players(const std::filesystem::path& path);

/// Companion path used for side data: "<stem>_side.csv" next to the attempts file.
std::filesystem::path side_path_for(const std::filesystem::path& attempts_csv);

}  // namespace blastdiff::population
