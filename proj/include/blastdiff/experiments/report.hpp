#pragma once

#include <filesystem>
#include <string>

#include "blastdiff/experiments/experiment.hpp"

namespace blastdiff::experiments {

/// results.csv holds metrics only; runtimes go to timings.csv so that repeated
/// runs produce byte-identical results.
void write_results_csv(const std::filesystem::path& path, const ResultTable& table);
void write_timings_csv(const std::filesystem::path& path, const ResultTable& table);
void write_predictions_csv(const std::filesystem::path& path, const ResultTable& table);
void write_importance_csv(const std::filesystem::path& path, const ResultTable& table);
void write_differences_csv(const std::filesystem::path& path, const std::vector<DifferenceRow>& rows);

/// Reads results.csv (and importance.csv if `importance` exists) back into a
/// table without level predictions or runtimes.
ResultTable read_results(const std::filesystem::path& results, const std::filesystem::path& importance = {});

/// Aligned text: metrics per cell as mean and spread over repetitions, the
/// best FM ablation cell per combination, the CS - PD difference table and RF
/// importance by feature group.
std::string format_summary(const ResultTable& table);

/// Writes results.csv, timings.csv, predictions.csv, importance.csv,
/// differences.csv and summary.txt into `dir`.
void write_report(const std::filesystem::path& dir, const ResultTable& table);

}  // namespace blastdiff::experiments
