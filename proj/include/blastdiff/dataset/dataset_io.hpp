#pragma once

#include <filesystem>

#include "blastdiff/dataset/dataset.hpp"
#include "blastdiff/io/records.hpp"

namespace blastdiff::dataset {

/// Writes <dir>/train.csv, <dir>/test.csv and <dir>/manifest.json. `extra`
/// is merged into the manifest (seeds, input hashes).
void write_dataset(const std::filesystem::path& dir, const DatasetPair& data, const SplitSpec& split,
                   const io::Json& extra = io::Json::object());
DatasetPair read_dataset(const std::filesystem::path& dir);
io::Json read_dataset_manifest(const std::filesystem::path& dir);

}  // namespace blastdiff::dataset
