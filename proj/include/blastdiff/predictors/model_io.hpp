#pragma once

#include <filesystem>
#include <memory>

#include "blastdiff/predictors/model.hpp"

namespace blastdiff::predictors {

void save_model(const std::filesystem::path& path, const Model& model);
std::unique_ptr<Model> load_model(const std::filesystem::path& path);
std::unique_ptr<Model> model_from_json(const io::Json& j);

}  // namespace blastdiff::predictors
