#pragma once

#include <memory>
#include <span>
#include <string>
#include <vector>

#include "blastdiff/dataset/dataset.hpp"
#include "blastdiff/io/records.hpp"

namespace blastdiff::predictors {

enum class Method { FM, RF, NN, PerLevel, Constant };

std::string to_string(Method m);
Method parse_method(const std::string& text);

/// One query: an entity (player or cohort) on a level, with raw-scale features
/// in the dataset's column order.
struct Sample {
    int entity_id = 0;
    int level_id = 0;
    std::span<const double> features;
};

class Model {
public:
    virtual ~Model() = default;
    virtual Method method() const = 0;
    virtual double predict(const Sample& sample) const = 0;
    virtual io::Json to_json() const = 0;

    std::vector<double> predict_all(const dataset::Dataset& data) const;
};

}  // namespace blastdiff::predictors
