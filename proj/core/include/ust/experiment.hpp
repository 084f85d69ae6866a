#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>

#include "ust/classify.hpp"
#include "ust/dataset.hpp"
#include "ust/dissimilarity.hpp"
#include "ust/inject.hpp"
#include "ust/shapelet.hpp"

namespace ust {

struct ModelSpec {
    Measure measure = Measure::Ued;
    OrderingStrategy ordering;
    ClassifierKind classifier = ClassifierKind::Gnb;
};

struct ExperimentResult {
    std::string dataset;
    std::string model;
    std::string ordering;
    std::string measure;
    std::string classifier;
    double c = 0.0;
    std::uint64_t seed = 0;
    double accuracy = 0.0;
    double train_seconds = 0.0;
    double test_seconds = 0.0;
    std::size_t shapelets_evaluated = 0;

    bool operator==(const ExperimentResult&) const = default;
};

double accuracy(std::span<const std::string> predictions, std::span<const std::string> labels);

// Throws a configuration error for inconsistent combinations: UGNB needs
// uncertain (UED) features, plain-real measures pair with the natural
// order, UED with one of the uncertain orderings.
void validate_model_spec(const ModelSpec& spec);

// ST / UST(...) display name derived from the measure and classifier.
std::string model_name(const ModelSpec& spec);

// Full pipeline on one train/test pair: load, inject (test split uses
// seed + 1), select shapelets, transform, fit, predict, score.
ExperimentResult run_experiment(const std::filesystem::path& train_path,
                                const std::filesystem::path& test_path, const ModelSpec& model,
                                const InjectionConfig& injection, const SelectionConfig& selection);

std::string csv_header();
std::string to_csv_row(const ExperimentResult& result);
ExperimentResult parse_csv_row(const std::string& row);

}  // namespace ust
